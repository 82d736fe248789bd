// Text formats: molecule definitions (MDF), reaction equations, response
// curves, and the JSON equivalent of MDF documents.
//
// MDF is line oriented; `#` starts a comment and whitespace between tokens
// is free:
//
//     molecule MgO
//     atoms Mg1:Mg O1:O
//     bonds Mg1-O1 ion 2          # ionic: left label donates
//
//     molecule Lactase
//     composition C:21340 O:6348 N:5552 S:60
//
//     reaction 2 Mg + O2 -> 2 MgO
//
// Reaction equations use `side -> side`, terms `[COEFF] NAME` joined by `+`,
// and `?` for the unknown species.

#ifndef CHEMGENUS_FORMATS_HPP_
#define CHEMGENUS_FORMATS_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chemgenus/molecule.hpp"
#include "chemgenus/response.hpp"

namespace chemgenus {

// Upper bound accepted for a stoichiometric coefficient.
inline constexpr Count kMaxCoefficient = 1'000'000;

struct DocumentSet {
  std::vector<Molecule> molecules;
  std::vector<Reaction> reactions;
};

// Exactly one molecule block. Throws SyntaxError, Error(DuplicateAtomLabel),
// Error(UnknownElement).
Molecule parse_molecule_block(std::string_view text,
                              const ElementTable& table = ElementTable::builtin());

// Throws SyntaxError or Error(MultipleUnknowns).
Reaction parse_reaction_line(std::string_view text);

// One side of an equation, e.g. "2 Mg + O2".
Side parse_side_expr(std::string_view text);

// CSV rows `t,value`; an optional header line. Throws SyntaxError or
// Error(NonMonotoneTime).
ResponseCurve parse_curve(std::string_view text);

// Any number of molecule blocks and `reaction` lines. Molecule names must
// be unique (Error(DuplicateMolecule)).
DocumentSet parse_document(std::string_view text,
                           const ElementTable& table = ElementTable::builtin());

// {"molecules": [...], "reactions": ["2 Mg + O2 -> 2 MgO", ...]}
DocumentSet parse_document_json(std::string_view text,
                                const ElementTable& table = ElementTable::builtin());

// Dispatches on the extension: `.json` is JSON, anything else MDF.
DocumentSet load_document(const std::filesystem::path& path,
                          const ElementTable& table = ElementTable::builtin());
ResponseCurve load_curve(const std::filesystem::path& path);

// Canonical renderers; parse(render(x)) == x for valid molecules whose
// ionic bonds list the donor first.
std::string render_molecule(const Molecule& m);
std::string render_reaction(const Reaction& r);
std::string render_side(const Side& s);
std::string render_document(const DocumentSet& d);
std::string render_document_json(const DocumentSet& d);

// Formula with symbols in the given order, e.g. "H2O"; counts of 1 omitted.
std::string render_formula(const std::vector<ElementCount>& counts);

} // namespace chemgenus

#endif
