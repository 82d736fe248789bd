// Molecules, reactions and their validation.

#ifndef CHEMGENUS_MOLECULE_HPP_
#define CHEMGENUS_MOLECULE_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chemgenus/elements.hpp"

namespace chemgenus {

struct Atom {
  std::string label;
  Element element;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Covalent {
  int order = 1;  // 1..3
  friend bool operator==(const Covalent&, const Covalent&) = default;
};

struct Ionic {
  int transferred = 1;
  std::string donor;  // one of the bond's endpoint labels
  friend bool operator==(const Ionic&, const Ionic&) = default;
};

struct Bond {
  std::string a;
  std::string b;
  std::variant<Covalent, Ionic> kind;

  bool is_covalent() const { return std::holds_alternative<Covalent>(kind); }
  friend bool operator==(const Bond&, const Bond&) = default;
};

struct Structure {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;

  const Atom* find_atom(const std::string& label) const;
  friend bool operator==(const Structure&, const Structure&) = default;
};

struct ElementCount {
  Element element;
  Count count = 0;
  friend bool operator==(const ElementCount&, const ElementCount&) = default;
};

// Element counts, kept sorted by symbol with one entry per element.
struct Composition {
  std::vector<ElementCount> counts;
  friend bool operator==(const Composition&, const Composition&) = default;
};

struct Molecule {
  std::string name;
  std::variant<Structure, Composition> body;

  bool is_structural() const { return std::holds_alternative<Structure>(body); }
  const Structure& structure() const { return std::get<Structure>(body); }
  const Composition& composition() const { return std::get<Composition>(body); }

  friend bool operator==(const Molecule&, const Molecule&) = default;
};

// Element counts of any molecule; for structural ones the atoms are tallied.
std::map<std::string, ElementCount> element_counts(const Molecule& m);

// Sum of atomic numbers over all atoms.
Count total_atomic_number(const Molecule& m);

enum class ViolationKind {
  Empty,
  DuplicateLabel,
  UnknownLabel,
  SelfBond,
  ParallelBond,
  BadOrder,
  BadTransfer,
  BadDonor,
  Disconnected,
  ElectronBudget,
  Radical,
  BadCount,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string subject;  // offending atom label, bond, or element symbol
  std::string message;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate_molecule(const Molecule& m);

// A molecule that passed validation. Only `validated` creates one, so the
// encoder never sees a molecule whose invariants were not checked.
class ValidatedMolecule {
public:
  const Molecule& molecule() const { return *mol_; }
  const Molecule* operator->() const { return mol_.get(); }
  const std::string& name() const { return mol_->name; }

  friend ValidatedMolecule validated(Molecule m);
private:
  explicit ValidatedMolecule(std::shared_ptr<const Molecule> m) : mol_(std::move(m)) {}
  std::shared_ptr<const Molecule> mol_;
};

// Throws Error(InvalidMolecule) listing every violation.
ValidatedMolecule validated(Molecule m);

std::string describe(const ValidationReport& report);

// A reaction term; an empty name marks the unknown slot.
struct Term {
  Count coefficient = 1;
  std::optional<std::string> name;

  bool is_unknown() const { return !name.has_value(); }
  friend bool operator==(const Term&, const Term&) = default;
};

using Side = std::vector<Term>;

struct Reaction {
  Side reactants;
  Side products;

  std::size_t unknown_count() const;
  friend bool operator==(const Reaction&, const Reaction&) = default;
};

// Molecules by name. Invalid molecules are kept with their report and
// rejected when resolved.
class Registry {
public:
  Registry() = default;
  explicit Registry(const std::vector<Molecule>& molecules);

  // Throws Error(DuplicateMolecule).
  void add(Molecule m);

  bool contains(const std::string& name) const;
  // Throws Error(UnresolvedName) or Error(InvalidMolecule).
  const ValidatedMolecule& resolve(const std::string& name) const;
  // Report for `name`; empty for valid molecules.
  const ValidationReport& report(const std::string& name) const;

  std::vector<std::string> names() const;

private:
  struct Entry {
    std::optional<ValidatedMolecule> valid;
    ValidationReport report;
  };
  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

// Each (c, M) term becomes c consecutive copies of M.
// Throws Error(UnknownPresent), Error(UnresolvedName), Error(InvalidMolecule).
std::vector<ValidatedMolecule> expand_side(const Side& side, const Registry& registry);

} // namespace chemgenus

#endif
