#include "chemgenus/encoder.hpp"

#include <sstream>

#include "chemgenus/error.hpp"

namespace chemgenus {

Count bond_electrons(const Bond& b) {
  if (auto* cov = std::get_if<Covalent>(&b.kind))
    return 2 * Count{cov->order};
  return std::get<Ionic>(b.kind).transferred;
}

Count atom_bond_contribution(const std::string& label, const Structure& s) {
  Count total = 0;
  for (const Bond& b : s.bonds) {
    if (b.a != label && b.b != label)
      continue;
    if (auto* cov = std::get_if<Covalent>(&b.kind))
      total += cov->order;
    else if (const Ionic& ion = std::get<Ionic>(b.kind); ion.donor == label)
      total += ion.transferred;
  }
  return total;
}

MoleculeEncoding MoleculeEncoding::structural(Count genus, Count canonical,
                                              std::vector<TrivialRank> ranks) {
  MoleculeEncoding e;
  e.genus_ = genus;
  e.canonical_ = canonical;
  e.ranks_ = std::move(ranks);
  return e;
}

MoleculeEncoding MoleculeEncoding::composition_only(Count genus) {
  MoleculeEncoding e;
  e.genus_ = genus;
  return e;
}

Count MoleculeEncoding::canonical_multiplicity() const {
  if (!canonical_)
    fail(ErrorKind::BondsUnknown, "composition-only molecule has no bond data");
  return *canonical_;
}

const std::vector<TrivialRank>& MoleculeEncoding::trivial_ranks() const {
  if (!canonical_)
    fail(ErrorKind::BondsUnknown, "composition-only molecule has no bond data");
  return ranks_;
}

Count MoleculeEncoding::trivial_total() const {
  Count total = 0;
  for (const TrivialRank& r : trivial_ranks())
    total += r.rank;
  return total;
}

MoleculeEncoding encode_molecule(const ValidatedMolecule& vm) {
  const Molecule& m = vm.molecule();
  Count genus = total_atomic_number(m);
  if (!m.is_structural())
    return MoleculeEncoding::composition_only(genus);

  const Structure& s = m.structure();
  Count canonical = 0;
  for (const Bond& b : s.bonds)
    canonical += bond_electrons(b);
  std::vector<TrivialRank> ranks;
  ranks.reserve(s.atoms.size());
  for (const Atom& a : s.atoms)
    ranks.push_back({a.label, a.element,
                     electron_count(a.element) - atom_bond_contribution(a.label, s)});
  return MoleculeEncoding::structural(genus, canonical, std::move(ranks));
}

SideEncoding encode_side(const Side& side, const Registry& registry) {
  SideEncoding out;
  for (const ValidatedMolecule& m : expand_side(side, registry)) {
    if (!m->is_structural())
      fail(ErrorKind::BondsUnknown,
           "molecule '" + m.name() + "' is composition-only; side bundles need bond data");
    out.factors.push_back({m.name(), encode_molecule(m)});
  }
  for (std::size_t j = 0; j < out.factors.size(); ++j) {
    const MoleculeEncoding& enc = out.factors[j].encoding;
    out.total_genus += enc.genus();
    if (enc.canonical_multiplicity() > 0)
      out.summands.push_back({j + 1, SummandKind::Canonical, enc.canonical_multiplicity()});
    if (Count t = enc.trivial_total(); t > 0)
      out.summands.push_back({j + 1, SummandKind::Trivial, t});
  }
  return out;
}

std::string render_encoding(const MoleculeEncoding& enc) {
  std::ostringstream out;
  if (enc.is_composition_only()) {
    out << "Sigma(g=" << enc.genus() << ")";
    return out.str();
  }
  std::vector<std::string> parts;
  if (enc.canonical_multiplicity() > 0)
    parts.push_back("L^" + std::to_string(enc.canonical_multiplicity()));
  if (Count t = enc.trivial_total(); t > 0)
    parts.push_back("E_" + std::to_string(t));
  if (parts.empty())
    parts.push_back("0");
  for (std::size_t i = 0; i < parts.size(); ++i)
    out << (i ? " (+) " : "") << parts[i];
  out << " over Sigma(g=" << enc.genus() << ")";
  return out.str();
}

std::string render_encoding(const SideEncoding& enc) {
  std::vector<std::string> parts;
  // canonical summands first, then trivial ones, each in factor order
  for (const Summand& s : enc.summands)
    if (s.kind == SummandKind::Canonical)
      parts.push_back("(pi_" + std::to_string(s.factor) + "^* L_" +
                      enc.factors[s.factor - 1].name + ")^" + std::to_string(s.value));
  for (const Summand& s : enc.summands)
    if (s.kind == SummandKind::Trivial)
      parts.push_back("E_" + std::to_string(s.value));
  if (parts.empty())
    parts.push_back("0");

  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out << (i ? " (+) " : "") << parts[i];
  out << " over ";
  for (std::size_t j = 0; j < enc.factors.size(); ++j)
    out << (j ? " x " : "") << "Sigma_" << enc.factors[j].name
        << "(g=" << enc.factors[j].encoding.genus() << ")";
  return out.str();
}

} // namespace chemgenus
