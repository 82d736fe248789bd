// Surface-and-bundle encoding of molecules and reaction sides.
//
// A molecule with atoms of atomic numbers a_1..a_m is sent to a compact
// surface of genus a_1 + ... + a_m carrying the bundle
//
//     L^k (+) E_{r_1} (+) ... (+) E_{r_m}
//
// where L is the canonical bundle, k counts electrons taking part in bonds
// and r_i counts the electrons of atom i that take part in none. A reaction
// side is the product of its molecules' surfaces with the direct sum of the
// pulled-back bundles.

#ifndef CHEMGENUS_ENCODER_HPP_
#define CHEMGENUS_ENCODER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "chemgenus/molecule.hpp"

namespace chemgenus {

// Electrons a bond puts into the canonical part: 2 * order for covalent
// bonds, the transferred count for ionic ones.
Count bond_electrons(const Bond& b);

// Bonding electrons supplied by one atom: the order of each incident
// covalent bond plus the transfer of each ionic bond it donates in.
Count atom_bond_contribution(const std::string& label, const Structure& s);

struct TrivialRank {
  std::string atom;
  Element element;
  Count rank = 0;
  friend bool operator==(const TrivialRank&, const TrivialRank&) = default;
};

class MoleculeEncoding {
public:
  static MoleculeEncoding structural(Count genus, Count canonical, std::vector<TrivialRank> ranks);
  static MoleculeEncoding composition_only(Count genus);

  Count genus() const { return genus_; }
  bool is_composition_only() const { return !canonical_; }

  // Bundle data; throw Error(BondsUnknown) for composition-only encodings.
  Count canonical_multiplicity() const;
  // Per atom, zero ranks included, in atom order.
  const std::vector<TrivialRank>& trivial_ranks() const;
  Count trivial_total() const;

  friend bool operator==(const MoleculeEncoding&, const MoleculeEncoding&) = default;

private:
  Count genus_ = 0;
  std::optional<Count> canonical_;
  std::vector<TrivialRank> ranks_;
};

MoleculeEncoding encode_molecule(const ValidatedMolecule& m);

enum class SummandKind { Canonical, Trivial };

struct Summand {
  std::size_t factor = 1;  // 1-based position of the factor on the side
  SummandKind kind = SummandKind::Canonical;
  Count value = 0;         // multiplicity for Canonical, rank for Trivial
  friend bool operator==(const Summand&, const Summand&) = default;
};

struct SideFactor {
  std::string name;
  MoleculeEncoding encoding;
};

struct SideEncoding {
  std::vector<SideFactor> factors;
  Count total_genus = 0;
  std::vector<Summand> summands;
};

// Requires structural molecules (Error(BondsUnknown) otherwise).
SideEncoding encode_side(const Side& side, const Registry& registry);

// `L^8 (+) E_2 over Sigma(g=10)`; composition-only gives `Sigma(g=...)`.
std::string render_encoding(const MoleculeEncoding& enc);

// `(pi_1^* L_CH4)^8 (+) (pi_2^* L_Cl2)^2 (+) E_2 (+) E_32 over
// Sigma_CH4(g=10) x Sigma_Cl2(g=34)` (one line).
std::string render_encoding(const SideEncoding& enc);

} // namespace chemgenus

#endif
