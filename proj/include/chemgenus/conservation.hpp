// Atom, genus and electron bookkeeping across a reaction.

#ifndef CHEMGENUS_CONSERVATION_HPP_
#define CHEMGENUS_CONSERVATION_HPP_

#include <map>
#include <string>

#include "chemgenus/molecule.hpp"

namespace chemgenus {

struct ElementBalance {
  Element element;
  Count reactants = 0;
  Count products = 0;
  Count delta = 0;  // products - reactants
};

struct ConservationReport {
  std::map<std::string, ElementBalance> atom_balance;  // by symbol
  Count genus_reactants = 0;
  Count genus_products = 0;
  Count electrons_reactants = 0;
  Count electrons_products = 0;
  bool balanced = false;  // every delta is zero
};

// Totals are reported whether or not the reaction balances. Electron totals
// come from the bundle data (k + sum r_i) of structural molecules and from
// atomic numbers of composition-only ones.
// Throws Error(UnknownPresent), Error(UnresolvedName), Error(InvalidMolecule).
ConservationReport check_reaction(const Reaction& r, const Registry& registry);

} // namespace chemgenus

#endif
