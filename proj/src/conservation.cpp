#include "chemgenus/conservation.hpp"

#include "chemgenus/encoder.hpp"
#include "chemgenus/error.hpp"

namespace chemgenus {

namespace {

struct SideTotals {
  Count genus = 0;
  Count electrons = 0;
};

SideTotals tally(const Side& side, const Registry& registry,
                 std::map<std::string, ElementBalance>& balance, bool reactant) {
  SideTotals totals;
  for (const Term& t : side) {
    const ValidatedMolecule& m = registry.resolve(*t.name);
    for (const auto& [symbol, ec] : element_counts(m.molecule())) {
      auto [it, inserted] = balance.try_emplace(symbol, ElementBalance{ec.element});
      (reactant ? it->second.reactants : it->second.products) += t.coefficient * ec.count;
    }
    MoleculeEncoding enc = encode_molecule(m);
    totals.genus += t.coefficient * enc.genus();
    Count electrons = enc.is_composition_only()
                          ? enc.genus()
                          : enc.canonical_multiplicity() + enc.trivial_total();
    totals.electrons += t.coefficient * electrons;
  }
  return totals;
}

} // namespace

ConservationReport check_reaction(const Reaction& r, const Registry& registry) {
  if (r.unknown_count() != 0)
    fail(ErrorKind::UnknownPresent, "reaction contains the unknown term '?'");
  ConservationReport report;
  SideTotals left = tally(r.reactants, registry, report.atom_balance, true);
  SideTotals right = tally(r.products, registry, report.atom_balance, false);
  report.genus_reactants = left.genus;
  report.genus_products = right.genus;
  report.electrons_reactants = left.electrons;
  report.electrons_products = right.electrons;
  report.balanced = true;
  for (auto& [symbol, b] : report.atom_balance) {
    b.delta = b.products - b.reactants;
    if (b.delta != 0)
      report.balanced = false;
  }
  return report;
}

} // namespace chemgenus
