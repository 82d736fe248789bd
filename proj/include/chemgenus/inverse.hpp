// Recovering an unknown reaction species from the geometric constraints.
//
// For a reaction with one unknown term `c ?`, atom balance fixes the
// unknown's element counts, and balancing canonical multiplicities and
// trivial ranks separately across the two sides fixes its k and total
// trivial rank. Candidates are element multisets with the required genus
// that admit a witness: a connected bond structure whose bonding electrons
// add up to k while no atom supplies more electrons than it has.

#ifndef CHEMGENUS_INVERSE_HPP_
#define CHEMGENUS_INVERSE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chemgenus/molecule.hpp"

namespace chemgenus {

struct UnknownConstraints {
  Count coefficient = 1;
  bool on_reactant_side = true;
  Count genus_required = 0;
  // Absent when a known molecule is composition-only (no bond data).
  std::optional<Count> canonical_required;
  std::optional<Count> trivial_rank_required;
  // Element counts of one unknown molecule; absent for genus-only problems.
  std::optional<std::vector<ElementCount>> element_deltas;
  // Set when bundle constraints could not be derived.
  std::optional<std::string> structure_unavailable;
};

// Throws Error(NoUnknown), Error(MultipleUnknowns), Error(NegativeDelta),
// Error(NonIntegralDelta) and resolution errors.
UnknownConstraints derive_constraints(const Reaction& r, const Registry& registry);

// Constraint set for partially specified problems: only the genus, and
// optionally the canonical multiplicity, are known.
UnknownConstraints genus_constraint(Count genus, std::optional<Count> canonical = std::nullopt);

enum class CandidateStatus { Witnessed, Undecided };

struct CandidateComposition {
  std::vector<ElementCount> counts;  // sorted by symbol
  CandidateStatus status = CandidateStatus::Witnessed;
  // Atoms labelled by symbol and index (O1, O2, ...). A single atom with no
  // bonds is the witness for one-atom candidates with k = 0.
  std::optional<Structure> witness;
  std::uint64_t nodes = 0;  // search nodes spent on the witness
};

struct SolverOptions {
  std::vector<Element> elements;
  int max_atoms = 6;
  std::uint64_t node_budget = 1'000'000;
};

std::vector<Element> default_solver_elements(const ElementTable& table = ElementTable::builtin());

enum class WitnessOutcome { Found, Infeasible, BudgetExceeded };

struct WitnessResult {
  WitnessOutcome outcome = WitnessOutcome::Infeasible;
  std::optional<Structure> witness;
  std::uint64_t nodes = 0;
};

// Bounded exhaustive search over structures with at most one bond per atom
// pair (covalent order 1..3 or ionic transfer 1..3 in either direction).
// Without a canonical target any connected structure is accepted.
WitnessResult find_witness(const std::vector<ElementCount>& counts,
                           std::optional<Count> canonical, std::uint64_t node_budget);

// All candidates, sorted by (symbol, count) sequence. Candidates whose
// search ran out of budget are kept as Undecided.
std::vector<CandidateComposition> enumerate_candidates(const UnknownConstraints& c,
                                                       const SolverOptions& options);

// Structural molecule built from a witnessed candidate.
Molecule witness_molecule(const CandidateComposition& c, const std::string& name);

} // namespace chemgenus

#endif
