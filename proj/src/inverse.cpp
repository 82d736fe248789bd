#include "chemgenus/inverse.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <unordered_set>

#include "chemgenus/encoder.hpp"
#include "chemgenus/error.hpp"

namespace chemgenus {

namespace {

struct SideSums {
  std::map<std::string, ElementCount> atoms;
  Count canonical = 0;
  Count trivial = 0;
  std::optional<std::string> composition_only;  // first such molecule
};

void accumulate(const Side& side, const Registry& registry, SideSums& sums) {
  for (const Term& t : side) {
    if (t.is_unknown())
      continue;
    const ValidatedMolecule& m = registry.resolve(*t.name);
    for (const auto& [symbol, ec] : element_counts(m.molecule())) {
      auto [it, inserted] = sums.atoms.try_emplace(symbol, ElementCount{ec.element, 0});
      it->second.count += t.coefficient * ec.count;
    }
    MoleculeEncoding enc = encode_molecule(m);
    if (enc.is_composition_only()) {
      if (!sums.composition_only)
        sums.composition_only = m.name();
      continue;
    }
    sums.canonical += t.coefficient * enc.canonical_multiplicity();
    sums.trivial += t.coefficient * enc.trivial_total();
  }
}

// Required amount per unknown molecule, given the known totals on the
// unknown's side and on the opposite side.
Count per_molecule(Count opposite, Count same, Count coefficient, const std::string& what) {
  Count need = opposite - same;
  if (need < 0)
    fail(ErrorKind::NegativeDelta, "the unknown would need " + std::to_string(need) + " " + what);
  if (need % coefficient != 0)
    fail(ErrorKind::NonIntegralDelta, "imbalance of " + std::to_string(need) + " " + what +
                                          " is not divisible by the unknown's coefficient " +
                                          std::to_string(coefficient));
  return need / coefficient;
}

} // namespace

UnknownConstraints derive_constraints(const Reaction& r, const Registry& registry) {
  std::size_t unknowns = r.unknown_count();
  if (unknowns == 0)
    fail(ErrorKind::NoUnknown, "reaction has no unknown term '?'");
  if (unknowns > 1)
    fail(ErrorKind::MultipleUnknowns, "reaction has " + std::to_string(unknowns) + " unknowns");

  UnknownConstraints out;
  auto find_unknown = [](const Side& s) {
    return std::find_if(s.begin(), s.end(), [](const Term& t) { return t.is_unknown(); });
  };
  auto it = find_unknown(r.reactants);
  out.on_reactant_side = it != r.reactants.end();
  if (!out.on_reactant_side)
    it = find_unknown(r.products);
  out.coefficient = it->coefficient;
  if (out.coefficient < 1)
    fail(ErrorKind::InvalidArgument, "coefficient of '?' must be positive");

  SideSums reactants, products;
  accumulate(r.reactants, registry, reactants);
  accumulate(r.products, registry, products);
  const SideSums& same = out.on_reactant_side ? reactants : products;
  const SideSums& opposite = out.on_reactant_side ? products : reactants;

  std::map<std::string, Element> elements;
  for (const SideSums* s : {&reactants, &products})
    for (const auto& [symbol, ec] : s->atoms)
      elements.emplace(symbol, ec.element);

  std::vector<ElementCount> deltas;
  for (const auto& [symbol, element] : elements) {
    auto count_in = [&](const SideSums& s) {
      auto f = s.atoms.find(symbol);
      return f == s.atoms.end() ? Count{0} : f->second.count;
    };
    Count n = per_molecule(count_in(opposite), count_in(same), out.coefficient,
                           symbol + " atoms");
    if (n > 0) {
      deltas.push_back({element, n});
      out.genus_required += n * element.atomic_number;
    }
  }
  out.element_deltas = std::move(deltas);

  if (const auto& missing = reactants.composition_only ? reactants.composition_only
                                                       : products.composition_only) {
    out.structure_unavailable = "molecule '" + *missing +
                                "' is composition-only; only the genus constraint applies";
    return out;
  }
  out.canonical_required = per_molecule(opposite.canonical, same.canonical, out.coefficient,
                                        "canonical multiplicity");
  out.trivial_rank_required = per_molecule(opposite.trivial, same.trivial, out.coefficient,
                                           "trivial rank");
  if (*out.canonical_required + *out.trivial_rank_required != out.genus_required)
    fail(ErrorKind::InvalidArgument, "bundle balance disagrees with the genus balance");
  return out;
}

UnknownConstraints genus_constraint(Count genus, std::optional<Count> canonical) {
  if (genus < 0 || (canonical && (*canonical < 0 || *canonical > genus)))
    fail(ErrorKind::InvalidArgument, "need 0 <= canonical <= genus");
  UnknownConstraints c;
  c.genus_required = genus;
  c.canonical_required = canonical;
  if (canonical)
    c.trivial_rank_required = genus - *canonical;
  return c;
}

std::vector<Element> default_solver_elements(const ElementTable& table) {
  std::vector<Element> out;
  for (const char* s : {"H", "C", "N", "O", "S", "Cl", "Mg"})
    out.push_back(table.lookup(s));
  return out;
}

namespace {

// Contribution of one pair option to its two endpoints.
struct PairOption {
  std::uint8_t to_i;
  std::uint8_t to_j;
};

// Try order: covalent, ionic with the lower atom donating, ionic with the
// higher atom donating, no bond.
constexpr std::array<PairOption, 10> kOptions = {{
    {1, 1}, {2, 2}, {3, 3}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 0},
}};

class WitnessSearch {
public:
  WitnessSearch(std::vector<int> capacity, std::optional<Count> target, std::uint64_t budget)
    : cap_(std::move(capacity)), target_(target), budget_(budget), n_(cap_.size()),
      used_(n_, 0), choice_() {
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i)
        pairs_.push_back({i, j});
    choice_.assign(pairs_.size(), kOptions.size() - 1);
  }

  WitnessOutcome run() {
    if (n_ == 1)
      return (!target_ || *target_ == 0) ? WitnessOutcome::Found : WitnessOutcome::Infeasible;
    bool found = false;
    try {
      found = descend(0, 0);
    } catch (const BudgetExhausted&) {
      return WitnessOutcome::BudgetExceeded;
    }
    return found ? WitnessOutcome::Found : WitnessOutcome::Infeasible;
  }

  std::uint64_t nodes() const { return nodes_; }

  // Chosen option per pair after a successful run.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, PairOption>> bonds() const {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, PairOption>> out;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      PairOption o = kOptions[choice_[p]];
      if (o.to_i || o.to_j)
        out.push_back({pairs_[p], o});
    }
    return out;
  }

private:
  struct BudgetExhausted {};

  // Component representative per atom from the bonds placed so far.
  std::vector<std::size_t> components(std::size_t upto) const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t p = 0; p < upto; ++p) {
      PairOption o = kOptions[choice_[p]];
      if (o.to_i || o.to_j)
        parent[root(pairs_[p].first)] = root(pairs_[p].second);
    }
    for (std::size_t i = 0; i < n_; ++i)
      parent[i] = root(i);
    return parent;
  }

  std::string state_key(std::size_t p, const std::vector<std::size_t>& comp) const {
    std::string key;
    key.reserve(4 + 3 * n_);
    key.append(reinterpret_cast<const char*>(&p), sizeof p);
    for (std::size_t i = 0; i < n_; ++i)
      key.push_back(static_cast<char>(used_[i] & 0xff)), key.push_back(static_cast<char>(used_[i] >> 8));
    // relabel components in order of first appearance
    std::vector<int> label(n_, -1);
    int next = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (label[comp[i]] < 0)
        label[comp[i]] = next++;
      key.push_back(static_cast<char>(label[comp[i]]));
    }
    return key;
  }

  bool descend(std::size_t p, Count total) {
    std::vector<std::size_t> comp = components(p);
    std::size_t ncomp = 0;
    for (std::size_t i = 0; i < n_; ++i)
      ncomp += comp[i] == i;

    if (ncomp == 1 && (!target_ || total == *target_))
      return true;  // remaining pairs stay unbonded
    if (p == pairs_.size() || (target_ && total >= *target_))
      return false;

    // Can the remaining pairs still connect everything, and can they close
    // the gap to the target?
    std::vector<std::size_t> parent(comp);
    auto root = [&](std::size_t x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    Count upper = 0;
    Count spare = 0;
    for (std::size_t i = 0; i < n_; ++i)
      spare += cap_[i] - used_[i];
    for (std::size_t q = p; q < pairs_.size(); ++q) {
      auto [i, j] = pairs_[q];
      int ci = std::min(3, cap_[i] - used_[i]);
      int cj = std::min(3, cap_[j] - used_[j]);
      if (ci == 0 && cj == 0)
        continue;
      upper += std::max(2 * std::min(ci, cj), std::max(ci, cj));
      parent[root(i)] = root(j);
    }
    for (std::size_t i = 1; i < n_; ++i)
      if (root(i) != root(0))
        return false;
    if (target_) {
      Count remaining = *target_ - total;
      if (remaining < static_cast<Count>(ncomp) - 1 || remaining > std::min(upper, spare))
        return false;
    }

    std::string key = state_key(p, comp);
    if (failed_.count(key))
      return false;

    auto [i, j] = pairs_[p];
    for (std::size_t k = 0; k < kOptions.size(); ++k) {
      PairOption o = kOptions[k];
      if (used_[i] + o.to_i > cap_[i] || used_[j] + o.to_j > cap_[j])
        continue;
      if (++nodes_ > budget_)
        throw BudgetExhausted{};
      choice_[p] = k;
      used_[i] += o.to_i;
      used_[j] += o.to_j;
      bool ok = descend(p + 1, total + o.to_i + o.to_j);
      used_[i] -= o.to_i;
      used_[j] -= o.to_j;
      if (ok)
        return true;
    }
    choice_[p] = kOptions.size() - 1;
    failed_.insert(std::move(key));
    return false;
  }

  std::vector<int> cap_;
  std::optional<Count> target_;
  std::uint64_t budget_;
  std::size_t n_;
  std::vector<int> used_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> choice_;
  std::unordered_set<std::string> failed_;
  std::uint64_t nodes_ = 0;
};

std::vector<Atom> label_atoms(const std::vector<ElementCount>& counts) {
  std::vector<Atom> atoms;
  for (const ElementCount& ec : counts)
    for (Count i = 1; i <= ec.count; ++i)
      atoms.push_back({ec.element.symbol + std::to_string(i), ec.element});
  return atoms;
}

// Multisets over `elements` (index >= from) with the given atomic-number sum
// and at most `atoms_left` atoms.
void multisets(const std::vector<Element>& elements, std::size_t from, Count genus_left,
               Count atoms_left, std::vector<ElementCount>& current,
               std::vector<std::vector<ElementCount>>& out) {
  if (genus_left == 0) {
    if (!current.empty())
      out.push_back(current);
    return;
  }
  for (std::size_t e = from; e < elements.size(); ++e) {
    Count z = elements[e].atomic_number;
    for (Count n = 1; n <= atoms_left && n * z <= genus_left; ++n) {
      current.push_back({elements[e], n});
      multisets(elements, e + 1, genus_left - n * z, atoms_left - n, current, out);
      current.pop_back();
    }
  }
}

bool counts_less(const std::vector<ElementCount>& a, const std::vector<ElementCount>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const ElementCount& x, const ElementCount& y) {
        return std::tie(x.element.symbol, x.count) < std::tie(y.element.symbol, y.count);
      });
}

} // namespace

WitnessResult find_witness(const std::vector<ElementCount>& counts,
                           std::optional<Count> canonical, std::uint64_t node_budget) {
  std::vector<Atom> atoms = label_atoms(counts);
  WitnessResult result;
  if (atoms.empty())
    return result;
  std::vector<int> capacity;
  for (const Atom& a : atoms)
    capacity.push_back(static_cast<int>(std::min<Count>(electron_count(a.element), 3 * 65535)));
  WitnessSearch search(std::move(capacity), canonical, node_budget);
  result.outcome = search.run();
  result.nodes = search.nodes();
  if (result.outcome != WitnessOutcome::Found)
    return result;
  Structure s;
  s.atoms = atoms;
  for (const auto& [pair, o] : search.bonds()) {
    const std::string& a = atoms[pair.first].label;
    const std::string& b = atoms[pair.second].label;
    if (o.to_i == o.to_j)
      s.bonds.push_back({a, b, Covalent{o.to_i}});
    else if (o.to_i > 0)
      s.bonds.push_back({a, b, Ionic{o.to_i, a}});
    else
      s.bonds.push_back({b, a, Ionic{o.to_j, b}});
  }
  result.witness = std::move(s);
  return result;
}

std::vector<CandidateComposition> enumerate_candidates(const UnknownConstraints& c,
                                                       const SolverOptions& options) {
  if (options.max_atoms < 1)
    fail(ErrorKind::InvalidArgument, "max_atoms must be at least 1");
  std::vector<CandidateComposition> out;
  // Odd electron totals are radicals, which no valid molecule can be.
  if (c.genus_required <= 0 || c.genus_required % 2 != 0)
    return out;

  std::vector<Element> elements = options.elements;
  std::sort(elements.begin(), elements.end(),
            [](const Element& a, const Element& b) { return a.symbol < b.symbol; });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::vector<std::vector<ElementCount>> compositions;
  if (c.element_deltas) {
    Count atoms = 0;
    bool allowed = true;
    for (const ElementCount& ec : *c.element_deltas) {
      atoms += ec.count;
      allowed = allowed && std::any_of(elements.begin(), elements.end(), [&](const Element& e) {
                  return e.symbol == ec.element.symbol;
                });
    }
    if (allowed && atoms <= options.max_atoms && !c.element_deltas->empty())
      compositions.push_back(*c.element_deltas);
  } else {
    std::vector<ElementCount> current;
    multisets(elements, 0, c.genus_required, options.max_atoms, current, compositions);
  }

  for (auto& counts : compositions) {
    std::sort(counts.begin(), counts.end(), [](const ElementCount& a, const ElementCount& b) {
      return a.element.symbol < b.element.symbol;
    });
    WitnessResult w = find_witness(counts, c.canonical_required, options.node_budget);
    if (w.outcome == WitnessOutcome::Infeasible)
      continue;
    CandidateComposition cand;
    cand.counts = counts;
    cand.status = w.outcome == WitnessOutcome::Found ? CandidateStatus::Witnessed
                                                     : CandidateStatus::Undecided;
    cand.witness = std::move(w.witness);
    cand.nodes = w.nodes;
    out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), [](const CandidateComposition& a, const CandidateComposition& b) {
    return counts_less(a.counts, b.counts);
  });
  return out;
}

Molecule witness_molecule(const CandidateComposition& c, const std::string& name) {
  if (!c.witness)
    fail(ErrorKind::InvalidArgument, "candidate has no witness");
  return Molecule{name, *c.witness};
}

} // namespace chemgenus
