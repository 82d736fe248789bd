// Test-only generators and brute-force oracles. Nothing here calls into the
// encoder or solver code paths it is used to check.

#ifndef CHEMGENUS_TEST_ORACLES_HPP_
#define CHEMGENUS_TEST_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "chemgenus/molecule.hpp"

namespace chemgenus::test {

inline const std::vector<Element>& pool_elements() {
  static const std::vector<Element> els = {
      {"H", 1}, {"C", 6}, {"N", 7}, {"O", 8}, {"S", 16}, {"Cl", 17}, {"Mg", 12}};
  return els;
}

// Per-atom non-bonding electrons by direct tally over the bond list.
inline std::map<std::string, Count> tally_nonbonding(const Structure& s) {
  std::map<std::string, Count> left;
  for (const Atom& a : s.atoms)
    left[a.label] = a.element.atomic_number;
  for (const Bond& b : s.bonds) {
    if (const auto* cov = std::get_if<Covalent>(&b.kind)) {
      left[b.a] -= cov->order;
      left[b.b] -= cov->order;
    } else {
      const auto& ion = std::get<Ionic>(b.kind);
      left[ion.donor] -= ion.transferred;
    }
  }
  return left;
}

// 2 * (sum of covalent orders) + (sum of ionic transfers).
inline Count tally_bonding(const Structure& s) {
  Count cov = 0, ion = 0;
  for (const Bond& b : s.bonds) {
    if (const auto* c = std::get_if<Covalent>(&b.kind))
      cov += c->order;
    else
      ion += std::get<Ionic>(b.kind).transferred;
  }
  return 2 * cov + ion;
}

// Random connected structure on the given atoms that respects every atom's
// electron budget, or nothing if the random attempt got stuck. Ionic bonds
// list the donor first.
inline std::optional<Structure> random_structure(const std::vector<Element>& elements,
                                                 std::mt19937& rng) {
  Structure s;
  std::map<std::string, int> per_symbol;
  for (const Element& e : elements)
    s.atoms.push_back({e.symbol + std::to_string(++per_symbol[e.symbol]), e});
  std::shuffle(s.atoms.begin(), s.atoms.end(), rng);
  std::vector<int> spare;
  for (const Atom& a : s.atoms)
    spare.push_back(a.element.atomic_number);

  std::set<std::pair<std::size_t, std::size_t>> used;
  auto try_bond = [&](std::size_t i, std::size_t j) {
    // candidate (kind, amount, donor-is-i)
    std::vector<std::array<int, 3>> options;
    for (int o = 1; o <= 3; ++o)
      if (spare[i] >= o && spare[j] >= o)
        options.push_back({0, o, 0});
    for (int t = 1; t <= 3; ++t) {
      if (spare[i] >= t)
        options.push_back({1, t, 1});
      if (spare[j] >= t)
        options.push_back({1, t, 0});
    }
    if (options.empty())
      return false;
    auto pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    if (pick[0] == 0) {
      spare[i] -= pick[1];
      spare[j] -= pick[1];
      s.bonds.push_back({s.atoms[i].label, s.atoms[j].label, Covalent{pick[1]}});
    } else {
      std::size_t d = pick[2] ? i : j, r = pick[2] ? j : i;
      spare[d] -= pick[1];
      s.bonds.push_back({s.atoms[d].label, s.atoms[r].label,
                         Ionic{pick[1], s.atoms[d].label}});
    }
    used.insert(std::minmax(i, j));
    return true;
  };

  for (std::size_t j = 1; j < s.atoms.size(); ++j) {
    std::vector<std::size_t> earlier(j);
    for (std::size_t i = 0; i < j; ++i)
      earlier[i] = i;
    std::shuffle(earlier.begin(), earlier.end(), rng);
    bool attached = false;
    for (std::size_t i : earlier)
      if ((attached = try_bond(i, j)))
        break;
    if (!attached)
      return std::nullopt;
  }
  std::size_t extra = std::uniform_int_distribution<std::size_t>(0, s.atoms.size())(rng);
  for (std::size_t k = 0; k < extra && s.atoms.size() > 2; ++k) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, s.atoms.size() - 1)(rng);
    std::size_t j = std::uniform_int_distribution<std::size_t>(0, s.atoms.size() - 1)(rng);
    if (i != j && !used.count(std::minmax(i, j)))
      try_bond(i, j);
  }
  std::shuffle(s.bonds.begin(), s.bonds.end(), rng);
  return s;
}

// Random valid structural molecule with 1..max_atoms atoms from the pool.
inline Molecule random_molecule(std::mt19937& rng, int max_atoms, const std::string& name) {
  const auto& els = pool_elements();
  for (;;) {
    int n = std::uniform_int_distribution<int>(1, max_atoms)(rng);
    std::vector<Element> atoms;
    int electrons = 0;
    for (int i = 0; i < n; ++i) {
      atoms.push_back(els[std::uniform_int_distribution<std::size_t>(0, els.size() - 1)(rng)]);
      electrons += atoms.back().atomic_number;
    }
    if (electrons % 2 != 0)
      continue;
    if (auto s = random_structure(atoms, rng))
      return Molecule{name, *s};
  }
}

// Multisets (as per-element count vectors over `elements`) with the given
// atomic-number sum and at most `max_atoms` atoms, by nested loops.
inline std::vector<std::vector<ElementCount>> brute_force_multisets(
    const std::vector<Element>& elements, Count genus, int max_atoms) {
  std::vector<std::vector<ElementCount>> out;
  std::vector<Count> counts(elements.size(), 0);
  // odometer over counts[k] in 0..max_atoms
  for (;;) {
    Count atoms = 0, sum = 0;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      atoms += counts[k];
      sum += counts[k] * elements[k].atomic_number;
    }
    if (atoms >= 1 && atoms <= max_atoms && sum == genus) {
      std::vector<ElementCount> ms;
      for (std::size_t k = 0; k < elements.size(); ++k)
        if (counts[k] > 0)
          ms.push_back({elements[k], counts[k]});
      std::sort(ms.begin(), ms.end(), [](const ElementCount& a, const ElementCount& b) {
        return a.element.symbol < b.element.symbol;
      });
      out.push_back(ms);
    }
    std::size_t k = 0;
    while (k < counts.size() && ++counts[k] > max_atoms)
      counts[k++] = 0;
    if (k == counts.size())
      break;
  }
  return out;
}

// Every bond-electron total realizable by a connected structure on atoms
// with the given atomic numbers, at most one bond per pair. Forward
// reachability over (per-atom contribution, connectivity partition) states,
// for up to 8 atoms.
inline std::set<Count> achievable_totals(const std::vector<int>& z) {
  const std::size_t n = z.size();
  if (n == 1)
    return {0};
  struct State {
    std::array<std::uint8_t, 8> used{};
    std::array<std::uint8_t, 8> part{};
    bool operator==(const State& o) const { return used == o.used && part == o.part; }
  };
  struct Hash {
    std::size_t operator()(const State& s) const {
      std::uint64_t h = 1469598103934665603ull;
      for (std::size_t i = 0; i < 8; ++i) {
        h = (h ^ s.used[i]) * 1099511628211ull;
        h = (h ^ s.part[i]) * 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };
  auto normalize = [n](State& s) {
    std::array<int, 8> relabel;
    relabel.fill(-1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (relabel[s.part[i]] < 0)
        relabel[s.part[i]] = next++;
      s.part[i] = static_cast<std::uint8_t>(relabel[s.part[i]]);
    }
  };

  State start;
  for (std::size_t i = 0; i < n; ++i)
    start.part[i] = static_cast<std::uint8_t>(i);
  std::unordered_set<State, Hash> layer{start};
  const int contrib[10][2] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {1, 0},
                              {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::unordered_set<State, Hash> next;
      for (const State& s : layer) {
        for (const auto& c : contrib) {
          if (s.used[a] + c[0] > z[a] || s.used[b] + c[1] > z[b])
            continue;
          State t = s;
          t.used[a] = static_cast<std::uint8_t>(t.used[a] + c[0]);
          t.used[b] = static_cast<std::uint8_t>(t.used[b] + c[1]);
          if (c[0] + c[1] > 0 && t.part[a] != t.part[b]) {
            std::uint8_t from = t.part[b], to = t.part[a];
            for (std::size_t i = 0; i < n; ++i)
              if (t.part[i] == from)
                t.part[i] = to;
            normalize(t);
          }
          next.insert(t);
        }
      }
      layer.swap(next);
    }
  }
  std::set<Count> totals;
  for (const State& s : layer) {
    bool connected = true;
    Count total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      connected = connected && s.part[i] == 0;
      total += s.used[i];
    }
    if (connected)
      totals.insert(total);
  }
  return totals;
}

struct GeneratedReaction {
  std::vector<Molecule> molecules;
  Reaction reaction;
};

// Balanced by construction: random reactant molecules with coefficients,
// whose pooled atoms are regrouped into freshly built product molecules.
inline GeneratedReaction random_balanced_reaction(std::mt19937& rng) {
  GeneratedReaction out;
  std::vector<Element> pool;
  int n_reactants = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < n_reactants; ++i) {
    Molecule m = random_molecule(rng, 4, "R" + std::to_string(i));
    Count c = std::uniform_int_distribution<Count>(1, 3)(rng);
    for (Count k = 0; k < c; ++k)
      for (const Atom& a : m.structure().atoms)
        pool.push_back(a.element);
    out.reaction.reactants.push_back({c, m.name});
    out.molecules.push_back(std::move(m));
  }
  for (;;) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::vector<Element>> groups;
    for (std::size_t i = 0; i < pool.size();) {
      std::size_t len = std::min<std::size_t>(
          pool.size() - i, std::uniform_int_distribution<std::size_t>(1, 6)(rng));
      groups.emplace_back(pool.begin() + static_cast<std::ptrdiff_t>(i),
                          pool.begin() + static_cast<std::ptrdiff_t>(i + len));
      i += len;
    }
    std::vector<Molecule> products;
    for (const auto& g : groups) {
      int z = 0;
      for (const Element& e : g)
        z += e.atomic_number;
      if (z % 2 != 0)
        break;
      auto s = random_structure(g, rng);
      if (!s)
        break;
      products.push_back(Molecule{"P" + std::to_string(products.size()), *s});
    }
    if (products.size() != groups.size())
      continue;
    for (Molecule& p : products) {
      out.reaction.products.push_back({1, p.name});
      out.molecules.push_back(std::move(p));
    }
    return out;
  }
}

inline std::vector<int> atomic_numbers(const std::vector<ElementCount>& counts) {
  std::vector<int> z;
  for (const ElementCount& ec : counts)
    for (Count i = 0; i < ec.count; ++i)
      z.push_back(ec.element.atomic_number);
  return z;
}

} // namespace chemgenus::test

#endif
