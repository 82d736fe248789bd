#include "chemgenus/molecule.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "chemgenus/encoder.hpp"
#include "chemgenus/error.hpp"

namespace chemgenus {

const Atom* Structure::find_atom(const std::string& label) const {
  for (const Atom& a : atoms)
    if (a.label == label)
      return &a;
  return nullptr;
}

std::map<std::string, ElementCount> element_counts(const Molecule& m) {
  std::map<std::string, ElementCount> out;
  if (m.is_structural()) {
    for (const Atom& a : m.structure().atoms) {
      auto [it, inserted] = out.try_emplace(a.element.symbol, ElementCount{a.element, 0});
      it->second.count += 1;
    }
  } else {
    for (const ElementCount& ec : m.composition().counts) {
      auto [it, inserted] = out.try_emplace(ec.element.symbol, ElementCount{ec.element, 0});
      it->second.count += ec.count;
    }
  }
  return out;
}

Count total_atomic_number(const Molecule& m) {
  Count total = 0;
  for (const auto& [symbol, ec] : element_counts(m))
    total += ec.count * ec.element.atomic_number;
  return total;
}

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Empty: return "empty";
    case ViolationKind::DuplicateLabel: return "duplicate-label";
    case ViolationKind::UnknownLabel: return "unknown-label";
    case ViolationKind::SelfBond: return "self-bond";
    case ViolationKind::ParallelBond: return "parallel-bond";
    case ViolationKind::BadOrder: return "bad-order";
    case ViolationKind::BadTransfer: return "bad-transfer";
    case ViolationKind::BadDonor: return "bad-donor";
    case ViolationKind::Disconnected: return "disconnected";
    case ViolationKind::ElectronBudget: return "electron-budget";
    case ViolationKind::Radical: return "radical";
    case ViolationKind::BadCount: return "bad-count";
  }
  return "violation";
}

namespace {

std::string bond_name(const Bond& b) { return b.a + "-" + b.b; }

void validate_structure(const Structure& s, ValidationReport& report) {
  if (s.atoms.empty()) {
    report.push_back({ViolationKind::Empty, "", "molecule has no atoms"});
    return;
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < s.atoms.size(); ++i) {
    const Atom& a = s.atoms[i];
    if (!index.emplace(a.label, i).second)
      report.push_back({ViolationKind::DuplicateLabel, a.label,
                        "atom label '" + a.label + "' is used more than once"});
  }

  std::vector<std::size_t> parent(s.atoms.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  std::set<std::pair<std::string, std::string>> pairs;
  for (const Bond& b : s.bonds) {
    bool endpoints_ok = true;
    for (const std::string* end : {&b.a, &b.b}) {
      if (!index.count(*end)) {
        report.push_back({ViolationKind::UnknownLabel, *end,
                          "bond " + bond_name(b) + " references unknown atom '" + *end + "'"});
        endpoints_ok = false;
      }
    }
    if (b.a == b.b) {
      report.push_back({ViolationKind::SelfBond, b.a, "atom '" + b.a + "' is bonded to itself"});
      endpoints_ok = false;
    }
    if (auto* cov = std::get_if<Covalent>(&b.kind)) {
      if (cov->order < 1 || cov->order > 3)
        report.push_back({ViolationKind::BadOrder, bond_name(b),
                          "covalent order " + std::to_string(cov->order) + " is outside 1..3"});
    } else {
      const Ionic& ion = std::get<Ionic>(b.kind);
      if (ion.transferred < 1)
        report.push_back({ViolationKind::BadTransfer, bond_name(b),
                          "ionic bond must transfer at least one electron"});
      if (ion.donor != b.a && ion.donor != b.b)
        report.push_back({ViolationKind::BadDonor, bond_name(b),
                          "donor '" + ion.donor + "' is not an endpoint of the bond"});
    }
    if (!endpoints_ok)
      continue;
    auto key = std::minmax(b.a, b.b);
    if (!pairs.emplace(key.first, key.second).second)
      report.push_back({ViolationKind::ParallelBond, bond_name(b),
                        "atoms " + b.a + " and " + b.b + " share more than one bond"});
    parent[root(index[b.a])] = root(index[b.b]);
  }

  std::set<std::size_t> components;
  for (std::size_t i = 0; i < s.atoms.size(); ++i)
    components.insert(root(i));
  if (components.size() > 1) {
    // name the first atom outside the component of atom 0
    std::size_t first = root(0);
    for (std::size_t i = 0; i < s.atoms.size(); ++i)
      if (root(i) != first) {
        report.push_back({ViolationKind::Disconnected, s.atoms[i].label,
                          "bond graph has " + std::to_string(components.size()) +
                          " components; '" + s.atoms[i].label + "' is not connected to '" +
                          s.atoms[0].label + "'"});
        break;
      }
  }

  std::set<std::string> seen;
  Count electrons = 0;
  for (const Atom& a : s.atoms) {
    electrons += electron_count(a.element);
    if (!seen.insert(a.label).second)
      continue;
    Count used = atom_bond_contribution(a.label, s);
    if (used > electron_count(a.element))
      report.push_back({ViolationKind::ElectronBudget, a.label,
                        "atom '" + a.label + "' contributes " + std::to_string(used) +
                        " bonding electrons but has only " +
                        std::to_string(electron_count(a.element))});
  }
  if (electrons % 2 != 0)
    report.push_back({ViolationKind::Radical, "",
                      "odd electron total " + std::to_string(electrons) +
                      " (free radicals are not representable)"});
}

void validate_composition(const Composition& c, ValidationReport& report) {
  if (c.counts.empty())
    report.push_back({ViolationKind::Empty, "", "composition lists no elements"});
  std::set<std::string> seen;
  for (const ElementCount& ec : c.counts) {
    if (!seen.insert(ec.element.symbol).second)
      report.push_back({ViolationKind::DuplicateLabel, ec.element.symbol,
                        "element '" + ec.element.symbol + "' is listed more than once"});
    if (ec.count < 1)
      report.push_back({ViolationKind::BadCount, ec.element.symbol,
                        "count for '" + ec.element.symbol + "' must be positive"});
  }
}

} // namespace

ValidationReport validate_molecule(const Molecule& m) {
  ValidationReport report;
  if (m.is_structural())
    validate_structure(m.structure(), report);
  else
    validate_composition(m.composition(), report);
  return report;
}

std::string describe(const ValidationReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.size(); ++i) {
    if (i)
      out << "; ";
    out << violation_kind_name(report[i].kind) << ": " << report[i].message;
  }
  return out.str();
}

ValidatedMolecule validated(Molecule m) {
  ValidationReport report = validate_molecule(m);
  if (!report.empty())
    fail(ErrorKind::InvalidMolecule, "molecule '" + m.name + "': " + describe(report));
  return ValidatedMolecule(std::make_shared<const Molecule>(std::move(m)));
}

std::size_t Reaction::unknown_count() const {
  auto count = [](const Side& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](const Term& t) { return t.is_unknown(); }));
  };
  return count(reactants) + count(products);
}

Registry::Registry(const std::vector<Molecule>& molecules) {
  for (const Molecule& m : molecules)
    add(m);
}

void Registry::add(Molecule m) {
  if (entries_.count(m.name))
    fail(ErrorKind::DuplicateMolecule, "molecule '" + m.name + "' is defined more than once");
  std::string name = m.name;
  Entry entry;
  entry.report = validate_molecule(m);
  if (entry.report.empty())
    entry.valid = validated(std::move(m));
  entries_.emplace(name, std::move(entry));
  order_.push_back(std::move(name));
}

bool Registry::contains(const std::string& name) const { return entries_.count(name) != 0; }

const ValidatedMolecule& Registry::resolve(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    fail(ErrorKind::UnresolvedName, "no molecule named '" + name + "'");
  if (!it->second.valid)
    fail(ErrorKind::InvalidMolecule, "molecule '" + name + "': " + describe(it->second.report));
  return *it->second.valid;
}

const ValidationReport& Registry::report(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    fail(ErrorKind::UnresolvedName, "no molecule named '" + name + "'");
  return it->second.report;
}

std::vector<std::string> Registry::names() const { return order_; }

std::vector<ValidatedMolecule> expand_side(const Side& side, const Registry& registry) {
  for (const Term& t : side)
    if (t.is_unknown())
      fail(ErrorKind::UnknownPresent, "side contains the unknown term '?'");
  std::vector<ValidatedMolecule> out;
  for (const Term& t : side) {
    if (t.coefficient < 1)
      fail(ErrorKind::InvalidArgument, "coefficient of '" + *t.name + "' must be positive");
    const ValidatedMolecule& m = registry.resolve(*t.name);
    for (Count i = 0; i < t.coefficient; ++i)
      out.push_back(m);
  }
  return out;
}

} // namespace chemgenus
