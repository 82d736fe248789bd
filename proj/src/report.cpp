#include "chemgenus/report.hpp"

#include <iomanip>
#include <sstream>

#include "chemgenus/formats.hpp"

namespace chemgenus {

namespace {

const char* kind_name(SummandKind k) { return k == SummandKind::Canonical ? "canonical" : "trivial"; }

std::string bond_text(const Bond& b) {
  std::ostringstream out;
  if (auto* cov = std::get_if<Covalent>(&b.kind)) {
    out << b.a << "-" << b.b << " cov " << cov->order;
  } else {
    const Ionic& ion = std::get<Ionic>(b.kind);
    out << ion.donor << "-" << (ion.donor == b.a ? b.b : b.a) << " ion " << ion.transferred;
  }
  return out.str();
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << v;
  return out.str();
}

} // namespace

Tree to_tree(const MoleculeEncoding& enc, const std::string& name) {
  Tree t;
  t["name"] = name;
  t["genus"] = enc.genus();
  t["composition_only"] = enc.is_composition_only();
  if (!enc.is_composition_only()) {
    t["canonical_multiplicity"] = enc.canonical_multiplicity();
    Tree ranks = Tree::array();
    for (const TrivialRank& r : enc.trivial_ranks())
      ranks.push_back({{"atom", r.atom}, {"rank", r.rank}});
    t["trivial_ranks"] = ranks;
  }
  t["rendered"] = render_encoding(enc);
  return t;
}

Tree to_tree(const SideEncoding& enc, const std::string& side_text) {
  Tree t;
  t["side"] = side_text;
  t["total_genus"] = enc.total_genus;
  t["factors"] = Tree::array();
  for (const SideFactor& f : enc.factors)
    t["factors"].push_back(to_tree(f.encoding, f.name));
  t["summands"] = Tree::array();
  for (const Summand& s : enc.summands)
    t["summands"].push_back({{"factor", s.factor}, {"kind", kind_name(s.kind)}, {"value", s.value}});
  t["rendered"] = render_encoding(enc);
  return t;
}

Tree to_tree(const ConservationReport& report) {
  Tree t;
  Tree balance = Tree::object();
  for (const auto& [symbol, b] : report.atom_balance)
    balance[symbol] = {{"reactants", b.reactants}, {"products", b.products}, {"delta", b.delta}};
  t["atom_balance"] = balance;
  t["genus_reactants"] = report.genus_reactants;
  t["genus_products"] = report.genus_products;
  t["electrons_reactants"] = report.electrons_reactants;
  t["electrons_products"] = report.electrons_products;
  t["balanced"] = report.balanced;
  return t;
}

Tree to_tree(const UnknownConstraints& c) {
  Tree t;
  t["coefficient"] = c.coefficient;
  t["side"] = c.on_reactant_side ? "reactants" : "products";
  t["genus_required"] = c.genus_required;
  t["canonical_required"] = c.canonical_required ? Tree(*c.canonical_required) : Tree(nullptr);
  t["trivial_rank_required"] =
      c.trivial_rank_required ? Tree(*c.trivial_rank_required) : Tree(nullptr);
  if (c.element_deltas) {
    Tree d = Tree::object();
    for (const ElementCount& ec : *c.element_deltas)
      d[ec.element.symbol] = ec.count;
    t["element_deltas"] = d;
  } else {
    t["element_deltas"] = nullptr;
  }
  t["structure_unavailable"] =
      c.structure_unavailable ? Tree(*c.structure_unavailable) : Tree(nullptr);
  return t;
}

Tree to_tree(const Structure& s) {
  Tree t;
  t["atoms"] = Tree::array();
  for (const Atom& a : s.atoms)
    t["atoms"].push_back({{"label", a.label}, {"element", a.element.symbol}});
  t["bonds"] = Tree::array();
  for (const Bond& b : s.bonds) {
    if (auto* cov = std::get_if<Covalent>(&b.kind)) {
      t["bonds"].push_back({{"a", b.a}, {"b", b.b}, {"kind", "cov"}, {"order", cov->order}});
    } else {
      const Ionic& ion = std::get<Ionic>(b.kind);
      t["bonds"].push_back({{"a", b.a}, {"b", b.b}, {"kind", "ion"},
                            {"transferred", ion.transferred}, {"donor", ion.donor}});
    }
  }
  return t;
}

Tree to_tree(const CandidateComposition& c) {
  Tree t;
  t["formula"] = render_formula(c.counts);
  Tree counts = Tree::object();
  for (const ElementCount& ec : c.counts)
    counts[ec.element.symbol] = ec.count;
  t["counts"] = counts;
  t["status"] = c.status == CandidateStatus::Witnessed ? "witnessed" : "undecided";
  t["witness"] = c.witness ? to_tree(*c.witness) : Tree(nullptr);
  t["nodes"] = c.nodes;
  return t;
}

Tree to_tree(const ResponseVerdict& v) {
  Tree t;
  t["ratio"] = v.ratio;
  t["T"] = v.T;
  t["epsilon"] = v.epsilon;
  t["horizon"] = v.horizon;
  t["meets_threshold"] = v.meets_threshold;
  return t;
}

std::string describe(const MoleculeEncoding& enc, const std::string& name) {
  std::ostringstream out;
  out << name << ": " << render_encoding(enc) << "\n";
  out << "  genus " << enc.genus();
  if (enc.is_composition_only()) {
    out << " (composition only; no bundle data)\n";
    return out.str();
  }
  out << ", canonical multiplicity " << enc.canonical_multiplicity() << ", trivial rank "
      << enc.trivial_total() << "\n  ranks:";
  for (const TrivialRank& r : enc.trivial_ranks())
    out << " " << r.atom << "=" << r.rank;
  out << "\n";
  return out.str();
}

std::string describe(const SideEncoding& enc, const std::string& side_text) {
  std::ostringstream out;
  out << side_text << ":\n  " << render_encoding(enc) << "\n";
  out << "  total genus " << enc.total_genus << "\n";
  for (std::size_t j = 0; j < enc.factors.size(); ++j) {
    const MoleculeEncoding& e = enc.factors[j].encoding;
    out << "  factor " << j + 1 << " " << enc.factors[j].name << ": genus " << e.genus()
        << ", canonical " << e.canonical_multiplicity() << ", trivial " << e.trivial_total()
        << "\n";
  }
  return out.str();
}

std::string describe(const ConservationReport& report) {
  std::ostringstream out;
  out << (report.balanced ? "balanced" : "NOT balanced") << "\n";
  out << "  element  reactants  products  delta\n";
  for (const auto& [symbol, b] : report.atom_balance)
    out << "  " << std::left << std::setw(7) << symbol << std::right << std::setw(11)
        << b.reactants << std::setw(10) << b.products << std::setw(7) << b.delta << "\n";
  out << "  genus     " << report.genus_reactants << " -> " << report.genus_products << "\n";
  out << "  electrons " << report.electrons_reactants << " -> " << report.electrons_products
      << "\n";
  return out.str();
}

std::string describe(const UnknownConstraints& c) {
  std::ostringstream out;
  out << "unknown (coefficient " << c.coefficient << ", "
      << (c.on_reactant_side ? "reactant" : "product") << " side):\n";
  out << "  genus " << c.genus_required << "\n";
  if (c.canonical_required)
    out << "  canonical multiplicity k = " << *c.canonical_required << "\n";
  if (c.trivial_rank_required)
    out << "  trivial rank " << *c.trivial_rank_required << "\n";
  if (c.element_deltas)
    out << "  composition " << (c.element_deltas->empty() ? "(none)" : render_formula(*c.element_deltas))
        << "\n";
  if (c.structure_unavailable)
    out << "  note: StructureUnavailable: " << *c.structure_unavailable << "\n";
  return out.str();
}

std::string describe(const CandidateComposition& c) {
  std::ostringstream out;
  out << render_formula(c.counts);
  if (c.status == CandidateStatus::Undecided) {
    out << "  UNDECIDED (search budget exhausted after " << c.nodes << " nodes)";
  } else if (c.witness && c.witness->bonds.empty()) {
    out << "  witness: single atom";
  } else if (c.witness) {
    out << "  witness:";
    for (std::size_t i = 0; i < c.witness->bonds.size(); ++i)
      out << (i ? ", " : " ") << bond_text(c.witness->bonds[i]);
  }
  return out.str();
}

std::string describe(const ResponseVerdict& v) {
  std::ostringstream out;
  out << "tail ratio " << format_double(v.ratio) << " at T = " << format_double(v.T)
      << " (integrated up to t = " << format_double(v.horizon) << ")\n";
  out << (v.meets_threshold ? "meets" : "fails") << " threshold epsilon = "
      << format_double(v.epsilon) << "\n";
  return out.str();
}

} // namespace chemgenus
