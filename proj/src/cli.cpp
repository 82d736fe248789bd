#include "chemgenus/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "chemgenus/error.hpp"
#include "chemgenus/formats.hpp"
#include "chemgenus/report.hpp"

namespace chemgenus {

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kInput = 2;

// Failures that describe the chemistry rather than malformed input.
bool is_domain_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BondsUnknown:
    case ErrorKind::NonIntegralDelta:
    case ErrorKind::NegativeDelta:
    case ErrorKind::ZeroDenominator:
      return true;
    default:
      return false;
  }
}

void emit(std::ostream& out, const Tree& t) { out << t.dump(2) << "\n"; }

ElementTable load_table(const RunConfig& c) {
  if (c.elements_file)
    return ElementTable::with_override_file(*c.elements_file);
  return ElementTable::from_environment();
}

const Reaction& pick_reaction(const DocumentSet& doc, std::size_t n) {
  if (n < 1 || n > doc.reactions.size())
    fail(ErrorKind::InvalidArgument, "reaction " + std::to_string(n) + " requested, document has " +
                                         std::to_string(doc.reactions.size()));
  return doc.reactions[n - 1];
}

int encode(const RunConfig& c, std::ostream& out) {
  ElementTable table = load_table(c);
  DocumentSet doc = load_document(c.input, table);
  Registry registry(doc.molecules);
  if (c.side) {
    Side side = parse_side_expr(*c.side);
    std::string text = render_side(side);
    SideEncoding enc = encode_side(side, registry);
    if (c.format == OutputFormat::Tree)
      emit(out, to_tree(enc, text));
    else
      out << describe(enc, text);
    return kOk;
  }
  std::vector<std::string> names =
      c.molecule ? std::vector<std::string>{*c.molecule} : registry.names();
  Tree list = Tree::array();
  for (const std::string& name : names) {
    MoleculeEncoding enc = encode_molecule(registry.resolve(name));
    if (c.format == OutputFormat::Tree)
      list.push_back(to_tree(enc, name));
    else
      out << describe(enc, name);
  }
  if (c.format == OutputFormat::Tree)
    emit(out, c.molecule ? list.at(0) : list);
  return kOk;
}

int check(const RunConfig& c, std::ostream& out) {
  ElementTable table = load_table(c);
  DocumentSet doc = load_document(c.input, table);
  Registry registry(doc.molecules);
  const Reaction& r = pick_reaction(doc, c.reaction);
  ConservationReport report = check_reaction(r, registry);
  if (c.format == OutputFormat::Tree) {
    Tree t = to_tree(report);
    t["reaction"] = render_reaction(r);
    emit(out, t);
  } else {
    out << render_reaction(r) << ": " << describe(report);
  }
  return report.balanced ? kOk : kDomain;
}

int solve(const RunConfig& c, std::ostream& out) {
  ElementTable table = load_table(c);
  DocumentSet doc = load_document(c.input, table);
  Registry registry(doc.molecules);
  const Reaction& r = pick_reaction(doc, c.reaction);
  UnknownConstraints constraints = derive_constraints(r, registry);

  SolverOptions options;
  for (const std::string& s : c.elements)
    options.elements.push_back(table.lookup(s));
  options.max_atoms = c.max_atoms;
  options.node_budget = c.node_budget;
  std::vector<CandidateComposition> candidates = enumerate_candidates(constraints, options);

  bool witnessed = std::any_of(candidates.begin(), candidates.end(), [](const auto& x) {
    return x.status == CandidateStatus::Witnessed;
  });
  if (c.format == OutputFormat::Tree) {
    Tree t;
    t["reaction"] = render_reaction(r);
    t["constraints"] = to_tree(constraints);
    t["candidates"] = Tree::array();
    for (const CandidateComposition& cand : candidates)
      t["candidates"].push_back(to_tree(cand));
    emit(out, t);
  } else {
    out << render_reaction(r) << "\n" << describe(constraints);
    out << candidates.size() << " candidate(s) over {";
    for (std::size_t i = 0; i < c.elements.size(); ++i)
      out << (i ? "," : "") << c.elements[i];
    out << "} with at most " << c.max_atoms << " atoms\n";
    for (const CandidateComposition& cand : candidates)
      out << "  " << describe(cand) << "\n";
  }
  return witnessed ? kOk : kDomain;
}

int respond(const RunConfig& c, std::ostream& out) {
  ResponseCurve curve = load_curve(c.input);
  ResponseVerdict v;
  v.T = c.T;
  v.epsilon = c.epsilon;
  v.horizon = curve.last_time();
  v.ratio = tail_ratio(curve, c.T);
  v.meets_threshold = meets_threshold(curve, c.T, c.epsilon);
  if (c.format == OutputFormat::Tree)
    emit(out, to_tree(v));
  else
    out << describe(v);
  return v.meets_threshold ? kOk : kDomain;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Encode: return encode(config, out);
      case Command::Check: return check(config, out);
      case Command::Solve: return solve(config, out);
      case Command::Respond: return respond(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_domain_error(e.kind()) ? kDomain : kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surface and bundle encoding of molecules and reactions"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";
  std::string elements_file;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "tree"}));
    sub->add_option("--elements-file", elements_file,
                    "Element override file (default: $CHEMGENUS_ELEMENTS)");
  };

  CLI::App* enc = app.add_subcommand("encode", "Print molecule or reaction-side encodings");
  enc->add_option("file", config.input, "MDF or JSON document")->required();
  auto* mol_opt = enc->add_option("--molecule", config.molecule, "Encode one molecule");
  enc->add_option("--side", config.side, "Encode a reaction side, e.g. \"CH4 + Cl2\"")
      ->excludes(mol_opt);
  add_common(enc);

  CLI::App* chk = app.add_subcommand("check", "Check conservation across a reaction");
  chk->add_option("file", config.input, "MDF or JSON document")->required();
  chk->add_option("--reaction", config.reaction, "1-based reaction index")->required();
  add_common(chk);

  CLI::App* slv = app.add_subcommand("solve", "Recover the unknown species of a reaction");
  slv->add_option("file", config.input, "MDF or JSON document")->required();
  slv->add_option("--reaction", config.reaction, "1-based reaction index")->required();
  slv->add_option("--elements", config.elements, "Allowed elements")->delimiter(',');
  slv->add_option("--max-atoms", config.max_atoms, "Largest candidate size")
      ->check(CLI::PositiveNumber);
  slv->add_option("--node-budget", config.node_budget, "Witness search limit per candidate")
      ->check(CLI::PositiveNumber);
  add_common(slv);

  CLI::App* rsp = app.add_subcommand("respond", "Evaluate the tail-ratio criterion on a curve");
  rsp->add_option("curve", config.input, "CSV of t,value samples")->required();
  rsp->add_option("--T", config.T, "Split time")->required();
  rsp->add_option("--eps", config.epsilon, "Threshold")->required()->check(CLI::PositiveNumber);
  add_common(rsp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }

  if (*enc)
    config.command = Command::Encode;
  else if (*chk)
    config.command = Command::Check;
  else if (*slv)
    config.command = Command::Solve;
  else
    config.command = Command::Respond;
  config.format = format == "tree" ? OutputFormat::Tree : OutputFormat::Text;
  if (!elements_file.empty())
    config.elements_file = elements_file;
  return run(config, out, err);
}

} // namespace chemgenus
