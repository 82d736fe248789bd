#include "doctest.h"

#include <random>

#include "chemgenus/formats.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace chemgenus;
using chemgenus::test::kind_thrown;

namespace {

bool has(const ValidationReport& r, ViolationKind k) {
  return std::any_of(r.begin(), r.end(), [k](const Violation& v) { return v.kind == k; });
}

Molecule structural(std::string name, std::vector<Atom> atoms, std::vector<Bond> bonds) {
  return Molecule{std::move(name), Structure{std::move(atoms), std::move(bonds)}};
}

const Element H{"H", 1}, C{"C", 6}, O{"O", 8}, Mg{"Mg", 12}, He{"He", 2};

} // namespace

TEST_CASE("methane validates") {
  Molecule ch4 = structural("CH4", {{"C1", C}, {"H1", H}, {"H2", H}, {"H3", H}, {"H4", H}},
                            {{"C1", "H1", Covalent{1}},
                             {"C1", "H2", Covalent{1}},
                             {"C1", "H3", Covalent{1}},
                             {"C1", "H4", Covalent{1}}});
  CHECK(validate_molecule(ch4).empty());
}

TEST_CASE("disconnected and over-budget molecules are reported") {
  Molecule h2_apart = structural("H2", {{"H1", H}, {"H2", H}}, {});
  ValidationReport r = validate_molecule(h2_apart);
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == ViolationKind::Disconnected);
  CHECK(r[0].subject == "H2");

  Molecule h2_triple = structural("H2", {{"H1", H}, {"H2", H}}, {{"H1", "H2", Covalent{3}}});
  r = validate_molecule(h2_triple);
  REQUIRE(r.size() == 2);
  CHECK(r[0].kind == ViolationKind::ElectronBudget);
  CHECK(r[0].subject == "H1");
  CHECK(r[1].subject == "H2");
}

TEST_CASE("bond invariants") {
  auto two = [](Bond b) { return structural("X", {{"O1", O}, {"O2", O}}, {std::move(b)}); };
  CHECK(has(validate_molecule(two({"O1", "O1", Covalent{1}})), ViolationKind::SelfBond));
  CHECK(has(validate_molecule(two({"O1", "O3", Covalent{1}})), ViolationKind::UnknownLabel));
  CHECK(has(validate_molecule(two({"O1", "O2", Covalent{4}})), ViolationKind::BadOrder));
  CHECK(has(validate_molecule(two({"O1", "O2", Covalent{0}})), ViolationKind::BadOrder));
  CHECK(has(validate_molecule(two({"O1", "O2", Ionic{0, "O1"}})), ViolationKind::BadTransfer));
  CHECK(has(validate_molecule(two({"O1", "O2", Ionic{1, "O9"}})), ViolationKind::BadDonor));
  CHECK(validate_molecule(two({"O1", "O2", Ionic{2, "O2"}})).empty());

  Molecule parallel = structural("X", {{"O1", O}, {"O2", O}},
                                 {{"O1", "O2", Covalent{1}}, {"O2", "O1", Covalent{1}}});
  CHECK(has(validate_molecule(parallel), ViolationKind::ParallelBond));

  Molecule dup = structural("X", {{"O1", O}, {"O1", O}}, {{"O1", "O1", Covalent{1}}});
  CHECK(has(validate_molecule(dup), ViolationKind::DuplicateLabel));

  CHECK(has(validate_molecule(structural("X", {}, {})), ViolationKind::Empty));
}

TEST_CASE("radicals: odd electron totals are rejected for structural molecules") {
  Molecule oh = structural("OH", {{"O1", O}, {"H1", H}}, {{"O1", "H1", Covalent{1}}});
  CHECK(has(validate_molecule(oh), ViolationKind::Radical));
  Molecule h = structural("H", {{"H1", H}}, {});
  CHECK(has(validate_molecule(h), ViolationKind::Radical));
  CHECK(validate_molecule(structural("He", {{"He1", He}}, {})).empty());
  // compositions may omit hydrogens, so no parity rule there
  CHECK(validate_molecule(Molecule{"IgE", Composition{{{C, 3}, {H, 1}}}}).empty());
}

TEST_CASE("composition invariants") {
  CHECK(has(validate_molecule(Molecule{"X", Composition{}}), ViolationKind::Empty));
  CHECK(has(validate_molecule(Molecule{"X", Composition{{{C, 0}}}}), ViolationKind::BadCount));
  CHECK(has(validate_molecule(Molecule{"X", Composition{{{C, 1}, {C, 2}}}}),
            ViolationKind::DuplicateLabel));
}

TEST_CASE("validated() refuses invalid molecules") {
  CHECK(kind_thrown([] { validated(structural("H2", {{"H1", H}, {"H2", H}}, {})); }) ==
        ErrorKind::InvalidMolecule);
  CHECK(validated(structural("Mg", {{"Mg1", Mg}}, {})).name() == "Mg");
}

TEST_CASE("expand_side repeats each molecule by its coefficient") {
  Registry reg = chemgenus::test::corpus_registry("mgo.mdf");
  auto names = [](const std::vector<ValidatedMolecule>& v) {
    std::vector<std::string> out;
    for (const auto& m : v)
      out.push_back(m.name());
    return out;
  };
  CHECK(names(expand_side(parse_side_expr("2 Mg + O2"), reg)) ==
        std::vector<std::string>{"Mg", "Mg", "O2"});
  CHECK(names(expand_side(parse_side_expr("O2 + 2 Mg"), reg)) ==
        std::vector<std::string>{"O2", "Mg", "Mg"});

  Registry ch = chemgenus::test::corpus_registry("ch4cl2.mdf");
  CHECK(names(expand_side(parse_side_expr("CH4 + Cl2"), ch)) ==
        std::vector<std::string>{"CH4", "Cl2"});

  Registry h2;
  h2.add(structural("H2", {{"H1", H}, {"H2", H}}, {{"H1", "H2", Covalent{1}}}));
  CHECK(names(expand_side(parse_side_expr("3H2"), h2)) ==
        std::vector<std::string>{"H2", "H2", "H2"});

  CHECK(kind_thrown([&] { expand_side(parse_side_expr("2 Mg + ?"), reg); }) ==
        ErrorKind::UnknownPresent);
  CHECK(kind_thrown([&] { expand_side(parse_side_expr("Mg + N2"), reg); }) ==
        ErrorKind::UnresolvedName);
}

TEST_CASE("registry keeps invalid molecules with their report") {
  Registry reg;
  reg.add(structural("H2", {{"H1", H}, {"H2", H}}, {}));
  CHECK(reg.contains("H2"));
  CHECK(reg.report("H2").size() == 1);
  CHECK(kind_thrown([&] { reg.resolve("H2"); }) == ErrorKind::InvalidMolecule);
  CHECK(kind_thrown([&] { reg.add(structural("H2", {{"H1", H}}, {})); }) ==
        ErrorKind::DuplicateMolecule);
}

TEST_CASE("property: expand_side length is the coefficient sum") {
  std::mt19937 rng(7);
  Registry reg;
  for (int i = 0; i < 5; ++i)
    reg.add(chemgenus::test::random_molecule(rng, 4, "M" + std::to_string(i)));
  for (int trial = 0; trial < 200; ++trial) {
    Side side;
    Count total = 0;
    int terms = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int t = 0; t < terms; ++t) {
      Count c = std::uniform_int_distribution<Count>(1, 5)(rng);
      side.push_back({c, "M" + std::to_string(std::uniform_int_distribution<int>(0, 4)(rng))});
      total += c;
    }
    CHECK(static_cast<Count>(expand_side(side, reg).size()) == total);
  }
}

TEST_CASE("fuzz: validate then expand never crashes on parser output") {
  std::mt19937 rng(11);
  const std::string alphabet = "molecule atoms bonds composition reaction cov ion CHONSMgl123:-,+?>\n #";
  int parsed = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    int len = std::uniform_int_distribution<int>(0, 120)(rng);
    for (int i = 0; i < len; ++i)
      text += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    // half the inputs start from a valid skeleton
    if (trial % 2)
      text = "molecule A\natoms C1:C H1:H\nbonds C1-H1 cov 1\nreaction A -> A\n" + text;
    try {
      DocumentSet doc = parse_document(text);
      ++parsed;
      Registry reg(doc.molecules);
      for (const Reaction& r : doc.reactions) {
        try {
          expand_side(r.reactants, reg);
          expand_side(r.products, reg);
        } catch (const Error&) {
        }
      }
    } catch (const Error&) {
    }
  }
  CHECK(parsed > 0);
}
