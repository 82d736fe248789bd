#include "chemgenus/elements.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chemgenus/error.hpp"

namespace chemgenus {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateAtomLabel: return "DuplicateAtomLabel";
    case ErrorKind::DuplicateMolecule: return "DuplicateMolecule";
    case ErrorKind::MultipleUnknowns: return "MultipleUnknowns";
    case ErrorKind::NonMonotoneTime: return "NonMonotoneTime";
    case ErrorKind::InvalidMolecule: return "InvalidMolecule";
    case ErrorKind::UnresolvedName: return "UnresolvedName";
    case ErrorKind::UnknownPresent: return "UnknownPresent";
    case ErrorKind::BondsUnknown: return "BondsUnknown";
    case ErrorKind::NoUnknown: return "NoUnknown";
    case ErrorKind::NonIntegralDelta: return "NonIntegralDelta";
    case ErrorKind::NegativeDelta: return "NegativeDelta";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::TOutOfRange: return "TOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Error";
}

namespace {

constexpr std::array<const char*, 36> kSymbols = {
  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
  "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
  "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
};

bool valid_symbol(std::string_view s) {
  if (s.empty() || s.size() > 2)
    return false;
  if (s[0] < 'A' || s[0] > 'Z')
    return false;
  return s.size() == 1 || (s[1] >= 'a' && s[1] <= 'z');
}

} // namespace

const ElementTable& ElementTable::builtin() {
  static const ElementTable table = [] {
    ElementTable t;
    for (std::size_t i = 0; i < kSymbols.size(); ++i)
      t.set(Element{kSymbols[i], static_cast<int>(i) + 1});
    return t;
  }();
  return table;
}

void ElementTable::set(Element e) {
  std::string key = e.symbol;
  by_symbol_.insert_or_assign(std::move(key), std::move(e));
}

ElementTable ElementTable::with_overrides(std::string_view text) {
  ElementTable t = builtin();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string symbol, number, extra;
    if (!(fields >> symbol))
      continue;
    if (!(fields >> number) || (fields >> extra))
      throw SyntaxError("expected `SYMBOL ATOMIC_NUMBER`", lineno, 1);
    if (!valid_symbol(symbol))
      throw SyntaxError("malformed element symbol '" + symbol + "'", lineno, 1);
    char* end = nullptr;
    long z = std::strtol(number.c_str(), &end, 10);
    if (*end != '\0' || z < 1 || z > 100000)
      throw SyntaxError("atomic number must be a positive integer, got '" + number + "'",
                        lineno, static_cast<int>(line.find(number)) + 1);
    t.set(Element{symbol, static_cast<int>(z)});
  }
  return t;
}

ElementTable ElementTable::with_override_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::Io, "cannot read element override file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return with_overrides(buf.str());
}

ElementTable ElementTable::from_environment() {
  const char* path = std::getenv("CHEMGENUS_ELEMENTS");
  if (path == nullptr || *path == '\0')
    return builtin();
  return with_override_file(path);
}

const Element* ElementTable::find(std::string_view symbol) const {
  auto it = by_symbol_.find(symbol);
  return it == by_symbol_.end() ? nullptr : &it->second;
}

const Element& ElementTable::lookup(std::string_view symbol) const {
  if (const Element* e = find(symbol))
    return *e;
  fail(ErrorKind::UnknownElement, "unknown element symbol '" + std::string(symbol) + "'");
}

std::vector<Element> ElementTable::entries() const {
  std::vector<Element> out;
  out.reserve(by_symbol_.size());
  for (const auto& kv : by_symbol_)
    out.push_back(kv.second);
  return out;
}

} // namespace chemgenus
