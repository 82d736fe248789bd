// Periodic-table facts: symbols and atomic numbers.
//
// Only neutral atoms are modelled, so the electron count of an element is
// its atomic number. The built-in table covers Z = 1..36; an override file
// can replace or add entries (used by tests to inject synthetic elements).

#ifndef CHEMGENUS_ELEMENTS_HPP_
#define CHEMGENUS_ELEMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace chemgenus {

// Atom and electron tallies. Protein-sized inputs with stoichiometric
// coefficients overflow 32 bits quickly.
using Count = std::int64_t;

struct Element {
  std::string symbol;
  int atomic_number = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

inline Count electron_count(const Element& e) { return e.atomic_number; }

class ElementTable {
public:
  // Table with the embedded elements H..Kr.
  static const ElementTable& builtin();

  // Builtin table plus the entries of an override document
  // (`SYMBOL ATOMIC_NUMBER` per line, `#` comments).
  static ElementTable with_overrides(std::string_view text);
  static ElementTable with_override_file(const std::filesystem::path& path);

  // Builtin table, or builtin plus the file named by CHEMGENUS_ELEMENTS
  // when that variable is set and non-empty.
  static ElementTable from_environment();

  // Throws Error(UnknownElement).
  const Element& lookup(std::string_view symbol) const;
  const Element* find(std::string_view symbol) const;

  // Entries ordered by symbol.
  std::vector<Element> entries() const;
  std::size_t size() const { return by_symbol_.size(); }

private:
  void set(Element e);
  std::map<std::string, Element, std::less<>> by_symbol_;
};

inline const Element& lookup_element(std::string_view symbol,
                                     const ElementTable& table = ElementTable::builtin()) {
  return table.lookup(symbol);
}

} // namespace chemgenus

#endif
