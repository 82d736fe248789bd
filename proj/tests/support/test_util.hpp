#ifndef CHEMGENUS_TEST_UTIL_HPP_
#define CHEMGENUS_TEST_UTIL_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include "chemgenus/error.hpp"
#include "chemgenus/formats.hpp"

namespace chemgenus::test {

template <class F>
std::optional<ErrorKind> kind_thrown(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::filesystem::path corpus(const std::string& name) {
  return std::filesystem::path(CHEMGENUS_CORPUS_DIR) / name;
}

inline Registry corpus_registry(const std::string& name) {
  return Registry(load_document(corpus(name)).molecules);
}

} // namespace chemgenus::test

#endif
