// Machine-readable (JSON) and human-readable renderings of results. Field
// names of the JSON trees are a stable interface.

#ifndef CHEMGENUS_REPORT_HPP_
#define CHEMGENUS_REPORT_HPP_

#include <string>
#include <vector>

#include "chemgenus/conservation.hpp"
#include "chemgenus/encoder.hpp"
#include "chemgenus/inverse.hpp"
#include "chemgenus/response.hpp"
#include "json.hpp"

namespace chemgenus {

using Tree = nlohmann::ordered_json;

Tree to_tree(const MoleculeEncoding& enc, const std::string& name);
Tree to_tree(const SideEncoding& enc, const std::string& side_text);
Tree to_tree(const ConservationReport& report);
Tree to_tree(const UnknownConstraints& c);
Tree to_tree(const CandidateComposition& c);
Tree to_tree(const Structure& s);

struct ResponseVerdict {
  double ratio = 0.0;
  double T = 0.0;
  double epsilon = 0.0;
  double horizon = 0.0;  // last sample time; the upper limit actually used
  bool meets_threshold = false;
};

Tree to_tree(const ResponseVerdict& v);

std::string describe(const MoleculeEncoding& enc, const std::string& name);
std::string describe(const SideEncoding& enc, const std::string& side_text);
std::string describe(const ConservationReport& report);
std::string describe(const UnknownConstraints& c);
std::string describe(const CandidateComposition& c);
std::string describe(const ResponseVerdict& v);

} // namespace chemgenus

#endif
