#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zipdata/equivalence.hpp"
#include "zipdata/forest.hpp"
#include "zipdata/verification.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata {

inline constexpr int report_schema_version = 1;

// FNV-1a over the member keys, each followed by a newline, in key order.
std::uint64_t membership_digest(const Subgroup& s);
std::string digest_hex(std::uint64_t digest);

// All reports are pretty-printed JSON documents ending in a newline. Field
// order and element order are fixed, so equal inputs give equal bytes.
std::string trace_report(const RefinementTrace& trace, std::string_view label);
std::string infinity_report(const RefinementTrace& trace, std::string_view label);
std::string classes_report(const ClassReport& report, std::string_view label);
std::string forest_report(const RepForest& forest, std::string_view label);
std::string verification_report(const VerificationReport& report, std::string_view label);
std::string zoo_report(const std::vector<std::pair<std::string, VerificationReport>>& results);

// Directed graph, roots on the first rank. A node's id is the path of element
// keys from its root joined by '/', its label is its own key, and stable
// nodes are drawn with a double border.
std::string forest_dot(const RepForest& forest);

}  // namespace zipdata
