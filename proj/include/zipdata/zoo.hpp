#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zipdata/zip_datum.hpp"

namespace zipdata {

struct ZooEntry {
  std::string name;
  std::string description;
  ZipDatum datum;
};

// Small named zip data used as a test corpus. The order is fixed.
std::vector<ZooEntry> build_small_zoo();

std::vector<std::string> zoo_names();
std::optional<ZooEntry> find_zoo_entry(std::string_view name);

}  // namespace zipdata
