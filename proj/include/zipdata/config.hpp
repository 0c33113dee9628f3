#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "zipdata/errors.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata {

inline constexpr int config_schema_version = 1;

// A config problem, with the JSON path of the offending value in the message.
class config_error : public input_error {
 public:
  config_error(const std::string& path, const std::string& message)
      : input_error(path + ": " + message), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct LoadOptions {
  std::size_t max_order = 20000;
  std::optional<std::string> twist;  // replaces the config's own twist
};

struct LoadedConfig {
  ZipDatum datum;  // already twisted when the config names a twist
  std::string label;
  std::optional<std::string> twist;
};

// Config documents:
//   { "schema_version": 1, "datum": <datum>, "twist": "<element of G>" }
// where <datum> is one of
//   { "preset": "witt", "p": 2, "n": 2 }
//   { "zoo": "<name>" }
//   { "source": <group>, "target": <group> | "source", "tau": <hom>, "sigma": <hom>,
//     "E": [<generators>], "G": [<generators>] }      (E and G optional)
// <group> is one of
//   { "backend": "cayley-table", "table": [[...], ...] }
//   { "backend": "permutation", "degree": k, "generators": ["(1,2)", ...] | "symmetric": true }
//   { "backend": "matrix-mod-m", "dimension": d, "modulus": m,
//     "generators": ["[1,1;0,1]", ...] | "general_linear": true,
//     "congruences": [{ "row": 1, "col": 0, "divisor": 2 }] }
// <hom> is one of
//   { "kind": "table", "images": [["<source>", "<target>"], ...] }       (every element)
//   { "kind": "generator-images", "images": [["<generator>", "<image>"], ...] }
//   { "kind": "preset", "name": "identity" | "trivial" | "inclusion" | "reduction" | "witt-sigma" }
LoadedConfig load_config_text(std::string_view text, const LoadOptions& options = {});
LoadedConfig load_config_file(const std::filesystem::path& path, const LoadOptions& options = {});

// Twists by the element of G written in canonical text.
ZipDatum apply_twist(const ZipDatum& z, std::string_view literal);

}  // namespace zipdata
