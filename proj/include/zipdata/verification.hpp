#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zipdata/zip_datum.hpp"

namespace zipdata {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds = 0;  // wall time, not part of any report
};

struct VerificationOptions {
  std::size_t groupoid_samples_per_root = 3;
  std::size_t twist_samples_per_root = 3;
  std::uint64_t seed = 0x7a1bda7aULL;
  CheckPolicy policy{};
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::size_t fine_class_count = 0;
  std::size_t coarse_class_count = 0;

  bool all_passed() const;
};

// Runs every structural cross-check on one datum. Exceptions raised by an
// individual check are recorded as a failure of that check.
VerificationReport run_verification(const ZipDatum& z, const VerificationOptions& options = {});

}  // namespace zipdata
