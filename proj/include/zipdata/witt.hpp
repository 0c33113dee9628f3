#pragma once

#include <cstdint>
#include <memory>

#include "zipdata/group.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata {

// Finite model of GL_2 over the Witt vectors of F_p, truncated at level n.
struct WittZipConfig {
  std::int64_t p = 2;
  int n = 2;
};

// Throws input_error unless p is prime and n >= 2.
void validate(const WittZipConfig& c);

struct WittZip {
  ZipDatum datum;
  Elem twist_element;  // antidiagonal(1,1) in G
  std::shared_ptr<const MatrixGroup> e_group;
  std::shared_ptr<const MatrixGroup> g_group;
};

// E = { A in GL_2(Z/p^n) : A[1][0] = 0 mod p }, G = GL_2(Z/p^(n-1)),
// tau = reduction, sigma(a b; pc d) = (a pb; c d) reduced mod p^(n-1).
WittZip build_witt_zip(const WittZipConfig& c, std::size_t max_order = 1'000'000);

// { A in the group : A[1][0] = 0 mod divisor }
Subgroup lower_left_divisible(const std::shared_ptr<const MatrixGroup>& g, std::int64_t divisor);

}  // namespace zipdata
