#include "zipdata/witt.hpp"

#include <string>

#include "zipdata/errors.hpp"

namespace zipdata {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t power(std::int64_t p, int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

}  // namespace

void validate(const WittZipConfig& c) {
  if (!is_prime(c.p)) throw input_error("witt p must be prime, got " + std::to_string(c.p));
  if (c.n < 2) throw input_error("witt n must be at least 2, got " + std::to_string(c.n));
  std::int64_t q = 1;
  for (int i = 0; i < c.n; ++i) {
    if (q > (std::int64_t{1} << 31) / c.p) throw input_error("witt p^n exceeds 2^31");
    q *= c.p;
  }
}

Subgroup lower_left_divisible(const std::shared_ptr<const MatrixGroup>& g, std::int64_t divisor) {
  if (g->dim() != 2) throw input_error("lower-left condition needs 2x2 matrices");
  std::vector<Elem> members;
  for (Elem a = 0; a < g->order(); ++a)
    if (g->entries(a)[2] % divisor == 0) members.push_back(a);
  return Subgroup::trusted(g, std::move(members));
}

WittZip build_witt_zip(const WittZipConfig& c, std::size_t max_order) {
  validate(c);
  const std::int64_t p = c.p;
  const std::int64_t top = power(p, c.n);
  const std::int64_t low = power(p, c.n - 1);
  auto e_group = MatrixGroup::general_linear(2, top, {{1, 0, p}}, max_order);
  auto g_group = MatrixGroup::general_linear(2, low, {}, max_order);

  auto lookup = [&](const MatrixGroup::Entries& m) {
    auto found = g_group->find(m);
    if (!found) throw invariant_violation("reduced matrix is not invertible");
    return *found;
  };
  auto tau = Homomorphism::from_function(e_group, g_group, [&](Elem a) {
    auto e = e_group->entries(a);
    return lookup({e[0] % low, e[1] % low, e[2] % low, e[3] % low});
  });
  // The lower-left entry is known mod p^n, so its quotient by p is known mod p^(n-1).
  auto sigma = Homomorphism::from_function(e_group, g_group, [&](Elem a) {
    auto e = e_group->entries(a);
    return lookup({e[0] % low, (p * e[1]) % low, (e[2] / p) % low, e[3] % low});
  });
  ZipDatum datum = ZipDatum::from_homomorphisms(std::move(tau), std::move(sigma));
  const Elem twist_element = lookup({0, 1, 1, 0});
  return {std::move(datum), twist_element, std::move(e_group), std::move(g_group)};
}

}  // namespace zipdata
