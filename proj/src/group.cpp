#include "zipdata/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <random>
#include <unordered_set>

#include "zipdata/errors.hpp"

namespace zipdata {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::cayley_table:
      return "cayley-table";
    case Backend::permutation:
      return "permutation";
    case Backend::matrix_mod:
      return "matrix-mod-m";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_integer(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw input_error("not an integer: '" + std::string(s) + "'");
  return v;
}

std::int64_t reduce(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

void FiniteGroup::finalize(std::size_t order, Elem identity) {
  order_ = order;
  identity_ = identity;
  inverse_.resize(order);
  for (Elem a = 0; a < order; ++a) inverse_[a] = compute_inverse(a);
  if (order <= tabulate_up_to) {
    std::vector<Elem> table(order * order);
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b) table[std::size_t{a} * order + b] = compute_product(a, b);
    table_ = std::move(table);
  }
}

Elem FiniteGroup::compute_inverse(Elem a) const {
  // a^-1 = a^(k-1) where k is the order of a
  Elem prev = identity_;
  Elem cur = a;
  for (std::size_t steps = 0; cur != identity_; ++steps) {
    if (steps > order_) throw invariant_violation("element powers never reach the identity");
    prev = cur;
    cur = compute_product(cur, a);
  }
  return prev;
}

void FiniteGroup::require_member(Elem a, std::string_view what) const {
  if (!contains(a))
    throw input_error(std::string(what) + ": element index " + std::to_string(a) +
                      " outside a group of order " + std::to_string(order_));
}

void FiniteGroup::check_axioms(const CheckPolicy& policy) const {
  auto fail = [&](const std::string& msg) { throw invariant_violation("group axiom: " + msg); };
  for (Elem a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) fail("identity law at " + format(a));
    if (mul(a, inv(a)) != identity_ || mul(inv(a), a) != identity_)
      fail("inverse law at " + format(a));
  }
  auto assoc = [&](Elem a, Elem b, Elem c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      fail("associativity at (" + format(a) + ", " + format(b) + ", " + format(c) + ")");
  };
  if (order_ <= policy.exhaustive_triples_up_to) {
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b)
        for (Elem c = 0; c < order_; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order_ - 1));
    for (std::size_t i = 0; i < policy.samples; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

// ---------------------------------------------------------------------------
// CayleyGroup

CayleyGroup::CayleyGroup(std::vector<Elem> flat, std::size_t n)
    : FiniteGroup(Backend::cayley_table), flat_(std::move(flat)), n_(n) {}

std::shared_ptr<const CayleyGroup> CayleyGroup::create(std::vector<std::vector<Elem>> table,
                                                       const CheckPolicy& policy) {
  const std::size_t n = table.size();
  if (n == 0) throw input_error("cayley table is empty");
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw input_error("cayley table row " + std::to_string(r) + " has wrong length");
    for (Elem v : table[r]) {
      if (v >= n) throw input_error("cayley table entry out of range in row " + std::to_string(r));
      flat.push_back(v);
    }
  }
  // Latin square: every row and column is a permutation.
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> row_seen(n), col_seen(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (row_seen[flat[r * n + c]] || col_seen[flat[c * n + r]])
        throw input_error("cayley table is not a latin square (line " + std::to_string(r) + ")");
      row_seen[flat[r * n + c]] = true;
      col_seen[flat[c * n + r]] = true;
    }
  }
  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = flat[e * n + a] == a && flat[a * n + e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw input_error("cayley table has no identity element");

  std::shared_ptr<CayleyGroup> g(new CayleyGroup(std::move(flat), n));
  g->finalize(n, *identity);
  try {
    g->check_axioms(policy);
  } catch (const invariant_violation& e) {
    throw input_error(std::string("cayley table: ") + e.what());
  }
  return g;
}

Elem CayleyGroup::compute_product(Elem a, Elem b) const { return flat_[std::size_t{a} * n_ + b]; }

std::string CayleyGroup::format(Elem a) const { return std::to_string(a); }

Elem CayleyGroup::parse(std::string_view text) const {
  const std::int64_t v = parse_integer(text);
  if (v < 0 || static_cast<std::size_t>(v) >= n_)
    throw input_error("cayley element out of range: '" + std::string(text) + "'");
  return static_cast<Elem>(v);
}

// ---------------------------------------------------------------------------
// PermutationGroup

namespace {

std::u16string perm_key(std::span<const std::uint16_t> images) {
  return std::u16string(images.begin(), images.end());
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Images> sorted)
    : FiniteGroup(Backend::permutation), degree_(degree) {
  images_.reserve(sorted.size() * degree);
  for (Elem i = 0; i < sorted.size(); ++i) {
    images_.insert(images_.end(), sorted[i].begin(), sorted[i].end());
    index_.emplace(perm_key(sorted[i]), i);
  }
  Images id(degree);
  std::iota(id.begin(), id.end(), 0);
  finalize(sorted.size(), index_.at(perm_key(id)));
}

std::shared_ptr<const PermutationGroup> PermutationGroup::generated(
    std::size_t degree, const std::vector<Images>& generators, std::size_t max_order) {
  if (degree == 0 || degree > 0xffff) throw input_error("permutation degree out of range");
  for (const auto& g : generators) {
    if (g.size() != degree) throw input_error("generator has wrong degree");
    std::vector<bool> seen(degree);
    for (auto v : g) {
      if (v >= degree || seen[v]) throw input_error("generator is not a permutation");
      seen[v] = true;
    }
  }
  Images id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::unordered_set<std::u16string> seen{perm_key(id)};
  std::vector<Images> all{id};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& g : generators) {
      Images next(degree);
      for (std::size_t p = 0; p < degree; ++p) next[p] = all[i][g[p]];  // all[i] * g
      if (seen.insert(perm_key(next)).second) {
        all.push_back(std::move(next));
        if (all.size() > max_order)
          throw resource_limit("permutation group exceeds order limit " +
                               std::to_string(max_order));
      }
    }
  }
  std::sort(all.begin(), all.end());
  return std::shared_ptr<const PermutationGroup>(new PermutationGroup(degree, std::move(all)));
}

std::shared_ptr<const PermutationGroup> PermutationGroup::symmetric(std::size_t degree) {
  std::vector<Images> gens;
  if (degree >= 2) {
    Images swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t p = 0; p < degree; ++p) cycle[p] = static_cast<std::uint16_t>((p + 1) % degree);
    gens = {swap, cycle};
  }
  return generated(degree, gens);
}

std::optional<Elem> PermutationGroup::find(std::span<const std::uint16_t> images) const {
  auto it = index_.find(perm_key(images));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem PermutationGroup::compute_product(Elem a, Elem b) const {
  Images out(degree_);
  auto ia = images(a);
  auto ib = images(b);
  for (std::size_t p = 0; p < degree_; ++p) out[p] = ia[ib[p]];
  auto found = find(out);
  if (!found) throw invariant_violation("permutation product leaves the carrier");
  return *found;
}

Elem PermutationGroup::compute_inverse(Elem a) const {
  Images out(degree_);
  auto ia = images(a);
  for (std::size_t p = 0; p < degree_; ++p) out[ia[p]] = static_cast<std::uint16_t>(p);
  auto found = find(out);
  if (!found) throw invariant_violation("permutation inverse leaves the carrier");
  return *found;
}

std::string PermutationGroup::format(Elem a) const {
  auto im = images(a);
  std::vector<bool> done(degree_);
  std::string out;
  for (std::size_t start = 0; start < degree_; ++start) {
    if (done[start] || im[start] == start) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out += ',';
      out += std::to_string(p + 1);
      first = false;
      p = im[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermutationGroup::Images PermutationGroup::parse_cycles(std::string_view text, std::size_t degree) {
  Images result(degree);
  std::iota(result.begin(), result.end(), 0);
  const std::string_view whole = text;
  text = trim(text);
  auto bad = [&](const std::string& why) {
    return input_error("bad permutation '" + std::string(whole) + "': " + why);
  };
  while (!text.empty()) {
    if (text.front() != '(') throw bad("expected '('");
    auto close = text.find(')');
    if (close == std::string_view::npos) throw bad("unbalanced parenthesis");
    std::string_view body = trim(text.substr(1, close - 1));
    text = trim(text.substr(close + 1));

    std::vector<std::size_t> points;
    if (!body.empty()) {
      if (body.find(',') == std::string_view::npos && degree <= 9 && body.size() > 1 &&
          body.find(' ') == std::string_view::npos) {
        for (char ch : body) {
          if (ch < '1' || ch > '9') throw bad("unexpected character");
          points.push_back(static_cast<std::size_t>(ch - '0'));
        }
      } else {
        std::size_t pos = 0;
        while (pos <= body.size()) {
          auto comma = body.find(',', pos);
          if (comma == std::string_view::npos) comma = body.size();
          points.push_back(static_cast<std::size_t>(parse_integer(body.substr(pos, comma - pos))));
          pos = comma + 1;
        }
      }
    }
    std::vector<bool> in_cycle(degree + 1);
    for (auto p : points) {
      if (p < 1 || p > degree) throw bad("point " + std::to_string(p) + " out of range");
      if (in_cycle[p]) throw bad("repeated point in cycle");
      in_cycle[p] = true;
    }
    // result = result o cycle
    Images cycle(degree);
    std::iota(cycle.begin(), cycle.end(), 0);
    for (std::size_t i = 0; i < points.size(); ++i)
      cycle[points[i] - 1] = static_cast<std::uint16_t>(points[(i + 1) % points.size()] - 1);
    Images next(degree);
    for (std::size_t p = 0; p < degree; ++p) next[p] = result[cycle[p]];
    result = std::move(next);
  }
  return result;
}

Elem PermutationGroup::parse(std::string_view text) const {
  auto im = parse_cycles(text, degree_);
  auto found = find(im);
  if (!found) throw input_error("permutation '" + std::string(text) + "' is not in the group");
  return *found;
}

// ---------------------------------------------------------------------------
// MatrixGroup

namespace {

constexpr std::uint64_t dense_index_limit = std::uint64_t{1} << 22;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  // operands are below 2^31, so the product fits
  return a * b % m;
}

std::int64_t det_rec(std::span<const std::int64_t> a, std::size_t dim, std::vector<std::size_t>& rows,
                     std::vector<bool>& used, std::size_t col, std::int64_t m) {
  if (col == dim) return 1 % m;
  std::int64_t total = 0;
  int sign = 1;
  for (std::size_t r = 0; r < dim; ++r) {
    if (used[r]) continue;
    if (a[r * dim + col] != 0) {
      used[r] = true;
      std::int64_t minor = det_rec(a, dim, rows, used, col + 1, m);
      used[r] = false;
      std::int64_t term = mulmod(a[r * dim + col], minor, m);
      total = reduce(total + (sign > 0 ? term : -term), m);
    }
    sign = -sign;
  }
  return total;
}

void validate_shape(std::size_t dim, std::int64_t modulus) {
  if (dim == 0 || dim > 6) throw input_error("matrix dimension must be between 1 and 6");
  if (modulus < 2 || modulus > (std::int64_t{1} << 31))
    throw input_error("matrix modulus must be between 2 and 2^31");
}

std::uint64_t code_space(std::size_t dim, std::int64_t modulus) {
  // m^(d*d), saturating at 2^63
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim * dim; ++i) {
    if (total > (std::uint64_t{1} << 63) / static_cast<std::uint64_t>(modulus))
      return std::uint64_t{1} << 63;
    total *= static_cast<std::uint64_t>(modulus);
  }
  return total;
}

MatrixGroup::Entries decode(std::uint64_t code, std::size_t dim, std::int64_t m) {
  MatrixGroup::Entries e(dim * dim);
  for (std::size_t k = dim * dim; k-- > 0;) {
    e[k] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(m));
    code /= static_cast<std::uint64_t>(m);
  }
  return e;
}

std::uint64_t encode(std::span<const std::int64_t> e, std::int64_t m) {
  std::uint64_t code = 0;
  for (auto v : e) code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v);
  return code;
}

MatrixGroup::Entries multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                              std::size_t d, std::int64_t m) {
  MatrixGroup::Entries c(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s = (s + a[i * d + k] * b[k * d + j] % m) % m;
      c[i * d + j] = s;
    }
  return c;
}

}  // namespace

std::int64_t MatrixGroup::determinant(std::span<const std::int64_t> entries, std::size_t dim,
                                      std::int64_t modulus) {
  std::vector<std::size_t> rows;
  std::vector<bool> used(dim);
  return det_rec(entries, dim, rows, used, 0, modulus);
}

MatrixGroup::MatrixGroup(std::size_t dim, std::int64_t modulus, std::vector<std::uint64_t> sorted_codes)
    : FiniteGroup(Backend::matrix_mod), dim_(dim), modulus_(modulus) {
  const std::uint64_t space = code_space(dim, modulus);
  if (space <= dense_index_limit) dense_index_.assign(space, no_elem);
  entries_.reserve(sorted_codes.size() * dim * dim);
  for (Elem i = 0; i < sorted_codes.size(); ++i) {
    auto e = decode(sorted_codes[i], dim, modulus);
    entries_.insert(entries_.end(), e.begin(), e.end());
    if (!dense_index_.empty())
      dense_index_[sorted_codes[i]] = i;
    else
      sparse_index_.emplace(sorted_codes[i], i);
  }
  Entries id(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
  auto identity = find(id);
  if (!identity) throw invariant_violation("matrix carrier lacks the identity");
  finalize(sorted_codes.size(), *identity);
}

std::uint64_t MatrixGroup::code_of(std::span<const std::int64_t> entries) const {
  return encode(entries, modulus_);
}

std::optional<Elem> MatrixGroup::find(std::span<const std::int64_t> entries) const {
  if (entries.size() != dim_ * dim_) return std::nullopt;
  for (auto v : entries)
    if (v < 0 || v >= modulus_) return std::nullopt;
  const std::uint64_t code = code_of(entries);
  if (!dense_index_.empty()) {
    Elem e = dense_index_[code];
    if (e == no_elem) return std::nullopt;
    return e;
  }
  auto it = sparse_index_.find(code);
  if (it == sparse_index_.end()) return std::nullopt;
  return it->second;
}

Elem MatrixGroup::compute_product(Elem a, Elem b) const {
  const auto x = entries(a);
  const auto y = entries(b);
  const std::size_t d = dim_;
  const auto m = static_cast<std::uint64_t>(modulus_);
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < d; ++k) s = (s + x[i * d + k] * y[k * d + j] % modulus_) % modulus_;
      code = code * m + static_cast<std::uint64_t>(s);
    }
  if (!dense_index_.empty()) {
    const Elem e = dense_index_[code];
    if (e != no_elem) return e;
  } else if (auto it = sparse_index_.find(code); it != sparse_index_.end()) {
    return it->second;
  }
  throw invariant_violation("matrix product leaves the carrier");
}

std::shared_ptr<const MatrixGroup> MatrixGroup::generated(std::size_t dim, std::int64_t modulus,
                                                          const std::vector<Entries>& generators,
                                                          std::size_t max_order) {
  validate_shape(dim, modulus);
  std::vector<Entries> gens;
  for (const auto& g : generators) {
    if (g.size() != dim * dim) throw input_error("matrix generator has wrong size");
    Entries r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = reduce(g[i], modulus);
    if (std::gcd(determinant(r, dim, modulus), modulus) != 1)
      throw input_error("matrix generator is not invertible modulo " + std::to_string(modulus));
    gens.push_back(std::move(r));
  }
  Entries id(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1 % modulus;
  std::unordered_set<std::uint64_t> seen{encode(id, modulus)};
  std::vector<Entries> frontier{id};
  std::vector<std::uint64_t> codes{encode(id, modulus)};
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const auto& g : gens) {
      auto next = multiply(frontier[i], g, dim, modulus);
      auto code = encode(next, modulus);
      if (seen.insert(code).second) {
        codes.push_back(code);
        frontier.push_back(std::move(next));
        if (codes.size() > max_order)
          throw resource_limit("matrix group exceeds order limit " + std::to_string(max_order));
      }
    }
  }
  std::sort(codes.begin(), codes.end());
  return std::shared_ptr<const MatrixGroup>(new MatrixGroup(dim, modulus, std::move(codes)));
}

std::shared_ptr<const MatrixGroup> MatrixGroup::general_linear(
    std::size_t dim, std::int64_t modulus, const std::vector<Congruence>& congruences,
    std::size_t max_order, const CheckPolicy& policy) {
  validate_shape(dim, modulus);
  for (const auto& c : congruences)
    if (c.row >= dim || c.col >= dim || c.divisor < 1)
      throw input_error("matrix congruence out of range");
  const std::uint64_t space = code_space(dim, modulus);
  if (space > (std::uint64_t{1} << 34))
    throw resource_limit("general linear enumeration space too large");
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < space; ++code) {
    auto e = decode(code, dim, modulus);
    bool ok = true;
    for (const auto& c : congruences) ok = ok && e[c.row * dim + c.col] % c.divisor == 0;
    if (!ok || std::gcd(determinant(e, dim, modulus), modulus) != 1) continue;
    codes.push_back(code);
    if (codes.size() > max_order)
      throw resource_limit("matrix group exceeds order limit " + std::to_string(max_order));
  }
  std::shared_ptr<const MatrixGroup> g;
  try {
    g.reset(new MatrixGroup(dim, modulus, std::move(codes)));
    const std::size_t n = g->order();
    if (n <= policy.exhaustive_pairs_up_to) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) g->mul(a, b);
    } else {
      std::mt19937_64 rng(policy.seed);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
      for (std::size_t i = 0; i < policy.samples; ++i) g->mul(pick(rng), pick(rng));
    }
  } catch (const invariant_violation&) {
    throw input_error("congruence conditions do not define a subgroup");
  }
  return g;
}

std::string MatrixGroup::format(Elem a) const {
  auto e = entries(a);
  std::string out = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out += ',';
      out += std::to_string(e[i * dim_ + j]);
    }
  }
  return out + "]";
}

MatrixGroup::Entries MatrixGroup::parse_entries(std::string_view text, std::size_t dim,
                                                std::int64_t modulus) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw input_error("bad matrix '" + std::string(whole) + "': expected [a,b;c,d] form");
  text = text.substr(1, text.size() - 2);
  Entries out;
  std::size_t rows = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    if (semi == std::string_view::npos) semi = text.size();
    std::string_view row = text.substr(pos, semi - pos);
    std::size_t cols = 0;
    std::size_t rp = 0;
    while (rp <= row.size()) {
      auto comma = row.find(',', rp);
      if (comma == std::string_view::npos) comma = row.size();
      out.push_back(reduce(parse_integer(row.substr(rp, comma - rp)), modulus));
      ++cols;
      rp = comma + 1;
    }
    if (cols != dim)
      throw input_error("bad matrix '" + std::string(whole) + "': row has wrong length");
    ++rows;
    pos = semi + 1;
  }
  if (rows != dim) throw input_error("bad matrix '" + std::string(whole) + "': wrong row count");
  return out;
}

Elem MatrixGroup::parse(std::string_view text) const {
  auto e = parse_entries(text, dim_, modulus_);
  auto found = find(e);
  if (!found) throw input_error("matrix '" + std::string(text) + "' is not in the group");
  return *found;
}

}  // namespace zipdata
