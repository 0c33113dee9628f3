#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zipdata {

// Elements of a FiniteGroup are indices into its carrier. The carrier is
// sorted by the backend's canonical key, so comparing indices compares keys
// and the smallest index of a set is its key-minimal element.
using Elem = std::uint32_t;

inline constexpr Elem no_elem = static_cast<Elem>(-1);

enum class Backend { cayley_table, permutation, matrix_mod };

std::string_view to_string(Backend b);

// Sizes above which axiom and homomorphism checks switch from exhaustive
// enumeration to random sampling.
struct CheckPolicy {
  std::size_t exhaustive_pairs_up_to = 4096;
  std::size_t exhaustive_triples_up_to = 128;
  std::size_t samples = 100000;
  std::uint64_t seed = 0x7a1bda7aULL;
};

class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  Backend backend() const noexcept { return backend_; }
  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  bool contains(Elem a) const noexcept { return a < order_; }

  Elem mul(Elem a, Elem b) const {
    return table_.empty() ? compute_product(a, b) : table_[std::size_t{a} * order_ + b];
  }
  Elem inv(Elem a) const { return inverse_[a]; }
  // x * h * x^-1
  Elem conj(Elem x, Elem h) const { return mul(mul(x, h), inverse_[x]); }

  // Canonical text form of an element; this is the element's key as printed
  // in configs and reports.
  virtual std::string format(Elem a) const = 0;
  // Throws input_error when the text is malformed or names a non-member.
  virtual Elem parse(std::string_view text) const = 0;

  // Closure, identity, inverse and associativity laws. Throws
  // invariant_violation on the first failure.
  void check_axioms(const CheckPolicy& policy = {}) const;

  // Throws input_error unless a is in the carrier.
  void require_member(Elem a, std::string_view what) const;

 protected:
  explicit FiniteGroup(Backend backend) : backend_(backend) {}

  // Called by subclasses once the carrier is in place.
  void finalize(std::size_t order, Elem identity);

  virtual Elem compute_product(Elem a, Elem b) const = 0;
  virtual Elem compute_inverse(Elem a) const;

 private:
  static constexpr std::size_t tabulate_up_to = 4096;

  Backend backend_;
  std::size_t order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::vector<Elem> table_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Group given by its full multiplication table over labels 0..n-1.
class CayleyGroup final : public FiniteGroup {
 public:
  static std::shared_ptr<const CayleyGroup> create(std::vector<std::vector<Elem>> table,
                                                   const CheckPolicy& policy = {});
  std::string format(Elem a) const override;
  Elem parse(std::string_view text) const override;

 private:
  explicit CayleyGroup(std::vector<Elem> flat, std::size_t n);
  Elem compute_product(Elem a, Elem b) const override;

  std::vector<Elem> flat_;
  std::size_t n_;
};

// Permutations of {1..degree}, composed right to left: (a*b)(i) = a(b(i)).
// Keys order permutations lexicographically by their image lists.
class PermutationGroup final : public FiniteGroup {
 public:
  using Images = std::vector<std::uint16_t>;  // 0-based images

  static std::shared_ptr<const PermutationGroup> generated(
      std::size_t degree, const std::vector<Images>& generators,
      std::size_t max_order = 1'000'000);
  static std::shared_ptr<const PermutationGroup> symmetric(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::span<const std::uint16_t> images(Elem a) const {
    return {images_.data() + std::size_t{a} * degree_, degree_};
  }
  std::optional<Elem> find(std::span<const std::uint16_t> images) const;

  std::string format(Elem a) const override;
  Elem parse(std::string_view text) const override;

  // Cycle notation -> image list, independent of any group.
  static Images parse_cycles(std::string_view text, std::size_t degree);

 private:
  PermutationGroup(std::size_t degree, std::vector<Images> sorted);
  Elem compute_product(Elem a, Elem b) const override;
  Elem compute_inverse(Elem a) const override;

  std::size_t degree_;
  std::vector<std::uint16_t> images_;
  std::unordered_map<std::u16string, Elem> index_;
};

// Invertible dim x dim matrices over Z/modulus. Keys order matrices
// lexicographically by their row-major entries.
class MatrixGroup final : public FiniteGroup {
 public:
  using Entries = std::vector<std::int64_t>;  // row-major, reduced into [0, modulus)

  // Closure of the generators inside GL_dim(Z/modulus).
  static std::shared_ptr<const MatrixGroup> generated(std::size_t dim, std::int64_t modulus,
                                                      const std::vector<Entries>& generators,
                                                      std::size_t max_order = 1'000'000);

  // One congruence condition: entry (row, col) is divisible by divisor.
  struct Congruence {
    std::size_t row;
    std::size_t col;
    std::int64_t divisor;
  };

  // All invertible matrices satisfying every congruence. Throws input_error
  // if the result is not closed under multiplication.
  static std::shared_ptr<const MatrixGroup> general_linear(
      std::size_t dim, std::int64_t modulus, const std::vector<Congruence>& congruences = {},
      std::size_t max_order = 1'000'000, const CheckPolicy& policy = {});

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::span<const std::int64_t> entries(Elem a) const {
    return {entries_.data() + std::size_t{a} * dim_ * dim_, dim_ * dim_};
  }
  std::optional<Elem> find(std::span<const std::int64_t> entries) const;

  std::string format(Elem a) const override;
  Elem parse(std::string_view text) const override;

  // "[a,b;c,d]" -> reduced row-major entries.
  static Entries parse_entries(std::string_view text, std::size_t dim, std::int64_t modulus);
  static std::int64_t determinant(std::span<const std::int64_t> entries, std::size_t dim,
                                  std::int64_t modulus);

 private:
  MatrixGroup(std::size_t dim, std::int64_t modulus, std::vector<std::uint64_t> sorted_codes);
  Elem compute_product(Elem a, Elem b) const override;
  std::uint64_t code_of(std::span<const std::int64_t> entries) const;

  std::size_t dim_;
  std::int64_t modulus_;
  std::vector<std::int64_t> entries_;
  std::vector<Elem> dense_index_;  // code -> element, when the code space is small
  std::unordered_map<std::uint64_t, Elem> sparse_index_;
};

}  // namespace zipdata
