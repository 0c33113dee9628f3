#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zipdata/equivalence.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata {

// Double quotient tau(E)\G/sigma(E) of one zip datum, with enough data to
// move an element onto the left coset tau(E) r of its representative r.
struct TwistedQuotient {
  std::vector<Elem> representatives;
  std::vector<std::uint32_t> coset_index;  // over the ambient carrier of G
  std::vector<Elem> right_witness;         // g sigma(w)^-1 lies in tau(E) r for w = right_witness[g]
  bool identity_override = false;          // trivial quotient whose key-minimal element is not 1

  std::size_t index_of(Elem g) const;
};

// Key-minimal representatives, except that a single-coset quotient is
// represented by the identity.
TwistedQuotient twisted_quotient(const ZipDatum& z);

struct ForestNode {
  std::size_t generation;
  Elem element;                       // x_n
  std::optional<std::size_t> parent;  // node index
  Elem accumulated;                   // x_n ... x_0
  bool stable;                        // tau surjective on Z_{n+1}^{accumulated}
  std::vector<std::size_t> children;
};

struct ClassificationPath {
  std::vector<Elem> entries;        // r_0, ..., r_N
  std::vector<std::size_t> nodes;   // the forest nodes visited
};

// Rooted forest of double quotient representatives, materialized up to the
// first generation N in which every node is stable. Past N every node has a
// single identity child, so later generations are copies of generation N.
class RepForest {
 public:
  const ZipDatum& datum() const noexcept { return datum_; }
  const std::vector<ForestNode>& nodes() const noexcept { return nodes_; }
  const ForestNode& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<std::vector<std::size_t>>& generations() const noexcept { return generations_; }
  std::size_t stationary_generation() const noexcept { return generations_.size() - 1; }
  std::span<const std::size_t> leaves() const noexcept { return generations_.back(); }
  std::span<const std::size_t> roots() const noexcept { return generations_.front(); }
  // Number of trivial double quotients whose key-minimal element is not the
  // identity; those nodes still use the identity as their only child.
  std::size_t identity_overrides() const noexcept { return identity_overrides_; }

  // Node data Z_{n+1}^{accumulated} for a node in generation n.
  const ZipDatum& node_datum(std::size_t i) const { return node_data_.at(i); }

  ClassificationPath path_to(std::size_t leaf) const;

 private:
  friend RepForest build_forest(const ZipDatum& z);
  friend ClassificationPath classify(const RepForest& f, Elem x);

  explicit RepForest(ZipDatum z) : datum_(std::move(z)) {}

  ZipDatum datum_;
  std::vector<ForestNode> nodes_;
  std::vector<ZipDatum> node_data_;
  std::vector<std::optional<TwistedQuotient>> node_quotients_;  // unstable nodes only
  std::optional<TwistedQuotient> root_quotient_;
  std::vector<std::vector<std::size_t>> generations_;
  std::size_t identity_overrides_ = 0;
};

RepForest build_forest(const ZipDatum& z);

// r_0 is the representative of x in tau(E)\G/sigma(E); each later entry
// represents the normalized remainder in the child quotient of the node reached.
ClassificationPath classify(const RepForest& f, Elem x);

// r_N ... r_0
Elem reconstruct(const RepForest& f, const ClassificationPath& p);

// classify is constant on oracle classes and separates them, the number of
// leaf paths equals the number of classes, and reconstruct(classify(x)) ~ x.
bool limit_bijection_check(const RepForest& f, const ClassReport& oracle);

// accumulated(child) = element(child) * accumulated(parent) everywhere.
bool parent_product_check(const RepForest& f);

// Leaves below each root equal the number of classes meeting its double coset.
bool root_class_count_check(const RepForest& f, const ClassReport& oracle);

// classify(reconstruct(path)) returns the same path for every leaf.
bool path_roundtrip_check(const RepForest& f);

}  // namespace zipdata
