#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "interlace/ordinal.hpp"

namespace interlace {

/// A finite tree: a prefix-closed set of finite integer sequences. A
/// nonempty tree always contains the empty sequence (its root).
class FinTree {
 public:
  using Node = std::vector<std::int64_t>;

  FinTree() = default;
  /// Throws Error{kPrecondition} if `nodes` is not prefix-closed.
  explicit FinTree(std::set<Node> nodes);
  /// Adds every prefix of every given sequence.
  static FinTree prefix_closure(const std::vector<Node>& seqs);

  const std::set<Node>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  bool contains(const Node& s) const { return nodes_.contains(s); }

  friend bool operator==(const FinTree&, const FinTree&) = default;

 private:
  std::set<Node> nodes_;
};

/// Removes the maximal nodes (those without a proper extension in T).
FinTree tree_derivative(const FinTree& t);

/// Least r with T^(r) empty. For a nonempty finite tree this is its height
/// plus one.
std::size_t tree_rank(const FinTree& t);

/// {(n_1..n_k) : {n_i} in S_alpha, n_k <= N} together with the root.
FinTree schreier_tree(const OrdinalCNF& alpha, std::int64_t n);

}  // namespace interlace
