#include "interlace/tree.hpp"

#include "interlace/error.hpp"
#include "interlace/schreier.hpp"

namespace interlace {

FinTree::FinTree(std::set<Node> nodes) : nodes_(std::move(nodes)) {
  for (const auto& s : nodes_) {
    if (s.empty()) continue;
    Node parent(s.begin(), std::prev(s.end()));
    if (!nodes_.contains(parent)) {
      throw Error(ErrorCode::kPrecondition, "tree is not prefix-closed: a node of length " +
                                                std::to_string(s.size()) + " lacks its parent");
    }
  }
}

FinTree FinTree::prefix_closure(const std::vector<Node>& seqs) {
  std::set<Node> nodes;
  for (const auto& s : seqs) {
    for (std::size_t len = 0; len <= s.size(); ++len) nodes.emplace(s.begin(), s.begin() + len);
  }
  return FinTree(std::move(nodes));
}

FinTree tree_derivative(const FinTree& t) {
  std::set<FinTree::Node> kept;
  for (const auto& s : t.nodes()) {
    if (!s.empty()) kept.emplace(s.begin(), std::prev(s.end()));
  }
  return FinTree(std::move(kept));
}

std::size_t tree_rank(const FinTree& t) {
  std::size_t rank = 0;
  for (FinTree cur = t; !cur.empty(); cur = tree_derivative(cur)) ++rank;
  return rank;
}

FinTree schreier_tree(const OrdinalCNF& alpha, std::int64_t n) {
  std::set<FinTree::Node> nodes;
  for (const auto& s : schreier_enumerate(alpha, n)) nodes.emplace(s.begin(), s.end());
  // Schreier families are closed under initial segments, so this is already
  // a tree; prefix_closure keeps it one even for exotic inputs.
  return FinTree::prefix_closure({nodes.begin(), nodes.end()});
}

}  // namespace interlace
