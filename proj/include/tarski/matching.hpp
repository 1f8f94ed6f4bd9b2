#pragma once

#include <vector>

namespace tarski {

/// Maximum bipartite matching by Hopcroft-Karp phases (layered BFS, then
/// vertex-disjoint augmenting paths by DFS).
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left, int right);

  void add_edge(int l, int r);
  int solve();

  int left_size() const noexcept { return static_cast<int>(adj_.size()); }
  /// Partner of each left vertex, -1 if unmatched. Valid after solve().
  const std::vector<int>& match_left() const noexcept { return match_l_; }
  const std::vector<int>& match_right() const noexcept { return match_r_; }

  /// Left vertices reachable from unmatched left vertices by alternating
  /// paths. When the matching is not left-saturating this set has fewer
  /// neighbours than members (Konig).
  std::vector<int> deficient_left() const;
  std::vector<int> neighbours(const std::vector<int>& left) const;

 private:
  bool bfs();
  bool dfs(int l);

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_l_, match_r_, layer_;
  int right_;
};

}  // namespace tarski
