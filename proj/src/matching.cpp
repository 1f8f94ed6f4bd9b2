#include "tarski/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace tarski {

BipartiteMatcher::BipartiteMatcher(int left, int right)
    : adj_(static_cast<std::size_t>(left)),
      match_l_(static_cast<std::size_t>(left), -1),
      match_r_(static_cast<std::size_t>(right), -1),
      layer_(static_cast<std::size_t>(left), 0),
      right_(right) {}

void BipartiteMatcher::add_edge(int l, int r) { adj_[static_cast<std::size_t>(l)].push_back(r); }

bool BipartiteMatcher::bfs() {
  constexpr int inf = std::numeric_limits<int>::max();
  std::queue<int> q;
  for (std::size_t l = 0; l < adj_.size(); ++l) {
    layer_[l] = match_l_[l] == -1 ? 0 : inf;
    if (match_l_[l] == -1) q.push(static_cast<int>(l));
  }
  bool found = false;
  while (!q.empty()) {
    int l = q.front();
    q.pop();
    for (int r : adj_[static_cast<std::size_t>(l)]) {
      int m = match_r_[static_cast<std::size_t>(r)];
      if (m == -1) {
        found = true;
      } else if (layer_[static_cast<std::size_t>(m)] == inf) {
        layer_[static_cast<std::size_t>(m)] = layer_[static_cast<std::size_t>(l)] + 1;
        q.push(m);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::dfs(int l) {
  for (int r : adj_[static_cast<std::size_t>(l)]) {
    int m = match_r_[static_cast<std::size_t>(r)];
    if (m == -1 || (layer_[static_cast<std::size_t>(m)] == layer_[static_cast<std::size_t>(l)] + 1 && dfs(m))) {
      match_l_[static_cast<std::size_t>(l)] = r;
      match_r_[static_cast<std::size_t>(r)] = l;
      return true;
    }
  }
  layer_[static_cast<std::size_t>(l)] = std::numeric_limits<int>::max();
  return false;
}

int BipartiteMatcher::solve() {
  while (bfs())
    for (std::size_t l = 0; l < adj_.size(); ++l)
      if (match_l_[l] == -1) dfs(static_cast<int>(l));
  return static_cast<int>(std::count_if(match_l_.begin(), match_l_.end(), [](int r) { return r != -1; }));
}

std::vector<int> BipartiteMatcher::deficient_left() const {
  std::vector<char> seen_l(adj_.size(), 0), seen_r(static_cast<std::size_t>(right_), 0);
  std::vector<int> q;
  for (std::size_t l = 0; l < adj_.size(); ++l)
    if (match_l_[l] == -1) {
      seen_l[l] = 1;
      q.push_back(static_cast<int>(l));
    }
  for (std::size_t i = 0; i < q.size(); ++i)
    for (int r : adj_[static_cast<std::size_t>(q[i])]) {
      if (seen_r[static_cast<std::size_t>(r)]) continue;
      seen_r[static_cast<std::size_t>(r)] = 1;
      int m = match_r_[static_cast<std::size_t>(r)];
      if (m != -1 && !seen_l[static_cast<std::size_t>(m)]) {
        seen_l[static_cast<std::size_t>(m)] = 1;
        q.push_back(m);
      }
    }
  std::sort(q.begin(), q.end());
  return q;
}

std::vector<int> BipartiteMatcher::neighbours(const std::vector<int>& left) const {
  std::vector<int> out;
  for (int l : left) out.insert(out.end(), adj_[static_cast<std::size_t>(l)].begin(), adj_[static_cast<std::size_t>(l)].end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tarski
