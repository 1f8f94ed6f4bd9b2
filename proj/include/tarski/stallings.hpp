#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tarski/freewords.hpp"

namespace tarski {

/// A geometric edge `from --gen--> to` (positive label).
struct Edge {
  int from = 0;
  int to = 0;
  int gen = 0;
  bool operator==(const Edge&) const = default;
};

/// Folded, trimmed, base-pointed labeled graph. The base is always vertex 0
/// and vertices are numbered in BFS order (slots visited in letter order).
class CoreGraph {
 public:
  CoreGraph() = default;
  CoreGraph(Alphabet alphabet, int vertices);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int vertex_count() const noexcept { return slots() ? static_cast<int>(next_.size()) / slots() : 0; }
  int base() const noexcept { return 0; }

  /// -1 when the transition is absent.
  int target(int v, Letter l) const { return next_[static_cast<std::size_t>(v * slots() + l.slot())]; }
  int target_slot(int v, int slot) const { return next_[static_cast<std::size_t>(v * slots() + slot)]; }

  /// Adds `from --l--> to` and its inverse. Throws if that would unfold the graph.
  void add_edge(int from, Letter l, int to);

  /// Number of occupied slots at v (a loop fills two).
  int degree(int v) const;
  int edge_count() const;
  /// Geometric edges ordered by (from, gen); a loop appears once.
  std::vector<Edge> edges() const;

  std::optional<int> trace(int v, const Word& w) const;

  bool operator==(const CoreGraph&) const = default;

 private:
  int slots() const noexcept { return alphabet_.letter_count(); }

  Alphabet alphabet_;
  std::vector<int> next_;
};

CoreGraph build_core(const GenTuple& t, const Alphabet& alphabet);

bool is_member(const CoreGraph& c, const Word& w);
int rank(const CoreGraph& c);
/// Vertex count when every vertex has full degree, otherwise nullopt (infinite index).
std::optional<int> subgroup_index(const CoreGraph& c);
CoreGraph intersect(const CoreGraph& a, const CoreGraph& b);
/// Core of g^-1 <c> g.
CoreGraph conjugate_core(const CoreGraph& c, const Word& g);

/// Incoming geometric edges at v; a loop counts once.
int indegree(const CoreGraph& c, int v);
bool check_origin_indegree(const CoreGraph& c, int bound);
/// Distinct labels of incoming directed edges at v (a loop supplies both a and a^-1).
int incoming_label_count(const CoreGraph& c, int v);
/// Smallest vertex with fewer than 2*rank incoming labels. Throws FiniteIndex.
int find_low_indegree_vertex(const CoreGraph& c);

/// Path word from the base to every vertex along the BFS tree.
std::vector<Word> spanning_words(const CoreGraph& c);

struct ForestVerdict {
  bool pass = true;
  /// On FAIL: a reduced nontrivial cycle `cycle` read at `vertex`, which is
  /// reached from the base by `path`.
  int vertex = -1;
  Word cycle;
  Word path;
};

/// Restricts to the given generators and tests that the result is a forest.
ForestVerdict subgroup_letters_forest_test(const CoreGraph& c, const std::vector<int>& gens);

using ZVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Abelianization coordinates of the loops of a core.
class AbelianMap {
 public:
  explicit AbelianMap(const CoreGraph& c);

  int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Edge>& basis_edges() const noexcept { return basis_; }
  /// Tree edges, one per non-base vertex.
  const std::vector<Edge>& tree_edges() const noexcept { return tree_; }

  /// Vector carried by the directed edge `v --l-->`; zero on tree edges.
  ZVector step(int v, Letter l) const;
  /// Sum along the walk reading w from v; nullopt if w leaves the core.
  std::optional<ZVector> walk(int v, const Word& w) const;
  /// Image of a loop at the base; nullopt if w is not in the subgroup.
  std::optional<ZVector> image(const Word& w) const;

  const CoreGraph& core() const noexcept { return core_; }

 private:
  CoreGraph core_;
  std::vector<Edge> tree_;
  std::vector<Edge> basis_;
  // slot-indexed: 0 for tree edges, +/-(i+1) for basis edge i
  std::vector<int> coord_;
};

/// Finite stand-in for "no reduced nontrivial cycle in the derived-subgroup
/// Schreier graph is labeled by the given letters": per component of the
/// restricted core, cycle rank >= 2 fails, cycle rank 1 passes iff its cycle
/// has nonzero abelian image. A zero-image cycle u at vertex v lifts to a
/// loop, and conversely every such loop projects to one.
ForestVerdict gamma2_forest_test(const AbelianMap& am, const std::vector<int>& gens);

/// Smallest j in 1..n whose generator set {x, y_j} passes gamma2_forest_test.
/// `letter_sets[j-1]` lists the generator indices for index j. Throws NoIndex.
int find_j(const AbelianMap& am, const std::vector<std::vector<int>>& letter_sets);

struct ForestCert {
  std::vector<Edge> kept;
  std::vector<Edge> removed;
  std::vector<int> lost;  // per vertex
};

/// Greedy spanning tree that removes at most one edge at every vertex.
/// Throws GreedyStuck when some cycle has no removable edge.
ForestCert sparse_spanning_tree(const CoreGraph& c, int min_girth);
/// Spanning, acyclic and lost <= 1.
bool is_valid_forest_cert(const CoreGraph& c, const ForestCert& cert);

bool has_loops(const CoreGraph& c);
/// Length of the shortest reduced nontrivial cycle, nullopt for a tree.
std::optional<int> girth(const CoreGraph& c);

/// A point of the Schreier graph: the last core vertex visited and the
/// remaining reduced word hanging off it.
struct SchreierPoint {
  int vertex = 0;
  Word tail;
  bool operator==(const SchreierPoint&) const = default;
};
SchreierPoint schreier_trace(const CoreGraph& c, int v, const Word& w);

std::string core_to_dot(const CoreGraph& c);
std::string core_to_json(const CoreGraph& c);

}  // namespace tarski
