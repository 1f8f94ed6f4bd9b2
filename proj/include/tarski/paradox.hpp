#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tarski/freewords.hpp"
#include "tarski/schreier.hpp"
#include "tarski/stallings.hpp"

namespace tarski {

struct TranslatingSets {
  std::vector<Word> S1;
  std::vector<Word> S2;
};

/// Pieces over a window: S1.size() P-pieces followed by S2.size() Q-pieces.
struct Decomposition {
  TranslatingSets sets;
  std::vector<std::vector<int>> pieces;

  std::size_t piece_count() const noexcept { return pieces.size(); }
};

struct DecompositionReport {
  bool ok = false;
  bool disjoint = true;
  int overlap_vertex = -1;
  std::vector<int> uncovered_p;  // interior vertices missing a P-translate
  std::vector<int> uncovered_q;
  std::size_t checked = 0;
  std::size_t unverifiable = 0;  // interior vertices whose translates left the window
};

/// Interior vertices v must satisfy v g_i^-1 in P_i for some i and
/// v h_j^-1 in Q_j for some j. Pieces need not cover the window.
DecompositionReport verify_decomposition(const Window& w, const Decomposition& d);

/// Classical pattern for a free action of <x, y>: inside each orbit (a
/// component of the x/y subgraph, restricted to `domain` if given) vertices
/// are tagged by the last letter of their path from the orbit representative.
/// Throws Freeness with a cycle witness if an orbit is not a tree.
Decomposition free_action_decomposition(const Window& w, const Word& x, const Word& y,
                                        const std::vector<int>* domain = nullptr);

struct HallViolation {
  std::vector<int> A1, A2;
  std::size_t union_size = 0;
  std::size_t required = 0;
};

struct HallResult {
  bool satisfied = true;
  std::size_t matching = 0;
  std::size_t pool = 0;
  std::optional<HallViolation> violation;
};

/// Matching test of |A1 S1^-1 u A2 S2^-1| >= |A1| + |A2| over subsets of the
/// pool. Throws Precondition if a translate of a pool vertex leaves the window.
HallResult hall_check(const Window& w, const TranslatingSets& ts, const std::vector<int>& pool);

/// |A1 S1^-1 u A2 S2^-1| computed directly. Throws Precondition on frontier exit.
std::size_t translate_union_size(const Window& w, const TranslatingSets& ts, const std::vector<int>& A1,
                                 const std::vector<int>& A2);
bool reverify(const Window& w, const TranslatingSets& ts, const HallViolation& v);

struct DoublingResult {
  bool ok = true;
  std::size_t union_size = 0;  // |A S^-1 u A|
  std::size_t required = 0;    // 2|A|
};
DoublingResult doubling_check(const Window& w, const std::vector<Word>& S, const std::vector<int>& A);

/// A window edge `v --slot-->`, stored in its positive orientation.
struct WindowEdge {
  int from = 0;
  int to = 0;
  int gen = 0;
  bool operator==(const WindowEdge&) const = default;
};

struct DoublingCert {
  bool ok = false;
  std::string failure;
  int witness = -1;
  std::vector<WindowEdge> removed;
  std::size_t forest_edges = 0;
  std::vector<int> indegree;  // per vertex, -1 for frontier vertices
};

/// Window edges minus `removed` must form a forest with no loops, and every
/// interior vertex must receive at least two kept edges labeled by S.
DoublingCert forest_doubling_cert(const Window& w, const std::vector<Word>& S, const std::vector<WindowEdge>& removed);

struct BoxViolation {
  int k = 0;
  int M = 0;
  std::size_t union_size = 0;
  std::size_t required = 0;
};

/// First box [0,M)^k, M <= m_max, with |A - S1 u A - S2| < 2|A|. Throws NotFound.
BoxViolation folner_violation(const std::vector<ZVector>& S1, const std::vector<ZVector>& S2, int m_max);
/// The same count for a given M, computed directly.
std::size_t box_union_size(const std::vector<ZVector>& S1, const std::vector<ZVector>& S2, int k, int M);

struct Lemma6Certificate {
  CoreGraph core;
  Window window;
  TranslatingSets sets;
  std::vector<int> A1, A2;
  HallViolation violation;
};

/// Core of <a^r, (a^b)^r, (a^c)^r> with A1 the a-orbits of o, o b^-1, o c^-1
/// and A2 = {o}, S1 = {1, a}, S2 = {1, b, c}. Throws ShapeCheck when the
/// a-orbits are not closed r-cycles.
Lemma6Certificate lemma6_certificate(const Word& a, const Word& b, const Word& c, int r, const Alphabet& alphabet);

TranslatingSets shift_sets(const TranslatingSets& ts, const Word& g1, const Word& g2);
Decomposition restrict_to_orbit(const Decomposition& d, const std::vector<int>& orbit);
/// Union of decompositions with identical translating sets on disjoint orbits.
Decomposition combine_orbits(const std::vector<Decomposition>& parts);
/// Pulls back a decomposition of `target` along f: source vertex -> target
/// vertex (-1 where undefined). Throws NonEquivariant when f(v s) != f(v) s.
Decomposition lift(const Decomposition& d, const Window& source, const Window& target, const std::vector<int>& f);

}  // namespace tarski
