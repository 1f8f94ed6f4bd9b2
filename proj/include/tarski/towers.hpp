#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tarski/filtration.hpp"
#include "tarski/paradox.hpp"
#include "tarski/schreier.hpp"
#include "tarski/stallings.hpp"

namespace tarski {

/// Vertex of a tower's Schreier graph. `kind` 0 is the spine (index = spine
/// position), kind 1 is an attached structure (index = region, vertex = core
/// vertex inside it). `tail` is the reduced word hanging off the explicit
/// part, `vec` the deck coordinate of an abelian cover.
struct TowerState {
  int kind = 0;
  int index = 0;
  int vertex = 0;
  Word tail;
  std::vector<std::int64_t> vec;

  bool operator==(const TowerState&) const = default;
};

struct TowerStateHash {
  std::size_t operator()(const TowerState& s) const noexcept;
};

std::string describe(const TowerState& s, const Alphabet& alphabet);

// ---------------------------------------------------------------------------
// First tower: alphabet x, y1..yn, z; region i is the Schreier graph of the
// derived subgroup of K_i = <i-th n-tuple>, joined to spine vertex i by c_i.

struct Tower4Region {
  GenTuple tuple;
  CoreGraph core;
  AbelianMap am;
  Letter c;
  int j = 1;
};

class Tower4 {
 public:
  Tower4(int n, int N);

  int n() const noexcept { return n_; }
  int N() const noexcept { return static_cast<int>(regions_.size()); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Tower4Region& region(int i) const { return regions_.at(static_cast<std::size_t>(i - 1)); }
  Letter z() const noexcept { return Letter(n_ + 1, 1); }

  TowerState base() const { return TowerState{}; }
  TowerState step(const TowerState& s, Letter l) const;
  TowerState trace(TowerState s, const Word& w) const;
  /// Region reachable from s without crossing z, or 0.
  int tag(const TowerState& s) const;
  /// Explicit-structure neighbours of the base (its degree in the core).
  int base_core_degree() const;

  /// Membership in the subgroup represented by the tower core.
  Oracle oracle() const;

 private:
  int n_;
  Alphabet alphabet_;
  std::vector<Tower4Region> regions_;
};

struct Tower4Build {
  Tower4 tower;
  Window window;
  std::vector<TowerState> states;
};

Tower4Build build_tower4(int n, int N, int radius, std::size_t budget = 5'000'000);

struct YPartition {
  std::vector<int> cls;  // per window vertex, 1..n
  std::vector<int> tag;  // region index or 0
  bool single_region = true;   // every z-free component meets at most one region
  int single_region_witness = -1;
  bool closed = true;    // classes closed under non-z letters on interiors
};

YPartition partition_Y(const Tower4Build& b);

struct FreenessWitness {
  int vertex = -1;
  Word word;
};

/// Searches nontrivial reduced words over `gens` of length <= L fixing an
/// interior vertex of `vertices`.
std::optional<FreenessWitness> verify_free_on(const Window& w, const std::vector<int>& vertices,
                                              const std::vector<int>& gens, int L);
std::optional<FreenessWitness> verify_free_on_Yj(const Tower4Build& b, const YPartition& part, int j, int L);

/// S1 = {1, x}, S2 = {1, y1, ..., yn}: n + 3 pieces.
Decomposition tarski_upper_decomposition(const Tower4Build& b, const YPartition& part);

enum class LowerStatus { Violation, CoverageGap, Rejected };
std::string_view to_string(LowerStatus s);

struct LowerReport {
  LowerStatus status = LowerStatus::Rejected;
  std::string reason;
  TranslatingSets normalized;
  GenTuple tuple;
  int tuple_index = 0;
  BoxViolation box;
  std::size_t set_size = 0;     // |A1| = |A2|
  std::size_t union_size = 0;   // traced in the tower
  std::size_t required = 0;
  bool verified = false;
};

LowerReport tarski_lower_report(const Tower4& t, const TranslatingSets& candidate, int m_max = 32);

// ---------------------------------------------------------------------------
// Second tower: alphabet x, y, z; finite automata of subgroups of omega_m F
// hang off a spine whose labels avoid cancellation.

struct Tower5Automaton {
  int n = 0, i = 0;
  GenTuple tuple;
  CoreGraph core;
  int attach = 0;
  Letter c;
  ForestCert forest;
  std::optional<int> girth;
};

class Tower5 {
 public:
  Tower5(std::uint32_t p, int n_max, int count, int m_max = 16);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t p() const noexcept { return p_; }
  int count() const noexcept { return static_cast<int>(automata_.size()); }
  const Tower5Automaton& automaton(int k) const { return automata_.at(static_cast<std::size_t>(k - 1)); }
  /// l(e_k) for k = 1..count.
  Letter spine_label(int k) const { return labels_.at(static_cast<std::size_t>(k - 1)); }
  int m_value(int n) const { return m_.at(static_cast<std::size_t>(n - 1)); }
  const std::vector<FindMResult>& m_certificates() const noexcept { return certs_; }

  TowerState base() const { return TowerState{}; }
  TowerState step(const TowerState& s, Letter l) const;
  /// The explicit core (spine, connectors, automata) as a folded graph.
  const CoreGraph& core() const noexcept { return core_; }
  /// Core vertex -> state, in core vertex order.
  const std::vector<TowerState>& core_states() const noexcept { return core_states_; }

 private:
  std::uint32_t p_;
  Alphabet alphabet_;
  std::vector<int> m_;
  std::vector<FindMResult> certs_;
  std::vector<Tower5Automaton> automata_;
  std::vector<Letter> labels_;
  CoreGraph core_;
  std::vector<TowerState> core_states_;
};

/// The k-th pair (n, i) of the diagonal enumeration with n <= n_max.
std::pair<int, int> tower5_pair(int k, int n_max);
/// Elements u^(p^J) with p^J >= m, u running over cyclically reduced words.
std::vector<Word> tower5_family(int m, std::uint32_t p, std::size_t count);

struct Tower5Build {
  Tower5 tower;
  Window window;
  std::vector<TowerState> states;
};

/// Window made of the explicit core plus hanging trees of depth `radius`.
Tower5Build build_tower5(std::uint32_t p, int n_max, int count, int radius, std::size_t budget = 5'000'000);

struct Tower5Report {
  bool ok = false;
  std::vector<std::string> failures;
  int deficient_vertex = -1;      // (a)
  int deficient_degree = 0;
  bool spine_constraint = false;
  bool attach_indegree = false;
  bool girth_bound = false;
  bool no_loops = false;
  bool full_degree = false;
  std::size_t fixed_checked = 0;  // (b)
  bool fixed_points = false;
  DoublingCert doubling;          // (c)
  std::size_t doubling_samples = 0;
  bool doubling_samples_ok = false;
  std::optional<Lemma6Certificate> lemma6;  // (d)
};

Tower5Report verify_tower5(const Tower5Build& b, int lemma6_r = 4, std::size_t samples = 100, std::uint64_t seed = 1);

}  // namespace tarski
