#include "tarski/towers.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "tarski/error.hpp"

namespace tarski {

std::size_t TowerStateHash::operator()(const TowerState& s) const noexcept {
  std::size_t h = std::hash<Word>{}(s.tail);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  mix(static_cast<std::size_t>(s.kind));
  mix(static_cast<std::size_t>(s.index));
  mix(static_cast<std::size_t>(s.vertex));
  for (auto x : s.vec) mix(static_cast<std::size_t>(x));
  return h;
}

std::string describe(const TowerState& s, const Alphabet& alphabet) {
  std::string out = s.kind == 0 ? "spine(" + std::to_string(s.index) + ")"
                                : "region(" + std::to_string(s.index) + ", v" + std::to_string(s.vertex);
  if (s.kind == 1) {
    out += ", [";
    for (std::size_t i = 0; i < s.vec.size(); ++i) out += (i ? "," : "") + std::to_string(s.vec[i]);
    out += "])";
  }
  if (!s.tail.empty()) out += " . " + format_word(s.tail, alphabet);
  return out;
}

namespace {

// Moves along a hanging tree; false when the tail is empty and the caller
// must handle the explicit structure.
bool tail_step(TowerState& s, Letter l) {
  if (s.tail.empty()) return false;
  s.tail.push_back(l);  // cancels when l undoes the last letter
  return true;
}

Alphabet tower4_alphabet(int n) {
  std::vector<std::string> names{"x"};
  for (int j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
  names.push_back("z");
  return Alphabet(names);
}

// Smallest letter other than `avoid`s whose inverse slot is free at v.
Letter free_connector(const CoreGraph& c, int v, const std::vector<int>& avoid_gens) {
  for (int s = 0; s < c.alphabet().letter_count(); ++s) {
    Letter l = Letter::from_slot(s);
    if (std::find(avoid_gens.begin(), avoid_gens.end(), l.index()) != avoid_gens.end()) continue;
    if (c.target(v, l.inverse()) == -1) return l;
  }
  throw Error(ErrorKind::Invariant, "no admissible connecting letter");
}

}  // namespace

// ---------------------------------------------------------------------------
// Tower4

Tower4::Tower4(int n, int N) : n_(n), alphabet_(tower4_alphabet(n)) {
  if (n < 1 || N < 1) throw Error(ErrorKind::Precondition, "tower4 needs n >= 1 and N >= 1");
  std::vector<std::vector<int>> letter_sets;
  for (int j = 1; j <= n; ++j) letter_sets.push_back({0, j});
  for (auto& t : first_tuples(alphabet_.rank(), n, static_cast<std::size_t>(N))) {
    CoreGraph core = build_core(t, alphabet_);
    AbelianMap am(core);
    Letter c = free_connector(core, core.base(), {n + 1});
    int j = find_j(am, letter_sets);
    regions_.push_back(Tower4Region{std::move(t), std::move(core), std::move(am), c, j});
  }
}

TowerState Tower4::step(const TowerState& s0, Letter l) const {
  TowerState s = s0;
  if (tail_step(s, l)) return s;
  if (s.kind == 0) {
    const int k = s.index;
    if (l == z() && k < N()) return TowerState{0, k + 1, 0, {}, {}};
    if (l == z().inverse() && k >= 1) return TowerState{0, k - 1, 0, {}, {}};
    if (k >= 1 && l == region(k).c)
      return TowerState{1, k, 0, {}, std::vector<std::int64_t>(static_cast<std::size_t>(region(k).am.dimension()), 0)};
    s.tail.push_back(l);
    return s;
  }
  const Tower4Region& r = region(s.index);
  if (s.vertex == r.core.base() && l == r.c.inverse() &&
      std::all_of(s.vec.begin(), s.vec.end(), [](std::int64_t x) { return x == 0; }))
    return TowerState{0, s.index, 0, {}, {}};
  int t = r.core.target(s.vertex, l);
  if (t == -1) {
    s.tail.push_back(l);
    return s;
  }
  ZVector d = r.am.step(s.vertex, l);
  for (std::size_t i = 0; i < s.vec.size(); ++i) s.vec[i] += d(static_cast<Eigen::Index>(i));
  s.vertex = t;
  return s;
}

TowerState Tower4::trace(TowerState s, const Word& w) const {
  for (Letter l : w) s = step(s, l);
  return s;
}

int Tower4::tag(const TowerState& s) const {
  if (s.kind == 0 && s.index == 0) return 0;
  for (Letter l : s.tail)
    if (l.index() == z().index()) return 0;
  return s.index;
}

int Tower4::base_core_degree() const {
  int d = 0;
  for (int slot = 0; slot < alphabet_.letter_count(); ++slot)
    d += step(base(), Letter::from_slot(slot)).tail.empty();
  return d;
}

Oracle Tower4::oracle() const {
  Oracle o;
  o.name = "tower4(n=" + std::to_string(n_) + ", N=" + std::to_string(N()) + ")";
  o.contains = [this](const Word& w) { return trace(base(), w) == base(); };
  o.coset_key = [this](const Word& w) { return describe(trace(base(), w), alphabet_); };
  return o;
}

Tower4Build build_tower4(int n, int N, int radius, std::size_t budget) {
  Tower4 t(n, N);
  auto step = [&t](const TowerState& s, Letter l) { return t.step(s, l); };
  auto sw = expand_states<TowerState, TowerStateHash>(
      t.alphabet(), {{t.base(), Word{}}}, step, radius, budget,
      "tower4 n=" + std::to_string(n) + " N=" + std::to_string(N) + " radius=" + std::to_string(radius));
  return Tower4Build{std::move(t), std::move(sw.window), std::move(sw.states)};
}

YPartition partition_Y(const Tower4Build& b) {
  const Window& w = b.window;
  const Tower4& t = b.tower;
  const int n = w.size(), zi = t.z().index();
  YPartition part;
  part.tag.resize(static_cast<std::size_t>(n));
  part.cls.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int tag = t.tag(b.states[static_cast<std::size_t>(v)]);
    part.tag[static_cast<std::size_t>(v)] = tag;
    part.cls[static_cast<std::size_t>(v)] = tag == 0 ? 1 : t.region(tag).j;
  }
  // At most one region per z-free component of the window.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n && part.single_region; ++r) {
    if (comp[static_cast<std::size_t>(r)] != -1) continue;
    comp[static_cast<std::size_t>(r)] = r;
    int seen_tag = 0;
    std::vector<int> q{r};
    for (std::size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      if (int tg = part.tag[static_cast<std::size_t>(v)]; tg != 0) {
        if (seen_tag != 0 && seen_tag != tg) {
          part.single_region = false;
          part.single_region_witness = v;
          break;
        }
        seen_tag = tg;
      }
      for (int s = 0; s < w.slots(); ++s) {
        if (s / 2 == zi) continue;
        int u = w.step(v, Letter::from_slot(s));
        if (u != -1 && comp[static_cast<std::size_t>(u)] == -1) {
          comp[static_cast<std::size_t>(u)] = r;
          q.push_back(u);
        }
      }
    }
  }
  for (int v : w.interior_vertices())
    for (int s = 0; s < w.slots(); ++s) {
      if (s / 2 == zi) continue;
      int u = w.step(v, Letter::from_slot(s));
      if (u != -1 && part.cls[static_cast<std::size_t>(u)] != part.cls[static_cast<std::size_t>(v)]) part.closed = false;
    }
  return part;
}

std::optional<FreenessWitness> verify_free_on(const Window& w, const std::vector<int>& vertices,
                                              const std::vector<int>& gens, int L) {
  std::vector<Letter> letters;
  for (int g : gens) {
    letters.push_back(Letter(g, 1));
    letters.push_back(Letter(g, -1));
  }
  std::vector<Letter> path;
  std::optional<FreenessWitness> found;
  // Iterative deepening over reduced words, so the witness is a shortest one.
  auto dfs = [&](auto&& self, int start, int cur, int limit) -> bool {
    if (!path.empty() && cur == start) {
      found = FreenessWitness{start, Word::reduce(path)};
      return true;
    }
    if (static_cast<int>(path.size()) == limit) return false;
    for (Letter l : letters) {
      if (!path.empty() && path.back() == l.inverse()) continue;
      int nxt = w.step(cur, l);
      if (nxt == -1) continue;
      path.push_back(l);
      bool stop = self(self, start, nxt, limit);
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (int limit = 1; limit <= L; ++limit)
    for (int v : vertices)
      if (w.interior(v) && dfs(dfs, v, v, limit)) return found;
  return std::nullopt;
}

std::optional<FreenessWitness> verify_free_on_Yj(const Tower4Build& b, const YPartition& part, int j, int L) {
  std::vector<int> members;
  for (int v = 0; v < b.window.size(); ++v)
    if (part.cls[static_cast<std::size_t>(v)] == j) members.push_back(v);
  return verify_free_on(b.window, members, {0, j}, L);
}

Decomposition tarski_upper_decomposition(const Tower4Build& b, const YPartition& part) {
  const int n = b.tower.n();
  TranslatingSets sets;
  sets.S1 = {Word{}, Word::generator(0)};
  sets.S2 = {Word{}};
  for (int j = 1; j <= n; ++j) sets.S2.push_back(Word::generator(j));
  std::vector<Decomposition> parts;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> members;
    for (int v = 0; v < b.window.size(); ++v)
      if (part.cls[static_cast<std::size_t>(v)] == j) members.push_back(v);
    Decomposition dj = free_action_decomposition(b.window, Word::generator(0), Word::generator(j), &members);
    // Re-tag {P1, P2, Q1, Q2} into the shared scheme: Q1 -> slot 0, Q2 -> slot j.
    Decomposition d;
    d.sets = sets;
    d.pieces.assign(static_cast<std::size_t>(n + 3), {});
    d.pieces[0] = dj.pieces[0];
    d.pieces[1] = dj.pieces[1];
    d.pieces[2] = dj.pieces[2];
    d.pieces[static_cast<std::size_t>(2 + j)] = dj.pieces[3];
    parts.push_back(std::move(d));
  }
  return combine_orbits(parts);
}

std::string_view to_string(LowerStatus s) {
  switch (s) {
    case LowerStatus::Violation: return "VIOLATION";
    case LowerStatus::CoverageGap: return "COVERAGE_GAP";
    case LowerStatus::Rejected: return "REJECTED";
  }
  return "?";
}

LowerReport tarski_lower_report(const Tower4& t, const TranslatingSets& candidate, int m_max) {
  LowerReport r;
  const int n = t.n();
  if (candidate.S1.size() < 2 || candidate.S2.size() < 2) {
    r.reason = "translating sets need at least two elements each";
    return r;
  }
  if (static_cast<int>(candidate.S1.size() + candidate.S2.size()) > n + 2) {
    r.reason = "total size exceeds n + 2";
    return r;
  }
  const Word g1 = invert(candidate.S1.front()), g2 = invert(candidate.S2.front());
  r.normalized = shift_sets(candidate, g1, g2);

  std::vector<Word> S;
  for (const auto* set : {&r.normalized.S1, &r.normalized.S2})
    for (const auto& s : *set)
      if (!s.empty() && std::find(S.begin(), S.end(), s) == S.end()) S.push_back(s);
  if (S.empty()) {
    // Trivial group: any single point violates.
    r.status = LowerStatus::Violation;
    r.set_size = 1;
    r.union_size = 1;
    r.required = 2;
    r.verified = true;
    r.reason = "translating sets act trivially";
    return r;
  }
  while (static_cast<int>(S.size()) < n) S.push_back(S.back());
  std::set<Word> want(S.begin(), S.end());
  for (int i = 1; i <= t.N() && r.tuple_index == 0; ++i) {
    const auto& tup = t.region(i).tuple;
    if (tup == S || std::set<Word>(tup.begin(), tup.end()) == want) r.tuple_index = i;
  }
  r.tuple = S;
  if (r.tuple_index == 0) {
    r.status = LowerStatus::CoverageGap;
    r.reason = "tuple lies beyond the realized enumeration prefix";
    return r;
  }
  const Tower4Region& reg = t.region(r.tuple_index);
  std::vector<ZVector> v1, v2;
  for (const auto& s : r.normalized.S1) v1.push_back(*reg.am.image(s));
  for (const auto& s : r.normalized.S2) v2.push_back(*reg.am.image(s));
  r.box = folner_violation(v1, v2, m_max);

  // Box B in the orbit of the region origin; A_i = B g_i^-1.
  std::vector<TowerState> box;
  const int k = r.box.k, M = r.box.M;
  std::size_t cells = 1;
  for (int i = 0; i < k; ++i) cells *= static_cast<std::size_t>(M);
  for (std::size_t c = 0; c < cells; ++c) {
    TowerState s{1, r.tuple_index, reg.core.base(), {}, std::vector<std::int64_t>(static_cast<std::size_t>(k), 0)};
    std::size_t rest = c;
    for (int i = 0; i < k; ++i) {
      s.vec[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(M));
      rest /= static_cast<std::size_t>(M);
    }
    box.push_back(std::move(s));
  }
  std::unordered_set<TowerState, TowerStateHash> A1, A2, U;
  for (const auto& s : box) {
    A1.insert(t.trace(s, candidate.S1.front()));
    A2.insert(t.trace(s, candidate.S2.front()));
  }
  for (const auto& a : A1)
    for (const auto& g : candidate.S1) U.insert(t.trace(a, invert(g)));
  for (const auto& a : A2)
    for (const auto& h : candidate.S2) U.insert(t.trace(a, invert(h)));
  r.set_size = A1.size();
  r.union_size = U.size();
  r.required = A1.size() + A2.size();
  r.verified = A1.size() == box.size() && A2.size() == box.size() && r.union_size < r.required &&
               r.union_size == r.box.union_size;
  if (!r.verified) throw Error(ErrorKind::Invariant, "transported box does not reproduce the violation");
  r.status = LowerStatus::Violation;
  return r;
}

// ---------------------------------------------------------------------------
// Tower5

std::pair<int, int> tower5_pair(int k, int n_max) {
  if (k < 1 || n_max < 1) throw Error(ErrorKind::Precondition, "pair index and n_max must be positive");
  int seen = 0;
  for (int s = 2;; ++s)
    for (int n = 1; n <= std::min(n_max, s - 1); ++n)
      if (++seen == k) return {n, s - n};
}

std::vector<Word> tower5_family(int m, std::uint32_t p, std::size_t count) {
  long long e = 1;
  while (e < m) e *= p;
  std::vector<Word> bases, out;
  for (std::size_t len = 1; out.size() < count; ++len) {
    for_each_reduced_word(3, len, [&](const Word& u) {
      if (u.size() != len) return true;
      if (u.front() == u.back().inverse()) return true;  // not cyclically reduced
      for (const auto& b : bases)
        if (b == invert(u)) return true;
      bases.push_back(u);
      out.push_back(power(u, e));
      return out.size() < count;
    });
  }
  return out;
}

Tower5::Tower5(std::uint32_t p, int n_max, int count, int m_max)
    : p_(p), alphabet_(std::vector<std::string>{"x", "y", "z"}) {
  if (count < 1) throw Error(ErrorKind::Precondition, "tower5 needs at least one automaton");
  for (int n = 1; n <= n_max; ++n) {
    certs_.push_back(find_m(n, p, m_max, 3));
    m_.push_back(certs_.back().certificate.m);
  }
  std::map<int, std::vector<Word>> families;
  for (int k = 1; k <= count; ++k) {
    auto [n, i] = tower5_pair(k, n_max);
    auto& fam = families[n];
    if (fam.size() < static_cast<std::size_t>(i + n - 1)) fam = tower5_family(m_value(n), p, static_cast<std::size_t>(i + n - 1));
    Tower5Automaton a;
    a.n = n;
    a.i = i;
    a.tuple.assign(fam.begin() + (i - 1), fam.begin() + (i - 1 + n));
    for (const auto& w : a.tuple)
      if (!zassenhaus_member(w, m_value(n), p))
        throw Error(ErrorKind::Invariant, "tuple word outside the filtration subgroup");
    a.core = build_core(a.tuple, alphabet_);
    a.attach = find_low_indegree_vertex(a.core);
    a.c = free_connector(a.core, a.attach, {});
    a.girth = girth(a.core);
    a.forest = sparse_spanning_tree(a.core, 12 * n);
    automata_.push_back(std::move(a));
  }
  // Spine labels: smallest letter avoiding backtracking and the connectors.
  for (int k = 1; k <= count; ++k) {
    std::vector<Letter> banned{automaton(k).c.inverse()};
    if (k > 1) {
      banned.push_back(labels_.back().inverse());
      banned.push_back(automaton(k - 1).c);
    }
    for (int s = 0;; ++s) {
      if (s == alphabet_.letter_count()) throw Error(ErrorKind::Invariant, "no admissible spine label");
      Letter l = Letter::from_slot(s);
      if (std::find(banned.begin(), banned.end(), l) == banned.end()) {
        labels_.push_back(l);
        break;
      }
    }
  }
  // Assemble the explicit core; add_edge rejects any folding.
  int total = count + 1;
  std::vector<int> offset;
  for (const auto& a : automata_) {
    offset.push_back(total);
    total += a.core.vertex_count();
  }
  core_ = CoreGraph(alphabet_, total);
  core_states_.assign(static_cast<std::size_t>(total), TowerState{});
  for (int k = 0; k <= count; ++k) core_states_[static_cast<std::size_t>(k)] = TowerState{0, k, 0, {}, {}};
  for (int k = 1; k <= count; ++k) {
    core_.add_edge(k - 1, spine_label(k), k);
    const auto& a = automaton(k);
    const int off = offset[static_cast<std::size_t>(k - 1)];
    for (int v = 0; v < a.core.vertex_count(); ++v) core_states_[static_cast<std::size_t>(off + v)] = TowerState{1, k, v, {}, {}};
    for (const auto& e : a.core.edges()) core_.add_edge(off + e.from, Letter(e.gen, 1), off + e.to);
    core_.add_edge(k, a.c, off + a.attach);
  }
}

TowerState Tower5::step(const TowerState& s0, Letter l) const {
  TowerState s = s0;
  if (tail_step(s, l)) return s;
  if (s.kind == 0) {
    const int k = s.index;
    if (k < count() && l == spine_label(k + 1)) return TowerState{0, k + 1, 0, {}, {}};
    if (k >= 1 && l == spine_label(k).inverse()) return TowerState{0, k - 1, 0, {}, {}};
    if (k >= 1 && l == automaton(k).c) return TowerState{1, k, automaton(k).attach, {}, {}};
    s.tail.push_back(l);
    return s;
  }
  const auto& a = automaton(s.index);
  if (s.vertex == a.attach && l == a.c.inverse()) return TowerState{0, s.index, 0, {}, {}};
  int t = a.core.target(s.vertex, l);
  if (t == -1) {
    s.tail.push_back(l);
    return s;
  }
  s.vertex = t;
  return s;
}

Tower5Build build_tower5(std::uint32_t p, int n_max, int count, int radius, std::size_t budget) {
  Tower5 t(p, n_max, count);
  auto words = spanning_words(t.core());
  std::vector<std::pair<TowerState, Word>> seeds;
  for (int v = 0; v < t.core().vertex_count(); ++v)
    seeds.push_back({t.core_states()[static_cast<std::size_t>(v)], words[static_cast<std::size_t>(v)]});
  auto step = [&t](const TowerState& s, Letter l) { return t.step(s, l); };
  auto sw = expand_states<TowerState, TowerStateHash>(
      t.alphabet(), seeds, step, radius, budget,
      "tower5 p=" + std::to_string(p) + " nmax=" + std::to_string(n_max) + " pairs=" + std::to_string(count) +
          " depth=" + std::to_string(radius));
  return Tower5Build{std::move(t), std::move(sw.window), std::move(sw.states)};
}

Tower5Report verify_tower5(const Tower5Build& b, int lemma6_r, std::size_t samples, std::uint64_t seed) {
  Tower5Report r;
  const Tower5& t = b.tower;
  const Window& w = b.window;
  auto fail = [&r](std::string m) { r.failures.push_back(std::move(m)); };
  std::unordered_map<TowerState, int, TowerStateHash> id;
  for (int v = 0; v < w.size(); ++v) id.emplace(b.states[static_cast<std::size_t>(v)], v);

  // (a) a core vertex without full degree; H then contains no nontrivial normal subgroup.
  for (int v = 0; v < t.core().vertex_count(); ++v)
    if (t.core().degree(v) < t.alphabet().letter_count()) {
      r.deficient_vertex = v;
      r.deficient_degree = t.core().degree(v);
      break;
    }
  if (r.deficient_vertex == -1) fail("every core vertex has full degree");

  r.spine_constraint = true;
  for (int k = 1; k <= t.count(); ++k) {
    Letter l = t.spine_label(k);
    bool bad = l == t.automaton(k).c.inverse();
    if (k > 1) bad = bad || l == t.spine_label(k - 1).inverse() || l == t.automaton(k - 1).c;
    if (bad) r.spine_constraint = false;
  }
  if (!r.spine_constraint) fail("spine label constraint violated");

  r.attach_indegree = r.girth_bound = true;
  for (int k = 1; k <= t.count(); ++k) {
    const auto& a = t.automaton(k);
    if (incoming_label_count(a.core, a.attach) >= t.alphabet().letter_count()) r.attach_indegree = false;
    if (!a.girth || *a.girth < 12 * a.n) r.girth_bound = false;
    if (!is_valid_forest_cert(a.core, a.forest)) fail("automaton " + std::to_string(k) + " forest certificate invalid");
  }
  if (!r.attach_indegree) fail("attachment vertex has full in-degree");
  if (!r.girth_bound) fail("automaton girth below 12n");

  r.no_loops = r.full_degree = true;
  for (int v : w.interior_vertices()) {
    for (int s = 0; s < w.slots(); ++s) {
      int u = w.step(v, Letter::from_slot(s));
      if (u == -1) r.full_degree = false;
      if (u == v) r.no_loops = false;
    }
  }
  if (!r.no_loops) fail("window has a loop");
  if (!r.full_degree) fail("interior vertex without full degree");

  // (b) realized tuple words fix their attachment vertices.
  r.fixed_points = true;
  for (int k = 1; k <= t.count(); ++k) {
    const auto& a = t.automaton(k);
    int o = id.at(TowerState{1, k, a.attach, {}, {}});
    const Word to_attach = spanning_words(a.core)[static_cast<std::size_t>(a.attach)];
    for (const auto& word : a.tuple) {
      ++r.fixed_checked;
      Word conj = conjugate(word, to_attach);
      auto end = w.trace(o, conj);
      if (!end || *end != o) r.fixed_points = false;
    }
  }
  if (!r.fixed_points) fail("a tuple word does not fix its attachment vertex");

  // (c) doubling certificate with S = {x, y, z}.
  std::vector<WindowEdge> removed;
  for (int k = 1; k <= t.count(); ++k)
    for (const auto& e : t.automaton(k).forest.removed) {
      int from = id.at(TowerState{1, k, e.from, {}, {}}), to = id.at(TowerState{1, k, e.to, {}, {}});
      removed.push_back({from, to, e.gen});
    }
  const std::vector<Word> S{Word::generator(0), Word::generator(1), Word::generator(2)};
  r.doubling = forest_doubling_cert(w, S, removed);
  if (!r.doubling.ok) fail("doubling certificate: " + r.doubling.failure);

  std::mt19937_64 rng(seed);
  auto interior = w.interior_vertices();
  r.doubling_samples_ok = true;
  for (std::size_t i = 0; i < samples && !interior.empty(); ++i) {
    // Half of the samples are clustered balls, the rest scattered.
    std::vector<int> A;
    std::uniform_int_distribution<std::size_t> pick(0, interior.size() - 1);
    if (i % 2 == 0) {
      int c = interior[pick(rng)];
      std::vector<int> q{c};
      std::set<int> seen{c};
      std::bernoulli_distribution keep(0.7);
      std::size_t limit = 1 + rng() % 40;
      for (std::size_t h = 0; h < q.size() && A.size() < limit; ++h) {
        if (w.interior(q[h]) && keep(rng)) A.push_back(q[h]);
        for (int s = 0; s < w.slots(); ++s) {
          int u = w.step(q[h], Letter::from_slot(s));
          if (u != -1 && w.interior(u) && seen.insert(u).second) q.push_back(u);
        }
      }
    } else {
      std::set<int> chosen;
      std::size_t size = 1 + rng() % 40;
      while (chosen.size() < std::min(size, interior.size())) chosen.insert(interior[pick(rng)]);
      A.assign(chosen.begin(), chosen.end());
    }
    ++r.doubling_samples;
    if (!doubling_check(w, S, A).ok) r.doubling_samples_ok = false;
  }
  if (!r.doubling_samples_ok) fail("doubling inequality failed on a sampled set");

  // (d) lower bound certificate.
  try {
    r.lemma6 = lemma6_certificate(Word::generator(0), Word::generator(1), Word::generator(2), lemma6_r, t.alphabet());
    if (!reverify(r.lemma6->window, r.lemma6->sets, r.lemma6->violation)) fail("lemma6 violation does not re-verify");
  } catch (const Error& e) {
    fail(std::string("lemma6: ") + e.what());
  }
  r.ok = r.failures.empty();
  return r;
}

}  // namespace tarski
