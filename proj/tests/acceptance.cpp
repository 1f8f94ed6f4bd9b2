// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <bitset>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "tarski/filtration.hpp"
#include "tarski/freewords.hpp"
#include "tarski/io.hpp"
#include "tarski/paradox.hpp"
#include "tarski/schreier.hpp"
#include "tarski/stallings.hpp"
#include "tarski/towers.hpp"

using namespace tarski;

namespace {

// Time limits in seconds.
constexpr double kLimitStallings = 60.0;
constexpr double kLimitLemma6 = 1.0;
constexpr double kLimitTower4 = 300.0;
constexpr double kLimitFindM = 60.0;
constexpr double kLimitTower5 = 300.0;

constexpr std::size_t kHallPoolMax = 12;
constexpr int kBoxMax = 32;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %2d %-28s %s  %s\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class F>
void run(int id, const char* name, F&& body) {
  try {
    std::string detail;
    bool ok = body(detail);
    report(id, name, ok, detail);
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

Word random_word(std::mt19937_64& rng, int rank, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len), slot(0, 2 * rank - 1);
  for (;;) {
    std::vector<Letter> ls;
    int target = len(rng);
    while (static_cast<int>(ls.size()) < target) {
      Letter l = Letter::from_slot(slot(rng));
      if (!ls.empty() && ls.back() == l.inverse()) continue;
      ls.push_back(l);
    }
    Word w = Word::reduce(ls);
    if (!w.empty()) return w;
  }
}

// ---------------------------------------------------------------------------
// 1-3: Stallings against products of a Nielsen basis.

struct StallingsInstance {
  GenTuple tuple;
  CoreGraph core;
  GenTuple basis;
};

std::vector<StallingsInstance> stallings_instances() {
  static std::vector<StallingsInstance> cache;
  if (!cache.empty()) return cache;
  const Alphabet a({"x", "y", "z"});
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> count(1, 3);
  for (int i = 0; i < 200; ++i) {
    GenTuple t;
    int k = count(rng);
    for (int j = 0; j < k; ++j) t.push_back(random_word(rng, 3, 1, 6));
    cache.push_back({t, build_core(t, a), nielsen_reduce(t)});
  }
  return cache;
}

// Every element of length <= L, as products of at most L factors of a Nielsen
// reduced basis. The partial product never drops more than one factor length
// below the final length, so partial products longer than L + maxlen are cut.
std::unordered_set<Word> short_elements(const GenTuple& basis, std::size_t L) {
  std::vector<Word> sym;
  std::size_t maxlen = 0;
  for (const auto& b : basis) {
    sym.push_back(b);
    sym.push_back(invert(b));
    maxlen = std::max(maxlen, b.size());
  }
  std::unordered_set<Word> out{Word{}};
  std::function<void(const Word&, int, std::size_t)> grow = [&](const Word& cur, int last, std::size_t depth) {
    if (depth == L) return;
    for (std::size_t i = 0; i < sym.size(); ++i) {
      if (last >= 0 && i == (static_cast<std::size_t>(last) ^ 1)) continue;
      Word nxt = multiply(cur, sym[i]);
      if (nxt.size() > L + maxlen) continue;
      if (nxt.size() <= L) out.insert(nxt);
      grow(nxt, static_cast<int>(i), depth + 1);
    }
  };
  grow(Word{}, -1, 0);
  return out;
}

// Reduced closed walks of length <= L at the base (= elements of length <= L).
std::size_t closed_walks(const CoreGraph& c, std::size_t L) {
  std::size_t count = 1;
  std::function<void(int, int, std::size_t)> walk = [&](int v, int last_slot, std::size_t len) {
    if (len == L) return;
    for (int s = 0; s < c.alphabet().letter_count(); ++s) {
      if (last_slot >= 0 && s == (last_slot ^ 1)) continue;
      int t = c.target_slot(v, s);
      if (t == -1) continue;
      if (t == c.base()) ++count;
      walk(t, s, len + 1);
    }
  };
  walk(c.base(), -1, 0);
  return count;
}

bool criterion1(std::string& detail) {
  auto t0 = Clock::now();
  std::size_t discrepancies = 0, words = 0;
  for (const auto& inst : stallings_instances()) {
    if (!is_nielsen_reduced(inst.basis)) ++discrepancies;
    auto elems = short_elements(inst.basis, 8);
    for (const auto& w : elems)
      if (!is_member(inst.core, w)) ++discrepancies;
    if (closed_walks(inst.core, 8) != elems.size()) ++discrepancies;
    // The generators themselves, whatever their length.
    for (const auto& g : inst.tuple)
      if (!is_member(inst.core, g)) ++discrepancies;
    words += elems.size();
  }
  double dt = seconds_since(t0);
  detail = "200 tuples, " + std::to_string(words) + " short elements, discrepancies=" + std::to_string(discrepancies) +
           ", " + std::to_string(dt) + "s";
  return discrepancies == 0 && dt < kLimitStallings;
}

bool criterion2(std::string& detail) {
  std::size_t bad = 0;
  for (const auto& inst : stallings_instances())
    if (rank(inst.core) != static_cast<int>(inst.basis.size())) ++bad;
  const Alphabet f2({"x", "y"});
  auto idx = subgroup_index(build_core(parse_tuple("x^2, y, x y x^-1", f2), f2));
  detail = "rank mismatches=" + std::to_string(bad) + ", index<x^2,y,xyx^-1>=" + (idx ? std::to_string(*idx) : "inf");
  return bad == 0 && idx == 2;
}

bool criterion3(std::string& detail) {
  std::size_t bad = 0;
  int worst = 0;
  for (const auto& inst : stallings_instances()) {
    int d = indegree(inst.core, inst.core.base());
    worst = std::max(worst, d);
    if (!check_origin_indegree(inst.core, 2 * static_cast<int>(inst.tuple.size()))) ++bad;
    if (d > 2 * static_cast<int>(inst.tuple.size())) ++bad;
  }
  detail = "violations=" + std::to_string(bad) + ", max origin in-degree=" + std::to_string(worst);
  return bad == 0;
}

// ---------------------------------------------------------------------------

bool criterion4(std::string& detail) {
  const Alphabet g2({"x", "y1", "y2", "z"});
  std::mt19937_64 rng(77);
  std::size_t found = 0, checked = 0, bad = 0;
  std::size_t per_j[3] = {0, 0, 0};
  for (int i = 0; i < 100; ++i) {
    GenTuple t{random_word(rng, 4, 1, 4), random_word(rng, 4, 1, 4)};
    CoreGraph c = build_core(t, g2);
    AbelianMap am(c);
    int j;
    try {
      j = find_j(am, {{0, 1}, {0, 2}});
    } catch (const Error&) {
      ++bad;
      continue;
    }
    ++found;
    ++per_j[j];
    Oracle o = oracle_gamma2(am);
    auto verts = spanning_words(c);
    // A reduced {x, y_j}-cycle in the derived-subgroup Schreier graph projects
    // into the core, so conjugating by core vertex words covers all of them.
    for_each_reduced_word(2, 6, [&](const Word& small) {
      if (small.empty()) return true;
      std::vector<Letter> ls;
      for (Letter l : small) ls.push_back(Letter(l.index() == 0 ? 0 : j, l.sign()));
      Word u = Word::reduce(ls);
      for (const auto& cu : cyclic_conjugates(u))
        for (const auto& g : verts) {
          ++checked;
          if (o.contains(multiply(multiply(g, cu), invert(g)))) ++bad;
        }
      return true;
    });
  }
  detail = "find_j succeeded " + std::to_string(found) + "/100 (j=1: " + std::to_string(per_j[1]) +
           ", j=2: " + std::to_string(per_j[2]) + "), brute-force probes=" + std::to_string(checked) +
           ", counterexamples=" + std::to_string(bad);
  return found == 100 && bad == 0;
}

bool criterion5(std::string& detail) {
  const Alphabet f2({"x", "y"});
  Window w = expand(oracle_trivial(), f2, 8);
  Decomposition d = free_action_decomposition(w, Word::generator(0), Word::generator(1));
  DecompositionReport r = verify_decomposition(w, d);
  detail = "ball size " + std::to_string(w.size()) + ", pieces=" + std::to_string(d.piece_count()) +
           ", interior checked=" + std::to_string(r.checked) + ", unverifiable=" + std::to_string(r.unverifiable);
  return r.ok && d.piece_count() == 4 && r.unverifiable == 0 && w.size() == 1 + 4 * (6561 - 1) / 2;
}

// ---------------------------------------------------------------------------
// 6: Hall engine against exhaustive subset search.

bool exhaustive_hall(const Window& w, const TranslatingSets& ts, const std::vector<int>& pool) {
  const std::size_t k = pool.size();
  std::vector<int> ids;
  auto id_of = [&](int v) {
    auto it = std::find(ids.begin(), ids.end(), v);
    if (it != ids.end()) return static_cast<std::size_t>(it - ids.begin());
    ids.push_back(v);
    return ids.size() - 1;
  };
  using Bits = std::bitset<256>;
  std::vector<Bits> n1(k), n2(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& g : ts.S1) n1[i].set(id_of(*w.trace(pool[i], invert(g))));
    for (const auto& h : ts.S2) n2[i].set(id_of(*w.trace(pool[i], invert(h))));
  }
  const std::size_t subsets = std::size_t{1} << k;
  std::vector<Bits> u1(subsets), u2(subsets);
  for (std::size_t m = 1; m < subsets; ++m) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(m));
    u1[m] = u1[m & (m - 1)] | n1[low];
    u2[m] = u2[m & (m - 1)] | n2[low];
  }
  for (std::size_t a = 0; a < subsets; ++a)
    for (std::size_t b = 0; b < subsets; ++b)
      if ((u1[a] | u2[b]).count() < static_cast<std::size_t>(__builtin_popcountll(a) + __builtin_popcountll(b)))
        return false;
  return true;
}

bool criterion6(std::string& detail) {
  struct Case {
    std::string name;
    Window w;
    TranslatingSets ts;
    std::vector<int> pool;
  };
  std::vector<Case> cases;
  const Alphabet z1({"a"});
  Window line = expand(oracle_trivial(), z1, 20);
  const Word a = Word::generator(0);
  for (int M = 0; M <= 12; ++M) {
    std::vector<int> seg;
    int v = line.base();
    for (int i = 0; i < M; ++i) {
      seg.push_back(v);
      v = *line.trace(v, a);
    }
    cases.push_back({"line M=" + std::to_string(M), line, {{Word{}, a}, {Word{}, a, a}}, seg});
    cases.push_back({"line gen M=" + std::to_string(M), line, {{Word{}, a}, {Word{}, invert(a)}}, seg});
  }
  const Alphabet f2({"x", "y"});
  Window ball = expand(oracle_trivial(), f2, 6);
  const Word x = Word::generator(0), y = Word::generator(1);
  std::mt19937_64 rng(5);
  auto interior = ball.interior_vertices();
  for (int i = 0; i < 12; ++i) {
    std::vector<int> pool(interior.begin(), interior.end());
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(1 + i % static_cast<int>(kHallPoolMax)));
    std::sort(pool.begin(), pool.end());
    cases.push_back({"F2 ball", ball, {{Word{}, x}, {Word{}, y}}, pool});
    cases.push_back({"F2 ball x/x^-1", ball, {{Word{}, x}, {Word{}, invert(x)}}, pool});
  }
  {
    std::vector<int> local;
    for (int v = 0; v < ball.size() && local.size() < kHallPoolMax; ++v)
      if (ball.interior(v)) local.push_back(v);
    cases.push_back({"F2 ball local", ball, {{Word{}, x}, {Word{}, y}}, local});
    cases.push_back({"F2 ball local shifted", ball, {{x, multiply(x, x)}, {y, Word{}}}, local});
  }
  {
    const Alphabet f3({"x", "y", "z"});
    Lemma6Certificate l6 = lemma6_certificate(Word::generator(0), Word::generator(1), Word::generator(2), 3, f3);
    std::vector<int> pool = l6.A1;
    pool.insert(pool.end(), l6.A2.begin(), l6.A2.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    cases.push_back({"lemma6 r=3", l6.window, l6.sets, pool});
  }
  std::size_t agree = 0, violations = 0, reverified = 0;
  for (const auto& c : cases) {
    HallResult r = hall_check(c.w, c.ts, c.pool);
    bool ex = exhaustive_hall(c.w, c.ts, c.pool);
    if (ex == r.satisfied) ++agree;
    else std::printf("    disagreement on %s\n", c.name.c_str());
    if (r.violation) {
      ++violations;
      if (reverify(c.w, c.ts, *r.violation) &&
          translate_union_size(c.w, c.ts, r.violation->A1, r.violation->A2) == r.violation->union_size)
        ++reverified;
    }
  }
  detail = std::to_string(agree) + "/" + std::to_string(cases.size()) + " verdicts agree with exhaustive search, " +
           std::to_string(reverified) + "/" + std::to_string(violations) + " violations re-verify";
  return agree == cases.size() && reverified == violations && violations > 0;
}

bool criterion7(std::string& detail) {
  const Alphabet f3({"x", "y", "z"});
  const Word x = Word::generator(0), y = Word::generator(1), z = Word::generator(2);
  auto t0 = Clock::now();
  Lemma6Certificate c = lemma6_certificate(x, y, z, 4, f3);
  double dt = seconds_since(t0);
  Lemma6Certificate same = lemma6_certificate(x, y, y, 4, f3);
  Lemma6Certificate one = lemma6_certificate(x, y, z, 1, f3);
  bool ok = c.violation.A1.size() == 12 && c.violation.union_size == 12 && c.violation.required == 13 &&
            reverify(c.window, c.sets, c.violation) && same.violation.A1.size() == 8 &&
            same.violation.union_size == 8 && same.violation.required == 9 && one.violation.A1.size() == 3 &&
            one.violation.union_size == 3 && one.violation.required == 4 && dt < kLimitLemma6;
  detail = "|A1|=" + std::to_string(c.violation.A1.size()) + ", union=" + std::to_string(c.violation.union_size) +
           " < " + std::to_string(c.violation.required) + " (b=c: " + std::to_string(same.violation.union_size) +
           " < " + std::to_string(same.violation.required) + ", r=1: " + std::to_string(one.violation.union_size) +
           " < " + std::to_string(one.violation.required) + "), " + std::to_string(dt) + "s";
  return ok;
}

// ---------------------------------------------------------------------------

bool criterion8(std::string& detail) {
  auto t0 = Clock::now();
  Tower4Build b = build_tower4(2, 3, 6);
  Tower4Build again = build_tower4(2, 3, 6);
  bool deterministic = window_to_json(b.window) == window_to_json(again.window);
  const Tower4& t = b.tower;
  YPartition part = partition_Y(b);
  bool free1 = !verify_free_on_Yj(b, part, 1, 6), free2 = !verify_free_on_Yj(b, part, 2, 6);

  // Wrong index on region 3 must expose a commutator cycle.
  std::vector<int> region3;
  for (int v = 0; v < b.window.size(); ++v)
    if (b.states[static_cast<std::size_t>(v)].kind == 1 && b.states[static_cast<std::size_t>(v)].index == 3)
      region3.push_back(v);
  bool adversarial = t.region(3).j != 1 && verify_free_on(b.window, region3, {0, 1}, 6).has_value();

  Decomposition d = tarski_upper_decomposition(b, part);
  DecompositionReport dr = verify_decomposition(b.window, d);

  // Every candidate S1 = {g, a g}, S2 = {h, b h}.
  std::vector<Word> small;
  for_each_reduced_word(t.alphabet().rank(), 2, [&](const Word& w) {
    small.push_back(w);
    return true;
  });
  std::size_t in_range = 0, gaps = 0, bad = 0;
  const std::vector<Word> shifts{Word{}, Word::generator(3), parse_word("y1 x^-1", t.alphabet())};
  for (const auto& g : shifts)
    for (const auto& a : small)
      for (const auto& bw : small) {
        if (a.empty() || bw.empty()) continue;
        TranslatingSets cand{{g, multiply(a, g)}, {g, multiply(bw, g)}};
        LowerReport lr = tarski_lower_report(t, cand, kBoxMax);
        if (lr.status == LowerStatus::Violation) {
          ++in_range;
          if (!lr.verified || lr.union_size >= lr.required || lr.box.M > kBoxMax) ++bad;
        } else if (lr.status == LowerStatus::CoverageGap) {
          ++gaps;
        } else {
          ++bad;
        }
      }
  double dt = seconds_since(t0);
  bool ok = deterministic && t.base_core_degree() == 1 && part.single_region && part.closed && free1 && free2 &&
            adversarial && d.piece_count() == 5 && dr.ok && in_range > 0 && bad == 0 && dt < kLimitTower4;
  detail = "window " + std::to_string(b.window.size()) + " vertices, single_region=" + (part.single_region ? "ok" : "broken") +
           ", Y1/Y2 free=" + std::to_string(free1) + "/" + std::to_string(free2) + ", wrong-j cycle found=" +
           std::to_string(adversarial) + ", upper pieces=" + std::to_string(d.piece_count()) +
           (dr.ok ? " verified" : " FAILED") + ", lower violations=" + std::to_string(in_range) +
           " gaps=" + std::to_string(gaps) + " bad=" + std::to_string(bad) + ", " + std::to_string(dt) + "s";
  return ok;
}

bool criterion9(std::string& detail) {
  const Alphabet f3({"x", "y", "z"});
  auto w = [&](const char* s) { return parse_word(s, f3); };
  bool examples = zassenhaus_member(w("x^2"), 2, 2) && zassenhaus_member(w("x^-1 y^-1 x y"), 2, 2) &&
                  !zassenhaus_member(w("x"), 2, 2);
  std::mt19937_64 rng(9);
  // Mix of plain words, commutators, squares and nested commutators so that
  // deeper filtration levels are populated.
  auto sample = [&](int i) {
    Word u = random_word(rng, 3, 1, 4), v = random_word(rng, 3, 1, 4), s = random_word(rng, 3, 1, 3);
    switch (i % 5) {
      case 0: return u;
      case 1: return commutator(u, v);
      case 2: return power(u, 2);
      case 3: return commutator(commutator(u, v), s);
      default: return power(commutator(u, v), 2);
    }
  };
  std::size_t nest_bad = 0, deep = 0;
  for (int i = 0; i < 500; ++i) {
    Word u = sample(i);
    for (int n = 1; n < 6; ++n) {
      bool hi = zassenhaus_member(u, n + 1, 2), lo = zassenhaus_member(u, n, 2);
      if (hi && !lo) ++nest_bad;
      if (hi && n + 1 >= 3) ++deep;
    }
  }
  std::size_t normal_bad = 0;
  for (int i = 0; i < 100; ++i) {
    Word u = sample(i);
    int level = 1;
    while (level < 6 && zassenhaus_member(u, level + 1, 2)) ++level;
    Word g = random_word(rng, 3, 1, 4);
    if (!zassenhaus_member(conjugate(u, g), level, 2)) ++normal_bad;
  }
  detail = std::string("examples ") + (examples ? "ok" : "wrong") + ", nesting violations=" + std::to_string(nest_bad) +
           " (deep memberships " + std::to_string(deep) + "), normality violations=" + std::to_string(normal_bad);
  return examples && nest_bad == 0 && normal_bad == 0 && deep > 0;
}

bool criterion10(std::string& detail) {
  const Alphabet f3({"x", "y", "z"});
  auto t0 = Clock::now();
  FindMResult r = find_m(1, 2, 16);
  double dt = seconds_since(t0);
  std::size_t witnesses_ok = 0;
  for (const auto& f : r.failures) {
    bool ok = !f.pass && !f.witness.empty() && f.witness.size() < 12 && f.witness == multiply(f.u, invert(f.v)) &&
              zassenhaus_member(f.witness, f.m, 2);
    if (ok) ++witnesses_ok;
  }
  bool m2 = !r.failures.empty() && r.failures.front().m == 2 && r.failures.front().witness.size() == 2;
  detail = "m(1)=" + std::to_string(r.certificate.m) + " at radius " + std::to_string(r.certificate.radius) + ", " +
           std::to_string(r.certificate.checked) + " words, " + std::to_string(witnesses_ok) + "/" +
           std::to_string(r.failures.size()) + " failure witnesses verify (m=2: " +
           (r.failures.empty() ? std::string("-") : format_word(r.failures.front().witness, f3)) + "), " +
           std::to_string(dt) + "s";
  return r.certificate.pass && r.certificate.radius == 6 && r.certificate.m == 9 &&
         witnesses_ok == r.failures.size() && m2 && dt < kLimitFindM;
}

bool criterion11(std::string& detail) {
  const Alphabet f3({"x", "y", "z"});
  const Word a = Word::generator(0), b = Word::generator(1), c = Word::generator(2);
  CoreGraph core = build_core({power(a, 36), power(conjugate(a, b), 36), power(conjugate(a, c), 36)}, f3);
  ForestCert cert = sparse_spanning_tree(core, 12);
  // Independent check: union-find over kept edges, lost counts from removed.
  const int n = core.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]); };
  bool acyclic = true;
  for (const auto& e : cert.kept) {
    int r1 = find(e.from), r2 = find(e.to);
    if (r1 == r2) acyclic = false;
    parent[static_cast<std::size_t>(r1)] = r2;
  }
  bool spanning = static_cast<int>(cert.kept.size()) == n - 1 &&
                  cert.kept.size() + cert.removed.size() == static_cast<std::size_t>(core.edge_count());
  std::vector<int> lost(static_cast<std::size_t>(n), 0);
  for (const auto& e : cert.removed) {
    ++lost[static_cast<std::size_t>(e.from)];
    if (e.to != e.from) ++lost[static_cast<std::size_t>(e.to)];
  }
  int max_lost = *std::max_element(lost.begin(), lost.end());
  bool ok = acyclic && spanning && max_lost <= 1 && is_valid_forest_cert(core, cert) && !has_loops(core);
  detail = std::to_string(n) + " vertices, removed " + std::to_string(cert.removed.size()) + " edges, max lost=" +
           std::to_string(max_lost) + ", acyclic=" + std::to_string(acyclic) + ", has_loops=" +
           std::to_string(has_loops(core));
  return ok;
}

bool criterion12(std::string& detail) {
  auto t0 = Clock::now();
  Tower5Build b = build_tower5(2, 1, 2, 3);
  Tower5Report r = verify_tower5(b, 4, 100, 1);
  double dt = seconds_since(t0);
  detail = "window " + std::to_string(b.window.size()) + " vertices, deficient vertex " +
           std::to_string(r.deficient_vertex) + " (degree " + std::to_string(r.deficient_degree) + "), spine=" +
           std::to_string(r.spine_constraint) + ", attach<6=" + std::to_string(r.attach_indegree) + ", doubling=" +
           std::to_string(r.doubling.ok) + ", samples " + std::to_string(r.doubling_samples) + " ok=" +
           std::to_string(r.doubling_samples_ok) + ", fixed " + std::to_string(r.fixed_checked) + " ok=" +
           std::to_string(r.fixed_points) + ", " + std::to_string(dt) + "s";
  for (const auto& f : r.failures) detail += "; " + f;
  return r.ok && r.doubling_samples == 100 && r.fixed_checked > 0 && dt < kLimitTower5;
}

}  // namespace

int main() {
  run(1, "stallings membership", criterion1);
  run(2, "rank and index", criterion2);
  run(3, "origin in-degree bound", criterion3);
  run(4, "find_j witness search", criterion4);
  run(5, "classical decomposition", criterion5);
  run(6, "hall engine", criterion6);
  run(7, "lemma6 certificate", criterion7);
  run(8, "tower4", criterion8);
  run(9, "zassenhaus filtration", criterion9);
  run(10, "m(n) certification", criterion10);
  run(11, "sparse spanning tree", criterion11);
  run(12, "tower5", criterion12);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
