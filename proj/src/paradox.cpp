#include "tarski/paradox.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tarski/error.hpp"
#include "tarski/matching.hpp"

namespace tarski {

namespace {

std::vector<int> owners(const Window& w, const Decomposition& d, DecompositionReport* report) {
  std::vector<int> owner(static_cast<std::size_t>(w.size()), -1);
  for (std::size_t i = 0; i < d.pieces.size(); ++i)
    for (int v : d.pieces[i]) {
      if (v < 0 || v >= w.size())
        throw Error(ErrorKind::Precondition, "piece references unknown vertex " + std::to_string(v));
      int& o = owner[static_cast<std::size_t>(v)];
      if (o != -1 && o != static_cast<int>(i) && report && report->disjoint) {
        report->disjoint = false;
        report->overlap_vertex = v;
      }
      o = static_cast<int>(i);
    }
  return owner;
}

int resolve(const Window& w, int v, const Word& u) {
  auto t = w.trace(v, u);
  if (!t)
    throw Error(ErrorKind::Precondition, "translate of vertex " + std::to_string(v) + " (" +
                                             format_word(w.reps[static_cast<std::size_t>(v)], w.alphabet) +
                                             ") leaves the window");
  return *t;
}

}  // namespace

DecompositionReport verify_decomposition(const Window& w, const Decomposition& d) {
  DecompositionReport r;
  if (d.pieces.size() != d.sets.S1.size() + d.sets.S2.size())
    throw Error(ErrorKind::Precondition, "piece count does not match the translating sets");
  auto owner = owners(w, d, &r);
  const std::size_t m = d.sets.S1.size();
  std::vector<Word> inv;
  for (const auto& g : d.sets.S1) inv.push_back(invert(g));
  for (const auto& h : d.sets.S2) inv.push_back(invert(h));
  for (int v : w.interior_vertices()) {
    ++r.checked;
    bool unresolved = false;
    auto covered = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        auto t = w.trace(v, inv[i]);
        if (!t) {
          unresolved = true;
          continue;
        }
        if (owner[static_cast<std::size_t>(*t)] == static_cast<int>(i)) return true;
      }
      return false;
    };
    bool p = covered(0, m), q = covered(m, inv.size());
    if (p && q) continue;
    if (unresolved) {
      ++r.unverifiable;
      continue;
    }
    if (!p) r.uncovered_p.push_back(v);
    if (!q) r.uncovered_q.push_back(v);
  }
  r.ok = r.disjoint && r.uncovered_p.empty() && r.uncovered_q.empty();
  return r;
}

Decomposition free_action_decomposition(const Window& w, const Word& x, const Word& y, const std::vector<int>* domain) {
  const int n = w.size();
  std::vector<char> allowed(static_cast<std::size_t>(n), domain ? 0 : 1);
  if (domain)
    for (int v : *domain) allowed[static_cast<std::size_t>(v)] = 1;
  const std::vector<Word> moves{x, invert(x), y, invert(y)};

  Decomposition d;
  d.sets.S1 = {Word{}, x};
  d.sets.S2 = {Word{}, y};
  d.pieces.assign(4, {});
  std::vector<int> tag(static_cast<std::size_t>(n), -2), parent(static_cast<std::size_t>(n), -1);
  std::vector<Word> path(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    if (!allowed[static_cast<std::size_t>(r)] || tag[static_cast<std::size_t>(r)] != -2) continue;
    tag[static_cast<std::size_t>(r)] = -1;
    std::vector<int> q{r};
    for (std::size_t i = 0; i < q.size(); ++i) {
      const int u = q[i];
      for (int k = 0; k < 4; ++k) {
        auto t = w.trace(u, moves[static_cast<std::size_t>(k)]);
        if (!t || !allowed[static_cast<std::size_t>(*t)]) continue;
        const int v = *t;
        if (tag[static_cast<std::size_t>(v)] == -2) {
          tag[static_cast<std::size_t>(v)] = k;
          parent[static_cast<std::size_t>(v)] = u;
          path[static_cast<std::size_t>(v)] = multiply(path[static_cast<std::size_t>(u)], moves[static_cast<std::size_t>(k)]);
          q.push_back(v);
          continue;
        }
        const bool tree_edge = (parent[static_cast<std::size_t>(v)] == u && tag[static_cast<std::size_t>(v)] == k) ||
                               (parent[static_cast<std::size_t>(u)] == v && tag[static_cast<std::size_t>(u)] == (k ^ 1));
        if (!tree_edge) {
          Word cycle = multiply(multiply(path[static_cast<std::size_t>(u)], moves[static_cast<std::size_t>(k)]),
                                invert(path[static_cast<std::size_t>(v)]));
          throw Error(ErrorKind::Freeness, "orbit of " + format_word(w.reps[static_cast<std::size_t>(r)], w.alphabet) +
                                               " has the cycle " + format_word(cycle, w.alphabet));
        }
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (tag[static_cast<std::size_t>(v)] >= 0) d.pieces[static_cast<std::size_t>(tag[static_cast<std::size_t>(v)])].push_back(v);
  return d;
}

std::size_t translate_union_size(const Window& w, const TranslatingSets& ts, const std::vector<int>& A1,
                                 const std::vector<int>& A2) {
  std::unordered_set<int> out;
  for (const auto& [A, S] : {std::pair{&A1, &ts.S1}, std::pair{&A2, &ts.S2}})
    for (int v : *A)
      for (const auto& s : *S) out.insert(resolve(w, v, invert(s)));
  return out.size();
}

bool reverify(const Window& w, const TranslatingSets& ts, const HallViolation& v) {
  auto distinct = [](std::vector<int> a) {
    std::sort(a.begin(), a.end());
    return std::adjacent_find(a.begin(), a.end()) == a.end();
  };
  if (!distinct(v.A1) || !distinct(v.A2)) return false;
  const std::size_t u = translate_union_size(w, ts, v.A1, v.A2);
  return u == v.union_size && v.required == v.A1.size() + v.A2.size() && u < v.required;
}

HallResult hall_check(const Window& w, const TranslatingSets& ts, const std::vector<int>& pool) {
  HallResult res;
  res.pool = pool.size();
  BipartiteMatcher bm(static_cast<int>(2 * pool.size()), w.size());
  std::vector<Word> inv1, inv2;
  for (const auto& s : ts.S1) inv1.push_back(invert(s));
  for (const auto& s : ts.S2) inv2.push_back(invert(s));
  for (std::size_t k = 0; k < pool.size(); ++k) {
    for (const auto& s : inv1) bm.add_edge(static_cast<int>(2 * k), resolve(w, pool[k], s));
    for (const auto& s : inv2) bm.add_edge(static_cast<int>(2 * k + 1), resolve(w, pool[k], s));
  }
  res.matching = static_cast<std::size_t>(bm.solve());
  if (res.matching == 2 * pool.size()) return res;
  res.satisfied = false;
  auto def = bm.deficient_left();
  HallViolation v;
  for (int l : def) (l % 2 == 0 ? v.A1 : v.A2).push_back(pool[static_cast<std::size_t>(l / 2)]);
  v.union_size = bm.neighbours(def).size();
  v.required = def.size();
  if (!reverify(w, ts, v)) throw Error(ErrorKind::Invariant, "deficient set failed arithmetic re-verification");
  res.violation = std::move(v);
  return res;
}

DoublingResult doubling_check(const Window& w, const std::vector<Word>& S, const std::vector<int>& A) {
  std::unordered_set<int> out(A.begin(), A.end());
  const std::size_t a = out.size();
  for (int v : A)
    for (const auto& s : S) out.insert(resolve(w, v, invert(s)));
  DoublingResult r;
  r.union_size = out.size();
  r.required = 2 * a;
  r.ok = r.union_size >= r.required;
  return r;
}

DoublingCert forest_doubling_cert(const Window& w, const std::vector<Word>& S, const std::vector<WindowEdge>& removed) {
  DoublingCert cert;
  cert.removed = removed;
  for (const auto& s : S)
    if (s.size() != 1) throw Error(ErrorKind::Precondition, "doubling certificate needs single-letter S");
  const int n = w.size();
  auto key = [](const WindowEdge& e) {
    return (static_cast<std::uint64_t>(e.from) << 34) ^ (static_cast<std::uint64_t>(e.to) << 4) ^
           static_cast<std::uint64_t>(e.gen);
  };
  std::unordered_set<std::uint64_t> gone;
  for (const auto& e : removed) gone.insert(key(e));

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (int v = 0; v < n; ++v)
    for (int g = 0; g < w.alphabet.rank(); ++g) {
      int t = w.step(v, Letter(g, 1));
      if (t == -1) continue;
      if (t == v) {
        cert.failure = "loop at vertex";
        cert.witness = v;
        return cert;
      }
      if (gone.count(key({v, t, g}))) continue;
      int a = find(v), b = find(t);
      if (a == b) {
        cert.failure = "kept edges contain a cycle";
        cert.witness = v;
        return cert;
      }
      parent[static_cast<std::size_t>(a)] = b;
      ++cert.forest_edges;
    }
  cert.indegree.assign(static_cast<std::size_t>(n), -1);
  for (int v : w.interior_vertices()) {
    int count = 0;
    for (const auto& s : S) {
      Letter l = s[0];
      int u = w.step(v, l.inverse());
      WindowEdge e = l.positive() ? WindowEdge{u, v, l.index()} : WindowEdge{v, u, l.index()};
      if (u != -1 && !gone.count(key(e))) ++count;
    }
    cert.indegree[static_cast<std::size_t>(v)] = count;
    if (count < 2 && cert.witness == -1) {
      cert.failure = "interior vertex with fewer than two incoming S-edges";
      cert.witness = v;
    }
  }
  cert.ok = cert.witness == -1;
  return cert;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::size_t box_union_size(const std::vector<ZVector>& S1, const std::vector<ZVector>& S2, int k, int M) {
  std::unordered_set<std::vector<std::int64_t>, VecHash> out;
  std::vector<std::int64_t> cell(static_cast<std::size_t>(k), 0);
  std::size_t cells = 1;
  for (int i = 0; i < k; ++i) cells *= static_cast<std::size_t>(M);
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t rest = c;
    for (int i = 0; i < k; ++i) {
      cell[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(M));
      rest /= static_cast<std::size_t>(M);
    }
    for (const auto* S : {&S1, &S2})
      for (const auto& s : *S) {
        auto t = cell;
        for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] -= s(i);
        out.insert(std::move(t));
      }
  }
  return out.size();
}

BoxViolation folner_violation(const std::vector<ZVector>& S1, const std::vector<ZVector>& S2, int m_max) {
  int k = -1;
  for (const auto* S : {&S1, &S2})
    for (const auto& s : *S) {
      if (k != -1 && s.size() != k) throw Error(ErrorKind::Precondition, "vectors of different dimension");
      k = static_cast<int>(s.size());
    }
  if (k < 0) throw Error(ErrorKind::Precondition, "empty translating sets");
  for (int M = 1; M <= m_max; ++M) {
    double cells = std::pow(static_cast<double>(M), k);
    if (cells > 4e6) break;
    std::size_t a = static_cast<std::size_t>(cells + 0.5);
    std::size_t u = box_union_size(S1, S2, k, M);
    if (u < 2 * a) return {k, M, u, 2 * a};
  }
  throw Error(ErrorKind::NotFound, "no violating box with M <= " + std::to_string(m_max));
}

Lemma6Certificate lemma6_certificate(const Word& a, const Word& b, const Word& c, int r, const Alphabet& alphabet) {
  if (a.empty()) throw Error(ErrorKind::ShapeCheck, "a must be nontrivial");
  if (r < 1) throw Error(ErrorKind::ShapeCheck, "r must be positive");
  Lemma6Certificate cert;
  GenTuple t{power(a, r), power(conjugate(a, b), r), power(conjugate(a, c), r)};
  cert.core = build_core(t, alphabet);
  const int depth = static_cast<int>(std::max({a.size(), b.size(), c.size()})) + 1;
  cert.window = expand_core(cert.core, depth);
  const Window& w = cert.window;

  std::set<int> A1;
  for (const Word& g : {Word{}, invert(b), invert(c)}) {
    auto start = w.trace(w.base(), g);
    if (!start) throw Error(ErrorKind::ShapeCheck, "o g^-1 leaves the window");
    int v = *start;
    std::set<int> orbit;
    for (int j = 0; j < r; ++j) {
      if (!orbit.insert(v).second) throw Error(ErrorKind::ShapeCheck, "a-orbit closes before r steps");
      auto nv = w.trace(v, a);
      if (!nv) throw Error(ErrorKind::ShapeCheck, "a-orbit leaves the window");
      v = *nv;
    }
    if (v != *start) throw Error(ErrorKind::ShapeCheck, "a-orbit is not a closed r-cycle");
    A1.insert(orbit.begin(), orbit.end());
  }
  cert.A1.assign(A1.begin(), A1.end());
  cert.A2 = {w.base()};
  cert.sets.S1 = {Word{}, a};
  cert.sets.S2 = {Word{}, b, c};
  HallViolation v;
  v.A1 = cert.A1;
  v.A2 = cert.A2;
  v.union_size = translate_union_size(w, cert.sets, v.A1, v.A2);
  v.required = v.A1.size() + v.A2.size();
  if (v.union_size >= v.required) throw Error(ErrorKind::ShapeCheck, "the constructed sets do not violate Hall's condition");
  cert.violation = std::move(v);
  return cert;
}

TranslatingSets shift_sets(const TranslatingSets& ts, const Word& g1, const Word& g2) {
  TranslatingSets out;
  for (const auto& s : ts.S1) out.S1.push_back(multiply(s, g1));
  for (const auto& s : ts.S2) out.S2.push_back(multiply(s, g2));
  return out;
}

Decomposition restrict_to_orbit(const Decomposition& d, const std::vector<int>& orbit) {
  std::unordered_set<int> keep(orbit.begin(), orbit.end());
  Decomposition out;
  out.sets = d.sets;
  for (const auto& piece : d.pieces) {
    std::vector<int> p;
    for (int v : piece)
      if (keep.count(v)) p.push_back(v);
    out.pieces.push_back(std::move(p));
  }
  return out;
}

Decomposition combine_orbits(const std::vector<Decomposition>& parts) {
  if (parts.empty()) return {};
  Decomposition out;
  out.sets = parts.front().sets;
  out.pieces.assign(parts.front().pieces.size(), {});
  std::unordered_set<int> seen;
  for (const auto& d : parts) {
    if (d.sets.S1 != out.sets.S1 || d.sets.S2 != out.sets.S2 || d.pieces.size() != out.pieces.size())
      throw Error(ErrorKind::Precondition, "combined decompositions must share translating sets");
    for (std::size_t i = 0; i < d.pieces.size(); ++i)
      for (int v : d.pieces[i]) {
        if (!seen.insert(v).second) throw Error(ErrorKind::Precondition, "orbits overlap at vertex " + std::to_string(v));
        out.pieces[i].push_back(v);
      }
  }
  for (auto& p : out.pieces) std::sort(p.begin(), p.end());
  return out;
}

Decomposition lift(const Decomposition& d, const Window& source, const Window& target, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != source.size()) throw Error(ErrorKind::Precondition, "map size differs from source window");
  for (int v : source.interior_vertices()) {
    const int fv = f[static_cast<std::size_t>(v)];
    if (fv == -1) continue;
    for (int s = 0; s < source.slots(); ++s) {
      const Letter l = Letter::from_slot(s);
      const int t = source.step(v, l);
      if (t == -1) continue;
      const int ft = f[static_cast<std::size_t>(t)], fy = target.step(fv, l);
      if (ft != -1 && fy != -1 && ft != fy)
        throw Error(ErrorKind::NonEquivariant,
                    "f(v s) != f(v) s at vertex " + format_word(source.reps[static_cast<std::size_t>(v)], source.alphabet) +
                        " for letter " + format_word(Word::reduce(std::vector<Letter>{l}), source.alphabet));
    }
  }
  std::vector<int> owner = owners(target, d, nullptr);
  Decomposition out;
  out.sets = d.sets;
  out.pieces.assign(d.pieces.size(), {});
  for (int v = 0; v < source.size(); ++v) {
    const int fv = f[static_cast<std::size_t>(v)];
    if (fv != -1 && owner[static_cast<std::size_t>(fv)] != -1) out.pieces[static_cast<std::size_t>(owner[static_cast<std::size_t>(fv)])].push_back(v);
  }
  return out;
}

}  // namespace tarski
