#include "tarski/schreier.hpp"

#include <sstream>

namespace tarski {

namespace {

std::string codes(const Word& w) {
  std::string s;
  for (Letter l : w) s += std::to_string(l.code()) + ",";
  return s;
}

std::string vector_key(const ZVector& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::to_string(v(i)) + ",";
  return s + "]";
}

struct PointHash {
  std::size_t operator()(const SchreierPoint& p) const noexcept {
    return std::hash<Word>{}(p.tail) * 31u + static_cast<std::size_t>(p.vertex);
  }
};

}  // namespace

Oracle oracle_fg(const CoreGraph& c) {
  Oracle o;
  o.name = "fg(" + std::to_string(c.vertex_count()) + " vertices, rank " + std::to_string(rank(c)) + ")";
  o.contains = [c](const Word& w) { return is_member(c, w); };
  o.coset_key = [c](const Word& w) {
    auto p = schreier_trace(c, c.base(), w);
    return std::to_string(p.vertex) + "|" + codes(p.tail);
  };
  return o;
}

Oracle oracle_gamma2(const AbelianMap& am) {
  Oracle o;
  o.name = "gamma2(rank " + std::to_string(am.dimension()) + ")";
  o.contains = [am](const Word& w) {
    auto v = am.core().trace(am.core().base(), w);
    if (!v || *v != am.core().base()) return false;
    return am.image(w)->isZero();
  };
  o.coset_key = [am](const Word& w) {
    const CoreGraph& c = am.core();
    auto p = schreier_trace(c, c.base(), w);
    std::size_t core_len = w.size() - p.tail.size();
    Word prefix = Word::reduce(w.letters().subspan(0, core_len));
    return std::to_string(p.vertex) + "|" + codes(p.tail) + "|" + vector_key(*am.walk(c.base(), prefix));
  };
  return o;
}

Oracle oracle_conjugate(const Oracle& o, const Word& g) {
  Oracle out;
  out.name = o.name + "^g";
  Word gi = invert(g);
  out.contains = [o, g, gi](const Word& w) { return o.contains(multiply(multiply(g, w), gi)); };
  if (o.coset_key) out.coset_key = [o, g](const Word& w) { return o.coset_key(multiply(g, w)); };
  return out;
}

Oracle oracle_trivial() {
  Oracle o;
  o.name = "trivial";
  o.contains = [](const Word& w) { return w.empty(); };
  o.coset_key = [](const Word& w) { return codes(w); };
  return o;
}

std::vector<int> Window::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (interior(v)) out.push_back(v);
  return out;
}

std::vector<int> Window::frontier_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (frontier(v)) out.push_back(v);
  return out;
}

std::optional<int> Window::trace(int v, const Word& u) const {
  for (Letter l : u) {
    v = step(v, l);
    if (v == -1) return std::nullopt;
  }
  return v;
}

Window expand(const Oracle& o, const Alphabet& alphabet, int radius, std::size_t budget) {
  Window w;
  w.alphabet = alphabet;
  w.radius = radius;
  w.provenance = "oracle " + o.name + ", radius " + std::to_string(radius);
  const int slots = alphabet.letter_count();
  std::unordered_map<std::string, int> by_key;
  auto add = [&](Word rep, int d) {
    if (w.reps.size() >= budget) throw Error(ErrorKind::Budget, "window exceeds the vertex budget");
    if (o.coset_key) by_key.emplace(o.coset_key(rep), w.size());
    w.reps.push_back(std::move(rep));
    w.dist.push_back(d);
    w.next.insert(w.next.end(), static_cast<std::size_t>(slots), -1);
    return w.size() - 1;
  };
  auto locate = [&](const Word& u) -> int {
    if (o.coset_key) {
      auto it = by_key.find(o.coset_key(u));
      return it == by_key.end() ? -1 : it->second;
    }
    for (int j = 0; j < w.size(); ++j)
      if (o.contains(multiply(u, invert(w.reps[static_cast<std::size_t>(j)])))) return j;
    return -1;
  };
  add(Word{}, 0);
  for (int i = 0; i < w.size(); ++i) {
    const int d = w.dist[static_cast<std::size_t>(i)];
    for (int slot = 0; slot < slots; ++slot) {
      if (w.next[static_cast<std::size_t>(i * slots + slot)] != -1) continue;
      const Letter l = Letter::from_slot(slot);
      Word u = w.reps[static_cast<std::size_t>(i)];
      u.push_back(l);
      int t = locate(u);
      if (t == -1) {
        if (d >= radius) continue;
        t = add(std::move(u), d + 1);
      }
      int& back = w.next[static_cast<std::size_t>(t * slots + l.inverse().slot())];
      if (back != -1 && back != i) throw Error(ErrorKind::Invariant, "oracle is not consistent with a group action");
      back = i;
      w.next[static_cast<std::size_t>(i * slots + slot)] = t;
    }
  }
  return w;
}

Window expand_core(const CoreGraph& c, int depth, std::size_t budget) {
  auto words = spanning_words(c);
  std::vector<std::pair<SchreierPoint, Word>> seeds;
  for (int v = 0; v < c.vertex_count(); ++v) seeds.push_back({SchreierPoint{v, Word{}}, words[static_cast<std::size_t>(v)]});
  auto step = [&c](const SchreierPoint& p, Letter l) {
    if (p.tail.empty()) {
      int t = c.target(p.vertex, l);
      if (t != -1) return SchreierPoint{t, Word{}};
    }
    SchreierPoint q = p;
    q.tail.push_back(l);
    return q;
  };
  auto sw = expand_states<SchreierPoint, PointHash>(c.alphabet(), seeds, step, depth, budget,
                                                    "core of rank " + std::to_string(rank(c)) + ", depth " +
                                                        std::to_string(depth));
  return std::move(sw.window);
}

std::string window_to_dot(const Window& w) {
  std::ostringstream out;
  out << "digraph window {\n";
  out << "  // " << w.provenance << "\n";
  for (int v = 0; v < w.size(); ++v) {
    out << "  " << v << " [label=\"" << format_word(w.reps[static_cast<std::size_t>(v)], w.alphabet) << "\"";
    if (v == w.base()) out << ", shape=doublecircle";
    if (w.frontier(v)) out << ", style=dashed";
    out << "];\n";
  }
  for (int v = 0; v < w.size(); ++v)
    for (int g = 0; g < w.alphabet.rank(); ++g) {
      int t = w.step(v, Letter(g, 1));
      if (t != -1) out << "  " << v << " -> " << t << " [label=\"" << w.alphabet.name(g) << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace tarski
