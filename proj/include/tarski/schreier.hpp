#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tarski/error.hpp"
#include "tarski/freewords.hpp"
#include "tarski/stallings.hpp"

namespace tarski {

/// Membership test for a subgroup H, optionally with a canonical key for the
/// coset H w (two words get the same key iff their cosets agree).
struct Oracle {
  std::string name;
  std::function<bool(const Word&)> contains;
  std::function<std::string(const Word&)> coset_key;  // may be empty
};

Oracle oracle_fg(const CoreGraph& c);
/// Membership in the derived subgroup of the group of `am`'s core.
Oracle oracle_gamma2(const AbelianMap& am);
/// Oracle for g^-1 H g.
Oracle oracle_conjugate(const Oracle& o, const Word& g);
Oracle oracle_trivial();

/// Finite piece of a Schreier graph around the base coset. Vertices at
/// distance `radius` form the frontier and may lack transitions.
struct Window {
  Alphabet alphabet;
  int radius = 0;
  std::string provenance;
  std::vector<Word> reps;
  std::vector<int> dist;
  std::vector<int> next;  // vertex * letter_count + slot, -1 if unknown

  int size() const noexcept { return static_cast<int>(reps.size()); }
  int base() const noexcept { return 0; }
  int slots() const noexcept { return alphabet.letter_count(); }
  bool frontier(int v) const { return dist[static_cast<std::size_t>(v)] >= radius; }
  bool interior(int v) const { return !frontier(v); }
  int step(int v, Letter l) const { return next[static_cast<std::size_t>(v * slots() + l.slot())]; }
  std::vector<int> interior_vertices() const;
  std::vector<int> frontier_vertices() const;

  /// nullopt when the walk leaves the window (frontier exit).
  std::optional<int> trace(int v, const Word& u) const;
};

/// Coset BFS driven by an oracle. Uses the coset key when present; otherwise
/// each new word is compared against every known coset.
Window expand(const Oracle& o, const Alphabet& alphabet, int radius, std::size_t budget = 2'000'000);

/// Generic BFS over explicit states. `step(state, letter)` must be a total,
/// invertible action. Seeds all sit at distance 0, so with several seeds the
/// radius is the depth measured from the seed set.
template <class State, class Hash = std::hash<State>>
struct StateWindow {
  Window window;
  std::vector<State> states;
  std::unordered_map<State, int, Hash> index;
};

template <class State, class Hash = std::hash<State>, class Step>
StateWindow<State, Hash> expand_states(const Alphabet& alphabet, const std::vector<std::pair<State, Word>>& seeds,
                                       Step step, int radius, std::size_t budget, std::string provenance) {
  StateWindow<State, Hash> sw;
  Window& w = sw.window;
  w.alphabet = alphabet;
  w.radius = radius;
  w.provenance = std::move(provenance);
  const int slots = alphabet.letter_count();
  auto add = [&](const State& s, Word rep, int d) {
    if (sw.states.size() >= budget) throw Error(ErrorKind::Budget, "window exceeds the vertex budget");
    int id = static_cast<int>(sw.states.size());
    sw.index.emplace(s, id);
    sw.states.push_back(s);
    w.reps.push_back(std::move(rep));
    w.dist.push_back(d);
    w.next.insert(w.next.end(), static_cast<std::size_t>(slots), -1);
    return id;
  };
  for (const auto& [s, rep] : seeds)
    if (!sw.index.count(s)) add(s, rep, 0);
  for (std::size_t i = 0; i < sw.states.size(); ++i) {
    const int d = w.dist[i];
    for (int slot = 0; slot < slots; ++slot) {
      const Letter l = Letter::from_slot(slot);
      State t = step(sw.states[i], l);
      auto it = sw.index.find(t);
      int tid;
      if (it != sw.index.end()) {
        tid = it->second;
      } else if (d < radius) {
        Word rep = w.reps[i];
        rep.push_back(l);
        tid = add(t, std::move(rep), d + 1);
      } else {
        continue;
      }
      w.next[i * static_cast<std::size_t>(slots) + static_cast<std::size_t>(slot)] = tid;
      w.next[static_cast<std::size_t>(tid * slots + l.inverse().slot())] = static_cast<int>(i);
    }
  }
  return sw;
}

/// The Schreier graph of the subgroup of `c`: its core plus hanging trees of
/// the given depth.
Window expand_core(const CoreGraph& c, int depth, std::size_t budget = 2'000'000);

/// DOT marks frontier vertices dashed; JSON embeds provenance and radius.
std::string window_to_dot(const Window& w);
std::string window_to_json(const Window& w);

}  // namespace tarski
