#include "tarski/filtration.hpp"

#include <unordered_map>

#include "tarski/error.hpp"

namespace tarski {

TruncSeries::TruncSeries(std::uint32_t p, int bound) : p_(p), bound_(bound) {
  if (p < 2) throw Error(ErrorKind::Precondition, "p must be a prime >= 2");
  if (bound < 1) throw Error(ErrorKind::Precondition, "truncation degree must be >= 1");
}

TruncSeries TruncSeries::one(std::uint32_t p, int bound) {
  TruncSeries s(p, bound);
  s.terms_[""] = 1;
  return s;
}

TruncSeries TruncSeries::letter(Letter l, std::uint32_t p, int bound) {
  TruncSeries s(p, bound);
  const char g = static_cast<char>(l.index());
  if (l.positive()) {
    s.add("", 1);
    if (bound > 1) s.add(std::string(1, g), 1);
    return s;
  }
  for (int k = 0; k < bound; ++k) s.add(std::string(static_cast<std::size_t>(k), g), k % 2 ? p - 1 : 1);
  return s;
}

void TruncSeries::add(const std::string& mono, std::uint64_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(mono, 0);
  it->second = static_cast<std::uint32_t>((it->second + c) % p_);
  if (it->second == 0) terms_.erase(it);
}

bool TruncSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  if (p_ != o.p_ || bound_ != o.bound_) throw Error(ErrorKind::Precondition, "series parameters differ");
  TruncSeries out(p_, bound_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      if (static_cast<int>(a.size() + b.size()) >= bound_) continue;
      out.add(a + b, static_cast<std::uint64_t>(ca) * cb);
    }
  return out;
}

std::string TruncSeries::key() const {
  std::string k;
  for (const auto& [mono, c] : terms_) {
    k += static_cast<char>(mono.size());
    k += mono;
    k += std::to_string(c);
    k += ';';
  }
  return k;
}

std::string TruncSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Degree-major order for readability.
  std::vector<std::pair<std::string, std::uint32_t>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  for (const auto& [mono, c] : sorted) {
    if (!out.empty()) out += " + ";
    std::string term;
    for (std::size_t i = 0; i < mono.size();) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      if (!term.empty()) term += ' ';
      term += "X" + std::to_string(static_cast<int>(mono[i]));
      if (j - i > 1) term += "^" + std::to_string(j - i);
      i = j;
    }
    if (term.empty())
      out += std::to_string(c);
    else
      out += (c == 1 ? "" : std::to_string(c) + " ") + term;
  }
  return out;
}

TruncSeries magnus(const Word& w, int n, std::uint32_t p) {
  TruncSeries s = TruncSeries::one(p, n);
  for (Letter l : w) s = s * TruncSeries::letter(l, p, n);
  return s;
}

bool zassenhaus_member(const Word& w, int n, std::uint32_t p) { return magnus(w, n, p).is_one(); }

MinLengthResult certify_min_length(int m, int n, std::uint32_t p, int rank, std::size_t budget) {
  if (n < 1 || m < 1) throw Error(ErrorKind::Precondition, "certify_min_length needs m, n >= 1");
  MinLengthResult r;
  r.n = n;
  r.p = p;
  r.m = m;
  r.radius = 6 * n;
  const std::size_t bound = static_cast<std::size_t>(12 * n);

  std::vector<TruncSeries> letters;
  for (int s = 0; s < 2 * rank; ++s) letters.push_back(TruncSeries::letter(Letter::from_slot(s), p, m));

  std::unordered_map<std::string, std::vector<Word>> buckets;
  auto visit = [&](const Word& w, const TruncSeries& s) {
    if (++r.checked > budget) throw Error(ErrorKind::Budget, "certify_min_length exceeded its word budget");
    auto& bucket = buckets[s.key()];
    for (const auto& u : bucket) {
      Word c = multiply(u, invert(w));
      if (c.size() < bound) {
        r.u = u;
        r.v = w;
        r.witness = c;
        return true;
      }
    }
    bucket.push_back(w);
    return false;
  };

  std::vector<std::pair<Word, TruncSeries>> layer{{Word{}, TruncSeries::one(p, m)}};
  if (visit(layer[0].first, layer[0].second)) return r;
  for (int len = 1; len <= r.radius; ++len) {
    std::vector<std::pair<Word, TruncSeries>> next;
    for (const auto& [w, s] : layer) {
      for (int slot = 0; slot < 2 * rank; ++slot) {
        Letter l = Letter::from_slot(slot);
        if (!w.empty() && w.back() == l.inverse()) continue;
        Word x = w;
        x.push_back(l);
        TruncSeries sx = s * letters[static_cast<std::size_t>(slot)];
        if (visit(x, sx)) return r;
        next.emplace_back(std::move(x), std::move(sx));
      }
    }
    layer = std::move(next);
  }
  r.pass = true;
  return r;
}

FindMResult find_m(int n, std::uint32_t p, int m_max, int rank, std::size_t budget) {
  FindMResult out;
  for (int m = 2; m <= m_max; ++m) {
    auto r = certify_min_length(m, n, p, rank, budget);
    if (r.pass) {
      out.certificate = r;
      return out;
    }
    out.failures.push_back(r);
  }
  throw Error(ErrorKind::NotFound, "no certified m <= " + std::to_string(m_max));
}

OmegaGenerators omega_generators(int m, std::uint32_t p, int rank, std::size_t max_index) {
  OmegaGenerators out;
  std::vector<TruncSeries> letters;
  for (int s = 0; s < 2 * rank; ++s) letters.push_back(TruncSeries::letter(Letter::from_slot(s), p, m));

  std::unordered_map<std::string, std::size_t> id;
  std::vector<Word> reps{Word{}};
  std::vector<TruncSeries> series{TruncSeries::one(p, m)};
  id[series[0].key()] = 0;
  // (coset, slot) pairs used as tree edges
  std::vector<std::vector<char>> tree(1, std::vector<char>(static_cast<std::size_t>(2 * rank), 0));
  std::vector<std::vector<std::size_t>> next(1, std::vector<std::size_t>(static_cast<std::size_t>(2 * rank), 0));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (int slot = 0; slot < 2 * rank; ++slot) {
      TruncSeries t = series[i] * letters[static_cast<std::size_t>(slot)];
      auto [it, fresh] = id.try_emplace(t.key(), reps.size());
      if (fresh) {
        if (reps.size() >= max_index) throw Error(ErrorKind::Budget, "quotient exceeds the index budget");
        Word w = reps[i];
        w.push_back(Letter::from_slot(slot));
        reps.push_back(w);
        series.push_back(std::move(t));
        tree.emplace_back(static_cast<std::size_t>(2 * rank), 0);
        next.emplace_back(static_cast<std::size_t>(2 * rank), 0);
        tree[i][static_cast<std::size_t>(slot)] = 1;
        tree[it->second][static_cast<std::size_t>(slot ^ 1)] = 1;
      }
      next[i][static_cast<std::size_t>(slot)] = it->second;
    }
  }
  out.index = reps.size();
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (int g = 0; g < rank; ++g) {
      if (tree[i][static_cast<std::size_t>(2 * g)]) continue;
      Word w = reps[i];
      w.push_back(Letter(g, 1));
      out.generators.push_back(multiply(w, invert(reps[next[i][static_cast<std::size_t>(2 * g)]])));
    }
  const std::size_t expected = out.index * static_cast<std::size_t>(rank - 1) + 1;
  if (out.generators.size() != expected)
    throw Error(ErrorKind::Invariant, "Schreier generator count " + std::to_string(out.generators.size()) +
                                          " differs from the index formula " + std::to_string(expected));
  return out;
}

std::vector<GenTuple> enumerate_tuples(int m, std::uint32_t p, int rank, int n, std::size_t count,
                                       std::size_t max_index) {
  auto gens = omega_generators(m, p, rank, max_index);
  std::vector<GenTuple> out;
  for (const auto& t : first_tuples(static_cast<int>(gens.generators.size()), n, count)) {
    GenTuple mapped;
    for (const auto& w : t) {
      Word img;
      for (Letter l : w) {
        const Word& g = gens.generators[static_cast<std::size_t>(l.index())];
        img = multiply(img, l.positive() ? g : invert(g));
      }
      mapped.push_back(img);
    }
    out.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace tarski
