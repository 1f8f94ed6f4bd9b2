#include "tarski/freewords.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "tarski/error.hpp"

namespace tarski {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::Parse, "alphabet must have at least one generator");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::Parse, "empty generator name");
    if (n == "1") throw Error(ErrorKind::Parse, "'1' is reserved for the identity");
    for (char c : n) {
      if (c == '^' || c == ',' || std::isspace(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::Parse, "invalid generator name '" + n + "'");
    }
    if (!seen.insert(n).second) throw Error(ErrorKind::Parse, "duplicate generator '" + n + "'");
  }
}

Alphabet Alphabet::parse(std::string_view text) {
  std::string s(text);
  if (auto pos = s.find("alphabet:"); pos != std::string::npos) s = s.substr(pos + 9);
  std::istringstream in(s);
  std::vector<std::string> names;
  for (std::string tok; in >> tok;) names.push_back(tok);
  return Alphabet(std::move(names));
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::string Alphabet::header() const {
  std::string out = "alphabet:";
  for (const auto& n : names_) out += " " + n;
  return out;
}

// ---------------------------------------------------------------------------
// Word

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) w.push_back(l);
  return w;
}

void Word::push_back(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse())
    letters_.pop_back();
  else
    letters_.push_back(l);
}

std::strong_ordering Word::operator<=>(const Word& o) const noexcept {
  if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (auto c = letters_[i] <=> o.letters_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

void check_alphabet(const Word& w, const Alphabet& alphabet) {
  for (Letter l : w)
    if (l.index() >= alphabet.rank())
      throw Error(ErrorKind::AlphabetMismatch,
                  "letter index " + std::to_string(l.index()) + " outside alphabet of rank " +
                      std::to_string(alphabet.rank()));
}

Word reduce(std::span<const Letter> letters, const Alphabet& alphabet) {
  for (Letter l : letters)
    if (l.index() >= alphabet.rank())
      throw Error(ErrorKind::AlphabetMismatch,
                  "letter index " + std::to_string(l.index()) + " outside alphabet of rank " +
                      std::to_string(alphabet.rank()));
  return Word::reduce(letters);
}

Word multiply(const Word& u, const Word& v) {
  std::size_t cancel = 0;
  while (cancel < u.size() && cancel < v.size() && u[u.size() - 1 - cancel] == v[cancel].inverse()) ++cancel;
  std::vector<Letter> out(u.begin(), u.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(cancel), v.end());
  return Word::reduce(out);
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) out.push_back(it->inverse());
  return Word::reduce(out);
}

Word conjugate(const Word& u, const Word& g) { return multiply(multiply(invert(g), u), g); }

Word power(const Word& u, long long k) {
  Word base = k < 0 ? invert(u) : u;
  Word out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
  return out;
}

Word commutator(const Word& u, const Word& v) {
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

std::vector<Word> cyclic_conjugates(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
  std::vector<Word> out;
  for (std::size_t s = 0; s < core.size(); ++s) {
    std::vector<Letter> rot(core.begin() + static_cast<std::ptrdiff_t>(s), core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(s));
    out.push_back(Word::reduce(rot));
  }
  if (out.empty()) out.emplace_back();
  return out;
}

// ---------------------------------------------------------------------------
// Text format

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(w[i].index());
    if (!w[i].positive()) out += "^-1";
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  for (std::string tok; in >> tok;) {
    if (tok == "1") continue;
    std::string name = tok;
    long long exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string_view exp = std::string_view(tok).substr(caret + 1);
      if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (ec != std::errc() || ptr != exp.data() + exp.size() || exp.empty())
        throw Error(ErrorKind::Parse, "bad exponent in token '" + tok + "'");
    }
    auto idx = alphabet.find(name);
    if (!idx) throw Error(ErrorKind::AlphabetMismatch, "unknown generator '" + name + "'");
    Letter l(*idx, exponent < 0 ? -1 : 1);
    for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) letters.push_back(l);
  }
  return Word::reduce(letters);
}

std::string format_tuple(const GenTuple& t, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += format_word(t[i], alphabet);
  }
  return out;
}

GenTuple parse_tuple(std::string_view text, const Alphabet& alphabet) {
  GenTuple out;
  if (text.find_first_not_of(" \t\n\r") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_word(piece, alphabet));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nielsen reduction

namespace {

// Left half: the first ceil(|w|/2) letters.
Word left_half(const Word& w) {
  std::size_t h = (w.size() + 1) / 2;
  return Word::reduce(std::span<const Letter>(w.letters().data(), h));
}

// Well-order on symmetrized entries: length, then the smaller and the larger
// of the left halves of w and w^-1.
using EntryKey = std::tuple<std::size_t, Word, Word>;

EntryKey entry_key(const Word& w) {
  Word a = left_half(w), b = left_half(invert(w));
  if (b < a) std::swap(a, b);
  return {w.size(), a, b};
}

std::vector<EntryKey> tuple_key(const GenTuple& t) {
  std::vector<EntryKey> k;
  for (const auto& w : t) k.push_back(entry_key(w));
  std::sort(k.begin(), k.end());
  return k;
}

Word signed_power(const Word& w, int e) { return e > 0 ? w : invert(w); }

std::size_t cancellation(const Word& u, const Word& v) {
  std::size_t c = 0;
  while (c < u.size() && c < v.size() && u[u.size() - 1 - c] == v[c].inverse()) ++c;
  return c;
}

struct TripleMove {
  std::size_t target;
  Word replacement;
};

// Finds a triple v1 v2 v3 whose middle factor cancels completely (the only
// way N2 fails once N1 holds) and returns the move that lowers the key.
std::optional<TripleMove> find_triple_move(const GenTuple& t) {
  const std::size_t k = t.size();
  for (std::size_t b = 0; b < k; ++b) {
    for (int eb : {1, -1}) {
      Word v2 = signed_power(t[b], eb);
      if (v2.size() % 2 != 0) continue;
      const std::size_t half = v2.size() / 2;
      for (std::size_t a = 0; a < k; ++a) {
        if (a == b) continue;
        for (int ea : {1, -1}) {
          Word v1 = signed_power(t[a], ea);
          if (cancellation(v1, v2) != half) continue;
          for (std::size_t c = 0; c < k; ++c) {
            if (c == b) continue;
            for (int ec : {1, -1}) {
              Word v3 = signed_power(t[c], ec);
              if (cancellation(v2, v3) != half) continue;
              std::vector<Letter> p(v2.begin(), v2.begin() + static_cast<std::ptrdiff_t>(half));
              std::vector<Letter> q(v2.begin() + static_cast<std::ptrdiff_t>(half), v2.end());
              Word pw = Word::reduce(p), qinv = invert(Word::reduce(q));
              if (pw < qinv) return TripleMove{c, signed_power(multiply(v2, v3), ec)};
              return TripleMove{a, signed_power(multiply(v1, v2), ea)};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GenTuple nielsen_reduce(GenTuple t) {
  while (true) {
    t.erase(std::remove_if(t.begin(), t.end(), [](const Word& w) { return w.empty(); }), t.end());

    // Length-reducing moves u_i -> u_i u_j^e or u_j^e u_i.
    std::optional<std::pair<std::size_t, Word>> best;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (i == j) continue;
        for (int e : {1, -1}) {
          Word uj = signed_power(t[j], e);
          for (Word cand : {multiply(t[i], uj), multiply(uj, t[i])}) {
            if (cand.size() >= t[i].size()) continue;
            if (!best || cand.size() < best->second.size() ||
                (cand.size() == best->second.size() && cand < best->second))
              best = std::make_pair(i, std::move(cand));
          }
        }
      }
    }
    if (best) {
      t[best->first] = std::move(best->second);
      continue;
    }

    auto move = find_triple_move(t);
    if (!move) break;
    auto before = tuple_key(t);
    t[move->target] = std::move(move->replacement);
    if (!(tuple_key(t) < before))
      throw Error(ErrorKind::Invariant, "Nielsen half-move did not decrease the tuple order");
  }
  if (!is_nielsen_reduced(t)) throw Error(ErrorKind::Invariant, "Nielsen reduction ended unreduced");
  return t;
}

bool is_nielsen_reduced(const GenTuple& t) {
  std::vector<Word> sym;
  for (const auto& w : t) {
    if (w.empty()) return false;
    sym.push_back(w);
    sym.push_back(invert(w));
  }
  for (const auto& v1 : sym) {
    for (const auto& v2 : sym) {
      Word v12 = multiply(v1, v2);
      if (v12.empty()) continue;
      if (v12.size() < v1.size() || v12.size() < v2.size()) return false;
      for (const auto& v3 : sym) {
        if (multiply(v2, v3).empty()) continue;
        Word v123 = multiply(v12, v3);
        if (static_cast<long long>(v123.size()) <=
            static_cast<long long>(v1.size()) - static_cast<long long>(v2.size()) + static_cast<long long>(v3.size()))
          return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

void for_each_reduced_word(int rank, std::size_t max_length, const std::function<bool(const Word&)>& f) {
  std::vector<Word> layer{Word{}};
  if (!f(layer.front())) return;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (int s = 0; s < 2 * rank; ++s) {
        Letter l = Letter::from_slot(s);
        if (!w.empty() && w.back() == l.inverse()) continue;
        Word x = w;
        x.push_back(l);
        if (!f(x)) return;
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
}

std::uint64_t reduced_word_count(int rank, std::size_t length) {
  if (length == 0) return 1;
  std::uint64_t c = 2 * static_cast<std::uint64_t>(rank);
  for (std::size_t i = 1; i < length; ++i) c *= 2 * static_cast<std::uint64_t>(rank) - 1;
  return c;
}

namespace {

class TupleWalker {
 public:
  TupleWalker(int rank, int n, std::size_t count, std::vector<GenTuple>& out)
      : rank_(rank), n_(n), count_(count), out_(out) {}

  bool run(std::size_t total) {
    seq_.assign(total, Letter());
    return letters(0, 0);
  }

 private:
  bool letters(std::size_t pos, int forced) {
    if (pos == seq_.size()) return splits();
    for (int s = 0; s < 2 * rank_; ++s) {
      Letter l = Letter::from_slot(s);
      int f = forced;
      if (pos > 0 && seq_[pos - 1] == l.inverse()) {
        if (++f > n_ - 1) continue;
      }
      seq_[pos] = l;
      if (!letters(pos + 1, f)) return false;
    }
    return true;
  }

  bool splits() {
    cuts_.clear();
    return choose(1);
  }

  // cuts_ holds block boundaries in increasing order; a boundary is required
  // wherever two adjacent letters cancel.
  bool choose(std::size_t from) {
    if (static_cast<int>(cuts_.size()) == n_ - 1) {
      for (std::size_t i = from; i < seq_.size(); ++i)
        if (seq_[i] == seq_[i - 1].inverse()) return true;
      GenTuple t;
      std::size_t start = 0;
      for (std::size_t k = 0; k <= cuts_.size(); ++k) {
        std::size_t end = k < cuts_.size() ? cuts_[k] : seq_.size();
        t.push_back(Word::reduce(std::span<const Letter>(seq_.data() + start, end - start)));
        start = end;
      }
      out_.push_back(std::move(t));
      return out_.size() < count_;
    }
    for (std::size_t b = from; b < seq_.size(); ++b) {
      cuts_.push_back(b);
      bool go = choose(b + 1);
      cuts_.pop_back();
      if (!go) return false;
      if (seq_[b] == seq_[b - 1].inverse()) break;  // boundary b is mandatory
    }
    return true;
  }

  int rank_, n_;
  std::size_t count_;
  std::vector<GenTuple>& out_;
  std::vector<Letter> seq_;
  std::vector<std::size_t> cuts_;
};

}  // namespace

std::vector<GenTuple> first_tuples(int rank, int n, std::size_t count) {
  std::vector<GenTuple> out;
  if (count == 0 || n <= 0 || rank <= 0) return out;
  TupleWalker walker(rank, n, count, out);
  for (std::size_t total = static_cast<std::size_t>(n); out.size() < count; ++total) {
    if (!walker.run(total)) break;
  }
  return out;
}

}  // namespace tarski
