#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tarski {

/// Ordered list of generator names of a free group.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// Accepts "x y1 y2 z" with an optional leading "alphabet:" tag.
  static Alphabet parse(std::string_view text);

  int rank() const noexcept { return static_cast<int>(names_.size()); }
  int letter_count() const noexcept { return 2 * rank(); }
  const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<int> find(std::string_view name) const;

  /// "alphabet: x y z"
  std::string header() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// A generator or its inverse, packed as a signed 1-based index.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int index, int sign) : code_(sign > 0 ? index + 1 : -(index + 1)) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = code;
    return l;
  }
  /// Slots order letters as x, x^-1, y, y^-1, ... (the shortlex letter order).
  static constexpr Letter from_slot(int slot) { return Letter(slot / 2, (slot % 2) ? -1 : 1); }

  constexpr int code() const noexcept { return code_; }
  constexpr int index() const noexcept { return (code_ > 0 ? code_ : -code_) - 1; }
  constexpr int sign() const noexcept { return code_ > 0 ? 1 : -1; }
  constexpr bool positive() const noexcept { return code_ > 0; }
  constexpr Letter inverse() const noexcept { return from_code(-code_); }
  constexpr int slot() const noexcept { return 2 * index() + (code_ < 0 ? 1 : 0); }

  constexpr bool operator==(const Letter&) const = default;
  constexpr std::strong_ordering operator<=>(const Letter& o) const noexcept { return slot() <=> o.slot(); }

 private:
  int code_ = 1;
};

/// A freely reduced word. Equality is structural; `<` is shortlex.
class Word {
 public:
  Word() = default;

  /// Freely reduces `letters`; no alphabet check.
  static Word reduce(std::span<const Letter> letters);
  static Word generator(int index, int sign = 1) { return Word::reduce(std::vector<Letter>{Letter(index, sign)}); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  /// Appends one letter, cancelling against the last letter if needed.
  void push_back(Letter l);

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& o) const noexcept;

 private:
  std::vector<Letter> letters_;
};

/// Reduces `letters`, rejecting indices outside `alphabet`.
Word reduce(std::span<const Letter> letters, const Alphabet& alphabet);
void check_alphabet(const Word& w, const Alphabet& alphabet);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// g^-1 u g
Word conjugate(const Word& u, const Word& g);
Word power(const Word& u, long long k);
/// u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);
/// The cyclically reduced core of w together with its cyclic permutations.
std::vector<Word> cyclic_conjugates(const Word& w);

std::string format_word(const Word& w, const Alphabet& alphabet);
Word parse_word(std::string_view text, const Alphabet& alphabet);

using GenTuple = std::vector<Word>;

std::string format_tuple(const GenTuple& t, const Alphabet& alphabet);
/// Comma separated words; an empty or blank string is the empty tuple.
GenTuple parse_tuple(std::string_view text, const Alphabet& alphabet);

/// Nielsen reduction by elementary transformations. Length-reducing moves are
/// taken first (shortest result, then shortlex); when none applies but a
/// triple cancels its middle factor completely, the half-ordering move is
/// applied. Trivial entries are dropped.
GenTuple nielsen_reduce(GenTuple t);

/// Checks N0 (no trivial entry), N1 and N2 on the symmetrized set.
bool is_nielsen_reduced(const GenTuple& t);

/// Calls `f` on every reduced word of length <= max_length over `rank`
/// generators in shortlex order. Returning false from `f` stops the walk.
void for_each_reduced_word(int rank, std::size_t max_length, const std::function<bool(const Word&)>& f);

/// Number of reduced words of length exactly `length` over `rank` generators.
std::uint64_t reduced_word_count(int rank, std::size_t length);

/// The first `count` n-tuples of nonempty reduced words over `rank`
/// generators, ordered by total length, then by the concatenated letters
/// (shortlex letter order), then by the entry lengths.
std::vector<GenTuple> first_tuples(int rank, int n, std::size_t count);

}  // namespace tarski

template <>
struct std::hash<tarski::Word> {
  std::size_t operator()(const tarski::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& l : w) h = (h ^ static_cast<std::size_t>(l.code() + 64)) * 1099511628211ull;
    return h;
  }
};
