#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tarski/error.hpp"
#include "tarski/freewords.hpp"
#include "tarski/stallings.hpp"

using namespace tarski;

namespace {

const Alphabet f2({"x", "y"});
const Alphabet f3({"x", "y", "z"});

Word w2(const char* s) { return parse_word(s, f2); }

// Reduction by repeated deletion of adjacent inverse pairs.
std::vector<Letter> naive_reduce(std::vector<Letter> ls) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
      if (ls[i] == ls[i + 1].inverse()) {
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i), ls.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
  }
  return ls;
}

}  // namespace

TEST_CASE("alphabet parsing and validation") {
  Alphabet a = Alphabet::parse("alphabet: x y1 y2 z");
  CHECK(a.rank() == 4);
  CHECK(a.name(2) == "y2");
  CHECK(a.find("z") == 3);
  CHECK_FALSE(a.find("w").has_value());
  CHECK(a.header() == "alphabet: x y1 y2 z");
  CHECK_THROWS_AS(Alphabet({"x", "x"}), Error);
  CHECK_THROWS_AS(Alphabet({"x^"}), Error);
  CHECK_THROWS_AS(Alphabet({"1"}), Error);
}

TEST_CASE("reduction") {
  CHECK(w2("x x^-1").empty());
  CHECK(format_word(w2("x y"), f2) == "x y");
  CHECK(format_word(w2("x y y^-1 x"), f2) == "x x");
  CHECK(format_word(Word{}, f2) == "1");
  CHECK(w2("1").empty());
  CHECK(w2("x^3") == w2("x x x"));
  CHECK(w2("y^-2") == w2("y^-1 y^-1"));
  CHECK_THROWS_AS(parse_word("w", f2), Error);
  CHECK_THROWS_AS(reduce(std::vector<Letter>{Letter(2, 1)}, f2), Error);
}

TEST_CASE("reduction agrees with pairwise deletion") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    auto ls = testutil::random_letters(rng, 2, i % 14);
    auto want = naive_reduce(ls);
    Word got = Word::reduce(ls);
    REQUIRE(got.size() == want.size());
    CHECK(std::equal(got.begin(), got.end(), want.begin()));
  }
}

TEST_CASE("products, inverses and conjugates") {
  CHECK(multiply(w2("x"), w2("x^-1")).empty());
  CHECK(conjugate(w2("x"), w2("y")) == w2("y^-1 x y"));
  CHECK(conjugate(w2("y^-1 x y"), w2("y")) == w2("y^-1 y^-1 x y y"));
  CHECK(commutator(w2("x"), w2("y")) == w2("x^-1 y^-1 x y"));
  CHECK(power(w2("x y"), -2) == w2("y^-1 x^-1 y^-1 x^-1"));
  CHECK(power(w2("x"), 0).empty());
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    Word a = testutil::random_word(rng, 3, 0, 7), b = testutil::random_word(rng, 3, 0, 7),
         c = testutil::random_word(rng, 3, 0, 7);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(invert(invert(a)) == a);
    CHECK(multiply(a, invert(a)).empty());
    CHECK(invert(multiply(a, b)) == multiply(invert(b), invert(a)));
  }
}

TEST_CASE("shortlex order") {
  CHECK(w2("x") < w2("x^-1"));
  CHECK(w2("x^-1") < w2("y"));
  CHECK(w2("y^-1") < w2("x x"));
  CHECK(Word{} < w2("x"));
  std::vector<Word> seen;
  for_each_reduced_word(2, 3, [&](const Word& w) {
    seen.push_back(w);
    return true;
  });
  CHECK(seen.size() == 1 + 4 + 12 + 36);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::set<Word>(seen.begin(), seen.end()).size() == seen.size());
  CHECK(reduced_word_count(3, 0) == 1);
  CHECK(reduced_word_count(3, 4) == 6 * 125);
}

TEST_CASE("cyclic conjugates") {
  auto cc = cyclic_conjugates(w2("y x y^-1"));
  REQUIRE(cc.size() == 1);
  CHECK(cc[0] == w2("x"));
  CHECK(cyclic_conjugates(w2("x y")).size() == 2);
  CHECK(cyclic_conjugates(Word{}).size() == 1);
}

TEST_CASE("tuple format round trip") {
  GenTuple t = parse_tuple("x^2, y, x y x^-1", f2);
  REQUIRE(t.size() == 3);
  CHECK(format_tuple(t, f2) == "x x, y, x y x^-1");
  CHECK(parse_tuple(format_tuple(t, f2), f2) == t);
  CHECK(parse_tuple("  ", f2).empty());
}

TEST_CASE("nielsen reduction examples") {
  CHECK(nielsen_reduce(parse_tuple("x, x y", f2)) == parse_tuple("x, y", f2));
  CHECK(nielsen_reduce(parse_tuple("x, x", f2)) == parse_tuple("x", f2));
  CHECK(nielsen_reduce(parse_tuple("x, y", f2)) == parse_tuple("x, y", f2));
  CHECK(is_nielsen_reduced(parse_tuple("x, y", f2)));
  CHECK_FALSE(is_nielsen_reduced(parse_tuple("x, x y", f2)));
}

TEST_CASE("nielsen reduction preserves the subgroup and the product length property") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    GenTuple t;
    for (int k = 0; k < 1 + i % 3; ++k) t.push_back(testutil::random_word(rng, 3, 1, 6));
    GenTuple n = nielsen_reduce(t);
    REQUIRE(is_nielsen_reduced(n));
    CHECK(build_core(n, f3) == build_core(t, f3));
    // Reduced products of k factors have length >= k.
    std::uniform_int_distribution<std::size_t> pick(0, 2 * n.size() - 1);
    for (int trial = 0; trial < 20 && !n.empty(); ++trial) {
      Word prod;
      int k = 0;
      std::size_t last = 99;
      for (int f = 0; f < 6; ++f) {
        std::size_t s = pick(rng);
        if (last != 99 && s == (last ^ 1)) continue;
        last = s;
        Word factor = s % 2 ? invert(n[s / 2]) : n[s / 2];
        prod = multiply(prod, factor);
        ++k;
        CHECK(static_cast<int>(prod.size()) >= k);
      }
    }
  }
}

TEST_CASE("tuple enumeration") {
  auto ts = first_tuples(3, 2, 5);
  REQUIRE(ts.size() == 5);
  const Alphabet a({"x", "y", "z"});
  CHECK(format_tuple(ts[0], a) == "x, x");
  CHECK(format_tuple(ts[1], a) == "x, x^-1");
  CHECK(format_tuple(ts[2], a) == "x, y");
  std::set<GenTuple> distinct(ts.begin(), ts.end());
  CHECK(distinct.size() == ts.size());
  auto longer = first_tuples(3, 2, 200);
  for (std::size_t i = 0; i < 5; ++i) CHECK(longer[i] == ts[i]);
  for (std::size_t i = 1; i < longer.size(); ++i) {
    auto total = [](const GenTuple& t) { return t[0].size() + t[1].size(); };
    CHECK(total(longer[i - 1]) <= total(longer[i]));
  }
}
