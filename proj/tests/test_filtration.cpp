#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tarski/error.hpp"
#include "tarski/filtration.hpp"

using namespace tarski;

namespace {

const Alphabet f3({"x", "y", "z"});
Word w(const char* s) { return parse_word(s, f3); }

// For a positive word the coefficient of X_{i1}..X_{ik} counts the
// occurrences of i1..ik as a subsequence.
std::map<std::string, std::uint32_t> subsequence_counts(const Word& u, int bound, std::uint32_t p) {
  std::map<std::string, std::uint64_t> acc{{"", 1}};
  for (Letter l : u) {
    auto next = acc;
    for (const auto& [mono, c] : acc)
      if (static_cast<int>(mono.size()) + 1 < bound) next[mono + static_cast<char>(l.index())] += c;
    acc = std::move(next);
  }
  std::map<std::string, std::uint32_t> out;
  for (const auto& [mono, c] : acc)
    if (c % p) out[mono] = static_cast<std::uint32_t>(c % p);
  return out;
}

}  // namespace

TEST_CASE("magnus expansion examples") {
  CHECK(magnus(Word{}, 3, 2).is_one());
  CHECK(magnus(w("x"), 3, 2).to_string() == "1 + X0");
  CHECK(magnus(w("x^2"), 3, 2).to_string() == "1 + X0^2");
  CHECK(magnus(w("x^-1"), 4, 3).to_string() == "1 + 2 X0 + X0^2 + 2 X0^3");
}

TEST_CASE("magnus expansion of positive words counts subsequences") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> gen(0, 2);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int i = 0; i < 60; ++i) {
      std::vector<Letter> ls;
      for (int k = 0; k < 1 + i % 9; ++k) ls.push_back(Letter(gen(rng), 1));
      Word u = Word::reduce(ls);
      CHECK(magnus(u, 5, p).terms() == subsequence_counts(u, 5, p));
    }
  }
}

TEST_CASE("magnus expansion is a homomorphism") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    Word a = testutil::random_word(rng, 3, 0, 6), b = testutil::random_word(rng, 3, 0, 6);
    CHECK(magnus(multiply(a, b), 5, 3) == magnus(a, 5, 3) * magnus(b, 5, 3));
    CHECK((magnus(a, 5, 2) * magnus(invert(a), 5, 2)).is_one());
  }
}

TEST_CASE("zassenhaus membership") {
  CHECK(zassenhaus_member(w("x^2"), 2, 2));
  CHECK(zassenhaus_member(w("x^-1 y^-1 x y"), 2, 2));
  CHECK_FALSE(zassenhaus_member(w("x"), 2, 2));
  CHECK(zassenhaus_member(w("x"), 1, 2));
  // x^(p^j) sits at level p^j and no deeper.
  CHECK(zassenhaus_member(power(w("x"), 8), 8, 2));
  CHECK_FALSE(zassenhaus_member(power(w("x"), 8), 9, 2));
  CHECK(zassenhaus_member(power(w("x"), 9), 9, 3));
  CHECK_FALSE(zassenhaus_member(power(w("x"), 9), 9, 2));
  // Commutator of level-2 elements reaches level 4.
  CHECK(zassenhaus_member(commutator(w("x^2"), w("y^2")), 4, 2));
}

TEST_CASE("minimal length certificates") {
  MinLengthResult one = certify_min_length(1, 1, 2);
  CHECK_FALSE(one.pass);
  CHECK(one.witness.size() == 1);

  MinLengthResult two = certify_min_length(2, 1, 2);
  CHECK_FALSE(two.pass);
  CHECK(two.witness.size() == 2);
  CHECK(zassenhaus_member(two.witness, 2, 2));
  CHECK(two.witness == multiply(two.u, invert(two.v)));

  MinLengthResult thirteen = certify_min_length(13, 1, 2);
  CHECK(thirteen.pass);
  CHECK(thirteen.radius == 6);
  CHECK(thirteen.checked == 1 + 6 * (15625 - 1) / 4);
}

TEST_CASE("find_m golden value") {
  // Matches tests/oracles/magnus_oracle.py.
  FindMResult r = find_m(1, 2, 16);
  CHECK(r.certificate.m == 9);
  CHECK(r.certificate.pass);
  REQUIRE(r.failures.size() == 7);
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const auto& f = r.failures[i];
    CHECK(f.m == static_cast<int>(i) + 2);
    CHECK(f.witness.size() < 12);
    CHECK(zassenhaus_member(f.witness, f.m, 2));
  }
  CHECK_THROWS_AS(find_m(1, 2, 4), Error);
}

TEST_CASE("omega generators") {
  OmegaGenerators trivial = omega_generators(1, 2, 3);
  CHECK(trivial.index == 1);
  CHECK(trivial.generators.size() == 3);
  OmegaGenerators g = omega_generators(2, 2, 3);
  CHECK(g.index == 8);
  CHECK(g.generators.size() == 17);
  for (const auto& u : g.generators) CHECK(zassenhaus_member(u, 2, 2));
  OmegaGenerators g3 = omega_generators(3, 2, 2);
  for (const auto& u : g3.generators) CHECK(zassenhaus_member(u, 3, 2));
  CHECK(g3.generators.size() == g3.index + 1);
  CHECK_THROWS_AS(omega_generators(4, 2, 3, 64), Error);
}

TEST_CASE("tuple enumeration inside the filtration") {
  auto first = enumerate_tuples(2, 2, 3, 2, 1);
  REQUIRE(first.size() == 1);
  OmegaGenerators g = omega_generators(2, 2, 3);
  CHECK(first[0] == GenTuple{g.generators[0], g.generators[0]});
  auto many = enumerate_tuples(2, 2, 3, 1, 100);
  CHECK(std::set<GenTuple>(many.begin(), many.end()).size() == many.size());
  for (const auto& t : many)
    for (const auto& u : t) CHECK(zassenhaus_member(u, 2, 2));
}
