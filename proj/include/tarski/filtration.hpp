#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tarski/freewords.hpp"

namespace tarski {

/// Noncommutative power series over F_p truncated below total degree `bound`.
/// A monomial X_{i1}...X_{ik} is keyed by the byte string i1...ik.
class TruncSeries {
 public:
  TruncSeries(std::uint32_t p, int bound);

  static TruncSeries one(std::uint32_t p, int bound);
  /// Image of a single letter: 1 + X_i, or sum_k (-1)^k X_i^k for an inverse.
  static TruncSeries letter(Letter l, std::uint32_t p, int bound);

  std::uint32_t p() const noexcept { return p_; }
  int bound() const noexcept { return bound_; }
  const std::map<std::string, std::uint32_t>& terms() const noexcept { return terms_; }
  bool is_one() const;

  TruncSeries operator*(const TruncSeries& o) const;
  bool operator==(const TruncSeries&) const = default;

  /// Canonical serialization, usable as a hash key.
  std::string key() const;
  /// Human-readable form such as "1 + X0^2 + X0 X1".
  std::string to_string() const;

 private:
  void add(const std::string& mono, std::uint64_t c);

  std::uint32_t p_;
  int bound_;
  std::map<std::string, std::uint32_t> terms_;
};

TruncSeries magnus(const Word& w, int n, std::uint32_t p);
bool zassenhaus_member(const Word& w, int n, std::uint32_t p);

struct MinLengthResult {
  int n = 0;
  std::uint32_t p = 2;
  int m = 0;
  int radius = 0;
  std::size_t checked = 0;
  bool pass = false;
  /// On FAIL: u and v collide, witness = reduce(u v^-1).
  Word u, v, witness;
};

/// Checks that no nontrivial reduced word shorter than 12n lies in omega_m F,
/// using collisions among the truncations of all reduced words of length <= 6n.
MinLengthResult certify_min_length(int m, int n, std::uint32_t p, int rank = 3,
                                   std::size_t budget = 50'000'000);

struct FindMResult {
  MinLengthResult certificate;
  std::vector<MinLengthResult> failures;  // m = 2 .. certificate.m - 1
};

/// Smallest m in 2..m_max that certifies. Throws NotFound.
FindMResult find_m(int n, std::uint32_t p, int m_max, int rank = 3, std::size_t budget = 50'000'000);

struct OmegaGenerators {
  std::size_t index = 0;
  GenTuple generators;
};

/// Schreier generators of omega_m F from the finite quotient F / omega_m F.
/// Throws Budget when the quotient exceeds `max_index`.
OmegaGenerators omega_generators(int m, std::uint32_t p, int rank, std::size_t max_index = 4096);

/// The first `count` n-tuples of elements of omega_m F, ordered as words over
/// the Schreier generators (see first_tuples) and mapped back to F.
std::vector<GenTuple> enumerate_tuples(int m, std::uint32_t p, int rank, int n, std::size_t count,
                                       std::size_t max_index = 4096);

}  // namespace tarski
