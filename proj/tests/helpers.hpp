#pragma once

#include <random>
#include <vector>

#include "tarski/freewords.hpp"

namespace testutil {

inline tarski::Word random_word(std::mt19937_64& rng, int rank, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len), slot(0, 2 * rank - 1);
  std::vector<tarski::Letter> ls;
  int target = len(rng);
  while (static_cast<int>(ls.size()) < target) {
    auto l = tarski::Letter::from_slot(slot(rng));
    if (!ls.empty() && ls.back() == l.inverse()) continue;
    ls.push_back(l);
  }
  return tarski::Word::reduce(ls);
}

// Unreduced random letter sequence.
inline std::vector<tarski::Letter> random_letters(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> slot(0, 2 * rank - 1);
  std::vector<tarski::Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back(tarski::Letter::from_slot(slot(rng)));
  return ls;
}

}  // namespace testutil
