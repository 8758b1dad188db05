// Random generators for presentations and move sequences.
#ifndef SEIFERT_TESTS_GENERATORS_HPP
#define SEIFERT_TESTS_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>

#include "seifert/presentation.hpp"

namespace seifert::testing {

inline SeifertPair random_pair(std::mt19937_64& rng, int max_q, int max_abs_p) {
  std::uniform_int_distribution<int> qd(1, max_q), pd(-max_abs_p, max_abs_p);
  while (true) {
    int q = qd(rng), p = pd(rng);
    if (std::gcd(q, p) == 1) return {q, p};
  }
}

inline SeifertPresentation random_presentation(std::mt19937_64& rng, int max_q = 50, int max_abs_p = 200,
                                               int max_pairs = 6) {
  std::uniform_int_distribution<int> gd(0, 4), nd(0, max_pairs);
  SeifertPresentation pres{gd(rng), {}};
  for (int k = nd(rng); k > 0; --k) pres.pairs.push_back(random_pair(rng, max_q, max_abs_p));
  return pres;
}

/// A move that is legal for pres.
inline Move random_move(std::mt19937_64& rng, const SeifertPresentation& pres) {
  const std::size_t n = pres.pairs.size();
  std::uniform_int_distribution<int> kind(0, 3), md(-5, 5);
  while (true) {
    switch (kind(rng)) {
      case 0: {
        if (n == 0) break;
        moves::Permute p{std::vector<std::size_t>(n)};
        std::iota(p.image.begin(), p.image.end(), std::size_t{0});
        std::shuffle(p.image.begin(), p.image.end(), rng);
        return p;
      }
      case 1:
        return moves::AddTrivial{};
      case 2: {
        for (std::size_t k = 0; k < n; ++k)
          if (pres.pairs[k] == SeifertPair{1, 0}) return moves::DeleteTrivial{k};
        break;
      }
      default: {
        if (n < 2) break;
        std::uniform_int_distribution<std::size_t> id(0, n - 1);
        std::size_t i = id(rng), j = id(rng);
        if (i == j) break;
        return moves::Shift{i, j, md(rng)};
      }
    }
  }
}

}  // namespace seifert::testing

#endif  // SEIFERT_TESTS_GENERATORS_HPP
