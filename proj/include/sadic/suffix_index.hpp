#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sadic/word.hpp"

namespace sadic {

// Suffix array + LCP index of a word. One build serves three jobs:
//   - the distinct-factor count p(n) for every n at once,
//   - grouping the occurrence positions of each length-n factor,
//   - extension statistics (left/right/bilateral) per factor.
struct SuffixIndex {
  const Word* word = nullptr;
  std::vector<std::int32_t> sa;    // suffix start positions, lexicographic
  std::vector<std::int32_t> rank;  // inverse of sa
  std::vector<std::int32_t> lcp;   // lcp[i] = lcp(sa[i-1], sa[i]), lcp[0] = 0

  static SuffixIndex build(const Word& w);

  // p(n) for n = 0..n_max; p(0) = 1, p(n) = N - n + 1 - #{i : lcp[i] >= n}.
  std::vector<std::int64_t> complexity_curve(std::size_t n_max) const;

  // Calls fn once per distinct length-n factor with the block of suffix-array
  // entries sharing that prefix. Positions arrive in suffix-array order.
  void for_each_factor(std::size_t n,
                       const std::function<void(const std::int32_t* pos,
                                                std::size_t count)>& fn) const;

  // Occurrence positions of one factor, sorted increasing.
  std::vector<std::size_t> positions(const Word& u) const;
};

}  // namespace sadic
