#include "sadic/suffix_index.hpp"

#include <algorithm>
#include <numeric>

namespace sadic {

SuffixIndex SuffixIndex::build(const Word& w) {
  SuffixIndex idx;
  idx.word = &w;
  const std::size_t n = w.size();
  idx.sa.resize(n);
  idx.rank.resize(n);
  idx.lcp.assign(n, 0);
  if (n == 0) return idx;

  // Prefix doubling with counting sort on (rank, rank at +k) pairs.
  std::vector<std::int32_t>& sa = idx.sa;
  std::vector<std::int32_t>& rank = idx.rank;
  std::vector<std::int32_t> tmp(n), cnt;
  std::iota(sa.begin(), sa.end(), 0);
  for (std::size_t i = 0; i < n; ++i) rank[i] = w.letters[i];

  for (std::size_t k = 1;; k <<= 1) {
    auto key2 = [&](std::int32_t i) {
      return (std::size_t(i) + k < n) ? rank[i + k] + 1 : 0;
    };
    // Sort by second key, then stable counting sort by first key.
    std::int32_t classes = *std::max_element(rank.begin(), rank.end()) + 2;
    cnt.assign(classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[key2(std::int32_t(i))];
    std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
    for (std::size_t i = n; i-- > 0;) tmp[--cnt[key2(std::int32_t(i))]] = std::int32_t(i);
    cnt.assign(classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
    std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
    std::vector<std::int32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[cnt[rank[tmp[i]]]++] = tmp[i];
    sa.swap(order);

    std::vector<std::int32_t> next_rank(n);
    next_rank[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      bool same = rank[sa[i]] == rank[sa[i - 1]] && key2(sa[i]) == key2(sa[i - 1]);
      next_rank[sa[i]] = next_rank[sa[i - 1]] + (same ? 0 : 1);
    }
    rank.swap(next_rank);
    if (std::size_t(rank[sa[n - 1]]) == n - 1) break;
  }

  // Kasai.
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = std::size_t(sa[rank[i] - 1]);
    if (h) --h;
    while (i + h < n && j + h < n && w.letters[i + h] == w.letters[j + h]) ++h;
    idx.lcp[rank[i]] = std::int32_t(h);
  }
  return idx;
}

std::vector<std::int64_t> SuffixIndex::complexity_curve(std::size_t n_max) const {
  const std::size_t n = sa.size();
  n_max = std::min(n_max, n);
  // lcp_ge[m] = #{i : lcp[i] >= m} via a histogram of lcp values.
  std::vector<std::int64_t> hist(n + 2, 0);
  for (std::size_t i = 1; i < n; ++i) ++hist[lcp[i]];
  std::vector<std::int64_t> p(n_max + 1, 0);
  p[0] = 1;
  std::int64_t ge = (n == 0) ? 0 : std::int64_t(n) - 1;
  for (std::size_t m = 1; m <= n_max; ++m) {
    // entering length m: drop lcp values equal to m-1
    ge -= hist[m - 1];
    p[m] = std::int64_t(n) - std::int64_t(m) + 1 - ge;
  }
  return p;
}

void SuffixIndex::for_each_factor(
    std::size_t n,
    const std::function<void(const std::int32_t*, std::size_t)>& fn) const {
  const std::size_t N = sa.size();
  if (n == 0) throw error("empty window: factor grouping needs length >= 1");
  if (n > N) return;
  std::vector<std::int32_t> group;
  group.reserve(64);
  auto flush = [&] {
    if (!group.empty()) {
      std::sort(group.begin(), group.end());
      fn(group.data(), group.size());
      group.clear();
    }
  };
  for (std::size_t i = 0; i < N; ++i) {
    if (std::size_t(sa[i]) + n > N) {
      // suffix too short to carry a length-n factor: group boundary
      flush();
      continue;
    }
    if (!group.empty() && std::size_t(lcp[i]) < n) flush();
    group.push_back(sa[i]);
  }
  flush();
}

std::vector<std::size_t> SuffixIndex::positions(const Word& u) const {
  auto occ = occurrences(*word, u);
  return occ;
}

}  // namespace sadic
