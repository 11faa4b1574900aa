#pragma once

// Brute-force reference implementations, quadratic or worse on purpose.
// They share no code with the production paths (suffix index, Z-scans) and
// exist to cross-check them on small inputs.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "sadic/word.hpp"

namespace sadic {
namespace oracle {

inline std::int64_t factor_count(const Word& w, std::size_t n) {
  if (n == 0) return 1;
  if (n > w.size()) return 0;
  std::set<std::vector<std::uint8_t>> all;
  for (std::size_t i = 0; i + n <= w.size(); ++i)
    all.insert(std::vector<std::uint8_t>(w.letters.begin() + i,
                                         w.letters.begin() + i + n));
  return std::int64_t(all.size());
}

// factor -> sorted extension letters on the chosen side (right = true).
inline std::map<Word, std::vector<Letter>> extensions(const Word& w,
                                                      std::size_t n,
                                                      bool right) {
  std::map<Word, std::set<Letter>> acc;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    Word u = w.slice(i, i + n);
    if (right && i + n < w.size()) acc[u].insert(w[i + n]);
    if (!right && i > 0) acc[u].insert(w[i - 1]);
    acc.try_emplace(u);
  }
  std::map<Word, std::vector<Letter>> out;
  for (auto& [u, s] : acc) out.emplace(u, std::vector<Letter>(s.begin(), s.end()));
  return out;
}

inline std::vector<std::size_t> positions(const Word& w, const Word& u) {
  std::vector<std::size_t> out;
  if (u.empty() || u.size() > w.size()) return out;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < u.size() && hit; ++j) hit = w[i + j] == u[j];
    if (hit) out.push_back(i);
  }
  return out;
}

// Distinct gap words between consecutive occurrences, sorted.
inline std::vector<Word> return_words(const Word& w, const Word& u) {
  auto pos = positions(w, u);
  std::set<Word> rs;
  for (std::size_t i = 0; i + 1 < pos.size(); ++i)
    rs.insert(w.slice(pos[i], pos[i + 1]));
  return {rs.begin(), rs.end()};
}

// Literal exponent-set definition: i is in the set iff p u^i s occurs for
// some nonempty p, s with |p| <= |u|, |s| <= |u|, p not a suffix of u, s not
// a prefix of u.
inline std::vector<long long> pow_set(const Word& w, const Word& u,
                                      long long cap) {
  const std::size_t N = w.size(), M = u.size();
  auto is_suffix = [&](std::size_t from, std::size_t len) {
    for (std::size_t j = 0; j < len; ++j)
      if (w[from + j] != u[M - len + j]) return false;
    return true;
  };
  auto is_prefix = [&](std::size_t from, std::size_t len) {
    for (std::size_t j = 0; j < len; ++j)
      if (w[from + j] != u[j]) return false;
    return true;
  };
  std::vector<char> occ(N + 1, 0);
  for (auto p : positions(w, u)) occ[p] = 1;
  auto copies_at = [&](std::size_t t, long long i) {
    if (t + std::size_t(i) * M > N) return false;
    for (long long c = 0; c < i; ++c)
      if (!occ[t + std::size_t(c) * M]) return false;
    return true;
  };
  std::vector<long long> out;
  for (long long i = 0; i <= cap; ++i) {
    if (std::size_t(i) * M > N) break;
    bool found = false;
    for (std::size_t t = 0; t <= N && !found; ++t) {
      if (!copies_at(t, i)) continue;
      std::size_t e = t + std::size_t(i) * M;
      bool left = false, right = false;
      for (std::size_t lp = 1; lp <= std::min(M, t) && !left; ++lp)
        left = !is_suffix(t - lp, lp);
      for (std::size_t ls = 1; ls <= std::min(M, N - e) && !right; ++ls)
        right = !is_prefix(e, ls);
      found = left && right;
    }
    if (found) out.push_back(i);
  }
  return out;
}

}  // namespace oracle
}  // namespace sadic
