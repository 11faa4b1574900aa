#include "sadic/returns.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sadic/suffix_index.hpp"

namespace sadic {

namespace {

std::vector<Word> gap_returns(const Word& w, const std::vector<std::size_t>& pos,
                              std::size_t* max_gap) {
  std::set<Word> rs;
  std::size_t mg = 0;
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    std::size_t gap = pos[i + 1] - pos[i];
    mg = std::max(mg, gap);
    rs.insert(w.slice(pos[i], pos[i + 1]));
  }
  if (max_gap) *max_gap = mg;
  return {rs.begin(), rs.end()};
}

}  // namespace

ReturnWordReport return_words(const Word& w, const Word& u) {
  if (u.empty()) throw error("empty window: return words need a nonempty factor");
  auto pos = occurrences(w, u);
  if (pos.size() < 2)
    throw error("insufficient occurrences: factor " + format_word(u) +
                " occurs fewer than twice in the prefix");
  ReturnWordReport rep;
  rep.factor = u;
  rep.occurrence_count = pos.size();
  rep.returns = gap_returns(w, pos, &rep.max_gap);

  Word half = w.prefix(w.size() / 2);
  auto hpos = occurrences(half, u);
  if (hpos.size() >= 2) {
    auto hret = gap_returns(half, hpos, nullptr);
    rep.stable = hret == rep.returns;
  }
  return rep;
}

std::vector<ReturnWordReport> return_words_all(const Word& w, std::size_t n) {
  if (n == 0 || n >= w.size())
    throw error("empty window: return scan needs 1 <= n < |w|");

  auto scan = [n](const Word& word) {
    std::map<Word, std::vector<Word>> sets;  // factor -> sorted returns
    std::map<Word, std::pair<std::size_t, std::size_t>> stats;  // count, max gap
    auto idx = SuffixIndex::build(word);
    idx.for_each_factor(n, [&](const std::int32_t* pos, std::size_t count) {
      if (count < 2) return;
      std::vector<std::size_t> ps(pos, pos + count);
      std::sort(ps.begin(), ps.end());
      Word u = word.slice(ps[0], ps[0] + n);
      std::size_t mg = 0;
      sets[u] = gap_returns(word, ps, &mg);
      stats[u] = {count, mg};
    });
    return std::pair(std::move(sets), std::move(stats));
  };

  auto [full, full_stats] = scan(w);
  auto half_len = w.size() / 2;
  std::map<Word, std::vector<Word>> half;
  if (half_len > n) half = scan(w.prefix(half_len)).first;

  std::vector<ReturnWordReport> out;
  for (auto& [u, rs] : full) {
    ReturnWordReport rep;
    rep.factor = u;
    rep.returns = std::move(rs);
    rep.occurrence_count = full_stats[u].first;
    rep.max_gap = full_stats[u].second;
    auto it = half.find(u);
    rep.stable = it != half.end() && it->second == rep.returns;
    out.push_back(std::move(rep));
  }
  return out;
}

MinReturnProfile min_return_count(const Word& w, std::size_t ell) {
  auto reps = return_words_all(w, ell);
  MinReturnProfile prof;
  prof.length = ell;
  auto idx = SuffixIndex::build(w);
  auto curve = idx.complexity_curve(ell);
  std::size_t distinct = std::size_t(curve[ell]);
  prof.skipped = distinct - reps.size();  // factors with < 2 occurrences
  for (const auto& rep : reps) {
    ++prof.factors_scanned;
    if (!rep.stable) {
      ++prof.skipped;
      continue;
    }
    if (prof.min_count == 0 || rep.returns.size() < prof.min_count) {
      prof.min_count = rep.returns.size();
      prof.argmin = rep.factor;
    }
  }
  if (prof.min_count == 0)
    throw error("insufficient occurrences: no stable return sets at length " +
                std::to_string(ell));
  return prof;
}

namespace {

// Z-array: z[i] = length of the longest common prefix of s and s[i..].
std::vector<std::int32_t> z_array(const std::vector<std::uint8_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::int32_t> z(n, 0);
  if (n == 0) return z;
  z[0] = std::int32_t(n);
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::int32_t(std::min(r - i, std::size_t(z[i - l])));
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

}  // namespace

PowSet pow_set(const Word& w, const Word& u, long long i_cap) {
  if (u.empty()) throw error("empty window: exponent sets need a nonempty factor");
  if (i_cap < 0) throw error("empty window: exponent cap must be non-negative");
  const std::size_t N = w.size(), M = u.size();
  PowSet ps;
  ps.u = u;
  ps.cap = i_cap;

  // R[t] = lcp(w[t..], u) capped at M; via Z on u # w.
  std::vector<std::uint8_t> s;
  s.reserve(M + 1 + N);
  s.insert(s.end(), u.letters.begin(), u.letters.end());
  s.push_back(0xFF);
  s.insert(s.end(), w.letters.begin(), w.letters.end());
  auto zf = z_array(s);
  std::vector<std::int32_t> R(N + 1, 0);
  for (std::size_t t = 0; t < N; ++t)
    R[t] = std::min<std::int32_t>(zf[M + 1 + t], std::int32_t(M));

  // L[t] = longest common suffix of w[0..t) and u, capped at M; via Z on
  // reverse(u) # reverse(w).
  std::vector<std::uint8_t> ru(u.letters.rbegin(), u.letters.rend());
  std::vector<std::uint8_t> rw(w.letters.rbegin(), w.letters.rend());
  std::vector<std::uint8_t> sr;
  sr.reserve(M + 1 + N);
  sr.insert(sr.end(), ru.begin(), ru.end());
  sr.push_back(0xFF);
  sr.insert(sr.end(), rw.begin(), rw.end());
  auto zb = z_array(sr);
  std::vector<std::int32_t> L(N + 1, 0);
  for (std::size_t t = 1; t <= N; ++t)
    L[t] = std::min<std::int32_t>(zb[M + 1 + (N - t)], std::int32_t(M));

  auto left_ok = [&](std::size_t t) {
    return std::size_t(L[t]) < std::min(M, t);
  };
  auto right_ok = [&](std::size_t t) {
    return std::size_t(R[t]) < std::min(M, N - t);
  };

  std::set<long long> present;
  bool truncated = false;

  // i = 0: a boundary whose left context breaks every suffix of u and whose
  // right context breaks every prefix.
  for (std::size_t t = 1; t < N; ++t)
    if (left_ok(t) && right_ok(t)) {
      present.insert(0);
      break;
    }

  // i >= 1: run length r[t] of whole copies of u from t; a maximal run
  // start with both contexts breaking witnesses exactly i = r[t].
  std::vector<std::int32_t> run(N + 2, 0);
  for (std::size_t t = N; t-- > 0;) {
    if (std::size_t(R[t]) >= M)
      run[t] = 1 + (t + M <= N ? run[t + M] : 0);
  }
  for (std::size_t t = 0; t < N; ++t) {
    if (run[t] == 0 || !left_ok(t)) continue;
    std::size_t e = t + std::size_t(run[t]) * M;
    if (e > N || !right_ok(e)) continue;
    if (run[t] > i_cap)
      truncated = true;
    else
      present.insert(run[t]);
  }

  ps.present.assign(present.begin(), present.end());
  ps.truncated = truncated;
  return ps;
}

RichnessVerdict power_richness(const Word& w, double C,
                               const std::vector<Word>& candidates) {
  if (C <= 1.0) throw error("empty window: richness constant must exceed 1");
  RichnessVerdict v;
  v.C = C;
  for (const auto& u : candidates) {
    if (u.empty() || !is_primitive_word(u))
      throw error("non-primitive candidate: power-richness witnesses must be primitive (" +
                  format_word(u) + ")");
    RichnessWitness wit;
    wit.u = u;
    wit.primitive = true;
    long long cap = u.size() ? (long long)(w.size() / u.size()) + 1 : 1;
    auto ps = pow_set(w, u, cap);
    std::set<long long> present(ps.present.begin(), ps.present.end());
    long long best = 0;
    long long top = present.empty() ? 0 : *present.rbegin();
    for (long long k = 1; k <= top; ++k) {
      bool covered = true;
      for (long long i = (long long)std::ceil(double(k) / C); i <= k && covered; ++i)
        covered = present.count(i) != 0;
      if (covered) best = k;
    }
    wit.k = best;
    double f = (C - 1.0) / C * double(best);
    wit.bound = double(u.size()) / 2.0 * f * (f - 1.0);
    v.witnesses.push_back(std::move(wit));
  }

  if (v.witnesses.size() < 2) {
    v.reason = "fewer than two witnesses";
    return v;
  }
  for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
    if (v.witnesses[i].k < 2) {
      v.reason = "coverage exponent below 2 at witness " + std::to_string(i);
      return v;
    }
    if (i > 0 && v.witnesses[i].u.size() <= v.witnesses[i - 1].u.size()) {
      v.reason = "witness lengths not strictly increasing";
      return v;
    }
    if (i > 0 && v.witnesses[i].k <= v.witnesses[i - 1].k) {
      v.reason = "coverage exponents not strictly increasing";
      return v;
    }
  }
  v.flag = true;
  return v;
}

RecurrenceEstimate recurrence_constant(const Word& w, std::size_t max_len) {
  if (max_len == 0 || max_len >= w.size())
    throw error("empty window: recurrence scan needs 1 <= max_len < |w|");
  RecurrenceEstimate est;
  const std::size_t half = w.size() / 2;
  auto idx = SuffixIndex::build(w);
  for (std::size_t n = 1; n <= max_len; ++n) {
    idx.for_each_factor(n, [&](const std::int32_t* pos, std::size_t count) {
      ++est.factors_scanned;
      std::vector<std::int32_t> ps(pos, pos + count);
      std::sort(ps.begin(), ps.end());
      // Only factors already visible in the half prefix: gaps of factors
      // first seen near the end are truncation artifacts, not recurrence.
      if (count < 2 || std::size_t(ps[0]) + n > half) {
        ++est.skipped;
        return;
      }
      std::size_t mg = 0;
      for (std::size_t i = 0; i + 1 < ps.size(); ++i)
        mg = std::max(mg, std::size_t(ps[i + 1] - ps[i]));
      double ratio = double(mg) / double(n);
      if (ratio > est.constant) {
        est.constant = ratio;
        est.argmax = w.slice(std::size_t(ps[0]), std::size_t(ps[0]) + n);
      }
    });
  }
  return est;
}

}  // namespace sadic
