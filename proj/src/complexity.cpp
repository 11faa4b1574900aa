#include "sadic/complexity.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cmath>
#include <limits>

#include "sadic/suffix_index.hpp"

namespace sadic {

ComplexityProfile complexity_profile(const Word& w, std::size_t n_max) {
  if (n_max == 0 || n_max >= w.size())
    throw error("empty window: complexity range needs 1 <= n_max < |w|");
  ComplexityProfile prof;
  prof.prefix_length = w.size();
  prof.n_max = n_max;
  auto idx = SuffixIndex::build(w);
  prof.p = idx.complexity_curve(n_max);
  prof.s.resize(n_max);
  for (std::size_t n = 0; n < n_max; ++n) prof.s[n] = prof.p[n + 1] - prof.p[n];

  const std::size_t half_len = w.size() / 2;
  if (half_len >= 2) {
    Word half = w.prefix(half_len);
    auto half_idx = SuffixIndex::build(half);
    std::size_t h_max = std::min(n_max, half_len - 1);
    auto hp = half_idx.complexity_curve(h_max);
    std::size_t cert = 0;
    for (std::size_t n = 1; n <= h_max; ++n) {
      if (hp[n] != prof.p[n]) break;
      cert = n;
    }
    prof.certified_n = cert;
  }
  return prof;
}

namespace {

// Left/right/bilateral extension stats of every length-n factor, interior
// occurrences only. fn(factor_start, count_positions, left_mask, right_mask,
// pair_bits).
void extension_scan(const Word& w, const SuffixIndex& idx, std::size_t n,
                    const std::function<void(std::size_t first_pos, std::uint32_t left,
                                             std::uint32_t right,
                                             const std::bitset<256>& pairs)>& fn) {
  const std::size_t N = w.size();
  idx.for_each_factor(n, [&](const std::int32_t* pos, std::size_t count) {
    std::uint32_t left = 0, right = 0;
    std::bitset<256> pairs;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t p = std::size_t(pos[i]);
      if (p + n < N) right |= 1u << w[p + n];
      if (p > 0) left |= 1u << w[p - 1];
      if (p > 0 && p + n < N) pairs.set(std::size_t(w[p - 1]) * 16 + w[p + n]);
    }
    fn(std::size_t(pos[0]), left, right, pairs);
  });
}

int popcount(std::uint32_t x) { return std::popcount(x); }

}  // namespace

std::vector<SpecialFactor> special_factors(const Word& w, std::size_t n, Side side) {
  if (w.empty()) throw error("empty window: special factors need a nonempty word");
  std::vector<SpecialFactor> out;
  if (n == 0) {
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i) seen |= 1u << w[i];
    if (popcount(seen) >= 2) {
      SpecialFactor sf;
      sf.factor = Word({}, w.alphabet_size);
      for (int a = 0; a < kMaxAlphabet; ++a)
        if (seen & (1u << a)) sf.extensions.push_back(a);
      out.push_back(std::move(sf));
    }
    return out;
  }
  if (n >= w.size()) return out;
  auto idx = SuffixIndex::build(w);
  extension_scan(w, idx, n,
                 [&](std::size_t first, std::uint32_t left, std::uint32_t right,
                     const std::bitset<256>&) {
                   std::uint32_t mask = side == Side::Right ? right : left;
                   if (popcount(mask) < 2) return;
                   SpecialFactor sf;
                   sf.factor = w.slice(first, first + n);
                   for (int a = 0; a < kMaxAlphabet; ++a)
                     if (mask & (1u << a)) sf.extensions.push_back(a);
                   out.push_back(std::move(sf));
                 });
  return out;
}

namespace {

BispecialClass classify_m(int m) {
  if (m > 0) return BispecialClass::Strong;
  if (m < 0) return BispecialClass::Weak;
  return BispecialClass::Neutral;
}

}  // namespace

std::vector<BispecialFactor> bispecial_report(const Word& w, std::size_t n_max) {
  if (w.size() < 2) throw error("empty window: bispecial report needs |w| >= 2");
  std::vector<BispecialFactor> out;
  auto idx = SuffixIndex::build(w);

  // Empty word: degrees from factor counts, m = p(2) - 2 p(1) + 1.
  auto curve = idx.complexity_curve(std::min<std::size_t>(2, w.size() - 1));
  std::int64_t p1 = curve.size() > 1 ? curve[1] : 0;
  std::int64_t p2 = curve.size() > 2 ? curve[2] : 0;
  if (p1 >= 2) {
    BispecialFactor b;
    b.factor = Word({}, w.alphabet_size);
    b.left_degree = int(p1);
    b.right_degree = int(p1);
    b.bilateral = int(p2);
    b.m = int(p2 - 2 * p1 + 1);
    b.cls = classify_m(b.m);
    out.push_back(std::move(b));
  }

  std::size_t top = std::min(n_max, w.size() >= 2 ? w.size() - 2 : 0);
  for (std::size_t n = 1; n <= top; ++n) {
    extension_scan(w, idx, n,
                   [&](std::size_t first, std::uint32_t left, std::uint32_t right,
                       const std::bitset<256>& pairs) {
                     int ld = popcount(left), rd = popcount(right);
                     if (ld < 2 || rd < 2) return;
                     BispecialFactor b;
                     b.factor = w.slice(first, first + n);
                     b.left_degree = ld;
                     b.right_degree = rd;
                     b.bilateral = int(pairs.count());
                     b.m = b.bilateral - ld - rd + 1;
                     b.cls = classify_m(b.m);
                     out.push_back(std::move(b));
                   });
  }
  return out;
}

std::vector<std::int64_t> cassaigne_residuals(const Word& w, std::size_t n_max) {
  if (n_max < 2) throw error("empty window: identity check needs n_max >= 2");
  auto prof = complexity_profile(w, n_max);
  auto bis = bispecial_report(w, n_max - 2);
  std::vector<std::int64_t> m_sum(n_max - 1, 0);
  for (const auto& b : bis)
    if (b.factor.size() < m_sum.size()) m_sum[b.factor.size()] += b.m;
  std::vector<std::int64_t> residual(n_max - 1);
  for (std::size_t n = 0; n + 1 < n_max; ++n)
    residual[n] = prof.s[n + 1] - prof.s[n] - m_sum[n];
  return residual;
}

double entropy_estimate(const ComplexityProfile& prof) {
  std::size_t hi = prof.certified_n;
  if (hi < 4) return 0.0;
  std::size_t lo = hi / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, cnt = 0;
  for (std::size_t n = lo; n <= hi; ++n) {
    double x = double(n), y = std::log(double(prof.p[n]));
    sx += x; sy += y; sxx += x * x; sxy += x * y; cnt += 1;
  }
  double denom = cnt * sxx - sx * sx;
  if (denom == 0) return 0.0;
  return (cnt * sxy - sx * sy) / denom;
}

const char* to_string(GrowthModel m) {
  switch (m) {
    case GrowthModel::Constant: return "constant";
    case GrowthModel::Linear: return "linear";
    case GrowthModel::NLogLogN: return "n-loglog-n";
    case GrowthModel::NLogN: return "n-log-n";
    case GrowthModel::NSqrtN: return "n-sqrt-n";
    case GrowthModel::Quadratic: return "quadratic";
    case GrowthModel::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(BispecialClass c) {
  switch (c) {
    case BispecialClass::Strong: return "strong";
    case BispecialClass::Weak: return "weak";
    case BispecialClass::Neutral: return "neutral";
  }
  return "?";
}

GrowthFit growth_fit(const ComplexityProfile& prof) {
  constexpr double kMargin = 1.2;      // winner must beat runner-up by this factor
  constexpr std::size_t kMinRange = 32;
  GrowthFit fit;
  if (prof.certified_n < kMinRange) return fit;

  auto shape = [](int model, double n) -> double {
    switch (model) {
      case 0: return 1.0;
      case 1: return n;
      case 2: return n * std::log(std::log(n));
      case 3: return n * std::log(n);
      case 4: return n * std::sqrt(n);
      default: return n * n;
    }
  };

  // Fit scale c per shape by least squares on relative error, then score by
  // RMS relative residual.  The head of the range is dominated by lower-order
  // terms, so only the top eightfold of the certified range enters the fit.
  const std::size_t lo = std::max<std::size_t>(8, prof.certified_n / 8);
  std::array<double, 6> coeff{};
  for (int mdl = 0; mdl < 6; ++mdl) {
    double num = 0, den = 0;
    for (std::size_t n = lo; n <= prof.certified_n; ++n) {
      double f = shape(mdl, double(n)), p = double(prof.p[n]);
      num += f / p;
      den += (f / p) * (f / p);
    }
    double c = den > 0 ? num / den : 0;
    coeff[mdl] = c;
    double acc = 0, cnt = 0;
    for (std::size_t n = lo; n <= prof.certified_n; ++n) {
      double f = shape(mdl, double(n)), p = double(prof.p[n]);
      double rel = (c * f - p) / p;
      acc += rel * rel;
      cnt += 1;
    }
    fit.model_rms[mdl] = std::sqrt(acc / cnt);
  }

  int best = 0, second = -1;
  for (int mdl = 1; mdl < 6; ++mdl)
    if (fit.model_rms[mdl] < fit.model_rms[best]) best = mdl;
  for (int mdl = 0; mdl < 6; ++mdl) {
    if (mdl == best) continue;
    if (second < 0 || fit.model_rms[mdl] < fit.model_rms[second]) second = mdl;
  }
  fit.rms = fit.model_rms[best];
  fit.coefficient = coeff[best];
  fit.margin = fit.rms > 0 ? fit.model_rms[second] / fit.rms
                           : std::numeric_limits<double>::infinity();
  if (fit.margin >= kMargin) fit.model = GrowthModel(best);
  return fit;
}

}  // namespace sadic
