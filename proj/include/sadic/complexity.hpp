#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sadic/word.hpp"

namespace sadic {

// Factor counts of one prefix. p[n] counts distinct length-n factors of the
// prefix; certified_n is the largest n <= n_max at which the half prefix and
// the full prefix agree on p (and hence, heuristically, the prefix has seen
// every factor of the limit word up to that length).
struct ComplexityProfile {
  std::size_t prefix_length = 0;
  std::size_t n_max = 0;
  std::vector<std::int64_t> p;  // index 0..n_max
  std::vector<std::int64_t> s;  // s[n] = p[n+1] - p[n], index 0..n_max-1
  std::size_t certified_n = 0;
};

// Requires 1 <= n_max < |w|. Uses one suffix-array pass per prefix.
ComplexityProfile complexity_profile(const Word& w, std::size_t n_max);

enum class Side { Left, Right };

struct SpecialFactor {
  Word factor;
  std::vector<Letter> extensions;  // sorted; letters x with xu (Left) or ux (Right) factors
};

// Factors of length n with at least two extensions on the chosen side,
// in lexicographic order. Extensions are counted inside the prefix only.
std::vector<SpecialFactor> special_factors(const Word& w, std::size_t n, Side side);

enum class BispecialClass { Strong, Weak, Neutral };

struct BispecialFactor {
  Word factor;
  int left_degree = 0;   // distinct left extensions
  int right_degree = 0;  // distinct right extensions
  int bilateral = 0;     // distinct pairs (x, y) with x u y a factor
  int m = 0;             // bilateral - left - right + 1
  BispecialClass cls = BispecialClass::Neutral;
};

// All bispecial factors (left and right degree >= 2) of length <= n_max,
// ordered by length then lexicographically. Includes the empty word when it
// qualifies; its m equals p(2) - 2 p(1) + 1.
std::vector<BispecialFactor> bispecial_report(const Word& w, std::size_t n_max);

// residual[n] = s(n+1) - s(n) - sum of m(u) over bispecial factors |u| = n,
// for n = 0..n_max-2. Zero on any range where the prefix statistics are
// exact for the limit word.
std::vector<std::int64_t> cassaigne_residuals(const Word& w, std::size_t n_max);

// Least-squares slope of log p(n) against n over the top half of the
// certified range; near zero for every sub-exponential word.
double entropy_estimate(const ComplexityProfile& prof);

enum class GrowthModel { Constant, Linear, NLogLogN, NLogN, NSqrtN, Quadratic, Inconclusive };
const char* to_string(GrowthModel m);
const char* to_string(BispecialClass c);

struct GrowthFit {
  GrowthModel model = GrowthModel::Inconclusive;
  double coefficient = 0.0;             // scale of the winning model
  double rms = 0.0;                     // RMS relative residual of the winner
  double margin = 0.0;                  // runner-up rms / winner rms
  std::array<double, 6> model_rms{};    // indexed by GrowthModel order
};

// Fits p(n) ~ c * f(n) over the certified range for each candidate shape and
// keeps the winner when it beats the runner-up by the pinned margin (1.2).
// Requires certified_n >= 32; otherwise the fit is Inconclusive.
GrowthFit growth_fit(const ComplexityProfile& prof);

}  // namespace sadic
