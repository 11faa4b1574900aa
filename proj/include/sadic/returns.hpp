#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sadic/word.hpp"

namespace sadic {

// Return words of one factor, computed from the gaps between consecutive
// occurrences. Every listed r satisfies: ru is a factor, ru begins with u,
// and ru contains exactly two occurrences of u. `stable` records agreement
// of the return set between the half prefix and the full prefix; "exactly k
// return words" claims should only be read off stable reports.
struct ReturnWordReport {
  Word factor;
  std::vector<Word> returns;       // distinct, sorted
  std::size_t occurrence_count = 0;
  std::size_t max_gap = 0;         // max distance between consecutive occurrences
  bool stable = false;
};

// Requires u nonempty with at least two occurrences in w.
ReturnWordReport return_words(const Word& w, const Word& u);

// Reports for every distinct length-n factor with >= 2 occurrences, in one
// suffix-array pass (lexicographic order).
std::vector<ReturnWordReport> return_words_all(const Word& w, std::size_t n);

struct MinReturnProfile {
  std::size_t length = 0;
  std::size_t min_count = 0;
  Word argmin;
  std::size_t factors_scanned = 0;
  std::size_t skipped = 0;  // factors with < 2 occurrences or unstable sets
};

// Minimum stable return-word count over all length-ell factors.
MinReturnProfile min_return_count(const Word& w, std::size_t ell);

// Exponent set: i is present iff p u^i s is a factor of w for some nonempty
// p, s with |p| <= |u|, |s| <= |u|, p not a suffix of u, s not a prefix of
// u. Computed by one pass over longest-common-prefix/suffix arrays with u.
struct PowSet {
  Word u;
  std::vector<long long> present;  // sorted, <= cap
  long long cap = 0;
  bool truncated = false;  // some witnessed exponent exceeded cap
};

PowSet pow_set(const Word& w, const Word& u, long long i_cap);

// One witness of the power-richness criterion: a candidate factor u with the
// largest k whose full exponent interval [ceil(k/C), k] lies in Pow(u), and
// the complexity lower bound (|u|/2) * ((C-1)/C * k) * ((C-1)/C * k - 1)
// implied at that k.
struct RichnessWitness {
  Word u;
  long long k = 0;
  bool primitive = false;
  double bound = 0.0;
};

struct RichnessVerdict {
  double C = 2.0;
  std::vector<RichnessWitness> witnesses;
  bool flag = false;    // raised: the word cannot have sub-linear complexity
  std::string reason;   // filled when the flag stays down
};

// Flags the word when the candidate family has >= 2 members, all primitive,
// strictly increasing lengths, and coverage exponents k_n >= 2 strictly
// increasing. Non-primitive candidates are refused (the argument composes
// commuting-power witnesses, which needs primitivity).
RichnessVerdict power_richness(const Word& w, double C,
                               const std::vector<Word>& candidates);

struct RecurrenceEstimate {
  double constant = 0.0;  // max over factors of (max occurrence gap) / |u|
  Word argmax;
  std::size_t factors_scanned = 0;
  std::size_t skipped = 0;  // factors rare or absent from the half prefix
};

// Estimates the recurrence constant from the factors of length 1..max_len
// that already occur inside the half prefix.
RecurrenceEstimate recurrence_constant(const Word& w, std::size_t max_len);

}  // namespace sadic
