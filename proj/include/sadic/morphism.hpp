#pragma once

#include <string>
#include <vector>

#include "sadic/bigint.hpp"
#include "sadic/word.hpp"

namespace sadic {

// Memory guard for materialized words, in letters. Reads SADIC_MEM_CAP from
// the environment once; defaults to 10^7.
std::size_t memory_cap();

// A non-erasing morphism between free monoids. images[b] is the image of
// letter b; every image letter is below codomain_size.
struct Morphism {
  std::string name;
  std::vector<std::vector<std::uint8_t>> images;
  int domain_size = 0;
  int codomain_size = 0;

  Morphism() = default;
  Morphism(std::string name, std::vector<std::string> image_texts,
           int codomain = -1);

  const std::vector<std::uint8_t>& image(Letter b) const;
  Word image_word(Letter b) const;

  // sigma(w), exact; throws a memory-cap error past the configured cap.
  Word apply(const Word& w) const;
  // sigma(w) truncated to at most cap letters.
  Word apply_prefix(const Word& w, std::size_t cap) const;

  bool square() const { return domain_size == codomain_size; }
  void validate() const;
};

// Entry [a][b] counts occurrences of a in images[b]; codomain x domain.
using IncidenceMatrix = std::vector<std::vector<Bigint>>;

IncidenceMatrix incidence_matrix(const Morphism& m);
IncidenceMatrix matrix_product(const IncidenceMatrix& a, const IncidenceMatrix& b);
IncidenceMatrix matrix_power(const IncidenceMatrix& a, unsigned k);
bool matrix_positive(const IncidenceMatrix& a);

// sigma after tau: b -> sigma(tau(b)). Requires tau's codomain to equal
// sigma's domain.
Morphism compose(const Morphism& sigma, const Morphism& tau);

bool is_nonerasing(const Morphism& m);
bool is_uniform(const Morphism& m);
// Every image has length >= 2.
bool is_expansive(const Morphism& m);
// All images share one first letter and one last letter.
bool is_proper(const Morphism& m);
// Every letter occurring in some image occurs in every image.
bool is_strongly_primitive(const Morphism& m);

struct PrimitivityReport {
  bool primitive = false;
  // Least k with M^k strictly positive; 0 when not primitive. The search is
  // capped at the Wielandt bound (d-1)^2 + 1.
  unsigned exponent = 0;
};
PrimitivityReport is_primitive(const Morphism& m);

// All structural predicates of one morphism in a single report. Primitivity
// fields stay false for non-square morphisms.
struct MorphismPredicates {
  bool non_erasing = false;
  bool uniform = false;
  bool expansive = false;
  bool proper = false;
  bool strongly_primitive = false;
  bool primitive = false;
  unsigned primitive_exponent = 0;
};
MorphismPredicates predicates(const Morphism& m);

// Letters b with sup_n |sigma^n(b)| finite. Cycle criterion on the
// occurrence digraph: b is bounded iff no letter reachable from b lies on a
// cycle and has an image of length >= 2.
std::vector<Letter> bounded_letters(const Morphism& m);

// Prefix of length n of the fixed point sigma^omega(a). Requires a square
// morphism with sigma(a) starting with a and |sigma(a)| >= 2.
Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n);

// Growth of |sigma^n(b)| = Theta(n^alpha beta^n) per letter, for everywhere
// growing morphisms: beta is the max spectral radius over reachable strongly
// connected components, alpha one less than the longest chain of
// max-radius components on a path.
enum class GrowthClass {
  QuasiUniform,
  PolynomiallyDiverging,
  ExponentiallyDiverging,
  NotEverywhereGrowing,
};

struct LetterGrowth {
  Letter letter = 0;
  double beta = 0.0;
  int alpha = 0;
};

struct GrowthReport {
  GrowthClass cls = GrowthClass::QuasiUniform;
  std::vector<LetterGrowth> letters;   // empty when not everywhere growing
  std::vector<Letter> bounded;         // the bounded letters otherwise
};

GrowthReport growth_classify(const Morphism& m);

const char* to_string(GrowthClass c);

// Complexity class of the fixed point sigma^omega(a) via the growth
// trichotomy; the quadratic case is recognized empirically by bounded-letter
// blocks that keep growing between two prefix scales.
enum class PansiotClass {
  UltimatelyPeriodic,
  Linear,
  NLogLogN,
  NLogN,
  Quadratic,
  Case3Deferred,
};

struct PansiotReport {
  PansiotClass cls = PansiotClass::Linear;
  GrowthReport growth;
  std::size_t block_half = 0;  // longest bounded-letter block, half prefix
  std::size_t block_full = 0;  // same, full prefix
};

PansiotReport pansiot_classify(const Morphism& m, Letter a,
                               std::size_t prefix_budget = 100000);

const char* to_string(PansiotClass c);

// Uniform-recurrence diagnostic for sigma^omega(a): looks for a growing
// letter b whose occurrence gaps are stable across the half and full prefix
// and from which every letter is reachable in the occurrence digraph.
enum class RecurrenceVerdict { UniformlyRecurrent, NotUniformlyRecurrent, Inconclusive };

struct RecurrenceReport {
  RecurrenceVerdict verdict = RecurrenceVerdict::Inconclusive;
  Letter witness = -1;
  std::size_t gap_bound = 0;
};

RecurrenceReport uniform_recurrence_check(const Morphism& m, Letter a,
                                          std::size_t prefix_budget = 100000);

const char* to_string(RecurrenceVerdict v);

}  // namespace sadic
