#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sadic/bigint.hpp"
#include "sadic/morphism.hpp"
#include "sadic/word.hpp"

namespace sadic {

// Exponent schedule for one directive block: the power applied on the n-th
// pass over the block list.
struct PowerSchedule {
  enum class Kind { Constant, Identity, Cycle, List };
  Kind kind = Kind::Constant;
  long long constant = 1;
  std::vector<long long> values;  // Cycle wraps around, List runs out

  static PowerSchedule make_constant(long long c);
  static PowerSchedule identity(long long offset = 0);  // power offset + n on pass n
  static PowerSchedule cycle(std::vector<long long> v);
  static PowerSchedule list(std::vector<long long> v);

  bool finite() const { return kind == Kind::List; }
  // Throws a schedule-exhausted error past the end of a List.
  long long at(std::size_t pass) const;
};

struct DirectiveBlock {
  std::string morphism;
  PowerSchedule power;
};

// A directive word: the block list is traversed cyclically, block j on pass
// n contributing morphism^power_j(n). The expansion into single morphisms
// ("atoms") drives generation; one full pass is the unit of telescoping.
struct DirectiveWord {
  std::map<std::string, Morphism> morphisms;
  std::vector<DirectiveBlock> blocks;
  Letter seed = 0;

  const Morphism& morphism(const std::string& name) const;
  void validate() const;
  bool finite() const;
};

// The n-th morphism of the expanded directive word (atom index).
Morphism directive_morphism(const DirectiveWord& d, std::size_t n);

// |sigma_0 ... sigma_n(seed)| for pass levels n = 0..max_level, computed by
// incidence-vector products, never by materializing words.
std::vector<Bigint> telescope_lengths(const DirectiveWord& d, std::size_t max_level);

struct GeneratedPrefix {
  Word prefix;                         // the requested prefix (may be shorter)
  std::size_t stable_length = 0;       // letters certified by depth agreement
  std::vector<Bigint> telescoped_lengths;  // per pass level
  std::size_t passes_used = 0;
  bool exhausted = false;              // a finite directive ran out of atoms
};

struct GenerateOptions {
  std::size_t seed_copies = 4;
  std::size_t max_passes = 4096;
};

// Materializes an initial prefix of the limit word by composing atoms with
// image truncation and checking prefix stability between pass levels.
GeneratedPrefix generate_prefix(const DirectiveWord& d, std::size_t target,
                                const GenerateOptions& opts = {});

// Strict positivity of M(sigma_r) ... M(sigma_{r+count-1}) over atoms.
bool window_primitive(const DirectiveWord& d, std::size_t r, std::size_t count);

// Images sigma_0 ... sigma_n(a) at pass boundaries n = 0..levels-1, truncated
// to cap letters each.  Stops early if the directive is exhausted.
std::vector<Word> level_images(const DirectiveWord& d, Letter a,
                               std::size_t levels, std::size_t cap);

// Regroups a prefix of the expanded directive word: group_sizes[i] atoms are
// composed into the i-th morphism of a finite directive.
DirectiveWord contract(const DirectiveWord& d, const std::vector<std::size_t>& group_sizes);

// Single-morphism directive sigma sigma sigma ... with the given seed.
DirectiveWord directive_from_morphism(const Morphism& m, Letter seed);

}  // namespace sadic
