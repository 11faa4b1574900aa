#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sadic/directive.hpp"

namespace sadic {
namespace fixtures {

// Named morphism catalog. Names describe what each morphism does; classical
// morphisms keep their classical names.
const std::map<std::string, Morphism>& catalog();
const Morphism& morphism(const std::string& name);

// Episturmian builders over {0..k-1}. The left form maps b -> ab (b != a,
// a fixed); the right form maps b -> ba. printed=true keeps the degenerate
// b -> ab reading of the right form under a distinct name, so both readings
// stay available side by side.
Morphism epi_left(Letter a, int k);
Morphism epi_right(Letter a, int k, bool printed = false);

// Sturmian directive: cycle of blocks sturm-l0, sturm-r0, sturm-l1, sturm-r1
// whose powers follow k (block j of pass i takes k[(4i+j) mod |k|]); |k| must
// be a positive multiple of 4. Seed 0.
DirectiveWord sturmian(const std::vector<long long>& k);

// Pass n applies double-zero^{k_n} thue-morse with k_n = n (flat: k ≡ 0,
// which degenerates to pure thue-morse). Seed 0.
DirectiveWord power_rich(bool flat = false);

// Pass n (0-based, n < depth) applies merge freeze^{n+1}. Finite. Seed 0.
DirectiveWord freeze_merge(int depth = 6);

// double-zero^1 swap double-zero^2 swap ... regrouped two passes at a time so
// that successive products extend each other (unpaired products flip the
// leading letter and never converge). Pass j applies the exact composition
// double-zero^{2j+1} swap double-zero^{2j+2} swap; depth <= 5 keeps the
// composed images inside the memory cap. Finite. Seed 0.
DirectiveWord boshernitzan(int depth = 5);

// Pass k applies fold triple^k lift (pass 0 composes to the identity, so the
// telescoped length at level k is exactly 3^{k(k+1)/2}). Seed 0.
DirectiveWord return_rich();

// Pass n applies shuffle-a^{n+1+tail} shuffle-b; tail > 0 starts the directive
// deeper, which is how the tail sequences w^(d) are materialized. Seed 0.
DirectiveWord primitive_not_lr(long long tail = 0);

// A pseudo-random finite word of `atoms` morphisms drawn fairly from
// {fibonacci, thue-morse} with the given generator seed. Seed letter 0.
DirectiveWord good_adic(std::uint32_t seed, std::size_t atoms = 60);

// clamp applied once over `depth` iterations of stairs. Finite. Seed 0.
DirectiveWord deviatov(int depth = 400);

// Regrouping of the boshernitzan atom stream double-zero swap double-zero^2
// swap ... over the two-morphism set {double-zero*swap, swap*double-zero},
// inserting/cancelling swap*swap pairs on the fly. cut_pairs[i] pairs compose
// to exactly the same morphism as cut_atoms[i] original atoms.
struct PairExpansion {
  std::vector<int> pairs;              // 0 = double-zero*swap, 1 = swap*double-zero
  std::vector<std::size_t> cut_pairs;  // clean prefix sizes, in pairs
  std::vector<std::size_t> cut_atoms;  // matching prefix sizes, in atoms
};
PairExpansion boshernitzan_pairs(std::size_t atom_count);
std::vector<Morphism> boshernitzan_atoms(std::size_t atom_count);

struct FixtureInfo {
  std::string name;
  std::string summary;
};
std::vector<FixtureInfo> list_fixtures();
DirectiveWord directive_fixture(const std::string& name);

}  // namespace fixtures
}  // namespace sadic
