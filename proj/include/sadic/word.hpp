#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sadic {

// Error type shared by the whole library. The message starts with a short
// category tag ("domain mismatch: ...", "degenerate directive: ...") so
// callers and tests can discriminate without a taxonomy of classes.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

using Letter = int;
constexpr int kMaxAlphabet = 16;

// A finite word over {0, ..., alphabet_size-1}. Letters are stored as bytes;
// alphabets larger than kMaxAlphabet are rejected at construction.
struct Word {
  std::vector<std::uint8_t> letters;
  int alphabet_size = 1;

  Word() = default;
  Word(std::vector<std::uint8_t> l, int alpha);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  Word prefix(std::size_t n) const;
  Word slice(std::size_t begin, std::size_t end) const;

  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }
};

// Parses "01101001" (alphabet <= 10) or "0,1,12,3" (comma separated).
// alphabet_size -1 means "infer from the largest letter".
Word parse_word(const std::string& text, int alphabet_size = -1);
std::string format_word(const Word& w);

using FactorSet = std::set<Word>;

// All distinct factors of length n occurring in w.
FactorSet factors(const Word& w, std::size_t n);

// Start positions of every (possibly overlapping) occurrence of u in w,
// in increasing order.
std::vector<std::size_t> occurrences(const Word& w, const Word& u);

// A nonempty word is primitive when it is not a proper integer power.
// Decided via the failure function: u = v^k with k > 1 iff the border
// length b satisfies |u| % (|u| - b) == 0 with |u| - b < |u|.
bool is_primitive_word(const Word& u);

// Length of the longest run of `a` in w.
std::size_t max_run(const Word& w, Letter a);

// Length of the longest block of w over the given subalphabet.
std::size_t max_block(const Word& w, const std::vector<Letter>& subalphabet);

// Least period of w (smallest p >= 1 with w[i] == w[i+p] for all valid i).
std::size_t least_period(const Word& w);

}  // namespace sadic
