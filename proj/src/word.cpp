#include "sadic/word.hpp"

#include <algorithm>
#include <sstream>

namespace sadic {

Word::Word(std::vector<std::uint8_t> l, int alpha)
    : letters(std::move(l)), alphabet_size(alpha) {
  if (alpha < 1 || alpha > kMaxAlphabet)
    throw error("alphabet too large: size " + std::to_string(alpha) +
                " outside [1, " + std::to_string(kMaxAlphabet) + "]");
  for (auto c : letters)
    if (c >= alpha)
      throw error("invalid letter: " + std::to_string(int(c)) +
                  " not below alphabet size " + std::to_string(alpha));
}

Word Word::prefix(std::size_t n) const { return slice(0, std::min(n, size())); }

Word Word::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) throw error("invalid slice bounds");
  Word out;
  out.alphabet_size = alphabet_size;
  out.letters.assign(letters.begin() + begin, letters.begin() + end);
  return out;
}

Word parse_word(const std::string& text, int alphabet_size) {
  std::vector<std::uint8_t> letters;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (v < 0) throw error("invalid letter: negative value in word text");
      letters.push_back(std::uint8_t(v));
    }
  } else {
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
      if (c < '0' || c > '9') throw error(std::string("invalid letter: '") + c + "' in word text");
      letters.push_back(std::uint8_t(c - '0'));
    }
  }
  int alpha = alphabet_size;
  if (alpha < 0) {
    alpha = 1;
    for (auto c : letters) alpha = std::max(alpha, int(c) + 1);
  }
  return Word(std::move(letters), alpha);
}

std::string format_word(const Word& w) {
  std::string out;
  if (w.alphabet_size <= 10) {
    out.reserve(w.size());
    for (auto c : w.letters) out.push_back(char('0' + c));
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(int(w.letters[i]));
    }
  }
  return out;
}

FactorSet factors(const Word& w, std::size_t n) {
  FactorSet out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.slice(i, i + n));
  return out;
}

std::vector<std::size_t> occurrences(const Word& w, const Word& u) {
  std::vector<std::size_t> out;
  if (u.empty()) throw error("empty window: occurrences of the empty word are not defined");
  if (u.size() > w.size()) return out;
  auto it = w.letters.begin();
  while (true) {
    it = std::search(it, w.letters.end(), u.letters.begin(), u.letters.end());
    if (it == w.letters.end()) break;
    out.push_back(std::size_t(it - w.letters.begin()));
    ++it;
  }
  return out;
}

namespace {

std::vector<std::size_t> failure_function(const Word& u) {
  std::vector<std::size_t> f(u.size() + 1, 0);
  for (std::size_t i = 1; i < u.size(); ++i) {
    std::size_t j = f[i];
    while (j && u[i] != u[j]) j = f[j];
    f[i + 1] = (u[i] == u[j]) ? j + 1 : 0;
  }
  return f;
}

}  // namespace

bool is_primitive_word(const Word& u) {
  if (u.empty()) throw error("empty window: primitivity of the empty word is not defined");
  auto f = failure_function(u);
  std::size_t p = u.size() - f[u.size()];
  return p == u.size() || u.size() % p != 0;
}

std::size_t max_run(const Word& w, Letter a) {
  std::size_t best = 0, cur = 0;
  for (auto c : w.letters) {
    cur = (c == a) ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

std::size_t max_block(const Word& w, const std::vector<Letter>& subalphabet) {
  bool in[kMaxAlphabet] = {};
  for (Letter a : subalphabet) {
    if (a < 0 || a >= kMaxAlphabet) throw error("invalid letter: " + std::to_string(a));
    in[a] = true;
  }
  std::size_t best = 0, cur = 0;
  for (auto c : w.letters) {
    cur = in[c] ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

std::size_t least_period(const Word& w) {
  if (w.empty()) throw error("empty window: period of the empty word is not defined");
  auto f = failure_function(w);
  return w.size() - f[w.size()];
}

}  // namespace sadic
