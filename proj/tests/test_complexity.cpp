#include <doctest.h>

#include <random>
#include <set>

#include "sadic/complexity.hpp"
#include "sadic/fixtures.hpp"
#include "sadic/morphism.hpp"
#include "sadic/oracle.hpp"

using namespace sadic;

namespace {

Word fixed(const char* name, std::size_t n) {
  return fixed_point_prefix(fixtures::morphism(name), 0, n);
}

Word random_word(std::mt19937& rng, std::size_t len, int alphabet) {
  std::vector<std::uint8_t> letters(len);
  std::uniform_int_distribution<int> dist(0, alphabet - 1);
  for (auto& c : letters) c = std::uint8_t(dist(rng));
  return Word(std::move(letters), alphabet);
}

}  // namespace

TEST_CASE("complexity profile of a tiny word") {
  Word w = parse_word("0110");
  auto prof = complexity_profile(w, 2);
  CHECK(prof.p == std::vector<std::int64_t>{1, 2, 3});
  CHECK(prof.s == std::vector<std::int64_t>{1, 1});
  CHECK(prof.certified_n == 1);  // the half prefix "01" misses factors of length 2
  CHECK_THROWS_AS(complexity_profile(w, 0), error);
  CHECK_THROWS_AS(complexity_profile(w, 4), error);
}

TEST_CASE("fibonacci complexity is n + 1") {
  Word w = fixed("fibonacci", 20000);
  auto prof = complexity_profile(w, 100);
  CHECK(prof.certified_n >= 60);
  for (std::size_t n = 0; n <= 60; ++n) CHECK(prof.p[n] == std::int64_t(n) + 1);
  for (std::size_t n = 0; n < 60; ++n) CHECK(prof.s[n] == 1);
}

TEST_CASE("thue-morse complexity head") {
  Word w = fixed("thue-morse", 16384);
  auto prof = complexity_profile(w, 32);
  std::vector<std::int64_t> head{1, 2, 4, 6, 10, 12, 16, 20, 22};
  REQUIRE(prof.certified_n >= 8);
  for (std::size_t n = 0; n < head.size(); ++n) CHECK(prof.p[n] == head[n]);
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(prof.p[n] == oracle::factor_count(w, n));
}

TEST_CASE("binary chacon complexity is 2n - 1 from length 2 on") {
  Word w = fixed("chacon", 50000);
  auto prof = complexity_profile(w, 60);
  REQUIRE(prof.certified_n >= 40);
  CHECK(prof.p[1] == 2);
  for (std::size_t n = 2; n <= 40; ++n) CHECK(prof.p[n] == 2 * std::int64_t(n) - 1);
  for (std::size_t n = 1; n <= 10; ++n)
    CHECK(prof.p[n] == oracle::factor_count(w, n));
  CHECK(max_run(w, 1) == 1);  // no "11" anywhere: images never glue two 1s
}

TEST_CASE("special factors of the fibonacci word") {
  Word w = fixed("fibonacci", 5000);
  auto right1 = special_factors(w, 1, Side::Right);
  REQUIRE(right1.size() == 1);
  CHECK(format_word(right1[0].factor) == "0");
  CHECK(right1[0].extensions == std::vector<Letter>{0, 1});

  auto left1 = special_factors(w, 1, Side::Left);
  REQUIRE(left1.size() == 1);
  CHECK(format_word(left1[0].factor) == "0");

  auto right2 = special_factors(w, 2, Side::Right);
  REQUIRE(right2.size() == 1);
  CHECK(format_word(right2[0].factor) == "10");
}

TEST_CASE("sturmian bispecial factors are neutral") {
  Word w = fixed("fibonacci", 20000);
  auto report = bispecial_report(w, 20);
  CHECK(!report.empty());
  for (const auto& b : report) {
    CHECK(b.m == 0);
    CHECK(b.cls == BispecialClass::Neutral);
  }
}

TEST_CASE("thue-morse empty word is strong bispecial") {
  Word w = fixed("thue-morse", 16384);
  auto report = bispecial_report(w, 8);
  REQUIRE(!report.empty());
  CHECK(report[0].factor.empty());
  CHECK(report[0].m == 1);  // p(2) - 2 p(1) + 1
  CHECK(report[0].cls == BispecialClass::Strong);
}

TEST_CASE("cassaigne identity residuals vanish on certified fixtures") {
  for (const char* name : {"fibonacci", "thue-morse"}) {
    Word w = fixed(name, 20000);
    auto res = cassaigne_residuals(w, 16);
    for (auto r : res) CHECK(r == 0);
  }
}

TEST_CASE("entropy estimate is near zero for linear-complexity words") {
  // for p(n) = n + 1 the log-slope over [75, 150] is about 1/n ~ 0.009,
  // far below the ~0.3 of a word with positive entropy
  Word w = fixed("fibonacci", 20000);
  auto prof = complexity_profile(w, 150);
  CHECK(entropy_estimate(prof) < 0.02);
}

TEST_CASE("growth fit recognizes linear complexity") {
  Word fib = fixed("fibonacci", 20000);
  auto fit = growth_fit(complexity_profile(fib, 120));
  CHECK(fit.model == GrowthModel::Linear);
  CHECK(fit.margin >= 1.2);

  Word tm = fixed("thue-morse", 20000);
  CHECK(growth_fit(complexity_profile(tm, 120)).model == GrowthModel::Linear);
}

TEST_CASE("growth fit refuses thin certified ranges") {
  Word w = parse_word("01101001100101101001011001101001");  // 32 letters
  auto fit = growth_fit(complexity_profile(w, 20));
  CHECK(fit.model == GrowthModel::Inconclusive);
}

TEST_CASE("profile and extension counts match the oracle on random words") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    Word w = random_word(rng, 200 + trial * 37, 2 + trial % 3);
    auto prof = complexity_profile(w, 10);
    for (std::size_t n = 0; n <= 10; ++n)
      CHECK(prof.p[n] == oracle::factor_count(w, n));

    for (std::size_t n = 1; n <= 3; ++n) {
      auto ours = special_factors(w, n, Side::Right);
      auto ext = oracle::extensions(w, n, true);
      std::size_t special = 0;
      for (const auto& [u, letters] : ext)
        if (letters.size() >= 2) ++special;
      CHECK(ours.size() == special);
      for (const auto& sf : ours) {
        REQUIRE(ext.count(sf.factor) == 1);
        CHECK(sf.extensions == ext.at(sf.factor));
      }
    }
  }
}

TEST_CASE("bilateral orders match a direct pair scan") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    Word w = random_word(rng, 300, 2);
    auto report = bispecial_report(w, 4);
    for (const auto& b : report) {
      std::set<std::pair<Letter, Letter>> pairs;
      std::set<Letter> lefts, rights;
      std::size_t n = b.factor.size();
      auto pos = oracle::positions(w, b.factor);
      if (b.factor.empty()) {
        pos.clear();
        for (std::size_t i = 0; i <= w.size(); ++i) pos.push_back(i);
      }
      for (auto i : pos) {
        if (i > 0) lefts.insert(w[i - 1]);
        if (i + n < w.size()) rights.insert(w[i + n]);
        if (i > 0 && i + n < w.size()) pairs.insert({w[i - 1], w[i + n]});
      }
      CHECK(b.left_degree == int(lefts.size()));
      CHECK(b.right_degree == int(rights.size()));
      CHECK(b.bilateral == int(pairs.size()));
      CHECK(b.m == b.bilateral - b.left_degree - b.right_degree + 1);
    }
  }
}
