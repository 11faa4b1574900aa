#include <doctest.h>

#include <set>

#include "sadic/directive.hpp"
#include "sadic/fixtures.hpp"
#include "sadic/morphism.hpp"

using namespace sadic;
using fixtures::morphism;

namespace {

std::vector<std::string> images_of(const Morphism& m) {
  std::vector<std::string> out;
  for (int b = 0; b < m.domain_size; ++b) out.push_back(format_word(m.image_word(b)));
  return out;
}

}  // namespace

TEST_CASE("catalog entries") {
  using V = std::vector<std::string>;
  CHECK(images_of(morphism("thue-morse")) == V{"01", "10"});
  CHECK(images_of(morphism("fibonacci")) == V{"01", "0"});
  CHECK(images_of(morphism("chacon")) == V{"0010", "1"});
  CHECK(images_of(morphism("double-zero")) == V{"001", "1"});
  CHECK(images_of(morphism("swap")) == V{"1", "0"});
  CHECK(images_of(morphism("uneven")) == V{"0120", "11", "222"});
  CHECK(images_of(morphism("freeze")) == V{"010", "1112", "2"});
  CHECK(images_of(morphism("merge")) == V{"0", "1", "1"});
  CHECK(morphism("merge").codomain_size == 3);
  CHECK(images_of(morphism("sturm-l0")) == V{"0", "01"});
  CHECK(images_of(morphism("sturm-r0")) == V{"0", "10"});
  CHECK(images_of(morphism("sturm-l1")) == V{"10", "1"});
  CHECK(images_of(morphism("sturm-r1")) == V{"01", "1"});
  CHECK(morphism("lift").codomain_size == 4);
  CHECK_THROWS_AS(morphism("nope"), error);
}

TEST_CASE("episturmian builders agree with the sturmian quadruple") {
  CHECK(images_of(fixtures::epi_left(0, 2)) == images_of(morphism("sturm-l0")));
  CHECK(images_of(fixtures::epi_right(0, 2)) == images_of(morphism("sturm-r0")));
  CHECK(images_of(fixtures::epi_left(1, 2)) == images_of(morphism("sturm-l1")));
  CHECK(images_of(fixtures::epi_right(1, 2)) == images_of(morphism("sturm-r1")));

  auto l1 = fixtures::epi_left(1, 3);
  CHECK(images_of(l1) == std::vector<std::string>{"10", "1", "12"});
  // the printed variant keeps the b -> ab reading of the right form
  auto r1p = fixtures::epi_right(1, 3, true);
  CHECK(images_of(r1p) == std::vector<std::string>{"10", "1", "12"});
  auto r1 = fixtures::epi_right(1, 3);
  CHECK(images_of(r1) == std::vector<std::string>{"01", "1", "21"});
}

TEST_CASE("sturmian schedules are validated") {
  CHECK_THROWS_AS(fixtures::sturmian({}), error);
  CHECK_THROWS_AS(fixtures::sturmian({1, 1, 1}), error);
  CHECK_THROWS_AS(fixtures::sturmian({1, 1, 1, 1, 1}), error);
  CHECK_NOTHROW(fixtures::sturmian({1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST_CASE("good-adic directives are fair and reproducible") {
  auto a = fixtures::good_adic(7, 60);
  auto b = fixtures::good_adic(7, 60);
  auto c = fixtures::good_adic(8, 60);
  REQUIRE(a.blocks.size() == 60);
  auto names = [](const DirectiveWord& d) {
    std::vector<std::string> out;
    for (const auto& blk : d.blocks) out.push_back(blk.morphism);
    return out;
  };
  auto na = names(a);
  CHECK(na == names(b));
  CHECK(na != names(c));
  std::set<std::string> used(na.begin(), na.end());
  CHECK(used == std::set<std::string>{"fibonacci", "thue-morse"});
}

TEST_CASE("boshernitzan pair regrouping composes to the atom prefix") {
  auto px = fixtures::boshernitzan_pairs(20);
  std::vector<int> head(px.pairs.begin(), px.pairs.begin() + 10);
  CHECK(head == std::vector<int>{0, 0, 1, 1, 0, 1, 1, 0, 1, 0});
  REQUIRE(px.cut_pairs.size() == px.cut_atoms.size());
  REQUIRE(px.cut_pairs.size() >= 4);
  CHECK(px.cut_pairs[0] == 1);
  CHECK(px.cut_atoms[0] == 2);

  auto atoms = fixtures::boshernitzan_atoms(20);
  Morphism ge = compose(morphism("double-zero"), morphism("swap"));
  Morphism eg = compose(morphism("swap"), morphism("double-zero"));
  for (std::size_t i = 0; i < 4; ++i) {
    Morphism lhs = px.pairs[0] == 0 ? ge : eg;
    for (std::size_t j = 1; j < px.cut_pairs[i]; ++j)
      lhs = compose(lhs, px.pairs[j] == 0 ? ge : eg);
    Morphism rhs = atoms[0];
    for (std::size_t j = 1; j < px.cut_atoms[i]; ++j) rhs = compose(rhs, atoms[j]);
    CHECK(lhs.images == rhs.images);
  }
}

TEST_CASE("fixture listing names every directive") {
  auto infos = fixtures::list_fixtures();
  CHECK(infos.size() >= 14);
  for (const auto& info : infos) {
    CHECK_NOTHROW(fixtures::directive_fixture(info.name).validate());
    CHECK_FALSE(info.summary.empty());
  }
  CHECK_THROWS_AS(fixtures::directive_fixture("nope"), error);
}

TEST_CASE("primitive-not-lr tails start deeper") {
  auto d0 = fixtures::primitive_not_lr(0);
  auto d3 = fixtures::primitive_not_lr(3);
  // pass n of the tail-3 directive applies shuffle-a^{n+4}
  CHECK(directive_morphism(d0, 0).name == "shuffle-a");
  Morphism a0 = directive_morphism(d0, 0);
  Morphism a3 = directive_morphism(d3, 0);
  CHECK(a0.images == a3.images);
  // count shuffle-a atoms before the first shuffle-b
  auto count_leading = [](const DirectiveWord& d) {
    std::size_t n = 0;
    while (directive_morphism(d, n).name == "shuffle-a") ++n;
    return n;
  };
  CHECK(count_leading(d0) == 1);
  CHECK(count_leading(d3) == 4);
}

TEST_CASE("deviatov directive validates and stays finite") {
  auto d = fixtures::deviatov(10);
  CHECK(d.finite());
  CHECK_NOTHROW(d.validate());
  auto g = generate_prefix(d, 50);
  CHECK(g.prefix.size() <= 50);
}
