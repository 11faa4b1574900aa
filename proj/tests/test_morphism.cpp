#include <doctest.h>

#include <cmath>

#include "sadic/fixtures.hpp"
#include "sadic/morphism.hpp"

using namespace sadic;

namespace {

const Morphism& fx(const char* name) { return fixtures::morphism(name); }

std::string image_text(const Morphism& m, Letter b) {
  return format_word(m.image_word(b));
}

Bigint image_length(const IncidenceMatrix& mat, int col) {
  Bigint total = 0;
  for (const auto& row : mat) total += row[col];
  return total;
}

}  // namespace

TEST_CASE("morphism construction validates") {
  CHECK_THROWS_AS(Morphism("bad", {"01", ""}), error);       // erasing
  CHECK_THROWS_AS(Morphism("bad", {"02"}, 2), error);        // letter above codomain
  CHECK_THROWS_AS(Morphism("bad", {}), error);               // empty domain
  Morphism ok("ok", {"01", "0"});
  CHECK(ok.domain_size == 2);
  CHECK(ok.codomain_size == 2);
  Morphism lifted("lifted", {"0", "2"}, 4);
  CHECK(lifted.codomain_size == 4);
}

TEST_CASE("iterated images of the classical morphisms") {
  Word g3 = fx("double-zero").apply(fx("double-zero").apply(fx("double-zero").image_word(0)));
  CHECK(format_word(g3) == "001001100100111");

  const Morphism& ch = fx("chacon");
  CHECK(format_word(ch.apply(ch.image_word(0))) == "0010001010010");

  const Morphism& tm = fx("thue-morse");
  Word m4 = tm.image_word(0);
  for (int i = 0; i < 3; ++i) m4 = tm.apply(m4);
  CHECK(format_word(m4) == "0110100110010110");
}

TEST_CASE("apply_prefix truncates at the cap") {
  const Morphism& tm = fx("thue-morse");
  Word w = tm.apply_prefix(parse_word("0110"), 5);
  CHECK(format_word(w) == "01101");
}

TEST_CASE("composition matches hand products") {
  const Morphism& g = fx("double-zero");
  const Morphism& e = fx("swap");
  Morphism ge = compose(g, e);
  CHECK(image_text(ge, 0) == "1");
  CHECK(image_text(ge, 1) == "001");
  Morphism eg = compose(e, g);
  CHECK(image_text(eg, 0) == "110");
  CHECK(image_text(eg, 1) == "0");

  Morphism geg = compose(ge, g);
  CHECK(image_text(geg, 0) == "11001");
  CHECK(image_text(geg, 1) == "001");
  CHECK(is_strongly_primitive(geg));
  CHECK_FALSE(is_strongly_primitive(g));
}

TEST_CASE("composition rejects alphabet mismatch") {
  // merge maps 3 letters into a 3-letter codomain; fibonacci needs domain 2.
  CHECK_THROWS_AS(compose(fx("fibonacci"), fx("merge")), error);
}

TEST_CASE("incidence matrix is multiplicative") {
  auto check_pair = [](const Morphism& s, const Morphism& t) {
    auto lhs = incidence_matrix(compose(s, t));
    auto rhs = matrix_product(incidence_matrix(s), incidence_matrix(t));
    CHECK(lhs == rhs);
  };
  check_pair(fx("double-zero"), fx("swap"));
  check_pair(fx("swap"), fx("double-zero"));
  check_pair(fx("fibonacci"), fx("thue-morse"));
  check_pair(fx("freeze"), fx("merge"));

  auto m = incidence_matrix(fx("fibonacci"));
  CHECK(matrix_power(m, 2) == matrix_product(m, m));
  CHECK(matrix_power(m, 5) ==
        matrix_product(m, matrix_product(m, matrix_product(m, matrix_product(m, m)))));
}

TEST_CASE("structural predicates of the sturmian blocks") {
  auto p = predicates(fx("sturm-l0"));
  CHECK(p.non_erasing);
  CHECK_FALSE(p.uniform);
  CHECK_FALSE(p.expansive);
  CHECK_FALSE(p.proper);
  CHECK_FALSE(p.strongly_primitive);
  CHECK_FALSE(p.primitive);
  CHECK(p.primitive_exponent == 0);
}

TEST_CASE("structural predicates of thue-morse and fibonacci") {
  auto tm = predicates(fx("thue-morse"));
  CHECK(tm.uniform);
  CHECK(tm.expansive);
  CHECK_FALSE(tm.proper);
  CHECK(tm.strongly_primitive);
  CHECK(tm.primitive);
  CHECK(tm.primitive_exponent == 1);

  auto fib = predicates(fx("fibonacci"));
  CHECK_FALSE(fib.uniform);
  CHECK_FALSE(fib.expansive);
  CHECK(fib.primitive);
  CHECK(fib.primitive_exponent == 2);
}

TEST_CASE("primitivity exponent stays below the wielandt bound") {
  for (const auto& [name, m] : fixtures::catalog()) {
    if (!m.square()) continue;
    auto rep = is_primitive(m);
    if (rep.primitive) {
      unsigned d = unsigned(m.domain_size);
      CHECK(rep.exponent >= 1);
      CHECK(rep.exponent <= (d - 1) * (d - 1) + 1);
    } else {
      CHECK(rep.exponent == 0);
    }
  }
}

TEST_CASE("bounded letters") {
  CHECK(bounded_letters(fx("freeze")) == std::vector<Letter>{2});
  CHECK(bounded_letters(fx("double-zero")) == std::vector<Letter>{1});
  CHECK(bounded_letters(fx("chacon")) == std::vector<Letter>{1});
  CHECK(bounded_letters(fx("fibonacci")).empty());
  CHECK(bounded_letters(fx("uneven")).empty());
}

TEST_CASE("growth classification") {
  auto tm = growth_classify(fx("thue-morse"));
  CHECK(tm.cls == GrowthClass::QuasiUniform);
  REQUIRE(tm.letters.size() == 2);
  CHECK(tm.letters[0].beta == doctest::Approx(2.0));
  CHECK(tm.letters[1].beta == doctest::Approx(2.0));
  CHECK(tm.letters[0].alpha == 0);

  auto fib = growth_classify(fx("fibonacci"));
  CHECK(fib.cls == GrowthClass::QuasiUniform);
  CHECK(fib.letters[0].beta == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-6));

  // 1 -> 101 feeds the level below it: same radius twice along one path.
  Morphism poly("poly", {"00", "101"});
  auto pg = growth_classify(poly);
  CHECK(pg.cls == GrowthClass::PolynomiallyDiverging);
  CHECK(pg.letters[0].alpha == 0);
  CHECK(pg.letters[1].alpha == 1);
  CHECK(pg.letters[1].beta == doctest::Approx(2.0));

  auto un = growth_classify(fx("uneven"));
  CHECK(un.cls == GrowthClass::ExponentiallyDiverging);
  CHECK(un.letters[1].beta == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(un.letters[2].beta == doctest::Approx(3.0).epsilon(1e-6));

  auto dz = growth_classify(fx("double-zero"));
  CHECK(dz.cls == GrowthClass::NotEverywhereGrowing);
  CHECK(dz.letters.empty());
  CHECK(dz.bounded == std::vector<Letter>{1});
}

TEST_CASE("length ratios converge to the growth rate") {
  auto m = incidence_matrix(fx("fibonacci"));
  auto p40 = matrix_power(m, 40);
  auto p41 = matrix_power(m, 41);
  double ratio = image_length(p41, 0).convert_to<double>() /
                 image_length(p40, 0).convert_to<double>();
  CHECK(std::abs(ratio - (1 + std::sqrt(5.0)) / 2) < 1e-4);
}

TEST_CASE("fixed point prefixes") {
  Word w = fixed_point_prefix(fx("fibonacci"), 0, 13);
  CHECK(format_word(w) == "0100101001001");
  CHECK_THROWS_AS(fixed_point_prefix(fx("fibonacci"), 1, 10), error);
  CHECK_THROWS_AS(fixed_point_prefix(fx("swap"), 0, 10), error);
}

TEST_CASE("fixed point complexity classes") {
  CHECK(pansiot_classify(fx("fibonacci"), 0, 20000).cls == PansiotClass::Linear);
  CHECK(pansiot_classify(fx("thue-morse"), 0, 20000).cls == PansiotClass::Linear);

  auto dz = pansiot_classify(fx("double-zero"), 0, 20000);
  CHECK(dz.cls == PansiotClass::Quadratic);
  CHECK(dz.block_full > dz.block_half);

  // chacon's bounded letter never chains, so case 3 stays open.
  CHECK(pansiot_classify(fx("chacon"), 0, 20000).cls == PansiotClass::Case3Deferred);

  Morphism per("per", {"01", "01"});
  CHECK(pansiot_classify(per, 0, 20000).cls == PansiotClass::UltimatelyPeriodic);
}

TEST_CASE("uniform recurrence diagnostic") {
  auto fib = uniform_recurrence_check(fx("fibonacci"), 0, 50000);
  CHECK(fib.verdict == RecurrenceVerdict::UniformlyRecurrent);
  CHECK(fib.gap_bound >= 2);

  auto dz = uniform_recurrence_check(fx("double-zero"), 0, 50000);
  CHECK(dz.verdict == RecurrenceVerdict::NotUniformlyRecurrent);
}
