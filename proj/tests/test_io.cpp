#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "sadic/fixtures.hpp"
#include "sadic/io.hpp"

using namespace sadic;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content) {
    path = std::string("io_test_") + name;
    std::ofstream(path, std::ios::binary) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("morphism text format round trips") {
  Morphism m = parse_morphism_text("fib = [01, 0]");
  CHECK(m.name == "fib");
  CHECK(m.domain_size == 2);
  CHECK(format_word(m.image_word(0)) == "01");
  CHECK(format_morphism(m) == "fib = [01, 0]");
  Morphism again = parse_morphism_text(format_morphism(m));
  CHECK(again.images == m.images);

  CHECK_THROWS_AS(parse_morphism_text("fib [01, 0]"), error);
  CHECK_THROWS_AS(parse_morphism_text("fib = 01, 0"), error);
  CHECK_THROWS_AS(parse_morphism_text("fib = [01,, 0]"), error);
  CHECK_THROWS_AS(parse_morphism_text(" = [01, 0]"), error);
  CHECK_THROWS_AS(parse_morphism_text("fib = []"), error);
}

TEST_CASE("morphism json form keeps the codomain") {
  json j = morphism_to_json(fixtures::morphism("merge"));
  CHECK(j["codomain"] == 3);
  Morphism m = morphism_from_json(j);
  CHECK(m.codomain_size == 3);
  CHECK(m.images == fixtures::morphism("merge").images);

  CHECK_THROWS_AS(morphism_from_json(json::array()), error);
  CHECK_THROWS_AS(morphism_from_json(json{{"name", "x"}}), error);
}

TEST_CASE("directive json round trips") {
  auto d = fixtures::freeze_merge(4);
  json j = directive_to_json(d);
  DirectiveWord back = directive_from_json(j);
  CHECK_NOTHROW(back.validate());
  CHECK(back.blocks.size() == d.blocks.size());
  CHECK(back.seed == d.seed);
  CHECK(directive_to_json(back).dump() == j.dump());

  auto g1 = generate_prefix(d, 500);
  auto g2 = generate_prefix(back, 500);
  CHECK(g1.prefix == g2.prefix);
}

TEST_CASE("directive json rejects malformed input") {
  CHECK_THROWS_AS(directive_from_json(json::array()), error);
  CHECK_THROWS_AS(directive_from_json(json{{"morphisms", json::object()}}), error);
  json bad;
  bad["morphisms"]["m"] = {"01", "0"};
  bad["blocks"] = json::array({json{{"morphism", "other"}}});
  bad["seed"] = 0;
  CHECK_THROWS_AS(directive_from_json(bad), error);

  json badkind = bad;
  badkind["blocks"][0]["morphism"] = "m";
  badkind["blocks"][0]["power"] = json{{"kind", "weird"}};
  CHECK_THROWS_AS(directive_from_json(badkind), error);
}

TEST_CASE("files load through the front door") {
  TempFile m("m.txt", "tm = [01, 10]\n");
  CHECK(load_morphism(m.path).images == fixtures::morphism("thue-morse").images);

  TempFile mj("m.json", morphism_to_json(fixtures::morphism("lift")).dump());
  CHECK(load_morphism(mj.path).codomain_size == 4);

  TempFile d("d.json", directive_to_json(fixtures::sturmian({1, 1, 1, 1})).dump());
  auto dir = load_directive(d.path);
  CHECK(dir.blocks.size() == 4);

  TempFile w("w.txt", "01101\n");
  CHECK(format_word(load_word(w.path)) == "01101");

  TempFile bad("bad.json", "{broken");
  CHECK_THROWS_AS(load_directive(bad.path), error);
  CHECK_THROWS_AS(load_morphism(std::string("no_such_file.txt")), error);
}

TEST_CASE("complexity csv layout") {
  Word w = parse_word("0110");
  auto prof = complexity_profile(w, 2);
  CHECK(complexity_csv(prof) ==
        "n,p,s,valid\n"
        "0,1,1,1\n"
        "1,2,1,1\n"
        "2,3,,0\n");
  json j = complexity_to_json(prof);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["s"].is_null());
  CHECK(j["certified_n"] == 1);
}

TEST_CASE("report csv emitters") {
  Word w = parse_word("010010");
  auto sp = special_factors(w, 1, Side::Right);
  CHECK(special_csv(sp) == "factor,extensions\n0,0;1\n");

  auto bis = bispecial_report(w, 2);
  std::string btext = bispecial_csv(bis);
  CHECK(btext.substr(0, 22) == "length,factor,m,class\n");
  CHECK(btext.find("0,,") != std::string::npos);  // the empty bispecial row

  // the half prefix "010" only shows the return word "01", so not stable
  auto rep = return_words(w, parse_word("0", 2));
  std::string rtext = returns_csv({rep});
  CHECK(rtext == "factor,count,returns,stable\n0,2,0;01,0\n");

  auto ps = pow_set(w, parse_word("0", 2), 4);
  json pj = pow_to_json(ps);
  CHECK(pj["u"] == "0");
  CHECK(pj["cap"] == 4);
  CHECK(pj.contains("pow"));
}

TEST_CASE("provenance serialization is reproducible") {
  auto d = fixtures::power_rich(false);
  auto g1 = generate_prefix(d, 400);
  auto g2 = generate_prefix(d, 400);
  CHECK(provenance_json(d, g1, 400).dump() == provenance_json(d, g2, 400).dump());
  json p = provenance_json(d, g1, 400);
  CHECK(p["length"] == 400);
  CHECK(p["telescoped"].is_array());
  CHECK(p["directive"]["blocks"].size() == 2);
}
