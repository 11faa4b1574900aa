#include "sadic/fixtures.hpp"

#include <random>

namespace sadic {
namespace fixtures {

namespace {

std::string letters_text(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Morphism power_of(const Morphism& m, int k) {
  Morphism out = m;
  for (int i = 1; i < k; ++i) out = compose(out, m);
  return out;
}

}  // namespace

const std::map<std::string, Morphism>& catalog() {
  static const std::map<std::string, Morphism> table = [] {
    std::map<std::string, Morphism> t;
    auto add = [&](const std::string& name, std::vector<std::string> images,
                   int codomain = -1) {
      t.emplace(name, Morphism(name, std::move(images), codomain));
    };
    add("thue-morse", {"01", "10"});
    add("fibonacci", {"01", "0"});
    add("chacon", {"0010", "1"});
    add("double-zero", {"001", "1"});
    add("swap", {"1", "0"});
    add("uneven", {"0120", "11", "222"});
    add("freeze", {"010", "1112", "2"});
    add("merge", {"0", "1", "1"}, 3);
    add("stairs", {"01", "12", "23", "3"});
    add("clamp", {"0", "1", "2", "2"}, 4);
    add("shuffle-a", {"021", "101", "212"});
    add("shuffle-b", {"012", "021", "002"});
    add("fold", {"0", "1", "1", "0"}, 2);
    add("triple", {"010", "111", "232", "333"});
    add("lift", {"0", "2"}, 4);
    add("sturm-l0", {"0", "01"});
    add("sturm-r0", {"0", "10"});
    add("sturm-l1", {"10", "1"});
    add("sturm-r1", {"01", "1"});
    return t;
  }();
  return table;
}

const Morphism& morphism(const std::string& name) {
  const auto& t = catalog();
  auto it = t.find(name);
  if (it == t.end()) throw error("unknown fixture: no morphism named " + name);
  return it->second;
}

Morphism epi_left(Letter a, int k) {
  if (k < 2 || k > kMaxAlphabet || a < 0 || a >= k)
    throw error("invalid letter: episturmian base outside the alphabet");
  std::vector<std::string> images;
  for (int b = 0; b < k; ++b)
    images.push_back(b == a ? letters_text({a}) : letters_text({a, b}));
  return Morphism("epi-l" + std::to_string(a), std::move(images), k);
}

Morphism epi_right(Letter a, int k, bool printed) {
  if (k < 2 || k > kMaxAlphabet || a < 0 || a >= k)
    throw error("invalid letter: episturmian base outside the alphabet");
  std::vector<std::string> images;
  for (int b = 0; b < k; ++b) {
    if (b == a)
      images.push_back(letters_text({a}));
    else
      images.push_back(printed ? letters_text({a, b}) : letters_text({b, a}));
  }
  std::string name = "epi-r" + std::to_string(a) + (printed ? "-printed" : "");
  return Morphism(std::move(name), std::move(images), k);
}

DirectiveWord sturmian(const std::vector<long long>& k) {
  if (k.empty() || k.size() % 4 != 0)
    throw error("invalid schedule: sturmian power list must be a nonempty multiple of four");
  static const char* names[4] = {"sturm-l0", "sturm-r0", "sturm-l1", "sturm-r1"};
  DirectiveWord d;
  d.seed = 0;
  for (int j = 0; j < 4; ++j) {
    d.morphisms.emplace(names[j], morphism(names[j]));
    std::vector<long long> sub;
    for (std::size_t i = j; i < k.size(); i += 4) sub.push_back(k[i]);
    bool constant = true;
    for (auto v : sub) constant = constant && v == sub.front();
    d.blocks.push_back({names[j], constant ? PowerSchedule::make_constant(sub.front())
                                           : PowerSchedule::cycle(sub)});
  }
  return d;
}

DirectiveWord power_rich(bool flat) {
  DirectiveWord d;
  d.seed = 0;
  d.morphisms.emplace("double-zero", morphism("double-zero"));
  d.morphisms.emplace("thue-morse", morphism("thue-morse"));
  d.blocks.push_back({"double-zero", flat ? PowerSchedule::make_constant(0)
                                          : PowerSchedule::identity(0)});
  d.blocks.push_back({"thue-morse", PowerSchedule::make_constant(1)});
  return d;
}

DirectiveWord freeze_merge(int depth) {
  if (depth < 1) throw error("invalid schedule: freeze-merge depth must be positive");
  DirectiveWord d;
  d.seed = 0;
  d.morphisms.emplace("merge", morphism("merge"));
  d.morphisms.emplace("freeze", morphism("freeze"));
  std::vector<long long> ones(depth, 1), powers;
  for (int i = 1; i <= depth; ++i) powers.push_back(i);
  d.blocks.push_back({"merge", PowerSchedule::list(ones)});
  d.blocks.push_back({"freeze", PowerSchedule::list(powers)});
  return d;
}

DirectiveWord boshernitzan(int depth) {
  if (depth < 1) throw error("invalid schedule: boshernitzan depth must be positive");
  const Morphism& g = morphism("double-zero");
  const Morphism& e = morphism("swap");
  DirectiveWord d;
  d.seed = 0;
  std::vector<long long> ones(depth, 1);
  for (int j = 0; j < depth; ++j) {
    Morphism grp = compose(power_of(g, 2 * j + 1),
                           compose(e, compose(power_of(g, 2 * j + 2), e)));
    grp.name = "group-" + std::to_string(j);
    d.morphisms.emplace(grp.name, grp);
  }
  for (int j = 0; j < depth; ++j) {
    std::vector<long long> sched(depth, 0);
    sched[j] = 1;
    d.blocks.push_back({"group-" + std::to_string(j), PowerSchedule::list(sched)});
  }
  return d;
}

DirectiveWord return_rich() {
  DirectiveWord d;
  d.seed = 0;
  d.morphisms.emplace("fold", morphism("fold"));
  d.morphisms.emplace("triple", morphism("triple"));
  d.morphisms.emplace("lift", morphism("lift"));
  d.blocks.push_back({"fold", PowerSchedule::make_constant(1)});
  d.blocks.push_back({"triple", PowerSchedule::identity(0)});
  d.blocks.push_back({"lift", PowerSchedule::make_constant(1)});
  return d;
}

DirectiveWord primitive_not_lr(long long tail) {
  if (tail < 0) throw error("invalid schedule: tail depth must be non-negative");
  DirectiveWord d;
  d.seed = 0;
  d.morphisms.emplace("shuffle-a", morphism("shuffle-a"));
  d.morphisms.emplace("shuffle-b", morphism("shuffle-b"));
  d.blocks.push_back({"shuffle-a", PowerSchedule::identity(1 + tail)});
  d.blocks.push_back({"shuffle-b", PowerSchedule::make_constant(1)});
  return d;
}

DirectiveWord good_adic(std::uint32_t seed, std::size_t atoms) {
  if (atoms == 0) throw error("invalid schedule: good-adic directive needs atoms");
  DirectiveWord d;
  d.seed = 0;
  d.morphisms.emplace("fibonacci", morphism("fibonacci"));
  d.morphisms.emplace("thue-morse", morphism("thue-morse"));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < atoms; ++i)
    d.blocks.push_back({coin(rng) ? "thue-morse" : "fibonacci",
                        PowerSchedule::list({1})});
  return d;
}

DirectiveWord deviatov(int depth) {
  if (depth < 1) throw error("invalid schedule: deviatov depth must be positive");
  DirectiveWord d;
  d.seed = 0;
  d.morphisms.emplace("clamp", morphism("clamp"));
  d.morphisms.emplace("stairs", morphism("stairs"));
  std::vector<long long> once(depth, 0);
  once[0] = 1;
  d.blocks.push_back({"clamp", PowerSchedule::list(once)});
  d.blocks.push_back({"stairs", PowerSchedule::make_constant(1)});
  return d;
}

PairExpansion boshernitzan_pairs(std::size_t atom_count) {
  // The atom stream is double-zero^k swap for k = 1, 2, 3, ...; 'true' marks
  // a swap atom.
  std::vector<bool> stream;
  for (std::size_t k = 1; stream.size() < atom_count + 2; ++k) {
    for (std::size_t i = 0; i < k; ++i) stream.push_back(false);
    stream.push_back(true);
  }
  PairExpansion out;
  std::size_t pos = 0;
  bool pending = false;  // a virtual swap owed before the remaining stream
  while (pos < atom_count) {
    if (pending) {
      if (stream[pos]) {
        pending = false;  // swap*swap cancels silently
        ++pos;
      } else {
        out.pairs.push_back(1);
        pending = false;
        ++pos;
      }
    } else {
      if (pos + 1 >= atom_count) break;
      if (!stream[pos] && stream[pos + 1]) {
        out.pairs.push_back(0);
        pos += 2;
      } else if (!stream[pos] && !stream[pos + 1]) {
        out.pairs.push_back(0);  // double-zero + inserted swap
        pending = true;
        ++pos;
      } else {
        out.pairs.push_back(1);  // swap + following double-zero
        pos += 2;
      }
    }
    if (!pending) {
      out.cut_pairs.push_back(out.pairs.size());
      out.cut_atoms.push_back(pos);
    }
  }
  return out;
}

std::vector<Morphism> boshernitzan_atoms(std::size_t atom_count) {
  const Morphism& g = morphism("double-zero");
  const Morphism& e = morphism("swap");
  std::vector<Morphism> out;
  for (std::size_t k = 1; out.size() < atom_count; ++k) {
    for (std::size_t i = 0; i < k && out.size() < atom_count; ++i) out.push_back(g);
    if (out.size() < atom_count) out.push_back(e);
  }
  return out;
}

std::vector<FixtureInfo> list_fixtures() {
  return {
      {"sturmian", "four-block Sturmian directive, seed 0"},
      {"fibonacci", "fixed point of [01,0]"},
      {"thue-morse", "fixed point of [01,10]"},
      {"chacon", "fixed point of [0010,1]"},
      {"double-zero", "fixed point of [001,1]; quadratic complexity"},
      {"uneven", "fixed point of [0120,11,222]; n log n complexity"},
      {"freeze", "fixed point of [010,1112,2]; bounded letter 2"},
      {"power-rich", "double-zero^n thue-morse directive; power-rich factors"},
      {"power-rich-flat", "all powers zero: plain thue-morse"},
      {"freeze-merge", "merge freeze^n directive; first differences in {1,2}"},
      {"boshernitzan", "double-zero/swap directive; unbounded right-special counts"},
      {"return-rich", "fold triple^n lift directive; return counts grow with length"},
      {"primitive-not-lr", "shuffle-a^n shuffle-b directive; primitive, not linearly recurrent"},
      {"good-adic", "pseudo-random fibonacci/thue-morse directive (seed 1)"},
      {"deviatov", "clamp over stairs iterates; n^{3/2} complexity"},
  };
}

DirectiveWord directive_fixture(const std::string& name) {
  if (name == "sturmian") return sturmian({1, 1, 1, 1});
  if (name == "fibonacci") return directive_from_morphism(morphism("fibonacci"), 0);
  if (name == "thue-morse") return directive_from_morphism(morphism("thue-morse"), 0);
  if (name == "chacon") return directive_from_morphism(morphism("chacon"), 0);
  if (name == "double-zero") return directive_from_morphism(morphism("double-zero"), 0);
  if (name == "uneven") return directive_from_morphism(morphism("uneven"), 0);
  if (name == "freeze") return directive_from_morphism(morphism("freeze"), 0);
  if (name == "power-rich") return power_rich(false);
  if (name == "power-rich-flat") return power_rich(true);
  if (name == "freeze-merge") return freeze_merge();
  if (name == "boshernitzan") return boshernitzan();
  if (name == "return-rich") return return_rich();
  if (name == "primitive-not-lr") return primitive_not_lr();
  if (name == "good-adic") return good_adic(1);
  if (name == "deviatov") return deviatov();
  throw error("unknown fixture: no directive named " + name);
}

}  // namespace fixtures
}  // namespace sadic
