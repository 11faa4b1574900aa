#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sadic/complexity.hpp"
#include "sadic/directive.hpp"
#include "sadic/fixtures.hpp"
#include "sadic/io.hpp"
#include "sadic/morphism.hpp"
#include "sadic/returns.hpp"
#include "sadic/verify.hpp"
#include "sadic/word.hpp"

namespace {

using namespace sadic;

bool file_exists(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f) std::fclose(f);
  return f != nullptr;
}

// Catalog name first, then file path.
Morphism resolve_morphism(const std::string& target) {
  if (fixtures::catalog().count(target)) return fixtures::morphism(target);
  if (file_exists(target)) return load_morphism(target);
  throw error("unknown fixture: no morphism named " + target +
              " and no such file");
}

std::string join_words(const std::vector<Word>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out.push_back(';');
    out += format_word(ws[i]);
  }
  return out;
}

std::string join_ints(const std::vector<Letter>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(';');
    out += std::to_string(v[i]);
  }
  return out;
}

void emit(const std::string& text) { std::cout << text; }

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// key,value table used by the report-style commands in CSV mode.
struct KvTable {
  std::string text = "key,value\n";
  void add(const std::string& k, const std::string& v) {
    text += k + "," + v + "\n";
  }
};

int cmd_morph_info(const std::string& target, const std::string& format) {
  Morphism m = resolve_morphism(target);
  auto pred = predicates(m);
  if (format == "json") {
    json j = morphism_to_json(m);
    j["predicates"] = json{{"non_erasing", pred.non_erasing},
                           {"uniform", pred.uniform},
                           {"expansive", pred.expansive},
                           {"proper", pred.proper},
                           {"strongly_primitive", pred.strongly_primitive},
                           {"primitive", pred.primitive},
                           {"primitive_exponent", pred.primitive_exponent}};
    if (m.square()) {
      auto g = growth_classify(m);
      json letters = json::array();
      for (const auto& lg : g.letters)
        letters.push_back(json{{"letter", lg.letter}, {"beta", lg.beta}, {"alpha", lg.alpha}});
      j["growth"] = json{{"class", to_string(g.cls)},
                         {"letters", letters},
                         {"bounded_letters", g.bounded}};
    }
    emit_json(j);
    return 0;
  }
  KvTable t;
  t.add("name", m.name);
  t.add("domain", std::to_string(m.domain_size));
  t.add("codomain", std::to_string(m.codomain_size));
  std::string images;
  for (int b = 0; b < m.domain_size; ++b) {
    if (b) images.push_back(';');
    images += format_word(m.image_word(b));
  }
  t.add("images", images);
  t.add("non_erasing", pred.non_erasing ? "1" : "0");
  t.add("uniform", pred.uniform ? "1" : "0");
  t.add("expansive", pred.expansive ? "1" : "0");
  t.add("proper", pred.proper ? "1" : "0");
  t.add("strongly_primitive", pred.strongly_primitive ? "1" : "0");
  t.add("primitive", pred.primitive ? "1" : "0");
  t.add("primitive_exponent", std::to_string(pred.primitive_exponent));
  if (m.square()) {
    auto g = growth_classify(m);
    t.add("growth_class", to_string(g.cls));
    std::string letters;
    for (const auto& lg : g.letters) {
      if (!letters.empty()) letters.push_back(';');
      letters += std::to_string(lg.letter) + ":beta=" + std::to_string(lg.beta) +
                 ":alpha=" + std::to_string(lg.alpha);
    }
    t.add("letter_growth", letters);
    t.add("bounded_letters", join_ints(g.bounded));
  }
  emit(t.text);
  return 0;
}

int cmd_gen(const std::string& directive_path, long long length,
            const std::string& out_path, const std::string& format) {
  DirectiveWord d = load_directive(directive_path);
  GeneratedPrefix g;
  if (length > 0) g = generate_prefix(d, std::size_t(length));
  std::string word_text = g.prefix.empty() ? "" : format_word(g.prefix) + "\n";
  json prov = provenance_json(d, g, std::size_t(length));
  if (!out_path.empty()) {
    save_text(out_path, word_text);
    save_text(out_path + ".json", prov.dump(2) + "\n");
    return 0;
  }
  if (format == "json")
    emit_json(json{{"word", format_word(g.prefix)}, {"provenance", prov}});
  else
    emit(word_text);
  return 0;
}

int cmd_complexity(const std::string& input, std::size_t n_max,
                   const std::string& format) {
  Word w = load_word(input);
  auto prof = complexity_profile(w, n_max);
  if (format == "json")
    emit_json(complexity_to_json(prof));
  else
    emit(complexity_csv(prof));
  return 0;
}

int cmd_special(const std::string& input, std::size_t n, const std::string& side,
                const std::string& format) {
  Word w = load_word(input);
  auto report = special_factors(w, n, side == "left" ? Side::Left : Side::Right);
  if (format == "json")
    emit_json(special_to_json(report));
  else
    emit(special_csv(report));
  return 0;
}

int cmd_bispecial(const std::string& input, std::size_t n_max,
                  const std::string& format) {
  Word w = load_word(input);
  auto report = bispecial_report(w, n_max);
  if (format == "json")
    emit_json(bispecial_to_json(report));
  else
    emit(bispecial_csv(report));
  return 0;
}

int cmd_returns(const std::string& input, const std::string& factor,
                long long length, const std::string& format) {
  Word w = load_word(input);
  std::vector<ReturnWordReport> reports;
  if (!factor.empty())
    reports.push_back(return_words(w, parse_word(factor, w.alphabet_size)));
  else
    reports = return_words_all(w, std::size_t(length));
  if (format == "json")
    emit_json(returns_to_json(reports));
  else
    emit(returns_csv(reports));
  return 0;
}

int cmd_pow(const std::string& input, const std::string& factor, long long cap,
            const std::string& format) {
  Word w = load_word(input);
  PowSet ps = pow_set(w, parse_word(factor, w.alphabet_size), cap);
  if (format == "json") {
    emit_json(pow_to_json(ps));
    return 0;
  }
  std::string pows;
  for (std::size_t i = 0; i < ps.present.size(); ++i) {
    if (i) pows.push_back(';');
    pows += std::to_string(ps.present[i]);
  }
  emit("u,pow,cap,truncated\n" + format_word(ps.u) + "," + pows + "," +
       std::to_string(ps.cap) + "," + (ps.truncated ? "1" : "0") + "\n");
  return 0;
}

int cmd_classify(const std::string& input, const std::string& name, Letter seed,
                 const std::string& format) {
  Morphism m = input.empty() ? resolve_morphism(name) : load_morphism(input);
  auto report = pansiot_classify(m, seed);
  auto rec = uniform_recurrence_check(m, seed);
  if (format == "json") {
    json letters = json::array();
    for (const auto& lg : report.growth.letters)
      letters.push_back(json{{"letter", lg.letter}, {"beta", lg.beta}, {"alpha", lg.alpha}});
    emit_json(json{{"name", m.name},
                   {"growth_class", to_string(report.growth.cls)},
                   {"letters", letters},
                   {"bounded_letters", report.growth.bounded},
                   {"complexity_class", to_string(report.cls)},
                   {"block_half", report.block_half},
                   {"block_full", report.block_full},
                   {"recurrence", to_string(rec.verdict)},
                   {"recurrence_witness", rec.witness},
                   {"recurrence_gap_bound", rec.gap_bound}});
    return 0;
  }
  KvTable t;
  t.add("name", m.name);
  t.add("growth_class", to_string(report.growth.cls));
  std::string letters;
  for (const auto& lg : report.growth.letters) {
    if (!letters.empty()) letters.push_back(';');
    letters += std::to_string(lg.letter) + ":beta=" + std::to_string(lg.beta) +
               ":alpha=" + std::to_string(lg.alpha);
  }
  t.add("letter_growth", letters);
  t.add("bounded_letters", join_ints(report.growth.bounded));
  t.add("complexity_class", to_string(report.cls));
  t.add("block_half", std::to_string(report.block_half));
  t.add("block_full", std::to_string(report.block_full));
  t.add("recurrence", to_string(rec.verdict));
  t.add("recurrence_witness", std::to_string(rec.witness));
  t.add("recurrence_gap_bound", std::to_string(rec.gap_bound));
  emit(t.text);
  return 0;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

int cmd_verify(const std::string& target, const std::vector<long long>& k,
               const std::string& format) {
  std::vector<CriterionResult> results;
  if (target == "all") {
    results = run_all_criteria();
  } else if (target == "sturmian" && !k.empty()) {
    results.push_back(run_sturmian(k));
  } else {
    results.push_back(run_criterion(target));
  }
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass();

  if (format == "json") {
    json out = json::array();
    for (const auto& r : results) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back(json{{"label", c.label}, {"pass", c.pass}, {"measured", c.measured}});
      out.push_back(json{{"name", r.name},
                        {"claim", r.claim},
                        {"pass", r.pass()},
                        {"seconds", r.seconds},
                        {"budget_seconds", r.budget_seconds},
                        {"checks", checks}});
    }
    emit_json(out);
    return all_pass ? 0 : 1;
  }

  std::string out = "criterion,claim,check,pass,measured\n";
  for (const auto& r : results) {
    for (const auto& c : r.checks)
      out += r.name + "," + csv_quote(r.claim) + "," + csv_quote(c.label) + "," +
             (c.pass ? "1" : "0") + "," + csv_quote(c.measured) + "\n";
    out += r.name + "," + csv_quote(r.claim) + ",within budget," +
           (r.seconds < r.budget_seconds ? "1" : "0") + "," +
           std::to_string(r.seconds) + "s of " + std::to_string(r.budget_seconds) +
           "s\n";
  }
  emit(out);
  for (const auto& r : results)
    std::cerr << (r.pass() ? "[PASS] " : "[FAIL] ") << r.name << " ("
              << r.seconds << "s)\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-adic sequences: generation and combinatorial analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "csv";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* mi = app.add_subcommand("morph-info", "Structural report of one morphism");
  std::string mi_target;
  mi->add_option("target", mi_target, "Catalog name or morphism file")->required();

  auto* gen = app.add_subcommand("gen", "Materialize a prefix of a directive limit word");
  std::string gen_directive, gen_out;
  long long gen_length = 0;
  gen->add_option("--directive", gen_directive, "Directive JSON file")->required();
  gen->add_option("--length", gen_length, "Prefix length")->required()
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--out", gen_out, "Output file (provenance goes to <out>.json)");

  auto* cx = app.add_subcommand("complexity", "Factor complexity profile of a word file");
  std::string cx_input;
  std::size_t cx_nmax = 0;
  cx->add_option("--input", cx_input, "Word file")->required();
  cx->add_option("--nmax", cx_nmax, "Largest factor length")->required();

  auto* sp = app.add_subcommand("special", "Special factors of one length");
  std::string sp_input, sp_side = "right";
  std::size_t sp_n = 0;
  sp->add_option("--input", sp_input, "Word file")->required();
  sp->add_option("--n", sp_n, "Factor length")->required();
  sp->add_option("--side", sp_side, "Extension side")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();

  auto* bs = app.add_subcommand("bispecial", "Bispecial factors up to a length");
  std::string bs_input;
  std::size_t bs_nmax = 0;
  bs->add_option("--input", bs_input, "Word file")->required();
  bs->add_option("--nmax", bs_nmax, "Largest factor length")->required();

  auto* rt = app.add_subcommand("returns", "Return words of a factor or of every factor of one length");
  std::string rt_input, rt_factor;
  long long rt_length = -1;
  rt->add_option("--input", rt_input, "Word file")->required();
  auto* rt_f = rt->add_option("--factor", rt_factor, "One factor (word text)");
  auto* rt_l = rt->add_option("--length", rt_length, "All factors of this length")
                   ->check(CLI::PositiveNumber);
  rt_f->excludes(rt_l);
  rt_l->excludes(rt_f);

  auto* pw = app.add_subcommand("pow", "Exponent set of a factor");
  std::string pw_input, pw_factor;
  long long pw_cap = 16;
  pw->add_option("--input", pw_input, "Word file")->required();
  pw->add_option("--factor", pw_factor, "Factor (word text)")->required();
  pw->add_option("--cap", pw_cap, "Largest exponent probed")->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* cl = app.add_subcommand("classify", "Growth and complexity class of a fixed point");
  std::string cl_input, cl_name;
  Letter cl_seed = 0;
  auto* cl_i = cl->add_option("--input", cl_input, "Morphism file");
  auto* cl_m = cl->add_option("--morphism", cl_name, "Catalog morphism name");
  cl->add_option("--seed", cl_seed, "Fixed-point seed letter")->capture_default_str();
  cl_i->excludes(cl_m);
  cl_m->excludes(cl_i);

  auto* vf = app.add_subcommand("verify", "Run one named verification target, or all");
  std::string vf_target;
  std::vector<long long> vf_k;
  vf->add_option("target", vf_target, "Target name or 'all'")->required();
  vf->add_option("--k", vf_k, "Sturmian exponent schedule override")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mi->parsed()) return cmd_morph_info(mi_target, format);
    if (gen->parsed()) return cmd_gen(gen_directive, gen_length, gen_out, format);
    if (cx->parsed()) return cmd_complexity(cx_input, cx_nmax, format);
    if (sp->parsed()) return cmd_special(sp_input, sp_n, sp_side, format);
    if (bs->parsed()) return cmd_bispecial(bs_input, bs_nmax, format);
    if (rt->parsed()) {
      if (rt_factor.empty() && rt_length <= 0)
        throw CLI::RequiredError("returns needs --factor or --length");
      return cmd_returns(rt_input, rt_factor, rt_length, format);
    }
    if (pw->parsed()) return cmd_pow(pw_input, pw_factor, pw_cap, format);
    if (cl->parsed()) {
      if (cl_input.empty() && cl_name.empty())
        throw CLI::RequiredError("classify needs --input or --morphism");
      return cmd_classify(cl_input, cl_name, cl_seed, format);
    }
    if (vf->parsed()) return cmd_verify(vf_target, vf_k, format);
  } catch (const CLI::RequiredError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
