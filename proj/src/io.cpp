#include "sadic/io.hpp"

#include <fstream>
#include <sstream>

namespace sadic {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  std::size_t a = s.find_first_not_of(ws);
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(ws);
  return s.substr(a, b - a + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("unreadable input: cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int inferred_codomain(const Morphism& m) {
  int max_letter = 0;
  for (const auto& img : m.images)
    for (auto c : img) max_letter = std::max(max_letter, int(c) + 1);
  return std::max(max_letter, 1);
}

// Morphism value inside a directive: either a plain image array, or an
// object {"images": [...], "codomain": k} when the codomain cannot be
// inferred from the images alone.
json morphism_value(const Morphism& m) {
  json arr = json::array();
  for (int b = 0; b < m.domain_size; ++b) arr.push_back(format_word(m.image_word(b)));
  if (m.codomain_size == inferred_codomain(m)) return arr;
  return json{{"images", arr}, {"codomain", m.codomain_size}};
}

Morphism morphism_from_value(const std::string& name, const json& v) {
  std::vector<std::string> images;
  int codomain = -1;
  const json* arr = &v;
  if (v.is_object()) {
    if (!v.contains("images"))
      throw error("malformed directive: morphism " + name + " lacks images");
    arr = &v.at("images");
    if (v.contains("codomain")) codomain = v.at("codomain").get<int>();
  }
  if (!arr->is_array())
    throw error("malformed directive: images of " + name + " must be an array");
  for (const auto& e : *arr) images.push_back(e.get<std::string>());
  return Morphism(name, images, codomain);
}

PowerSchedule power_from_json(const json& j) {
  if (j.is_number_integer()) return PowerSchedule::make_constant(j.get<long long>());
  if (!j.is_object() || !j.contains("kind"))
    throw error("malformed directive: power needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  auto values = [&j]() {
    std::vector<long long> v;
    for (const auto& e : j.at("value")) v.push_back(e.get<long long>());
    return v;
  };
  if (kind == "constant") return PowerSchedule::make_constant(j.at("value").get<long long>());
  if (kind == "identity") return PowerSchedule::identity(j.value("value", 0LL));
  if (kind == "cycle") return PowerSchedule::cycle(values());
  if (kind == "list") return PowerSchedule::list(values());
  throw error("malformed directive: unknown power kind " + kind);
}

json power_to_json(const PowerSchedule& p) {
  switch (p.kind) {
    case PowerSchedule::Kind::Constant:
      return json{{"kind", "constant"}, {"value", p.constant}};
    case PowerSchedule::Kind::Identity:
      return json{{"kind", "identity"}, {"value", p.constant}};
    case PowerSchedule::Kind::Cycle:
      return json{{"kind", "cycle"}, {"value", p.values}};
    case PowerSchedule::Kind::List:
      return json{{"kind", "list"}, {"value", p.values}};
  }
  throw error("malformed directive: unknown power kind");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::string join_letters(const std::vector<Letter>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(';');
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Morphism parse_morphism_text(const std::string& text) {
  std::size_t eq = text.find('=');
  if (eq == std::string::npos)
    throw error("malformed morphism: expected 'name = [image0, image1, ...]'");
  std::string name = trim(text.substr(0, eq));
  std::string rest = trim(text.substr(eq + 1));
  if (name.empty()) throw error("malformed morphism: empty name");
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw error("malformed morphism: images must sit in [brackets]");
  std::vector<std::string> images;
  std::stringstream ss(rest.substr(1, rest.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw error("malformed morphism: empty image in list");
    images.push_back(item);
  }
  if (images.empty()) throw error("malformed morphism: no images");
  return Morphism(name, images);
}

std::string format_morphism(const Morphism& m) {
  std::string out = m.name + " = [";
  for (int b = 0; b < m.domain_size; ++b) {
    if (b) out += ", ";
    out += format_word(m.image_word(b));
  }
  out += "]";
  return out;
}

Morphism morphism_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("images"))
      throw error("malformed morphism: JSON form needs an images array");
    std::vector<std::string> images;
    for (const auto& e : j.at("images")) images.push_back(e.get<std::string>());
    int codomain = j.value("codomain", -1);
    return Morphism(j.value("name", std::string("m")), images, codomain);
  } catch (const json::exception& e) {
    throw error(std::string("malformed morphism: ") + e.what());
  }
}

json morphism_to_json(const Morphism& m) {
  json arr = json::array();
  for (int b = 0; b < m.domain_size; ++b) arr.push_back(format_word(m.image_word(b)));
  return json{{"name", m.name}, {"images", arr}, {"codomain", m.codomain_size}};
}

DirectiveWord directive_from_json(const json& j) {
  try {
    if (!j.is_object()) throw error("malformed directive: top level must be an object");
    if (!j.contains("morphisms") || !j.contains("blocks"))
      throw error("malformed directive: needs morphisms and blocks");
    DirectiveWord d;
    for (auto it = j.at("morphisms").begin(); it != j.at("morphisms").end(); ++it)
      d.morphisms.emplace(it.key(), morphism_from_value(it.key(), it.value()));
    for (const auto& b : j.at("blocks")) {
      DirectiveBlock block;
      block.morphism = b.at("morphism").get<std::string>();
      if (!d.morphisms.count(block.morphism))
        throw error("malformed directive: block names unknown morphism " + block.morphism);
      block.power = b.contains("power") ? power_from_json(b.at("power"))
                                        : PowerSchedule::make_constant(1);
      d.blocks.push_back(std::move(block));
    }
    d.seed = j.value("seed", 0);
    return d;
  } catch (const json::exception& e) {
    throw error(std::string("malformed directive: ") + e.what());
  }
}

json directive_to_json(const DirectiveWord& d) {
  json ms = json::object();
  for (const auto& [name, m] : d.morphisms) ms[name] = morphism_value(m);
  json blocks = json::array();
  for (const auto& b : d.blocks)
    blocks.push_back(json{{"morphism", b.morphism}, {"power", power_to_json(b.power)}});
  return json{{"morphisms", ms}, {"blocks", blocks}, {"seed", d.seed}};
}

Morphism load_morphism(const std::string& path) {
  std::string text = trim(read_file(path));
  if (text.empty()) throw error("malformed morphism: " + path + " is empty");
  if (text.front() == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error("malformed morphism: " + path + " is not valid JSON");
    return morphism_from_json(j);
  }
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (!line.empty()) return parse_morphism_text(line);
  }
  throw error("malformed morphism: " + path + " holds no definition");
}

DirectiveWord load_directive(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw error("malformed directive: " + path + " is not valid JSON");
  DirectiveWord d = directive_from_json(j);
  d.validate();
  return d;
}

Word load_word(const std::string& path) {
  std::string text = trim(read_file(path));
  if (text.empty()) throw error("empty window: word file " + path + " is empty");
  return parse_word(text);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("unreadable input: cannot write " + path);
  out << text;
  if (!out) throw error("unreadable input: write to " + path + " failed");
}

std::string complexity_csv(const ComplexityProfile& prof) {
  std::string out = "n,p,s,valid\n";
  for (std::size_t n = 0; n <= prof.n_max; ++n) {
    out += std::to_string(n) + "," + std::to_string(prof.p[n]) + ",";
    if (n < prof.n_max) out += std::to_string(prof.s[n]);
    out += ",";
    out += (n <= prof.certified_n) ? "1" : "0";
    out.push_back('\n');
  }
  return out;
}

std::string special_csv(const std::vector<SpecialFactor>& report) {
  std::string out = "factor,extensions\n";
  for (const auto& r : report)
    out += csv_field(format_word(r.factor)) + "," + join_letters(r.extensions) + "\n";
  return out;
}

std::string bispecial_csv(const std::vector<BispecialFactor>& report) {
  std::string out = "length,factor,m,class\n";
  for (const auto& r : report) {
    out += std::to_string(r.factor.size()) + "," + csv_field(format_word(r.factor)) + "," +
           std::to_string(r.m) + "," + to_string(r.cls) + "\n";
  }
  return out;
}

std::string returns_csv(const std::vector<ReturnWordReport>& reports) {
  std::string out = "factor,count,returns,stable\n";
  for (const auto& r : reports) {
    std::string words;
    for (std::size_t i = 0; i < r.returns.size(); ++i) {
      if (i) words.push_back(';');
      words += format_word(r.returns[i]);
    }
    out += csv_field(format_word(r.factor)) + "," + std::to_string(r.returns.size()) + "," +
           csv_field(words) + "," + (r.stable ? "1" : "0") + "\n";
  }
  return out;
}

json complexity_to_json(const ComplexityProfile& prof) {
  json rows = json::array();
  for (std::size_t n = 0; n <= prof.n_max; ++n) {
    json row{{"n", n}, {"p", prof.p[n]}, {"valid", n <= prof.certified_n}};
    row["s"] = (n < prof.n_max) ? json(prof.s[n]) : json(nullptr);
    rows.push_back(std::move(row));
  }
  return json{{"prefix_length", prof.prefix_length},
              {"certified_n", prof.certified_n},
              {"rows", rows}};
}

json special_to_json(const std::vector<SpecialFactor>& report) {
  json rows = json::array();
  for (const auto& r : report)
    rows.push_back(json{{"factor", format_word(r.factor)}, {"extensions", r.extensions}});
  return rows;
}

json bispecial_to_json(const std::vector<BispecialFactor>& report) {
  json rows = json::array();
  for (const auto& r : report) {
    rows.push_back(json{{"length", r.factor.size()},
                        {"factor", format_word(r.factor)},
                        {"left_degree", r.left_degree},
                        {"right_degree", r.right_degree},
                        {"bilateral", r.bilateral},
                        {"m", r.m},
                        {"class", to_string(r.cls)}});
  }
  return rows;
}

json returns_to_json(const std::vector<ReturnWordReport>& reports) {
  json rows = json::array();
  for (const auto& r : reports) {
    json words = json::array();
    for (const auto& w : r.returns) words.push_back(format_word(w));
    rows.push_back(json{{"factor", format_word(r.factor)},
                        {"count", r.returns.size()},
                        {"returns", words},
                        {"occurrences", r.occurrence_count},
                        {"max_gap", r.max_gap},
                        {"stable", r.stable}});
  }
  return rows;
}

json pow_to_json(const PowSet& ps) {
  return json{{"u", format_word(ps.u)},
              {"pow", ps.present},
              {"cap", ps.cap},
              {"truncated", ps.truncated}};
}

json provenance_json(const DirectiveWord& d, const GeneratedPrefix& g,
                     std::size_t target) {
  json lengths = json::array();
  for (const auto& l : g.telescoped_lengths) lengths.push_back(l.str());
  return json{{"directive", directive_to_json(d)},
              {"target", target},
              {"length", g.prefix.size()},
              {"stable_length", g.stable_length},
              {"passes", g.passes_used},
              {"exhausted", g.exhausted},
              {"telescoped", lengths},
              {"memory_cap", memory_cap()}};
}

}  // namespace sadic
