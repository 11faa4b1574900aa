#include "sadic/morphism.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace sadic {

std::size_t memory_cap() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("SADIC_MEM_CAP");
    if (env) {
      long long v = std::atoll(env);
      if (v > 0) return std::size_t(v);
    }
    return std::size_t(10000000);
  }();
  return cap;
}

Morphism::Morphism(std::string n, std::vector<std::string> image_texts, int codomain) {
  name = std::move(n);
  domain_size = int(image_texts.size());
  int max_letter = -1;
  for (const auto& text : image_texts) {
    Word img = parse_word(text, kMaxAlphabet);
    for (auto c : img.letters) max_letter = std::max(max_letter, int(c));
    images.push_back(std::move(img.letters));
  }
  codomain_size = codomain >= 0 ? codomain : max_letter + 1;
  validate();
}

void Morphism::validate() const {
  if (domain_size < 1 || domain_size > kMaxAlphabet ||
      codomain_size < 1 || codomain_size > kMaxAlphabet)
    throw error("alphabet too large: morphism " + name + " has domain " +
                std::to_string(domain_size) + ", codomain " + std::to_string(codomain_size));
  if (int(images.size()) != domain_size)
    throw error("domain mismatch: morphism " + name + " image count differs from domain size");
  for (const auto& img : images) {
    if (img.empty())
      throw error("erasing image: morphism " + name + " must be non-erasing");
    for (auto c : img)
      if (int(c) >= codomain_size)
        throw error("invalid letter: image letter " + std::to_string(int(c)) +
                    " not below codomain size " + std::to_string(codomain_size) +
                    " in morphism " + name);
  }
}

const std::vector<std::uint8_t>& Morphism::image(Letter b) const {
  if (b < 0 || b >= domain_size)
    throw error("invalid letter: " + std::to_string(b) + " outside domain of " + name);
  return images[b];
}

Word Morphism::image_word(Letter b) const {
  Word out;
  out.letters = image(b);
  out.alphabet_size = codomain_size;
  return out;
}

Word Morphism::apply(const Word& w) const {
  std::size_t total = 0;
  for (auto c : w.letters) total += image(c).size();
  if (total > memory_cap())
    throw error("memory cap exceeded: image length " + std::to_string(total) +
                " letters over cap " + std::to_string(memory_cap()));
  return apply_prefix(w, total);
}

Word Morphism::apply_prefix(const Word& w, std::size_t cap) const {
  cap = std::min(cap, memory_cap());
  Word out;
  out.alphabet_size = codomain_size;
  out.letters.reserve(std::min(cap, w.size() * 4));
  for (auto c : w.letters) {
    const auto& img = image(c);
    out.letters.insert(out.letters.end(), img.begin(), img.end());
    if (out.letters.size() >= cap) {
      out.letters.resize(cap);
      break;
    }
  }
  return out;
}

IncidenceMatrix incidence_matrix(const Morphism& m) {
  IncidenceMatrix mat(m.codomain_size, std::vector<Bigint>(m.domain_size, 0));
  for (int b = 0; b < m.domain_size; ++b)
    for (auto a : m.images[b]) mat[a][b] += 1;
  return mat;
}

IncidenceMatrix matrix_product(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  if (a.empty() || a[0].size() != inner)
    throw error("domain mismatch: incompatible matrix dimensions");
  IncidenceMatrix out(rows, std::vector<Bigint>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IncidenceMatrix matrix_power(const IncidenceMatrix& a, unsigned k) {
  if (a.empty() || a.size() != a[0].size())
    throw error("domain mismatch: matrix power needs a square matrix");
  IncidenceMatrix out(a.size(), std::vector<Bigint>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i][i] = 1;
  IncidenceMatrix base = a;
  while (k) {
    if (k & 1) out = matrix_product(out, base);
    k >>= 1;
    if (k) base = matrix_product(base, base);
  }
  return out;
}

bool matrix_positive(const IncidenceMatrix& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v == 0) return false;
  return true;
}

Morphism compose(const Morphism& sigma, const Morphism& tau) {
  if (tau.codomain_size != sigma.domain_size)
    throw error("domain mismatch: cannot compose " + sigma.name + " after " + tau.name);
  Morphism out;
  out.name = sigma.name + "*" + tau.name;
  out.domain_size = tau.domain_size;
  out.codomain_size = sigma.codomain_size;
  for (int b = 0; b < tau.domain_size; ++b) {
    std::vector<std::uint8_t> img;
    for (auto c : tau.images[b]) {
      const auto& piece = sigma.images[c];
      img.insert(img.end(), piece.begin(), piece.end());
    }
    if (img.size() > memory_cap())
      throw error("memory cap exceeded: composed image too long");
    out.images.push_back(std::move(img));
  }
  return out;
}

bool is_nonerasing(const Morphism& m) {
  for (const auto& img : m.images)
    if (img.empty()) return false;
  return true;
}

bool is_uniform(const Morphism& m) {
  for (const auto& img : m.images)
    if (img.size() != m.images[0].size()) return false;
  return true;
}

bool is_expansive(const Morphism& m) {
  for (const auto& img : m.images)
    if (img.size() < 2) return false;
  return true;
}

bool is_proper(const Morphism& m) {
  for (const auto& img : m.images)
    if (img.front() != m.images[0].front() || img.back() != m.images[0].back())
      return false;
  return true;
}

bool is_strongly_primitive(const Morphism& m) {
  bool occurs[kMaxAlphabet] = {};
  for (const auto& img : m.images)
    for (auto c : img) occurs[c] = true;
  for (int a = 0; a < m.codomain_size; ++a) {
    if (!occurs[a]) continue;
    for (const auto& img : m.images)
      if (std::find(img.begin(), img.end(), std::uint8_t(a)) == img.end()) return false;
  }
  return true;
}

namespace {

// Occurrence digraph as adjacency bitmasks: bit a of adj[b] means a occurs
// in the image of b.
std::vector<std::uint32_t> occurrence_digraph(const Morphism& m) {
  std::vector<std::uint32_t> adj(m.domain_size, 0);
  for (int b = 0; b < m.domain_size; ++b)
    for (auto a : m.images[b]) adj[b] |= (1u << a);
  return adj;
}

// Reflexive-transitive closure by iterating mask expansion.
std::vector<std::uint32_t> reachability(const std::vector<std::uint32_t>& adj) {
  const int d = int(adj.size());
  std::vector<std::uint32_t> reach(d);
  for (int b = 0; b < d; ++b) reach[b] = (1u << b) | adj[b];
  for (bool changed = true; changed;) {
    changed = false;
    for (int b = 0; b < d; ++b) {
      std::uint32_t next = reach[b];
      for (int c = 0; c < d; ++c)
        if (reach[b] & (1u << c)) next |= reach[c];
      if (next != reach[b]) {
        reach[b] = next;
        changed = true;
      }
    }
  }
  return reach;
}

}  // namespace

std::vector<Letter> bounded_letters(const Morphism& m) {
  if (!m.square())
    throw error("domain mismatch: bounded letters need a square morphism");
  auto adj = occurrence_digraph(m);
  auto reach = reachability(adj);
  const int d = m.domain_size;
  std::vector<bool> on_cycle(d, false);
  for (int v = 0; v < d; ++v)
    for (int c = 0; c < d; ++c)
      if ((adj[v] & (1u << c)) && (reach[c] & (1u << v))) on_cycle[v] = true;
  std::vector<Letter> out;
  for (int b = 0; b < d; ++b) {
    bool growing = false;
    for (int c = 0; c < d; ++c)
      if ((reach[b] & (1u << c)) && on_cycle[c] && m.images[c].size() >= 2)
        growing = true;
    if (!growing) out.push_back(b);
  }
  return out;
}

Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n) {
  if (!m.square())
    throw error("domain mismatch: fixed point needs a square morphism");
  if (a < 0 || a >= m.domain_size)
    throw error("invalid letter: seed " + std::to_string(a));
  if (m.images[a].empty() || m.images[a][0] != a)
    throw error("seed letter not prolongable: image of " + std::to_string(a) +
                " does not start with it");
  if (m.images[a].size() < 2)
    throw error("no growth: image of seed letter " + std::to_string(a) + " has length 1");
  n = std::min(n, memory_cap());
  Word w = m.image_word(a);
  while (w.size() < n) {
    std::size_t before = w.size();
    w = m.apply_prefix(w, n);
    if (w.size() == before)
      throw error("no growth: fixed-point iteration stalled");
  }
  w.letters.resize(std::min(n, w.size()));
  return w;
}

namespace {

// Strongly connected components, iterative Tarjan; alphabet <= 16 keeps it tiny.
struct SccDecomposition {
  std::vector<int> comp;          // letter -> component id (reverse topological)
  int count = 0;
};

SccDecomposition scc_decompose(const std::vector<std::uint32_t>& adj) {
  const int d = int(adj.size());
  SccDecomposition out;
  out.comp.assign(d, -1);
  std::vector<int> index(d, -1), low(d, 0), stack;
  std::vector<bool> on_stack(d, false);
  int next_index = 0;

  struct Frame { int v; int next_child; };
  for (int root = 0; root < d; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, child] = frames.back();
      bool descended = false;
      while (child < d) {
        int c = child++;
        if (!(adj[v] & (1u << c))) continue;
        if (index[c] == -1) {
          index[c] = low[c] = next_index++;
          stack.push_back(c);
          on_stack[c] = true;
          frames.push_back({c, 0});
          descended = true;
          break;
        }
        if (on_stack[c]) low[v] = std::min(low[v], index[c]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        while (true) {
          int u = stack.back();
          stack.pop_back();
          on_stack[u] = false;
          out.comp[u] = out.count;
          if (u == v) break;
        }
        ++out.count;
      }
      int done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[done]);
    }
  }
  return out;
}

// Perron root of the submatrix on one component via power iteration on
// M + I (shifting kills oscillation for periodic nonnegative matrices).
double component_radius(const Morphism& m, const std::vector<int>& members) {
  const int k = int(members.size());
  std::vector<std::vector<double>> mat(k, std::vector<double>(k, 0.0));
  bool any_edge = false;
  for (int j = 0; j < k; ++j) {
    for (auto a : m.images[members[j]]) {
      for (int i = 0; i < k; ++i)
        if (members[i] == int(a)) {
          mat[i][j] += 1.0;
          any_edge = true;
        }
    }
  }
  if (!any_edge) return 0.0;
  std::vector<double> x(k, 1.0), y(k);
  double lambda = 0.0;
  const double tol = 1e-9;
  for (int iter = 0; iter < 100000; ++iter) {
    for (int i = 0; i < k; ++i) {
      y[i] = x[i];  // the +I shift
      for (int j = 0; j < k; ++j) y[i] += mat[i][j] * x[j];
    }
    double norm = 0.0;
    for (double v : y) norm = std::max(norm, v);
    for (int i = 0; i < k; ++i) y[i] /= norm;
    double next = norm;
    x.swap(y);
    if (std::abs(next - lambda) < tol) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return lambda - 1.0;
}

}  // namespace

GrowthReport growth_classify(const Morphism& m) {
  if (!m.square())
    throw error("domain mismatch: growth classification needs a square morphism");
  GrowthReport report;
  report.bounded = bounded_letters(m);
  if (!report.bounded.empty()) {
    report.cls = GrowthClass::NotEverywhereGrowing;
    return report;
  }
  const int d = m.domain_size;
  auto adj = occurrence_digraph(m);
  auto scc = scc_decompose(adj);
  std::vector<std::vector<int>> members(scc.count);
  for (int v = 0; v < d; ++v) members[scc.comp[v]].push_back(v);
  std::vector<double> radius(scc.count);
  for (int c = 0; c < scc.count; ++c) radius[c] = component_radius(m, members[c]);

  // Component DAG edges and reachable component sets.
  std::vector<std::uint32_t> cadj(scc.count, 0);
  for (int v = 0; v < d; ++v)
    for (int c = 0; c < d; ++c)
      if ((adj[v] & (1u << c)) && scc.comp[v] != scc.comp[c])
        cadj[scc.comp[v]] |= (1u << scc.comp[c]);
  auto creach = reachability(cadj);

  const double beta_tol = 1e-6;
  for (int a = 0; a < d; ++a) {
    LetterGrowth g;
    g.letter = a;
    int home = scc.comp[a];
    for (int c = 0; c < scc.count; ++c)
      if (creach[home] & (1u << c)) g.beta = std::max(g.beta, radius[c]);
    // Longest path from home counting components whose radius attains beta.
    std::vector<int> best(scc.count, -1);
    // comp ids from Tarjan are reverse topological: successors have lower ids.
    for (int c = 0; c < scc.count; ++c) {
      int self = (std::abs(radius[c] - g.beta) < beta_tol) ? 1 : 0;
      int succ_best = 0;
      for (int s = 0; s < c; ++s)
        if (cadj[c] & (1u << s)) succ_best = std::max(succ_best, best[s]);
      best[c] = self + succ_best;
    }
    g.alpha = best[home] - 1;
    report.letters.push_back(g);
  }

  bool same_beta = true, all_alpha_zero = true;
  for (const auto& g : report.letters) {
    if (std::abs(g.beta - report.letters[0].beta) > beta_tol) same_beta = false;
    if (g.alpha != 0) all_alpha_zero = false;
  }
  if (!same_beta)
    report.cls = GrowthClass::ExponentiallyDiverging;
  else if (!all_alpha_zero)
    report.cls = GrowthClass::PolynomiallyDiverging;
  else
    report.cls = GrowthClass::QuasiUniform;
  return report;
}

const char* to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::QuasiUniform: return "quasi-uniform";
    case GrowthClass::PolynomiallyDiverging: return "polynomially-diverging";
    case GrowthClass::ExponentiallyDiverging: return "exponentially-diverging";
    case GrowthClass::NotEverywhereGrowing: return "not-everywhere-growing";
  }
  return "?";
}

PansiotReport pansiot_classify(const Morphism& m, Letter a, std::size_t prefix_budget) {
  PansiotReport report;
  Word w = fixed_point_prefix(m, a, prefix_budget);

  // Ultimately periodic test on the tail three quarters.
  Word tail = w.slice(w.size() / 4, w.size());
  if (!tail.empty() && least_period(tail) <= tail.size() / 3) {
    report.cls = PansiotClass::UltimatelyPeriodic;
    return report;
  }

  report.growth = growth_classify(m);
  switch (report.growth.cls) {
    case GrowthClass::QuasiUniform:
      report.cls = PansiotClass::Linear;
      return report;
    case GrowthClass::PolynomiallyDiverging:
      report.cls = PansiotClass::NLogLogN;
      return report;
    case GrowthClass::ExponentiallyDiverging:
      report.cls = PansiotClass::NLogN;
      return report;
    case GrowthClass::NotEverywhereGrowing:
      break;
  }
  // Quadratic iff arbitrarily long blocks over the bounded letters keep
  // appearing; compare the longest block at two prefix scales.
  report.block_half = max_block(w.prefix(w.size() / 2), report.growth.bounded);
  report.block_full = max_block(w, report.growth.bounded);
  report.cls = (report.block_full > report.block_half) ? PansiotClass::Quadratic
                                                       : PansiotClass::Case3Deferred;
  return report;
}

const char* to_string(PansiotClass c) {
  switch (c) {
    case PansiotClass::UltimatelyPeriodic: return "ultimately-periodic";
    case PansiotClass::Linear: return "linear";
    case PansiotClass::NLogLogN: return "n-loglog-n";
    case PansiotClass::NLogN: return "n-log-n";
    case PansiotClass::Quadratic: return "quadratic";
    case PansiotClass::Case3Deferred: return "case-3-deferred";
  }
  return "?";
}

RecurrenceReport uniform_recurrence_check(const Morphism& m, Letter a,
                                          std::size_t prefix_budget) {
  RecurrenceReport report;
  Word w = fixed_point_prefix(m, a, prefix_budget);
  auto bounded = bounded_letters(m);
  auto adj = occurrence_digraph(m);
  auto reach = reachability(adj);
  const std::uint32_t all = (1u << m.domain_size) - 1;

  auto max_gap = [&](Letter b, std::size_t upto) -> std::size_t {
    std::size_t last = std::size_t(-1), gap = 0;
    for (std::size_t i = 0; i < upto; ++i) {
      if (w[i] != b) continue;
      if (last != std::size_t(-1)) gap = std::max(gap, i - last);
      last = i;
    }
    return last == std::size_t(-1) ? 0 : gap;
  };

  bool saw_candidate = false;
  bool saw_undersampled = false;
  for (Letter b = 0; b < m.domain_size; ++b) {
    if (std::find(bounded.begin(), bounded.end(), b) != bounded.end()) continue;
    if ((reach[b] & all) != all) continue;  // some letter never appears in sigma^k(b)
    saw_candidate = true;
    std::size_t g_half = max_gap(b, w.size() / 2);
    std::size_t g_full = max_gap(b, w.size());
    if (g_full > 0 && g_half == g_full) {
      report.verdict = RecurrenceVerdict::UniformlyRecurrent;
      report.witness = b;
      report.gap_bound = g_full;
      return report;
    }
    if (g_full == 0) saw_undersampled = true;  // at most one occurrence seen
  }
  if (!saw_candidate)
    report.verdict = RecurrenceVerdict::NotUniformlyRecurrent;
  else if (saw_undersampled)
    report.verdict = RecurrenceVerdict::Inconclusive;
  else
    report.verdict = RecurrenceVerdict::NotUniformlyRecurrent;
  return report;
}

const char* to_string(RecurrenceVerdict v) {
  switch (v) {
    case RecurrenceVerdict::UniformlyRecurrent: return "uniformly-recurrent";
    case RecurrenceVerdict::NotUniformlyRecurrent: return "not-uniformly-recurrent";
    case RecurrenceVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

PrimitivityReport is_primitive(const Morphism& m) {
  if (!m.square())
    throw error("domain mismatch: primitivity needs a square morphism");
  const int d = m.domain_size;
  auto adj = occurrence_digraph(m);
  const unsigned bound = unsigned((d - 1) * (d - 1) + 1);
  std::vector<std::uint32_t> power = adj;
  const std::uint32_t all = (1u << d) - 1;
  for (unsigned k = 1; k <= bound; ++k) {
    bool positive = true;
    for (int b = 0; b < d; ++b)
      if (power[b] != all) positive = false;
    if (positive) return {true, k};
    // boolean product: next[b] = union of adj rows over letters in power[b]
    std::vector<std::uint32_t> next(d, 0);
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (power[b] & (1u << c)) next[b] |= adj[c];
    power.swap(next);
  }
  return {false, 0};
}

MorphismPredicates predicates(const Morphism& m) {
  MorphismPredicates p;
  p.non_erasing = is_nonerasing(m);
  p.uniform = is_uniform(m);
  p.expansive = is_expansive(m);
  p.proper = is_proper(m);
  p.strongly_primitive = is_strongly_primitive(m);
  if (m.square()) {
    auto r = is_primitive(m);
    p.primitive = r.primitive;
    p.primitive_exponent = r.exponent;
  }
  return p;
}

}  // namespace sadic
