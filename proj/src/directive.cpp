#include "sadic/directive.hpp"

#include <algorithm>
#include <functional>

namespace sadic {

PowerSchedule PowerSchedule::make_constant(long long c) {
  PowerSchedule s;
  s.kind = Kind::Constant;
  s.constant = c;
  return s;
}

PowerSchedule PowerSchedule::identity(long long offset) {
  PowerSchedule s;
  s.kind = Kind::Identity;
  s.constant = offset;
  return s;
}

PowerSchedule PowerSchedule::cycle(std::vector<long long> v) {
  if (v.empty()) throw error("empty window: cycle schedule needs values");
  PowerSchedule s;
  s.kind = Kind::Cycle;
  s.values = std::move(v);
  return s;
}

PowerSchedule PowerSchedule::list(std::vector<long long> v) {
  PowerSchedule s;
  s.kind = Kind::List;
  s.values = std::move(v);
  return s;
}

long long PowerSchedule::at(std::size_t pass) const {
  switch (kind) {
    case Kind::Constant: return constant;
    case Kind::Identity: return constant + (long long)pass;
    case Kind::Cycle: return values[pass % values.size()];
    case Kind::List:
      if (pass >= values.size())
        throw error("schedule exhausted: pass " + std::to_string(pass) +
                    " past the end of an explicit power list");
      return values[pass];
  }
  throw error("schedule exhausted: unreachable");
}

const Morphism& DirectiveWord::morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end()) throw error("unknown morphism: " + name);
  return it->second;
}

bool DirectiveWord::finite() const {
  for (const auto& b : blocks)
    if (b.power.finite()) return true;
  return false;
}

void DirectiveWord::validate() const {
  if (blocks.empty()) throw error("empty window: directive word has no blocks");
  for (const auto& b : blocks) {
    const Morphism& m = morphism(b.morphism);
    m.validate();
    if (!is_nonerasing(m)) throw error("erasing image: morphism " + m.name);
  }
  // Alphabet compatibility along one pass and across the wrap-around. A
  // block with a power that can vanish is only compatibility-neutral if it
  // is square, so non-square blocks must line up position by position.
  const Morphism* prev = nullptr;
  auto check_chain = [&](const Morphism& m) {
    if (prev && !m.square() && prev->domain_size != m.codomain_size)
      throw error("domain mismatch: block " + m.name + " feeds alphabet of size " +
                  std::to_string(m.codomain_size) + " into domain of size " +
                  std::to_string(prev->domain_size));
    prev = &m;
  };
  for (int round = 0; round < 2; ++round)
    for (const auto& b : blocks) check_chain(morphism(b.morphism));
}

namespace {

// Guard against directives whose schedules emit nothing forever.
constexpr std::size_t kPassCap = std::size_t(1) << 22;

// Drives atom_fn over the expansion; pass_fn fires after each completed
// pass. Either may return false to stop. Returns false when a List schedule
// ran out (finite directive exhausted).
bool walk_directive(const DirectiveWord& d, std::size_t max_passes,
                    const std::function<bool(const Morphism&)>& atom_fn,
                    const std::function<bool(std::size_t)>& pass_fn) {
  max_passes = std::min(max_passes, kPassCap);
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    for (const auto& block : d.blocks) {
      long long power;
      try {
        power = block.power.at(pass);
      } catch (const error&) {
        return false;  // exhausted
      }
      if (power < 0) throw error("invalid letter: negative block power");
      const Morphism& m = d.morphism(block.morphism);
      for (long long i = 0; i < power; ++i)
        if (!atom_fn(m)) return true;
    }
    if (!pass_fn(pass)) return true;
  }
  return true;
}

}  // namespace

Morphism directive_morphism(const DirectiveWord& d, std::size_t n) {
  d.validate();
  Morphism out;
  bool found = false;
  std::size_t seen = 0;
  bool alive = walk_directive(
      d, std::size_t(-1),
      [&](const Morphism& m) {
        if (seen++ == n) {
          out = m;
          found = true;
          return false;
        }
        return true;
      },
      [&](std::size_t) { return true; });
  (void)alive;
  if (!found)
    throw error("schedule exhausted: expanded directive has only " +
                std::to_string(seen) + " morphisms");
  return out;
}

std::vector<Bigint> telescope_lengths(const DirectiveWord& d, std::size_t max_level) {
  d.validate();
  std::vector<Bigint> out;
  std::vector<Bigint> lengths;  // |sigma_0...sigma_j(b)| per current domain letter
  bool have_atoms = false;

  bool alive = walk_directive(
      d, max_level + 1,
      [&](const Morphism& m) {
        if (!have_atoms) {
          lengths.assign(m.domain_size, 0);
          for (int b = 0; b < m.domain_size; ++b) lengths[b] = m.images[b].size();
          have_atoms = true;
          return true;
        }
        std::vector<Bigint> next(m.domain_size, 0);
        for (int b = 0; b < m.domain_size; ++b)
          for (auto c : m.images[b]) next[b] += lengths[c];
        lengths.swap(next);
        return true;
      },
      [&](std::size_t) {
        if (!have_atoms) {
          out.push_back(1);  // an all-zero-power pass telescopes the identity
          return out.size() <= max_level;
        }
        if (d.seed < 0 || d.seed >= int(lengths.size()))
          throw error("invalid letter: seed " + std::to_string(d.seed) +
                      " outside the level alphabet");
        out.push_back(lengths[d.seed]);
        return out.size() <= max_level;
      });
  if (!alive && out.size() <= max_level)
    throw error("schedule exhausted: directive too short for level " +
                std::to_string(max_level));
  return out;
}

namespace {

// Truncated composed morphism sigma_0...sigma_j: every image holds at most
// `cap` letters, which is sound for prefix extraction because images only
// ever get consumed left to right.
struct TruncatedProduct {
  std::vector<std::vector<std::uint8_t>> img;
  int domain = 0;
  std::size_t cap = 0;
  bool started = false;

  void absorb(const Morphism& m) {
    if (!started) {
      started = true;
      domain = m.domain_size;
      img.resize(m.domain_size);
      for (int b = 0; b < m.domain_size; ++b) {
        img[b].assign(m.images[b].begin(), m.images[b].end());
        if (img[b].size() > cap) img[b].resize(cap);
      }
      return;
    }
    std::vector<std::vector<std::uint8_t>> next(m.domain_size);
    for (int b = 0; b < m.domain_size; ++b) {
      auto& out = next[b];
      for (auto c : m.images[b]) {
        if (int(c) >= int(img.size()))
          throw error("domain mismatch: atom " + m.name + " emits letter " +
                      std::to_string(int(c)) + " outside the running product domain");
        const auto& piece = img[c];
        std::size_t take = std::min(piece.size(), cap - out.size());
        out.insert(out.end(), piece.begin(), piece.begin() + take);
        if (out.size() >= cap) break;
      }
    }
    img.swap(next);
    domain = m.domain_size;
  }

  std::vector<std::uint8_t> expand_seed(Letter seed, std::size_t copies) const {
    std::vector<std::uint8_t> v;
    for (std::size_t i = 0; i < copies && v.size() < cap; ++i) {
      const auto& piece = img[seed];
      std::size_t take = std::min(piece.size(), cap - v.size());
      v.insert(v.end(), piece.begin(), piece.begin() + take);
    }
    return v;
  }
};

std::size_t common_prefix(const std::vector<std::uint8_t>& a,
                          const std::vector<std::uint8_t>& b) {
  std::size_t n = std::min(a.size(), b.size()), i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

}  // namespace

GeneratedPrefix generate_prefix(const DirectiveWord& d, std::size_t target,
                                const GenerateOptions& opts) {
  d.validate();
  target = std::min(target, memory_cap());
  if (target == 0) throw error("empty window: prefix target must be positive");

  GeneratedPrefix out;
  TruncatedProduct prod;
  prod.cap = target;
  std::vector<Bigint> lengths;
  std::vector<std::uint8_t> prev;
  std::size_t stable = 0;
  std::size_t stale_passes = 0, flat_passes = 0;
  bool any_atom = false;
  int first_codomain = 1;

  bool alive = walk_directive(
      d, opts.max_passes,
      [&](const Morphism& m) {
        if (!any_atom) {
          any_atom = true;
          first_codomain = m.codomain_size;
          lengths.assign(m.domain_size, 0);
          for (int b = 0; b < m.domain_size; ++b) lengths[b] = m.images[b].size();
        } else {
          std::vector<Bigint> next(m.domain_size, 0);
          for (int b = 0; b < m.domain_size; ++b)
            for (auto c : m.images[b]) next[b] += lengths[c];
          lengths.swap(next);
        }
        prod.absorb(m);
        return true;
      },
      [&](std::size_t pass) {
        out.passes_used = pass + 1;
        if (!any_atom) return true;  // nothing emitted yet (zero powers)
        if (d.seed < 0 || d.seed >= prod.domain)
          throw error("invalid letter: seed " + std::to_string(d.seed) +
                      " outside the level alphabet");
        out.telescoped_lengths.push_back(lengths[d.seed]);
        auto v = prod.expand_seed(d.seed, opts.seed_copies);
        std::size_t agree = prev.empty() ? 0 : common_prefix(prev, v);
        if (agree > stable) {
          stable = agree;
          stale_passes = 0;
        } else {
          ++stale_passes;
        }
        bool grew = out.telescoped_lengths.size() < 2 ||
                    out.telescoped_lengths.back() >
                        out.telescoped_lengths[out.telescoped_lengths.size() - 2];
        flat_passes = grew ? 0 : flat_passes + 1;
        prev.swap(v);
        if (stable >= target) return false;
        if (flat_passes >= 16)
          throw error("degenerate directive: telescoped lengths stopped growing");
        if (stale_passes >= 64)
          throw error("non-convergent directive: prefix stability stalled");
        return true;
      });

  if (!any_atom) throw error("empty window: directive expanded to no morphisms");

  if (!alive) {
    // Finite directive: the deepest product is exact (it may include atoms
    // from a partial final pass), and letters up to the telescoped seed
    // length are limit-correct for prolongable seeds.
    out.exhausted = true;
    if (d.seed < 0 || d.seed >= prod.domain)
      throw error("invalid letter: seed " + std::to_string(d.seed) +
                  " outside the level alphabet");
    prev = prod.expand_seed(d.seed, 1);
    std::size_t certain = stable;
    if (!lengths.empty() && d.seed < int(lengths.size())) {
      Bigint l = lengths[d.seed];
      std::size_t l_sz = (l > Bigint(std::size_t(-1))) ? std::size_t(-1) : std::size_t(l);
      certain = std::max(certain, std::min(l_sz, prev.size()));
    }
    stable = std::min(certain, target);
  }

  if (stable < target && !out.exhausted && out.passes_used >= opts.max_passes)
    throw error("non-convergent directive: pass budget exhausted at " +
                std::to_string(out.passes_used) + " passes");

  out.stable_length = std::min(stable, prev.size());
  prev.resize(std::min(prev.size(), target));
  out.prefix = Word(std::move(prev), first_codomain);
  return out;
}

std::vector<Word> level_images(const DirectiveWord& d, Letter a,
                               std::size_t levels, std::size_t cap) {
  d.validate();
  if (levels == 0) throw error("empty window: level image request needs levels >= 1");
  if (cap == 0) cap = memory_cap();
  TruncatedProduct prod;
  prod.cap = cap;
  int codomain = 1;
  bool any = false;
  std::vector<Word> out;
  walk_directive(
      d, levels,
      [&](const Morphism& m) {
        if (!any) {
          any = true;
          codomain = m.codomain_size;
        }
        prod.absorb(m);
        return true;
      },
      [&](std::size_t) {
        if (a < 0 || a >= prod.domain)
          throw error("invalid letter: " + std::to_string(a) +
                      " outside the level alphabet");
        out.push_back(Word(prod.img[a], codomain));
        return out.size() < levels;
      });
  return out;
}

bool window_primitive(const DirectiveWord& d, std::size_t r, std::size_t count) {
  d.validate();
  if (count == 0) throw error("empty window: primitivity window needs at least one morphism");
  // Row masks over columns: rows[a] = letters b with a occurring in image(b).
  std::vector<std::uint32_t> rows;
  int cols = 0;
  bool have = false;
  std::size_t seen = 0;
  bool alive = walk_directive(
      d, std::size_t(-1),
      [&](const Morphism& m) {
        if (seen < r) {
          ++seen;
          return true;
        }
        if (seen >= r + count) return false;
        ++seen;
        std::vector<std::uint32_t> mrows(m.codomain_size, 0);
        for (int b = 0; b < m.domain_size; ++b)
          for (auto a : m.images[b]) mrows[a] |= (1u << b);
        if (!have) {
          rows = std::move(mrows);
          cols = m.domain_size;
          have = true;
          return true;
        }
        if (cols != m.codomain_size)
          throw error("domain mismatch: window atoms do not compose");
        std::vector<std::uint32_t> next(rows.size(), 0);
        for (std::size_t a = 0; a < rows.size(); ++a)
          for (int c = 0; c < cols; ++c)
            if (rows[a] & (1u << c)) next[a] |= mrows[c];
        rows.swap(next);
        cols = m.domain_size;
        return true;
      },
      [&](std::size_t) { return true; });
  (void)alive;
  if (seen < r + count)
    throw error("schedule exhausted: window past the end of the directive");
  const std::uint32_t all = (cols >= 32) ? ~0u : ((1u << cols) - 1);
  for (auto mask : rows)
    if ((mask & all) != all) return false;
  return !rows.empty();
}

DirectiveWord contract(const DirectiveWord& d, const std::vector<std::size_t>& group_sizes) {
  d.validate();
  if (group_sizes.empty()) throw error("empty window: contraction needs at least one group");
  DirectiveWord out;
  out.seed = d.seed;
  std::size_t group = 0, used = 0;
  Morphism current;
  bool have = false;
  std::size_t total = 0;
  for (auto g : group_sizes) {
    if (g == 0) throw error("empty window: contraction groups must be nonempty");
    total += g;
  }
  std::size_t seen = 0;
  walk_directive(
      d, std::size_t(-1),
      [&](const Morphism& m) {
        if (seen++ >= total) return false;
        if (!have) {
          current = m;
          have = true;
        } else {
          current = compose(current, m);
        }
        if (++used == group_sizes[group]) {
          current.name = "g" + std::to_string(group);
          out.morphisms[current.name] = current;
          out.blocks.push_back({current.name, PowerSchedule::list({1})});
          ++group;
          used = 0;
          have = false;
        }
        return group < group_sizes.size();
      },
      [&](std::size_t) { return true; });
  if (group < group_sizes.size())
    throw error("schedule exhausted: directive shorter than the contraction groups");
  return out;
}

DirectiveWord directive_from_morphism(const Morphism& m, Letter seed) {
  DirectiveWord d;
  d.morphisms[m.name.empty() ? "m" : m.name] = m;
  d.blocks.push_back({m.name.empty() ? "m" : m.name, PowerSchedule::make_constant(1)});
  d.seed = seed;
  return d;
}

}  // namespace sadic
