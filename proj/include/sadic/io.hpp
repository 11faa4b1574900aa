#pragma once

#include <string>

#include <json.hpp>

#include "sadic/complexity.hpp"
#include "sadic/directive.hpp"
#include "sadic/returns.hpp"

namespace sadic {

using json = nlohmann::json;

// Text form "name = [image0, image1, ...]" (digit-string images, alphabets
// up to 10). Larger alphabets use the JSON form.
Morphism parse_morphism_text(const std::string& text);
std::string format_morphism(const Morphism& m);

// JSON form {"name": ..., "images": [...]} with optional "codomain".
Morphism morphism_from_json(const json& j);
json morphism_to_json(const Morphism& m);

// Directive JSON: {"morphisms": {name: [images...]},
//                  "blocks": [{"morphism": name,
//                              "power": {"kind": ..., "value": ...}}...],
//                  "seed": letter}
// Power kinds: constant / identity (value = offset) / cycle / list
// (value = array).
DirectiveWord directive_from_json(const json& j);
json directive_to_json(const DirectiveWord& d);

// Reads a morphism from a file holding either the text or the JSON form.
Morphism load_morphism(const std::string& path);
DirectiveWord load_directive(const std::string& path);

// Word files hold the text form (digit string or comma-separated letters);
// surrounding whitespace is ignored.
Word load_word(const std::string& path);
void save_text(const std::string& path, const std::string& text);

// CSV emitters. Columns:
//   complexity: n,p,s,valid        (s empty on the last row)
//   special:    factor,extensions  (extensions semicolon-joined)
//   bispecial:  length,factor,m,class
//   returns:    factor,count,returns,stable  (returns semicolon-joined)
std::string complexity_csv(const ComplexityProfile& prof);
std::string special_csv(const std::vector<SpecialFactor>& report);
std::string bispecial_csv(const std::vector<BispecialFactor>& report);
std::string returns_csv(const std::vector<ReturnWordReport>& reports);

// JSON mirrors of the CSV tables plus the pinned exponent-set shape
// {"u": ..., "pow": [...], "cap": ...}.
json complexity_to_json(const ComplexityProfile& prof);
json special_to_json(const std::vector<SpecialFactor>& report);
json bispecial_to_json(const std::vector<BispecialFactor>& report);
json returns_to_json(const std::vector<ReturnWordReport>& reports);
json pow_to_json(const PowSet& ps);

// Sidecar describing how a prefix was generated: directive, target, passes,
// stable length, telescoped lengths (decimal strings), exhaustion flag.
// Contains no timestamps, so identical runs serialize identically.
json provenance_json(const DirectiveWord& d, const GeneratedPrefix& g,
                     std::size_t target);

}  // namespace sadic
