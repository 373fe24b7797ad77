#pragma once

#include "irth/scenario.hpp"
#include "irth/taxonomy.hpp"

#include <stdexcept>
#include <string>

namespace irth {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a scenario of the template family
///   "مات وترك: <relative> و <relative> ... ما هو نصيب كل وريث؟"
/// (or the feminine "ماتت وتركت"). Counts come from number words, a digit
/// token, or dual morphology; mentions of the same category are merged.
/// Throws ParseError naming the offending phrase when an item cannot be
/// resolved, or when the enumeration segment is missing.
CaseScenario parse_case(const std::string& text,
                        const Taxonomy& tax = Taxonomy::standard());

/// Resolves a single heir noun phrase (canonical label or known variant,
/// tatweel and ya folding applied) to its category.
const HeirCategory& normalize_label(const std::string& raw,
                                    const Taxonomy& tax = Taxonomy::standard());

/// Count carried by a count expression or bare noun phrase: a leading
/// number word or digits, dual morphology, otherwise 1.
long long parse_count(const std::string& phrase,
                      const Taxonomy& tax = Taxonomy::standard());

/// Renders a scenario back to enumeration text (debug / round-trip checks).
std::string render_enumeration(const CaseScenario& scenario);

}  // namespace irth
