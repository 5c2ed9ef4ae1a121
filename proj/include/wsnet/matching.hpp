// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
#ifndef WSNET_MATCHING_HPP
#define WSNET_MATCHING_HPP

#include <optional>
#include <string_view>

#include "wsnet/model.hpp"

namespace wsnet {

/// Matching configuration: the operator plus, for the approximate syntactic
/// kinds, the acceptance threshold.
struct MatchingConfig {
  MatchingKind kind = MatchingKind::equal;
  std::optional<double> threshold; // required iff kind is approximate

  static MatchingConfig from_spec(const NetworkSpec& spec) {
    return {spec.matching, spec.threshold};
  }
};

/// Minimum number of single-character edits (insert/delete/substitute)
/// transforming a into b. Symmetric; zero iff a == b. Byte-based.
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

/// 1 - distance/max(|a|,|b|); 1.0 when both strings are empty.
double normalized_levenshtein(std::string_view a, std::string_view b);

/// Classical Jaro similarity in [0,1]. 1 iff a == b, 0 with no matching
/// characters. Match window floor(max(|a|,|b|)/2) - 1, clamped at 0.
double jaro_similarity(std::string_view a, std::string_view b);

/// Jaro plus the common-prefix boost: jaro + l * 0.1 * (1 - jaro) with
/// l = min(common prefix length, 4).
double jaro_winkler_similarity(std::string_view a, std::string_view b);

/// Normalized Levenshtein over filtered strings. The filter lowercases,
/// strips every non-alphanumeric character, then strips trailing decimal
/// digits; two empty filtrates compare as 1.0.
double smoothed_similarity(std::string_view a, std::string_view b);

/// The smoothed-metric filter, exposed for tests.
std::string smoothed_filter(std::string_view s);

/// Name comparison under a syntactic matching kind. `equal` is byte
/// equality; approximate kinds compare their similarity score against the
/// threshold (Levenshtein is normalized first).
bool match_syntactic(const Parameter& provided, const Parameter& required,
                     const MatchingConfig& cfg);

/// Concept comparison under a semantic matching kind, with the provided
/// (output) parameter as the first argument of the subsumption operators:
///   exact   c1 == c2
///   plugin  c1 strictly below c2
///   subsume c1 strictly above c2
///   fitin   exact or plugin
/// The ontology is required for plugin/subsume/fitin; exact falls back to
/// identifier equality when none is given. When an ontology is present every
/// involved concept must be declared in it (UnknownConcept otherwise), which
/// also keeps cross-ontology concepts from ever matching.
bool match_semantic(const Parameter& provided, const Parameter& required,
                    const Ontology* ontology, const MatchingConfig& cfg);

/// Dispatch over the matching family. Throws SpecError when approximate
/// matching lacks a threshold or when plugin/subsume/fitin lack an ontology.
bool match_parameters(const Parameter& provided, const Parameter& required,
                      const Ontology* ontology, const MatchingConfig& cfg);

} // namespace wsnet

#endif // WSNET_MATCHING_HPP
