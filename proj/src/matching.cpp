// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
#include "wsnet/matching.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <vector>

namespace wsnet {

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
  if (a == b) return 0;
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();

  // Two-row dynamic program; the tests cross-check it against a full-table
  // reference.
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});

  for (std::size_t i = 0; i < a.size(); ++i) {
    cur[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t subst = prev[j] + (a[i] == b[j] ? 0 : 1);
      cur[j + 1] = std::min({prev[j + 1] + 1, cur[j] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double normalized_levenshtein(std::string_view a, std::string_view b) {
  std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein_distance(a, b)) /
                   static_cast<double>(longest);
}

double jaro_similarity(std::string_view a, std::string_view b) {
  if (a == b) return 1.0;
  if (a.empty() || b.empty()) return 0.0;

  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;

  std::vector<bool> a_matched(a.size(), false);
  std::vector<bool> b_matched(b.size(), false);
  std::size_t matches = 0;

  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t lo = i > window ? i - window : 0;
    std::size_t hi = std::min(b.size(), i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (b_matched[j] || a[i] != b[j]) continue;
      a_matched[i] = b_matched[j] = true;
      ++matches;
      break;
    }
  }
  if (matches == 0) return 0.0;

  // Transpositions: matched characters out of relative order, halved.
  std::size_t transpositions = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a_matched[i]) continue;
    while (!b_matched[j]) ++j;
    if (a[i] != b[j]) ++transpositions;
    ++j;
  }
  transpositions /= 2;

  const double m = static_cast<double>(matches);
  return (m / static_cast<double>(a.size()) + m / static_cast<double>(b.size()) +
          (m - static_cast<double>(transpositions)) / m) /
         3.0;
}

double jaro_winkler_similarity(std::string_view a, std::string_view b) {
  double jaro = jaro_similarity(a, b);
  std::size_t prefix = 0;
  while (prefix < std::min({a.size(), b.size(), std::size_t{4}}) &&
         a[prefix] == b[prefix])
    ++prefix;
  return jaro + static_cast<double>(prefix) * 0.1 * (1.0 - jaro);
}

std::string smoothed_filter(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) out.push_back(static_cast<char>(std::tolower(uc)));
  }
  while (!out.empty() && std::isdigit(static_cast<unsigned char>(out.back())))
    out.pop_back();
  return out;
}

double smoothed_similarity(std::string_view a, std::string_view b) {
  return normalized_levenshtein(smoothed_filter(a), smoothed_filter(b));
}

namespace {

double similarity_score(MatchingKind kind, std::string_view a,
                        std::string_view b) {
  switch (kind) {
    case MatchingKind::levenshtein: return normalized_levenshtein(a, b);
    case MatchingKind::jaro: return jaro_similarity(a, b);
    case MatchingKind::winkler: return jaro_winkler_similarity(a, b);
    case MatchingKind::smoothed: return smoothed_similarity(a, b);
    default: throw SpecError("not an approximate matching kind");
  }
}

const std::string& concept_of(const Parameter& p) {
  if (!p.concept_id)
    throw MissingConcept("parameter '" + p.name + "' of operation '" +
                         p.owner + "' carries no concept");
  return *p.concept_id;
}

} // namespace

bool match_syntactic(const Parameter& provided, const Parameter& required,
                     const MatchingConfig& cfg) {
  if (cfg.kind == MatchingKind::equal)
    return provided.name == required.name;
  if (!is_approximate_matching(cfg.kind))
    throw SpecError("match_syntactic called with " + to_string(cfg.kind));
  if (!cfg.threshold)
    throw SpecError("approximate matching requires a threshold");
  return similarity_score(cfg.kind, provided.name, required.name) >=
         *cfg.threshold;
}

bool match_semantic(const Parameter& provided, const Parameter& required,
                    const Ontology* ontology, const MatchingConfig& cfg) {
  const std::string& c1 = concept_of(provided);
  const std::string& c2 = concept_of(required);

  if (ontology) {
    ontology->require(c1);
    ontology->require(c2);
  } else if (cfg.kind != MatchingKind::exact) {
    throw SpecError(to_string(cfg.kind) + " matching requires an ontology");
  }

  switch (cfg.kind) {
    case MatchingKind::exact:
      return c1 == c2;
    case MatchingKind::plugin:
      return ontology->is_strict_sub_concept_of(c1, c2);
    case MatchingKind::subsume:
      return ontology->is_strict_sub_concept_of(c2, c1);
    case MatchingKind::fitin:
      return c1 == c2 || ontology->is_strict_sub_concept_of(c1, c2);
    default:
      throw SpecError("match_semantic called with " + to_string(cfg.kind));
  }
}

bool match_parameters(const Parameter& provided, const Parameter& required,
                      const Ontology* ontology, const MatchingConfig& cfg) {
  return is_syntactic_matching(cfg.kind)
             ? match_syntactic(provided, required, cfg)
             : match_semantic(provided, required, ontology, cfg);
}

} // namespace wsnet
