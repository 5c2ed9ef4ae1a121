// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
#include "wsnet/model.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace wsnet {

// ---------------------------------------------------------------------------
// ServiceCollection
// ---------------------------------------------------------------------------

bool ServiceCollection::all_semantic() const {
  for (const auto& svc : services)
    for (const auto& op : svc.operations) {
      for (const auto& p : op.inputs)
        if (!p.concept_id) return false;
      for (const auto& p : op.outputs)
        if (!p.concept_id) return false;
    }
  return true;
}

std::vector<const Operation*> ServiceCollection::all_operations() const {
  std::vector<const Operation*> ops;
  for (const auto& svc : services)
    for (const auto& op : svc.operations) ops.push_back(&op);
  return ops;
}

std::size_t ServiceCollection::operation_count() const {
  std::size_t n = 0;
  for (const auto& svc : services) n += svc.operations.size();
  return n;
}

std::size_t ServiceCollection::parameter_instance_count() const {
  std::size_t n = 0;
  for (const auto& svc : services)
    for (const auto& op : svc.operations)
      n += op.inputs.size() + op.outputs.size();
  return n;
}

std::pair<std::vector<Parameter>, std::vector<Parameter>>
derive_service_signature(const Service& service) {
  auto collect = [&](Direction dir) {
    std::map<std::pair<std::string, std::string>, Parameter> by_key;
    for (const auto& op : service.operations) {
      const auto& side = dir == Direction::input ? op.inputs : op.outputs;
      for (const auto& p : side) by_key.emplace(p.key(), p);
    }
    std::vector<Parameter> out;
    out.reserve(by_key.size());
    for (auto& [k, p] : by_key) out.push_back(std::move(p));
    return out;
  };
  return {collect(Direction::input), collect(Direction::output)};
}

// ---------------------------------------------------------------------------
// Ontology
// ---------------------------------------------------------------------------

Ontology::Ontology(std::set<std::string> concepts,
                   std::vector<std::pair<std::string, std::string>> edges)
    : concepts_(std::move(concepts)), edges_(std::move(edges)) {
  std::map<std::string, std::vector<std::string>> parents;
  for (const auto& [child, parent] : edges_) {
    if (!concepts_.count(child))
      throw ValidationError("subsumption edge child not declared: " + child);
    if (!concepts_.count(parent))
      throw ValidationError("subsumption edge parent not declared: " + parent);
    parents[child].push_back(parent);
  }

  // Cycle check via DFS with a witness path.
  enum class Color { white, grey, black };
  std::map<std::string, Color> color;
  for (const auto& c : concepts_) color[c] = Color::white;
  std::vector<std::string> path;

  auto dfs = [&](auto&& self, const std::string& c) -> void {
    color[c] = Color::grey;
    path.push_back(c);
    for (const auto& p : parents[c]) {
      if (color[p] == Color::grey) {
        // Reconstruct the witness cycle p -> ... -> c -> p.
        std::string witness;
        auto it = std::find(path.begin(), path.end(), p);
        for (; it != path.end(); ++it) witness += *it + " -> ";
        witness += p;
        throw CycleError("subsumption cycle: " + witness);
      }
      if (color[p] == Color::white) self(self, p);
    }
    path.pop_back();
    color[c] = Color::black;
  };
  for (const auto& c : concepts_)
    if (color[c] == Color::white) dfs(dfs, c);

  // Strict-ancestor sets by upward BFS from each concept. Collections and
  // ontologies stay small enough that the quadratic bound is irrelevant.
  for (const auto& c : concepts_) {
    std::set<std::string>& anc = ancestors_[c];
    std::deque<std::string> queue(parents[c].begin(), parents[c].end());
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      if (!anc.insert(cur).second) continue;
      for (const auto& p : parents[cur]) queue.push_back(p);
    }
  }
}

bool Ontology::is_sub_concept_of(const std::string& child,
                                 const std::string& ancestor) const {
  if (!declares(child) || !declares(ancestor)) return false;
  if (child == ancestor) return true;
  auto it = ancestors_.find(child);
  return it != ancestors_.end() && it->second.count(ancestor) > 0;
}

bool Ontology::is_strict_sub_concept_of(const std::string& child,
                                        const std::string& ancestor) const {
  return child != ancestor && is_sub_concept_of(child, ancestor);
}

void Ontology::require(const std::string& concept_id) const {
  if (!declares(concept_id))
    throw UnknownConcept(concept_id + " is not declared in the ontology");
}

// ---------------------------------------------------------------------------
// Enum string forms
// ---------------------------------------------------------------------------

namespace {

template <typename T>
T parse_enum(std::string_view s,
             std::initializer_list<std::pair<std::string_view, T>> table,
             const char* what) {
  for (const auto& [k, v] : table)
    if (k == s) return v;
  throw SpecError("unknown " + std::string(what) + ": " + std::string(s));
}

} // namespace

bool is_syntactic_matching(MatchingKind k) {
  switch (k) {
    case MatchingKind::equal:
    case MatchingKind::levenshtein:
    case MatchingKind::jaro:
    case MatchingKind::winkler:
    case MatchingKind::smoothed:
      return true;
    default:
      return false;
  }
}

bool is_semantic_matching(MatchingKind k) { return !is_syntactic_matching(k); }

bool is_approximate_matching(MatchingKind k) {
  switch (k) {
    case MatchingKind::levenshtein:
    case MatchingKind::jaro:
    case MatchingKind::winkler:
    case MatchingKind::smoothed:
      return true;
    default:
      return false;
  }
}

std::string to_string(DescriptionKind v) {
  return v == DescriptionKind::syntactic ? "syntactic" : "semantic";
}

std::string to_string(Granularity v) {
  switch (v) {
    case Granularity::service: return "service";
    case Granularity::operation: return "operation";
    default: return "parameter";
  }
}

std::string to_string(ModelKind v) {
  switch (v) {
    case ModelKind::dependency: return "dependency";
    case ModelKind::interaction: return "interaction";
    default: return "similarity";
  }
}

std::string to_string(Mode v) { return v == Mode::full ? "full" : "partial"; }

std::string to_string(MatchingKind v) {
  switch (v) {
    case MatchingKind::equal: return "equal";
    case MatchingKind::levenshtein: return "levenshtein";
    case MatchingKind::jaro: return "jaro";
    case MatchingKind::winkler: return "winkler";
    case MatchingKind::smoothed: return "smoothed";
    case MatchingKind::exact: return "exact";
    case MatchingKind::plugin: return "plugin";
    case MatchingKind::subsume: return "subsume";
    default: return "fitin";
  }
}

std::string to_string(SimilarityFn v) {
  switch (v) {
    case SimilarityFn::fullsim: return "fullsim";
    case SimilarityFn::partialsim: return "partialsim";
    case SimilarityFn::excesssim: return "excesssim";
    default: return "relationsim";
  }
}

DescriptionKind description_from_string(std::string_view s) {
  return parse_enum<DescriptionKind>(
      s,
      {{"syntactic", DescriptionKind::syntactic},
       {"semantic", DescriptionKind::semantic}},
      "description");
}

Granularity granularity_from_string(std::string_view s) {
  return parse_enum<Granularity>(s,
                                 {{"service", Granularity::service},
                                  {"operation", Granularity::operation},
                                  {"parameter", Granularity::parameter}},
                                 "granularity");
}

ModelKind model_from_string(std::string_view s) {
  return parse_enum<ModelKind>(s,
                               {{"dependency", ModelKind::dependency},
                                {"interaction", ModelKind::interaction},
                                {"similarity", ModelKind::similarity}},
                               "model");
}

Mode mode_from_string(std::string_view s) {
  return parse_enum<Mode>(s, {{"full", Mode::full}, {"partial", Mode::partial}},
                          "mode");
}

MatchingKind matching_from_string(std::string_view s) {
  return parse_enum<MatchingKind>(s,
                                  {{"equal", MatchingKind::equal},
                                   {"levenshtein", MatchingKind::levenshtein},
                                   {"jaro", MatchingKind::jaro},
                                   {"winkler", MatchingKind::winkler},
                                   {"smoothed", MatchingKind::smoothed},
                                   {"exact", MatchingKind::exact},
                                   {"plugin", MatchingKind::plugin},
                                   {"subsume", MatchingKind::subsume},
                                   {"fitin", MatchingKind::fitin}},
                                  "matching");
}

SimilarityFn similarity_fn_from_string(std::string_view s) {
  return parse_enum<SimilarityFn>(s,
                                  {{"fullsim", SimilarityFn::fullsim},
                                   {"partialsim", SimilarityFn::partialsim},
                                   {"excesssim", SimilarityFn::excesssim},
                                   {"relationsim", SimilarityFn::relationsim}},
                                  "similarity function");
}

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::parameter: return "parameter";
    case NodeKind::operation: return "operation";
    default: return "service";
  }
}

NodeKind node_kind_from_string(std::string_view s) {
  return parse_enum<NodeKind>(s,
                              {{"parameter", NodeKind::parameter},
                               {"operation", NodeKind::operation},
                               {"service", NodeKind::service}},
                              "node kind");
}

// ---------------------------------------------------------------------------
// NetworkSpec
// ---------------------------------------------------------------------------

std::string NetworkSpec::name() const {
  std::string n = to_string(model) + "_" + to_string(description) + "_" +
                  to_string(granularity);
  if (mode) n += "_" + to_string(*mode);
  n += "_" + to_string(matching);
  if (similarity_fn) n += "_" + to_string(*similarity_fn);
  return n;
}

std::optional<std::string> spec_violation(const NetworkSpec& spec) {
  const bool syntactic = spec.description == DescriptionKind::syntactic;
  if (syntactic && !is_syntactic_matching(spec.matching))
    return "syntactic description requires a syntactic matching, got " +
           to_string(spec.matching);
  if (!syntactic && !is_semantic_matching(spec.matching))
    return "semantic description requires a semantic matching, got " +
           to_string(spec.matching);

  if (is_approximate_matching(spec.matching)) {
    if (!spec.threshold) return "approximate matching requires a threshold";
    if (*spec.threshold < 0.0 || *spec.threshold > 1.0)
      return "threshold must lie in [0,1]";
  } else if (spec.threshold) {
    return "threshold is only meaningful for approximate matchings";
  }

  switch (spec.model) {
    case ModelKind::dependency:
      if (spec.granularity != Granularity::parameter)
        return "dependency networks use parameter granularity";
      if (spec.mode) return "mode applies only to interaction networks";
      if (spec.similarity_fn)
        return "similarity function applies only to similarity networks";
      if (spec.matching != MatchingKind::equal &&
          spec.matching != MatchingKind::exact)
        return "dependency networks support equal or exact matching only";
      break;
    case ModelKind::interaction:
      if (spec.granularity == Granularity::parameter)
        return "interaction networks use service or operation granularity";
      if (!spec.mode) return "interaction networks require a mode";
      if (spec.similarity_fn)
        return "similarity function applies only to similarity networks";
      break;
    case ModelKind::similarity:
      if (spec.granularity != Granularity::operation)
        return "similarity networks use operation granularity";
      if (spec.mode) return "mode applies only to interaction networks";
      if (!spec.similarity_fn)
        return "similarity networks require a similarity function";
      if (spec.matching != MatchingKind::equal &&
          spec.matching != MatchingKind::exact)
        return "similarity networks support equal or exact matching only";
      break;
  }

  if (spec.dependency_scope == DependencyScope::service &&
      spec.model != ModelKind::dependency)
    return "service dependency scope applies only to dependency networks";

  return std::nullopt;
}

void validate_spec(const NetworkSpec& spec) {
  if (auto why = spec_violation(spec)) throw SpecError(*why);
}

// ---------------------------------------------------------------------------
// Network
// ---------------------------------------------------------------------------

const Node* Network::find_node(const std::string& id) const {
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), id,
      [](const Node& n, const std::string& key) { return n.id < key; });
  if (it != nodes.end() && it->id == id) return &*it;
  return nullptr;
}

bool Network::has_edge(const std::string& tail, const std::string& head) const {
  auto it = std::lower_bound(edges.begin(), edges.end(),
                             std::make_pair(tail, head),
                             [](const Edge& e, const auto& key) {
                               return std::tie(e.tail, e.head) <
                                      std::tie(key.first, key.second);
                             });
  return it != edges.end() && it->tail == tail && it->head == head;
}

void Network::normalize() {
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
  });
  std::set<std::string> ids;
  for (const auto& n : nodes)
    if (!ids.insert(n.id).second)
      throw ValidationError("duplicate node id: " + n.id);
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i - 1].tail == edges[i].tail && edges[i - 1].head == edges[i].head)
      throw ValidationError("duplicate edge: " + edges[i].tail + " -> " +
                            edges[i].head);
  for (const auto& e : edges) {
    if (!ids.count(e.tail))
      throw ValidationError("edge tail does not resolve: " + e.tail);
    if (!ids.count(e.head))
      throw ValidationError("edge head does not resolve: " + e.head);
  }
}

} // namespace wsnet
