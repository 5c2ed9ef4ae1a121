// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
#ifndef WSNET_MODEL_HPP
#define WSNET_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wsnet/errors.hpp"

namespace wsnet {

// ---------------------------------------------------------------------------
// Parameters, operations, services
// ---------------------------------------------------------------------------

enum class Direction { input, output };

/// One parameter instance of an operation. Identity for set semantics is the
/// (name, concept) pair: two parameters with equal names but different
/// concepts are distinct instances.
struct Parameter {
  std::string name;                   // raw, as written in the description
  std::optional<std::string> concept_id; // "ontologyIRI#fragment" when semantic
  Direction direction = Direction::input;
  std::string owner; // operation id

  /// Set-identity key.
  std::pair<std::string, std::string> key() const {
    return {name, concept_id.value_or("")};
  }
  bool same_key(const Parameter& other) const { return key() == other.key(); }
};

struct Operation {
  std::string id;      // unique within the collection
  std::string service; // owning service id
  std::vector<Parameter> inputs;  // set: no duplicate (name, concept)
  std::vector<Parameter> outputs; // set: no duplicate (name, concept)
};

struct Service {
  std::string id;
  std::vector<Operation> operations; // non-empty
};

/// Parsed set of services. Immutable after construction.
struct ServiceCollection {
  std::vector<Service> services;
  /// Resolved paths of ontology files named by the source manifest.
  std::vector<std::string> ontology_files;

  /// True when every parameter of every operation carries a concept.
  /// Required for semantic network extraction. Vacuously true when empty.
  bool all_semantic() const;

  std::vector<const Operation*> all_operations() const;
  std::size_t operation_count() const;
  std::size_t parameter_instance_count() const;
};

/// Union of operation inputs/outputs, duplicates removed by (name, concept).
/// Ordering is deterministic (sorted by key, first contributing operation
/// wins for the instance fields).
std::pair<std::vector<Parameter>, std::vector<Parameter>>
derive_service_signature(const Service& service);

// ---------------------------------------------------------------------------
// Ontology
// ---------------------------------------------------------------------------

/// A concept taxonomy: declared concept identifiers plus acyclic child->parent
/// subsumption edges. The query relation is the reflexive-transitive closure
/// of the edges, precomputed at construction. Read-only afterwards.
class Ontology {
public:
  Ontology() = default;

  /// Throws ValidationError on undeclared edge endpoints and CycleError
  /// (naming a witness) when the edge relation is cyclic.
  Ontology(std::set<std::string> concepts,
           std::vector<std::pair<std::string, std::string>> edges);

  bool declares(const std::string& concept_id) const {
    return concepts_.count(concept_id) > 0;
  }

  /// Reflexive-transitive subsumption: child <= ancestor.
  /// False for undeclared identifiers.
  bool is_sub_concept_of(const std::string& child,
                         const std::string& ancestor) const;

  /// Strict subsumption: child < ancestor.
  bool is_strict_sub_concept_of(const std::string& child,
                                const std::string& ancestor) const;

  /// Throws UnknownConcept when the identifier is not declared.
  void require(const std::string& concept_id) const;

  const std::set<std::string>& concepts() const { return concepts_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }

  bool empty() const { return concepts_.empty(); }

private:
  std::set<std::string> concepts_;
  std::vector<std::pair<std::string, std::string>> edges_;
  // ancestors_[c] = all strict ancestors of c
  std::map<std::string, std::set<std::string>> ancestors_;
};

// ---------------------------------------------------------------------------
// Network specification (one point of the taxonomy)
// ---------------------------------------------------------------------------

enum class DescriptionKind { syntactic, semantic };
enum class Granularity { service, operation, parameter };
enum class ModelKind { dependency, interaction, similarity };
enum class Mode { full, partial };
enum class MatchingKind {
  // syntactic family
  equal,
  levenshtein,
  jaro,
  winkler,
  smoothed,
  // semantic family
  exact,
  plugin,
  subsume,
  fitin
};
enum class SimilarityFn { fullsim, partialsim, excesssim, relationsim };

/// Scope over which dependency edges are generated. Extension knob, not part
/// of the taxonomy; the default follows the per-operation reading.
enum class DependencyScope { operation, service };

constexpr double kDefaultThreshold = 0.9;

bool is_syntactic_matching(MatchingKind k);
bool is_semantic_matching(MatchingKind k);
bool is_approximate_matching(MatchingKind k);

std::string to_string(DescriptionKind v);
std::string to_string(Granularity v);
std::string to_string(ModelKind v);
std::string to_string(Mode v);
std::string to_string(MatchingKind v);
std::string to_string(SimilarityFn v);

DescriptionKind description_from_string(std::string_view s);
Granularity granularity_from_string(std::string_view s);
ModelKind model_from_string(std::string_view s);
Mode mode_from_string(std::string_view s);
MatchingKind matching_from_string(std::string_view s);
SimilarityFn similarity_fn_from_string(std::string_view s);

struct NetworkSpec {
  DescriptionKind description = DescriptionKind::syntactic;
  Granularity granularity = Granularity::parameter;
  ModelKind model = ModelKind::dependency;
  std::optional<Mode> mode;                   // interaction only
  MatchingKind matching = MatchingKind::equal;
  std::optional<SimilarityFn> similarity_fn;  // similarity only
  std::optional<double> threshold;            // approximate matchings only
  DependencyScope dependency_scope = DependencyScope::operation;

  /// Stable name used for export files:
  /// <model>_<description>_<granularity>[_<mode>]_<matching>[_<simfn>]
  std::string name() const;

  bool operator==(const NetworkSpec&) const = default;
};

/// Checks the taxonomy rules. Returns the reason a spec is rejected, or
/// nothing when it is one of the 46 admissible combinations.
std::optional<std::string> spec_violation(const NetworkSpec& spec);

inline bool is_valid(const NetworkSpec& spec) {
  return !spec_violation(spec).has_value();
}

/// Throws SpecError when the spec is not admissible.
void validate_spec(const NetworkSpec& spec);

// ---------------------------------------------------------------------------
// Network
// ---------------------------------------------------------------------------

enum class NodeKind { parameter, operation, service };

std::string to_string(NodeKind k);
NodeKind node_kind_from_string(std::string_view s);

struct Node {
  std::string id;    // unique, stable
  std::string label; // raw name/concept/identifier
  NodeKind kind = NodeKind::parameter;
  std::vector<std::string> member_instances; // merged source identifiers
};

struct Edge {
  std::string tail;
  std::string head;
  std::vector<std::string> provenance; // source identifiers
};

/// Directed/undirected labeled graph with stable node identities.
/// Edges always store arcs; in undirected networks the arc set is symmetric
/// (both directions present) and exporters collapse arc pairs.
struct Network {
  NetworkSpec spec;
  bool directed = true;
  std::vector<Node> nodes; // sorted by id
  std::vector<Edge> edges; // sorted by (tail, head)

  /// Number of logical links: arcs for directed networks, unordered pairs
  /// for undirected ones.
  std::size_t logical_edge_count() const {
    return directed ? edges.size() : edges.size() / 2;
  }

  const Node* find_node(const std::string& id) const;
  bool has_edge(const std::string& tail, const std::string& head) const;

  /// Sorts nodes by id and edges by (tail, head); checks id uniqueness,
  /// endpoint resolution and duplicate arcs. Throws ValidationError.
  void normalize();
};

} // namespace wsnet

#endif // WSNET_MODEL_HPP
