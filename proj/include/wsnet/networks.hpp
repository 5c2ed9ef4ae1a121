// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
#ifndef WSNET_NETWORKS_HPP
#define WSNET_NETWORKS_HPP

#include <map>
#include <string>
#include <vector>

#include "wsnet/matching.hpp"
#include "wsnet/model.hpp"

namespace wsnet {

/// Stable identifier of one parameter instance:
/// `<operation>/<in|out>/<name>[@<concept>]`.
std::string parameter_instance_id(const Parameter& p);

/// Partition of every parameter instance in a collection into merged classes.
/// Only the two equivalence matchings are permitted here: `equal` merges by
/// name, `exact` merges by concept.
class ParameterClassIndex {
public:
  struct ParameterClass {
    std::string id;                   // the shared name or concept
    std::vector<std::string> members; // sorted instance ids
  };

  static ParameterClassIndex build(const ServiceCollection& coll,
                                   MatchingKind kind,
                                   const Ontology* ontology = nullptr);

  const std::vector<ParameterClass>& classes() const { return classes_; }

  /// Class id of a parameter instance (by its merge key).
  const std::string& class_id_of(const Parameter& p) const;

  std::size_t size() const { return classes_.size(); }

private:
  MatchingKind kind_ = MatchingKind::equal;
  std::vector<ParameterClass> classes_; // sorted by id
};

/// Directed parameter-class graph: inside each operation (or, with the
/// service-scope extension, each service signature) every input class points
/// to every output class. Self-loops omitted, duplicate arcs merged with
/// provenance accumulated.
Network build_dependency_network(const ServiceCollection& coll,
                                 const NetworkSpec& spec,
                                 const Ontology* ontology = nullptr);

/// Directed service or operation graph: an arc A -> B means A's outputs can
/// satisfy B's inputs under the spec matching -- all of them in full mode, at
/// least one in partial mode. Targets with no inputs receive no arcs in
/// either mode; self-arcs are excluded.
Network build_interaction_network(const ServiceCollection& coll,
                                  const NetworkSpec& spec,
                                  const Ontology* ontology = nullptr);

/// Operation graph linking operations whose input/output class sets satisfy
/// the selected set relation:
///   fullsim      O1 == O2 and I1 ∩ I2 != ∅   (symmetric)
///   partialsim   O1 ⊃ O2  and I1 ∩ I2 != ∅   (arc 1 -> 2)
///   excesssim    O1 ⊂ O2  and I1 ⊇ I2        (arc 1 -> 2)
///   relationsim  O1 == O2 and I1 ∩ I2 == ∅   (symmetric)
/// Symmetric functions yield undirected networks stored as arc pairs.
Network build_similarity_network(const ServiceCollection& coll,
                                 const NetworkSpec& spec,
                                 const Ontology* ontology = nullptr);

/// Validates the spec and dispatches to the model's builder. Output is
/// deterministic: nodes sorted by id, edges by (tail, head).
Network build_network(const ServiceCollection& coll, const NetworkSpec& spec,
                      const Ontology* ontology = nullptr);

/// The 46 admissible specs, in deterministic order: 2 dependency + 36
/// interaction + 8 similarity. Approximate matchings carry the given
/// threshold.
std::vector<NetworkSpec> enumerate_taxonomy(double threshold = kDefaultThreshold);

} // namespace wsnet

#endif // WSNET_NETWORKS_HPP
