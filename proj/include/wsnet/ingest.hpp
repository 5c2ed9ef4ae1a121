// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
#ifndef WSNET_INGEST_HPP
#define WSNET_INGEST_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "wsnet/model.hpp"

namespace wsnet {

/// Loads a collection manifest (JSON) and validates it: unique ids, non-empty
/// names, duplicate (name, concept) pairs collapsed per side, referenced
/// ontology files resolved against the manifest directory and required to
/// exist. When ontology files are referenced, every parameter concept must
/// resolve in their merged taxonomy.
ServiceCollection load_manifest(const std::filesystem::path& path);

/// Builds a validated collection from in-memory services; applies the same
/// checks and canonical ordering as load_manifest. Paths in ontology_files
/// are kept as given and must exist if a consistency check is wanted later.
ServiceCollection make_collection(std::vector<Service> services,
                                  std::vector<std::string> ontology_files = {});

/// Canonical manifest JSON for a collection: services/operations/parameters
/// emitted in sorted order, two-space indent, trailing newline. Reloading the
/// emitted text yields an identical collection.
std::string manifest_json(const ServiceCollection& coll);

void save_manifest(const ServiceCollection& coll,
                   const std::filesystem::path& path);

/// Loads and merges ontology files (JSON). Concept identifiers are formed as
/// `<iri>#<fragment>`; subClassOf entries may name fragments of the same file
/// or full identifiers containing '#'. Throws ParseError, ValidationError, or
/// CycleError (with a witness) when the merged edge relation is cyclic.
Ontology load_ontology(const std::vector<std::filesystem::path>& paths);

/// Parses one service description from the supported SAWSDL/WSDL subset:
/// a single `service` element, operations taken from `portType` elements,
/// parameters flattened from the `part` elements of each operation's
/// input/output message. `sawsdl:modelReference` attributes on parts become
/// parameter concepts (first IRI of a space-separated list, with a warning).
/// `types`, `binding`, `documentation` and `fault` sections do not affect the
/// extracted model and are skipped; anything else unsupported is reported
/// with its element path via UnsupportedFeature.
Service load_sawsdl_subset(const std::filesystem::path& path,
                           std::vector<std::string>* warnings = nullptr);

} // namespace wsnet

#endif // WSNET_INGEST_HPP
