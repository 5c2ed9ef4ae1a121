// wsnet -- web service network extraction and analysis
// SPDX-License-Identifier: Apache-2.0
#ifndef WSNET_ERRORS_HPP
#define WSNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wsnet {

/// Base class for all wsnet errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (JSON/XML syntax or schema violation).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

/// Structurally well-formed input that violates a collection invariant
/// (duplicate ids, empty names, dangling concepts, ...).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& msg)
      : Error("validation error: " + msg) {}
};

/// Ontology subsumption edges form a cycle. The message names a witness.
class CycleError : public Error {
public:
  explicit CycleError(const std::string& msg) : Error("cycle error: " + msg) {}
};

/// XML construct outside the supported service-description subset.
class UnsupportedFeature : public Error {
public:
  explicit UnsupportedFeature(const std::string& msg)
      : Error("unsupported feature: " + msg) {}
};

/// A network spec that the taxonomy rules reject.
class SpecError : public Error {
public:
  explicit SpecError(const std::string& msg) : Error("spec error: " + msg) {}
};

/// Semantic matching requested on a parameter without a concept.
class MissingConcept : public Error {
public:
  explicit MissingConcept(const std::string& msg)
      : Error("missing concept: " + msg) {}
};

/// Concept identifier absent from the loaded ontology.
class UnknownConcept : public Error {
public:
  explicit UnknownConcept(const std::string& msg)
      : Error("unknown concept: " + msg) {}
};

/// Filesystem/stream failure during import or export.
class IoError : public Error {
public:
  explicit IoError(const std::string& msg) : Error("io error: " + msg) {}
};

} // namespace wsnet

#endif // WSNET_ERRORS_HPP
