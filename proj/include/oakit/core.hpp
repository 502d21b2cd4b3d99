#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "oakit/model.hpp"

namespace oakit {

// ---------------------------------------------------------------------------
// Validation reports

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct ReportEntry {
  Severity severity = Severity::Error;
  std::string code;
  std::string path;
  std::string message;

  bool operator==(const ReportEntry&) const = default;
};

struct ValidationReport {
  std::vector<ReportEntry> entries;

  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool has_code(std::string_view code) const;

  bool operator==(const ValidationReport&) const = default;
};

// ---------------------------------------------------------------------------
// Motivations

struct Motivation {
  Iri iri;
  /// Transitive generalizations, nearest first.
  std::vector<Iri> broader;

  bool operator==(const Motivation&) const = default;
};

/// Known motivations and their direct broader links.
class MotivationRegistry {
 public:
  /// The two motivations the model names: oa:editing and oa:tagging.
  static MotivationRegistry defaults();

  /// Parses `motivation-iri [broader-iri ...]` lines; '#' starts a comment.
  /// Throws Error(SyntaxError) on a token that is not an IRI.
  static MotivationRegistry parse(std::string_view text);

  void add(Iri iri, std::vector<Iri> broader = {});
  bool contains(const Iri& iri) const { return direct_.contains(iri); }
  const std::vector<Iri>& direct_broader(const Iri& iri) const;
  std::size_t size() const { return direct_.size(); }

 private:
  std::map<Iri, std::vector<Iri>> direct_;
};

/// Registry entry with its transitive broader closure. Unknown IRIs come
/// back with an empty closure. Throws Error(CycleDetected).
Motivation resolve_motivation(const Iri& iri, const MotivationRegistry& registry);

// ---------------------------------------------------------------------------
// Validation and classification

ValidationReport validate(const Annotation& annotation,
                          const MotivationRegistry& registry = MotivationRegistry::defaults());

enum class BodyRole { Comment, TextualTag, SemanticTag };

std::string_view to_string(BodyRole role);

/// Only leaves can be classified; throws Error(UnsupportedRole) for
/// Specific and Construct bodies. A SemanticTag must not be dereferenced for
/// display.
BodyRole classify_body(const ResourceRef& body);

/// Loose ISO-8601 shape check: date, optional time, optional zone.
bool is_iso8601_timestamp(std::string_view text);

// ---------------------------------------------------------------------------
// Node identifiers

struct BlankStrategy {};
struct UuidUrnStrategy {};
struct SkolemStrategy {
  Iri base;
};
using MintStrategy = std::variant<BlankStrategy, UuidUrnStrategy, SkolemStrategy>;

/// Mints fresh node identifiers for one document.
///
/// Blank labels are unique per minter instance. UUIDs are version 4.
class NodeMinter {
 public:
  explicit NodeMinter(std::string blank_prefix = "n");
  NodeMinter(std::string blank_prefix, std::uint64_t seed);

  /// Throws Error(InvalidArgument) when a Skolem base does not end in '/'.
  NodeId mint(const MintStrategy& strategy);

 private:
  std::string uuid4();

  std::string blank_prefix_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace oakit
