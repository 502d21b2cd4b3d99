#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oakit/rdf.hpp"

namespace oakit {

/// Triples that lift did not understand, kept so lower can re-emit them.
/// Holds the node's own unknown statements plus the closure of any blank
/// nodes they point at.
using Extras = std::vector<Triple>;

// ---------------------------------------------------------------------------
// Multiplicity constructs

enum class ConstructKind { Choice, Composite, List };

std::string_view to_string(ConstructKind kind);

/// Choice / Composite / List over resources or selectors.
///
/// items keep document order for every kind; only List gives that order
/// meaning. Choice's default is items.front().
template <class Item>
struct Construct {
  NodeId id;
  ConstructKind kind = ConstructKind::Composite;
  std::vector<Item> items;
  Extras extras;

  bool operator==(const Construct&) const = default;
};

// ---------------------------------------------------------------------------
// Selectors

struct FragmentSelector {
  std::string value;
  std::optional<Iri> conforms_to;
  bool operator==(const FragmentSelector&) const = default;
};

/// Code-point offsets, 0-based, end exclusive.
struct TextPositionSelector {
  std::uint64_t start = 0;
  std::uint64_t end = 0;
  bool operator==(const TextPositionSelector&) const = default;
};

struct TextQuoteSelector {
  std::string exact;
  std::optional<std::string> prefix;
  std::optional<std::string> suffix;
  bool operator==(const TextQuoteSelector&) const = default;
};

/// SVG region, either embedded markup or the IRI of an SVG document. The
/// geometry is carried, never evaluated.
struct SvgSelector {
  std::variant<std::string, Iri> content;
  bool operator==(const SvgSelector&) const = default;
};

/// A selector whose class is not one of the known ones.
struct OpaqueSelector {
  std::vector<Iri> types;
  bool operator==(const OpaqueSelector&) const = default;
};

struct Selector;
using SelectorConstruct = Construct<Selector>;

struct Selector {
  NodeId id;
  std::variant<FragmentSelector, TextPositionSelector, TextQuoteSelector, SvgSelector,
               SelectorConstruct, OpaqueSelector>
      kind;
  Extras extras;

  bool operator==(const Selector&) const = default;
};

// ---------------------------------------------------------------------------
// States

struct TimeState {
  std::optional<std::string> when;
  std::vector<Iri> cached_copies;
  bool operator==(const TimeState&) const = default;
};

struct HttpRequestState {
  std::vector<std::pair<std::string, std::string>> headers;
  bool operator==(const HttpRequestState&) const = default;
};

struct OpaqueState {
  std::vector<Iri> types;
  bool operator==(const OpaqueState&) const = default;
};

struct State {
  NodeId id;
  std::variant<TimeState, HttpRequestState, OpaqueState> kind;
  Extras extras;

  bool operator==(const State&) const = default;
};

// ---------------------------------------------------------------------------
// Styles

struct ExternalCss {
  Iri iri;
  Extras extras;
  bool operator==(const ExternalCss&) const = default;
};

struct EmbeddedCss {
  NodeId id;
  std::string chars;
  Extras extras;
  bool operator==(const EmbeddedCss&) const = default;
};

using StyleRef = std::variant<ExternalCss, EmbeddedCss>;

// ---------------------------------------------------------------------------
// Resources

/// A resource identified by IRI and described (optionally) in the graph.
struct ExternalResource {
  Iri id;
  std::set<Iri> classes;
  std::optional<std::string> format;
  Extras extras;

  bool operator==(const ExternalResource&) const = default;
};

/// Textual content carried inside the graph via cnt:chars.
///
/// cnt:ContentAsText is implied and never stored in classes; dctypes:Text is
/// implied whenever format is text/*. Equality compares effective classes.
struct EmbeddedText {
  NodeId id;
  std::string chars;
  std::optional<std::string> format;
  std::optional<std::string> language;
  std::set<Iri> classes;
  Extras extras;

  std::set<Iri> effective_classes() const;
  bool is_textual_format() const;

  bool operator==(const EmbeddedText& other) const;
};

struct SpecificResource {
  NodeId id;
  ExternalResource source;
  std::optional<Selector> selector;
  std::optional<State> state;
  /// CSS class token, without the leading '.'.
  std::optional<std::string> style_class;
  /// Carried and round-tripped, never interpreted.
  std::optional<Iri> scope;
  Extras extras;

  bool operator==(const SpecificResource&) const = default;
};

struct ResourceRef;
using ResourceConstruct = Construct<ResourceRef>;

/// Any body or target slot.
struct ResourceRef {
  std::variant<ExternalResource, EmbeddedText, SpecificResource, ResourceConstruct> value;

  bool is_leaf() const { return !std::holds_alternative<ResourceConstruct>(value); }
  /// Identity of whatever node this slot points at.
  NodeId node_id() const;

  bool operator==(const ResourceRef&) const = default;
};

struct Annotation {
  NodeId id;
  std::vector<Iri> motivations;
  std::vector<ResourceRef> bodies;
  std::vector<ResourceRef> targets;
  std::optional<Iri> annotated_by;
  std::optional<std::string> annotated_at;
  std::optional<StyleRef> styled_by;
  Extras extras;

  bool operator==(const Annotation&) const = default;
};

// Convenience constructors for hand-built annotations and tests.
ResourceRef external(Iri id, std::set<Iri> classes = {},
                     std::optional<std::string> format = std::nullopt);
ResourceRef embedded_text(NodeId id, std::string chars, std::set<Iri> classes = {},
                          std::optional<std::string> format = std::nullopt);
ResourceRef specific(SpecificResource sr);
ResourceRef construct(NodeId id, ConstructKind kind, std::vector<ResourceRef> items);

}  // namespace oakit
