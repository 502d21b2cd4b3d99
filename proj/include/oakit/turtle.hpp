#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oakit/model.hpp"
#include "oakit/rdf.hpp"

namespace oakit {

/// Parses the Turtle subset used for annotation documents:
///   @prefix / PREFIX, <iri>, prefixed names, `a`, `;` and `,` lists,
///   _:label, [] and [ p o ], ( collections ), "strings" with escapes,
///   optional @lang / ^^datatype, integer literals, '#' comments.
/// No @base, relative IRI resolution, decimals, doubles or long strings.
/// A raw newline inside "..." is tolerated.
///
/// Throws Error(SyntaxError) with a 1-based line and column.
Graph parse_turtle(std::string_view text);

/// Deterministic Turtle: prefix header for the namespaces in use, IRI
/// subjects before blank ones (each sorted), predicates in first-seen order
/// with rdf:type first.
std::string serialize_turtle(const Graph& graph);

/// Typed view of the annotation rooted at `root`.
/// Throws NotAnAnnotation or MalformedStructure (message carries the path).
Annotation lift(const Graph& graph, const NodeId& root);

/// All subjects typed oa:Annotation, IRIs first then blanks, each sorted.
std::vector<NodeId> annotation_roots(const Graph& graph);

/// Inverse of lift up to isomorphism.
Graph lower(const Annotation& annotation);
void lower_into(Graph& graph, const Annotation& annotation);

}  // namespace oakit
