#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oakit {

/// An IRI reference. Absoluteness is not enforced here; see Iri::is_absolute.
struct Iri {
  std::string value;

  /// True when the value starts with an RFC 3986 scheme followed by ':'.
  bool is_absolute() const;

  auto operator<=>(const Iri&) const = default;
};

struct BlankNode {
  std::string label;
  auto operator<=>(const BlankNode&) const = default;
};

struct Literal {
  std::string lexical;
  std::optional<Iri> datatype;
  std::optional<std::string> lang;

  auto operator<=>(const Literal&) const = default;
};

/// Anything that can be a subject: an IRI or a blank node.
using NodeId = std::variant<Iri, BlankNode>;

/// Any RDF term.
using Term = std::variant<Iri, BlankNode, Literal>;

struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

Term to_term(const NodeId& id);
std::optional<NodeId> as_node(const Term& term);

inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_blank(const NodeId& n) { return std::holds_alternative<BlankNode>(n); }

/// N-Triples style rendering, used in diagnostics and reports.
std::string to_string(const Term& term);
std::string to_string(const NodeId& id);
std::string to_string(const Iri& iri);
std::string to_string(const BlankNode& b);
std::string to_string(const Literal& l);

/// A set of triples that remembers insertion order.
///
/// Duplicates are dropped on insert. Iteration follows first insertion, which
/// is what keeps repeated oa:item values in document order.
class Graph {
 public:
  /// Returns false when the triple was already present. Throws Error when
  /// the subject is a literal.
  bool add(Triple triple);
  bool add(Term subject, Iri predicate, Term object);

  bool contains(const Triple& triple) const { return index_.contains(triple); }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const std::vector<Triple>& triples() const { return triples_; }

  /// Triples with the given subject, in insertion order.
  std::vector<const Triple*> about(const Term& subject) const;
  std::vector<Term> objects(const Term& subject, const Iri& predicate) const;
  std::vector<Term> subjects(const Iri& predicate, const Term& object) const;
  bool has_type(const Term& subject, const Iri& cls) const;

  /// Distinct subjects in first-seen order.
  std::vector<Term> subject_terms() const;

  std::map<std::string, Iri> prefixes;

 private:
  std::vector<Triple> triples_;
  std::set<Triple> index_;
  std::map<Term, std::vector<std::size_t>> by_subject_;
};

/// Same triple set, ignoring insertion order. Blank labels must match exactly.
bool same_triples(const Graph& a, const Graph& b);

/// True iff a bijection between blank labels maps a's triples onto b's.
bool isomorphic(const Graph& a, const Graph& b);

/// Replaces every blank node with base + "genid-<n>", numbering labels in
/// sorted order. base is expected to end with '/'.
Graph skolemize(const Graph& g, const Iri& base);

}  // namespace oakit
