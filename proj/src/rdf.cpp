#include "oakit/rdf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

#include "oakit/error.hpp"
#include "oakit/vocab.hpp"

namespace oakit {

bool Iri::is_absolute() const {
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
  if (value.empty() || !std::isalpha(static_cast<unsigned char>(value[0]))) return false;
  for (std::size_t i = 1; i < value.size(); ++i) {
    const auto c = static_cast<unsigned char>(value[i]);
    if (c == ':') return true;
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

Term to_term(const NodeId& id) {
  return std::visit([](const auto& v) -> Term { return v; }, id);
}

std::optional<NodeId> as_node(const Term& term) {
  if (const auto* iri = std::get_if<Iri>(&term)) return NodeId{*iri};
  if (const auto* blank = std::get_if<BlankNode>(&term)) return NodeId{*blank};
  return std::nullopt;
}

namespace {

void escape_into(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
}

}  // namespace

std::string to_string(const Term& term) {
  if (const auto* iri = std::get_if<Iri>(&term)) return "<" + iri->value + ">";
  if (const auto* blank = std::get_if<BlankNode>(&term)) return "_:" + blank->label;
  const auto& lit = std::get<Literal>(term);
  std::string out = "\"";
  escape_into(out, lit.lexical);
  out += '"';
  if (lit.lang) out += "@" + *lit.lang;
  if (lit.datatype) out += "^^<" + lit.datatype->value + ">";
  return out;
}

std::string to_string(const NodeId& id) { return to_string(to_term(id)); }
std::string to_string(const Iri& iri) { return to_string(Term{iri}); }
std::string to_string(const BlankNode& b) { return to_string(Term{b}); }
std::string to_string(const Literal& l) { return to_string(Term{l}); }

// ---------------------------------------------------------------------------

bool Graph::add(Triple triple) {
  if (std::holds_alternative<Literal>(triple.subject)) {
    throw Error(ErrorCode::InvalidArgument, "literal in subject position");
  }
  if (index_.contains(triple)) return false;
  index_.insert(triple);
  by_subject_[triple.subject].push_back(triples_.size());
  triples_.push_back(std::move(triple));
  return true;
}

bool Graph::add(Term subject, Iri predicate, Term object) {
  return add(Triple{std::move(subject), std::move(predicate), std::move(object)});
}

std::vector<const Triple*> Graph::about(const Term& subject) const {
  std::vector<const Triple*> out;
  if (auto it = by_subject_.find(subject); it != by_subject_.end()) {
    out.reserve(it->second.size());
    for (auto i : it->second) out.push_back(&triples_[i]);
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& subject, const Iri& predicate) const {
  std::vector<Term> out;
  for (const auto* t : about(subject)) {
    if (t->predicate == predicate) out.push_back(t->object);
  }
  return out;
}

std::vector<Term> Graph::subjects(const Iri& predicate, const Term& object) const {
  std::vector<Term> out;
  for (const auto& t : triples_) {
    if (t.predicate == predicate && t.object == object) out.push_back(t.subject);
  }
  return out;
}

bool Graph::has_type(const Term& subject, const Iri& cls) const {
  return contains(Triple{subject, vocab::rdf_type, cls});
}

std::vector<Term> Graph::subject_terms() const {
  std::vector<Term> out;
  std::set<Term> seen;
  for (const auto& t : triples_) {
    if (seen.insert(t.subject).second) out.push_back(t.subject);
  }
  return out;
}

bool same_triples(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.triples().begin(), a.triples().end(),
                     [&](const Triple& t) { return b.contains(t); });
}

// ---------------------------------------------------------------------------
// Isomorphism: colour refinement over blank nodes, then backtracking within
// colour classes.

namespace {

struct BlankIndex {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;

  explicit BlankIndex(const Graph& g) {
    auto note = [&](const Term& t) {
      if (const auto* b = std::get_if<BlankNode>(&t)) {
        if (index.emplace(b->label, labels.size()).second) labels.push_back(b->label);
      }
    };
    for (const auto& t : g.triples()) {
      note(t.subject);
      note(t.object);
    }
  }
};

using Colours = std::vector<std::size_t>;

std::string term_key(const Term& t, const BlankIndex& blanks, const Colours& colours) {
  if (const auto* b = std::get_if<BlankNode>(&t)) {
    return "_:c" + std::to_string(colours[blanks.index.at(b->label)]);
  }
  return to_string(t);
}

// One refinement round for both graphs with a shared signature dictionary so
// colours stay comparable across graphs.
void refine(const Graph& g, const BlankIndex& blanks, const Colours& in, Colours& out,
            std::map<std::string, std::size_t>& dictionary) {
  std::vector<std::vector<std::string>> sig(blanks.labels.size());
  for (const auto& t : g.triples()) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) {
      sig[blanks.index.at(b->label)].push_back(">" + t.predicate.value + " " +
                                               term_key(t.object, blanks, in));
    }
    if (const auto* b = std::get_if<BlankNode>(&t.object)) {
      sig[blanks.index.at(b->label)].push_back("<" + t.predicate.value + " " +
                                               term_key(t.subject, blanks, in));
    }
  }
  out.assign(blanks.labels.size(), 0);
  for (std::size_t i = 0; i < sig.size(); ++i) {
    std::sort(sig[i].begin(), sig[i].end());
    std::string key = std::to_string(in[i]);
    for (const auto& s : sig[i]) {
      key += '\x1f';
      key += s;
    }
    auto [it, inserted] = dictionary.emplace(key, dictionary.size());
    out[i] = it->second;
  }
}

std::size_t distinct(const Colours& c) { return std::set<std::size_t>(c.begin(), c.end()).size(); }

Term map_term(const Term& t, const BlankIndex& from, const BlankIndex& to,
              const std::vector<std::size_t>& mapping) {
  if (const auto* b = std::get_if<BlankNode>(&t)) {
    return BlankNode{to.labels[mapping[from.index.at(b->label)]]};
  }
  return t;
}

constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

struct Matcher {
  const Graph& a;
  const Graph& b;
  const BlankIndex& ba;
  const BlankIndex& bb;
  const Colours& ca;
  const Colours& cb;
  std::vector<std::size_t> order;
  std::vector<std::size_t> mapping;
  std::vector<bool> used;
  // Triples of a grouped by the highest position in `order` of their blanks,
  // so each triple is checked once all its blanks are bound.
  std::vector<std::vector<const Triple*>> check_at;

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const auto i = order[depth];
    for (std::size_t j = 0; j < bb.labels.size(); ++j) {
      if (used[j] || cb[j] != ca[i]) continue;
      mapping[i] = j;
      used[j] = true;
      bool ok = true;
      for (const auto* t : check_at[depth]) {
        Triple mapped{map_term(t->subject, ba, bb, mapping), t->predicate,
                      map_term(t->object, ba, bb, mapping)};
        if (!b.contains(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && search(depth + 1)) return true;
      used[j] = false;
      mapping[i] = kUnmapped;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  BlankIndex ba(a), bb(b);
  if (ba.labels.size() != bb.labels.size()) return false;

  // Ground triples must match exactly.
  for (const auto& t : a.triples()) {
    if (!is_blank(t.subject) && !is_blank(t.object) && !b.contains(t)) return false;
  }
  if (ba.labels.empty()) return true;

  Colours ca(ba.labels.size(), 0), cb(bb.labels.size(), 0);
  std::map<std::string, std::size_t> dictionary;
  for (std::size_t round = 0; round <= ba.labels.size(); ++round) {
    Colours na, nb;
    refine(a, ba, ca, na, dictionary);
    refine(b, bb, cb, nb, dictionary);
    const bool stable = distinct(na) == distinct(ca) && distinct(nb) == distinct(cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  auto ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;

  Matcher m{a, b, ba, bb, ca, cb, {}, {}, {}, {}};
  std::map<std::size_t, std::size_t> class_size;
  for (auto c : ca) ++class_size[c];
  m.order.resize(ba.labels.size());
  for (std::size_t i = 0; i < m.order.size(); ++i) m.order[i] = i;
  std::stable_sort(m.order.begin(), m.order.end(), [&](std::size_t x, std::size_t y) {
    return class_size[ca[x]] < class_size[ca[y]];
  });
  std::vector<std::size_t> position(m.order.size());
  for (std::size_t d = 0; d < m.order.size(); ++d) position[m.order[d]] = d;
  m.check_at.resize(m.order.size());
  for (const auto& t : a.triples()) {
    std::size_t last = kUnmapped;
    for (const Term* term : {&t.subject, &t.object}) {
      if (const auto* bn = std::get_if<BlankNode>(term)) {
        const auto d = position[ba.index.at(bn->label)];
        last = last == kUnmapped ? d : std::max(last, d);
      }
    }
    if (last != kUnmapped) m.check_at[last].push_back(&t);
  }
  m.mapping.assign(ba.labels.size(), kUnmapped);
  m.used.assign(bb.labels.size(), false);
  return m.search(0);
}

// ---------------------------------------------------------------------------

Graph skolemize(const Graph& g, const Iri& base) {
  std::set<std::string> labels;
  std::set<std::string> iris;
  for (const auto& t : g.triples()) {
    for (const Term* term : {&t.subject, &t.object}) {
      if (const auto* b = std::get_if<BlankNode>(term)) labels.insert(b->label);
      if (const auto* i = std::get_if<Iri>(term)) iris.insert(i->value);
    }
    iris.insert(t.predicate.value);
  }
  std::map<std::string, Iri> replacement;
  std::size_t n = 0;
  for (const auto& label : labels) {
    std::string candidate;
    do {
      candidate = base.value + "genid-" + std::to_string(n++);
    } while (iris.contains(candidate));
    replacement.emplace(label, Iri{candidate});
  }
  auto swap = [&](const Term& t) -> Term {
    if (const auto* b = std::get_if<BlankNode>(&t)) return replacement.at(b->label);
    return t;
  };
  Graph out;
  out.prefixes = g.prefixes;
  for (const auto& t : g.triples()) out.add(swap(t.subject), t.predicate, swap(t.object));
  return out;
}

}  // namespace oakit
