#include "oakit/annotea.hpp"

#include <algorithm>
#include <set>

#include "oakit/error.hpp"
#include "oakit/vocab.hpp"

namespace oakit {

namespace {

bool in_annotea_ns(const Iri& i) { return i.value.starts_with(vocab::kAnnotea); }

class AnnoteaConverter {
 public:
  explicit AnnoteaConverter(const Graph& g) : g_(g) {}

  AnnoteaConversion run() {
    std::set<Term> records;
    for (const auto& t : g_.triples()) {
      if (t.predicate == vocab::a_annotates) records.insert(t.subject);
    }
    if (records.empty()) throw Error(ErrorCode::NoAnnotations, "no subject has a:annotates");

    AnnoteaConversion out;
    for (const auto& r : records) out.annotations.push_back(convert(r));
    // Anything left over, including statements about other subjects, is
    // reported rather than dropped silently.
    for (std::size_t i = 0; i < g_.triples().size(); ++i) {
      if (consumed_.contains(i)) continue;
      const auto& t = g_.triples()[i];
      note("unmapped-triple", t.subject,
           to_string(t.subject) + " " + to_string(t.predicate) + " " + to_string(t.object));
    }
    out.report = std::move(report_);
    return out;
  }

 private:
  Annotation convert(const Term& record) {
    Annotation a;
    a.id = *as_node(record);
    std::optional<std::string> created, modified;
    std::size_t index = 0;
    std::size_t embedded_count = 0;
    for (const auto* t : g_.about(record)) {
      index = static_cast<std::size_t>(t - g_.triples().data());
      const auto& p = t->predicate;
      const auto& o = t->object;
      bool mapped = true;
      if (p == vocab::rdf_type && (o == Term{vocab::a_Annotation} || o == Term{vocab::oa_Annotation})) {
        // the one Annotea class
      } else if (p == vocab::a_annotates) {
        if (const auto* iri = std::get_if<Iri>(&o)) {
          a.targets.push_back(external(*iri));
        } else {
          mapped = false;
        }
      } else if (p == vocab::a_author) {
        if (const auto* iri = std::get_if<Iri>(&o); iri && !a.annotated_by) {
          a.annotated_by = *iri;
        } else if (const auto* lit = std::get_if<Literal>(&o)) {
          note("literal-author", record,
               "author literal \"" + lit->lexical + "\" is not an IRI and was not converted");
        } else {
          mapped = false;
        }
      } else if (p == vocab::a_body) {
        if (const auto* lit = std::get_if<Literal>(&o)) {
          a.bodies.push_back(embedded(record, embedded_count++, lit->lexical, lit->lang));
        } else if (const auto* iri = std::get_if<Iri>(&o)) {
          a.bodies.push_back(external(*iri));
        } else {
          mapped = false;
        }
      } else if (p == vocab::a_related && std::holds_alternative<Iri>(o)) {
        a.bodies.push_back(external(std::get<Iri>(o)));
      } else if (p == vocab::a_created && std::holds_alternative<Literal>(o) && !created) {
        created = std::get<Literal>(o).lexical;
      } else if (p == vocab::a_modified && std::holds_alternative<Literal>(o) && !modified) {
        modified = std::get<Literal>(o).lexical;
      } else if (p == vocab::a_context) {
        note("unconvertible-context", record,
             "a:context " + to_string(o) + " has no general mapping to a Specific Resource");
      } else if (!in_annotea_ns(p) && p != vocab::rdf_type) {
        // Foreign vocabulary survives as an extension on the annotation.
        a.extras.push_back(*t);
      } else {
        mapped = false;
      }
      if (mapped) consumed_.insert(index);
    }
    if (created && modified) {
      a.annotated_at = modified;
      note("dropped-created", record,
           "a:modified \"" + *modified + "\" takes precedence over a:created \"" + *created + "\"");
    } else if (modified) {
      a.annotated_at = modified;
    } else if (created) {
      a.annotated_at = created;
    }
    return a;
  }

  ResourceRef external(const Iri& iri) {
    ExternalResource r;
    r.id = iri;
    // Descriptions of the resource that are not Annotea vocabulary travel
    // with it.
    for (const auto* t : g_.about(iri)) {
      if (in_annotea_ns(t->predicate) || !g_.objects(iri, vocab::a_annotates).empty()) continue;
      if (t->predicate == vocab::rdf_type && std::holds_alternative<Iri>(t->object)) {
        r.classes.insert(std::get<Iri>(t->object));
      } else {
        r.extras.push_back(*t);
      }
      consumed_.insert(static_cast<std::size_t>(t - g_.triples().data()));
    }
    return ResourceRef{std::move(r)};
  }

  ResourceRef embedded(const Term& record, std::size_t n, std::string chars,
                       std::optional<std::string> lang) {
    EmbeddedText e;
    if (const auto* b = std::get_if<BlankNode>(&record)) {
      e.id = BlankNode{b->label + "-body" + (n == 0 ? "" : "-" + std::to_string(n))};
    } else {
      e.id = BlankNode{"annotea-body-" + std::to_string(bodies_++)};
    }
    e.chars = std::move(chars);
    e.language = std::move(lang);
    return ResourceRef{std::move(e)};
  }

  void note(std::string code, const Term& subject, std::string message) {
    report_.entries.push_back(
        ReportEntry{Severity::Warning, std::move(code), to_string(subject), std::move(message)});
  }

  const Graph& g_;
  std::set<std::size_t> consumed_;
  ValidationReport report_;
  std::size_t bodies_ = 0;
};

}  // namespace

AnnoteaConversion convert_annotea(const Graph& graph) { return AnnoteaConverter(graph).run(); }

}  // namespace oakit
