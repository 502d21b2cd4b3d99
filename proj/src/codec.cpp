// Lift (graph -> typed annotation) and lower (typed annotation -> graph).

#include <algorithm>
#include <charconv>
#include <set>

#include "oakit/error.hpp"
#include "oakit/turtle.hpp"
#include "oakit/vocab.hpp"

namespace oakit {

namespace {

using vocab::rdf_type;

std::optional<std::string> plain_string(const Term& t) {
  const auto* lit = std::get_if<Literal>(&t);
  if (!lit || lit->lang) return std::nullopt;
  if (lit->datatype && lit->datatype->value != std::string(vocab::kXsd) + "string") {
    return std::nullopt;
  }
  return lit->lexical;
}

std::optional<std::uint64_t> plain_unsigned(const Term& t) {
  const auto* lit = std::get_if<Literal>(&t);
  if (!lit || lit->lang) return std::nullopt;
  if (lit->datatype && *lit->datatype != vocab::xsd_integer) return std::nullopt;
  std::string_view s = lit->lexical;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Literal integer_literal(std::uint64_t v) {
  return Literal{std::to_string(v), vocab::xsd_integer, std::nullopt};
}

Literal string_literal(std::string s) { return Literal{std::move(s), std::nullopt, std::nullopt}; }

bool is_construct_type(const Iri& t) {
  return t == vocab::oa_Choice || t == vocab::oa_Composite || t == vocab::oa_List;
}

// ---------------------------------------------------------------------------

class Lifter {
 public:
  explicit Lifter(const Graph& g) : g_(g) {}

  Annotation annotation(const NodeId& root) {
    const Term node = to_term(root);
    if (!g_.has_type(node, vocab::oa_Annotation)) {
      throw Error(ErrorCode::NotAnAnnotation, to_string(root) + " is not typed oa:Annotation");
    }
    Annotation a;
    a.id = root;
    for (const auto* t : g_.about(node)) {
      const auto& p = t->predicate;
      const auto& o = t->object;
      if (p == rdf_type && o == Term{vocab::oa_Annotation}) continue;
      if (p == vocab::oa_isMotivatedBy && std::holds_alternative<Iri>(o)) {
        a.motivations.push_back(std::get<Iri>(o));
      } else if (p == vocab::oa_hasBody) {
        a.bodies.push_back(resource(o, "bodies[" + std::to_string(a.bodies.size()) + "]"));
      } else if (p == vocab::oa_hasTarget) {
        a.targets.push_back(resource(o, "targets[" + std::to_string(a.targets.size()) + "]"));
      } else if (p == vocab::oa_styledBy && !a.styled_by) {
        a.styled_by = style(o, "styledBy");
      } else if (p == vocab::oa_annotatedBy && !a.annotated_by && std::holds_alternative<Iri>(o)) {
        a.annotated_by = std::get<Iri>(o);
      } else if (p == vocab::oa_annotatedAt && !a.annotated_at && plain_string(o)) {
        a.annotated_at = plain_string(o);
      } else {
        keep(a.extras, *t);
      }
    }
    return a;
  }

 private:
  // Records an unknown statement and the closure of any blank node it
  // reaches, so lower can replay it.
  void keep(Extras& extras, const Triple& t) {
    extras.push_back(t);
    std::vector<Term> pending;
    if (is_blank(t.object)) pending.push_back(t.object);
    std::set<Term> seen{t.subject};
    while (!pending.empty()) {
      Term b = pending.back();
      pending.pop_back();
      if (!seen.insert(b).second) continue;
      for (const auto* inner : g_.about(b)) {
        extras.push_back(*inner);
        if (is_blank(inner->object)) pending.push_back(inner->object);
      }
    }
  }

  [[noreturn]] void malformed(const std::string& path, const std::string& why) const {
    throw Error(ErrorCode::MalformedStructure, path + ": " + why);
  }

  // Guards against cycles through constructs or selector nesting.
  struct Visit {
    Lifter& l;
    Visit(Lifter& lifter, const Term& node, const std::string& path) : l(lifter) {
      if (std::find(l.stack_.begin(), l.stack_.end(), node) != l.stack_.end()) {
        l.malformed(path, "cycle through " + to_string(node));
      }
      l.stack_.push_back(node);
    }
    ~Visit() { l.stack_.pop_back(); }
  };

  NodeId node_or_fail(const Term& t, const std::string& path) const {
    auto n = as_node(t);
    if (!n) malformed(path, "literal where a resource is required");
    return *n;
  }

  std::vector<Iri> types(const Term& node) const {
    std::vector<Iri> out;
    for (const auto& o : g_.objects(node, rdf_type)) {
      if (const auto* i = std::get_if<Iri>(&o)) out.push_back(*i);
    }
    return out;
  }

  bool has(const Term& node, const Iri& p) const { return !g_.objects(node, p).empty(); }

  // -- resources ------------------------------------------------------------

  ResourceRef resource(const Term& t, const std::string& path) {
    const NodeId id = node_or_fail(t, path);
    Visit guard(*this, t, path);
    const auto ts = types(t);
    const bool is_construct = std::any_of(ts.begin(), ts.end(), is_construct_type);
    if (is_construct) return ResourceRef{construct<ResourceRef>(t, path, &Lifter::resource)};
    const auto has_type = [&](const Iri& c) { return std::find(ts.begin(), ts.end(), c) != ts.end(); };
    if (has_type(vocab::oa_SpecificResource) || has(t, vocab::oa_hasSource)) {
      return ResourceRef{specific(t, path)};
    }
    if (has_type(vocab::cnt_ContentAsText) || has(t, vocab::cnt_chars)) {
      return ResourceRef{embedded(t, path)};
    }
    if (const auto* iri = std::get_if<Iri>(&id)) return ResourceRef{external(*iri)};
    malformed(path, "blank node " + to_string(id) + " is neither content, specific resource nor construct");
  }

  ExternalResource external(const Iri& id) {
    ExternalResource r;
    r.id = id;
    for (const auto* t : g_.about(id)) {
      if (t->predicate == rdf_type && std::holds_alternative<Iri>(t->object)) {
        r.classes.insert(std::get<Iri>(t->object));
      } else if (t->predicate == vocab::dc_format && !r.format && plain_string(t->object)) {
        r.format = plain_string(t->object);
      } else {
        keep(r.extras, *t);
      }
    }
    return r;
  }

  EmbeddedText embedded(const Term& node, const std::string& path) {
    EmbeddedText e;
    e.id = *as_node(node);
    bool have_chars = false;
    std::vector<Iri> classes;
    for (const auto* t : g_.about(node)) {
      const auto* lit = std::get_if<Literal>(&t->object);
      if (t->predicate == rdf_type && std::holds_alternative<Iri>(t->object)) {
        classes.push_back(std::get<Iri>(t->object));
      } else if (t->predicate == vocab::cnt_chars && !have_chars && lit && !lit->datatype) {
        e.chars = lit->lexical;
        e.language = lit->lang;
        have_chars = true;
      } else if (t->predicate == vocab::dc_format && !e.format && plain_string(t->object)) {
        e.format = plain_string(t->object);
      } else {
        keep(e.extras, *t);
      }
    }
    if (!have_chars) malformed(path, "embedded content without cnt:chars");
    for (auto& c : classes) {
      if (c == vocab::cnt_ContentAsText) continue;
      if (c == vocab::dctypes_Text && e.is_textual_format()) continue;
      e.classes.insert(std::move(c));
    }
    return e;
  }

  SpecificResource specific(const Term& node, const std::string& path) {
    SpecificResource sr;
    sr.id = *as_node(node);
    bool have_source = false;
    for (const auto* t : g_.about(node)) {
      const auto& p = t->predicate;
      const auto& o = t->object;
      if (p == rdf_type && o == Term{vocab::oa_SpecificResource}) continue;
      if (p == vocab::oa_hasSource && !have_source && std::holds_alternative<Iri>(o)) {
        sr.source = external(std::get<Iri>(o));
        have_source = true;
      } else if (p == vocab::oa_hasSelector && !sr.selector && as_node(o)) {
        sr.selector = selector(o, path + ".selector");
      } else if (p == vocab::oa_hasState && !sr.state && as_node(o)) {
        sr.state = state(o, path + ".state");
      } else if (p == vocab::oa_styleClass && !sr.style_class && plain_string(o)) {
        sr.style_class = plain_string(o);
      } else if (p == vocab::oa_hasScope && !sr.scope && std::holds_alternative<Iri>(o)) {
        sr.scope = std::get<Iri>(o);
      } else {
        keep(sr.extras, *t);
      }
    }
    if (!have_source) malformed(path, "specific resource without an oa:hasSource IRI");
    return sr;
  }

  template <class Item>
  Construct<Item> construct(const Term& node, const std::string& path,
                            Item (Lifter::*lift_item)(const Term&, const std::string&)) {
    Construct<Item> c;
    c.id = *as_node(node);
    int kinds = 0;
    for (const auto& t : types(node)) {
      if (t == vocab::oa_Choice) c.kind = ConstructKind::Choice, ++kinds;
      if (t == vocab::oa_Composite) c.kind = ConstructKind::Composite, ++kinds;
      if (t == vocab::oa_List) c.kind = ConstructKind::List, ++kinds;
    }
    if (kinds != 1) malformed(path, "node has more than one construct type");

    std::vector<Term> members;
    std::set<Term> list_cells;
    if (c.kind == ConstructKind::List && has(node, vocab::rdf_first)) {
      Term cell = node;
      for (;;) {
        const auto firsts = g_.objects(cell, vocab::rdf_first);
        const auto rests = g_.objects(cell, vocab::rdf_rest);
        if (firsts.size() != 1 || rests.size() != 1) malformed(path, "broken rdf:List chain");
        if (!list_cells.insert(cell).second) malformed(path, "cyclic rdf:List chain");
        members.push_back(firsts.front());
        if (rests.front() == Term{vocab::rdf_nil}) break;
        cell = rests.front();
        if (!is_blank(cell)) malformed(path, "rdf:rest must point at a blank cell or rdf:nil");
      }
    } else {
      members = g_.objects(node, vocab::oa_item);
    }

    for (const auto* t : g_.about(node)) {
      const auto& p = t->predicate;
      if (p == rdf_type) {
        const auto* i = std::get_if<Iri>(&t->object);
        if (i && (is_construct_type(*i) || (c.kind == ConstructKind::List && *i == vocab::rdf_List))) {
          continue;
        }
      } else if (p == vocab::oa_item) {
        continue;
      } else if (c.kind == ConstructKind::List && !list_cells.empty() &&
                 (p == vocab::rdf_first || p == vocab::rdf_rest)) {
        continue;
      }
      keep(c.extras, *t);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      c.items.push_back((this->*lift_item)(members[i], path + ".items[" + std::to_string(i) + "]"));
    }
    return c;
  }

  // -- selectors ------------------------------------------------------------

  Selector selector(const Term& node, const std::string& path) {
    Selector s;
    s.id = node_or_fail(node, path);
    Visit guard(*this, node, path);
    const auto ts = types(node);
    auto typed = [&](const Iri& c) { return std::find(ts.begin(), ts.end(), c) != ts.end(); };

    if (std::any_of(ts.begin(), ts.end(), is_construct_type)) {
      s.kind = construct<Selector>(node, path, &Lifter::selector);
      return s;
    }
    // Reads the selector's statements: `handle` returns true for the ones it
    // consumed; the class statement `cls` is always consumed.
    auto scan = [&](const Iri& cls, auto handle) {
      for (const auto* t : g_.about(node)) {
        if (t->predicate == rdf_type && t->object == Term{cls}) continue;
        if (!handle(*t)) keep(s.extras, *t);
      }
    };

    if (typed(vocab::oa_FragmentSelector)) {
      FragmentSelector f;
      bool have_value = false;
      scan(vocab::oa_FragmentSelector, [&](const Triple& t) {
        if (t.predicate == vocab::rdf_value && !have_value && plain_string(t.object)) {
          f.value = *plain_string(t.object);
          return have_value = true;
        }
        if (t.predicate == vocab::dcterms_conformsTo && !f.conforms_to &&
            std::holds_alternative<Iri>(t.object)) {
          f.conforms_to = std::get<Iri>(t.object);
          return true;
        }
        return false;
      });
      if (!have_value) malformed(path, "FragmentSelector without rdf:value");
      s.kind = std::move(f);
    } else if (typed(vocab::oa_TextPositionSelector)) {
      std::optional<std::uint64_t> start, end;
      scan(vocab::oa_TextPositionSelector, [&](const Triple& t) {
        if (t.predicate == vocab::oa_start && !start) return (start = plain_unsigned(t.object)).has_value();
        if (t.predicate == vocab::oa_end && !end) return (end = plain_unsigned(t.object)).has_value();
        return false;
      });
      if (!start || !end) malformed(path, "TextPositionSelector needs integer oa:start and oa:end");
      s.kind = TextPositionSelector{*start, *end};
    } else if (typed(vocab::oa_TextQuoteSelector)) {
      TextQuoteSelector q;
      bool have_exact = false;
      scan(vocab::oa_TextQuoteSelector, [&](const Triple& t) {
        auto value = plain_string(t.object);
        if (!value) return false;
        if (t.predicate == vocab::oa_exact && !have_exact) {
          q.exact = *value;
          return have_exact = true;
        }
        if (t.predicate == vocab::oa_prefix && !q.prefix) return (q.prefix = value).has_value();
        if (t.predicate == vocab::oa_suffix && !q.suffix) return (q.suffix = value).has_value();
        return false;
      });
      if (!have_exact) malformed(path, "TextQuoteSelector without oa:exact");
      s.kind = std::move(q);
    } else if (typed(vocab::oa_SvgSelector)) {
      std::optional<std::string> chars;
      scan(vocab::oa_SvgSelector, [&](const Triple& t) {
        if (t.predicate == vocab::cnt_chars && !chars) return (chars = plain_string(t.object)).has_value();
        return false;
      });
      if (chars) {
        s.kind = SvgSelector{*chars};
      } else if (const auto* iri = std::get_if<Iri>(&s.id)) {
        s.kind = SvgSelector{*iri};
      } else {
        malformed(path, "SvgSelector blank node without cnt:chars");
      }
    } else {
      OpaqueSelector o;
      for (const auto* t : g_.about(node)) {
        if (t->predicate == rdf_type && std::holds_alternative<Iri>(t->object)) {
          o.types.push_back(std::get<Iri>(t->object));
        } else {
          keep(s.extras, *t);
        }
      }
      s.kind = std::move(o);
    }
    return s;
  }

  // -- states and styles ----------------------------------------------------

  State state(const Term& node, const std::string& path) {
    State st;
    st.id = node_or_fail(node, path);
    const auto ts = types(node);
    auto typed = [&](const Iri& c) { return std::find(ts.begin(), ts.end(), c) != ts.end(); };
    if (typed(vocab::oa_TimeState)) {
      TimeState time;
      for (const auto* t : g_.about(node)) {
        if (t->predicate == rdf_type && t->object == Term{vocab::oa_TimeState}) continue;
        if (t->predicate == vocab::oa_when && !time.when && plain_string(t->object)) {
          time.when = plain_string(t->object);
        } else if (t->predicate == vocab::oa_cachedSource && std::holds_alternative<Iri>(t->object)) {
          time.cached_copies.push_back(std::get<Iri>(t->object));
        } else {
          keep(st.extras, *t);
        }
      }
      st.kind = std::move(time);
    } else if (typed(vocab::oa_HttpRequestState)) {
      HttpRequestState http;
      bool have_value = false;
      for (const auto* t : g_.about(node)) {
        if (t->predicate == rdf_type && t->object == Term{vocab::oa_HttpRequestState}) continue;
        if (t->predicate == vocab::rdf_value && !have_value && plain_string(t->object)) {
          http.headers = parse_headers(*plain_string(t->object), path);
          have_value = true;
        } else {
          keep(st.extras, *t);
        }
      }
      st.kind = std::move(http);
    } else {
      OpaqueState o;
      for (const auto* t : g_.about(node)) {
        if (t->predicate == rdf_type && std::holds_alternative<Iri>(t->object)) {
          o.types.push_back(std::get<Iri>(t->object));
        } else {
          keep(st.extras, *t);
        }
      }
      st.kind = std::move(o);
    }
    return st;
  }

  std::vector<std::pair<std::string, std::string>> parse_headers(std::string_view block,
                                                                 const std::string& path) const {
    std::vector<std::pair<std::string, std::string>> out;
    while (!block.empty()) {
      auto eol = block.find('\n');
      auto line = block.substr(0, eol);
      block = eol == std::string_view::npos ? std::string_view{} : block.substr(eol + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty()) continue;
      const auto colon = line.find(':');
      if (colon == std::string_view::npos || colon == 0) malformed(path, "header line without name");
      auto value = line.substr(colon + 1);
      if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
      out.emplace_back(std::string(line.substr(0, colon)), std::string(value));
    }
    return out;
  }

  StyleRef style(const Term& node, const std::string& path) {
    const NodeId id = node_or_fail(node, path);
    if (has(node, vocab::cnt_chars)) {
      EmbeddedCss css;
      css.id = id;
      bool have_chars = false;
      for (const auto* t : g_.about(node)) {
        if (t->predicate == rdf_type && t->object == Term{vocab::cnt_ContentAsText}) continue;
        if (t->predicate == vocab::dc_format && t->object == Term{string_literal("text/css")}) continue;
        if (t->predicate == vocab::cnt_chars && !have_chars && plain_string(t->object)) {
          css.chars = *plain_string(t->object);
          have_chars = true;
        } else {
          keep(css.extras, *t);
        }
      }
      if (!have_chars) malformed(path, "embedded style without a plain cnt:chars literal");
      return css;
    }
    const auto* iri = std::get_if<Iri>(&id);
    if (!iri) malformed(path, "blank style node without cnt:chars");
    ExternalCss css{*iri, {}};
    for (const auto* t : g_.about(node)) keep(css.extras, *t);
    return css;
  }

  const Graph& g_;
  std::vector<Term> stack_;
};

// ---------------------------------------------------------------------------

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (int i = 15; i >= 0; --i) out += kHex[(h >> (4 * i)) & 0xF];
  return out;
}

class Lowerer {
 public:
  explicit Lowerer(Graph& g) : g_(g) {}

  void annotation(const Annotation& a) {
    const Term self = to_term(a.id);
    g_.add(self, rdf_type, vocab::oa_Annotation);
    for (const auto& m : a.motivations) g_.add(self, vocab::oa_isMotivatedBy, m);
    if (a.styled_by) g_.add(self, vocab::oa_styledBy, style(*a.styled_by));
    for (const auto& b : a.bodies) g_.add(self, vocab::oa_hasBody, resource(b));
    for (const auto& t : a.targets) g_.add(self, vocab::oa_hasTarget, resource(t));
    if (a.annotated_by) g_.add(self, vocab::oa_annotatedBy, *a.annotated_by);
    if (a.annotated_at) g_.add(self, vocab::oa_annotatedAt, string_literal(*a.annotated_at));
    replay(a.extras);
  }

 private:
  void replay(const Extras& extras) {
    for (const auto& t : extras) g_.add(t);
  }

  Term resource(const ResourceRef& ref) {
    return std::visit([&](const auto& r) -> Term { return lower(r); }, ref.value);
  }

  Term lower(const ExternalResource& r) {
    for (const auto& c : r.classes) g_.add(r.id, rdf_type, c);
    if (r.format) g_.add(r.id, vocab::dc_format, string_literal(*r.format));
    replay(r.extras);
    return r.id;
  }

  Term lower(const EmbeddedText& e) {
    const Term self = to_term(e.id);
    for (const auto& c : e.effective_classes()) g_.add(self, rdf_type, c);
    if (e.format) g_.add(self, vocab::dc_format, string_literal(*e.format));
    g_.add(self, vocab::cnt_chars, Literal{e.chars, std::nullopt, e.language});
    replay(e.extras);
    return self;
  }

  Term lower(const SpecificResource& sr) {
    const Term self = to_term(sr.id);
    g_.add(self, rdf_type, vocab::oa_SpecificResource);
    g_.add(self, vocab::oa_hasSource, lower(sr.source));
    if (sr.state) g_.add(self, vocab::oa_hasState, state(*sr.state));
    if (sr.selector) g_.add(self, vocab::oa_hasSelector, selector(*sr.selector));
    if (sr.style_class) g_.add(self, vocab::oa_styleClass, string_literal(*sr.style_class));
    if (sr.scope) g_.add(self, vocab::oa_hasScope, *sr.scope);
    replay(sr.extras);
    return self;
  }

  Term lower(const ResourceConstruct& c) {
    return construct(c, [&](const ResourceRef& item) { return resource(item); });
  }

  template <class Item, class LowerItem>
  Term construct(const Construct<Item>& c, LowerItem lower_item) {
    const Term self = to_term(c.id);
    const Iri* kind = c.kind == ConstructKind::Choice      ? &vocab::oa_Choice
                      : c.kind == ConstructKind::Composite ? &vocab::oa_Composite
                                                           : &vocab::oa_List;
    g_.add(self, rdf_type, *kind);
    std::vector<Term> members;
    for (const auto& item : c.items) {
      members.push_back(lower_item(item));
      g_.add(self, vocab::oa_item, members.back());
    }
    if (c.kind == ConstructKind::List && !members.empty()) {
      g_.add(self, rdf_type, vocab::rdf_List);
      const std::string base = is_blank(c.id) ? std::get<BlankNode>(c.id).label
                                              : "l" + fnv1a_hex(std::get<Iri>(c.id).value);
      Term cell = self;
      for (std::size_t i = 0; i < members.size(); ++i) {
        g_.add(cell, vocab::rdf_first, members[i]);
        Term next = i + 1 < members.size() ? Term{BlankNode{base + "_r" + std::to_string(i + 1)}}
                                           : Term{vocab::rdf_nil};
        g_.add(cell, vocab::rdf_rest, next);
        cell = next;
      }
    }
    replay(c.extras);
    return self;
  }

  Term selector(const Selector& s) {
    if (const auto* svg = std::get_if<SvgSelector>(&s.kind)) {
      if (const auto* iri = std::get_if<Iri>(&svg->content)) {
        g_.add(*iri, rdf_type, vocab::oa_SvgSelector);
        replay(s.extras);
        return *iri;
      }
    }
    const Term self = to_term(s.id);
    std::visit(
        [&](const auto& k) {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, FragmentSelector>) {
            g_.add(self, rdf_type, vocab::oa_FragmentSelector);
            g_.add(self, vocab::rdf_value, string_literal(k.value));
            if (k.conforms_to) g_.add(self, vocab::dcterms_conformsTo, *k.conforms_to);
          } else if constexpr (std::is_same_v<T, TextPositionSelector>) {
            g_.add(self, rdf_type, vocab::oa_TextPositionSelector);
            g_.add(self, vocab::oa_start, integer_literal(k.start));
            g_.add(self, vocab::oa_end, integer_literal(k.end));
          } else if constexpr (std::is_same_v<T, TextQuoteSelector>) {
            g_.add(self, rdf_type, vocab::oa_TextQuoteSelector);
            g_.add(self, vocab::oa_exact, string_literal(k.exact));
            if (k.prefix) g_.add(self, vocab::oa_prefix, string_literal(*k.prefix));
            if (k.suffix) g_.add(self, vocab::oa_suffix, string_literal(*k.suffix));
          } else if constexpr (std::is_same_v<T, SvgSelector>) {
            g_.add(self, rdf_type, vocab::oa_SvgSelector);
            g_.add(self, vocab::cnt_chars, string_literal(std::get<std::string>(k.content)));
          } else if constexpr (std::is_same_v<T, SelectorConstruct>) {
            construct(k, [&](const Selector& item) { return selector(item); });
          } else {
            for (const auto& t : k.types) g_.add(self, rdf_type, t);
          }
        },
        s.kind);
    replay(s.extras);
    return self;
  }

  Term state(const State& st) {
    const Term self = to_term(st.id);
    std::visit(
        [&](const auto& k) {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, TimeState>) {
            g_.add(self, rdf_type, vocab::oa_TimeState);
            if (k.when) g_.add(self, vocab::oa_when, string_literal(*k.when));
            for (const auto& c : k.cached_copies) g_.add(self, vocab::oa_cachedSource, c);
          } else if constexpr (std::is_same_v<T, HttpRequestState>) {
            g_.add(self, rdf_type, vocab::oa_HttpRequestState);
            std::string block;
            for (const auto& [name, value] : k.headers) {
              if (!block.empty()) block += "\r\n";
              block += name + ": " + value;
            }
            g_.add(self, vocab::rdf_value, string_literal(std::move(block)));
          } else {
            for (const auto& t : k.types) g_.add(self, rdf_type, t);
          }
        },
        st.kind);
    replay(st.extras);
    return self;
  }

  Term style(const StyleRef& style) {
    if (const auto* ext = std::get_if<ExternalCss>(&style)) {
      replay(ext->extras);
      return ext->iri;
    }
    const auto& css = std::get<EmbeddedCss>(style);
    const Term self = to_term(css.id);
    g_.add(self, rdf_type, vocab::cnt_ContentAsText);
    g_.add(self, vocab::dc_format, string_literal("text/css"));
    g_.add(self, vocab::cnt_chars, string_literal(css.chars));
    replay(css.extras);
    return self;
  }

  Graph& g_;
};

}  // namespace

Annotation lift(const Graph& graph, const NodeId& root) { return Lifter(graph).annotation(root); }

std::vector<NodeId> annotation_roots(const Graph& graph) {
  std::vector<NodeId> roots;
  for (const auto& s : graph.subjects(rdf_type, vocab::oa_Annotation)) {
    if (auto n = as_node(s)) roots.push_back(*n);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

void lower_into(Graph& graph, const Annotation& annotation) {
  Lowerer(graph).annotation(annotation);
}

Graph lower(const Annotation& annotation) {
  Graph g;
  lower_into(g, annotation);
  return g;
}

}  // namespace oakit
