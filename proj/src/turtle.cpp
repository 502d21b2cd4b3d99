#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "oakit/error.hpp"
#include "oakit/turtle.hpp"
#include "oakit/vocab.hpp"

namespace oakit {

namespace {

// Generated blank labels start with this byte while parsing and are renamed
// to fresh printable labels once every explicit label is known.
constexpr char kGeneratedMark = '\x01';

bool is_pn_chars_base(unsigned char c) { return std::isalpha(c) || c >= 0x80; }
bool is_pn_chars_u(unsigned char c) { return is_pn_chars_base(c) || c == '_'; }
bool is_pn_chars(unsigned char c) { return is_pn_chars_u(c) || std::isdigit(c) || c == '-'; }

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : text_(text) {}

  Graph parse() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return rename_generated();
  }

 private:
  // -- statements -----------------------------------------------------------

  void statement() {
    if (peek() == '@') {
      directive_at();
      return;
    }
    if (keyword_ahead("PREFIX")) {
      pos_ += 6;
      prefix_body();
      return;
    }
    if (keyword_ahead("BASE") || text_.substr(pos_, 5) == "@base") {
      fail("@base / BASE is not supported");
    }
    triples();
    skip_ws();
    expect('.', "expected '.' at end of statement");
  }

  void directive_at() {
    if (text_.substr(pos_, 7) == "@prefix") {
      pos_ += 7;
      prefix_body();
      skip_ws();
      expect('.', "expected '.' after @prefix");
      return;
    }
    fail("unsupported directive");
  }

  void prefix_body() {
    skip_ws();
    const auto name_start = pos_;
    while (!at_end() && peek() != ':' && is_prefix_char(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string name(text_.substr(name_start, pos_ - name_start));
    if (peek() != ':') fail("expected ':' in prefix declaration");
    ++pos_;
    skip_ws();
    if (peek() != '<') fail("expected <namespace IRI>");
    prefixes_[name] = iri_ref();
  }

  static bool is_prefix_char(unsigned char c) { return is_pn_chars(c) || c == '.'; }

  void triples() {
    if (peek() == '[') {
      Term subject = blank_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = subject_term();
    skip_ws();
    predicate_object_list(subject);
  }

  Term subject_term() {
    const char c = peek();
    if (c == '<') return iri_ref();
    if (c == '_') return blank_label();
    if (c == '(') return collection();
    if (c == '"' || c == '\'' || c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      fail("a literal cannot be a subject");
    }
    if (at_end()) fail("unexpected end of input, expected a subject");
    return prefixed_name();
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      Iri predicate = verb();
      skip_ws();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      // A trailing ';' may end the list.
      if (peek() == '.' || peek() == ']' || at_end()) return;
    }
  }

  Iri verb() {
    if (peek() == 'a' && !continues_name(pos_ + 1)) {
      ++pos_;
      return vocab::rdf_type;
    }
    if (peek() == '<') return iri_ref();
    if (at_end() || peek() == '.' || peek() == ';' || peek() == ',') fail("expected a predicate");
    if (peek() == '_' || peek() == '"' || peek() == '[' || peek() == '(') {
      fail("a predicate must be an IRI");
    }
    return prefixed_name();
  }

  bool continues_name(std::size_t at) const {
    if (at >= text_.size()) return false;
    const auto c = static_cast<unsigned char>(text_[at]);
    return is_pn_chars(c) || c == ':' || c == '.';
  }

  void object_list(const Term& subject, const Iri& predicate) {
    for (;;) {
      Term object = object_term();
      graph_.add(subject, predicate, std::move(object));
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
      skip_ws();
    }
  }

  Term object_term() {
    const char c = peek();
    if (at_end()) fail("unexpected end of input, expected an object");
    if (c == '<') return iri_ref();
    if (c == '_') return blank_label();
    if (c == '[') return blank_property_list();
    if (c == '(') return collection();
    if (c == '"' || c == '\'') return string_literal();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer_literal();
    if (c == '.' || c == ';' || c == ',' || c == ']' || c == ')') fail("expected an object");
    return prefixed_name();
  }

  // -- terms ----------------------------------------------------------------

  Iri iri_ref() {
    expect('<', "expected '<'");
    std::string value;
    for (;;) {
      if (at_end()) fail("unterminated IRI");
      const char c = text_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        if (peek() == 'u') {
          value_escape(value, 4);
        } else if (peek() == 'U') {
          value_escape(value, 8);
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`' || c == '<') {
        fail("invalid character in IRI");
      }
      value += c;
      ++pos_;
    }
    return Iri{std::move(value)};
  }

  Iri prefixed_name() {
    const auto start = pos_;
    while (!at_end() && peek() != ':' && is_prefix_char(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() != ':') {
      pos_ = start;
      fail("unexpected token");
    }
    const std::string prefix(text_.substr(start, pos_ - start));
    ++pos_;
    const auto local_start = pos_;
    while (!at_end()) {
      const auto c = static_cast<unsigned char>(peek());
      if (is_pn_chars(c) || std::isdigit(c) || c == ':' || c == '%') {
        ++pos_;
      } else if (c == '.' && continues_name(pos_ + 1) && text_[pos_ + 1] != '.') {
        ++pos_;
      } else {
        break;
      }
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      pos_ = start;
      fail("undefined prefix '" + prefix + ":'");
    }
    return Iri{it->second.value + std::string(text_.substr(local_start, pos_ - local_start))};
  }

  BlankNode blank_label() {
    if (text_.substr(pos_, 2) != "_:") fail("expected '_:'");
    pos_ += 2;
    const auto start = pos_;
    if (at_end() || !(is_pn_chars_u(static_cast<unsigned char>(peek())) ||
                      std::isdigit(static_cast<unsigned char>(peek())))) {
      fail("empty blank node label");
    }
    while (!at_end()) {
      const auto c = static_cast<unsigned char>(peek());
      if (is_pn_chars(c) || std::isdigit(c)) {
        ++pos_;
      } else if (c == '.' && pos_ + 1 < text_.size() &&
                 is_pn_chars(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
      } else {
        break;
      }
    }
    std::string label(text_.substr(start, pos_ - start));
    explicit_labels_.insert(label);
    return BlankNode{std::move(label)};
  }

  BlankNode fresh_blank() { return BlankNode{std::string(1, kGeneratedMark) + std::to_string(next_generated_++)}; }

  Term blank_property_list() {
    expect('[', "expected '['");
    skip_ws();
    BlankNode node = fresh_blank();
    if (peek() == ']') {
      ++pos_;
      return node;
    }
    predicate_object_list(node);
    skip_ws();
    expect(']', "expected ']'");
    return node;
  }

  Term collection() {
    expect('(', "expected '('");
    skip_ws();
    std::vector<Term> items;
    while (peek() != ')') {
      if (at_end()) fail("unterminated collection");
      items.push_back(object_term());
      skip_ws();
    }
    ++pos_;
    if (items.empty()) return vocab::rdf_nil;
    std::vector<BlankNode> cells;
    for (std::size_t i = 0; i < items.size(); ++i) cells.push_back(fresh_blank());
    for (std::size_t i = 0; i < items.size(); ++i) {
      graph_.add(cells[i], vocab::rdf_first, items[i]);
      graph_.add(cells[i], vocab::rdf_rest,
                 i + 1 < items.size() ? Term{cells[i + 1]} : Term{vocab::rdf_nil});
    }
    return cells.front();
  }

  Literal string_literal() {
    const char quote = peek();
    if (text_.substr(pos_, 3) == std::string(3, quote)) fail("long (triple-quoted) strings are not supported");
    const auto opening = pos_;
    ++pos_;
    std::string value;
    for (;;) {
      // Raw newlines are allowed, so point at the opening quote.
      if (at_end()) fail_at(opening, "unterminated string");
      const char c = text_[pos_];
      if (c == quote) {
        ++pos_;
        break;
      }
      if (c == '\\') {
        ++pos_;
        if (at_end()) fail("unterminated escape");
        const char e = text_[pos_];
        switch (e) {
          case 't': value += '\t'; break;
          case 'b': value += '\b'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case 'f': value += '\f'; break;
          case '"': value += '"'; break;
          case '\'': value += '\''; break;
          case '\\': value += '\\'; break;
          case 'u': value_escape(value, 4); continue;
          case 'U': value_escape(value, 8); continue;
          default: fail("invalid escape sequence");
        }
        ++pos_;
        continue;
      }
      value += c;
      ++pos_;
    }
    Literal lit{std::move(value), std::nullopt, std::nullopt};
    if (peek() == '@') {
      ++pos_;
      const auto start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) ++pos_;
      if (pos_ == start) fail("empty language tag");
      lit.lang = std::string(text_.substr(start, pos_ - start));
    } else if (text_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      lit.datatype = peek() == '<' ? iri_ref() : prefixed_name();
    }
    return lit;
  }

  // Reads `digits` hex digits after the 'u'/'U' at pos_ and appends UTF-8.
  void value_escape(std::string& out, int digits) {
    ++pos_;
    char32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end() || !std::isxdigit(static_cast<unsigned char>(peek()))) fail("invalid \\u escape");
      const char h = peek();
      cp = cp * 16 + static_cast<char32_t>(std::isdigit(static_cast<unsigned char>(h))
                                               ? h - '0'
                                               : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
      ++pos_;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("escape is not a Unicode scalar value");
    append_utf8(out, cp);
  }

  Literal integer_literal() {
    const auto start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    const auto digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected digits");
    }
    if (peek() == '.' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      fail("decimal literals are not supported");
    }
    if (peek() == 'e' || peek() == 'E') fail("numeric exponents are not supported");
    return Literal{std::string(text_.substr(start, pos_ - start)), vocab::xsd_integer, std::nullopt};
  }

  // -- low level ------------------------------------------------------------

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  bool keyword_ahead(std::string_view kw) const {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
    }
    const auto after = pos_ + kw.size();
    return after >= text_.size() || std::isspace(static_cast<unsigned char>(text_[after]));
  }

  void skip_ws() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* message) {
    if (peek() != c) fail(message);
    ++pos_;
  }

  SourcePosition position_of(std::size_t offset) const {
    SourcePosition p;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      const auto c = static_cast<unsigned char>(text_[i]);
      if (c == '\n') {
        ++p.line;
        p.column = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++p.column;
      }
    }
    return p;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    throw Error(ErrorCode::SyntaxError, message, position_of(offset));
  }

  Graph rename_generated() {
    std::map<std::string, std::string> names;
    std::size_t n = 0;
    auto rename = [&](const Term& t) -> Term {
      const auto* b = std::get_if<BlankNode>(&t);
      if (!b || b->label.empty() || b->label[0] != kGeneratedMark) return t;
      auto it = names.find(b->label);
      if (it == names.end()) {
        std::string fresh;
        do {
          fresh = "g" + std::to_string(n++);
        } while (explicit_labels_.contains(fresh));
        it = names.emplace(b->label, fresh).first;
      }
      return BlankNode{it->second};
    };
    Graph out;
    for (const auto& t : graph_.triples()) out.add(rename(t.subject), t.predicate, rename(t.object));
    out.prefixes = prefixes_;
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, Iri> prefixes_;
  std::set<std::string> explicit_labels_;
  std::size_t next_generated_ = 0;
  Graph graph_;
};

// ---------------------------------------------------------------------------
// Serializer

bool is_simple_local(std::string_view local) {
  if (local.empty()) return false;
  if (!(is_pn_chars_u(static_cast<unsigned char>(local.front())) ||
        std::isdigit(static_cast<unsigned char>(local.front())))) {
    return false;
  }
  return std::all_of(local.begin(), local.end(),
                     [](char c) { return is_pn_chars(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_valid_label(std::string_view label) { return is_simple_local(label); }

class TurtleWriter {
 public:
  explicit TurtleWriter(const Graph& g) : g_(g) {}

  std::string write() {
    assign_labels();
    std::set<std::string_view> used;
    for (const auto& t : g_.triples()) {
      note_prefix(t.subject, used);
      if (t.predicate != vocab::rdf_type) note_prefix(t.predicate, used);
      note_prefix(t.object, used);
    }
    std::string out;
    for (const auto& [name, ns] : vocab::kNamespaceTable) {
      if (used.contains(name)) {
        out += "@prefix ";
        out += name;
        out += ": <";
        out += ns;
        out += "> .\n";
      }
    }
    std::vector<Term> subjects = g_.subject_terms();
    std::sort(subjects.begin(), subjects.end(), [](const Term& a, const Term& b) {
      // Iri sorts before BlankNode by variant index.
      return a < b;
    });
    for (const auto& s : subjects) {
      if (!out.empty()) out += '\n';
      write_subject(out, s);
    }
    return out;
  }

 private:
  void write_subject(std::string& out, const Term& subject) {
    std::vector<Iri> predicates;
    std::map<Iri, std::vector<const Term*>> objects;
    for (const auto* t : g_.about(subject)) {
      auto& slot = objects[t->predicate];
      if (slot.empty()) predicates.push_back(t->predicate);
      slot.push_back(&t->object);
    }
    std::stable_partition(predicates.begin(), predicates.end(),
                          [](const Iri& p) { return p == vocab::rdf_type; });
    out += term(subject);
    const bool one_line = predicates.size() == 1 && objects[predicates.front()].size() == 1;
    for (std::size_t i = 0; i < predicates.size(); ++i) {
      out += i == 0 ? (one_line ? " " : "\n    ") : " ;\n    ";
      out += predicate(predicates[i]);
      const auto& objs = objects[predicates[i]];
      for (std::size_t j = 0; j < objs.size(); ++j) {
        out += j == 0 ? " " : ", ";
        out += term(*objs[j]);
      }
    }
    out += " .\n";
  }

  std::string predicate(const Iri& p) const {
    if (p == vocab::rdf_type) return "a";
    return iri(p);
  }

  std::string iri(const Iri& i) const {
    for (const auto& [name, ns] : vocab::kNamespaceTable) {
      if (i.value.starts_with(ns) && is_simple_local(std::string_view(i.value).substr(ns.size()))) {
        return std::string(name) + ":" + i.value.substr(ns.size());
      }
    }
    std::string out = "<";
    for (char c : i.value) {
      const auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`' || c == '\\') {
        static constexpr char kHex[] = "0123456789ABCDEF";
        out += "\\u00";
        out += kHex[u >> 4];
        out += kHex[u & 0xF];
      } else {
        out += c;
      }
    }
    out += '>';
    return out;
  }

  std::string term(const Term& t) const {
    if (const auto* i = std::get_if<Iri>(&t)) return iri(*i);
    if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + labels_.at(b->label);
    const auto& lit = std::get<Literal>(t);
    if (lit.datatype == vocab::xsd_integer && is_integer(lit.lexical)) return lit.lexical;
    std::string out = "\"";
    for (char c : lit.lexical) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
      }
    }
    out += '"';
    if (lit.lang) {
      out += '@';
      out += *lit.lang;
    } else if (lit.datatype) {
      out += "^^";
      out += iri(*lit.datatype);
    }
    return out;
  }

  static bool is_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  void note_prefix(const Term& t, std::set<std::string_view>& used) const {
    if (const auto* i = std::get_if<Iri>(&t)) {
      note_prefix(*i, used);
    } else if (const auto* lit = std::get_if<Literal>(&t)) {
      if (lit->datatype && !(lit->datatype == vocab::xsd_integer && is_integer(lit->lexical)) &&
          !lit->lang) {
        note_prefix(*lit->datatype, used);
      }
    }
  }

  void note_prefix(const Iri& i, std::set<std::string_view>& used) const {
    for (const auto& [name, ns] : vocab::kNamespaceTable) {
      if (i.value.starts_with(ns) && is_simple_local(std::string_view(i.value).substr(ns.size()))) {
        used.insert(name);
        return;
      }
    }
  }

  // Blank labels are kept when already valid Turtle; anything else gets a
  // fresh "x<n>" label.
  void assign_labels() {
    std::set<std::string> all;
    for (const auto& t : g_.triples()) {
      for (const Term* term : {&t.subject, &t.object}) {
        if (const auto* b = std::get_if<BlankNode>(term)) all.insert(b->label);
      }
    }
    std::set<std::string> taken;
    for (const auto& l : all) {
      if (is_valid_label(l)) {
        labels_[l] = l;
        taken.insert(l);
      }
    }
    std::size_t n = 0;
    for (const auto& l : all) {
      if (labels_.contains(l)) continue;
      std::string fresh;
      do {
        fresh = "x" + std::to_string(n++);
      } while (taken.contains(fresh));
      taken.insert(fresh);
      labels_[l] = fresh;
    }
  }

  const Graph& g_;
  std::map<std::string, std::string> labels_;
};

}  // namespace

Graph parse_turtle(std::string_view text) { return TurtleParser(text).parse(); }

std::string serialize_turtle(const Graph& graph) { return TurtleWriter(graph).write(); }

}  // namespace oakit
