#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oakit/vocab.hpp"

namespace testing_support {

using namespace oakit;

std::filesystem::path data_dir() { return OAKIT_TEST_DATA_DIR; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture(const std::string& name) { return read_file(data_dir() / name); }

// ---------------------------------------------------------------------------
// N-Triples

namespace {

class NtReader {
 public:
  explicit NtReader(std::string_view line) : s_(line) {}

  Term term(bool allow_literal) {
    skip_ws();
    if (eat('<')) return Iri{until('>')};
    if (s_.substr(i_, 2) == "_:") {
      i_ += 2;
      std::string label;
      while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_]))) label += s_[i_++];
      return BlankNode{label};
    }
    if (allow_literal && eat('"')) {
      Literal lit;
      lit.lexical = quoted();
      if (eat('@')) {
        std::string tag;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) tag += s_[i_++];
        lit.lang = tag;
      } else if (s_.substr(i_, 2) == "^^") {
        i_ += 2;
        if (!eat('<')) throw std::runtime_error("datatype must be an IRI");
        lit.datatype = Iri{until('>')};
      }
      return lit;
    }
    throw std::runtime_error("unexpected term in: " + std::string(s_));
  }

  void end() {
    skip_ws();
    if (!eat('.')) throw std::runtime_error("missing '.' in: " + std::string(s_));
    skip_ws();
    if (i_ != s_.size()) throw std::runtime_error("trailing text in: " + std::string(s_));
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  bool eat(char c) {
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::string until(char c) {
    const auto at = s_.find(c, i_);
    if (at == std::string_view::npos) throw std::runtime_error("unterminated term");
    std::string out(s_.substr(i_, at - i_));
    i_ = at + 1;
    return out;
  }
  std::string quoted() {
    std::string out;
    while (i_ < s_.size() && s_[i_] != '"') {
      char c = s_[i_++];
      if (c != '\\') {
        out += c;
        continue;
      }
      c = s_[i_++];
      switch (c) {
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'u': {
          const auto cp = static_cast<char32_t>(std::stoul(std::string(s_.substr(i_, 4)), nullptr, 16));
          i_ += 4;
          out += encode_cp(cp);
          break;
        }
        default: throw std::runtime_error("bad escape");
      }
    }
    if (!eat('"')) throw std::runtime_error("unterminated literal");
    return out;
  }
  static std::string encode_cp(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Graph parse_ntriples(const std::string& text) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    NtReader r(line);
    Term s = r.term(false);
    Term p = r.term(false);
    Term o = r.term(true);
    r.end();
    if (!std::holds_alternative<Iri>(p)) throw std::runtime_error("predicate must be an IRI");
    g.add(std::move(s), std::get<Iri>(p), std::move(o));
  }
  return g;
}

namespace {

std::vector<std::string> blank_labels(const Graph& g) {
  std::set<std::string> labels;
  for (const auto& t : g.triples()) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) labels.insert(b->label);
    if (const auto* b = std::get_if<BlankNode>(&t.object)) labels.insert(b->label);
  }
  return {labels.begin(), labels.end()};
}

Term rename(const Term& t, const std::map<std::string, std::string>& m) {
  if (const auto* b = std::get_if<BlankNode>(&t)) return BlankNode{m.at(b->label)};
  return t;
}

}  // namespace

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  const auto la = blank_labels(a);
  auto lb = blank_labels(b);
  if (la.size() != lb.size()) return false;
  if (la.size() > 9) throw std::runtime_error("too many blank nodes for brute force");
  std::set<Triple> target(b.triples().begin(), b.triples().end());
  std::vector<std::size_t> perm(lb.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < la.size(); ++i) m[la[i]] = lb[perm[i]];
    bool all = true;
    for (const auto& t : a.triples()) {
      if (!target.contains(Triple{rename(t.subject, m), t.predicate, rename(t.object, m)})) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<std::size_t> expected_line(const std::string& text) {
  const std::string key = "# expect-line:";
  const auto at = text.find(key);
  if (at == std::string::npos) return std::nullopt;
  return std::stoul(text.substr(at + key.size()));
}

// ---------------------------------------------------------------------------
// Generators

std::string Rng::text(std::size_t max_len, bool allow_empty) {
  static const std::vector<std::string> pool = {
      "a", "b", "c", "x", "y", "z", "A", "Q", "0", "7", " ", " ", ".", ",", ";", "#", ":",
      "\"", "\\", "\n", "\t", "\r", "<", ">", "'", "_", "é", "ß", "中", "文", "\xF0\x9F\x98\x80"};
  const std::size_t len = between(allow_empty ? 0 : 1, max_len);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) out += pick(pool);
  return out;
}

std::string Rng::token(std::size_t max_len) {
  static const std::string alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFXYZ0123456789";
  const std::size_t len = between(1, max_len);
  std::string out(1, alphabet[below(26)]);
  for (std::size_t i = 1; i < len; ++i) out += alphabet[below(alphabet.size())];
  return out;
}

namespace {

const Iri kExP{"http://example.org/ns#p"};
const Iri kExQ{"http://example.org/ns#q"};
const Iri kExFancy{"http://example.org/ns#FancySelector"};
const Iri kExFancyState{"http://example.org/ns#FancyState"};

}  // namespace

NodeId AnnotationGen::fresh_node() {
  ++counter_;
  if (rng_.chance(0.5)) return BlankNode{"g" + std::to_string(counter_)};
  return Iri{"urn:x:n" + std::to_string(counter_)};
}

Iri AnnotationGen::fresh_iri() { return Iri{"http://example.org/r/" + std::to_string(++counter_)}; }

Extras AnnotationGen::extras_for(const NodeId& subject) {
  Extras out;
  if (rng_.chance(0.7)) return out;
  const Term s = to_term(subject);
  out.push_back(Triple{s, kExP, Literal{rng_.text(6), std::nullopt, std::nullopt}});
  if (rng_.chance(0.4)) {
    const BlankNode note{"e" + std::to_string(++counter_)};
    out.push_back(Triple{s, kExQ, note});
    out.push_back(Triple{note, kExP, Literal{std::to_string(rng_.below(100)), vocab::xsd_integer, std::nullopt}});
  }
  return out;
}

ExternalResource AnnotationGen::external_resource() {
  ExternalResource r;
  r.id = fresh_iri();
  static const std::vector<Iri> classes = {vocab::dctypes_Text, vocab::dctypes_Image, vocab::oa_Tag};
  for (const auto& c : classes) {
    if (rng_.chance(0.25)) r.classes.insert(c);
  }
  if (rng_.chance(0.4)) r.format = rng_.pick(std::vector<std::string>{"text/html", "image/png", "text/plain"});
  r.extras = extras_for(r.id);
  return r;
}

Selector AnnotationGen::selector(int depth) {
  Selector s;
  s.id = fresh_node();
  const std::size_t kind = rng_.below(depth > 0 ? 7 : 6);
  switch (kind) {
    case 0: {
      FragmentSelector f;
      f.value = rng_.token(4) + "=" + rng_.token(6);
      if (rng_.chance(0.5)) f.conforms_to = Iri{"http://www.w3.org/TR/media-frags/"};
      s.kind = f;
      break;
    }
    case 1: {
      const auto a = rng_.below(1000);
      s.kind = TextPositionSelector{a, a + rng_.below(1000)};
      break;
    }
    case 2: {
      TextQuoteSelector q;
      q.exact = rng_.text(10);
      if (rng_.chance(0.6)) q.prefix = rng_.text(8, true);
      if (rng_.chance(0.6)) q.suffix = rng_.text(8, true);
      s.kind = q;
      break;
    }
    case 3:
      s.kind = SvgSelector{"<svg><rect width=\"" + std::to_string(rng_.below(50)) + "\"/></svg>"};
      break;
    case 4: {
      // Referenced SVG document: the selector node is the document itself.
      const auto iri = fresh_iri();
      s.id = iri;
      s.kind = SvgSelector{iri};
      break;
    }
    case 5: {
      s.kind = OpaqueSelector{{kExFancy}};
      s.extras = extras_for(s.id);
      return s;
    }
    default: {
      SelectorConstruct c;
      c.id = s.id;
      c.kind = static_cast<ConstructKind>(rng_.below(3));
      const auto n = rng_.between(1, 3);
      for (std::size_t i = 0; i < n; ++i) c.items.push_back(selector(depth - 1));
      s.kind = std::move(c);
      return s;
    }
  }
  if (!std::holds_alternative<SvgSelector>(s.kind) || !std::holds_alternative<Iri>(std::get<SvgSelector>(s.kind).content)) {
    s.extras = extras_for(s.id);
  }
  return s;
}

State AnnotationGen::state() {
  State st;
  st.id = fresh_node();
  switch (rng_.below(3)) {
    case 0: {
      TimeState t;
      const bool when = rng_.chance(0.7);
      if (when) t.when = "2013-0" + std::to_string(rng_.between(1, 9)) + "-1" + std::to_string(rng_.below(10)) + "T12:00:00Z";
      if (!when || rng_.chance(0.5)) {
        const auto n = rng_.between(1, 2);
        for (std::size_t i = 0; i < n; ++i) t.cached_copies.push_back(fresh_iri());
      }
      st.kind = t;
      break;
    }
    case 1: {
      HttpRequestState h;
      const auto n = rng_.between(1, 3);
      std::set<std::string> seen;
      for (std::size_t i = 0; i < n; ++i) {
        auto name = "X-" + rng_.token(5);
        if (!seen.insert(name).second) continue;
        h.headers.emplace_back(name, rng_.token(4) + " " + rng_.token(4));
      }
      st.kind = h;
      break;
    }
    default:
      st.kind = OpaqueState{{kExFancyState}};
      break;
  }
  st.extras = extras_for(st.id);
  return st;
}

ResourceRef AnnotationGen::resource(int depth, bool allow_specific) {
  const std::size_t kind = rng_.below(depth > 0 ? 4 : 3);
  if (kind == 0) return ResourceRef{external_resource()};
  if (kind == 1) {
    EmbeddedText e;
    e.id = fresh_node();
    e.chars = rng_.text(12, true);
    if (rng_.chance(0.5)) e.format = rng_.pick(std::vector<std::string>{"text/plain", "text/html", "application/json"});
    if (rng_.chance(0.3)) e.language = rng_.pick(std::vector<std::string>{"en", "fr", "de-CH"});
    if (rng_.chance(0.3)) e.classes.insert(vocab::oa_Tag);
    if (rng_.chance(0.2)) e.classes.insert(vocab::dctypes_Text);
    e.extras = extras_for(e.id);
    return ResourceRef{std::move(e)};
  }
  if (kind == 2 && allow_specific) {
    SpecificResource sr;
    sr.id = fresh_node();
    sr.source = external_resource();
    if (rng_.chance(0.8)) sr.selector = selector(2);
    if (rng_.chance(0.4)) sr.state = state();
    if (rng_.chance(0.4)) sr.style_class = rng_.token(6);
    if (rng_.chance(0.2)) sr.scope = fresh_iri();
    sr.extras = extras_for(sr.id);
    return ResourceRef{std::move(sr)};
  }
  if (kind == 2) return ResourceRef{external_resource()};
  ResourceConstruct c;
  c.id = fresh_node();
  c.kind = static_cast<ConstructKind>(rng_.below(3));
  const auto n = rng_.between(1, 3);
  for (std::size_t i = 0; i < n; ++i) c.items.push_back(resource(depth - 1, allow_specific));
  c.extras = extras_for(c.id);
  return ResourceRef{std::move(c)};
}

Annotation AnnotationGen::annotation() {
  Annotation a;
  a.id = fresh_node();
  static const std::vector<Iri> motivations = {vocab::oa_editing, vocab::oa_tagging,
                                               Iri{"http://example.org/motivation/linking"}};
  for (const auto& m : motivations) {
    if (rng_.chance(0.3)) a.motivations.push_back(m);
  }
  const auto bodies = rng_.below(3);
  for (std::size_t i = 0; i < bodies; ++i) a.bodies.push_back(resource(2, rng_.chance(0.3)));
  const auto targets = rng_.between(1, 2);
  for (std::size_t i = 0; i < targets; ++i) a.targets.push_back(resource(2, true));
  if (rng_.chance(0.5)) a.annotated_by = fresh_iri();
  if (rng_.chance(0.5)) a.annotated_at = "2014-05-0" + std::to_string(rng_.between(1, 9)) + "T08:15:00Z";
  if (rng_.chance(0.3)) {
    if (rng_.chance(0.5)) {
      a.styled_by = ExternalCss{fresh_iri(), {}};
    } else {
      a.styled_by = EmbeddedCss{fresh_node(), ".hl { color: red }", {}};
    }
  }
  a.extras = extras_for(a.id);
  return a;
}

}  // namespace testing_support
