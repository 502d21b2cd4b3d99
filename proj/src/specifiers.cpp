#include "oakit/specifiers.hpp"

#include <cctype>
#include <sstream>

#include "oakit/error.hpp"
#include "report_sink.hpp"

namespace oakit {

Iri reconstruct_fragment_uri(std::string_view source, const FragmentSelector& selector) {
  if (source.find('#') != std::string_view::npos) {
    throw Error(ErrorCode::SourceHasFragment, "source already has a fragment: " + std::string(source));
  }
  if (selector.value.empty()) {
    throw Error(ErrorCode::EmptyFragmentValue, "fragment selector value is empty");
  }
  if (selector.value.front() == '#') {
    throw Error(ErrorCode::FragmentHash, "fragment value must not start with '#'");
  }
  std::string out(source);
  out += '#';
  out += selector.value;
  return Iri{std::move(out)};
}

std::pair<Iri, FragmentSelector> decompose_fragment_uri(std::string_view uri,
                                                        std::optional<Iri> conforms_to) {
  const auto hash = uri.find('#');
  if (hash == std::string_view::npos || hash + 1 == uri.size()) {
    throw Error(ErrorCode::NoFragment, "no fragment in " + std::string(uri));
  }
  return {Iri{std::string(uri.substr(0, hash))},
          FragmentSelector{std::string(uri.substr(hash + 1)), std::move(conforms_to)}};
}

// ---------------------------------------------------------------------------

namespace detail {

void check_selector(const Selector& selector, const std::string& path, ReportSink& sink) {
  sink.next_node();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FragmentSelector>) {
          if (s.value.empty()) {
            sink.error("empty-fragment", path, "fragment selector value is empty");
          } else if (s.value.front() == '#') {
            sink.error("fragment-hash", path, "fragment value must not start with '#'");
          }
        } else if constexpr (std::is_same_v<T, TextPositionSelector>) {
          if (s.start > s.end) {
            sink.error("position-order", path,
                       "start " + std::to_string(s.start) + " > end " + std::to_string(s.end));
          }
        } else if constexpr (std::is_same_v<T, TextQuoteSelector>) {
          if (s.exact.empty()) sink.error("empty-exact", path, "exact text is empty");
        } else if constexpr (std::is_same_v<T, SelectorConstruct>) {
          if (s.items.empty()) {
            sink.error("empty-construct", path,
                       std::string(to_string(s.kind)) + " " + to_string(s.id) + " has no items");
          }
          for (std::size_t i = 0; i < s.items.size(); ++i) {
            check_selector(s.items[i], path + ".items[" + std::to_string(i) + "]", sink);
          }
        }
      },
      selector.kind);
}

}  // namespace detail

ValidationReport validate_selector(const Selector& selector) {
  detail::ReportSink sink;
  detail::check_selector(selector, "selector", sink);
  return std::move(sink).finish();
}

// ---------------------------------------------------------------------------

ConformsToTable ConformsToTable::defaults() {
  ConformsToTable t;
  const Iri media_frags{"http://www.w3.org/TR/media-frags/"};
  t.add("text/plain", Iri{"http://tools.ietf.org/rfc/rfc5147"});
  t.add("image/*", media_frags);
  t.add("video/*", media_frags);
  t.add("audio/*", media_frags);
  return t;
}

ConformsToTable ConformsToTable::parse(std::string_view text) {
  ConformsToTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string type, spec, rest;
    if (!(fields >> type) || type.front() == '#') continue;
    if (!(fields >> spec) || spec.front() == '#') {
      throw Error(ErrorCode::SyntaxError, "missing specification IRI for " + type,
                  SourcePosition{line_no, 1});
    }
    if (fields >> rest && rest.front() != '#') {
      throw Error(ErrorCode::SyntaxError, "unexpected text after specification IRI",
                  SourcePosition{line_no, 1});
    }
    if (spec.size() >= 2 && spec.front() == '<' && spec.back() == '>') {
      spec = spec.substr(1, spec.size() - 2);
    }
    t.add(type, Iri{spec});
  }
  return t;
}

void ConformsToTable::add(std::string media_type, Iri spec) {
  rows_.emplace_back(std::move(media_type), std::move(spec));
}

std::optional<Iri> ConformsToTable::lookup(std::string_view media_type) const {
  // Parameters (";charset=...") do not affect the fragment syntax.
  media_type = media_type.substr(0, media_type.find(';'));
  while (!media_type.empty() && std::isspace(static_cast<unsigned char>(media_type.back()))) {
    media_type.remove_suffix(1);
  }
  for (const auto& [type, spec] : rows_) {
    if (type == media_type) return spec;
  }
  const auto slash = media_type.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const std::string wildcard = std::string(media_type.substr(0, slash)) + "/*";
  for (const auto& [type, spec] : rows_) {
    if (type == wildcard) return spec;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Restricted CSS

namespace {

class CssReader {
 public:
  explicit CssReader(std::string_view css) : css_(css) {}

  std::vector<StyleRule> rules() {
    std::vector<StyleRule> out;
    skip_space_and_comments();
    while (pos_ < css_.size()) {
      out.push_back(rule());
      skip_space_and_comments();
    }
    return out;
  }

 private:
  StyleRule rule() {
    if (css_[pos_] == '@') fail("at-rules are not supported");
    if (css_[pos_] != '.') fail("expected a class selector '.name'");
    ++pos_;
    StyleRule r;
    r.class_name = ident();
    skip_space_and_comments();
    if (pos_ >= css_.size()) fail("expected '{'");
    if (css_[pos_] == ',') fail("selector lists are not supported");
    if (css_[pos_] != '{') fail("only single class selectors are supported");
    ++pos_;
    const auto body_start = pos_;
    while (pos_ < css_.size() && css_[pos_] != '}') {
      if (css_[pos_] == '{') fail("nested block in declarations");
      if (css_[pos_] == '"' || css_[pos_] == '\'') {
        skip_string();
      } else if (css_.substr(pos_, 2) == "/*") {
        skip_comment();
      } else {
        advance();
      }
    }
    if (pos_ >= css_.size()) fail("unterminated rule, expected '}'");
    r.declarations = trim(css_.substr(body_start, pos_ - body_start));
    ++pos_;
    return r;
  }

  std::string ident() {
    const auto start = pos_;
    if (pos_ < css_.size() && css_[pos_] == '-') ++pos_;
    if (pos_ >= css_.size() || !(is_name_start(css_[pos_]))) fail("expected a class name");
    while (pos_ < css_.size() && is_name_char(css_[pos_])) ++pos_;
    return std::string(css_.substr(start, pos_ - start));
  }

  static bool is_name_start(char ch) {
    const auto c = static_cast<unsigned char>(ch);
    return std::isalpha(c) || c == '_' || c >= 0x80;
  }
  static bool is_name_char(char ch) {
    const auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
  }

  static std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
  }

  void skip_space_and_comments() {
    while (pos_ < css_.size()) {
      if (std::isspace(static_cast<unsigned char>(css_[pos_]))) {
        advance();
      } else if (css_.substr(pos_, 2) == "/*") {
        skip_comment();
      } else {
        break;
      }
    }
  }

  void skip_comment() {
    const auto close = css_.find("*/", pos_ + 2);
    if (close == std::string_view::npos) fail("unterminated comment");
    while (pos_ < close + 2) advance();
  }

  void skip_string() {
    const char quote = css_[pos_];
    advance();
    while (pos_ < css_.size() && css_[pos_] != quote) {
      if (css_[pos_] == '\\') advance();
      if (pos_ < css_.size()) advance();
    }
    if (pos_ >= css_.size()) fail("unterminated string");
    advance();
  }

  void advance() {
    if (css_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::CssSyntax, message, SourcePosition{line_, pos_ - line_start_ + 1});
  }

  std::string_view css_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

}  // namespace

std::vector<StyleRule> parse_stylesheet(std::string_view css) { return CssReader(css).rules(); }

std::string select_style_declarations(std::string_view css, std::string_view class_name) {
  for (auto& rule : parse_stylesheet(css)) {
    if (rule.class_name == class_name) return std::move(rule.declarations);
  }
  throw Error(ErrorCode::NotFound, "no rule for class ." + std::string(class_name));
}

}  // namespace oakit
