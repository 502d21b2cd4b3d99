#include "oakit/core.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>

#include "oakit/error.hpp"
#include "oakit/specifiers.hpp"
#include "oakit/vocab.hpp"
#include "report_sink.hpp"

namespace oakit {

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const auto& e) { return e.severity == Severity::Error; }));
}

std::size_t ValidationReport::warning_count() const { return entries.size() - error_count(); }

bool ValidationReport::has_code(std::string_view code) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const auto& e) { return e.code == code; });
}

// ---------------------------------------------------------------------------

MotivationRegistry MotivationRegistry::defaults() {
  MotivationRegistry r;
  r.add(vocab::oa_editing);
  r.add(vocab::oa_tagging);
  return r;
}

namespace {

std::optional<Iri> parse_registry_token(std::string_view token) {
  if (token.size() >= 2 && token.front() == '<' && token.back() == '>') {
    return Iri{std::string(token.substr(1, token.size() - 2))};
  }
  if (auto expanded = vocab::expand_prefixed(token)) return expanded;
  Iri iri{std::string(token)};
  if (iri.is_absolute()) return iri;
  return std::nullopt;
}

}  // namespace

MotivationRegistry MotivationRegistry::parse(std::string_view text) {
  MotivationRegistry r;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      // A '#' inside an IRI is not a comment: only treat it as one at the
      // start of a token.
      if (hash == 0 || std::isspace(static_cast<unsigned char>(line[hash - 1]))) {
        line.erase(hash);
      }
    }
    std::vector<Iri> iris;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const auto begin = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const auto token = std::string_view(line).substr(begin, i - begin);
      auto iri = parse_registry_token(token);
      if (!iri) {
        throw Error(ErrorCode::SyntaxError, "not an IRI: " + std::string(token),
                    SourcePosition{line_no, begin + 1});
      }
      iris.push_back(std::move(*iri));
    }
    if (iris.empty()) continue;
    Iri head = iris.front();
    iris.erase(iris.begin());
    r.add(std::move(head), std::move(iris));
  }
  return r;
}

void MotivationRegistry::add(Iri iri, std::vector<Iri> broader) {
  auto& slot = direct_[std::move(iri)];
  for (auto& b : broader) {
    if (std::find(slot.begin(), slot.end(), b) == slot.end()) slot.push_back(std::move(b));
  }
}

const std::vector<Iri>& MotivationRegistry::direct_broader(const Iri& iri) const {
  static const std::vector<Iri> kNone;
  auto it = direct_.find(iri);
  return it == direct_.end() ? kNone : it->second;
}

namespace {

void close_over(const Iri& node, const MotivationRegistry& registry, std::vector<Iri>& stack,
                std::vector<Iri>& out) {
  for (const auto& parent : registry.direct_broader(node)) {
    if (std::find(stack.begin(), stack.end(), parent) != stack.end()) {
      throw Error(ErrorCode::CycleDetected, "broader chain revisits " + parent.value);
    }
    stack.push_back(parent);
    if (std::find(out.begin(), out.end(), parent) == out.end()) out.push_back(parent);
    close_over(parent, registry, stack, out);
    stack.pop_back();
  }
}

}  // namespace

Motivation resolve_motivation(const Iri& iri, const MotivationRegistry& registry) {
  Motivation m{iri, {}};
  std::vector<Iri> stack{iri};
  close_over(iri, registry, stack, m.broader);
  return m;
}

// ---------------------------------------------------------------------------

std::string_view to_string(BodyRole role) {
  switch (role) {
    case BodyRole::Comment: return "Comment";
    case BodyRole::TextualTag: return "TextualTag";
    case BodyRole::SemanticTag: return "SemanticTag";
  }
  return "?";
}

BodyRole classify_body(const ResourceRef& body) {
  if (const auto* text = std::get_if<EmbeddedText>(&body.value)) {
    return text->classes.contains(vocab::oa_Tag) ? BodyRole::TextualTag : BodyRole::Comment;
  }
  if (const auto* ext = std::get_if<ExternalResource>(&body.value)) {
    return ext->classes.contains(vocab::oa_Tag) ? BodyRole::SemanticTag : BodyRole::Comment;
  }
  throw Error(ErrorCode::UnsupportedRole,
              "only embedded or external leaf bodies can be classified");
}

bool is_iso8601_timestamp(std::string_view text) {
  static const std::regex kShape(
      R"(\d{4}-(0[1-9]|1[0-2])-(0[1-9]|[12]\d|3[01]))"
      R"((T([01]\d|2[0-3]):[0-5]\d(:[0-5]\d(\.\d+)?)?(Z|[+-]([01]\d|2[0-3]):?[0-5]\d)?)?)");
  return std::regex_match(text.begin(), text.end(), kShape);
}

// ---------------------------------------------------------------------------
// validate

namespace {

bool is_css_class_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-') ++i;
  if (i >= s.size()) return false;
  auto first = static_cast<unsigned char>(s[i]);
  if (!(std::isalpha(first) || first == '_' || first >= 0x80)) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
  });
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class Validator {
 public:
  Validator(const Annotation& a, const MotivationRegistry& registry)
      : annotation_(a), registry_(registry) {}

  ValidationReport run() && {
    sink_.next_node();
    if (annotation_.targets.empty()) {
      sink_.error("missing-target", "targets", "an annotation needs at least one target");
    }
    if (annotation_.annotated_at && !is_iso8601_timestamp(*annotation_.annotated_at)) {
      sink_.error("timestamp-format", "annotatedAt",
                  "not an ISO-8601 timestamp: " + *annotation_.annotated_at);
    }
    for (std::size_t i = 0; i < annotation_.motivations.size(); ++i) {
      check_motivation(annotation_.motivations[i], "motivations[" + std::to_string(i) + "]");
    }
    if (annotation_.styled_by) check_style(*annotation_.styled_by);
    for (std::size_t i = 0; i < annotation_.bodies.size(); ++i) {
      check_resource(annotation_.bodies[i], "bodies[" + std::to_string(i) + "]");
    }
    for (std::size_t i = 0; i < annotation_.targets.size(); ++i) {
      check_resource(annotation_.targets[i], "targets[" + std::to_string(i) + "]");
    }
    return std::move(sink_).finish();
  }

 private:
  void check_motivation(const Iri& iri, const std::string& path) {
    if (!iri.is_absolute()) {
      sink_.error("invalid-iri", path, "motivation is not an absolute IRI: " + iri.value);
      return;
    }
    if (!registry_.contains(iri)) {
      sink_.warning("unknown-motivation", path,
                    "motivation not in registry and has no broader links: " + iri.value);
      return;
    }
    try {
      resolve_motivation(iri, registry_);
    } catch (const Error& e) {
      sink_.error("motivation-cycle", path, e.detail());
    }
  }

  void check_style(const StyleRef& style) {
    if (const auto* css = std::get_if<EmbeddedCss>(&style)) {
      try {
        parse_stylesheet(css->chars);
      } catch (const Error& e) {
        sink_.error("css-syntax", "styledBy", e.what());
      }
    }
  }

  void check_resource(const ResourceRef& ref, const std::string& path) {
    sink_.next_node();
    if (const auto* c = std::get_if<ResourceConstruct>(&ref.value)) {
      if (c->items.empty()) {
        sink_.error("empty-construct", path,
                    std::string(to_string(c->kind)) + " " + to_string(c->id) + " has no items");
      }
      for (std::size_t i = 0; i < c->items.size(); ++i) {
        check_resource(c->items[i], path + ".items[" + std::to_string(i) + "]");
      }
      return;
    }
    if (const auto* sr = std::get_if<SpecificResource>(&ref.value)) check_specific(*sr, path);
  }

  void check_specific(const SpecificResource& sr, const std::string& path) {
    if (sr.source.id.value.find('#') != std::string::npos) {
      sink_.error("source-fragment", path + ".source",
                  "source must not carry a fragment: " + sr.source.id.value);
    }
    if (sr.style_class) {
      if (!is_css_class_token(*sr.style_class)) {
        sink_.error("style-class-token", path + ".styleClass",
                    "not a CSS class token: \"" + *sr.style_class + "\"");
      }
      if (!annotation_.styled_by) {
        sink_.warning("style-class-unstyled", path + ".styleClass",
                      "styleClass set but the annotation has no styledBy");
      }
    }
    if (sr.selector) detail::check_selector(*sr.selector, path + ".selector", sink_);
    if (sr.state) check_state(*sr.state, path + ".state");
  }

  void check_state(const State& state, const std::string& path) {
    sink_.next_node();
    if (const auto* t = std::get_if<TimeState>(&state.kind)) {
      if (!t->when && t->cached_copies.empty()) {
        sink_.error("empty-state", path, "TimeState needs a time or a cached copy");
      }
      if (t->when && !is_iso8601_timestamp(*t->when)) {
        sink_.error("timestamp-format", path + ".when", "not an ISO-8601 timestamp: " + *t->when);
      }
    } else if (const auto* h = std::get_if<HttpRequestState>(&state.kind)) {
      std::set<std::string> seen;
      for (const auto& [name, value] : h->headers) {
        if (!seen.insert(lowercase(name)).second) {
          sink_.error("duplicate-header", path, "header repeated: " + name);
        }
      }
    }
  }

  const Annotation& annotation_;
  const MotivationRegistry& registry_;
  detail::ReportSink sink_;
};

}  // namespace

ValidationReport validate(const Annotation& annotation, const MotivationRegistry& registry) {
  return Validator(annotation, registry).run();
}

// ---------------------------------------------------------------------------

NodeMinter::NodeMinter(std::string blank_prefix)
    : blank_prefix_(std::move(blank_prefix)), rng_(std::random_device{}()) {}

NodeMinter::NodeMinter(std::string blank_prefix, std::uint64_t seed)
    : blank_prefix_(std::move(blank_prefix)), rng_(seed) {}

std::string NodeMinter::uuid4() {
  std::uint64_t hi = rng_();
  std::uint64_t lo = rng_();
  hi = (hi & 0xFFFFFFFFFFFF0FFFULL) | 0x0000000000004000ULL;  // version 4
  lo = (lo & 0x3FFFFFFFFFFFFFFFULL) | 0x8000000000000000ULL;  // RFC 4122 variant
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(36);
  auto emit = [&](std::uint64_t v, int from_nibble, int count) {
    for (int i = 0; i < count; ++i) {
      out += kHex[(v >> (4 * (from_nibble - i))) & 0xF];
    }
  };
  emit(hi, 15, 8);
  out += '-';
  emit(hi, 7, 4);
  out += '-';
  emit(hi, 3, 4);
  out += '-';
  emit(lo, 15, 4);
  out += '-';
  emit(lo, 11, 12);
  return out;
}

NodeId NodeMinter::mint(const MintStrategy& strategy) {
  if (std::holds_alternative<BlankStrategy>(strategy)) {
    return BlankNode{blank_prefix_ + std::to_string(counter_++)};
  }
  if (std::holds_alternative<UuidUrnStrategy>(strategy)) {
    return Iri{"urn:uuid:" + uuid4()};
  }
  const auto& base = std::get<SkolemStrategy>(strategy).base;
  if (base.value.empty() || base.value.back() != '/') {
    throw Error(ErrorCode::InvalidArgument, "skolem base must end with '/': " + base.value);
  }
  return Iri{base.value + "genid-" + uuid4()};
}

}  // namespace oakit
