#include "oakit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "oakit/anchoring.hpp"
#include "oakit/annotea.hpp"
#include "oakit/core.hpp"
#include "oakit/error.hpp"
#include "oakit/multiplicity.hpp"
#include "oakit/specifiers.hpp"
#include "oakit/turtle.hpp"

namespace oakit::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "oa-kit/1";

// Raised for unreadable inputs; maps to the usage exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(Json finding) {
    if (finding.contains("severity")) {
      (finding["severity"] == "error" ? errors_ : warnings_)++;
    }
    findings_.push_back(std::move(finding));
  }

  Json& extra() { return extra_; }
  std::size_t errors() const { return errors_; }

  void write(std::ostream& out, bool failed) const {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command_;
    j["status"] = failed || errors_ > 0 ? "errors" : "ok";
    j["errors"] = errors_;
    j["warnings"] = warnings_;
    for (const auto& [k, v] : extra_.items()) j[k] = v;
    j["findings"] = findings_.empty() ? Json::array() : findings_;
    out << j.dump(2) << "\n";
  }

 private:
  std::string command_;
  std::size_t errors_ = 0;
  std::size_t warnings_ = 0;
  Json findings_ = Json::array();
  Json extra_ = Json::object();
};

Json syntax_finding(const Error& e) {
  Json f;
  f["severity"] = "error";
  f["code"] = "syntax-error";
  if (e.position()) {
    f["line"] = e.position()->line;
    f["column"] = e.position()->column;
  }
  f["message"] = e.detail();
  return f;
}

// Parses a Turtle file; on a syntax error records it and returns nullopt.
std::optional<Graph> load_graph(const std::string& path, Report& report) {
  const auto text = read_file(path);
  try {
    return parse_turtle(text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SyntaxError) throw;
    report.add(syntax_finding(e));
    return std::nullopt;
  }
}

struct Lifted {
  NodeId root;
  std::optional<Annotation> annotation;
};

// Lifts every annotation root, recording malformed ones as error findings.
std::vector<Lifted> lift_all(const Graph& g, Report& report) {
  std::vector<Lifted> out;
  const auto roots = annotation_roots(g);
  if (roots.empty()) {
    report.add(Json{{"severity", "error"},
                    {"code", "no-annotation"},
                    {"message", "no node is typed oa:Annotation"}});
  }
  for (const auto& root : roots) {
    try {
      out.push_back({root, lift(g, root)});
    } catch (const Error& e) {
      report.add(Json{{"annotation", to_string(root)},
                      {"severity", "error"},
                      {"code", "malformed-structure"},
                      {"message", e.detail()}});
      out.push_back({root, std::nullopt});
    }
  }
  return out;
}

Json describe_leaf(const ResourceRef& ref) {
  Json j;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ExternalResource>) {
          j["kind"] = "External";
          j["id"] = r.id.value;
        } else if constexpr (std::is_same_v<T, EmbeddedText>) {
          j["kind"] = "EmbeddedText";
          j["id"] = to_string(r.id);
          j["chars"] = r.chars;
        } else if constexpr (std::is_same_v<T, SpecificResource>) {
          j["kind"] = "SpecificResource";
          j["id"] = to_string(r.id);
          j["source"] = r.source.id.value;
        } else {
          j["kind"] = "Construct";
          j["id"] = to_string(r.id);
        }
      },
      ref.value);
  return j;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& file, const std::string& registry_file, std::ostream& out) {
  Report report("validate");
  const auto registry = registry_file.empty()
                            ? MotivationRegistry::defaults()
                            : MotivationRegistry::parse(read_file(registry_file));
  auto graph = load_graph(file, report);
  if (!graph) {
    report.write(out, true);
    return kParse;
  }
  for (const auto& item : lift_all(*graph, report)) {
    if (!item.annotation) continue;
    for (const auto& e : validate(*item.annotation, registry).entries) {
      report.add(Json{{"annotation", to_string(item.root)},
                      {"severity", std::string(to_string(e.severity))},
                      {"code", e.code},
                      {"path", e.path},
                      {"message", e.message}});
    }
  }
  report.write(out, false);
  return report.errors() > 0 ? kValidation : kOk;
}

int cmd_convert_annotea(const std::string& file, const std::string& out_file, std::ostream& out) {
  Report report("convert annotea");
  auto graph = load_graph(file, report);
  if (!graph) {
    report.write(out, true);
    return kParse;
  }
  AnnoteaConversion conversion;
  try {
    conversion = convert_annotea(*graph);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoAnnotations) throw;
    report.add(Json{{"severity", "error"}, {"code", "no-annotations"}, {"message", e.detail()}});
    report.write(out, true);
    return kValidation;
  }
  Graph converted;
  for (const auto& a : conversion.annotations) lower_into(converted, a);
  for (const auto& e : conversion.report.entries) {
    report.add(Json{{"severity", std::string(to_string(e.severity))},
                    {"code", e.code},
                    {"subject", e.path},
                    {"message", e.message}});
  }
  report.extra()["annotations"] = conversion.annotations.size();
  const auto turtle = serialize_turtle(converted);
  if (out_file.empty()) {
    report.extra()["turtle"] = turtle;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw InputError("cannot write " + out_file);
    f << turtle;
    report.extra()["output"] = out_file;
  }
  report.write(out, false);
  return kOk;
}

// -- anchor -----------------------------------------------------------------

class Anchorer {
 public:
  Anchorer(const std::map<std::string, TextDocument>& docs, Report& report)
      : docs_(docs), report_(report) {}

  bool failed() const { return failed_; }

  void annotation(const NodeId& root, const Annotation& a) {
    root_ = to_string(root);
    for (std::size_t i = 0; i < a.targets.size(); ++i) {
      resource(a.targets[i], "targets[" + std::to_string(i) + "]");
    }
  }

 private:
  void resource(const ResourceRef& ref, const std::string& path) {
    if (const auto* c = std::get_if<ResourceConstruct>(&ref.value)) {
      for (std::size_t i = 0; i < c->items.size(); ++i) {
        resource(c->items[i], path + ".items[" + std::to_string(i) + "]");
      }
    } else if (const auto* sr = std::get_if<SpecificResource>(&ref.value)) {
      if (sr->selector) selector(*sr->selector, sr->source.id, path + ".selector");
    } else if (const auto* ext = std::get_if<ExternalResource>(&ref.value)) {
      if (ext->id.value.find('#') != std::string::npos) fragment_uri(ext->id, path);
    }
  }

  void selector(const Selector& s, const Iri& source, const std::string& path) {
    Json f = base(path, source);
    if (const auto* c = std::get_if<SelectorConstruct>(&s.kind)) {
      // Choice alternatives are equivalent descriptions; anchor the default.
      std::vector<Selector> leaves;
      try {
        leaves = flatten_leaves(*c);
      } catch (const Error& e) {
        fail(std::move(f), e);
        return;
      }
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        selector(leaves[i], source, path + ".leaves[" + std::to_string(i) + "]");
      }
      return;
    }
    if (const auto* frag = std::get_if<FragmentSelector>(&s.kind)) {
      f["selector"] = "FragmentSelector";
      media_fragment(std::move(f), frag->value);
      return;
    }
    const auto* pos = std::get_if<TextPositionSelector>(&s.kind);
    const auto* quote = std::get_if<TextQuoteSelector>(&s.kind);
    if (!pos && !quote) {
      f["selector"] = std::holds_alternative<SvgSelector>(s.kind) ? "SvgSelector" : "Opaque";
      f["status"] = "unsupported";
      f["severity"] = "warning";
      f["code"] = "unsupported-selector";
      report_.add(std::move(f));
      return;
    }
    f["selector"] = pos ? "TextPositionSelector" : "TextQuoteSelector";
    auto doc = docs_.find(source.value);
    if (doc == docs_.end()) {
      f["status"] = "unbound";
      f["severity"] = "warning";
      f["code"] = "unbound-source";
      f["message"] = "no --doc binding for " + source.value;
      report_.add(std::move(f));
      return;
    }
    try {
      const auto result = pos ? resolve_text_position(doc->second, *pos)
                              : resolve_text_quote(doc->second, *quote);
      f["status"] = "anchored";
      f["method"] = std::string(to_string(result.method));
      f["start"] = result.start;
      f["end"] = result.end;
      f["text"] = result.text;
      report_.add(std::move(f));
    } catch (const AmbiguousMatchError& e) {
      f["offsets"] = e.offsets();
      fail(std::move(f), e);
    } catch (const Error& e) {
      fail(std::move(f), e);
    }
  }

  void fragment_uri(const Iri& uri, const std::string& path) {
    const auto [source, frag] = decompose_fragment_uri(uri.value);
    Json f = base(path, source);
    f["selector"] = "FragmentURI";
    media_fragment(std::move(f), frag.value);
  }

  void media_fragment(Json f, const std::string& value) {
    f["value"] = value;
    try {
      const auto region = parse_media_fragment(value);
      f["status"] = "parsed";
      std::visit(
          [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SpatialPx>) {
              f["region"] = Json{{"unit", "pixel"}, {"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}};
            } else if constexpr (std::is_same_v<T, SpatialPercent>) {
              f["region"] = Json{{"unit", "percent"}, {"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}};
            } else {
              Json t{{"unit", "npt"}, {"start", r.start}};
              t["end"] = r.end ? Json(*r.end) : Json(nullptr);
              f["region"] = std::move(t);
            }
          },
          region);
      report_.add(std::move(f));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnsupportedDimension) {
        f["status"] = "unsupported";
        f["severity"] = "warning";
        f["code"] = "unsupported-fragment";
        f["message"] = e.detail();
        report_.add(std::move(f));
      } else {
        fail(std::move(f), e);
      }
    }
  }

  Json base(const std::string& path, const Iri& source) const {
    return Json{{"annotation", root_}, {"path", path}, {"source", source.value}};
  }

  void fail(Json f, const Error& e) {
    f["status"] = "failed";
    f["severity"] = "error";
    f["code"] = std::string(to_string(e.code()));
    f["message"] = e.detail();
    report_.add(std::move(f));
    failed_ = true;
  }

  const std::map<std::string, TextDocument>& docs_;
  Report& report_;
  std::string root_;
  bool failed_ = false;
};

int cmd_anchor(const std::string& file, const std::vector<std::string>& bindings,
               std::ostream& out, std::ostream& err) {
  std::map<std::string, TextDocument> docs;
  for (const auto& b : bindings) {
    const auto eq = b.rfind('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == b.size()) {
      err << "error: --doc expects <source-iri>=<path>, got '" << b << "'\n";
      return kUsage;
    }
    const auto iri = b.substr(0, eq);
    try {
      docs.insert_or_assign(iri, TextDocument(Iri{iri}, read_file(b.substr(eq + 1))));
    } catch (const Error& e) {
      err << "error: " << b.substr(eq + 1) << ": " << e.what() << "\n";
      return kUsage;
    }
  }
  Report report("anchor");
  auto graph = load_graph(file, report);
  if (!graph) {
    report.write(out, true);
    return kParse;
  }
  Anchorer anchorer(docs, report);
  for (const auto& item : lift_all(*graph, report)) {
    if (item.annotation) anchorer.annotation(item.root, *item.annotation);
  }
  report.write(out, anchorer.failed());
  if (anchorer.failed()) return kAnchoring;
  return report.errors() > 0 ? kValidation : kOk;
}

int cmd_expand(const std::string& file, bool all_alternatives, std::ostream& out) {
  Report report("expand");
  auto graph = load_graph(file, report);
  if (!graph) {
    report.write(out, true);
    return kParse;
  }
  report.extra()["mode"] = all_alternatives ? "all-alternatives" : "default";
  for (const auto& item : lift_all(*graph, report)) {
    if (!item.annotation) continue;
    const auto root = to_string(item.root);
    const auto validation = validate(*item.annotation);
    if (validation.error_count() > 0) {
      for (const auto& e : validation.entries) {
        if (e.severity != Severity::Error) continue;
        report.add(Json{{"annotation", root}, {"severity", "error"}, {"code", e.code},
                        {"path", e.path}, {"message", e.message}});
      }
      continue;
    }
    const auto interpretations =
        expand(*item.annotation, all_alternatives ? ExpandMode::AllAlternatives : ExpandMode::Default);
    for (const auto& in : interpretations) {
      Json f{{"annotation", root}};
      f["bodies"] = Json::array();
      for (const auto& b : in.bodies) f["bodies"].push_back(describe_leaf(b));
      f["targets"] = Json::array();
      for (const auto& t : in.targets) f["targets"].push_back(describe_leaf(t));
      f["targetSet"] = in.target_set_id ? Json(to_string(*in.target_set_id)) : Json(nullptr);
      report.add(std::move(f));
    }
  }
  report.write(out, false);
  return report.errors() > 0 ? kValidation : kOk;
}

void collect_tags(const ResourceRef& ref, std::map<std::pair<std::string, std::string>, std::size_t>& counts) {
  if (const auto* c = std::get_if<ResourceConstruct>(&ref.value)) {
    for (const auto& item : c->items) collect_tags(item, counts);
    return;
  }
  if (std::holds_alternative<SpecificResource>(ref.value)) return;
  const auto role = classify_body(ref);
  if (role == BodyRole::TextualTag) {
    ++counts[{"TextualTag", std::get<EmbeddedText>(ref.value).chars}];
  } else if (role == BodyRole::SemanticTag) {
    ++counts[{"SemanticTag", std::get<ExternalResource>(ref.value).id.value}];
  }
}

int cmd_tags(const std::string& file, std::ostream& out) {
  Report report("tags");
  auto graph = load_graph(file, report);
  if (!graph) {
    report.write(out, true);
    return kParse;
  }
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  for (const auto& item : lift_all(*graph, report)) {
    if (!item.annotation) continue;
    for (const auto& body : item.annotation->bodies) collect_tags(body, counts);
  }
  for (const auto& [key, n] : counts) {
    report.add(Json{{"role", key.first}, {"tag", key.second}, {"count", n}});
  }
  report.write(out, false);
  return report.errors() > 0 ? kValidation : kOk;
}

int cmd_fragment_join(const std::string& source, const std::string& value, std::ostream& out,
                      std::ostream& err) {
  try {
    out << reconstruct_fragment_uri(source, FragmentSelector{value, std::nullopt}).value << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

int cmd_fragment_split(const std::string& uri, const std::string& media_type,
                       const std::string& table_file, std::ostream& out, std::ostream& err) {
  const auto table =
      table_file.empty() ? ConformsToTable::defaults() : ConformsToTable::parse(read_file(table_file));
  std::optional<Iri> conforms_to;
  if (!media_type.empty()) conforms_to = table.lookup(media_type);
  try {
    const auto [source, frag] = decompose_fragment_uri(uri, conforms_to);
    out << source.value << "\n" << frag.value << "\n";
    if (frag.conforms_to) out << frag.conforms_to->value << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open Annotation toolkit", "oakit"};
  app.require_subcommand(1);

  std::string file;
  std::string registry_file;
  auto* validate_cmd = app.add_subcommand("validate", "Validate every annotation in a Turtle file");
  validate_cmd->add_option("file", file, "Turtle file")->required();
  validate_cmd->add_option("--motivations", registry_file, "Motivation registry file");

  std::string out_file;
  auto* convert_cmd = app.add_subcommand("convert", "Convert legacy annotation formats");
  convert_cmd->require_subcommand(1);
  auto* annotea_cmd = convert_cmd->add_subcommand("annotea", "Convert Annotea RDF to Open Annotation");
  annotea_cmd->add_option("file", file, "Turtle file")->required();
  annotea_cmd->add_option("--out", out_file, "Write converted Turtle here instead of the report");

  std::vector<std::string> bindings;
  auto* anchor_cmd = app.add_subcommand("anchor", "Resolve selectors against local documents");
  anchor_cmd->add_option("file", file, "Turtle file")->required();
  anchor_cmd->add_option("--doc", bindings, "Bind <source-iri>=<path>")->take_all();

  bool all_alternatives = false;
  auto* expand_cmd = app.add_subcommand("expand", "List the body/target interpretations");
  expand_cmd->add_option("file", file, "Turtle file")->required();
  expand_cmd->add_flag("--all-alternatives", all_alternatives, "Branch on every Choice item");

  std::string source, value, uri, media_type, table_file;
  auto* fragment_cmd = app.add_subcommand("fragment", "Fragment URI utilities");
  fragment_cmd->require_subcommand(1);
  auto* join_cmd = fragment_cmd->add_subcommand("join", "source + '#' + value");
  join_cmd->add_option("source", source)->required();
  join_cmd->add_option("value", value)->required();
  auto* split_cmd = fragment_cmd->add_subcommand("split", "Split a fragment URI at the first '#'");
  split_cmd->add_option("uri", uri)->required();
  split_cmd->add_option("--media-type", media_type, "Media type used to pick dcterms:conformsTo");
  split_cmd->add_option("--conforms-table", table_file, "media-type -> specification table");

  auto* tags_cmd = app.add_subcommand("tags", "Count textual and semantic tags");
  tags_cmd->add_option("file", file, "Turtle file")->required();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, registry_file, out);
    if (annotea_cmd->parsed()) return cmd_convert_annotea(file, out_file, out);
    if (anchor_cmd->parsed()) return cmd_anchor(file, bindings, out, err);
    if (expand_cmd->parsed()) return cmd_expand(file, all_alternatives, out);
    if (join_cmd->parsed()) return cmd_fragment_join(source, value, out, err);
    if (split_cmd->parsed()) return cmd_fragment_split(uri, media_type, table_file, out, err);
    if (tags_cmd->parsed()) return cmd_tags(file, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Registry / table files with syntax errors.
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SyntaxError ? kParse : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace oakit::cli
