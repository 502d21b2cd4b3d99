#include "oakit/model.hpp"

#include "oakit/vocab.hpp"

namespace oakit {

namespace vocab {

std::optional<Iri> expand_prefixed(std::string_view name) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto prefix = name.substr(0, colon);
  for (const auto& [short_name, ns] : kNamespaceTable) {
    if (short_name == prefix) return term(ns, name.substr(colon + 1));
  }
  return std::nullopt;
}

}  // namespace vocab

std::string_view to_string(ConstructKind kind) {
  switch (kind) {
    case ConstructKind::Choice: return "Choice";
    case ConstructKind::Composite: return "Composite";
    case ConstructKind::List: return "List";
  }
  return "?";
}

bool EmbeddedText::is_textual_format() const {
  return format && format->starts_with("text/");
}

std::set<Iri> EmbeddedText::effective_classes() const {
  auto out = classes;
  out.insert(vocab::cnt_ContentAsText);
  if (is_textual_format()) out.insert(vocab::dctypes_Text);
  return out;
}

bool EmbeddedText::operator==(const EmbeddedText& other) const {
  return id == other.id && chars == other.chars && format == other.format &&
         language == other.language && extras == other.extras &&
         effective_classes() == other.effective_classes();
}

NodeId ResourceRef::node_id() const {
  return std::visit([](const auto& v) -> NodeId { return v.id; }, value);
}

ResourceRef external(Iri id, std::set<Iri> classes, std::optional<std::string> format) {
  return ResourceRef{ExternalResource{std::move(id), std::move(classes), std::move(format), {}}};
}

ResourceRef embedded_text(NodeId id, std::string chars, std::set<Iri> classes,
                          std::optional<std::string> format) {
  EmbeddedText body;
  body.id = std::move(id);
  body.chars = std::move(chars);
  body.classes = std::move(classes);
  body.format = std::move(format);
  return ResourceRef{std::move(body)};
}

ResourceRef specific(SpecificResource sr) { return ResourceRef{std::move(sr)}; }

ResourceRef construct(NodeId id, ConstructKind kind, std::vector<ResourceRef> items) {
  return ResourceRef{ResourceConstruct{std::move(id), kind, std::move(items), {}}};
}

}  // namespace oakit
