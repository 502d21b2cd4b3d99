#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "oakit/rdf.hpp"

namespace oakit::vocab {

inline constexpr std::string_view kOa = "http://www.w3.org/ns/oa#";
inline constexpr std::string_view kCnt = "http://www.w3.org/2011/content#";
inline constexpr std::string_view kDc = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";
inline constexpr std::string_view kDctypes = "http://purl.org/dc/dcmitype/";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kAnnotea = "http://www.w3.org/2000/10/annotation-ns#";
inline constexpr std::string_view kAo = "http://purl.org/ao/core/";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

/// Prefixes the serializer may emit, in header order.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 8> kNamespaceTable{{
    {"oa", kOa},
    {"cnt", kCnt},
    {"dc", kDc},
    {"dcterms", kDcterms},
    {"dctypes", kDctypes},
    {"rdf", kRdf},
    {"a", kAnnotea},
    {"ao", kAo},
}};

/// Expands "oa:editing" style names using kNamespaceTable.
std::optional<Iri> expand_prefixed(std::string_view name);

inline Iri term(std::string_view ns, std::string_view local) {
  std::string v(ns);
  v += local;
  return Iri{std::move(v)};
}

// rdf
inline const Iri rdf_type = term(kRdf, "type");
inline const Iri rdf_value = term(kRdf, "value");
inline const Iri rdf_first = term(kRdf, "first");
inline const Iri rdf_rest = term(kRdf, "rest");
inline const Iri rdf_nil = term(kRdf, "nil");
inline const Iri rdf_List = term(kRdf, "List");

// oa classes
inline const Iri oa_Annotation = term(kOa, "Annotation");
inline const Iri oa_SpecificResource = term(kOa, "SpecificResource");
inline const Iri oa_Tag = term(kOa, "Tag");
inline const Iri oa_Choice = term(kOa, "Choice");
inline const Iri oa_Composite = term(kOa, "Composite");
inline const Iri oa_List = term(kOa, "List");
inline const Iri oa_FragmentSelector = term(kOa, "FragmentSelector");
inline const Iri oa_TextPositionSelector = term(kOa, "TextPositionSelector");
inline const Iri oa_TextQuoteSelector = term(kOa, "TextQuoteSelector");
inline const Iri oa_SvgSelector = term(kOa, "SvgSelector");
inline const Iri oa_TimeState = term(kOa, "TimeState");
inline const Iri oa_HttpRequestState = term(kOa, "HttpRequestState");

// oa properties
inline const Iri oa_hasBody = term(kOa, "hasBody");
inline const Iri oa_hasTarget = term(kOa, "hasTarget");
inline const Iri oa_isMotivatedBy = term(kOa, "isMotivatedBy");
inline const Iri oa_styledBy = term(kOa, "styledBy");
inline const Iri oa_annotatedBy = term(kOa, "annotatedBy");
inline const Iri oa_annotatedAt = term(kOa, "annotatedAt");
inline const Iri oa_hasSource = term(kOa, "hasSource");
inline const Iri oa_hasSelector = term(kOa, "hasSelector");
inline const Iri oa_hasState = term(kOa, "hasState");
inline const Iri oa_hasScope = term(kOa, "hasScope");
inline const Iri oa_styleClass = term(kOa, "styleClass");
inline const Iri oa_item = term(kOa, "item");
inline const Iri oa_start = term(kOa, "start");
inline const Iri oa_end = term(kOa, "end");
inline const Iri oa_exact = term(kOa, "exact");
inline const Iri oa_prefix = term(kOa, "prefix");
inline const Iri oa_suffix = term(kOa, "suffix");
inline const Iri oa_when = term(kOa, "when");
inline const Iri oa_cachedSource = term(kOa, "cachedSource");

// motivations
inline const Iri oa_editing = term(kOa, "editing");
inline const Iri oa_tagging = term(kOa, "tagging");

// content in RDF, Dublin Core
inline const Iri cnt_ContentAsText = term(kCnt, "ContentAsText");
inline const Iri cnt_chars = term(kCnt, "chars");
inline const Iri dc_format = term(kDc, "format");
inline const Iri dcterms_conformsTo = term(kDcterms, "conformsTo");
inline const Iri dctypes_Text = term(kDctypes, "Text");
inline const Iri dctypes_Image = term(kDctypes, "Image");

inline const Iri xsd_integer = term(kXsd, "integer");

// Annotea
inline const Iri a_Annotation = term(kAnnotea, "Annotation");
inline const Iri a_annotates = term(kAnnotea, "annotates");
inline const Iri a_author = term(kAnnotea, "author");
inline const Iri a_body = term(kAnnotea, "body");
inline const Iri a_context = term(kAnnotea, "context");
inline const Iri a_created = term(kAnnotea, "created");
inline const Iri a_modified = term(kAnnotea, "modified");
inline const Iri a_related = term(kAnnotea, "related");

}  // namespace oakit::vocab
