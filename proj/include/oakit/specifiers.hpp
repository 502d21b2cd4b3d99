#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oakit/core.hpp"
#include "oakit/model.hpp"

namespace oakit {

/// source + "#" + value, byte for byte. Throws SourceHasFragment,
/// EmptyFragmentValue or FragmentHash.
Iri reconstruct_fragment_uri(std::string_view source, const FragmentSelector& selector);

/// Splits at the first '#'. Throws NoFragment when there is no '#' or nothing
/// after it.
std::pair<Iri, FragmentSelector> decompose_fragment_uri(
    std::string_view uri, std::optional<Iri> conforms_to = std::nullopt);

/// Reports breaches of the selector invariants (position-order,
/// fragment-hash, empty-fragment, empty-exact, empty-construct), recursing
/// into selector constructs.
ValidationReport validate_selector(const Selector& selector);

/// Maps media types to the fragment specification their fragments follow.
///
/// Lookups try the exact type, then "major/*".
class ConformsToTable {
 public:
  /// text/plain -> RFC 5147; image/*, video/*, audio/* -> Media Fragments.
  static ConformsToTable defaults();
  /// Lines of `media-type fragment-spec-iri`; '#' starts a comment.
  static ConformsToTable parse(std::string_view text);

  void add(std::string media_type, Iri spec);
  std::optional<Iri> lookup(std::string_view media_type) const;

 private:
  std::vector<std::pair<std::string, Iri>> rows_;
};

// ---------------------------------------------------------------------------
// Restricted CSS: a sequence of `.class { declarations }` rules.

struct StyleRule {
  std::string class_name;
  std::string declarations;
};

/// Throws Error(CssSyntax) with the offending position for anything outside
/// the class-selector grammar (comma lists, at-rules, combinators, ...).
std::vector<StyleRule> parse_stylesheet(std::string_view css);

/// Declarations of the first rule for `.class_name`, trimmed. Throws
/// CssSyntax or NotFound.
std::string select_style_declarations(std::string_view css, std::string_view class_name);

}  // namespace oakit
