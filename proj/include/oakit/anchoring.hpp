#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "oakit/model.hpp"

namespace oakit {

/// A local document addressed in Unicode code points.
class TextDocument {
 public:
  /// Decodes UTF-8; throws Error(InvalidUtf8).
  TextDocument(Iri id, std::string_view utf8);

  const Iri& id() const noexcept { return id_; }
  const std::u32string& content() const noexcept { return content_; }
  std::size_t length() const noexcept { return content_.size(); }
  /// UTF-8 of content[start, end).
  std::string slice(std::size_t start, std::size_t end) const;

 private:
  Iri id_;
  std::u32string content_;
};

std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view text);

enum class AnchorMethod { Position, Quote };

std::string_view to_string(AnchorMethod method);

struct AnchorResult {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;
  AnchorMethod method = AnchorMethod::Position;

  bool operator==(const AnchorResult&) const = default;
};

/// Throws OutOfRange when the span leaves the document, InvalidArgument
/// when start > end.
AnchorResult resolve_text_position(const TextDocument& doc, const TextPositionSelector& sel);

/// Exact matching only. Each occurrence of `exact` scores one point for a
/// matching prefix and one for a matching suffix; the unique best wins.
/// Throws NotFound, or AmbiguousMatchError with all tied offsets.
AnchorResult resolve_text_quote(const TextDocument& doc, const TextQuoteSelector& sel);

/// Quote of [start, end) with up to context_len code points either side.
/// Context clipped to nothing is left absent. Throws OutOfRange.
TextQuoteSelector make_text_quote(const TextDocument& doc, std::size_t start, std::size_t end,
                                  std::size_t context_len);

TextPositionSelector make_text_position(const TextDocument& doc, std::size_t start,
                                        std::size_t end);

// ---------------------------------------------------------------------------
// Media fragments (xywh and t only)

struct SpatialPx {
  unsigned long long x = 0, y = 0, w = 0, h = 0;
  bool operator==(const SpatialPx&) const = default;
};

struct SpatialPercent {
  double x = 0, y = 0, w = 0, h = 0;
  bool operator==(const SpatialPercent&) const = default;
};

/// Normal play time in seconds.
struct TemporalFragment {
  double start = 0;
  std::optional<double> end;
  bool operator==(const TemporalFragment&) const = default;
};

using MediaFragment = std::variant<SpatialPx, SpatialPercent, TemporalFragment>;

/// Throws UnsupportedDimension for other keys, MalformedFragment otherwise.
MediaFragment parse_media_fragment(std::string_view value);

}  // namespace oakit
