#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oakit {

enum class ErrorCode {
  SyntaxError,
  NotAnAnnotation,
  MalformedStructure,
  UnsupportedRole,
  CycleDetected,
  SourceHasFragment,
  EmptyFragmentValue,
  FragmentHash,
  NoFragment,
  NotFound,
  CssSyntax,
  OutOfRange,
  AmbiguousMatch,
  UnsupportedDimension,
  MalformedFragment,
  EmptyConstruct,
  NoAnnotations,
  InvalidUtf8,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// 1-based position inside a text input.
struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
  bool operator==(const SourcePosition&) const = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourcePosition> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourcePosition>& position() const noexcept { return position_; }
  /// The message without the code/position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<SourcePosition> position_;
  std::string detail_;
};

/// Raised by text-quote anchoring when scoring leaves more than one
/// occurrence; carries every tied start offset (code points).
class AmbiguousMatchError : public Error {
 public:
  AmbiguousMatchError(std::vector<std::size_t> offsets, std::size_t length);

  const std::vector<std::size_t>& offsets() const noexcept { return offsets_; }
  std::size_t length() const noexcept { return length_; }

 private:
  std::vector<std::size_t> offsets_;
  std::size_t length_;
};

}  // namespace oakit
