#include "oakit/error.hpp"

namespace oakit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotAnAnnotation: return "NotAnAnnotation";
    case ErrorCode::MalformedStructure: return "MalformedStructure";
    case ErrorCode::UnsupportedRole: return "UnsupportedRole";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::SourceHasFragment: return "SourceHasFragment";
    case ErrorCode::EmptyFragmentValue: return "EmptyFragmentValue";
    case ErrorCode::FragmentHash: return "FragmentHash";
    case ErrorCode::NoFragment: return "NoFragment";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::CssSyntax: return "CssSyntax";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::MalformedFragment: return "MalformedFragment";
    case ErrorCode::EmptyConstruct: return "EmptyConstruct";
    case ErrorCode::NoAnnotations: return "NoAnnotations";
    case ErrorCode::InvalidUtf8: return "InvalidUtf8";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_what(ErrorCode code, const std::string& message,
                        const std::optional<SourcePosition>& position) {
  std::string out(to_string(code));
  if (position) {
    out += " at " + std::to_string(position->line) + ":" + std::to_string(position->column);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<SourcePosition> position)
    : std::runtime_error(format_what(code, message, position)),
      code_(code),
      position_(position),
      detail_(message) {}

AmbiguousMatchError::AmbiguousMatchError(std::vector<std::size_t> offsets, std::size_t length)
    : Error(ErrorCode::AmbiguousMatch,
            "quote matches " + std::to_string(offsets.size()) + " locations equally well"),
      offsets_(std::move(offsets)),
      length_(length) {}

}  // namespace oakit
