#include "oakit/anchoring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "oakit/error.hpp"

namespace oakit {

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  auto bad = [&](const char* why) {
    throw Error(ErrorCode::InvalidUtf8, std::string(why) + " at byte " + std::to_string(i));
  };
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out += static_cast<char32_t>(b0);
      ++i;
      continue;
    }
    int extra = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
      extra = 1, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3, cp = b0 & 0x07, min = 0x10000;
    } else {
      bad("invalid lead byte");
    }
    if (i + static_cast<std::size_t>(extra) >= s.size()) bad("truncated sequence");
    for (int k = 1; k <= extra; ++k) {
      const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
      if ((b & 0xC0) != 0x80) bad("invalid continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) bad("invalid code point");
    out += cp;
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }
  return out;
}

TextDocument::TextDocument(Iri id, std::string_view utf8)
    : id_(std::move(id)), content_(decode_utf8(utf8)) {}

std::string TextDocument::slice(std::size_t start, std::size_t end) const {
  return encode_utf8(std::u32string_view(content_).substr(start, end - start));
}

std::string_view to_string(AnchorMethod method) {
  return method == AnchorMethod::Position ? "Position" : "Quote";
}

namespace {

void check_span(const TextDocument& doc, std::size_t start, std::size_t end) {
  if (start > end) {
    throw Error(ErrorCode::InvalidArgument,
                "span start " + std::to_string(start) + " > end " + std::to_string(end));
  }
  if (end > doc.length()) {
    throw Error(ErrorCode::OutOfRange, "span end " + std::to_string(end) +
                                           " beyond document length " +
                                           std::to_string(doc.length()));
  }
}

}  // namespace

AnchorResult resolve_text_position(const TextDocument& doc, const TextPositionSelector& sel) {
  if (sel.end > doc.length()) {
    throw Error(ErrorCode::OutOfRange, "end " + std::to_string(sel.end) +
                                           " beyond document length " +
                                           std::to_string(doc.length()));
  }
  const auto start = static_cast<std::size_t>(sel.start);
  const auto end = static_cast<std::size_t>(sel.end);
  check_span(doc, start, end);
  return AnchorResult{start, end, doc.slice(start, end), AnchorMethod::Position};
}

AnchorResult resolve_text_quote(const TextDocument& doc, const TextQuoteSelector& sel) {
  if (sel.exact.empty()) throw Error(ErrorCode::InvalidArgument, "exact text is empty");
  const std::u32string exact = decode_utf8(sel.exact);
  const std::optional<std::u32string> prefix =
      sel.prefix ? std::optional(decode_utf8(*sel.prefix)) : std::nullopt;
  const std::optional<std::u32string> suffix =
      sel.suffix ? std::optional(decode_utf8(*sel.suffix)) : std::nullopt;
  const std::u32string_view content = doc.content();

  int best = -1;
  std::vector<std::size_t> winners;
  for (auto at = content.find(exact); at != std::u32string_view::npos;
       at = content.find(exact, at + 1)) {
    int score = 0;
    if (prefix && at >= prefix->size() && content.substr(at - prefix->size(), prefix->size()) == *prefix) {
      ++score;
    }
    const auto after = at + exact.size();
    if (suffix && content.substr(after, suffix->size()) == *suffix) ++score;
    if (score > best) {
      best = score;
      winners.clear();
    }
    if (score == best) winners.push_back(at);
  }
  if (winners.empty()) throw Error(ErrorCode::NotFound, "quote not found: \"" + sel.exact + "\"");
  if (winners.size() > 1) throw AmbiguousMatchError(std::move(winners), exact.size());
  const auto start = winners.front();
  return AnchorResult{start, start + exact.size(), sel.exact, AnchorMethod::Quote};
}

TextQuoteSelector make_text_quote(const TextDocument& doc, std::size_t start, std::size_t end,
                                  std::size_t context_len) {
  check_span(doc, start, end);
  TextQuoteSelector q;
  q.exact = doc.slice(start, end);
  const auto pre_start = start >= context_len ? start - context_len : 0;
  if (pre_start < start) q.prefix = doc.slice(pre_start, start);
  const auto post_end = std::min(doc.length(), end + context_len);
  if (post_end > end) q.suffix = doc.slice(end, post_end);
  return q;
}

TextPositionSelector make_text_position(const TextDocument& doc, std::size_t start,
                                        std::size_t end) {
  check_span(doc, start, end);
  return TextPositionSelector{start, end};
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void malformed(std::string_view value, const std::string& why) {
  throw Error(ErrorCode::MalformedFragment, why + ": \"" + std::string(value) + "\"");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Non-negative decimal: digits with an optional fractional part.
std::optional<double> parse_decimal(std::string_view s) {
  const auto dot = s.find('.');
  const auto whole = s.substr(0, dot);
  if (!all_digits(whole)) return std::nullopt;
  if (dot != std::string_view::npos && !all_digits(s.substr(dot + 1))) return std::nullopt;
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

// npt-sec | npt-hhmmss | npt-mmss
std::optional<double> parse_npt(std::string_view s) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) return parse_decimal(parts[0]);
  auto two_digits = [](std::string_view p) { return p.size() == 2 && all_digits(p); };
  if (parts.size() == 2) {
    // mm:ss
    if (!two_digits(parts[0])) return std::nullopt;
    const auto sec = parse_decimal(parts[1]);
    if (!sec || parts[1].substr(0, parts[1].find('.')).size() != 2 || *sec >= 60) return std::nullopt;
    const auto minutes = std::stoi(std::string(parts[0]));
    if (minutes >= 60) return std::nullopt;
    return minutes * 60.0 + *sec;
  }
  if (parts.size() == 3) {
    // h:mm:ss
    if (!all_digits(parts[0]) || !two_digits(parts[1])) return std::nullopt;
    const auto sec = parse_decimal(parts[2]);
    if (!sec || parts[2].substr(0, parts[2].find('.')).size() != 2 || *sec >= 60) return std::nullopt;
    const auto minutes = std::stoi(std::string(parts[1]));
    if (minutes >= 60) return std::nullopt;
    return std::stod(std::string(parts[0])) * 3600.0 + minutes * 60.0 + *sec;
  }
  return std::nullopt;
}

MediaFragment parse_xywh(std::string_view full, std::string_view v) {
  bool percent = false;
  if (v.starts_with("percent:")) {
    percent = true;
    v.remove_prefix(8);
  } else if (v.starts_with("pixel:")) {
    v.remove_prefix(6);
  }
  const auto parts = split(v, ',');
  if (parts.size() != 4) malformed(full, "xywh needs exactly four values");
  if (!percent) {
    unsigned long long n[4];
    for (int i = 0; i < 4; ++i) {
      const auto p = parts[static_cast<std::size_t>(i)];
      auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), n[i]);
      if (!all_digits(p) || ec != std::errc{} || end != p.data() + p.size()) {
        malformed(full, "pixel values must be non-negative integers");
      }
    }
    return SpatialPx{n[0], n[1], n[2], n[3]};
  }
  double d[4];
  for (int i = 0; i < 4; ++i) {
    const auto value = parse_decimal(parts[static_cast<std::size_t>(i)]);
    if (!value || *value > 100.0) malformed(full, "percent values must lie in [0,100]");
    d[i] = *value;
  }
  return SpatialPercent{d[0], d[1], d[2], d[3]};
}

MediaFragment parse_time(std::string_view full, std::string_view v) {
  if (v.starts_with("npt:")) {
    v.remove_prefix(4);
  } else if (v.starts_with("smpte") || v.starts_with("clock:")) {
    throw Error(ErrorCode::UnsupportedDimension, "only npt time is supported: \"" + std::string(full) + "\"");
  }
  const auto parts = split(v, ',');
  if (parts.size() > 2) malformed(full, "t takes at most two values");
  TemporalFragment t;
  if (parts[0].empty()) {
    if (parts.size() != 2) malformed(full, "t needs a start or an end");
    t.start = 0;
  } else {
    const auto start = parse_npt(parts[0]);
    if (!start) malformed(full, "invalid start time");
    t.start = *start;
  }
  if (parts.size() == 2) {
    const auto end = parse_npt(parts[1]);
    if (!end) malformed(full, "invalid end time");
    if (*end < t.start) malformed(full, "end time before start time");
    t.end = *end;
  }
  return t;
}

}  // namespace

MediaFragment parse_media_fragment(std::string_view value) {
  if (value.empty()) malformed(value, "empty fragment");
  if (value.find('&') != std::string_view::npos) {
    throw Error(ErrorCode::UnsupportedDimension,
                "combined dimensions are not supported: \"" + std::string(value) + "\"");
  }
  const auto eq = value.find('=');
  if (eq == std::string_view::npos) malformed(value, "expected name=value");
  const auto name = value.substr(0, eq);
  const auto body = value.substr(eq + 1);
  if (name == "xywh") return parse_xywh(value, body);
  if (name == "t") return parse_time(value, body);
  throw Error(ErrorCode::UnsupportedDimension,
              "unsupported dimension '" + std::string(name) + "'");
}

}  // namespace oakit
