#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oakit/model.hpp"
#include "oakit/rdf.hpp"

namespace testing_support {

std::filesystem::path data_dir();
std::string read_file(const std::filesystem::path& path);
std::string fixture(const std::string& name);

/// Minimal N-Triples reader written independently of the Turtle parser.
/// Throws std::runtime_error on anything it does not understand.
oakit::Graph parse_ntriples(const std::string& text);

/// Tries every bijection between the blank labels of a and b. Only for
/// small graphs (at most 9 blank labels).
bool brute_force_isomorphic(const oakit::Graph& a, const oakit::Graph& b);

/// `# expect-line: N` from a malformed fixture header.
std::optional<std::size_t> expected_line(const std::string& text);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

  /// Mix of ASCII, punctuation that needs escaping, and multi-byte text.
  std::string text(std::size_t max_len, bool allow_empty = false);
  /// Letters and digits only.
  std::string token(std::size_t max_len);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random annotations that satisfy the model invariants and only use
/// structures that have a canonical graph form.
class AnnotationGen {
 public:
  explicit AnnotationGen(std::uint64_t seed) : rng_(seed) {}

  oakit::Annotation annotation();
  Rng& rng() { return rng_; }

 private:
  oakit::NodeId fresh_node();
  oakit::Iri fresh_iri();
  oakit::ResourceRef resource(int depth, bool allow_specific);
  oakit::ExternalResource external_resource();
  oakit::Selector selector(int depth);
  oakit::State state();
  oakit::Extras extras_for(const oakit::NodeId& subject);

  Rng rng_;
  std::size_t counter_ = 0;
};

}  // namespace testing_support
