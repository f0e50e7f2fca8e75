#pragma once

#include "bibcredit/corpus.hpp"
#include "bibcredit/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bibcredit {

struct InvalidConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutcomeProbability {
  std::int64_t value = 0;
  Rational probability;
};

struct SubfieldSpec {
  std::string label;
  Rational share; // of the total article count
  std::vector<OutcomeProbability> coauthor_distribution; // values >= 1
  std::vector<OutcomeProbability> citation_distribution; // values >= 0
};

/// Synthetic corpus recipe. Shares and probabilities are exact rationals
/// and must each sum to 1. Author ids are fresh per authorship unless
/// author_pool is positive, in which case authors are drawn from a shared
/// pool of that size (so authors recur across articles).
struct GeneratorConfig {
  std::int64_t article_count = 0;
  std::optional<std::uint64_t> seed;
  std::int64_t author_pool = 0;
  std::vector<SubfieldSpec> subfields;
};

/// Config file: a JSON object
///   {"article_count": N, "seed": S, "author_pool": P,
///    "subfields": [{"label": "A", "share": "1/2",
///                   "coauthors": [[1, "1/2"], [3, "1/2"]],
///                   "citations": [[0, "1/4"], [10, "3/4"]]}, ...]}
/// where shares and probabilities are "p/q" strings, decimal strings, or
/// integers. "seed" and "author_pool" are optional.
GeneratorConfig parse_generator_config(std::istream& input);
GeneratorConfig load_generator_config_file(const std::string& path);

void validate_config(const GeneratorConfig& config);

/// Deterministic function of (config, seed): the same inputs always produce
/// the identical corpus. Throws InvalidConfig if the config has no seed.
Corpus generate_corpus(const GeneratorConfig& config);

} // namespace bibcredit
