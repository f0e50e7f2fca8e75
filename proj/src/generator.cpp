#include "bibcredit/generator.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

namespace bibcredit {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& value, const std::string& where) {
  try {
    if (value.is_number_integer())
      return Rational(value.get<std::int64_t>());
    if (value.is_string()) {
      const std::string text = value.get<std::string>();
      return text.find('.') != std::string::npos ? parse_decimal(text) : parse_rational(text);
    }
  } catch (const std::invalid_argument& e) {
    throw InvalidConfig(where + ": " + e.what());
  }
  throw InvalidConfig(where + ": expected an integer or a rational/decimal string");
}

std::vector<OutcomeProbability> distribution_from_json(const json& value, const std::string& where) {
  if (!value.is_array() || value.empty())
    throw InvalidConfig(where + ": expected a non-empty array of [value, probability] pairs");
  std::vector<OutcomeProbability> table;
  for (const json& entry : value) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer())
      throw InvalidConfig(where + ": each entry must be [integer value, probability]");
    table.push_back({entry[0].get<std::int64_t>(), rational_from_json(entry[1], where)});
  }
  return table;
}

void validate_distribution(const std::vector<OutcomeProbability>& table, std::int64_t min_value,
                           const std::string& where) {
  Rational sum = 0;
  std::vector<std::int64_t> values;
  for (const OutcomeProbability& entry : table) {
    if (entry.value < min_value)
      throw InvalidConfig(where + ": value " + std::to_string(entry.value) + " below minimum " +
                          std::to_string(min_value));
    if (entry.probability < 0)
      throw InvalidConfig(where + ": negative probability");
    values.push_back(entry.value);
    sum += entry.probability;
  }
  if (sum != 1)
    throw InvalidConfig(where + ": probabilities sum to " + format_ratio_string(sum) + ", not 1");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw InvalidConfig(where + ": duplicate value in distribution");
}

// Unbiased uniform integer in [0, bound) from whole 64-bit words.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  if (bound == 1)
    return 0;
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  const BigInt range = BigInt(1) << (words * 64);
  const BigInt limit = range - range % bound;
  for (;;) {
    BigInt value = 0;
    for (unsigned w = 0; w < words; ++w)
      value = (value << 64) | BigInt(rng());
    if (value < limit)
      return value % bound;
  }
}

// Inverse-CDF sampling over integer thresholds with a common denominator,
// so draws are exact and platform independent.
class DiscreteSampler {
public:
  explicit DiscreteSampler(const std::vector<OutcomeProbability>& table) {
    BigInt common = 1;
    for (const OutcomeProbability& entry : table)
      common = boost::multiprecision::lcm(common, denominator(entry.probability));
    BigInt cumulative = 0;
    for (const OutcomeProbability& entry : table) {
      cumulative += numerator(entry.probability) * (common / denominator(entry.probability));
      thresholds_.push_back(cumulative);
      values_.push_back(entry.value);
    }
    total_ = common;
  }

  std::int64_t draw(std::mt19937_64& rng) const {
    const BigInt u = uniform_below(rng, total_);
    for (std::size_t i = 0; i < thresholds_.size(); ++i)
      if (u < thresholds_[i])
        return values_[i];
    return values_.back();
  }

private:
  std::vector<BigInt> thresholds_;
  std::vector<std::int64_t> values_;
  BigInt total_;
};

std::string padded(std::int64_t value, int width) {
  std::string digits = std::to_string(value);
  if (static_cast<int>(digits.size()) < width)
    digits.insert(0, width - digits.size(), '0');
  return digits;
}

// Largest-remainder apportionment of the article count across subfields.
std::vector<std::int64_t> apportion(const GeneratorConfig& config) {
  const std::size_t n = config.subfields.size();
  std::vector<std::int64_t> counts(n, 0);
  std::vector<Rational> fractions(n, 0);
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational target = config.subfields[i].share * config.article_count;
    const BigInt base = numerator(target) / denominator(target);
    counts[i] = base.convert_to<std::int64_t>();
    fractions[i] = target - Rational(base);
    assigned += counts[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fractions[a] > fractions[b]; });
  const std::int64_t leftover = config.article_count - assigned;
  for (std::int64_t k = 0; k < leftover; ++k)
    ++counts[order[static_cast<std::size_t>(k)]];
  return counts;
}

} // namespace

GeneratorConfig parse_generator_config(std::istream& input) {
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& e) {
    throw InvalidConfig(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw InvalidConfig("config must be a JSON object");
  GeneratorConfig config;
  if (!doc.contains("article_count") || !doc["article_count"].is_number_integer())
    throw InvalidConfig("article_count must be an integer");
  config.article_count = doc["article_count"].get<std::int64_t>();
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      throw InvalidConfig("seed must be an unsigned integer");
    config.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("author_pool")) {
    if (!doc["author_pool"].is_number_integer())
      throw InvalidConfig("author_pool must be an integer");
    config.author_pool = doc["author_pool"].get<std::int64_t>();
  }
  if (!doc.contains("subfields") || !doc["subfields"].is_array())
    throw InvalidConfig("subfields must be an array");
  for (const json& entry : doc["subfields"]) {
    if (!entry.is_object() || !entry.contains("label") || !entry["label"].is_string())
      throw InvalidConfig("each subfield needs a string label");
    SubfieldSpec spec;
    spec.label = entry["label"].get<std::string>();
    const std::string where = "subfield '" + spec.label + "'";
    if (!entry.contains("share"))
      throw InvalidConfig(where + ": missing share");
    spec.share = rational_from_json(entry["share"], where + " share");
    if (!entry.contains("coauthors") || !entry.contains("citations"))
      throw InvalidConfig(where + ": missing coauthors or citations distribution");
    spec.coauthor_distribution = distribution_from_json(entry["coauthors"], where + " coauthors");
    spec.citation_distribution = distribution_from_json(entry["citations"], where + " citations");
    config.subfields.push_back(std::move(spec));
  }
  return config;
}

GeneratorConfig load_generator_config_file(const std::string& path) {
  std::ifstream input(path);
  if (!input)
    throw std::runtime_error("cannot open '" + path + "'");
  return parse_generator_config(input);
}

void validate_config(const GeneratorConfig& config) {
  if (config.article_count < 0)
    throw InvalidConfig("article_count must be non-negative");
  if (config.author_pool < 0)
    throw InvalidConfig("author_pool must be non-negative");
  if (config.article_count > 0 && config.subfields.empty())
    throw InvalidConfig("article_count is positive but no subfields are given");

  Rational share_sum = 0;
  std::vector<std::string> labels;
  std::int64_t max_coauthors = 0;
  for (const SubfieldSpec& spec : config.subfields) {
    if (spec.label.empty())
      throw InvalidConfig("empty subfield label");
    labels.push_back(spec.label);
    if (spec.share < 0)
      throw InvalidConfig("subfield '" + spec.label + "': negative share");
    share_sum += spec.share;
    validate_distribution(spec.coauthor_distribution, 1, "subfield '" + spec.label + "' coauthors");
    validate_distribution(spec.citation_distribution, 0, "subfield '" + spec.label + "' citations");
    for (const OutcomeProbability& entry : spec.coauthor_distribution)
      max_coauthors = std::max(max_coauthors, entry.value);
  }
  if (!config.subfields.empty() && share_sum != 1)
    throw InvalidConfig("subfield shares sum to " + format_ratio_string(share_sum) + ", not 1");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InvalidConfig("duplicate subfield label");
  if (config.author_pool > 0 && config.author_pool < max_coauthors)
    throw InvalidConfig("author_pool smaller than the largest co-author count");
}

Corpus generate_corpus(const GeneratorConfig& config) {
  validate_config(config);
  if (!config.seed)
    throw InvalidConfig("no seed given");
  std::mt19937_64 rng(*config.seed);

  const std::vector<std::int64_t> counts = apportion(config);
  std::vector<Article> articles;
  articles.reserve(static_cast<std::size_t>(config.article_count));
  std::int64_t fresh_author_serial = 0;

  // Per article the draw order is: author count, then pool indices (pool
  // mode only), then citation count. Changing it changes every corpus.
  for (std::size_t s = 0; s < config.subfields.size(); ++s) {
    const SubfieldSpec& spec = config.subfields[s];
    const DiscreteSampler coauthors(spec.coauthor_distribution);
    const DiscreteSampler citations(spec.citation_distribution);
    for (std::int64_t i = 1; i <= counts[s]; ++i) {
      Article article;
      article.id = spec.label + "-" + padded(i, 6);
      article.subfield = spec.label;
      const std::int64_t author_count = coauthors.draw(rng);
      if (config.author_pool > 0) {
        std::set<std::int64_t> picked;
        while (static_cast<std::int64_t>(article.authors.size()) < author_count) {
          const std::int64_t index =
              uniform_below(rng, BigInt(config.author_pool)).convert_to<std::int64_t>();
          if (picked.insert(index).second)
            article.authors.push_back("pool-" + padded(index + 1, 6));
        }
      } else {
        for (std::int64_t a = 0; a < author_count; ++a)
          article.authors.push_back("auth-" + padded(++fresh_author_serial, 8));
      }
      article.citation_count = citations.draw(rng);
      articles.push_back(std::move(article));
    }
  }
  return validate_corpus(articles);
}

} // namespace bibcredit
