#include "bibcredit/counting.hpp"

#include <istream>
#include <sstream>
#include <unordered_map>

namespace bibcredit {

WeightTable WeightTable::parse(std::istream& input) {
  WeightTable table;
  std::string line;
  std::size_t line_no = 0;
  int author_count = 0;
  while (std::getline(input, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    std::vector<Rational> weights;
    bool comment = false;
    while (fields >> token) {
      if (weights.empty() && token.front() == '#') {
        comment = true;
        break;
      }
      Rational value;
      try {
        value = parse_rational(token);
      } catch (const std::invalid_argument& e) {
        throw InvalidWeightTable("weights line " + std::to_string(line_no) + ": " + e.what());
      }
      if (value < 0)
        throw InvalidWeightTable("weights line " + std::to_string(line_no) +
                                 ": negative weight '" + token + "'");
      weights.push_back(std::move(value));
    }
    if (comment || weights.empty())
      continue;
    ++author_count;
    if (static_cast<int>(weights.size()) != author_count)
      throw InvalidWeightTable("weights line " + std::to_string(line_no) + ": expected " +
                               std::to_string(author_count) + " entries, got " +
                               std::to_string(weights.size()));
    table.set_row(author_count, std::move(weights));
  }
  return table;
}

void WeightTable::set_row(int author_count, std::vector<Rational> weights) {
  if (author_count < 1 || static_cast<int>(weights.size()) != author_count)
    throw InvalidWeightTable("weight row size must equal the author count");
  for (const Rational& w : weights)
    if (w < 0)
      throw InvalidWeightTable("negative weight in row " + std::to_string(author_count));
  rows_[author_count] = std::move(weights);
}

const std::vector<Rational>* WeightTable::row(int author_count) const {
  auto it = rows_.find(author_count);
  return it == rows_.end() ? nullptr : &it->second;
}

CountingMethod CountingMethod::custom(WeightTable table) {
  CountingMethod method(Scheme::Custom, "custom");
  method.table_ = std::move(table);
  return method;
}

Rational CountingMethod::position_weight(int position, int author_count) const {
  switch (scheme_) {
  case Scheme::Total:
    return 1;
  case Scheme::Fractional:
    return Rational(1, author_count);
  case Scheme::FirstAuthor:
    return position == 1 ? 1 : 0;
  case Scheme::Custom: {
    const std::vector<Rational>* row = table_.row(author_count);
    if (row == nullptr)
      throw MissingWeightRow(author_count);
    return (*row)[position - 1];
  }
  }
  return 0;
}

Rational article_weight(const CountingMethod& method, const Article& article) {
  const int count = static_cast<int>(article.authors.size());
  Rational sum = 0;
  for (int position = 1; position <= count; ++position)
    sum += method.position_weight(position, count);
  return sum;
}

namespace {

// Article weight depends only on the author count; cache per distinct count.
class ArticleWeightCache {
public:
  explicit ArticleWeightCache(const CountingMethod& method) : method_(method) {}

  const Rational& weight(const Article& article) {
    const int count = static_cast<int>(article.authors.size());
    auto it = cache_.find(count);
    if (it == cache_.end())
      it = cache_.emplace(count, article_weight(method_, article)).first;
    return it->second;
  }

private:
  const CountingMethod& method_;
  std::unordered_map<int, Rational> cache_;
};

} // namespace

Rational weighted_publication_size(const Corpus& corpus, const CountingMethod& method) {
  ArticleWeightCache cache(method);
  Rational sum = 0;
  for (const auto& [id, article] : corpus.articles())
    sum += cache.weight(article);
  return sum;
}

Rational weighted_citation_size(const Corpus& corpus, const CountingMethod& method) {
  ArticleWeightCache cache(method);
  Rational sum = 0;
  for (const auto& [id, article] : corpus.articles())
    sum += Rational(article.citation_count) * cache.weight(article);
  return sum;
}

GroupWeightedSizes group_weighted_sizes(const Corpus& corpus, const CountingMethod& method,
                                        const AuthorGroup& group) {
  GroupWeightedSizes sizes{0, 0};
  for (const auto& [id, article] : corpus.articles()) {
    const int count = static_cast<int>(article.authors.size());
    Rational member_weight = 0;
    for (int position = 1; position <= count; ++position) {
      if (group.members.count(article.authors[position - 1]) != 0)
        member_weight += method.position_weight(position, count);
    }
    sizes.publication += member_weight;
    sizes.citation += Rational(article.citation_count) * member_weight;
  }
  return sizes;
}

} // namespace bibcredit
