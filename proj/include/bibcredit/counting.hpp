#pragma once

#include "bibcredit/corpus.hpp"
#include "bibcredit/rational.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bibcredit {

struct CountingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingWeightRow : CountingError {
  explicit MissingWeightRow(int count)
      : CountingError("no custom weights for articles with " + std::to_string(count) + " author(s)"),
        author_count(count) {}
  int author_count;
};

struct InvalidWeightTable : CountingError {
  using CountingError::CountingError;
};

/// Position weights for custom counting, one row per author count. Row n
/// holds exactly n non-negative rationals, the weight of each author
/// position in an n-authored article.
class WeightTable {
public:
  /// File format: one data line per author count, in order; the n-th data
  /// line holds n space-separated rationals ("p/q" or integers). Blank
  /// lines and lines starting with '#' are skipped.
  static WeightTable parse(std::istream& input);

  void set_row(int author_count, std::vector<Rational> weights);
  const std::vector<Rational>* row(int author_count) const;
  bool empty() const { return rows_.empty(); }

private:
  std::map<int, std::vector<Rational>> rows_;
};

/// A rule assigning each (author position, author count) a non-negative
/// rational weight. Total gives every co-author a full unit, fractional
/// splits one unit evenly, first-author gives the whole unit to position 1.
class CountingMethod {
public:
  enum class Scheme { Total, Fractional, FirstAuthor, Custom };

  static CountingMethod total() { return CountingMethod(Scheme::Total, "total"); }
  static CountingMethod fractional() { return CountingMethod(Scheme::Fractional, "fractional"); }
  static CountingMethod first_author() { return CountingMethod(Scheme::FirstAuthor, "first"); }
  static CountingMethod custom(WeightTable table);

  Scheme scheme() const { return scheme_; }
  const std::string& name() const { return name_; }

  /// Weight of the 1-based position in an article with author_count authors.
  /// Throws MissingWeightRow for a custom method lacking that row.
  Rational position_weight(int position, int author_count) const;

private:
  CountingMethod(Scheme scheme, std::string name) : scheme_(scheme), name_(std::move(name)) {}

  Scheme scheme_;
  std::string name_;
  WeightTable table_;
};

/// Sum of the method's weights over the article's author positions.
/// Total yields the author count; fractional and first yield exactly 1.
Rational article_weight(const CountingMethod& method, const Article& article);

Rational weighted_publication_size(const Corpus& corpus, const CountingMethod& method);
Rational weighted_citation_size(const Corpus& corpus, const CountingMethod& method);

struct GroupWeightedSizes {
  Rational publication; // weights of group-member positions
  Rational citation;    // same, times each article's citation count
};

GroupWeightedSizes group_weighted_sizes(const Corpus& corpus, const CountingMethod& method,
                                        const AuthorGroup& group);

} // namespace bibcredit
