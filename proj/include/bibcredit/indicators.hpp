#pragma once

#include "bibcredit/corpus.hpp"
#include "bibcredit/counting.hpp"
#include "bibcredit/credit.hpp"
#include "bibcredit/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bibcredit {

struct IndicatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The universe's relevant credit size is zero, so the proportion is undefined.
struct EmptyUniverse : IndicatorError {
  using IndicatorError::IndicatorError;
};

struct NotASubset : IndicatorError {
  NotASubset() : IndicatorError("the article set is not a subset of the universe") {}
};

// A group indicator was asked about an article set containing an article
// with no co-author in the group.
struct GroupMismatch : IndicatorError {
  explicit GroupMismatch(std::string offending_id)
      : IndicatorError("article '" + offending_id + "' has no co-author in the group"),
        article_id(std::move(offending_id)) {}
  std::string article_id;
};

struct MalformedFixture : IndicatorError {
  using IndicatorError::IndicatorError;
};

/// An exact rational share of a credit space, always in [0, 1].
class Proportion {
public:
  Proportion() = default;
  explicit Proportion(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1)
      throw IndicatorError("proportion outside [0, 1]: " + format_ratio_string(value_));
  }

  const Rational& value() const { return value_; }

  friend bool operator==(const Proportion&, const Proportion&) = default;

private:
  Rational value_ = 0;
};

// Share of article credit (one unit per article) held by `part` within
// `universe`. Throws NotASubset / EmptyUniverse.
Proportion article_proportion(const Corpus& part, const Corpus& universe);

// Same share under the counting method's per-authorship weights.
Proportion weighted_article_proportion(const Corpus& part, const Corpus& universe,
                                       const CountingMethod& method);

// Citation-side analogues.
Proportion citation_proportion(const Corpus& part, const Corpus& universe);
Proportion weighted_citation_proportion(const Corpus& part, const Corpus& universe,
                                        const CountingMethod& method);

// Share of the whole universe's weighted credit held by the group's
// authorships within `part`. Every article of `part` must have at least one
// co-author in the group (GroupMismatch otherwise); use subset_by_group to
// build the canonical article set.
Proportion group_weighted_article_proportion(const Corpus& part, const Corpus& universe,
                                             const AuthorGroup& group, const CountingMethod& method);
Proportion group_weighted_citation_proportion(const Corpus& part, const Corpus& universe,
                                              const AuthorGroup& group, const CountingMethod& method);

enum class ReportMode { Publication, Citation };

const char* to_string(ReportMode mode);

struct SubfieldRow {
  std::string label;
  Proportion unweighted;
  Proportion weighted;
  std::optional<Rational> ratio; // weighted / unweighted; absent when unweighted is 0
};

/// Per-subfield shares under the unweighted and weighted counts, plus their
/// ratio. Rows cover every subfield, sorted by label; each proportion
/// column sums to exactly 1.
struct IndicatorReport {
  ReportMode mode;
  CountingMethod method;
  std::vector<SubfieldRow> rows;
};

IndicatorReport subfield_report(const Corpus& universe, ReportMode mode,
                                const CountingMethod& method);

/// Department totals in the total-author-counting style: an article with k
/// department co-authors counts k times.
struct DepartmentStats {
  std::int64_t allocated_publications = 0;
  std::int64_t allocated_citations = 0;
  std::optional<Rational> cites_per_publication; // absent when no allocated publications
};

DepartmentStats department_stats(const Corpus& corpus, const AuthorGroup& department);

/// One published table row: a subfield's unweighted share, weighted share,
/// and their printed ratio, all parsed exactly from decimal strings.
struct FixtureRow {
  std::string label;
  Rational unweighted;
  Rational weighted;
  Rational ratio;
};

struct Check {
  std::string name;
  Rational expected;
  Rational observed;
  Rational residual; // |expected - observed|
  bool passed = false;
};

struct CheckResult {
  std::vector<Check> checks;
  bool all_passed() const;
};

/// Verifies a published table against itself: each row's printed ratio must
/// match weighted/unweighted within tol_ratio, and each proportion column
/// must sum to 1 within tol_sum.
CheckResult check_fixture_table(const std::vector<FixtureRow>& rows, const Rational& tol_ratio,
                                const Rational& tol_sum);

} // namespace bibcredit
