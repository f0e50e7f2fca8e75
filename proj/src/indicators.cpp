#include "bibcredit/indicators.hpp"

#include <algorithm>

namespace bibcredit {

namespace {

void require_subcorpus(const Corpus& part, const Corpus& universe) {
  if (!is_subcorpus(part, universe))
    throw NotASubset();
}

void require_group_coverage(const Corpus& part, const AuthorGroup& group) {
  for (const auto& [id, article] : part.articles()) {
    if (group_author_count(article, group) == 0)
      throw GroupMismatch(id);
  }
}

} // namespace

const char* to_string(ReportMode mode) {
  return mode == ReportMode::Publication ? "publication" : "citation";
}

Proportion article_proportion(const Corpus& part, const Corpus& universe) {
  require_subcorpus(part, universe);
  const std::int64_t total = publication_credit(universe);
  if (total == 0)
    throw EmptyUniverse("empty publication universe");
  return Proportion(Rational(publication_credit(part), total));
}

Proportion weighted_article_proportion(const Corpus& part, const Corpus& universe,
                                       const CountingMethod& method) {
  require_subcorpus(part, universe);
  const Rational total = weighted_publication_size(universe, method);
  if (total == 0)
    throw EmptyUniverse("empty weighted publication universe");
  return Proportion(weighted_publication_size(part, method) / total);
}

Proportion citation_proportion(const Corpus& part, const Corpus& universe) {
  require_subcorpus(part, universe);
  const std::int64_t total = citation_credit(universe);
  if (total == 0)
    throw EmptyUniverse("empty citation universe");
  return Proportion(Rational(citation_credit(part), total));
}

Proportion weighted_citation_proportion(const Corpus& part, const Corpus& universe,
                                        const CountingMethod& method) {
  require_subcorpus(part, universe);
  const Rational total = weighted_citation_size(universe, method);
  if (total == 0)
    throw EmptyUniverse("empty weighted citation universe");
  return Proportion(weighted_citation_size(part, method) / total);
}

Proportion group_weighted_article_proportion(const Corpus& part, const Corpus& universe,
                                             const AuthorGroup& group,
                                             const CountingMethod& method) {
  require_subcorpus(part, universe);
  require_group_coverage(part, group);
  const Rational total = weighted_publication_size(universe, method);
  if (total == 0)
    throw EmptyUniverse("empty weighted publication universe");
  return Proportion(group_weighted_sizes(part, method, group).publication / total);
}

Proportion group_weighted_citation_proportion(const Corpus& part, const Corpus& universe,
                                              const AuthorGroup& group,
                                              const CountingMethod& method) {
  require_subcorpus(part, universe);
  require_group_coverage(part, group);
  const Rational total = weighted_citation_size(universe, method);
  if (total == 0)
    throw EmptyUniverse("empty weighted citation universe");
  return Proportion(group_weighted_sizes(part, method, group).citation / total);
}

IndicatorReport subfield_report(const Corpus& universe, ReportMode mode,
                                const CountingMethod& method) {
  IndicatorReport report{mode, method, {}};
  // Establish both denominators up front so an empty universe fails before
  // any row is produced.
  if (mode == ReportMode::Publication) {
    if (publication_credit(universe) == 0)
      throw EmptyUniverse("empty publication universe");
    if (weighted_publication_size(universe, method) == 0)
      throw EmptyUniverse("empty weighted publication universe");
  } else {
    if (citation_credit(universe) == 0)
      throw EmptyUniverse("empty citation universe");
    if (weighted_citation_size(universe, method) == 0)
      throw EmptyUniverse("empty weighted citation universe");
  }
  for (const std::string& label : universe.subfields()) {
    const Corpus part = subset_by_subfield(universe, label);
    Proportion unweighted;
    Proportion weighted;
    if (mode == ReportMode::Publication) {
      unweighted = article_proportion(part, universe);
      weighted = weighted_article_proportion(part, universe, method);
    } else {
      unweighted = citation_proportion(part, universe);
      weighted = weighted_citation_proportion(part, universe, method);
    }
    std::optional<Rational> ratio;
    if (unweighted.value() != 0)
      ratio = weighted.value() / unweighted.value();
    report.rows.push_back({label, unweighted, weighted, std::move(ratio)});
  }
  return report;
}

DepartmentStats department_stats(const Corpus& corpus, const AuthorGroup& department) {
  DepartmentStats stats;
  stats.allocated_publications = group_weighted_publication_credit(corpus, department);
  stats.allocated_citations = group_weighted_citation_credit(corpus, department);
  if (stats.allocated_publications > 0)
    stats.cites_per_publication = Rational(stats.allocated_citations, stats.allocated_publications);
  return stats;
}

bool CheckResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

CheckResult check_fixture_table(const std::vector<FixtureRow>& rows, const Rational& tol_ratio,
                                const Rational& tol_sum) {
  CheckResult result;
  Rational unweighted_sum = 0;
  Rational weighted_sum = 0;
  for (const FixtureRow& row : rows) {
    if (row.unweighted < 0 || row.unweighted > 1 || row.weighted < 0 || row.weighted > 1)
      throw MalformedFixture("row '" + row.label + "': proportion outside [0, 1]");
    if (row.unweighted == 0)
      throw MalformedFixture("row '" + row.label + "': zero unweighted share, ratio undefined");
    const Rational observed = row.weighted / row.unweighted;
    const Rational residual = abs(row.ratio - observed);
    result.checks.push_back(
        {"ratio:" + row.label, row.ratio, observed, residual, residual <= tol_ratio});
    unweighted_sum += row.unweighted;
    weighted_sum += row.weighted;
  }
  const Rational unweighted_residual = abs(unweighted_sum - 1);
  result.checks.push_back({"sum:unweighted", 1, unweighted_sum, unweighted_residual,
                           unweighted_residual <= tol_sum});
  const Rational weighted_residual = abs(weighted_sum - 1);
  result.checks.push_back(
      {"sum:weighted", 1, weighted_sum, weighted_residual, weighted_residual <= tol_sum});
  return result;
}

} // namespace bibcredit
