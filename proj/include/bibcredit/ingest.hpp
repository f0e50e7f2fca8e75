#pragma once

#include "bibcredit/corpus.hpp"
#include "bibcredit/counting.hpp"
#include "bibcredit/indicators.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bibcredit {

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::string what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_no(line),
        reason(std::move(what)) {}
  std::size_t line_no;
  std::string reason;
};

struct EmptyGroup : std::runtime_error {
  explicit EmptyGroup(std::string group_name)
      : std::runtime_error("group '" + group_name + "' has no members"),
        name(std::move(group_name)) {}
  std::string name;
};

struct DuplicateGroupName : std::runtime_error {
  explicit DuplicateGroupName(std::string group_name)
      : std::runtime_error("duplicate group name '" + group_name + "'"),
        name(std::move(group_name)) {}
  std::string name;
};

/// Raw parsed form of one article line. Citations arrive either as a count
/// or as a list of citing-record ids, never both.
struct ArticleRecord {
  std::string id;
  std::string subfield;
  std::vector<AuthorId> authors;
  std::optional<std::int64_t> citation_count;
  std::optional<std::vector<std::string>> citing_ids;
  std::size_t line_no = 0;
};

/// Articles file: one JSON object per line with keys "id", "subfield",
/// "authors", and "citations" (non-negative integer or array of strings).
/// Blank lines and lines starting with '#' are ignored.
std::vector<ArticleRecord> parse_articles(std::istream& input);

/// Collapses a citing-id list to its length; no downstream computation
/// reads citation identities.
Article normalize(const ArticleRecord& record);

/// parse + normalize + validate in one step.
Corpus load_corpus(std::istream& input);
Corpus load_corpus_file(const std::string& path);

/// Groups file: a single JSON object mapping group name to an array of
/// author ids. Members are deduplicated; dropped duplicates produce a
/// warning line. Duplicate group names and empty groups are errors.
std::vector<AuthorGroup> parse_groups(std::istream& input,
                                      std::vector<std::string>* warnings = nullptr);
std::vector<AuthorGroup> load_groups_file(const std::string& path,
                                          std::vector<std::string>* warnings = nullptr);

/// Writes the corpus in the articles file format, one line per article in
/// id order. Re-parsing the output yields an equal corpus.
void write_articles(std::ostream& output, const Corpus& corpus);
std::string serialize_articles(const Corpus& corpus);

/// Fixture file: one row per line, "label unweighted weighted ratio" with
/// decimal values, whitespace separated; '#' lines are headers.
std::vector<FixtureRow> parse_fixture(std::istream& input);
std::vector<FixtureRow> load_fixture_file(const std::string& path);

WeightTable load_weight_table_file(const std::string& path);

} // namespace bibcredit
