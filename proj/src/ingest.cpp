#include "bibcredit/ingest.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bibcredit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string trim(const std::string& text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos)
    return "";
  auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

bool skippable(const std::string& line) {
  const std::string body = trim(line);
  return body.empty() || body.front() == '#';
}

std::string trimmed_string_field(const json& value, std::size_t line_no, const char* field) {
  if (!value.is_string())
    throw ParseError(line_no, std::string("field ") + field + " must be a string");
  std::string token = trim(value.get<std::string>());
  if (token.empty())
    throw ParseError(line_no, std::string("field ") + field + " is empty");
  return token;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream input(path);
  if (!input)
    throw std::runtime_error("cannot open '" + path + "'");
  return input;
}

} // namespace

std::vector<ArticleRecord> parse_articles(std::istream& input) {
  std::vector<ArticleRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (skippable(line))
      continue;
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded())
      throw ParseError(line_no, "malformed JSON");
    if (!doc.is_object())
      throw ParseError(line_no, "record must be a JSON object");
    for (const char* field : {"id", "subfield", "authors", "citations"})
      if (!doc.contains(field))
        throw ParseError(line_no, std::string("missing field ") + field);

    ArticleRecord record;
    record.line_no = line_no;
    record.id = trimmed_string_field(doc["id"], line_no, "id");
    record.subfield = trimmed_string_field(doc["subfield"], line_no, "subfield");

    const json& authors = doc["authors"];
    if (!authors.is_array())
      throw ParseError(line_no, "field authors must be an array of strings");
    for (const json& author : authors)
      record.authors.push_back(trimmed_string_field(author, line_no, "authors entry"));

    const json& citations = doc["citations"];
    if (citations.is_number_integer()) {
      record.citation_count = citations.get<std::int64_t>();
    } else if (citations.is_array()) {
      std::vector<std::string> ids;
      for (const json& citing : citations)
        ids.push_back(trimmed_string_field(citing, line_no, "citations entry"));
      record.citing_ids = std::move(ids);
    } else {
      throw ParseError(line_no, "field citations must be an integer or an array of strings");
    }
    records.push_back(std::move(record));
  }
  return records;
}

Article normalize(const ArticleRecord& record) {
  Article article;
  article.id = record.id;
  article.subfield = record.subfield;
  article.authors = record.authors;
  article.citation_count = record.citation_count
                               ? *record.citation_count
                               : static_cast<std::int64_t>(record.citing_ids->size());
  return article;
}

Corpus load_corpus(std::istream& input) {
  std::vector<Article> articles;
  for (const ArticleRecord& record : parse_articles(input))
    articles.push_back(normalize(record));
  return validate_corpus(articles);
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream input = open_or_throw(path);
  return load_corpus(input);
}

std::vector<AuthorGroup> parse_groups(std::istream& input, std::vector<std::string>* warnings) {
  // The DOM parser silently collapses duplicate object keys, so spot them
  // with a callback while parsing.
  std::vector<std::string> keys_seen;
  bool duplicate_is_fatal = false;
  std::string duplicate_name;
  auto callback = [&](int depth, json::parse_event_t event, json& parsed) {
    if (depth == 1 && event == json::parse_event_t::key) {
      const std::string key = parsed.get<std::string>();
      if (std::count(keys_seen.begin(), keys_seen.end(), key) > 0) {
        duplicate_is_fatal = true;
        duplicate_name = key;
      }
      keys_seen.push_back(key);
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(input, callback);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("malformed JSON: ") + e.what());
  }
  if (duplicate_is_fatal)
    throw DuplicateGroupName(duplicate_name);
  if (!doc.is_object())
    throw ParseError(1, "groups file must be a JSON object");

  std::vector<AuthorGroup> groups;
  for (const auto& [raw_name, value] : doc.items()) {
    const std::string name = trim(raw_name);
    if (name.empty())
      throw ParseError(1, "group name is empty");
    if (!value.is_array())
      throw ParseError(1, "group '" + name + "' must map to an array of author ids");
    AuthorGroup group{name, {}};
    for (const json& member : value) {
      if (!member.is_string())
        throw ParseError(1, "group '" + name + "' has a non-string member");
      const std::string author = trim(member.get<std::string>());
      if (author.empty())
        throw ParseError(1, "group '" + name + "' has an empty member id");
      if (!group.members.insert(author).second && warnings != nullptr)
        warnings->push_back("group '" + name + "': duplicate member '" + author + "' ignored");
    }
    if (group.members.empty())
      throw EmptyGroup(name);
    groups.push_back(std::move(group));
  }
  return groups;
}

std::vector<AuthorGroup> load_groups_file(const std::string& path,
                                          std::vector<std::string>* warnings) {
  std::ifstream input = open_or_throw(path);
  return parse_groups(input, warnings);
}

void write_articles(std::ostream& output, const Corpus& corpus) {
  for (const auto& [id, article] : corpus.articles()) {
    ordered_json doc;
    doc["id"] = article.id;
    doc["subfield"] = article.subfield;
    doc["authors"] = article.authors;
    doc["citations"] = article.citation_count;
    output << doc.dump() << '\n';
  }
}

std::string serialize_articles(const Corpus& corpus) {
  std::ostringstream out;
  write_articles(out, corpus);
  return out.str();
}

std::vector<FixtureRow> parse_fixture(std::istream& input) {
  std::vector<FixtureRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (skippable(line))
      continue;
    std::istringstream fields(line);
    std::string label, unweighted, weighted, ratio, extra;
    if (!(fields >> label >> unweighted >> weighted >> ratio) || (fields >> extra))
      throw MalformedFixture("line " + std::to_string(line_no) +
                             ": expected 'label unweighted weighted ratio'");
    try {
      rows.push_back(
          {label, parse_decimal(unweighted), parse_decimal(weighted), parse_decimal(ratio)});
    } catch (const std::invalid_argument& e) {
      throw MalformedFixture("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::vector<FixtureRow> load_fixture_file(const std::string& path) {
  std::ifstream input = open_or_throw(path);
  return parse_fixture(input);
}

WeightTable load_weight_table_file(const std::string& path) {
  std::ifstream input = open_or_throw(path);
  return WeightTable::parse(input);
}

} // namespace bibcredit
