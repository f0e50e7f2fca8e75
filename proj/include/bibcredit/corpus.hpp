#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bibcredit {

// Author identity is an opaque pre-resolved token; name disambiguation is
// out of scope for this library.
using AuthorId = std::string;

struct Article {
  std::string id;
  std::string subfield;
  std::vector<AuthorId> authors; // order carries first-author semantics
  std::int64_t citation_count = 0;

  friend bool operator==(const Article&, const Article&) = default;
};

struct AuthorGroup {
  std::string name;
  std::set<AuthorId> members;

  friend bool operator==(const AuthorGroup&, const AuthorGroup&) = default;
};

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateArticleId : CorpusError {
  explicit DuplicateArticleId(std::string article_id)
      : CorpusError("duplicate article id '" + article_id + "'"), id(std::move(article_id)) {}
  std::string id;
};

struct EmptyAuthorList : CorpusError {
  explicit EmptyAuthorList(std::string article_id)
      : CorpusError("article '" + article_id + "' has no authors"), id(std::move(article_id)) {}
  std::string id;
};

struct DuplicateAuthor : CorpusError {
  DuplicateAuthor(std::string article_id, AuthorId author_id)
      : CorpusError("article '" + article_id + "' lists author '" + author_id + "' twice"),
        id(std::move(article_id)), author(std::move(author_id)) {}
  std::string id;
  AuthorId author;
};

struct NegativeCitations : CorpusError {
  explicit NegativeCitations(std::string article_id)
      : CorpusError("article '" + article_id + "' has a negative citation count"),
        id(std::move(article_id)) {}
  std::string id;
};

// Empty or non-trimmed id, subfield, or author token.
struct InvalidIdentifier : CorpusError {
  InvalidIdentifier(std::string article_id, std::string field_name)
      : CorpusError("article '" + article_id + "': invalid " + field_name),
        id(std::move(article_id)), field(std::move(field_name)) {}
  std::string id;
  std::string field;
};

struct UnknownSubfield : CorpusError {
  explicit UnknownSubfield(std::string subfield_label)
      : CorpusError("unknown subfield '" + subfield_label + "'"), label(std::move(subfield_label)) {}
  std::string label;
};

/// A validated, immutable set of articles keyed by id, partitioned by
/// subfield label. Only validate_corpus (or subsetting an existing corpus)
/// produces a non-empty one, so every Corpus in flight satisfies the
/// structural invariants.
class Corpus {
public:
  Corpus() = default; // the empty corpus is valid

  const std::map<std::string, Article>& articles() const { return articles_; }
  const std::set<std::string>& subfields() const { return subfields_; }
  std::size_t size() const { return articles_.size(); }
  bool empty() const { return articles_.empty(); }
  bool contains(const std::string& id) const { return articles_.count(id) != 0; }

  friend bool operator==(const Corpus&, const Corpus&) = default;

private:
  friend Corpus validate_corpus(const std::vector<Article>&);
  friend Corpus subset_by_subfield(const Corpus&, const std::string&);
  friend Corpus subset_by_group(const Corpus&, const AuthorGroup&);

  std::map<std::string, Article> articles_;
  std::set<std::string> subfields_;
};

/// Checks every structural invariant and assembles a Corpus. Idempotent:
/// re-validating the articles of a valid corpus yields an equal corpus.
Corpus validate_corpus(const std::vector<Article>& raw_articles);

/// The sub-corpus of exactly the articles carrying the given label.
/// Throws UnknownSubfield if no article carries it.
Corpus subset_by_subfield(const Corpus& corpus, const std::string& label);

/// The sub-corpus of articles with at least one co-author in the group.
/// May be empty; never throws.
Corpus subset_by_group(const Corpus& corpus, const AuthorGroup& group);

/// Number of the article's authors that belong to the group.
int group_author_count(const Article& article, const AuthorGroup& group);

/// True when every article of `part` appears, byte-identical, in `whole`.
bool is_subcorpus(const Corpus& part, const Corpus& whole);

} // namespace bibcredit
