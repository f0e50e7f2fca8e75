#include "bibcredit/corpus.hpp"

#include <algorithm>
#include <cctype>

namespace bibcredit {

namespace {

bool trimmed_nonempty(const std::string& token) {
  if (token.empty())
    return false;
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  return !space(token.front()) && !space(token.back());
}

} // namespace

Corpus validate_corpus(const std::vector<Article>& raw_articles) {
  Corpus corpus;
  for (const Article& article : raw_articles) {
    if (!trimmed_nonempty(article.id))
      throw InvalidIdentifier(article.id, "id");
    if (!trimmed_nonempty(article.subfield))
      throw InvalidIdentifier(article.id, "subfield");
    if (article.authors.empty())
      throw EmptyAuthorList(article.id);
    std::set<AuthorId> seen;
    for (const AuthorId& author : article.authors) {
      if (!trimmed_nonempty(author))
        throw InvalidIdentifier(article.id, "author id");
      if (!seen.insert(author).second)
        throw DuplicateAuthor(article.id, author);
    }
    if (article.citation_count < 0)
      throw NegativeCitations(article.id);
    if (!corpus.articles_.emplace(article.id, article).second)
      throw DuplicateArticleId(article.id);
    corpus.subfields_.insert(article.subfield);
  }
  return corpus;
}

Corpus subset_by_subfield(const Corpus& corpus, const std::string& label) {
  if (corpus.subfields().count(label) == 0)
    throw UnknownSubfield(label);
  Corpus subset;
  for (const auto& [id, article] : corpus.articles()) {
    if (article.subfield == label)
      subset.articles_.emplace(id, article);
  }
  subset.subfields_.insert(label);
  return subset;
}

Corpus subset_by_group(const Corpus& corpus, const AuthorGroup& group) {
  Corpus subset;
  for (const auto& [id, article] : corpus.articles()) {
    if (group_author_count(article, group) > 0) {
      subset.articles_.emplace(id, article);
      subset.subfields_.insert(article.subfield);
    }
  }
  return subset;
}

int group_author_count(const Article& article, const AuthorGroup& group) {
  return static_cast<int>(std::count_if(
      article.authors.begin(), article.authors.end(),
      [&](const AuthorId& author) { return group.members.count(author) != 0; }));
}

bool is_subcorpus(const Corpus& part, const Corpus& whole) {
  for (const auto& [id, article] : part.articles()) {
    auto it = whole.articles().find(id);
    if (it == whole.articles().end() || it->second != article)
      return false;
  }
  return true;
}

} // namespace bibcredit
