#include "bibcredit/credit.hpp"

namespace bibcredit {

const char* to_string(CreditKind kind) {
  switch (kind) {
  case CreditKind::Publication:
    return "publication";
  case CreditKind::CoauthorWeightedPublication:
    return "coauthor-weighted publication";
  case CreditKind::Citation:
    return "citation";
  case CreditKind::CoauthorWeightedCitation:
    return "coauthor-weighted citation";
  }
  return "unknown";
}

CreditSpace build_space(const Corpus& corpus, CreditKind kind) {
  CreditSpace space{kind, {}, corpus};
  for (const auto& [id, article] : corpus.articles()) {
    switch (kind) {
    case CreditKind::Publication:
      space.points.push_back({id, std::nullopt, std::nullopt});
      break;
    case CreditKind::CoauthorWeightedPublication:
      for (const AuthorId& author : article.authors)
        space.points.push_back({id, author, std::nullopt});
      break;
    case CreditKind::Citation:
      for (std::int64_t c = 1; c <= article.citation_count; ++c)
        space.points.push_back({id, std::nullopt, c});
      break;
    case CreditKind::CoauthorWeightedCitation:
      for (const AuthorId& author : article.authors)
        for (std::int64_t c = 1; c <= article.citation_count; ++c)
          space.points.push_back({id, author, c});
      break;
    }
  }
  return space;
}

std::int64_t publication_credit(const Corpus& corpus) {
  return static_cast<std::int64_t>(corpus.size());
}

std::int64_t coauthor_weighted_publication_credit(const Corpus& corpus) {
  std::int64_t total = 0;
  for (const auto& [id, article] : corpus.articles())
    total += static_cast<std::int64_t>(article.authors.size());
  return total;
}

std::int64_t citation_credit(const Corpus& corpus) {
  std::int64_t total = 0;
  for (const auto& [id, article] : corpus.articles())
    total += article.citation_count;
  return total;
}

std::int64_t coauthor_weighted_citation_credit(const Corpus& corpus) {
  std::int64_t total = 0;
  for (const auto& [id, article] : corpus.articles())
    total += article.citation_count * static_cast<std::int64_t>(article.authors.size());
  return total;
}

std::int64_t credit_size(const Corpus& corpus, CreditKind kind) {
  switch (kind) {
  case CreditKind::Publication:
    return publication_credit(corpus);
  case CreditKind::CoauthorWeightedPublication:
    return coauthor_weighted_publication_credit(corpus);
  case CreditKind::Citation:
    return citation_credit(corpus);
  case CreditKind::CoauthorWeightedCitation:
    return coauthor_weighted_citation_credit(corpus);
  }
  return 0;
}

std::int64_t group_weighted_publication_credit(const Corpus& corpus, const AuthorGroup& group) {
  std::int64_t total = 0;
  for (const auto& [id, article] : corpus.articles())
    total += group_author_count(article, group);
  return total;
}

std::int64_t group_weighted_citation_credit(const Corpus& corpus, const AuthorGroup& group) {
  std::int64_t total = 0;
  for (const auto& [id, article] : corpus.articles())
    total += article.citation_count * group_author_count(article, group);
  return total;
}

} // namespace bibcredit
