#pragma once

#include "bibcredit/corpus.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace bibcredit {

// The four credit spaces. A point is one unit of credit: an article, an
// authorship, a citation, or an author-citation pair.
enum class CreditKind {
  Publication,
  CoauthorWeightedPublication,
  Citation,
  CoauthorWeightedCitation,
};

const char* to_string(CreditKind kind);

struct CreditPoint {
  std::string article_id;
  std::optional<AuthorId> author;            // present iff co-author weighted kind
  std::optional<std::int64_t> citation_index; // present iff citation kind, in [1, citation_count]

  friend auto operator<=>(const CreditPoint&, const CreditPoint&) = default;
};

/// A fully enumerated credit space. Intended for tests and small corpora;
/// indicator computation uses the closed-form sizes, which the enumeration
/// oracle keeps honest.
struct CreditSpace {
  CreditKind kind;
  std::vector<CreditPoint> points;
  Corpus source;
};

/// Enumerates every tuple of the requested kind, article by article in id
/// order, authors in list order, citation indices ascending.
CreditSpace build_space(const Corpus& corpus, CreditKind kind);

// Closed-form sizes. These are the independent route against the
// enumeration above; do not implement one in terms of the other.
std::int64_t publication_credit(const Corpus& corpus);          // one per article
std::int64_t coauthor_weighted_publication_credit(const Corpus& corpus); // one per authorship
std::int64_t citation_credit(const Corpus& corpus);             // one per citation
std::int64_t coauthor_weighted_citation_credit(const Corpus& corpus); // citations times authors

std::int64_t credit_size(const Corpus& corpus, CreditKind kind);

// Group-restricted co-author weighted sizes: only authorships whose author
// belongs to the group contribute.
std::int64_t group_weighted_publication_credit(const Corpus& corpus, const AuthorGroup& group);
std::int64_t group_weighted_citation_credit(const Corpus& corpus, const AuthorGroup& group);

} // namespace bibcredit
