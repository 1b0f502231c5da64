#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "coxaut/diagram.hpp"
#include "coxaut/errors.hpp"
#include "coxaut/word.hpp"

namespace coxaut {

// The defining relators of the presentation: s*s for each vertex and
// (s*t)^m for each edge labeled m.
struct RelatorSet {
  std::vector<Word> involutions;
  std::vector<Word> braid;

  std::vector<Word> all() const;
};

RelatorSet relators(const CoxeterDiagram& d);

// Word-problem oracle: equality of group elements decided by exploring the
// orbit of a word under braid moves (replace an alternating subword st... of
// length m by ts... of length m) and free reduction. A word is reduced when
// no orbit member has an adjacent equal pair; the canonical form is the
// shortlex-least member of the reduced orbit.
//
// The search is exponential in the worst case, so the number of visited
// words is capped; exceeding the cap raises OrbitBudgetExceeded.
//
// Results are memoized; the cache is guarded so concurrent use behaves as if
// it were absent.
class Oracle {
 public:
  static constexpr long long kDefaultBudget = 1'000'000;

  explicit Oracle(CoxeterDiagram d, long long budget = kDefaultBudget);

  const CoxeterDiagram& diagram() const { return d_; }
  long long budget() const { return budget_; }

  // Shortlex-least minimal-length representative of w.
  Word reduce(const Word& w) const;

  bool is_identity(const Word& w) const { return reduce(w).empty(); }
  bool equal(const Word& a, const Word& b) const;
  bool commute(const Word& a, const Word& b) const;

  RelatorSet relators() const { return coxaut::relators(d_); }

 private:
  Word reduce_uncached(Word w) const;

  CoxeterDiagram d_;
  long long budget_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Word, Word> cache_;
};

}  // namespace coxaut
