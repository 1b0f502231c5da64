#include "coxaut/oracle.hpp"

#include <deque>
#include <unordered_set>

namespace coxaut {

std::vector<Word> RelatorSet::all() const {
  std::vector<Word> out = involutions;
  out.insert(out.end(), braid.begin(), braid.end());
  return out;
}

RelatorSet relators(const CoxeterDiagram& d) {
  RelatorSet r;
  for (Gen s = 0; s < d.rank(); ++s) {
    Word w;
    w.push_back(static_cast<char>(s));
    w.push_back(static_cast<char>(s));
    r.involutions.push_back(w);
  }
  for (const auto& e : d.iedges()) {
    Word w;
    for (int i = 0; i < e.m; ++i) {
      w.push_back(static_cast<char>(e.a));
      w.push_back(static_cast<char>(e.b));
    }
    r.braid.push_back(w);
  }
  return r;
}

Oracle::Oracle(CoxeterDiagram d, long long budget)
    : d_(std::move(d)), budget_(budget) {
  auto rep = validate(d_);
  if (!rep.even || !rep.large_type)
    throw DomainError("oracle requires an even large-type diagram");
}

bool Oracle::equal(const Word& a, const Word& b) const {
  if (a == b) return true;
  return reduce(a + inverse(b)).empty();
}

bool Oracle::commute(const Word& a, const Word& b) const {
  return equal(a + b, b + a);
}

Word Oracle::reduce(const Word& w) const {
  Word key = free_reduce(w);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Word result = reduce_uncached(key);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (cache_.size() > 400'000) cache_.clear();
    cache_.emplace(std::move(key), result);
  }
  return result;
}

Word Oracle::reduce_uncached(Word w) const {
  long long visited = 0;
  auto charge = [&](long long k) {
    visited += k;
    if (visited > budget_)
      throw OrbitBudgetExceeded("braid-orbit budget of " +
                                std::to_string(budget_) + " words exceeded");
  };

  // Every restart strictly shortens w, so the outer loop terminates.
  for (;;) {
    if (w.empty()) return w;

    std::unordered_set<Word> seen{w};
    std::deque<Word> queue{w};
    Word best = w;
    bool shortened = false;
    charge(1);

    while (!queue.empty() && !shortened) {
      Word cur = std::move(queue.front());
      queue.pop_front();

      for (std::size_t i = 0; i < cur.size() && !shortened; ++i) {
        Gen s = static_cast<Gen>(cur[i]);
        for (Gen t : d_.neighbors(s)) {
          int m = d_.label(s, t);
          if (i + m > cur.size()) continue;
          bool alt = true;
          for (int j = 1; j < m && alt; ++j) {
            Gen expect = (j % 2 == 0) ? s : t;
            if (static_cast<Gen>(cur[i + j]) != expect) alt = false;
          }
          if (!alt) continue;

          Word nxt = cur;
          for (int j = 0; j < m; ++j)
            nxt[i + j] = static_cast<char>((j % 2 == 0) ? t : s);

          Word red = free_reduce(nxt);
          if (red.size() < cur.size()) {
            w = std::move(red);
            shortened = true;
            break;
          }
          if (seen.insert(nxt).second) {
            charge(1);
            if (shortlex_less(nxt, best)) best = nxt;
            queue.push_back(std::move(nxt));
          }
        }
      }
    }

    if (!shortened) return best;
  }
}

}  // namespace coxaut
