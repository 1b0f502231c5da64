#pragma once

#include <string>

namespace coxaut {

// A generator is identified by its index into the diagram's sorted vertex
// list. Words are stored as byte strings (one generator index per char),
// which keeps short words inline and makes them directly hashable.
using Gen = unsigned char;
using Word = std::string;

// All generators are involutions, so the inverse of a word is its reversal.
inline Word inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

// Cancel adjacent equal letters, iterated to a fixpoint.
inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

// Length first, then lexicographic on generator indices.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline Word concat(const Word& a, const Word& b) { return a + b; }

}  // namespace coxaut
