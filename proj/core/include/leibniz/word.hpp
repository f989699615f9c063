#pragma once

#include <map>
#include <string>
#include <vector>

namespace leibniz {

/// A left-normed monomial x_{i1} x_{i2} ... x_{im}, stored as its index
/// sequence.  The implicit bracketing is (((x_{i1} x_{i2}) x_{i3}) ... ).
using Word = std::vector<int>;

/// Canonical total order: by length, then lexicographically.
struct WordLess {
  bool operator()(const Word &a, const Word &b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// Variable index -> multiplicity, every multiplicity >= 1.
using Multidegree = std::map<int, int>;

int total_degree(const Multidegree &d);
Multidegree multidegree_of_word(const Word &w);

/// All words with letter multiplicities d, in canonical order.
/// Count is the multinomial coefficient.
std::vector<Word> enumerate_words(const Multidegree &d);

/// The multilinear multidegree {1:1, ..., n:1}.
Multidegree multilinear(int n);

std::string word_to_string(const Word &w); ///< diagnostic form <i1 i2 ...>
std::string multidegree_to_string(const Multidegree &d);

} // namespace leibniz
