#include "leibniz/word.hpp"

#include <algorithm>

namespace leibniz {

int total_degree(const Multidegree &d) {
  int t = 0;
  for (auto &[v, m] : d)
    t += m;
  return t;
}

Multidegree multidegree_of_word(const Word &w) {
  Multidegree d;
  for (int v : w)
    ++d[v];
  return d;
}

std::vector<Word> enumerate_words(const Multidegree &d) {
  Word sorted;
  for (auto &[v, m] : d)
    sorted.insert(sorted.end(), std::size_t(m), v);
  std::vector<Word> out;
  if (sorted.empty())
    return out;
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out; // next_permutation yields lexicographic = canonical order
}

Multidegree multilinear(int n) {
  Multidegree d;
  for (int i = 1; i <= n; ++i)
    d[i] = 1;
  return d;
}

std::string word_to_string(const Word &w) {
  std::string s = "<";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(w[i]);
  }
  return s + ">";
}

std::string multidegree_to_string(const Multidegree &d) {
  std::string s = "{";
  bool first = true;
  for (auto &[v, m] : d) {
    if (!first)
      s += ",";
    first = false;
    s += std::to_string(v) + ":" + std::to_string(m);
  }
  return s + "}";
}

} // namespace leibniz
