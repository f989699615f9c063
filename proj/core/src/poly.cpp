#include "leibniz/poly.hpp"

#include <set>

namespace leibniz {

void LeibnizPoly::add_term(const Word &w, const Scalar &c) {
  if (field_.is_zero(c))
    return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second))
    terms_.erase(it);
}

Scalar LeibnizPoly::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

LeibnizPoly LeibnizPoly::operator+(const LeibnizPoly &o) const {
  LeibnizPoly r = *this;
  for (auto &[w, c] : o.terms_)
    r.add_term(w, c);
  return r;
}

LeibnizPoly LeibnizPoly::operator-(const LeibnizPoly &o) const {
  LeibnizPoly r = *this;
  for (auto &[w, c] : o.terms_)
    r.add_term(w, field_.neg(c));
  return r;
}

LeibnizPoly LeibnizPoly::operator-() const {
  LeibnizPoly r(field_);
  for (auto &[w, c] : terms_)
    r.terms_.emplace(w, field_.neg(c));
  return r;
}

LeibnizPoly LeibnizPoly::scaled(const Scalar &c) const {
  LeibnizPoly r(field_);
  if (field_.is_zero(c))
    return r;
  for (auto &[w, k] : terms_)
    r.add_term(w, field_.mul(k, c));
  return r;
}

bool LeibnizPoly::operator==(const LeibnizPoly &o) const {
  if (terms_.size() != o.terms_.size())
    return false;
  auto it = o.terms_.begin();
  for (auto &[w, c] : terms_) {
    if (w != it->first || !field_.equal(c, it->second))
      return false;
    ++it;
  }
  return true;
}

namespace {

// word * word, recursion on the LAST letter of the right factor.
void word_product_into(const Field &F, const Word &u, const Word &v,
                       const Scalar &coef, LeibnizPoly &out) {
  if (v.size() == 1) {
    Word uv = u;
    uv.push_back(v[0]);
    out.add_term(uv, coef);
    return;
  }
  Word prefix(v.begin(), v.end() - 1);
  Word last{v.back()};
  // (u v) = (u prefix) last - (u last) prefix
  LeibnizPoly up(F);
  word_product_into(F, u, prefix, coef, up);
  for (auto &[w, c] : up.terms()) {
    Word wl = w;
    wl.push_back(last[0]);
    out.add_term(wl, c);
  }
  Word ul = u;
  ul.push_back(last[0]);
  word_product_into(F, ul, prefix, F.neg(coef), out);
}

} // namespace

LeibnizPoly lproduct(const LeibnizPoly &f, const LeibnizPoly &g) {
  if (f.field() != g.field())
    throw domain_error("lproduct: mismatched fields");
  const Field &F = f.field();
  LeibnizPoly out(F);
  for (auto &[u, cu] : f.terms())
    for (auto &[v, cv] : g.terms())
      word_product_into(F, u, v, F.mul(cu, cv), out);
  return out;
}

LeibnizPoly left_power(const LeibnizPoly &f, const LeibnizPoly &g, int n) {
  LeibnizPoly acc = f;
  for (int i = 0; i < n; ++i)
    acc = lproduct(acc, g);
  return acc;
}

LeibnizPoly substitute(const LeibnizPoly &f,
                       const std::map<int, LeibnizPoly> &sigma) {
  const Field &F = f.field();
  LeibnizPoly out(F);
  for (auto &[w, c] : f.terms()) {
    auto at = [&](int v) -> const LeibnizPoly & {
      auto it = sigma.find(v);
      if (it == sigma.end())
        throw domain_error("substitute: no assignment for x" +
                           std::to_string(v));
      return it->second;
    };
    LeibnizPoly acc = at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
      acc = lproduct(acc, at(w[i]));
    out = out + acc.scaled(c);
  }
  return out;
}

std::optional<Multidegree> multidegree_of(const LeibnizPoly &f) {
  if (f.is_zero())
    throw domain_error("multidegree_of: zero polynomial");
  std::optional<Multidegree> d;
  for (auto &[w, c] : f.terms()) {
    Multidegree dw = multidegree_of_word(w);
    if (!d)
      d = dw;
    else if (*d != dw)
      return std::nullopt; // mixed
  }
  return d;
}

std::map<Multidegree, LeibnizPoly> multihomogeneous_parts(const LeibnizPoly &f) {
  std::map<Multidegree, LeibnizPoly> parts;
  for (auto &[w, c] : f.terms()) {
    Multidegree d = multidegree_of_word(w);
    auto it = parts.find(d);
    if (it == parts.end())
      it = parts.emplace(d, LeibnizPoly(f.field())).first;
    it->second.add_term(w, c);
  }
  return parts;
}

std::map<int, LeibnizPoly> leading_decomposition(const LeibnizPoly &f) {
  std::map<int, LeibnizPoly> parts;
  for (auto &[w, c] : f.terms()) {
    auto it = parts.find(w[0]);
    if (it == parts.end())
      it = parts.emplace(w[0], LeibnizPoly(f.field())).first;
    it->second.add_term(w, c);
  }
  return parts;
}

std::vector<int> variables_of(const LeibnizPoly &f) {
  std::set<int> vars;
  for (auto &[w, c] : f.terms())
    vars.insert(w.begin(), w.end());
  return {vars.begin(), vars.end()};
}

LeibnizPoly zero_poly(const Field &f) { return LeibnizPoly(f); }

LeibnizPoly var_poly(const Field &f, int index) {
  return LeibnizPoly(f, Word{index});
}

LeibnizPoly word_poly(const Field &f, const Word &w) {
  return LeibnizPoly(f, w);
}

} // namespace leibniz
