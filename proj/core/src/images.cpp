#include "leibniz/images.hpp"

namespace leibniz {

namespace {

std::vector<std::uint8_t> encode(const AlgebraDef &A, const Element &e) {
  std::vector<std::uint8_t> out;
  out.reserve(e.size());
  for (auto &c : e)
    out.push_back(c.ff());
  (void)A;
  return out;
}

Element decode(const AlgebraDef &A, const std::vector<std::uint8_t> &v) {
  Element e;
  e.reserve(v.size());
  for (auto x : v)
    e.push_back(Scalar(x));
  (void)A;
  return e;
}

std::vector<Element> all_elements(const AlgebraDef &A) {
  const Field &F = A.field();
  auto elems = F.elements();
  std::vector<Element> out;
  std::vector<std::size_t> idx(std::size_t(A.dim()), 0);
  for (;;) {
    Element e;
    for (int k = 0; k < A.dim(); ++k)
      e.push_back(elems[idx[std::size_t(k)]]);
    out.push_back(std::move(e));
    int pos = 0;
    while (pos < A.dim()) {
      if (++idx[std::size_t(pos)] < elems.size())
        break;
      idx[std::size_t(pos)] = 0;
      ++pos;
    }
    if (pos == A.dim())
      break;
  }
  return out;
}

} // namespace

bool ElementSet::contains(const Element &e, const AlgebraDef &A) const {
  return raw.count(encode(A, e)) != 0;
}

ElementSet image_set(const AlgebraDef &A, const LeibnizPoly &f,
                     unsigned long long cost_cap) {
  const Field &F = A.field();
  if (!F.is_finite())
    throw domain_error("image_set needs a finite field");
  std::vector<int> vars = variables_of(f);
  auto pool = all_elements(A);
  unsigned long long weight = 0;
  for (auto &[w, c] : f.terms())
    weight += w.size();
  unsigned long long tuples = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    tuples *= pool.size();
    if (tuples > cost_cap)
      throw cost_cap_exceeded(tuples * weight, cost_cap);
  }
  if (tuples * weight > cost_cap)
    throw cost_cap_exceeded(tuples * weight, cost_cap);

  ElementSet S;
  if (f.is_zero() || vars.empty()) {
    S.raw.insert(encode(A, zero_element(A)));
    return S;
  }
  std::vector<std::size_t> choice(vars.size(), 0);
  for (;;) {
    std::map<int, Element> t;
    for (std::size_t i = 0; i < vars.size(); ++i)
      t.emplace(vars[i], pool[choice[i]]);
    S.raw.insert(encode(A, evaluate(A, f, t)));
    std::size_t pos = 0;
    while (pos < vars.size()) {
      if (++choice[pos] < pool.size())
        break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == vars.size())
      break;
  }
  return S;
}

bool is_subspace(const AlgebraDef &A, const ElementSet &S) {
  const Field &F = A.field();
  if (!S.raw.count(encode(A, zero_element(A))))
    return false;
  for (auto &ea : S.raw) {
    Element a = decode(A, ea);
    for (auto &eb : S.raw) {
      Element b = decode(A, eb);
      Element sum = a;
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = F.add(sum[i], b[i]);
      if (!S.raw.count(encode(A, sum)))
        return false;
    }
    for (auto &lam : F.elements()) {
      Element sc = a;
      for (auto &c : sc)
        c = F.mul(c, lam);
      if (!S.raw.count(encode(A, sc)))
        return false;
    }
  }
  return true;
}

std::string ImageClass::to_string(const Field &f) const {
  switch (kind) {
  case Zero:
    return "Zero";
  case LineKe1:
    return "LineKe1";
  case ScaledSquares:
    return "ScaledSquares(" + f.to_string(lambda) + ")";
  case WholeAlgebra:
    return "WholeAlgebra";
  case Other:
    return "Other";
  }
  return {};
}

ImageClass classify_image(const AlgebraDef &A, const LeibnizPoly &f,
                          unsigned long long cost_cap) {
  const Field &F = A.field();
  if (!multidegree_of(f))
    throw domain_error("classify_image needs a multihomogeneous polynomial");
  ElementSet S = image_set(A, f, cost_cap);
  ImageClass out{ImageClass::Other, F.zero()};
  if (A.dim() != 2)
    return out;

  ElementSet zero_set;
  zero_set.raw.insert(encode(A, zero_element(A)));
  if (S.raw == zero_set.raw) {
    out.kind = ImageClass::Zero;
    return out;
  }
  ElementSet line;
  for (auto &lam : F.elements()) {
    Element e = zero_element(A);
    e[0] = lam;
    line.raw.insert(encode(A, e));
  }
  if (S.raw == line.raw) {
    out.kind = ImageClass::LineKe1;
    return out;
  }
  for (auto &lam : F.elements()) {
    if (F.is_zero(lam))
      continue;
    ElementSet sq;
    for (auto &c : F.elements()) {
      Element e = zero_element(A);
      e[0] = F.mul(lam, F.mul(c, c));
      sq.raw.insert(encode(A, e));
    }
    if (S.raw == sq.raw) {
      out.kind = ImageClass::ScaledSquares;
      out.lambda = lam;
      return out;
    }
  }
  if (S.size() == std::size_t(F.q()) * F.q()) {
    out.kind = ImageClass::WholeAlgebra;
    return out;
  }
  return out;
}

} // namespace leibniz
