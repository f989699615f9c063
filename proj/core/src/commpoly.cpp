#include "leibniz/commpoly.hpp"

namespace leibniz {

namespace {
void strip(CommPoly::Expt &e) {
  while (!e.empty() && e.back() == 0)
    e.pop_back();
}
} // namespace

void CommPoly::add_term(Expt e, const Scalar &c) {
  if (field_.is_zero(c))
    return;
  strip(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
    return;
  }
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second))
    terms_.erase(it);
}

CommPoly CommPoly::operator+(const CommPoly &o) const {
  CommPoly r = *this;
  for (auto &[e, c] : o.terms_)
    r.add_term(e, c);
  return r;
}

CommPoly CommPoly::operator-(const CommPoly &o) const {
  CommPoly r = *this;
  for (auto &[e, c] : o.terms_)
    r.add_term(e, field_.neg(c));
  return r;
}

CommPoly CommPoly::operator*(const CommPoly &o) const {
  CommPoly r(field_);
  for (auto &[e1, c1] : terms_)
    for (auto &[e2, c2] : o.terms_) {
      Expt e = e1;
      if (e.size() < e2.size())
        e.resize(e2.size(), 0);
      for (std::size_t i = 0; i < e2.size(); ++i)
        e[i] += e2[i];
      r.add_term(std::move(e), field_.mul(c1, c2));
    }
  return r;
}

CommPoly CommPoly::scaled(const Scalar &c) const {
  CommPoly r(field_);
  if (field_.is_zero(c))
    return r;
  for (auto &[e, k] : terms_)
    r.add_term(e, field_.mul(k, c));
  return r;
}

bool CommPoly::operator==(const CommPoly &o) const {
  if (terms_.size() != o.terms_.size())
    return false;
  auto it = o.terms_.begin();
  for (auto &[e, c] : terms_) {
    if (e != it->first || !field_.equal(c, it->second))
      return false;
    ++it;
  }
  return true;
}

CommPoly CommPoly::constant(const Field &f, const Scalar &c) {
  CommPoly r(f);
  r.add_term({}, c);
  return r;
}

CommPoly CommPoly::variable(const Field &f, int index) {
  CommPoly r(f);
  Expt e(std::size_t(index) + 1, 0);
  e[std::size_t(index)] = 1;
  r.add_term(std::move(e), f.one());
  return r;
}

Scalar CommPoly::eval(const std::vector<Scalar> &point) const {
  Scalar acc = field_.zero();
  for (auto &[e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      Scalar x = i < point.size() ? point[i] : field_.zero();
      term = field_.mul(term, field_.pow(x, unsigned(e[i])));
    }
    acc = field_.add(acc, term);
  }
  return acc;
}

CommPoly frobenius_reduce(const CommPoly &f) {
  const Field &F = f.field();
  if (!F.is_finite())
    throw domain_error("frobenius_reduce needs a finite field");
  const int q = int(F.q());
  CommPoly r(F);
  for (auto &[e, c] : f.terms()) {
    CommPoly::Expt re = e;
    for (auto &x : re)
      if (x >= q)
        x = ((x - 1) % (q - 1)) + 1; // never maps to 0: preserves x=0 behavior
    r.add_term(std::move(re), c);
  }
  return r;
}

bool is_zero_function(const CommPoly &f) {
  if (!f.field().is_finite())
    return f.is_zero();
  return frobenius_reduce(f).is_zero();
}

} // namespace leibniz
