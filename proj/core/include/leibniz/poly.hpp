#pragma once

#include <functional>
#include <map>
#include <optional>

#include "leibniz/field.hpp"
#include "leibniz/word.hpp"

namespace leibniz {

/// Element of the free Leibniz algebra: a finite combination of left-normed
/// words over one field.  No zero coefficients are stored.
class LeibnizPoly {
public:
  explicit LeibnizPoly(Field field) : field_(std::move(field)) {}
  LeibnizPoly(Field field, const Word &w)
      : field_(std::move(field)) {
    terms_[w] = field_.one();
  }

  const Field &field() const { return field_; }
  const std::map<Word, Scalar, WordLess> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// coefficient += c, erasing the term when it cancels.
  void add_term(const Word &w, const Scalar &c);
  Scalar coefficient(const Word &w) const;

  LeibnizPoly operator+(const LeibnizPoly &o) const;
  LeibnizPoly operator-(const LeibnizPoly &o) const;
  LeibnizPoly operator-() const;
  LeibnizPoly scaled(const Scalar &c) const;

  bool operator==(const LeibnizPoly &o) const;

private:
  Field field_;
  std::map<Word, Scalar, WordLess> terms_;
};

/// The Leibniz-normalized product.  On words it peels the last letter of the
/// right factor: u<j> = uj,  u(w<j>) = (uw)<j> - (u<j>)w.
LeibnizPoly lproduct(const LeibnizPoly &f, const LeibnizPoly &g);

/// f g^(n): n left-normed right-multiplications by g; n = 0 returns f.
LeibnizPoly left_power(const LeibnizPoly &f, const LeibnizPoly &g, int n);

/// Image of f under the endomorphism sending x_i to sigma(i); every variable
/// of f must be assigned.  Result is fully renormalized.
LeibnizPoly substitute(const LeibnizPoly &f,
                       const std::map<int, LeibnizPoly> &sigma);

/// Common multidegree of a nonzero multihomogeneous f, nullopt when mixed.
std::optional<Multidegree> multidegree_of(const LeibnizPoly &f);

/// Split into multihomogeneous parts, keyed by multidegree.
std::map<Multidegree, LeibnizPoly> multihomogeneous_parts(const LeibnizPoly &f);

/// Partition of f's words by leading variable; the parts sum to f.
std::map<int, LeibnizPoly> leading_decomposition(const LeibnizPoly &f);

/// Variables occurring in f, ascending.
std::vector<int> variables_of(const LeibnizPoly &f);

LeibnizPoly zero_poly(const Field &f);
LeibnizPoly var_poly(const Field &f, int index);
LeibnizPoly word_poly(const Field &f, const Word &w);

} // namespace leibniz
