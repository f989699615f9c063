#pragma once

#include <array>

#include "leibniz/field.hpp"

namespace leibniz {

/// theta_{-1} = 0, theta_0 = 1, theta_{n+1} = alpha theta_{n-1} + theta_n.
Scalar theta(int n, const Scalar &alpha, const Field &field);

/// Case analysis of p(t) = t^2 - t - alpha over a finite field.
struct RR7Case {
  enum Kind { Alpha0, DistinctRootsInK, DoubleRoot, Irreducible } kind;
  Scalar r1, r2; ///< roots when they exist in K (DoubleRoot: r1 = r2)
  Scalar c;      ///< Irreducible: r1^{q-1} + r2^{q-1} = -(1+2alpha)/alpha
  std::string to_string(const Field &f) const;
};

/// Classify by exhaustive root search; field must be finite.
RR7Case rr7_classify(const Field &field, const Scalar &alpha);

/// A^m for A = [[0, alpha], [1, 1]], by repeated multiplication.
/// Row-major 2x2.
std::array<Scalar, 4> rr7_matrix_power(int m, const Scalar &alpha,
                                       const Field &field);

/// The theta-formula matrix [[a th_{m-2}, a th_{m-1}], [th_{m-1}, th_m]].
std::array<Scalar, 4> rr7_theta_matrix(int m, const Scalar &alpha,
                                       const Field &field);

} // namespace leibniz
