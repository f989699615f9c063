#include "leibniz/rr7.hpp"

namespace leibniz {

Scalar theta(int n, const Scalar &alpha, const Field &field) {
  if (n < -1)
    throw domain_error("theta defined for n >= -1");
  Scalar prev = field.zero(); // theta_{-1}
  Scalar cur = field.one();   // theta_0
  if (n == -1)
    return prev;
  for (int i = 0; i < n; ++i) {
    Scalar next = field.add(field.mul(alpha, prev), cur);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string RR7Case::to_string(const Field &f) const {
  switch (kind) {
  case Alpha0:
    return "Alpha0";
  case DistinctRootsInK:
    return "DistinctRootsInK(r1=" + f.to_string(r1) +
           ", r2=" + f.to_string(r2) + ")";
  case DoubleRoot:
    return "DoubleRoot(r=" + f.to_string(r1) + ")";
  case Irreducible:
    return "Irreducible(c=" + f.to_string(c) + ")";
  }
  return {};
}

RR7Case rr7_classify(const Field &field, const Scalar &alpha) {
  if (!field.is_finite())
    throw domain_error("rr7_classify needs a finite field");
  RR7Case out{RR7Case::Alpha0, field.zero(), field.zero(), field.zero()};
  if (field.is_zero(alpha))
    return out;
  std::vector<Scalar> roots;
  for (auto &t : field.elements()) {
    // p(t) = t^2 - t - alpha
    Scalar v = field.sub(field.sub(field.mul(t, t), t), alpha);
    if (field.is_zero(v))
      roots.push_back(t);
  }
  if (roots.size() == 2) {
    out.kind = RR7Case::DistinctRootsInK;
    out.r1 = roots[0];
    out.r2 = roots[1];
    return out;
  }
  if (roots.size() == 1) {
    if (field.characteristic() == 2)
      throw domain_error("internal: double root of t^2-t-alpha in char 2");
    out.kind = RR7Case::DoubleRoot;
    out.r1 = out.r2 = roots[0];
    return out;
  }
  out.kind = RR7Case::Irreducible;
  // r1^{q-1} + r2^{q-1} = -(1+2alpha)/alpha
  Scalar num = field.add(field.one(),
                         field.add(alpha, alpha)); // 1 + 2 alpha
  out.c = field.neg(field.div(num, alpha));
  return out;
}

std::array<Scalar, 4> rr7_matrix_power(int m, const Scalar &alpha,
                                       const Field &field) {
  if (m < 1)
    throw domain_error("rr7_matrix_power needs m >= 1");
  std::array<Scalar, 4> A{field.zero(), alpha, field.one(), field.one()};
  std::array<Scalar, 4> R = A;
  for (int i = 1; i < m; ++i) {
    std::array<Scalar, 4> N;
    N[0] = field.add(field.mul(R[0], A[0]), field.mul(R[1], A[2]));
    N[1] = field.add(field.mul(R[0], A[1]), field.mul(R[1], A[3]));
    N[2] = field.add(field.mul(R[2], A[0]), field.mul(R[3], A[2]));
    N[3] = field.add(field.mul(R[2], A[1]), field.mul(R[3], A[3]));
    R = N;
  }
  return R;
}

std::array<Scalar, 4> rr7_theta_matrix(int m, const Scalar &alpha,
                                       const Field &field) {
  return {field.mul(alpha, theta(m - 2, alpha, field)),
          field.mul(alpha, theta(m - 1, alpha, field)),
          theta(m - 1, alpha, field), theta(m, alpha, field)};
}

} // namespace leibniz
