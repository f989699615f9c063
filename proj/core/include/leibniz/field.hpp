#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace leibniz {

/// Raised on malformed field/scalar/polynomial input.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Raised when an operation is asked for an unsupported domain
/// (e.g. Frobenius reduction over the rationals).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string &msg) : std::runtime_error(msg) {}
};

enum class FieldKind { Rationals, Prime, Extension };

/// A field element.  Rationals carry an exact fraction, finite fields an
/// index in 0..q-1 (digits base p encode the polynomial representative).
class Scalar {
public:
  Scalar() : v_(std::uint8_t{0}) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(std::uint8_t x) : v_(x) {}

  bool is_rational_rep() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class &rat() const { return std::get<mpq_class>(v_); }
  mpq_class &rat() { return std::get<mpq_class>(v_); }
  std::uint8_t ff() const { return std::get<std::uint8_t>(v_); }

  bool operator==(const Scalar &o) const { return v_ == o.v_; }
  bool operator!=(const Scalar &o) const { return v_ != o.v_; }

private:
  std::variant<mpq_class, std::uint8_t> v_;
};

/// Field descriptor plus arithmetic.  Value type; finite-field tables are
/// shared behind a const pointer, so copies are cheap and all operations are
/// safe for concurrent use.
class Field {
public:
  /// Parse "Q", "GF(p)" or "GF(p^k)".  Extension moduli are pinned per (p,k).
  static Field parse(const std::string &spec);
  static Field rationals();
  static Field gf(unsigned p, unsigned k = 1);

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::Rationals; }
  unsigned characteristic() const; ///< 0 for the rationals
  unsigned p() const;
  unsigned k() const;
  unsigned q() const; ///< cardinality; only valid for finite fields
  /// Modulus polynomial coefficients c0..ck (monic), prime case: empty.
  const std::vector<unsigned> &modulus() const;
  std::string to_string() const; ///< round-trips through parse()
  std::string cardinality_string() const;

  bool operator==(const Field &o) const;
  bool operator!=(const Field &o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  Scalar from_fraction(long num, long den) const;

  Scalar add(const Scalar &a, const Scalar &b) const;
  Scalar sub(const Scalar &a, const Scalar &b) const;
  Scalar neg(const Scalar &a) const;
  Scalar mul(const Scalar &a, const Scalar &b) const;
  Scalar inv(const Scalar &a) const; ///< throws domain_error on 0
  Scalar div(const Scalar &a, const Scalar &b) const;
  Scalar pow(const Scalar &a, unsigned long e) const;
  bool is_zero(const Scalar &a) const;
  bool is_one(const Scalar &a) const;
  bool equal(const Scalar &a, const Scalar &b) const;

  /// Total order used for deterministic output (not field-compatible).
  bool less(const Scalar &a, const Scalar &b) const;

  std::string to_string(const Scalar &a) const;
  /// Accepts "n", "n/m", and for extension fields polynomials in t
  /// such as "t", "t+1", "2t^2+t+1".
  Scalar parse_scalar(const std::string &text) const;

  /// All q elements, in index order.  Finite fields only.
  std::vector<Scalar> elements() const;

  // Raw table access for finite-field kernels (index arithmetic).
  std::uint8_t radd(std::uint8_t a, std::uint8_t b) const;
  std::uint8_t rmul(std::uint8_t a, std::uint8_t b) const;
  std::uint8_t rneg(std::uint8_t a) const;

private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

} // namespace leibniz
