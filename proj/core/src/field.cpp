#include "leibniz/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace leibniz {

namespace {

bool is_prime(unsigned n) {
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Moduli pinned for reproducible arithmetic; any irreducible would do.
// Coefficients are c0..ck with ck = 1.
std::vector<unsigned> pinned_modulus(unsigned p, unsigned k) {
  if (p == 2 && k == 2)
    return {1, 1, 1}; // t^2+t+1
  if (p == 2 && k == 3)
    return {1, 1, 0, 1}; // t^3+t+1
  if (p == 3 && k == 2)
    return {1, 0, 1}; // t^2+1
  if (p == 5 && k == 2)
    return {2, 0, 1}; // t^2+2
  if (p == 3 && k == 3)
    return {1, 2, 0, 1}; // t^3+2t+1
  return {};
}

} // namespace

struct Field::Impl {
  FieldKind kind = FieldKind::Rationals;
  unsigned p = 0, k = 0, q = 0;
  std::vector<unsigned> mod; // c0..ck, monic
  // index arithmetic tables, size q*q
  std::vector<std::uint8_t> add_t, mul_t;
  std::vector<std::uint8_t> neg_t, inv_t;

  void build_tables();
  std::array<unsigned, 3> digits(unsigned idx) const {
    return {idx % p, (idx / p) % p, (idx / p / p) % p};
  }
  unsigned from_digits(const std::array<unsigned, 3> &d) const {
    return d[0] + p * (d[1] + p * d[2]);
  }
};

void Field::Impl::build_tables() {
  add_t.assign(std::size_t(q) * q, 0);
  mul_t.assign(std::size_t(q) * q, 0);
  neg_t.assign(q, 0);
  inv_t.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b);
      std::array<unsigned, 3> ds{};
      for (int i = 0; i < 3; ++i)
        ds[i] = (da[i] + db[i]) % p;
      add_t[std::size_t(a) * q + b] = std::uint8_t(from_digits(ds));
      // polynomial product, reduced by the monic modulus
      std::array<unsigned, 5> prod{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 4; d >= int(k); --d) {
        unsigned c = prod[d];
        if (c == 0)
          continue;
        prod[d] = 0;
        // t^d = t^(d-k) * (- (mod - t^k))
        for (unsigned i = 0; i < k; ++i) {
          unsigned sub = (c * mod[i]) % p;
          unsigned pos = d - k + i;
          prod[pos] = (prod[pos] + p - sub) % p;
        }
      }
      mul_t[std::size_t(a) * q + b] =
          std::uint8_t(from_digits({prod[0], prod[1], prod[2]}));
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a);
    std::array<unsigned, 3> dn{};
    for (int i = 0; i < 3; ++i)
      dn[i] = (p - da[i]) % p;
    neg_t[a] = std::uint8_t(from_digits(dn));
    for (unsigned b = 0; b < q; ++b)
      if (mul_t[std::size_t(a) * q + b] == 1) {
        inv_t[a] = std::uint8_t(b);
        break;
      }
  }
}

Field Field::rationals() {
  static const auto impl = std::make_shared<const Impl>();
  return Field(impl);
}

Field Field::gf(unsigned p, unsigned k) {
  if (!is_prime(p))
    throw parse_error("field characteristic must be prime, got " +
                      std::to_string(p));
  if (k < 1 || k > 3)
    throw parse_error("unsupported extension degree " + std::to_string(k));
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i)
    q *= p;
  if (q > 97)
    throw parse_error("unsupported field size " + std::to_string(q) +
                      " (cap is 97)");
  auto impl = std::make_shared<Impl>();
  impl->kind = k == 1 ? FieldKind::Prime : FieldKind::Extension;
  impl->p = p;
  impl->k = k;
  impl->q = q;
  if (k > 1) {
    impl->mod = pinned_modulus(p, k);
    if (impl->mod.empty()) {
      // No pinned modulus for this (p,k): take the first irreducible monic
      // polynomial in lexicographic coefficient order.
      std::vector<unsigned> cand(k + 1, 0);
      cand[k] = 1;
      auto irreducible = [&](const std::vector<unsigned> &m) {
        // no root, and for k<=3 rootlessness plus (k==2||k==3) suffices
        for (unsigned x = 0; x < p; ++x) {
          unsigned v = 0, xp = 1;
          for (unsigned i = 0; i <= k; ++i) {
            v = (v + m[i] * xp) % p;
            xp = (xp * x) % p;
          }
          if (v == 0)
            return false;
        }
        return true; // degree 2 or 3: irreducible iff no roots
      };
      bool found = false;
      for (unsigned code = 0; code < q && !found; ++code) {
        unsigned c = code;
        for (unsigned i = 0; i < k; ++i) {
          cand[i] = c % p;
          c /= p;
        }
        if (irreducible(cand)) {
          impl->mod = cand;
          found = true;
        }
      }
      if (!found)
        throw parse_error("no irreducible modulus found"); // cannot happen
    }
  }
  impl->build_tables();
  return Field(std::shared_ptr<const Impl>(std::move(impl)));
}

Field Field::parse(const std::string &spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s == "Q")
    return rationals();
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(3, s.size() - 4);
    auto caret = body.find('^');
    try {
      if (caret == std::string::npos) {
        unsigned long n = std::stoul(body);
        // GF(q) accepts prime powers: GF(4) is the 4-element field
        for (unsigned p = 2; p <= n; ++p) {
          if (!is_prime(p) || n % p != 0)
            continue;
          unsigned k = 0;
          unsigned long m = n;
          while (m % p == 0) {
            m /= p;
            ++k;
          }
          if (m == 1)
            return gf(p, k);
          break;
        }
        throw parse_error("field size must be a prime power, got " +
                          std::to_string(n));
      }
      unsigned long p = std::stoul(body.substr(0, caret));
      unsigned long k = std::stoul(body.substr(caret + 1));
      return gf(unsigned(p), unsigned(k));
    } catch (const std::invalid_argument &) {
    } catch (const std::out_of_range &) {
    }
  }
  throw parse_error("malformed field spec '" + spec +
                    "' (expected Q, GF(p) or GF(p^k))");
}

FieldKind Field::kind() const { return impl_->kind; }
unsigned Field::characteristic() const { return impl_->p; }
unsigned Field::p() const { return impl_->p; }
unsigned Field::k() const { return impl_->k; }
unsigned Field::q() const { return impl_->q; }
const std::vector<unsigned> &Field::modulus() const { return impl_->mod; }

std::string Field::to_string() const {
  switch (kind()) {
  case FieldKind::Rationals:
    return "Q";
  case FieldKind::Prime:
    return "GF(" + std::to_string(impl_->p) + ")";
  case FieldKind::Extension:
    return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k) +
           ")";
  }
  return {};
}

std::string Field::cardinality_string() const {
  return is_finite() ? std::to_string(impl_->q) : std::string("infinite");
}

bool Field::operator==(const Field &o) const {
  return impl_->kind == o.impl_->kind && impl_->p == o.impl_->p &&
         impl_->k == o.impl_->k;
}

Scalar Field::zero() const {
  return is_finite() ? Scalar(std::uint8_t(0)) : Scalar(mpq_class(0));
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long n) const {
  if (!is_finite())
    return Scalar(mpq_class(n));
  long r = n % long(impl_->p);
  if (r < 0)
    r += impl_->p;
  return Scalar(std::uint8_t(r)); // integers land in the prime subfield
}

Scalar Field::from_fraction(long num, long den) const {
  if (den == 0)
    throw domain_error("zero denominator");
  if (!is_finite()) {
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar(v);
  }
  return div(from_int(num), from_int(den));
}

Scalar Field::add(const Scalar &a, const Scalar &b) const {
  if (!is_finite()) {
    mpq_class r = a.rat() + b.rat();
    return Scalar(r);
  }
  return Scalar(impl_->add_t[std::size_t(a.ff()) * impl_->q + b.ff()]);
}

Scalar Field::neg(const Scalar &a) const {
  if (!is_finite()) {
    mpq_class r = -a.rat();
    return Scalar(r);
  }
  return Scalar(impl_->neg_t[a.ff()]);
}

Scalar Field::sub(const Scalar &a, const Scalar &b) const {
  return add(a, neg(b));
}

Scalar Field::mul(const Scalar &a, const Scalar &b) const {
  if (!is_finite()) {
    mpq_class r = a.rat() * b.rat();
    return Scalar(r);
  }
  return Scalar(impl_->mul_t[std::size_t(a.ff()) * impl_->q + b.ff()]);
}

Scalar Field::inv(const Scalar &a) const {
  if (is_zero(a))
    throw domain_error("inverse of zero");
  if (!is_finite()) {
    mpq_class r = 1 / a.rat();
    return Scalar(r);
  }
  return Scalar(impl_->inv_t[a.ff()]);
}

Scalar Field::div(const Scalar &a, const Scalar &b) const {
  return mul(a, inv(b));
}

Scalar Field::pow(const Scalar &a, unsigned long e) const {
  Scalar r = one(), base = a;
  while (e) {
    if (e & 1)
      r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool Field::is_zero(const Scalar &a) const {
  return is_finite() ? a.ff() == 0 : a.rat() == 0;
}

bool Field::is_one(const Scalar &a) const {
  return is_finite() ? a.ff() == 1 : a.rat() == 1;
}

bool Field::equal(const Scalar &a, const Scalar &b) const {
  return is_finite() ? a.ff() == b.ff() : a.rat() == b.rat();
}

bool Field::less(const Scalar &a, const Scalar &b) const {
  return is_finite() ? a.ff() < b.ff() : a.rat() < b.rat();
}

std::string Field::to_string(const Scalar &a) const {
  if (!is_finite())
    return a.rat().get_str();
  if (kind() == FieldKind::Prime)
    return std::to_string(a.ff());
  auto d = impl_->digits(a.ff());
  std::string out;
  for (int i = 2; i >= 0; --i) {
    if (d[i] == 0)
      continue;
    if (!out.empty())
      out += "+";
    if (i == 0 || d[i] != 1)
      out += std::to_string(d[i]);
    if (i >= 1)
      out += "t";
    if (i == 2)
      out += "^2";
  }
  return out.empty() ? "0" : out;
}

Scalar Field::parse_scalar(const std::string &text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.empty())
    throw parse_error("empty scalar");
  auto parse_long = [](const std::string &t) {
    std::size_t pos = 0;
    long v = std::stol(t, &pos);
    if (pos != t.size())
      throw parse_error("trailing junk in scalar '" + t + "'");
    return v;
  };
  if (s.find('t') == std::string::npos) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return from_int(parse_long(s));
    return from_fraction(parse_long(s.substr(0, slash)),
                         parse_long(s.substr(slash + 1)));
  }
  if (kind() != FieldKind::Extension)
    throw parse_error("'t' only names extension-field generators");
  // linear combination of 1, t, t^2 with nonnegative integer coefficients
  Scalar acc = zero();
  Scalar t = Scalar(std::uint8_t(impl_->p));
  std::size_t i = 0;
  bool neg_term = false;
  while (i < s.size()) {
    if (s[i] == '+') {
      neg_term = false;
      ++i;
      continue;
    }
    if (s[i] == '-') {
      neg_term = true;
      ++i;
      continue;
    }
    unsigned long coef = 1;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t pos = 0;
      coef = std::stoul(s.substr(i), &pos);
      i += pos;
    }
    unsigned deg = 0;
    if (i < s.size() && s[i] == 't') {
      deg = 1;
      ++i;
      if (i + 1 < s.size() && s[i] == '^') {
        std::size_t pos = 0;
        deg = unsigned(std::stoul(s.substr(i + 1), &pos));
        i += 1 + pos;
      }
    }
    if (deg >= impl_->k)
      throw parse_error("exponent of t exceeds extension degree");
    Scalar term = mul(from_int(long(coef % impl_->p)), pow(t, deg));
    acc = add(acc, neg_term ? neg(term) : term);
  }
  return acc;
}

std::vector<Scalar> Field::elements() const {
  if (!is_finite())
    throw domain_error("cannot enumerate an infinite field");
  std::vector<Scalar> out;
  out.reserve(impl_->q);
  for (unsigned i = 0; i < impl_->q; ++i)
    out.push_back(Scalar(std::uint8_t(i)));
  return out;
}

std::uint8_t Field::radd(std::uint8_t a, std::uint8_t b) const {
  return impl_->add_t[std::size_t(a) * impl_->q + b];
}
std::uint8_t Field::rmul(std::uint8_t a, std::uint8_t b) const {
  return impl_->mul_t[std::size_t(a) * impl_->q + b];
}
std::uint8_t Field::rneg(std::uint8_t a) const { return impl_->neg_t[a]; }

} // namespace leibniz
