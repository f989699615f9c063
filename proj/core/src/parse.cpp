#include "leibniz/parse.hpp"

#include <cctype>

namespace leibniz {

namespace {

class Parser {
public:
  Parser(const Field &field, const std::string &text)
      : field_(field), s_(text) {}

  LeibnizPoly parse() {
    LeibnizPoly p = poly();
    skip_ws();
    if (pos_ != s_.size())
      fail("unexpected trailing input");
    return p;
  }

private:
  const Field &field_;
  const std::string &s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw parse_error("syntax error at position " + std::to_string(pos_) +
                      ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_]))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
      ++pos_;
    if (pos_ == start)
      fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  LeibnizPoly poly() {
    bool negate = eat('-');
    LeibnizPoly acc = term();
    if (negate)
      acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  LeibnizPoly term() {
    Scalar coef = field_.one();
    char c = peek();
    if (std::isdigit((unsigned char)c)) {
      long num = integer();
      if (eat('/')) {
        long den = integer();
        coef = field_.from_fraction(num, den);
      } else {
        coef = field_.from_int(num);
      }
    } else if (c == '[') {
      eat('[');
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ']')
        ++pos_;
      if (pos_ == s_.size())
        fail("unterminated scalar bracket");
      coef = field_.parse_scalar(s_.substr(start, pos_ - start));
      ++pos_;
    }
    LeibnizPoly acc = powered_factor(nullptr);
    for (;;) {
      char n = peek();
      if (n == 'x' || n == '(') {
        acc = powered_factor(&acc);
      } else {
        return acc.scaled(coef);
      }
    }
  }

  // A factor with its optional power.  When acc is null the factor opens the
  // term: f^(k) is the left-normed self-product f f ... f.  Otherwise each of
  // the k copies is right-multiplied onto *acc.
  LeibnizPoly powered_factor(const LeibnizPoly *acc) {
    LeibnizPoly f = factor();
    long n = 1;
    if (eat('^')) {
      if (eat('(')) {
        n = integer();
        if (!eat(')'))
          fail("expected ')' after exponent");
      } else {
        n = integer();
      }
      if (n < 1)
        fail("exponent must be positive");
    }
    if (acc)
      return left_power(*acc, f, int(n));
    return left_power(f, f, int(n - 1));
  }

  LeibnizPoly factor() {
    skip_ws();
    if (eat('(')) {
      LeibnizPoly p = poly();
      if (!eat(')'))
        fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
        fail("expected variable index after 'x'");
      long idx = integer();
      if (idx < 1)
        fail("variable indices start at 1");
      return var_poly(field_, int(idx));
    }
    fail("expected a factor");
  }
};

std::string format_word(const Word &w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i])
      ++j;
    if (!out.empty())
      out += ' ';
    out += "x" + std::to_string(w[i]);
    if (j - i > 1)
      out += "^(" + std::to_string(j - i) + ")";
    i = j;
  }
  return out;
}

} // namespace

LeibnizPoly parse_poly(const Field &field, const std::string &text) {
  return Parser(field, text).parse();
}

std::string format_poly(const LeibnizPoly &f) {
  if (f.is_zero())
    return "0";
  const Field &F = f.field();
  std::string out;
  bool first = true;
  for (auto &[w, c] : f.terms()) {
    Scalar a = c;
    bool neg = false;
    if (!F.is_finite() && a.rat() < 0) {
      neg = true;
      a = F.neg(a);
    }
    if (first) {
      if (neg)
        out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (!F.is_one(a)) {
      std::string cs = F.to_string(a);
      bool plain = cs.find('t') == std::string::npos;
      out += plain ? cs : "[" + cs + "]";
      out += ' ';
    }
    out += format_word(w);
  }
  return out;
}

} // namespace leibniz
