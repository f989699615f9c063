#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "leibniz/parse.hpp"

using namespace leibniz;

namespace {
const Field Q = Field::rationals();

LeibnizPoly P(const std::string &text) { return parse_poly(Q, text); }
} // namespace

TEST_CASE("lproduct normalizes through the Leibniz identity") {
  // x1 (x2 x3) = <1 2 3> - <1 3 2>
  CHECK(lproduct(P("x1"), P("x2 x3")) == P("x1 x2 x3 - x1 x3 x2"));
  // <1 2> <3> = <1 2 3>
  CHECK(lproduct(P("x1 x2"), P("x3")) == P("x1 x2 x3"));
  // <1 2> <3 4> = <1 2 3 4> - <1 2 4 3>
  CHECK(lproduct(P("x1 x2"), P("x3 x4")) == P("x1 x2 x3 x4 - x1 x2 x4 x3"));
}

TEST_CASE("left_power") {
  CHECK(left_power(P("x1"), P("x2"), 3) == P("x1 x2 x2 x2"));
  CHECK(left_power(P("x1"), P("x2"), 0) == P("x1"));
  // bilinearity oracle, expanded by hand
  CHECK(left_power(P("x1"), P("x2 + x3"), 2) ==
        P("x1 x2 x2 + x1 x2 x3 + x1 x3 x2 + x1 x3 x3"));
}

TEST_CASE("substitute") {
  std::map<int, LeibnizPoly> rename{{1, P("x3")}, {2, P("x4")}};
  CHECK(substitute(P("x1 x2"), rename) == P("x3 x4"));

  std::map<int, LeibnizPoly> prod{{1, P("x1")}, {2, P("x3 x4")}};
  CHECK(substitute(P("x1 x2"), prod) == P("x1 x3 x4 - x1 x4 x3"));

  LeibnizPoly s3 = P("x1 x2 x3 - x1 x3 x2 - x2 x1 x3 + x2 x3 x1 + x3 x1 x2 "
                     "- x3 x2 x1");
  std::map<int, LeibnizPoly> id{{1, P("x1")}, {2, P("x2")}, {3, P("x3")}};
  CHECK(substitute(s3, id) == s3);

  std::map<int, LeibnizPoly> missing{{1, P("x3")}};
  CHECK_THROWS_AS(substitute(P("x1 x2"), missing), domain_error);
}

TEST_CASE("enumerate_words") {
  CHECK(enumerate_words(multilinear(3)).size() == 6);
  Multidegree d{{1, 2}, {2, 1}};
  std::vector<Word> expect{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
  CHECK(enumerate_words(d) == expect);
  Multidegree single{{5, 1}};
  CHECK(enumerate_words(single) == std::vector<Word>{{5}});
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_words(multilinear(n));
    std::set<Word> uniq(all.begin(), all.end());
    long fact = 1;
    for (int i = 2; i <= n; ++i)
      fact *= i;
    CHECK(long(uniq.size()) == fact);
  }
}

TEST_CASE("multidegree_of") {
  CHECK(*multidegree_of(P("x1 x2 x3 - x2 x1 x3")) ==
        Multidegree{{1, 1}, {2, 1}, {3, 1}});
  CHECK_FALSE(multidegree_of(P("x1 x1 + x1 x2")));
  LeibnizPoly s3 = P("x1 x2 x3 - x1 x3 x2 - x2 x1 x3 + x2 x3 x1 + x3 x1 x2 "
                     "- x3 x2 x1");
  CHECK(*multidegree_of(s3) == Multidegree{{1, 1}, {2, 1}, {3, 1}});
  CHECK_THROWS_AS(multidegree_of(zero_poly(Q)), domain_error);
}

TEST_CASE("leading_decomposition") {
  auto parts = leading_decomposition(P("x1 x2 + x2 x1"));
  CHECK(parts.size() == 2);
  CHECK(parts.at(1) == P("x1 x2"));
  CHECK(parts.at(2) == P("x2 x1"));

  LeibnizPoly s3 = P("x1 x2 x3 - x1 x3 x2 - x2 x1 x3 + x2 x3 x1 + x3 x1 x2 "
                     "- x3 x2 x1");
  auto sparts = leading_decomposition(s3);
  CHECK(sparts.at(1) == P("x1 x2 x3 - x1 x3 x2"));
  CHECK(sparts.at(2) == P("- x2 x1 x3 + x2 x3 x1"));
  CHECK(sparts.at(3) == P("x3 x1 x2 - x3 x2 x1"));
  LeibnizPoly sum(Q);
  for (auto &[v, p] : sparts)
    sum = sum + p;
  CHECK(sum == s3);

  CHECK(leading_decomposition(zero_poly(Q)).empty());
}

TEST_CASE("parser and printer") {
  CHECK(P("x1 (x2 x3)") == P("x1 x2 x3 - x1 x3 x2"));
  CHECK(P("x2 x1^(3)") == LeibnizPoly(Q, Word{2, 1, 1, 1}));
  CHECK(format_poly(P("x2 x1^(3)")) == "x2 x1^(3)");
  CHECK(format_poly(zero_poly(Q)) == "0");
  CHECK(format_poly(P("x1 x2 - x2 x1")) == "x1 x2 - x2 x1");
  CHECK(P("x2 x1^3") == P("x2 x1^(3)")); // ^n is left-normed as well
  CHECK(P("1/2 x1 x2") == P("x1 x2").scaled(Q.from_fraction(1, 2)));
  CHECK(format_poly(P("-x1 x2 + 2 x2 x1")) == "-x1 x2 + 2 x2 x1");
  // x^2 as leading factor
  CHECK(P("x1^2") == LeibnizPoly(Q, Word{1, 1}));
  // parenthesized subproducts expand through lproduct
  CHECK(P("(x1 x2) (x3 x4)") ==
        lproduct(P("x1 x2"), P("x3 x4")));
  CHECK_THROWS_AS(P("x1^0"), parse_error);
  CHECK_THROWS_AS(P("x0"), parse_error);
  CHECK_THROWS_AS(P("x1 +"), parse_error);
  CHECK_THROWS_AS(P("(x1 x2"), parse_error);
  try {
    P("x1 @");
  } catch (const parse_error &e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("right-normed single-variable cubes vanish") {
  for (int v = 1; v <= 8; ++v) {
    LeibnizPoly x = var_poly(Q, v);
    CHECK(lproduct(x, lproduct(x, x)).is_zero());
  }
}

TEST_CASE("extension-field coefficients bracket through the parser") {
  Field F4 = Field::parse("GF(4)");
  LeibnizPoly f(F4);
  f.add_term({1, 2}, F4.parse_scalar("t+1"));
  std::string text = format_poly(f);
  CHECK(text == "[t+1] x1 x2");
  CHECK(parse_poly(F4, text) == f);
}
