#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "leibniz/commpoly.hpp"
#include "leibniz/linalg.hpp"

using namespace leibniz;

TEST_CASE("field spec parsing and arithmetic") {
  Field Q = Field::parse("Q");
  CHECK(Q.to_string() == "Q");
  CHECK(Q.cardinality_string() == "infinite");
  // 1/2 + 1/3 = 5/6
  Scalar r = Q.add(Q.from_fraction(1, 2), Q.from_fraction(1, 3));
  CHECK(Q.to_string(r) == "5/6");

  Field F7 = Field::parse("GF(7)");
  CHECK(F7.q() == 7);
  CHECK(F7.to_string(F7.inv(F7.from_int(3))) == "5");

  CHECK_THROWS_AS(Field::parse("GF(6)"), parse_error);   // non-prime
  CHECK_THROWS_AS(Field::parse("GF(101)"), parse_error); // above the cap
  CHECK_THROWS_AS(Field::parse("GF(2^4)"), parse_error); // degree cap
  CHECK_THROWS_AS(Field::parse("gf(7)"), parse_error);
}

TEST_CASE("GF(4) uses the pinned modulus t^2+t+1") {
  // oracle: t^2+t+1 is the unique monic irreducible with t*t = t+1
  // brute-force irreducibility over GF(2): no root in {0,1}
  auto value = [](unsigned x) { return (x * x + x + 1) % 2; };
  CHECK(value(0) == 1);
  CHECK(value(1) == 1);

  Field F4 = Field::parse("GF(4)");
  CHECK(F4.q() == 4);
  CHECK(F4.modulus() == std::vector<unsigned>{1, 1, 1});
  Scalar t = F4.parse_scalar("t");
  CHECK(F4.to_string(F4.mul(t, t)) == "t+1");
  CHECK(F4.to_string(F4.parse_scalar("t+1")) == "t+1");
  // every nonzero element has order dividing 3
  for (auto &a : F4.elements()) {
    if (F4.is_zero(a))
      continue;
    CHECK(F4.is_one(F4.pow(a, 3)));
  }
}

TEST_CASE("field axioms on random samples") {
  testgen::Rng rng(20240817);
  for (auto spec : {"Q", "GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)",
                    "GF(9)", "GF(25)", "GF(27)", "GF(97)"}) {
    Field F = Field::parse(spec);
    for (int i = 0; i < 1000; ++i) {
      Scalar a = testgen::random_scalar(rng, F);
      Scalar b = testgen::random_scalar(rng, F);
      Scalar c = testgen::random_scalar(rng, F);
      CHECK(F.equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
      CHECK(F.equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
      if (!F.is_zero(a))
        CHECK(F.is_one(F.mul(a, F.inv(a))));
    }
  }
}

TEST_CASE("frobenius_reduce examples") {
  Field F2 = Field::gf(2);
  CommPoly f(F2); // x1^2 + x1
  f.add_term({2}, F2.one());
  f.add_term({1}, F2.one());
  CHECK(frobenius_reduce(f).is_zero()); // 2 x1 = 0
  CHECK(is_zero_function(f));

  Field F3 = Field::gf(3);
  CommPoly g(F3); // x1^3
  g.add_term({3}, F3.one());
  CommPoly x1(F3);
  x1.add_term({1}, F3.one());
  CHECK(frobenius_reduce(g) == x1);

  CommPoly h(F3); // x1^5 x2 -> x1^3 x2 -> x1 x2
  h.add_term({5, 1}, F3.one());
  CommPoly x1x2(F3);
  x1x2.add_term({1, 1}, F3.one());
  CHECK(frobenius_reduce(h) == x1x2);
  // oracle: exhaustive function-table comparison over GF(3)^2
  for (auto &a : F3.elements())
    for (auto &b : F3.elements()) {
      std::vector<Scalar> pt{a, b};
      CHECK(F3.equal(h.eval(pt), frobenius_reduce(h).eval(pt)));
    }
}

TEST_CASE("frobenius_reduce preserves the induced function") {
  testgen::Rng rng(7);
  for (auto spec : {"GF(2)", "GF(3)", "GF(4)"}) {
    Field F = Field::parse(spec);
    auto elems = F.elements();
    for (int trial = 0; trial < 60; ++trial) {
      CommPoly f(F);
      int terms = testgen::uniform(rng, 1, 5);
      for (int t = 0; t < terms; ++t) {
        CommPoly::Expt e;
        for (int v = 0; v < 3; ++v)
          e.push_back(testgen::uniform(rng, 0, 2 * int(F.q())));
        f.add_term(std::move(e), testgen::random_scalar(rng, F));
      }
      CommPoly r = frobenius_reduce(f);
      for (auto &a : elems)
        for (auto &b : elems)
          for (auto &c : elems) {
            std::vector<Scalar> pt{a, b, c};
            CHECK(F.equal(f.eval(pt), r.eval(pt)));
          }
    }
  }
}

TEST_CASE("is_zero_function") {
  Field F2 = Field::gf(2);
  CommPoly f(F2); // x1 x2^2 - x1 x2
  f.add_term({1, 2}, F2.one());
  f.add_term({1, 1}, F2.neg(F2.one()));
  CHECK(is_zero_function(f)); // oracle: all 4 points checked below
  for (auto &a : F2.elements())
    for (auto &b : F2.elements())
      CHECK(F2.is_zero(f.eval({a, b})));

  Field Q = Field::rationals();
  CommPoly g(Q); // x1^2 + x1 over Q
  g.add_term({2}, Q.one());
  g.add_term({1}, Q.one());
  CHECK_FALSE(is_zero_function(g));
}

TEST_CASE("is_zero_function agrees with brute force (deg <= 2q, 2 vars)") {
  testgen::Rng rng(99);
  for (auto spec : {"GF(2)", "GF(3)"}) {
    Field F = Field::parse(spec);
    auto elems = F.elements();
    for (int trial = 0; trial < 300; ++trial) {
      CommPoly f(F);
      int terms = testgen::uniform(rng, 1, 4);
      for (int t = 0; t < terms; ++t)
        f.add_term({testgen::uniform(rng, 0, 2 * int(F.q())),
                    testgen::uniform(rng, 0, 2 * int(F.q()))},
                   testgen::random_scalar(rng, F));
      bool brute = true;
      for (auto &a : elems)
        for (auto &b : elems)
          if (!F.is_zero(f.eval({a, b})))
            brute = false;
      CHECK(is_zero_function(f) == brute);
    }
  }
}

TEST_CASE("rank examples") {
  Field Q = Field::rationals();
  auto s = [&](long v) { return Q.from_int(v); };
  CHECK(matrix_rank(Q, {{s(1), s(0)}, {s(0), s(1)}}) == 2);
  CHECK(matrix_rank(Q, {{s(0), s(0), s(0)},
                        {s(0), s(0), s(0)},
                        {s(0), s(0), s(0)}}) == 0);
  CHECK(matrix_rank(Q, {{s(1), s(2)}, {s(2), s(4)}}) == 1);
  CHECK_THROWS_AS(matrix_rank(Q, {{s(1)}, {s(1), s(2)}}), domain_error);
}

TEST_CASE("rank invariances on random matrices") {
  testgen::Rng rng(4242);
  for (auto spec : {"Q", "GF(3)", "GF(4)"}) {
    Field F = Field::parse(spec);
    for (int trial = 0; trial < 50; ++trial) {
      int r = testgen::uniform(rng, 1, 6), c = testgen::uniform(rng, 1, 6);
      std::vector<std::vector<Scalar>> M((std::size_t(r)));
      for (auto &row : M)
        for (int j = 0; j < c; ++j)
          row.push_back(testgen::random_scalar(rng, F));
      std::vector<std::vector<Scalar>> T((std::size_t(c)));
      for (int j = 0; j < c; ++j)
        for (int i = 0; i < r; ++i)
          T[std::size_t(j)].push_back(M[std::size_t(i)][std::size_t(j)]);
      CHECK(matrix_rank(F, M) == matrix_rank(F, T));
      std::shuffle(M.begin(), M.end(), rng);
      CHECK(matrix_rank(F, M) == matrix_rank(F, T));
    }
  }
}

TEST_CASE("extension field printing and parsing") {
  Field F9 = Field::parse("GF(9)");
  CHECK(F9.modulus() == std::vector<unsigned>{1, 0, 1}); // t^2+1
  Scalar v = F9.parse_scalar("2t+1");
  CHECK(F9.to_string(v) == "2t+1");
  Field F8 = Field::parse("GF(8)");
  CHECK(F8.modulus() == std::vector<unsigned>{1, 1, 0, 1}); // t^3+t+1
  Field F27 = Field::parse("GF(27)");
  CHECK(F27.modulus() == std::vector<unsigned>{1, 2, 0, 1}); // t^3+2t+1
  Field F25 = Field::parse("GF(25)");
  CHECK(F25.modulus() == std::vector<unsigned>{2, 0, 1}); // t^2+2
}
