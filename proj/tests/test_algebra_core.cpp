#include <doctest.h>

#include "fglab/error.hpp"
#include "fglab/polynomial.hpp"
#include "fglab/series.hpp"
#include "support.hpp"

using namespace fglab;
using namespace testing_support;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an fglab::Error");
  return Errc::InvalidArgument;
}

TruncatedSeries uni(const Ring& r, int n, std::vector<BigRational> c) {
  return TruncatedSeries::univariate(r, n, c);
}

GradedPolynomial random_poly(const Ring& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 2), count(0, 4);
  GradedPolynomial p(r);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e;
    for (std::size_t g = 0; g < r->size(); ++g) e.push_back(exp(rng));
    p.add_term(Monomial(e), small_rational(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("BigRational is stored reduced") {
  const BigRational q(BigInteger(6), BigInteger(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(q.to_string() == "-3/2");
  CHECK(BigRational(0).to_string() == "0");
  CHECK(BigRational::parse("10/4") == BigRational(5, 2));
  CHECK(BigRational::parse("-7").to_string() == "-7");
  CHECK(code_of([] { BigRational::parse("1/0"); }) == Errc::DivisionByZero);
  CHECK(code_of([] { BigRational::parse("abc"); }) == Errc::ParseError);
  CHECK(code_of([] { BigRational::parse("1/-2"); }) == Errc::ParseError);
}

TEST_CASE("make_ring") {
  SUBCASE("empty rationals") { CHECK(make_ring(BaseRing::rationals())->size() == 0); }
  SUBCASE("p-local with generators keeps order") {
    const auto r = make_ring(BaseRing::p_local(2), {{"m1", 1}, {"m3", 3}});
    REQUIRE(r->size() == 2);
    CHECK(r->generators()[0].name == "m1");
    CHECK(r->generators()[1].weight == 3);
  }
  SUBCASE("errors") {
    CHECK(code_of([] { make_ring(BaseRing::p_local(4)); }) == Errc::NotPrime);
    CHECK(code_of([] { make_ring(BaseRing::p_local(1)); }) == Errc::NotPrime);
    CHECK(code_of([] { make_ring(BaseRing::rationals(), {{"a", 1}, {"a", 2}}); }) == Errc::DuplicateGenerator);
    CHECK(code_of([] { make_ring(BaseRing::rationals(), {{"", 1}}); }) == Errc::EmptyName);
  }
}

TEST_CASE("base ring membership and units") {
  CHECK(BaseRing::integers().contains(3));
  CHECK_FALSE(BaseRing::integers().contains(BigRational(1, 2)));
  CHECK(BaseRing::p_local(2).contains(BigRational(1, 3)));
  CHECK_FALSE(BaseRing::p_local(2).contains(BigRational(1, 2)));
  CHECK(BaseRing::p_local(2).is_unit(BigRational(3, 5)));
  CHECK_FALSE(BaseRing::p_local(2).is_unit(2));
  CHECK(BaseRing::integers().is_unit(-1));
  CHECK_FALSE(BaseRing::integers().is_unit(2));
}

TEST_CASE("polynomial arithmetic") {
  const auto r = make_ring(BaseRing::rationals(), {{"m1", 1}, {"m2", 2}});
  const auto m1 = GradedPolynomial::generator(r, "m1");
  const auto m2 = GradedPolynomial::generator(r, "m2");

  CHECK((m1 + m2) * (m1 - m2) == m1 * m1 - m2 * m2);
  const auto p = m1 * m2 + GradedPolynomial::constant(r, 3);
  const auto zero = p + (-p);
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());
  CHECK(m1.scaled(3).scaled(BigRational(1, 2)) == m1.scaled(BigRational(3, 2)));
  CHECK((m1 * m2).homogeneous_weight() == 3);
  CHECK_FALSE((m1 + m2).homogeneous_weight().has_value());
  CHECK(m1.pow(3).to_string() == "m1^3");
  CHECK((m1.scaled(BigRational(-1, 2)) + m2).to_string() == "m2 - 1/2*m1");

  const auto other = make_ring(BaseRing::rationals(), {{"a", 1}});
  CHECK(code_of([&] { (void)(m1 + GradedPolynomial::generator(other, "a")); }) == Errc::RingMismatch);
  const auto z = make_ring(BaseRing::integers(), {{"a", 1}});
  CHECK(code_of([&] { GradedPolynomial::generator(z, "a").scaled(BigRational(1, 2)); }) == Errc::NotInRing);
  CHECK(code_of([&] { GradedPolynomial::constant(make_ring(BaseRing::p_local(3)), BigRational(1, 3)); }) ==
        Errc::NotInRing);
}

TEST_CASE("polynomial ring laws on random inputs") {
  const auto r = make_ring(BaseRing::rationals(), {{"a", 1}, {"b", 2}, {"c", 3}});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    const auto product = a * b;
    for (const auto& [m, coeff] : product.terms()) {
      (void)coeff;
      bool found = false;
      for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
          if (ma * mb == m && ma.weight(*r) + mb.weight(*r) == m.weight(*r)) found = true;
      CHECK(found);
    }
  }
  const auto a = GradedPolynomial::generator(r, "a"), b = GradedPolynomial::generator(r, "b");
  CHECK((a * a + b).is_homogeneous_of(2));
  CHECK(((a * a + b) * (a * b)).is_homogeneous_of(5));
}

TEST_CASE("assert_p_local") {
  const auto q = make_ring(BaseRing::rationals());
  CHECK(assert_p_local(GradedPolynomial::constant(q, BigRational(1, 3)), 2));
  CHECK_FALSE(assert_p_local(GradedPolynomial::constant(q, BigRational(1, 2)), 2));
  CHECK(assert_p_local(GradedPolynomial(q), 2));
  CHECK(assert_p_local(GradedPolynomial(q), 7));

  std::mt19937 rng(5);
  const auto r = make_ring(BaseRing::rationals(), {{"a", 1}});
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(r, rng), b = random_poly(r, rng);
    if (assert_p_local(a, 3) && assert_p_local(b, 3)) CHECK(assert_p_local(a * b, 3));
  }
}

TEST_CASE("series arithmetic") {
  const auto q = q_ring();
  CHECK(uni(q, 5, {1, 1}) * uni(q, 5, {1, -1}) == uni(q, 5, {1, 0, -1}));
  CHECK(uni(q, 3, {1}) / uni(q, 3, {1, -1}) == uni(q, 3, {1, 1, 1, 1}));
  // Result truncation is the smaller one.
  CHECK((uni(q, 5, {1, 1}) * uni(q, 2, {1, 1})).truncation() == 2);

  const auto z = z_ring();
  CHECK(code_of([&] { (void)(uni(z, 3, {1}) / uni(z, 3, {2, 1})); }) == Errc::NonInvertibleLeadingTerm);
  CHECK(code_of([&] { (void)(uni(q, 3, {1}) / uni(q, 3, {0, 1})); }) == Errc::NonInvertibleLeadingTerm);
  CHECK(code_of([&] { (void)(uni(q, 3, {1}) + TruncatedSeries::variable(q, 2, 0, 3)); }) == Errc::ArityMismatch);
  CHECK(code_of([&] { (void)(uni(q, 3, {1}) + uni(z, 3, {1})); }) == Errc::RingMismatch);
  // Over Q any nonzero scalar constant is invertible.
  CHECK(uni(q, 2, {1}) / uni(q, 2, {2}) == uni(q, 2, {BigRational(1, 2)}));
}

TEST_CASE("division property on random inputs") {
  const auto r = make_ring(BaseRing::rationals(), {{"a", 1}});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_strict(r, 6, rng) + uni(r, 6, {small_rational(rng)});
    auto b = random_strict(r, 6, rng) + uni(r, 6, {1 + BigRational(trial % 3)});
    CHECK((a / b) * b == a);
  }
  const auto x = TruncatedSeries::variable(r, 2, 0, 4), y = TruncatedSeries::variable(r, 2, 1, 4);
  const auto one = TruncatedSeries::constant(r, 2, 4, GradedPolynomial::constant(r, 1));
  const auto b = one + x * y + x.pow(2);
  CHECK((x / b) * b == x);
}

TEST_CASE("series composition") {
  const auto q = q_ring();
  const auto t = identity_series(q, 4);
  std::mt19937 rng(1);
  const auto g = random_strict(q, 4, rng);
  CHECK(compose(t, g) == g);
  // (t + t^3)^2 = t^2 + 2 t^4 + O(t^5)
  CHECK(compose(uni(q, 4, {0, 0, 1}), uni(q, 4, {0, 1, 0, 1})) == uni(q, 4, {0, 0, 1, 0, 2}));

  // f = t + t^2, g = t - t^2: brute-force substitution in the dense oracle.
  const oracle::Uni f_dense{0, 1, 1, 0}, g_dense{0, 1, -1, 0};
  const auto expected = oracle::compose(f_dense, g_dense, 3);
  CHECK(expected == oracle::Uni{0, 1, 0, -2});
  CHECK(compose(uni(q, 3, {0, 1, 1}), uni(q, 3, {0, 1, -1})) == from_dense(q, expected));

  CHECK(code_of([&] { compose(t, uni(q, 4, {1, 1})); }) == Errc::NonzeroConstantTerm);
  CHECK(code_of([&] { compose(t, identity_series(z_ring(), 4)); }) == Errc::RingMismatch);
}

TEST_CASE("series reversion") {
  const auto q = q_ring();
  CHECK(revert(identity_series(q, 6)) == identity_series(q, 6));

  // Lagrange inversion in the oracle gives the Catalan signs.
  const auto expected = oracle::revert(oracle::Uni{0, 1, 1, 0, 0}, 4);
  CHECK(expected == oracle::Uni{0, 1, -1, 2, -5});
  CHECK(revert(uni(q, 4, {0, 1, 1})) == from_dense(q, expected));

  const auto g = revert(uni(q, 3, {0, 1, 1, 1}));
  CHECK(g == uni(q, 3, {0, 1, -1, 1}));
  CHECK(compose(uni(q, 3, {0, 1, 1, 1}), g) == identity_series(q, 3));

  // Integral coefficients stay integral.
  const auto z = z_ring();
  CHECK(revert(uni(z, 4, {0, 1, 1})) == uni(z, 4, {0, 1, -1, 2, -5}));
  CHECK(code_of([&] { revert(uni(z, 4, {0, 2, 1})); }) == Errc::NonInvertibleLinearCoefficient);
  CHECK(code_of([&] { revert(uni(q, 4, {0, 0, 1})); }) == Errc::NonInvertibleLinearCoefficient);
}

TEST_CASE("reversion property on 50 random series") {
  const auto r = make_ring(BaseRing::rationals(), {{"a2", 1}, {"a3", 2}});
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_strict(r, 7, rng);
    if (trial % 5 == 0) f = f.scaled(BigRational(trial + 1, 3));  // non-unit-one linear term
    const auto g = revert(f);
    CHECK(compose(f, g) == identity_series(r, 7));
    CHECK(compose(g, f) == identity_series(r, 7));
  }
}

TEST_CASE("differentiate and integrate") {
  const auto z = z_ring();
  CHECK(differentiate(uni(z, 4, {0, 0, 0, 1})) == uni(z, 4, {0, 0, 3}));
  const auto i1 = integrate(uni(z, 4, {0, 1}));
  CHECK(i1.ring()->base().kind == BaseKind::Rationals);
  CHECK(i1 == uni(q_ring(), 4, {0, 0, BigRational(1, 2)}));
  CHECK(integrate(uni(z, 4, {1})) == uni(q_ring(), 4, {0, 1}));
  // Integration keeps the stated truncation.
  CHECK(integrate(uni(z, 2, {1, 1, 1})) == uni(q_ring(), 2, {0, 1, BigRational(1, 2)}));
}

TEST_CASE("multivariate substitution matches the dense oracle") {
  const auto q = q_ring();
  const int n = 6;
  const oracle::Uni f{0, 1, BigRational(1, 2).raw(), 3, 0, -1, 2};
  const oracle::Bi g = oracle::add(oracle::in_x(oracle::Uni{0, 1, 2, 0, 0, 0, 1}, n),
                                   oracle::in_y(oracle::Uni{0, 1, 0, -1, 0, 0, 0}, n));
  const auto expected = oracle::compose(f, oracle::mul(g, g, n), n);
  const auto gs = from_dense_bi(q, g);
  CHECK(compose(from_dense(q, f), gs * gs) == from_dense_bi(q, expected));
}
