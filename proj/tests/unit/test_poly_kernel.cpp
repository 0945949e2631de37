#include <doctest.h>

#include "adjlab/parser.hpp"
#include "adjlab/series.hpp"
#include "adjlab/slice.hpp"

using namespace adjlab;

namespace {

RingPtr qring2() { return PolyRing::make({"x", "y"}, CoeffField::rationals()); }

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(r, s);
}

// independent random polynomial generator for property tests
Polynomial random_poly(XorShift64& rng, const RingPtr& ring, int max_terms,
                       int max_deg, int max_coeff) {
  std::vector<Term> ts;
  int nt = static_cast<int>(rng.uniform_int(0, max_terms));
  for (int t = 0; t < nt; ++t) {
    ExponentVec e(ring->arity());
    for (auto& v : e)
      v = static_cast<std::int32_t>(rng.uniform_int(0, max_deg));
    std::int64_t c = rng.uniform_int(-max_coeff, max_coeff);
    ts.push_back(Term{std::move(e), ring->field().from_int(c)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

TruncatedSeries random_series(XorShift64& rng, const CoeffField& F,
                              std::size_t prec) {
  std::vector<Coeff> cs;
  for (std::size_t i = 0; i < prec; ++i)
    cs.push_back(F.from_int(rng.uniform_int(-4, 4)));
  return TruncatedSeries::from_coeffs(F, std::move(cs));
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
  auto r = qring2();
  CHECK(P(r, "x + y") + P(r, "x - y") == P(r, "2*x"));
  Polynomial f = P(r, "3*x^2*y - y + 5");
  CHECK(f * Polynomial::from_int(r, 1) == f);
  CHECK(P(r, "x + y") * P(r, "x - y") == P(r, "x^2 - y^2"));
}

TEST_CASE("ring mismatch is rejected") {
  auto r = qring2();
  auto s = PolyRing::make({"x", "y"}, CoeffField::prime_field(7));
  CHECK_THROWS_AS(P(r, "x") + P(s, "x"), RingMismatchError);
}

TEST_CASE("partial derivative examples") {
  auto r = qring2();
  CHECK(P(r, "x^2*y").derivative(0) == P(r, "2*x*y"));
  CHECK(P(r, "y^3").derivative(0).is_zero());
  CHECK(P(r, "x^2 - y^2").derivative(1) == P(r, "-2*y"));
  CHECK_THROWS(P(r, "x").derivative(5));
}

TEST_CASE("derivative in positive characteristic kills p-th powers") {
  auto r = PolyRing::make({"x"}, CoeffField::prime_field(3));
  CHECK(P(r, "x^3").derivative(0).is_zero());
}

TEST_CASE("substitute_series examples") {
  auto r = qring2();
  const auto& F = r->field();
  auto t = TruncatedSeries::monomial_t(F, 5, 1, F.one());

  SUBCASE("xy on (t, t)") {
    TruncatedSeries got = substitute_series(P(r, "x*y"), {t, t}, 5);
    CHECK(got == TruncatedSeries::monomial_t(F, 5, 2, F.one()));
  }
  SUBCASE("x^2-y^2 vanishes on the diagonal arc") {
    TruncatedSeries got = substitute_series(P(r, "x^2 - y^2"), {t, t}, 5);
    CHECK(got.known_zero());
  }
  SUBCASE("x^2-y^2 on (t, t+t^2) mod t^4") {
    // oracle: direct coefficient collection of (t)^2 - (t+t^2)^2
    //   = t^2 - (t^2 + 2t^3 + t^4) = -2t^3 mod t^4
    auto t4 = TruncatedSeries::monomial_t(F, 4, 1, F.one());
    auto t2 = TruncatedSeries::monomial_t(F, 4, 2, F.one());
    TruncatedSeries got = substitute_series(P(r, "x^2 - y^2"), {t4, t4 + t2}, 4);
    TruncatedSeries want(F, 4);
    want.set_coeff(3, F.from_int(-2));
    CHECK(got == want);
    CHECK(got.order().is_exact());
    CHECK(got.order().value() == 3);
  }
  SUBCASE("precision mismatch is an error") {
    auto t3 = TruncatedSeries::monomial_t(F, 3, 1, F.one());
    CHECK_THROWS_AS(substitute_series(P(r, "x*y"), {t3, t3}, 5), PrecisionError);
  }
}

TEST_CASE("series order honesty") {
  const auto F = CoeffField::rationals();
  TruncatedSeries z(F, 6);
  CHECK(!z.order().is_exact());
  CHECK(z.order().value() == 6);  // "at least 6", never an exact claim
}

TEST_CASE("parser grammar") {
  auto r = qring2();
  CHECK(P(r, "-x + - y") == P(r, "-(x + y)"));
  CHECK(P(r, "2^3") == Polynomial::from_int(r, 8));
  CHECK_THROWS_AS(P(r, "2x"), ParseError);
  CHECK_THROWS_AS(P(r, "x y"), ParseError);
  CHECK_THROWS_AS(P(r, "x*"), ParseError);
  CHECK_THROWS_AS(P(r, "z + 1"), ParseError);
  try {
    parse_polynomial(r, "x +\n  @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 3);
  }
}

TEST_CASE("parser uses x1 x2 x3 style names") {
  auto r3 = PolyRing::make({"x1", "x2", "x3"}, CoeffField::rationals());
  Polynomial f = parse_polynomial(r3, "x1^2*x2 - 3*x3");
  CHECK(f.degree() == 3);
  CHECK(f.term_count() == 2);
}

TEST_CASE("ring axioms on randomized polynomials") {
  auto r = PolyRing::make({"x", "y", "z"}, CoeffField::rationals());
  XorShift64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_poly(rng, r, 5, 4, 9);
    Polynomial b = random_poly(rng, r, 5, 4, 9);
    Polynomial c = random_poly(rng, r, 5, 4, 9);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("ring axioms over a prime field") {
  auto r = PolyRing::make({"x", "y"}, CoeffField::prime_field(32003));
  XorShift64 rng(99);
  for (int i = 0; i < 50; ++i) {
    Polynomial a = random_poly(rng, r, 4, 3, 40000);
    Polynomial b = random_poly(rng, r, 4, 3, 40000);
    CHECK(a * b == b * a);
    CHECK((a + b) * (a - b) == a * a - b * b);
  }
}

TEST_CASE("Leibniz rule exactly") {
  auto r = PolyRing::make({"x", "y", "z"}, CoeffField::rationals());
  XorShift64 rng(5);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = random_poly(rng, r, 5, 4, 9);
    Polynomial g = random_poly(rng, r, 5, 4, 9);
    std::size_t v = static_cast<std::size_t>(rng.uniform_int(0, 2));
    CHECK((f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST_CASE("substitution is multiplicative mod t^N") {
  auto r = qring2();
  const auto& F = r->field();
  XorShift64 rng(7);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = random_poly(rng, r, 4, 3, 5);
    Polynomial g = random_poly(rng, r, 4, 3, 5);
    std::vector<TruncatedSeries> im{random_series(rng, F, 6),
                                    random_series(rng, F, 6)};
    TruncatedSeries lhs = substitute_series(f * g, im, 6);
    TruncatedSeries rhs = substitute_series(f, im, 6) * substitute_series(g, im, 6);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical printing is deterministic and order-respecting") {
  auto r = qring2();
  Polynomial f = P(r, "y + x^2 - 1 + x*y");
  CHECK(f.to_string() == "x^2 + x*y + y - 1");
  CHECK(P(r, "x - x").to_string() == "0");
}

TEST_CASE("ring validation") {
  CHECK_THROWS(PolyRing::make({"x", "x"}, CoeffField::rationals()));
  CHECK_THROWS(PolyRing::make({""}, CoeffField::rationals()));
  CHECK_THROWS(CoeffField::prime_field(6));
  CHECK_THROWS(CoeffField::prime_field(1u << 31));
  CHECK(is_prime_u32(32003));
}
