#include <doctest.h>

#include <set>

#include "adjlab/pfaffian.hpp"
#include "adjlab/qideal.hpp"
#include "adjlab/slice.hpp"

using namespace adjlab;

namespace {

RingPtr R2() { return PolyRing::make({"x", "y"}, CoeffField::rationals()); }
RingPtr R3() { return PolyRing::make({"x", "y", "z"}, CoeffField::rationals()); }

Ideal I(const RingPtr& r, std::vector<std::string> ss) {
  return Ideal::from_strings(r, ss);
}

Polynomial random_poly(XorShift64& rng, const RingPtr& ring, int max_terms,
                       int max_deg) {
  std::vector<Term> ts;
  int nt = static_cast<int>(rng.uniform_int(1, max_terms));
  for (int t = 0; t < nt; ++t) {
    ExponentVec e(ring->arity());
    for (auto& v : e) v = static_cast<std::int32_t>(rng.uniform_int(0, max_deg));
    ts.push_back(Term{std::move(e), ring->field().from_int(rng.uniform_int(-5, 5))});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace

TEST_CASE("groebner examples") {
  auto r = R2();
  SUBCASE("containment collapse") {
    auto gb = I(r, {"x^2", "x"}).groebner();
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == parse_polynomial(r, "x"));
  }
  SUBCASE("linear solve") {
    auto gb = I(r, {"x - y", "x + y"}).groebner();
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == parse_polynomial(r, "x"));
    CHECK(gb[1] == parse_polynomial(r, "y"));
  }
  SUBCASE("circle meets diagonal: leading terms {x, y^2}, dimension 0") {
    // hand derivation: substitute x = y into x^2+y^2-1 to get 2y^2 = 1
    Ideal circle = I(r, {"x^2 + y^2 - 1", "x - y"});
    auto gb = circle.groebner();
    std::set<std::string> lts;
    for (const auto& g : gb)
      lts.insert(Polynomial::monomial(r, g.leading_monomial(), r->field().one())
                     .to_string());
    CHECK(lts == std::set<std::string>{"x", "y^2"});
    CHECK(krull_dimension(circle) == 0);
    CHECK(circle.contains(parse_polynomial(r, "2*y^2 - 1")));
  }
}

TEST_CASE("reduced basis is presentation independent") {
  auto r = R3();
  XorShift64 rng(31);
  Ideal base = I(r, {"x*y - z^2", "x^2 - y*z"});
  for (int trial = 0; trial < 10; ++trial) {
    // regenerate by random unimodular combinations of the generators
    std::int64_t a = rng.uniform_int(-4, 4);
    Polynomial g0 = base.gens()[0];
    Polynomial g1 = base.gens()[1];
    Polynomial h0 = g0 + g1.scaled(r->field().from_int(a));
    Ideal regen(r, {h0, g1});
    CHECK(regen.equals(base));
    auto s1 = base.canonical_strings();
    auto s2 = regen.canonical_strings();
    CHECK(s1 == s2);
  }
}

TEST_CASE("ideal quotient examples") {
  auto r = R2();
  CHECK(ideal_quotient(I(r, {"x^2*y"}), I(r, {"y"})).equals(I(r, {"x^2"})));
  Ideal J = I(r, {"x^2*y - y^3"});
  CHECK(ideal_quotient(J, Ideal::unit(r)).equals(J));
  SUBCASE("factorization check oracle") {
    // (x-y)(x+y) = x^2-y^2 exactly, so the colon recovers the cofactor
    CHECK(parse_polynomial(r, "x - y") * parse_polynomial(r, "x + y") ==
          parse_polynomial(r, "x^2 - y^2"));
    CHECK(ideal_quotient(I(r, {"x^2 - y^2"}), I(r, {"x - y"}))
              .equals(I(r, {"x + y"})));
  }
}

TEST_CASE("saturation examples with stabilization exponent") {
  auto r = R2();
  SUBCASE("single colon suffices") {
    auto s = saturation(I(r, {"x^2*y"}), I(r, {"y"}));
    CHECK(s.ideal.equals(I(r, {"x^2"})));
    CHECK(s.exponent == 1);
  }
  SUBCASE("two colon iterations by hand") {
    // (x^2 y, x y^2) : x = (xy, y^2); (xy, y^2) : x = (y); (y) : x = (y)
    auto s = saturation(I(r, {"x^2*y", "x*y^2"}), I(r, {"x"}));
    CHECK(s.ideal.equals(I(r, {"y"})));
    CHECK(s.exponent == 2);
  }
  SUBCASE("saturation by the unit ideal is the identity") {
    auto s = saturation(I(r, {"x^2*y"}), Ideal::unit(r));
    CHECK(s.ideal.equals(I(r, {"x^2*y"})));
    CHECK(s.exponent == 0);
  }
}

TEST_CASE("sum, intersection, elimination examples") {
  auto r = R2();
  CHECK(ideal_intersection(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x*y"})));
  CHECK(ideal_sum(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x", "y"})));
  SUBCASE("hand elimination") {
    auto rt = PolyRing::make({"t", "x", "y"}, CoeffField::rationals());
    Ideal K = Ideal::from_strings(rt, {"t*x", "(1 - t)*y"});
    Ideal e = eliminate(K, {0});
    Ideal want = Ideal::from_strings(rt, {"x*y"});
    CHECK(e.equals(want));
  }
}

TEST_CASE("krull dimension examples") {
  auto r = R3();
  CHECK(krull_dimension(Ideal::zero(r)) == 3);
  CHECK(krull_dimension(I(r, {"x", "y"})) == 1);
  CHECK(krull_dimension(Ideal::unit(r)) == kDimEmpty);
  SUBCASE("plucker ideal of the generic 5x5 pfaffians has dimension 7") {
    AlternatingMatrix M = AlternatingMatrix::generic(5, CoeffField::rationals());
    Ideal IX(M.ring(), sub_pfaffians(M, 1));
    CHECK(krull_dimension(IX) == 7);
  }
}

TEST_CASE("krull dimension of monomial ideals matches subset brute force") {
  auto r = R3();
  XorShift64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ExponentVec> es;
    int k = static_cast<int>(rng.uniform_int(1, 4));
    for (int i = 0; i < k; ++i) {
      ExponentVec e(3);
      for (auto& v : e) v = static_cast<std::int32_t>(rng.uniform_int(0, 3));
      if (is_zero_mono(e)) e[0] = 1;
      es.push_back(std::move(e));
    }
    Ideal M = make_monomial_ideal(r, es);
    if (M.is_zero_ideal()) continue;

    // brute force: max |S| over variable subsets S such that no generator
    // is supported inside S
    auto gens = monomial_exponents(M);
    int best = -1;
    bool unit = false;
    for (const auto& g : gens)
      if (is_zero_mono(g)) unit = true;
    if (!unit) {
      for (int mask = 0; mask < 8; ++mask) {
        bool ok = true;
        for (const auto& g : gens) {
          bool inside = true;
          for (int v = 0; v < 3; ++v)
            if (g[v] > 0 && !(mask & (1 << v))) inside = false;
          if (inside) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
      }
    }
    CHECK(krull_dimension(M) == best);
  }
}

TEST_CASE("qideal representatives") {
  auto r = R2();
  SUBCASE("(m^2)^(1/2) at r=2") {
    Ideal m2 = I(r, {"x^2", "x*y", "y^2"});
    QIdeal q = QIdeal::of(m2, Rational(1, 2));
    CHECK(q.representative(2).equals(m2));
    CHECK_THROWS(q.representative(1));
  }
  SUBCASE("exponent arithmetic") {
    QIdeal q = QIdeal::of(I(r, {"x"}), Rational(3, 2))
                   .times(QIdeal::of(I(r, {"y"}), Rational(1, 2)));
    CHECK(q.common_denominator() == 2);
    CHECK(q.representative(2).equals(I(r, {"x^3*y"})));
  }
}

TEST_CASE("monomial order of ideal") {
  auto r = R2();
  CHECK(*monomial_order_of_ideal(MonomialValuation({1, 1}), I(r, {"x*y"})) == 2);
  CHECK(*monomial_order_of_ideal(MonomialValuation({2, 3}), I(r, {"x^3", "y^2"})) ==
        6);
  CHECK(!monomial_order_of_ideal(MonomialValuation({1, 1}), Ideal::zero(r)));
  auto r3 = R3();
  Ideal m2 = I(r3, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"});
  CHECK(*monomial_order_of_ideal(MonomialValuation({1, 1, 1}), m2) == 2);
  CHECK_THROWS(MonomialValuation({0, 1}));
}

TEST_CASE("monomial order is additive on products") {
  auto r = R3();
  XorShift64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ExponentVec> a, b;
    for (int i = 0; i < 2; ++i) {
      ExponentVec e(3), f(3);
      for (auto& v : e) v = static_cast<std::int32_t>(rng.uniform_int(0, 3));
      for (auto& v : f) v = static_cast<std::int32_t>(rng.uniform_int(0, 3));
      a.push_back(e);
      b.push_back(f);
    }
    Ideal A = make_monomial_ideal(r, a), B = make_monomial_ideal(r, b);
    std::vector<std::int64_t> w{
        rng.uniform_int(1, 5), rng.uniform_int(1, 5), rng.uniform_int(1, 5)};
    MonomialValuation val(w);
    auto oa = monomial_order_of_ideal(val, A);
    auto ob = monomial_order_of_ideal(val, B);
    auto op = monomial_order_of_ideal(val, ideal_product(A, B));
    REQUIRE(oa);
    REQUIRE(ob);
    REQUIRE(op);
    CHECK(*op == *oa + *ob);
  }
}

TEST_CASE("monomial integral closure") {
  auto r = R2();
  SUBCASE("the hull of x^2, y^2 picks up xy") {
    // oracle: (1,1) = (2,0)/2 + (0,2)/2 lies in the Newton polyhedron
    Ideal cl = monomial_integral_closure(I(r, {"x^2", "y^2"}));
    CHECK(cl.equals(I(r, {"x^2", "x*y", "y^2"})));
  }
  SUBCASE("principal monomial ideals are closed") {
    Ideal cl = monomial_integral_closure(I(r, {"x"}));
    CHECK(cl.equals(I(r, {"x"})));
  }
  SUBCASE("non-monomial input is rejected") {
    CHECK_THROWS(monomial_integral_closure(I(r, {"x + y"})));
  }
}

TEST_CASE("closure idempotence and monotonicity") {
  auto r = R2();
  XorShift64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ExponentVec> es;
    int k = static_cast<int>(rng.uniform_int(1, 3));
    for (int i = 0; i < k; ++i) {
      ExponentVec e{static_cast<std::int32_t>(rng.uniform_int(0, 4)),
                    static_cast<std::int32_t>(rng.uniform_int(0, 4))};
      if (is_zero_mono(e)) e[0] = 1;
      es.push_back(e);
    }
    Ideal M = make_monomial_ideal(r, es);
    Ideal cl = monomial_integral_closure(M);
    CHECK(cl.contains(M));
    CHECK(monomial_integral_closure(cl).equals(cl));
    // monotone: enlarge by one more generator
    auto es2 = es;
    es2.push_back({static_cast<std::int32_t>(rng.uniform_int(0, 4)),
                   static_cast<std::int32_t>(rng.uniform_int(0, 4))});
    if (is_zero_mono(es2.back())) es2.back()[1] = 1;
    Ideal M2 = make_monomial_ideal(r, es2);
    CHECK(monomial_integral_closure(M2).contains(cl));
  }
}

TEST_CASE("colon and intersection invariants on random small ideals") {
  auto r = R2();
  XorShift64 rng(52);
  int cases = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Ideal A(r, {random_poly(rng, r, 3, 2), random_poly(rng, r, 3, 2)});
    Ideal B(r, {random_poly(rng, r, 2, 2)});
    if (A.is_zero_ideal() || B.is_zero_ideal()) continue;
    Ideal q = ideal_quotient(A, B);
    CHECK(A.contains(ideal_product(q, B)));  // (A : B) * B inside A
    Ideal inter = ideal_intersection(A, B);
    CHECK(A.contains(inter));
    CHECK(B.contains(inter));
    Ideal s = ideal_sum(A, B);
    for (const auto& g : A.gens()) CHECK(s.contains(g));
    for (const auto& g : B.gens()) CHECK(s.contains(g));
    ++cases;
  }
  CHECK(cases >= 15);
}

TEST_CASE("sandwich certificate") {
  auto r = R2();
  SUBCASE("passing sandwich") {
    auto cert = sandwich_certificate(I(r, {"x^2", "x*y"}), I(r, {"x^2"}),
                                     I(r, {"x"}));
    CHECK(cert.lower_contained);
    CHECK(cert.upper_contains);
    // closures of (x^2) and (x) differ, and the certificate records it
    CHECK(cert.closure_checked);
    CHECK(!cert.closures_equal);
    CHECK(!cert.passed());
  }
  SUBCASE("closure mismatch reported") {
    auto cert = sandwich_certificate(I(r, {"x^2"}), I(r, {"x^3"}), I(r, {"x"}));
    CHECK(cert.lower_contained);
    CHECK(cert.upper_contains);
    CHECK(!cert.closures_equal);
    CHECK(!cert.passed());
    CHECK(!cert.failure_witness.empty());
  }
  SUBCASE("matching closures pass") {
    auto cert = sandwich_certificate(I(r, {"x^2", "y^2"}), I(r, {"x^2", "y^2"}),
                                     I(r, {"x^2", "x*y", "y^2"}));
    CHECK(cert.passed());
  }
}

TEST_CASE("qideal equivalence semantics") {
  auto r = R2();
  Ideal m = I(r, {"x", "y"});
  Ideal xy2 = I(r, {"x^2", "y^2"});
  Ideal full2 = I(r, {"x^2", "x*y", "y^2"});
  // (x^2, y^2) and m^2 share an integral closure
  CHECK(qideal_equivalent(QIdeal::of(xy2), QIdeal::of(full2)) ==
        QIdealEquivalence::Equivalent);
  CHECK(qideal_equivalent(QIdeal::of(m), QIdeal::of(full2)) ==
        QIdealEquivalence::Distinct);
  // rational exponents at a common denominator
  CHECK(qideal_equivalent(QIdeal::of(full2, Rational(1, 2)), QIdeal::of(m)) ==
        QIdealEquivalence::Equivalent);
}

TEST_CASE("budget errors are reported, not silent") {
  auto r = R3();
  GroebnerBudget tiny;
  tiny.max_degree = 2;
  Ideal hard = I(r, {"x^3 - y^2*z", "x*y^2 - z^3"});
  CHECK_THROWS_AS(hard.groebner(tiny), BudgetExceededError);
}
