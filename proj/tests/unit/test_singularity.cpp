#include <doctest.h>

#include "adjlab/defect.hpp"

using namespace adjlab;

namespace {

RingPtr R2() { return PolyRing::make({"x", "y"}, CoeffField::rationals()); }

Ideal I(const RingPtr& r, std::vector<std::string> ss) {
  return Ideal::from_strings(r, ss);
}

AffineSubscheme node_line() {
  auto r = R2();
  return AffineSubscheme(I(r, {"x - y"}));
}

}  // namespace

TEST_CASE("jacobian ideal examples") {
  SUBCASE("plane curve x^2 - y^2: 1x1 minors are the partials") {
    auto r = R2();
    AffineSubscheme X(I(r, {"x^2 - y^2"}));
    CHECK(X.codimension() == 1);
    Ideal jac = jacobian_ideal(X).ideal;
    CHECK(jac.equals(I(r, {"x^2 - y^2", "2*x", "2*y"})));
    CHECK(jac.equals(I(r, {"x", "y"})));  // same ideal, smaller presentation
  }
  SUBCASE("smooth coordinate line in A^3 has unit jacobian ideal") {
    auto r3 = PolyRing::make({"x", "y", "z"}, CoeffField::rationals());
    AffineSubscheme X(I(r3, {"x", "y"}));
    CHECK(X.codimension() == 2);
    Ideal jac = jacobian_ideal(X).ideal;
    CHECK(jac.is_unit());
  }
  SUBCASE("generic 5x5 pfaffian variety is singular exactly at the matrix rank locus") {
    AlternatingMatrix M = AlternatingMatrix::generic(5, CoeffField::rationals());
    AffineSubscheme X(Ideal(M.ring(), sub_pfaffians(M, 1)));
    CHECK(X.dimension() == 7);
    auto res = jacobian_ideal(X);
    CHECK(!res.ideal.is_unit());
    // co-supported on a strict closed subset: dim V(J') < dim X
    CHECK(krull_dimension(res.ideal) < 7);
  }
}

TEST_CASE("general slice with explicit generators: the node over the line") {
  auto r = R2();
  AffineSubscheme X = node_line();
  LciSlice Y = explicit_slice(X, {parse_polynomial(r, "x^2 - y^2")});
  CHECK(Y.residual_ideal.equals(I(r, {"x + y"})));
  Ideal cond = conductor_on_x(X, Y);
  CHECK(cond.equals(I(r, {"x", "y"})));
}

TEST_CASE("seeded random slices validate and are reproducible") {
  auto r3 = PolyRing::make({"x", "y", "z", "w"}, CoeffField::rationals());
  AffineSubscheme X(Ideal::from_strings(
      r3, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}));
  CHECK(X.codimension() == 2);
  LciSlice a = general_lci_slice(X, 5);
  LciSlice b = general_lci_slice(X, 5);
  CHECK(a.slice_ideal.equals(b.slice_ideal));
  CHECK(a.slice_ideal.gens()[0] == b.slice_ideal.gens()[0]);  // bit-exact
  CHECK(krull_dimension(a.slice_ideal) == X.dimension());
  // scheme union: I_Y = I_X intersect I_C
  Ideal inter = ideal_intersection(X.ideal(), a.residual_ideal);
  CHECK(inter.equals(a.slice_ideal));
  // the slice-union containments of the construction
  Ideal prod = ideal_product(X.ideal(), a.residual_ideal);
  CHECK(a.slice_ideal.contains(prod));
}

TEST_CASE("lci X sliced by itself has trivial conductor") {
  auto r = R2();
  AffineSubscheme X(I(r, {"x*y - 1"}));  // smooth hypersurface
  LciSlice Y = explicit_slice(X, {parse_polynomial(r, "x*y - 1")});
  CHECK(Y.residual_ideal.is_unit());
  CHECK(conductor_on_x(X, Y).is_unit());
}

TEST_CASE("divisorial power examples") {
  SUBCASE("principal case on the affine line") {
    auto r1 = PolyRing::make({"x"}, CoeffField::rationals());
    AffineSubscheme A1(Ideal::zero(r1));
    Ideal a = Ideal::from_strings(r1, {"x"});
    Ideal got = divisorial_power(a, 3, A1);
    CHECK(got.equals(Ideal::from_strings(r1, {"x^3"})));
  }
  SUBCASE("node: the conductor restricted to the line is (x)") {
    auto r = R2();
    AffineSubscheme X = node_line();
    LciSlice Y = explicit_slice(X, {parse_polynomial(r, "x^2 - y^2")});
    Ideal got = divisorial_power(conductor_on_x(X, Y), 1, X);
    CHECK(got.equals(I(r, {"x", "x - y"})));
  }
  SUBCASE("no nonzerodivisor is an error") {
    auto r = R2();
    AffineSubscheme X(I(r, {"x*y"}));
    // (x) vanishes on the branch x=0, so it consists of zerodivisors on O_X
    CHECK_THROWS_AS(divisorial_power(X.on_x(I(r, {"x"})), 1, X),
                    NonzerodivisorError);
  }
}

TEST_CASE("weak defect colon") {
  SUBCASE("lci: colon of the jacobian ideal by itself is the unit ideal") {
    auto r = R2();
    AffineSubscheme X(I(r, {"x^2 - y^2"}));
    Ideal jac = X.on_x(jacobian_ideal(X).ideal);
    Ideal colon = weak_defect_colon(X, 1, jac);
    CHECK(colon.is_unit());
  }
  SUBCASE("smooth X: trivially unit") {
    AffineSubscheme X = node_line();
    Ideal jac = X.on_x(jacobian_ideal(X).ideal);
    CHECK(jac.is_unit());
    CHECK(weak_defect_colon(X, 1, jac).is_unit());
  }
}

TEST_CASE("weak defect sum is unit for lci varieties") {
  auto r = R2();
  AffineSubscheme X(I(r, {"x^2 - y^3"}));
  WeakDefectSum sum = weak_defect_sum(X, 1, {3, 4, 5});
  CHECK(sum.ideal.is_unit());
  CHECK(sum.stabilized);
}

TEST_CASE("jrx from slice") {
  SUBCASE("node slice gives the unit candidate, verified") {
    auto r = R2();
    AffineSubscheme X = node_line();
    LciSlice Y = explicit_slice(X, {parse_polynomial(r, "x^2 - y^2")});
    JrxResult jrx = jrx_from_slice(X, Y, 1);
    CHECK(jrx.verified);
    CHECK(jrx.ideal.is_unit());
    // Eq.(3) for the node holds exactly, not just up to saturation
    AffineSubscheme Ysub(Y.slice_ideal);
    Ideal jy_on_x = X.on_x(jacobian_ideal(Ysub).ideal);
    Ideal o_d = divisorial_power(conductor_on_x(X, Y), 1, X);
    CHECK(X.on_x(ideal_product(jrx.ideal, o_d)).equals(jy_on_x));
  }
  SUBCASE("lci X sliced by itself recovers the jacobian ideal power") {
    auto r = R2();
    AffineSubscheme X(I(r, {"x^2 - y^3"}));  // cusp, lci
    LciSlice Y = explicit_slice(X, {parse_polynomial(r, "x^2 - y^3")});
    JrxResult jrx = jrx_from_slice(X, Y, 1);
    CHECK(jrx.verified);
    Ideal expect = X.on_x(jacobian_ideal(X).ideal);
    CHECK(jrx.ideal.equals(expect));
  }
}

TEST_CASE("pfaffian basics") {
  SUBCASE("2x2") {
    auto r = PolyRing::make({"a"}, CoeffField::rationals());
    AlternatingMatrix M(r, 2);
    M.set_entry(0, 1, parse_polynomial(r, "a"));
    CHECK(pfaffian(M) == parse_polynomial(r, "a"));
  }
  SUBCASE("4x4 generic expansion") {
    AlternatingMatrix M = AlternatingMatrix::generic(4, CoeffField::rationals());
    Polynomial want = parse_polynomial(
        M.ring(), "m12*m34 - m13*m24 + m14*m23");
    CHECK(pfaffian(M) == want);
  }
  SUBCASE("zero matrix") {
    auto r = PolyRing::make({"a"}, CoeffField::rationals());
    AlternatingMatrix M(r, 4);
    CHECK(pfaffian(M).is_zero());
  }
  SUBCASE("odd size pfaffian is zero") {
    AlternatingMatrix M = AlternatingMatrix::generic(5, CoeffField::rationals());
    CHECK(pfaffian(M).is_zero());
  }
}

TEST_CASE("sub pfaffians") {
  AlternatingMatrix M = AlternatingMatrix::generic(5, CoeffField::rationals());
  SUBCASE("n=5, j=1: the five quadric generators") {
    auto p = sub_pfaffians(M, 1);
    CHECK(p.size() == 5);
    for (const auto& f : p) {
      CHECK(f.degree() == 2);
      CHECK(f.term_count() == 3);
    }
  }
  SUBCASE("n=5, j=3: the entries up to sign") {
    auto p = sub_pfaffians(M, 3);
    CHECK(p.size() == 10);
    for (const auto& f : p) {
      CHECK(f.degree() == 1);
      CHECK(f.term_count() == 1);
    }
  }
  SUBCASE("n=3, j=1: entries") {
    AlternatingMatrix M3 = AlternatingMatrix::generic(3, CoeffField::rationals());
    auto p = sub_pfaffians(M3, 1);
    CHECK(p.size() == 3);
    for (const auto& f : p) CHECK(f.degree() == 1);
  }
  SUBCASE("parity mismatch is an error") {
    CHECK_THROWS(sub_pfaffians(M, 2));
  }
}

TEST_CASE("incidental matrix identity") {
  SUBCASE("2x2") {
    auto r = PolyRing::make({"a"}, CoeffField::rationals());
    AlternatingMatrix M(r, 2);
    M.set_entry(0, 1, parse_polynomial(r, "a"));
    AlternatingMatrix Q = incidental_matrix(M);  // identity verified inside
    Polynomial pf = pfaffian(M);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Polynomial acc = Polynomial::zero(r);
        for (std::size_t k = 0; k < 2; ++k)
          acc = acc + Q.entry(i, k) * M.entry(k, j);
        CHECK(acc == (i == j ? pf : Polynomial::zero(r)));
      }
  }
  SUBCASE("4x4 generic, symbolic") {
    AlternatingMatrix M = AlternatingMatrix::generic(4, CoeffField::rationals());
    CHECK_NOTHROW(incidental_matrix(M));
  }
  SUBCASE("rank-deficient numeric specialization: Q*M vanishes") {
    auto r = PolyRing::make({"a"}, CoeffField::rationals());
    AlternatingMatrix M(r, 4);
    // rank-2 alternating matrix: only the (0,1) block is nonzero
    M.set_entry(0, 1, Polynomial::from_int(r, 2));
    CHECK(pfaffian(M).is_zero());
    AlternatingMatrix Q = incidental_matrix(M);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Polynomial acc = Polynomial::zero(r);
        for (std::size_t k = 0; k < 4; ++k)
          acc = acc + Q.entry(i, k) * M.entry(k, j);
        CHECK(acc.is_zero());
      }
  }
}

TEST_CASE("pfaffian squared is the determinant on numeric specializations") {
  XorShift64 rng(13);
  auto r = PolyRing::make({"a"}, CoeffField::rationals());
  for (std::size_t n : {2, 4, 6}) {
    for (int trial = 0; trial < 5; ++trial) {
      AlternatingMatrix M(r, n);
      PolyMatrix Mat(n, std::vector<Polynomial>(n, Polynomial::zero(r)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Polynomial v = Polynomial::from_int(r, rng.uniform_int(-9, 9));
          M.set_entry(i, j, v);
          Mat[i][j] = v;
          Mat[j][i] = -v;
        }
      Polynomial pf = pfaffian(M);
      CHECK(pf * pf == poly_det(Mat, r));
    }
  }
}

TEST_CASE("example 3.2 conductor and defect for n=5") {
  for (bool modp : {false, true}) {
    CoeffField F =
        modp ? CoeffField::prime_field(32003) : CoeffField::rationals();
    AlternatingMatrix M = AlternatingMatrix::generic(5, F);
    auto pf = sub_pfaffians(M, 1);
    AffineSubscheme X(Ideal(M.ring(), pf));
    LciSlice Y = explicit_slice(X, {pf[0], pf[1], pf[2]});
    Ideal cond = conductor_on_x(X, Y);
    Polynomial p123 = pfaffian(M.deleted({0, 1, 2}));
    CHECK(cond.equals(X.on_x(Ideal(M.ring(), {p123}))));
  }
}

TEST_CASE("jacobian minor sampling stabilizes on a small example") {
  // force the sampling path with a tiny budget on a case with a known answer
  auto r = R2();
  AffineSubscheme X(I(r, {"x^2 - y^2"}));
  JacobianOptions opts;
  opts.max_minors = 0;  // always sample
  opts.sample_round = 8;
  auto res = jacobian_ideal(X, opts);
  CHECK(res.sampled);
  CHECK(res.ideal.equals(I(r, {"x", "y"})));
}
