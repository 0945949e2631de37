#include "adjlab/mld.hpp"

#include <algorithm>
#include <numeric>

#include "adjlab/defect.hpp"

namespace adjlab {

void MonomialPair::validate() const {
  if (arity == 0) throw std::invalid_argument("MonomialPair: arity must be positive");
  if (is_quotient()) {
    if (quotient_weights.size() != arity)
      throw std::invalid_argument("MonomialPair: one quotient weight per variable");
    for (auto a : quotient_weights) {
      if (a < 1) throw std::invalid_argument("MonomialPair: weights must be >= 1");
      if (std::gcd(static_cast<std::int64_t>(quotient_order), a) != 1)
        throw std::invalid_argument(
            "MonomialPair: quotient weights must be coprime to the order");
    }
  }
  for (const auto& f : boundary) {
    if (f.exponent < 0)
      throw std::invalid_argument("MonomialPair: negative boundary exponent");
    if (f.gens.empty())
      throw std::invalid_argument("MonomialPair: boundary factor with no generators");
    for (const auto& g : f.gens)
      if (g.size() != arity)
        throw std::invalid_argument("MonomialPair: generator arity mismatch");
  }
}

MonomialPair pair_from_qideal(std::size_t arity, const QIdeal& Q) {
  MonomialPair p;
  p.arity = arity;
  for (const auto& f : Q.factors()) {
    if (!is_monomial_ideal(f.ideal))
      throw std::invalid_argument("pair_from_qideal: non-monomial factor");
    if (f.ideal.is_zero_ideal())
      throw std::invalid_argument("pair_from_qideal: zero factor");
    p.boundary.push_back(
        MonomialPair::Factor{f.exponent, monomial_exponents(f.ideal)});
  }
  p.validate();
  return p;
}

namespace {

Rational dot(const std::vector<Rational>& w, const ExponentVec& u) {
  Rational s(0);
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * u[i];
  return s;
}

Rational eval_objective(const MonomialPair& pair, const std::vector<Rational>& w) {
  Rational s(0);
  for (const auto& wi : w) s += wi;
  for (const auto& f : pair.boundary) {
    Rational best = dot(w, f.gens[0]);
    for (std::size_t j = 1; j < f.gens.size(); ++j)
      best = std::min(best, dot(w, f.gens[j]));
    s -= f.exponent * best;
  }
  return s;
}

// a linearity region: one minimizing generator chosen per boundary factor
struct Region {
  std::vector<Rational> c;             // linear objective on the region
  std::vector<LinConstraint> rows;     // region inequalities <w, u_min - u> <= 0
};

std::vector<Region> enumerate_regions(const MonomialPair& pair,
                                      const MldOptions& opts) {
  std::size_t N = pair.arity;
  std::size_t count = 1;
  for (const auto& f : pair.boundary) {
    count *= f.gens.size();
    if (count > opts.max_regions)
      throw BudgetExceededError("mld: linearity region budget exceeded");
  }
  std::vector<Region> regions;
  std::vector<std::size_t> pick(pair.boundary.size(), 0);
  for (;;) {
    Region r;
    r.c.assign(N, Rational(1));
    for (std::size_t j = 0; j < pair.boundary.size(); ++j) {
      const auto& f = pair.boundary[j];
      const ExponentVec& umin = f.gens[pick[j]];
      for (std::size_t i = 0; i < N; ++i) r.c[i] -= f.exponent * umin[i];
      for (const auto& u : f.gens) {
        if (&u == &umin) continue;
        LinConstraint row;
        row.a.resize(N);
        bool nontrivial = false;
        for (std::size_t i = 0; i < N; ++i) {
          row.a[i] = Rational(umin[i] - u[i]);
          if (row.a[i] != 0) nontrivial = true;
        }
        row.rel = Rel::Le;
        row.rhs = 0;
        if (nontrivial) r.rows.push_back(std::move(row));
      }
    }
    regions.push_back(std::move(r));
    // advance the mixed-radix picker
    std::size_t j = 0;
    for (; j < pick.size(); ++j) {
      if (++pick[j] < pair.boundary[j].gens.size()) break;
      pick[j] = 0;
    }
    if (j == pick.size()) break;
    if (pick.empty()) break;
  }
  return regions;
}

// value quantum of f on lattice points: 1 / lcm of exponent denominators
Rational value_quantum(const MonomialPair& pair) {
  Integer den = 1;
  for (const auto& f : pair.boundary) den = lcm(den, Integer(f.exponent.get_den()));
  if (pair.is_quotient()) den *= static_cast<unsigned long>(pair.quotient_order);
  return Rational(Integer(1), den);
}

// negative homogeneous direction scan on the cross-section simplex
std::optional<std::vector<Rational>> negative_direction(
    const MonomialPair& pair, const std::vector<Region>& regions) {
  std::size_t N = pair.arity;
  for (const auto& reg : regions) {
    std::vector<LinConstraint> rows = reg.rows;
    LinConstraint simplex;
    simplex.a.assign(N, Rational(1));
    simplex.rel = Rel::Eq;
    simplex.rhs = 1;
    rows.push_back(std::move(simplex));
    LpResult lp = lp_minimize(reg.c, Rational(0), rows,
                              std::vector<Rational>(N, Rational(0)));
    if (lp.status != LpStatus::Optimal) continue;  // empty cross-section
    if (lp.value >= 0) continue;
    // scale the witness to an integer direction and verify by evaluation
    Integer den = 1;
    for (const auto& x : lp.x) den = lcm(den, Integer(x.get_den()));
    std::vector<Rational> dir(N);
    for (std::size_t i = 0; i < N; ++i) dir[i] = lp.x[i] * Rational(den);
    if (eval_objective(pair, dir) >= 0)
      throw std::logic_error("mld: negative direction failed verification");
    return dir;
  }
  return std::nullopt;
}

struct IlpSetup {
  // integer variables z; lattice weights w = scale*z + offset
  std::int64_t scale = 1;
  std::vector<std::int64_t> offset;  // size N
  std::vector<Rational> z_lower;     // integral lower bounds on z
};

struct Incumbent {
  Rational value;
  std::vector<Rational> w;
  bool set = false;
};

void consider(const MonomialPair& pair, Incumbent& inc,
              const std::vector<Rational>& w) {
  for (const auto& wi : w)
    if (wi < 1) return;
  Rational v = eval_objective(pair, w);
  if (!inc.set || v < inc.value) {
    inc.value = v;
    inc.w = w;
    inc.set = true;
  }
}

std::vector<Rational> z_to_w(const IlpSetup& setup, const std::vector<Rational>& z) {
  std::vector<Rational> w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    w[i] = Rational(setup.scale) * z[i] + Rational(setup.offset[i]);
  return w;
}

// branch & bound over integer z for one region; updates the shared incumbent
void region_branch_and_bound(const MonomialPair& pair, const Region& reg,
                             const IlpSetup& setup, const Rational& quantum,
                             Incumbent& inc, std::size_t& nodes,
                             const MldOptions& opts,
                             std::vector<std::string>& certificates) {
  std::size_t N = pair.arity;

  // region rows in z-coordinates: A(scale*z + offset) <= 0
  std::vector<LinConstraint> base_rows;
  for (const auto& row : reg.rows) {
    LinConstraint r;
    r.a.resize(N);
    Rational shift(0);
    for (std::size_t i = 0; i < N; ++i) {
      r.a[i] = row.a[i] * setup.scale;
      shift += row.a[i] * setup.offset[i];
    }
    r.rel = Rel::Le;
    r.rhs = row.rhs - shift;
    base_rows.push_back(std::move(r));
  }
  std::vector<Rational> cz(N);
  Rational c0(0);
  for (std::size_t i = 0; i < N; ++i) {
    cz[i] = reg.c[i] * setup.scale;
    c0 += reg.c[i] * setup.offset[i];
  }

  struct Node {
    std::vector<LinConstraint> extra;      // z_i <= hi branches
    std::vector<Rational> lower;           // per-variable lower bounds
  };
  std::vector<Node> stack;
  stack.push_back(Node{{}, setup.z_lower});
  bool first = true;

  while (!stack.empty()) {
    if (++nodes > opts.max_nodes)
      throw BudgetExceededError("mld: branch-and-bound node budget exceeded");
    Node node = std::move(stack.back());
    stack.pop_back();

    std::vector<LinConstraint> rows = base_rows;
    rows.insert(rows.end(), node.extra.begin(), node.extra.end());
    LpResult lp = lp_minimize(cz, c0, rows, node.lower);
    if (lp.status == LpStatus::Infeasible) continue;
    if (lp.status == LpStatus::Unbounded)
      throw std::logic_error("mld: region LP unbounded after direction scan");
    if (first) {
      certificates.push_back("region LP lower bound " + lp.value.get_str());
      first = false;
    }
    if (inc.set && lp.value > inc.value - quantum) continue;  // cannot improve

    // integral vertex?
    long frac = -1;
    for (std::size_t i = 0; i < N; ++i) {
      if (lp.x[i].get_den() != 1) {
        frac = static_cast<long>(i);
        break;
      }
    }
    if (frac < 0) {
      consider(pair, inc, z_to_w(setup, lp.x));
      continue;
    }
    // branch
    Integer fl = lp.x[frac].get_num() / lp.x[frac].get_den();  // floor (x > 0)
    Node down = node, up = node;
    LinConstraint hi;
    hi.a.assign(N, Rational(0));
    hi.a[frac] = 1;
    hi.rel = Rel::Le;
    hi.rhs = Rational(fl);
    down.extra.push_back(std::move(hi));
    up.lower[frac] = Rational(fl) + 1;
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));
  }
}

MldResult mld_core(const MonomialPair& pair, const MldOptions& opts) {
  pair.validate();
  std::size_t N = pair.arity;
  auto regions = enumerate_regions(pair, opts);

  MldResult res;
  if (auto dir = negative_direction(pair, regions)) {
    res.minus_infinity = true;
    res.neg_direction = *dir;
    res.log_canonical = false;
    res.klt_possible = false;
    return res;
  }

  Rational quantum = value_quantum(pair);
  std::uint32_t m = pair.quotient_order;

  Incumbent inc;
  std::size_t nodes = 0;

  std::vector<IlpSetup> setups;
  if (!pair.is_quotient()) {
    IlpSetup s;
    s.scale = 1;
    s.offset.assign(N, 0);
    s.z_lower.assign(N, Rational(1));
    setups.push_back(std::move(s));
  } else {
    // residue classes: w = m*z + rho_k with rho_k = (k*a mod m)
    for (std::uint32_t k = 0; k < m; ++k) {
      IlpSetup s;
      s.scale = m;
      s.offset.resize(N);
      s.z_lower.resize(N);
      for (std::size_t i = 0; i < N; ++i) {
        std::int64_t rho =
            (static_cast<std::int64_t>(k) * pair.quotient_weights[i]) % m;
        s.offset[i] = rho;
        s.z_lower[i] = rho >= 1 ? Rational(0) : Rational(1);
      }
      setups.push_back(std::move(s));
    }
  }

  // cheap initial incumbents: the least positive lattice points
  for (const auto& s : setups) {
    std::vector<Rational> z0 = s.z_lower;
    consider(pair, inc, z_to_w(s, z0));
  }

  for (const auto& reg : regions)
    for (const auto& s : setups)
      region_branch_and_bound(pair, reg, s, quantum, inc, nodes, opts,
                              res.certificates);

  if (!inc.set) throw std::logic_error("mld: no lattice point considered");
  // scale back: the search ran on w' = m*w for the quotient chart
  Rational scale_back = pair.is_quotient()
                            ? Rational(1, static_cast<unsigned long>(m))
                            : Rational(1);
  res.value = inc.value * scale_back;
  res.witness.resize(N);
  for (std::size_t i = 0; i < N; ++i) res.witness[i] = inc.w[i] * scale_back;
  res.log_canonical = res.value >= 0;
  res.klt_possible = res.value > 0;
  return res;
}

}  // namespace

Rational log_discrepancy_at_weight(const std::vector<Rational>& w,
                                   const MonomialPair& pair) {
  pair.validate();
  if (w.size() != pair.arity)
    throw std::invalid_argument("log_discrepancy_at_weight: arity mismatch");
  for (const auto& wi : w)
    if (wi <= 0)
      throw std::invalid_argument("log_discrepancy_at_weight: weights must be > 0");
  if (pair.is_quotient()) {
    std::uint32_t m = pair.quotient_order;
    // membership in Z^N + Z*(a/m): m*w integral and congruent to k*a mod m
    std::vector<Integer> mw(pair.arity);
    for (std::size_t i = 0; i < pair.arity; ++i) {
      Rational s = w[i] * static_cast<long>(m);
      if (s.get_den() != 1)
        throw std::invalid_argument("log_discrepancy_at_weight: not a lattice point");
      mw[i] = s.get_num();
    }
    bool found = false;
    for (std::uint32_t k = 0; k < m && !found; ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < pair.arity && ok; ++i) {
        Integer rho = (mw[i] - static_cast<long>(k) * pair.quotient_weights[i]) %
                      static_cast<long>(m);
        if (rho != 0) ok = false;
      }
      found = ok;
    }
    if (!found)
      throw std::invalid_argument("log_discrepancy_at_weight: not a lattice point");
  }
  return eval_objective(pair, w);
}

MldResult mld_monomial(const MonomialPair& pair, const MldOptions& opts) {
  if (pair.is_quotient())
    throw std::invalid_argument("mld_monomial: smooth ambient expected");
  return mld_core(pair, opts);
}

MldResult mld_toric_quotient(const MonomialPair& pair, const MldOptions& opts) {
  if (!pair.is_quotient())
    throw std::invalid_argument("mld_toric_quotient: quotient data expected");
  return mld_core(pair, opts);
}

namespace {

Rational require_value(const MldResult& r, const char* side) {
  if (r.minus_infinity)
    throw std::logic_error(std::string("inversion_check: unexpected -infinity on ") +
                           side);
  return r.value;
}

bool defect_is_trivial(const AffineSubscheme& X, const GroebnerBudget& budget) {
  JacobianOptions jopts;
  jopts.budget = budget;
  Ideal jac = jacobian_ideal(X, jopts).ideal;
  Ideal colon = weak_defect_colon(X, 1, X.on_x(jac), budget);
  return colon.is_unit(budget);
}

}  // namespace

InversionReport inversion_check_subspace(std::size_t d, std::size_t c,
                                         const GroebnerBudget& budget) {
  if (d == 0 || c == 0)
    throw std::invalid_argument("inversion_check_subspace: need d, c >= 1");
  std::size_t N = d + c;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < N; ++i) names.push_back("x" + std::to_string(i + 1));
  RingPtr ring = PolyRing::make(names, CoeffField::rationals());
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < c; ++i) gens.push_back(Polynomial::variable(ring, i));
  AffineSubscheme X(Ideal(ring, std::move(gens)), budget);

  InversionReport rep;
  if (!defect_is_trivial(X, budget))
    throw std::logic_error("inversion_check_subspace: defect unexpectedly nontrivial");

  // left: X is smooth of dimension d with trivial defect boundary
  MonomialPair left;
  left.arity = d;
  rep.left = require_value(mld_monomial(left), "left");

  // right: (A^{d+c}, I_X^c) with I_X = (x_1..x_c)
  MonomialPair right;
  right.arity = N;
  MonomialPair::Factor f;
  f.exponent = Rational(static_cast<long>(c));
  for (std::size_t i = 0; i < c; ++i) {
    ExponentVec e(N, 0);
    e[i] = 1;
    f.gens.push_back(std::move(e));
  }
  right.boundary.push_back(std::move(f));
  rep.right = require_value(mld_monomial(right), "right");

  rep.equal = rep.left == rep.right;
  rep.detail = "coordinate subspace d=" + std::to_string(d) +
               " c=" + std::to_string(c);
  return rep;
}

InversionReport inversion_check_node(const GroebnerBudget& budget) {
  RingPtr ring = PolyRing::make({"x", "y"}, CoeffField::rationals());
  Polynomial f = parse_polynomial(ring, "x - y");
  AffineSubscheme X(Ideal(ring, {f}), budget);

  InversionReport rep;
  if (!defect_is_trivial(X, budget))
    throw std::logic_error("inversion_check_node: defect unexpectedly nontrivial");

  // left: X is a line, mld of a smooth 1-dimensional germ
  MonomialPair left;
  left.arity = 1;
  rep.left = require_value(mld_monomial(left), "left");

  // right: (A^2, (x-y)); apply the linear change u = x-y, v = y, under
  // which the boundary becomes the coordinate ideal (u)
  RingPtr uv = PolyRing::make({"u", "v"}, CoeffField::rationals());
  std::vector<Polynomial> images{
      Polynomial::variable(uv, 0) + Polynomial::variable(uv, 1),  // x = u + v
      Polynomial::variable(uv, 1)};                               // y = v
  Polynomial g = f.substitute(uv, images);
  if (!g.is_monomial())
    throw std::logic_error("inversion_check_node: change of coordinates failed");

  MonomialPair right;
  right.arity = 2;
  MonomialPair::Factor fac;
  fac.exponent = 1;
  fac.gens.push_back(g.leading_monomial());
  right.boundary.push_back(std::move(fac));
  rep.right = require_value(mld_monomial(right), "right");

  rep.equal = rep.left == rep.right;
  rep.detail = "node-in-plane V(x-y) in A^2";
  return rep;
}

}  // namespace adjlab
