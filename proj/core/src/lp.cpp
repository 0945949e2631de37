#include "adjlab/lp.hpp"

#include <stdexcept>

namespace adjlab {

namespace {

// Dictionary simplex over the rationals, Bland's rule throughout.
//
// Standard form handled here: minimize c.y subject to A y <= b, y >= 0.
// Callers shift general lower bounds onto the right-hand side.
class Simplex {
public:
  Simplex(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
          std::vector<Rational> c)
      : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
    m_ = A_.size();
    n_ = c_.size();
    // dictionary: rows are basic variables, columns nonbasic.
    // variable ids: 0..n-1 structural, n..n+m-1 slack, n+m = phase-I aux.
    T_.assign(m_, std::vector<Rational>(n_ + 1, Rational(0)));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) T_[i][j] = A_[i][j];
      T_[i][n_] = b_[i];
    }
    basic_.resize(m_);
    nonbasic_.resize(n_);
    for (std::size_t i = 0; i < m_; ++i) basic_[i] = n_ + i;
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
  }

  // returns status; on Optimal fills x (structural part) and value
  LpStatus solve(std::vector<Rational>& x, Rational& value) {
    if (!make_feasible()) return LpStatus::Infeasible;
    // phase II objective: z = sum over nonbasic of red_[j] * x_N[j] + z0_
    load_objective();
    for (;;) {
      long enter = pick_entering();
      if (enter < 0) break;
      long leave = pick_leaving(static_cast<std::size_t>(enter));
      if (leave < 0) return LpStatus::Unbounded;
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
    }
    x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basic_[i] < n_) x[basic_[i]] = T_[i][n_];
    value = z0_;
    return LpStatus::Optimal;
  }

private:
  // T_[i][j]: coefficient of nonbasic column j in row i (x_b = rhs - sum T x_N),
  // stored in "A-form": row reads  sum_j T[i][j] * xN_j + x_basic_i = rhs_i.
  void pivot(std::size_t r, std::size_t c) {
    Rational piv = T_[r][c];
    if (piv == 0) throw std::logic_error("simplex: zero pivot");
    std::size_t cols = n_ + 1;
    for (std::size_t j = 0; j < cols; ++j) T_[r][j] /= piv;
    T_[r][c] = Rational(1) / piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      Rational f = T_[i][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (j != c) T_[i][j] -= f * T_[r][j];
      T_[i][c] = -f * T_[r][c];
    }
    Rational f = red_[c];
    if (f != 0) {
      for (std::size_t j = 0; j < n_; ++j)
        if (j != c) red_[j] -= f * T_[r][j];
      z0_ += f * T_[r][n_];
      red_[c] = -f * T_[r][c];
    }
    std::swap(basic_[r], nonbasic_[c]);
  }

  long pick_entering() const {
    long best = -1;
    for (std::size_t j = 0; j < n_; ++j) {
      if (red_[j] < 0) {
        if (best < 0 || nonbasic_[j] < nonbasic_[best]) best = static_cast<long>(j);
      }
    }
    return best;
  }

  long pick_leaving(std::size_t c) const {
    long best = -1;
    Rational best_ratio(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (T_[i][c] > 0) {
        Rational ratio = T_[i][n_] / T_[i][c];
        if (best < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[best])) {
          best = static_cast<long>(i);
          best_ratio = ratio;
        }
      }
    }
    return best;
  }

  bool make_feasible() {
    // all rhs >= 0 already?
    long worst = -1;
    for (std::size_t i = 0; i < m_; ++i)
      if (T_[i][n_] < 0 && (worst < 0 || T_[i][n_] < T_[worst][n_]))
        worst = static_cast<long>(i);
    if (worst < 0) return true;

    // phase I: append auxiliary column x0 with coefficient -1 in each row,
    // minimize x0
    for (std::size_t i = 0; i < m_; ++i) T_[i].insert(T_[i].begin() + n_, Rational(-1));
    nonbasic_.push_back(n_aux_id());
    ++n_;
    red_.assign(n_, Rational(0));
    red_[n_ - 1] = 1;  // minimize x0
    z0_ = 0;
    pivot(static_cast<std::size_t>(worst), n_ - 1);
    for (;;) {
      long enter = pick_entering();
      if (enter < 0) break;
      long leave = pick_leaving(static_cast<std::size_t>(enter));
      if (leave < 0) throw std::logic_error("simplex: phase I unbounded");
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
    }
    if (z0_ != 0) return false;  // infeasible
    // x0 may sit basic at value 0: pivot it out, or drop a redundant row
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] == n_aux_id()) {
        bool pivoted = false;
        for (std::size_t j = 0; j < n_; ++j) {
          if (nonbasic_[j] != n_aux_id() && T_[i][j] != 0) {
            pivot(i, j);
            pivoted = true;
            break;
          }
        }
        if (!pivoted) {
          T_.erase(T_.begin() + i);
          basic_.erase(basic_.begin() + i);
          --m_;
        }
        break;
      }
    }
    // drop the auxiliary column
    for (std::size_t j = 0; j < n_; ++j) {
      if (nonbasic_[j] == n_aux_id()) {
        for (std::size_t i = 0; i < m_; ++i) T_[i].erase(T_[i].begin() + j);
        nonbasic_.erase(nonbasic_.begin() + j);
        --n_;
        break;
      }
    }
    return true;
  }

  void load_objective() {
    red_.assign(n_, Rational(0));
    z0_ = 0;
    // objective in terms of original structural variables: substitute
    // basic rows
    for (std::size_t j = 0; j < n_; ++j)
      if (nonbasic_[j] < c_.size()) red_[j] += c_[nonbasic_[j]];
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] < c_.size()) {
        Rational ci = c_[basic_[i]];
        if (ci == 0) continue;
        // x_basic = rhs - sum T x_N
        z0_ += ci * T_[i][n_];
        for (std::size_t j = 0; j < n_; ++j) red_[j] -= ci * T_[i][j];
      }
    }
  }

  std::size_t n_aux_id() const { return c_.size() + m_ + 1; }

  std::vector<std::vector<Rational>> A_;
  std::vector<Rational> b_, c_;
  std::size_t m_ = 0, n_ = 0;
  std::vector<std::vector<Rational>> T_;
  std::vector<std::size_t> basic_, nonbasic_;
  std::vector<Rational> red_;
  Rational z0_ = Rational(0);
};

}  // namespace

LpResult lp_minimize(const std::vector<Rational>& c, const Rational& c0,
                     const std::vector<LinConstraint>& constraints,
                     const std::vector<Rational>& lower) {
  std::size_t n = c.size();
  if (lower.size() != n)
    throw std::invalid_argument("lp_minimize: lower bound per variable required");

  // shift x = y + lower, y >= 0; convert all rows to <=
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  auto add_le = [&](std::vector<Rational> row, Rational rhs) {
    for (std::size_t j = 0; j < n; ++j) rhs -= row[j] * lower[j];
    A.push_back(std::move(row));
    b.push_back(std::move(rhs));
  };
  for (const auto& con : constraints) {
    if (con.a.size() != n) throw std::invalid_argument("lp_minimize: bad row arity");
    if (con.rel == Rel::Le || con.rel == Rel::Eq) add_le(con.a, con.rhs);
    if (con.rel == Rel::Ge || con.rel == Rel::Eq) {
      std::vector<Rational> neg(n);
      for (std::size_t j = 0; j < n; ++j) neg[j] = -con.a[j];
      add_le(std::move(neg), -con.rhs);
    }
  }

  Simplex s(std::move(A), std::move(b), c);
  std::vector<Rational> y;
  Rational val(0);
  LpStatus st = s.solve(y, val);
  LpResult res;
  res.status = st;
  if (st == LpStatus::Optimal) {
    res.x.resize(n);
    res.value = val + c0;
    for (std::size_t j = 0; j < n; ++j) {
      res.x[j] = y[j] + lower[j];
      res.value += c[j] * lower[j];
    }
  }
  return res;
}

bool lp_feasible(const std::vector<LinConstraint>& constraints,
                 const std::vector<Rational>& lower) {
  std::vector<Rational> c(lower.size(), Rational(0));
  LpResult r = lp_minimize(c, Rational(0), constraints, lower);
  return r.status == LpStatus::Optimal;
}

}  // namespace adjlab
