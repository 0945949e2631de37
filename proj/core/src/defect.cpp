#include "adjlab/defect.hpp"

namespace adjlab {

Ideal conductor_on_x(const AffineSubscheme& X, const LciSlice& Y) {
  return X.on_x(Y.residual_ideal);
}

namespace {

bool is_nonzerodivisor_on_x(const Polynomial& f, const AffineSubscheme& X,
                            const GroebnerBudget& budget) {
  if (X.ideal().contains(f, budget)) return false;
  Ideal colon = ideal_quotient(X.ideal(), Ideal(X.ambient(), {f}), budget);
  return colon.equals(X.ideal(), budget);
}

}  // namespace

Ideal divisorial_power(const Ideal& a_on_x, std::uint32_t r,
                       const AffineSubscheme& X, const GroebnerBudget& budget) {
  if (r == 0) throw std::invalid_argument("divisorial_power: r must be positive");
  const RingPtr& ring = X.ambient();
  check_same_ring(ring, a_on_x.ring(), "divisorial_power");

  Ideal ar = X.on_x(ideal_power(a_on_x, r));

  // pick nonzerodivisors among the generators of a^r
  std::vector<Polynomial> nzds;
  for (const auto& f : ar.gens()) {
    if (is_nonzerodivisor_on_x(f, X, budget)) {
      nzds.push_back(f);
      if (nzds.size() == 2) break;
    }
  }
  if (nzds.empty())
    throw NonzerodivisorError(
        "divisorial_power: no nonzerodivisor among the generators of a^" +
        std::to_string(r) + " (is X reduced along D?)");

  auto hull = [&](const Polynomial& f) {
    Ideal princ = X.on_x(Ideal(ring, {f}));
    Ideal inner = ideal_quotient(princ, ar, budget);
    return ideal_quotient(princ, inner, budget);
  };

  Ideal result = hull(nzds[0]);
  if (nzds.size() == 2) {
    Ideal other = hull(nzds[1]);
    if (!result.equals(other, budget))
      throw std::logic_error(
          "divisorial_power: hull depends on the chosen nonzerodivisor");
  }
  return result;
}

WeakDefectSum weak_defect_sum_slices(const AffineSubscheme& X, std::uint32_t r,
                                     const std::vector<LciSlice>& slices,
                                     const GroebnerBudget& budget) {
  Ideal sum = X.ideal();
  bool stabilized = false;
  std::size_t used = 0;
  for (const auto& Y : slices) {
    Ideal p = divisorial_power(conductor_on_x(X, Y), r, X, budget);
    Ideal next = ideal_sum(sum, p);
    ++used;
    if (used > 1 && next.equals(sum, budget)) {
      stabilized = true;
      sum = std::move(next);
      break;
    }
    sum = std::move(next);
  }
  return WeakDefectSum{std::move(sum), stabilized, used};
}

WeakDefectSum weak_defect_sum(const AffineSubscheme& X, std::uint32_t r,
                              const std::vector<std::uint64_t>& seeds,
                              const SliceOptions& opts) {
  if (seeds.empty()) throw std::invalid_argument("weak_defect_sum: seeds required");
  std::vector<LciSlice> slices;
  slices.reserve(seeds.size());
  for (auto s : seeds) slices.push_back(general_lci_slice(X, s, opts));
  return weak_defect_sum_slices(X, r, slices, opts.budget);
}

Ideal weak_defect_colon(const AffineSubscheme& X, std::uint32_t r,
                        const Ideal& j_rx, const GroebnerBudget& budget) {
  JacobianOptions jopts;
  jopts.budget = budget;
  Ideal jac = jacobian_ideal(X, jopts).ideal;
  Ideal jac_r = X.on_x(ideal_power(jac, r));
  return X.on_x(ideal_quotient(jac_r, j_rx, budget));
}

namespace {

struct SliceData {
  Ideal jy_on_x_r;  // (J'_Y O_X)^r on X
  Ideal o_rd;       // O_X(-rD^Y)
  Ideal candidate;  // colon
};

SliceData slice_candidate(const AffineSubscheme& X, const LciSlice& Y,
                          std::uint32_t r, const GroebnerBudget& budget) {
  AffineSubscheme Ysub(Y.slice_ideal, budget);
  JacobianOptions jopts;
  jopts.budget = budget;
  Ideal jy = jacobian_ideal(Ysub, jopts).ideal;
  Ideal jy_on_x = compressed(X.on_x(jy), budget);
  Ideal jy_r = compressed(X.on_x(ideal_power(jy_on_x, r)), budget);
  Ideal o_rd = compressed(divisorial_power(conductor_on_x(X, Y), r, X, budget), budget);
  Ideal cand = X.on_x(ideal_quotient(jy_r, o_rd, budget));
  return SliceData{std::move(jy_r), std::move(o_rd), std::move(cand)};
}

bool verify_candidate(const AffineSubscheme& X, const Ideal& cand,
                      const SliceData& data, const GroebnerBudget& budget) {
  Ideal lhs = compressed(X.on_x(ideal_product(cand, data.o_rd)), budget);
  return equal_mod_saturation(lhs, data.jy_on_x_r, data.o_rd, budget);
}

}  // namespace

JrxResult jrx_from_slice(const AffineSubscheme& X, const LciSlice& Y,
                         std::uint32_t r,
                         const std::vector<std::uint64_t>& extra_seeds,
                         const SliceOptions& opts) {
  const GroebnerBudget& budget = opts.budget;
  std::vector<SliceData> data;
  data.push_back(slice_candidate(X, Y, r, budget));
  Ideal cand = data.back().candidate;
  if (verify_candidate(X, cand, data.back(), budget))
    return JrxResult{std::move(cand), true, 1};

  for (auto seed : extra_seeds) {
    LciSlice extra = general_lci_slice(X, seed, opts);
    data.push_back(slice_candidate(X, extra, r, budget));
    cand = X.on_x(ideal_intersection(cand, data.back().candidate, budget));
    bool all_ok = true;
    for (const auto& d : data)
      if (!verify_candidate(X, cand, d, budget)) {
        all_ok = false;
        break;
      }
    if (all_ok) return JrxResult{std::move(cand), true, data.size()};
  }
  throw Eq3UndeterminedError(
      "jrx_from_slice: inversion undetermined after " +
      std::to_string(data.size()) + " slice(s): re-multiplication never matched");
}

}  // namespace adjlab
