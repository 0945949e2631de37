// Exact multivariate polynomials: terms kept sorted descending in the
// ring's monomial order, zero coefficients never stored.
#pragma once

#include <string>
#include <vector>

#include "adjlab/ring.hpp"

namespace adjlab {

struct Term {
  ExponentVec mono;
  Coeff coeff;
};

class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial from_int(RingPtr ring, std::int64_t n);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, ExponentVec e, const Coeff& c);
  /// Sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;
  const ExponentVec& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  std::int64_t degree() const;  // total degree, -1 for zero

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const Coeff& c) const;
  Polynomial mono_multiplied(const ExponentVec& m, const Coeff& c) const;
  Polynomial pow(std::uint32_t k) const;

  Polynomial derivative(std::size_t var) const;

  /// Leading coefficient made 1.
  Polynomial monic() const;
  /// Over Q: integer coprime coefficients, positive leading coefficient.
  /// Over F_p: monic. Canonical generator presentation.
  Polynomial normalized() const;

  /// Simultaneous substitution var_i -> images[i] (all in `target` ring).
  Polynomial substitute(const RingPtr& target,
                        const std::vector<Polynomial>& images) const;

  /// Reinterpret in a ring with the same variables/field, different order.
  Polynomial with_ring(const RingPtr& target) const;

  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace adjlab
