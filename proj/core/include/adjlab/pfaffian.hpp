// Alternating polynomial matrices, pfaffians by first-row expansion,
// sub-pfaffians of deletions, and the incidental matrix Q with
// Q*M = M*Q = pf(M)*Id (verified symbolically on construction).
#pragma once

#include "adjlab/jacobian.hpp"

namespace adjlab {

class AlternatingMatrix {
public:
  AlternatingMatrix(RingPtr ring, std::size_t n);

  /// Generic matrix in a fresh ring with one variable per strict
  /// upper-triangle entry, named like m12, m13, ...; grevlex.
  static AlternatingMatrix generic(std::size_t n, CoeffField field);

  std::size_t size() const { return n_; }
  const RingPtr& ring() const { return ring_; }

  Polynomial entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, Polynomial p);  // requires i < j

  /// Deletion of the given rows-and-columns (sorted, distinct).
  AlternatingMatrix deleted(const std::vector<std::size_t>& indices) const;

private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<Polynomial> upper_;  // row-major strict upper triangle
  std::size_t pos(std::size_t i, std::size_t j) const;
};

/// Pfaffian by the first-row expansion p(M) = sum_j (-1)^j m_1j p(M_1j);
/// odd-size pfaffians are 0, the empty matrix has pfaffian 1.
Polynomial pfaffian(const AlternatingMatrix& M);

/// All pfaffians of deletions of j indices, in lexicographic order of the
/// deleted index sets; requires n - j even.
std::vector<Polynomial> sub_pfaffians(const AlternatingMatrix& M, std::size_t j);

/// Q with q_ij = (-1)^(i+j) p_ij(M) for i < j; throws if the defining
/// identity Q*M = p(M)*Id fails (sign-convention self-test).
AlternatingMatrix incidental_matrix(const AlternatingMatrix& M);

}  // namespace adjlab
