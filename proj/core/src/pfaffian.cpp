#include "adjlab/pfaffian.hpp"

namespace adjlab {

AlternatingMatrix::AlternatingMatrix(RingPtr ring, std::size_t n)
    : ring_(std::move(ring)),
      n_(n),
      upper_(n > 1 ? n * (n - 1) / 2 : 0, Polynomial::zero(ring_)) {}

std::size_t AlternatingMatrix::pos(std::size_t i, std::size_t j) const {
  // row-major strict upper triangle, i < j
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

AlternatingMatrix AlternatingMatrix::generic(std::size_t n, CoeffField field) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      names.push_back("m" + std::to_string(i + 1) + std::to_string(j + 1));
  RingPtr ring = PolyRing::make(names, field, MonomialOrder::grevlex());
  AlternatingMatrix M(ring, n);
  std::size_t v = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      M.set_entry(i, j, Polynomial::variable(ring, v++));
  return M;
}

Polynomial AlternatingMatrix::entry(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("AlternatingMatrix::entry");
  if (i == j) return Polynomial::zero(ring_);
  if (i < j) return upper_[pos(i, j)];
  return -upper_[pos(j, i)];
}

void AlternatingMatrix::set_entry(std::size_t i, std::size_t j, Polynomial p) {
  if (i >= j) throw std::invalid_argument("set_entry: need i < j");
  if (j >= n_) throw std::out_of_range("set_entry");
  check_same_ring(ring_, p.ring(), "set_entry");
  upper_[pos(i, j)] = std::move(p);
}

AlternatingMatrix AlternatingMatrix::deleted(
    const std::vector<std::size_t>& indices) const {
  std::vector<bool> kill(n_, false);
  for (auto k : indices) {
    if (k >= n_) throw std::out_of_range("deleted: index out of range");
    if (kill[k]) throw std::invalid_argument("deleted: repeated index");
    kill[k] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n_; ++i)
    if (!kill[i]) keep.push_back(i);
  AlternatingMatrix sub(ring_, keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      sub.set_entry(a, b, entry(keep[a], keep[b]));
  return sub;
}

Polynomial pfaffian(const AlternatingMatrix& M) {
  std::size_t n = M.size();
  if (n == 0) return Polynomial::from_int(M.ring(), 1);
  if (n % 2 == 1) return Polynomial::zero(M.ring());
  if (n == 2) return M.entry(0, 1);
  Polynomial acc = Polynomial::zero(M.ring());
  for (std::size_t j = 1; j < n; ++j) {
    const Polynomial mij = M.entry(0, j);
    if (mij.is_zero()) continue;
    Polynomial sub = pfaffian(M.deleted({0, j}));
    Polynomial contrib = mij * sub;
    // paper indexing is 1-based: sign (-1)^(j+1) here equals (-1)^j there
    acc = (j % 2 == 1) ? acc + contrib : acc - contrib;
  }
  return acc;
}

std::vector<Polynomial> sub_pfaffians(const AlternatingMatrix& M, std::size_t j) {
  std::size_t n = M.size();
  if (j > n) throw std::invalid_argument("sub_pfaffians: j exceeds size");
  if ((n - j) % 2 != 0)
    throw std::invalid_argument("sub_pfaffians: n - j must be even");
  std::vector<Polynomial> out;
  std::vector<std::size_t> idx(j);
  for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  if (j == 0) {
    out.push_back(pfaffian(M));
    return out;
  }
  for (;;) {
    out.push_back(pfaffian(M.deleted(idx)));
    std::size_t i = j;
    while (i > 0 && idx[i - 1] == n - j + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < j; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

AlternatingMatrix incidental_matrix(const AlternatingMatrix& M) {
  std::size_t n = M.size();
  if (n % 2 != 0)
    throw std::invalid_argument("incidental_matrix: size must be even");
  AlternatingMatrix Q(M.ring(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Polynomial pij = pfaffian(M.deleted({i, j}));
      // (-1)^(i+j) with 1-based indices = (-1)^(i+j) with 0-based ones
      if ((i + j) % 2 == 1) pij = -pij;
      Q.set_entry(i, j, std::move(pij));
    }
  }
  // self-test of the sign convention: Q*M = pf(M)*Id
  Polynomial pf = pfaffian(M);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial acc = Polynomial::zero(M.ring());
      for (std::size_t k = 0; k < n; ++k) acc = acc + Q.entry(i, k) * M.entry(k, j);
      Polynomial expect = (i == j) ? pf : Polynomial::zero(M.ring());
      if (acc != expect)
        throw std::logic_error("incidental_matrix: identity Q*M = pf(M)*Id failed");
    }
  }
  return Q;
}

}  // namespace adjlab
