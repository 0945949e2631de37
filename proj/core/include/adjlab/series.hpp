// Truncated power series in t: a dense coefficient list of fixed
// precision N (indices 0..N-1 are meaningful, everything else unknown).
// Orders at or beyond the precision are reported as "at least N",
// never as exact values.
#pragma once

#include <optional>
#include <vector>

#include "adjlab/order_value.hpp"
#include "adjlab/polynomial.hpp"

namespace adjlab {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class TruncatedSeries {
public:
  TruncatedSeries(CoeffField field, std::size_t precision)
      : field_(field), coeffs_(precision, field.zero()) {}

  static TruncatedSeries from_coeffs(CoeffField field, std::vector<Coeff> cs) {
    TruncatedSeries s(field, cs.size());
    s.coeffs_ = std::move(cs);
    return s;
  }

  /// c * t^k to the given precision.
  static TruncatedSeries monomial_t(CoeffField field, std::size_t precision,
                                    std::size_t k, const Coeff& c);

  std::size_t precision() const { return coeffs_.size(); }
  const CoeffField& field() const { return field_; }
  const Coeff& coeff(std::size_t i) const { return coeffs_.at(i); }
  void set_coeff(std::size_t i, const Coeff& c) { coeffs_.at(i) = c; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  bool known_zero() const;  // all stored coefficients vanish

  TruncatedSeries truncated(std::size_t new_precision) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Coeff& c) const;
  TruncatedSeries shifted(std::size_t k) const;  // multiply by t^k
  bool operator==(const TruncatedSeries& o) const;

  /// t-adic order: exact value if a nonzero coefficient exists below the
  /// precision, otherwise "at least precision".
  OrderValue order() const;

  /// Multiplicative inverse, requires coeff(0) != 0.
  TruncatedSeries inverted() const;

  std::string to_string(const std::string& tname = "t") const;

private:
  CoeffField field_;
  std::vector<Coeff> coeffs_;
};

/// f(images) reduced mod t^precision; one image per ring variable, all
/// images with precision >= the requested one.
TruncatedSeries substitute_series(const Polynomial& f,
                                  const std::vector<TruncatedSeries>& images,
                                  std::size_t precision);

}  // namespace adjlab
