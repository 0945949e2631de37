#include "adjlab/series.hpp"

#include <sstream>

namespace adjlab {

TruncatedSeries TruncatedSeries::monomial_t(CoeffField field,
                                            std::size_t precision, std::size_t k,
                                            const Coeff& c) {
  TruncatedSeries s(field, precision);
  if (k < precision) s.coeffs_[k] = c;
  return s;
}

bool TruncatedSeries::known_zero() const {
  for (const auto& c : coeffs_)
    if (!field_.is_zero(c)) return false;
  return true;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_precision) const {
  if (new_precision > precision())
    throw PrecisionError("truncated: cannot extend precision");
  TruncatedSeries s(field_, new_precision);
  for (std::size_t i = 0; i < new_precision; ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

static std::size_t common_prec(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.precision() < b.precision() ? a.precision() : b.precision();
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  std::size_t n = common_prec(*this, o);
  TruncatedSeries s(field_, n);
  for (std::size_t i = 0; i < n; ++i)
    s.coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  std::size_t n = common_prec(*this, o);
  TruncatedSeries s(field_, n);
  for (std::size_t i = 0; i < n; ++i)
    s.coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  std::size_t n = common_prec(*this, o);
  TruncatedSeries s(field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (field_.is_zero(o.coeffs_[j])) continue;
      s.coeffs_[i + j] =
          field_.add(s.coeffs_[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return s;
}

TruncatedSeries TruncatedSeries::scaled(const Coeff& c) const {
  TruncatedSeries s(field_, precision());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    s.coeffs_[i] = field_.mul(coeffs_[i], c);
  return s;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries s(field_, precision());
  for (std::size_t i = 0; i + k < coeffs_.size(); ++i)
    s.coeffs_[i + k] = coeffs_[i];
  return s;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (precision() != o.precision()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!field_.eq(coeffs_[i], o.coeffs_[i])) return false;
  return true;
}

OrderValue TruncatedSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!field_.is_zero(coeffs_[i])) return OrderValue::exact(Rational(static_cast<long>(i)));
  return OrderValue::at_least(Rational(static_cast<long>(coeffs_.size())));
}

TruncatedSeries TruncatedSeries::inverted() const {
  if (coeffs_.empty() || field_.is_zero(coeffs_[0]))
    throw std::domain_error("series inverse: constant term is zero");
  TruncatedSeries r(field_, precision());
  Coeff c0inv = field_.inv(coeffs_[0]);
  r.coeffs_[0] = c0inv;
  for (std::size_t k = 1; k < precision(); ++k) {
    // c_k of a*r = 0  =>  r_k = -c0inv * sum_{i=1..k} a_i r_{k-i}
    Coeff acc = field_.zero();
    for (std::size_t i = 1; i <= k; ++i)
      acc = field_.add(acc, field_.mul(coeffs_[i], r.coeffs_[k - i]));
    r.coeffs_[k] = field_.neg(field_.mul(c0inv, acc));
  }
  return r;
}

std::string TruncatedSeries::to_string(const std::string& tname) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    if (!first) os << " + ";
    os << field_.to_string(coeffs_[i]);
    if (i > 0) os << "*" << tname << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << tname << "^" << coeffs_.size() << ")";
  return os.str();
}

TruncatedSeries substitute_series(const Polynomial& f,
                                  const std::vector<TruncatedSeries>& images,
                                  std::size_t precision) {
  const auto& ring = f.ring();
  if (images.size() != ring->arity())
    throw std::invalid_argument("substitute_series: one image per variable required");
  for (const auto& s : images)
    if (s.precision() < precision)
      throw PrecisionError("substitute_series: image precision below requested");
  const auto& F = ring->field();
  TruncatedSeries acc(F, precision);
  for (const auto& t : f.terms()) {
    TruncatedSeries term = TruncatedSeries::monomial_t(F, precision, 0, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      for (std::int32_t k = 0; k < t.mono[i]; ++k)
        term = term * images[i].truncated(precision);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace adjlab
