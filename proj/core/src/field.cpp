#include "adjlab/field.hpp"

namespace adjlab {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoeffField CoeffField::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw std::invalid_argument("prime_field: p must be prime and < 2^31, got " +
                                std::to_string(p));
  return CoeffField(p);
}

Coeff CoeffField::zero() const {
  return is_modular() ? Coeff(std::int64_t{0}) : Coeff(Rational(0));
}

Coeff CoeffField::one() const {
  return is_modular() ? Coeff(std::int64_t{1}) : Coeff(Rational(1));
}

Coeff CoeffField::from_int(std::int64_t n) const {
  if (!is_modular()) return Coeff(Rational(static_cast<long>(n)));
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Coeff(r);
}

Coeff CoeffField::from_rational(const Rational& q) const {
  if (!is_modular()) {
    Rational c = q;
    c.canonicalize();
    return Coeff(c);
  }
  // num/den mod p; den must be invertible.
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class nm = num % pz;
  if (nm < 0) nm += pz;
  mpz_class dm = den % pz;
  if (dm == 0) throw std::domain_error("from_rational: denominator divisible by p");
  Coeff n(static_cast<std::int64_t>(nm.get_ui()));
  Coeff d(static_cast<std::int64_t>(dm.get_ui()));
  return mul(n, inv(d));
}

bool CoeffField::is_zero(const Coeff& a) const {
  return is_modular() ? a.residue() == 0 : a.rational() == 0;
}

bool CoeffField::is_one(const Coeff& a) const {
  return is_modular() ? a.residue() == 1 : a.rational() == 1;
}

bool CoeffField::eq(const Coeff& a, const Coeff& b) const {
  return is_modular() ? a.residue() == b.residue() : a.rational() == b.rational();
}

Coeff CoeffField::add(const Coeff& a, const Coeff& b) const {
  if (is_modular()) {
    std::int64_t r = a.residue() + b.residue();
    if (r >= p_) r -= p_;
    return Coeff(r);
  }
  return Coeff(Rational(a.rational() + b.rational()));
}

Coeff CoeffField::sub(const Coeff& a, const Coeff& b) const {
  if (is_modular()) {
    std::int64_t r = a.residue() - b.residue();
    if (r < 0) r += p_;
    return Coeff(r);
  }
  return Coeff(Rational(a.rational() - b.rational()));
}

Coeff CoeffField::mul(const Coeff& a, const Coeff& b) const {
  if (is_modular())
    return Coeff(static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(a.residue()) * b.residue()) % p_));
  return Coeff(Rational(a.rational() * b.rational()));
}

Coeff CoeffField::neg(const Coeff& a) const {
  if (is_modular()) return a.residue() == 0 ? a : Coeff(p_ - a.residue());
  return Coeff(Rational(-a.rational()));
}

Coeff CoeffField::inv(const Coeff& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (!is_modular()) return Coeff(Rational(1 / a.rational()));
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p_, nr = a.residue();
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return Coeff(t);
}

std::string CoeffField::to_string(const Coeff& a) const {
  if (is_modular()) return std::to_string(a.residue());
  return a.rational().get_str();
}

}  // namespace adjlab
