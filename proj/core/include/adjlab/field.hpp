// Exact coefficient arithmetic: the rationals (GMP-backed) and prime
// fields F_p with p < 2^31. No floating point anywhere in this library.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace adjlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when two values from different rings/fields are combined.
struct RingMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A coefficient: a rational, or a residue mod p (which alternative is
/// meaningful is fixed by the owning PolyRing's field).
class Coeff {
public:
  Coeff() : v_(std::int64_t{0}) {}
  explicit Coeff(std::int64_t m) : v_(m) {}
  explicit Coeff(Rational q) : v_(std::move(q)) {}

  bool is_modular() const { return std::holds_alternative<std::int64_t>(v_); }
  std::int64_t residue() const { return std::get<std::int64_t>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  Rational& rational() { return std::get<Rational>(v_); }

private:
  std::variant<std::int64_t, Rational> v_;
};

/// The coefficient field of a ring: char 0 (rationals) or F_p.
class CoeffField {
public:
  static CoeffField rationals() { return CoeffField(0); }
  static CoeffField prime_field(std::uint32_t p);

  bool is_modular() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(std::int64_t n) const;
  Coeff from_rational(const Rational& q) const;  // reduces mod p when modular

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool eq(const Coeff& a, const Coeff& b) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string to_string(const Coeff& a) const;

  bool operator==(const CoeffField& o) const { return p_ == o.p_; }

private:
  explicit CoeffField(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;  // 0 = rationals
};

bool is_prime_u32(std::uint32_t n);

}  // namespace adjlab
