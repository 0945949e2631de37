// Vanishing orders measured through a truncation window: either an exact
// non-negative rational, or a lower bound "at least q" when every visible
// coefficient vanished. Exact values below the window are final; "at
// least" markers only grow under precision increase.
#pragma once

#include <stdexcept>
#include <string>

#include "adjlab/field.hpp"

namespace adjlab {

class OrderValue {
public:
  static OrderValue exact(const Rational& v) { return OrderValue(v, false); }
  static OrderValue at_least(const Rational& v) { return OrderValue(v, true); }

  bool is_exact() const { return !at_least_; }
  const Rational& value() const { return v_; }

  /// Exact value or throws; use when the caller has checked is_exact().
  const Rational& exact_value() const {
    if (at_least_) throw std::logic_error("OrderValue: not exact (at least " +
                                          v_.get_str() + ")");
    return v_;
  }

  OrderValue operator+(const OrderValue& o) const {
    // at-least is contagious: an unknown tail bounds the sum from below
    return OrderValue(v_ + o.v_, at_least_ || o.at_least_);
  }

  OrderValue scaled(const Rational& c) const {
    if (c < 0) throw std::invalid_argument("OrderValue: negative scale");
    return OrderValue(v_ * c, at_least_);
  }

  /// Minimum in the order semantics: an exact small value beats a marker.
  static OrderValue min(const OrderValue& a, const OrderValue& b) {
    if (a.v_ != b.v_) return a.v_ < b.v_ ? a : b;
    // equal numeric part: exact knowledge wins (at-least could only grow)
    return a.at_least_ ? b : a;
  }

  bool operator==(const OrderValue& o) const {
    return at_least_ == o.at_least_ && v_ == o.v_;
  }

  std::string to_string() const {
    return at_least_ ? ">=" + v_.get_str() : v_.get_str();
  }

private:
  OrderValue(Rational v, bool al) : v_(std::move(v)), at_least_(al) {}
  Rational v_;
  bool at_least_;
};

}  // namespace adjlab
