// Exponent vectors and monomial orders (lex, grevlex, block elimination).
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace adjlab {

using ExponentVec = std::vector<std::int32_t>;

inline std::int64_t total_degree(const ExponentVec& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

inline bool divides(const ExponentVec& a, const ExponentVec& b) {
  // a | b componentwise
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExponentVec mono_mul(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExponentVec mono_div(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExponentVec mono_lcm(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline bool coprime(const ExponentVec& a, const ExponentVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

inline bool is_zero_mono(const ExponentVec& e) {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

/// A monomial order on exponent vectors of fixed arity. Block orders
/// compare the leading block first, which is what elimination needs.
class MonomialOrder {
public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, Kind::Lex, 0); }
  static MonomialOrder grevlex() {
    return MonomialOrder(Kind::GrevLex, Kind::GrevLex, 0);
  }
  /// Variables [0, split) form the leading block; ties decided on the
  /// tail block. Both blocks use `inner`.
  static MonomialOrder block(Kind inner, std::size_t split) {
    return MonomialOrder(Kind::Block, inner, split);
  }

  Kind kind() const { return kind_; }
  Kind inner() const { return inner_; }
  std::size_t split() const { return split_; }

  /// >0 if a > b, 0 if equal, <0 if a < b.
  int compare(const ExponentVec& a, const ExponentVec& b) const;

  bool less(const ExponentVec& a, const ExponentVec& b) const {
    return compare(a, b) < 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && inner_ == o.inner_ && split_ == o.split_;
  }

private:
  MonomialOrder(Kind k, Kind inner, std::size_t split)
      : kind_(k), inner_(inner), split_(split) {}

  static int cmp_lex(const ExponentVec& a, const ExponentVec& b, std::size_t lo,
                     std::size_t hi);
  static int cmp_grevlex(const ExponentVec& a, const ExponentVec& b,
                         std::size_t lo, std::size_t hi);
  int cmp_range(const ExponentVec& a, const ExponentVec& b, std::size_t lo,
                std::size_t hi) const;

  Kind kind_;
  Kind inner_;
  std::size_t split_;
};

}  // namespace adjlab
