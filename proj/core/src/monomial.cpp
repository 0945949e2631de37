#include "adjlab/monomial.hpp"

namespace adjlab {

int MonomialOrder::cmp_lex(const ExponentVec& a, const ExponentVec& b,
                           std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::cmp_grevlex(const ExponentVec& a, const ExponentVec& b,
                               std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  // equal degree: the last differing exponent decides, smaller wins
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::cmp_range(const ExponentVec& a, const ExponentVec& b,
                             std::size_t lo, std::size_t hi) const {
  return inner_ == Kind::Lex ? cmp_lex(a, b, lo, hi) : cmp_grevlex(a, b, lo, hi);
}

int MonomialOrder::compare(const ExponentVec& a, const ExponentVec& b) const {
  switch (kind_) {
    case Kind::Lex:
      return cmp_lex(a, b, 0, a.size());
    case Kind::GrevLex:
      return cmp_grevlex(a, b, 0, a.size());
    case Kind::Block: {
      int c = cmp_range(a, b, 0, split_);
      if (c != 0) return c;
      return cmp_range(a, b, split_, a.size());
    }
  }
  return 0;
}

}  // namespace adjlab
