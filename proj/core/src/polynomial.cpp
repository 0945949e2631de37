#include "adjlab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace adjlab {

namespace {

struct MonoGreater {
  const MonomialOrder* order;
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return order->compare(a, b) > 0;
  }
};

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  if (ring->field().is_zero(c)) return zero(std::move(ring));
  std::vector<Term> t{Term{ExponentVec(ring->arity(), 0), c}};
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_int(RingPtr ring, std::int64_t n) {
  Coeff c = ring->field().from_int(n);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->arity())
    throw std::out_of_range("Polynomial::variable: index out of range");
  ExponentVec e(ring->arity(), 0);
  e[i] = 1;
  Coeff one = ring->field().one();
  return monomial(std::move(ring), std::move(e), one);
}

Polynomial Polynomial::monomial(RingPtr ring, ExponentVec e, const Coeff& c) {
  Coeff cc = c;
  if (ring->field().is_zero(cc)) return zero(std::move(ring));
  std::vector<Term> t{Term{std::move(e), std::move(cc)}};
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.size() != ring->arity())
      throw std::invalid_argument("from_terms: exponent arity mismatch");
  const auto& F = ring->field();
  MonoGreater gt{&ring->order()};
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return gt(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::vector<Term> clean;
  clean.reserve(out.size());
  for (auto& t : out)
    if (!F.is_zero(t.coeff)) clean.push_back(std::move(t));
  Polynomial p(std::move(ring));
  p.terms_ = std::move(clean);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_mono(terms_[0].mono));
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && is_zero_mono(terms_[0].mono) &&
         ring_->field().is_one(terms_[0].coeff);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  return terms_.front();
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_, "poly add");
  const auto& F = ring_->field();
  const auto& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!F.is_zero(s)) out.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial p(ring_);
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::operator-() const {
  const auto& F = ring_->field();
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, F.neg(t.coeff)});
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_, "poly mul");
  const auto& F = ring_->field();
  MonoGreater gt{&ring_->order()};
  std::map<ExponentVec, Coeff, MonoGreater> acc(gt);
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      ExponentVec m = mono_mul(a.mono, b.mono);
      Coeff c = F.mul(a.coeff, b.coeff);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = F.add(it->second, c);
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!F.is_zero(c)) out.push_back(Term{m, std::move(c)});
  Polynomial p(ring_);
  p.terms_ = std::move(out);
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same_ring(ring_, o.ring_, "poly eq");
  if (terms_.size() != o.terms_.size()) return false;
  const auto& F = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono) return false;
    if (!F.eq(terms_[i].coeff, o.terms_[i].coeff)) return false;
  }
  return true;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  const auto& F = ring_->field();
  if (F.is_zero(c)) return zero(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, F.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::mono_multiplied(const ExponentVec& m, const Coeff& c) const {
  const auto& F = ring_->field();
  if (F.is_zero(c)) return zero(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    p.terms_.push_back(Term{mono_mul(t.mono, m), F.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial r = from_int(ring_, 1);
  Polynomial b = *this;
  while (k > 0) {
    if (k & 1u) r = r * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->arity())
    throw std::out_of_range("derivative: variable index out of range");
  const auto& F = ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Coeff c = F.mul(t.coeff, F.from_int(t.mono[var]));
    if (F.is_zero(c)) continue;  // char p can kill a term
    ExponentVec m = t.mono;
    m[var] -= 1;
    out.push_back(Term{std::move(m), std::move(c)});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  const auto& F = ring_->field();
  if (F.is_modular()) return monic();
  // scale so that coefficients are coprime integers, leading one positive
  Integer den = 1, num = 0;
  for (const auto& t : terms_) {
    den = lcm(den, Integer(t.coeff.rational().get_den()));
  }
  for (const auto& t : terms_) {
    Integer n = Integer(t.coeff.rational().get_num()) * (den / Integer(t.coeff.rational().get_den()));
    num = gcd(num, n);
  }
  if (num == 0) num = 1;
  Rational scale(den, num);
  scale.canonicalize();
  if (leading_coeff().rational() < 0) scale = -scale;
  return scaled(Coeff(scale));
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->arity())
    throw std::invalid_argument("substitute: need one image per variable");
  for (const auto& g : images) check_same_ring(g.ring(), target, "substitute");
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] > 0)
        term = term * images[i].pow(static_cast<std::uint32_t>(t.mono[i]));
    }
    acc = acc + term;
  }
  return acc;
}

Polynomial Polynomial::with_ring(const RingPtr& target) const {
  if (!ring_->compatible_with(*target))
    throw RingMismatchError("with_ring: incompatible rings");
  std::vector<Term> ts = terms_;
  return from_terms(target, std::move(ts));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& F = ring_->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = F.to_string(t.coeff);
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) cs = cs.substr(1);
    bool unit_coeff = (cs == "1");
    bool any_var = !is_zero_mono(t.mono);
    if (!any_var) {
      os << cs;
    } else {
      bool emitted = false;
      if (!unit_coeff) {
        os << cs;
        emitted = true;
      }
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (emitted) os << "*";
        os << ring_->var_name(i);
        if (t.mono[i] > 1) os << "^" << t.mono[i];
        emitted = true;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace adjlab
