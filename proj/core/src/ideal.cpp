#include "adjlab/ideal.hpp"

#include <algorithm>

namespace adjlab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    check_same_ring(ring_, g.ring(), "Ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
  std::lock_guard<std::mutex> lk(*o.mu_);
  gb_ = o.gb_;
}

Ideal& Ideal::operator=(const Ideal& o) {
  if (this == &o) return *this;
  ring_ = o.ring_;
  gens_ = o.gens_;
  std::lock_guard<std::mutex> lk(*o.mu_);
  gb_ = o.gb_;
  return *this;
}

Ideal Ideal::unit(RingPtr ring) {
  std::vector<Polynomial> g{Polynomial::from_int(ring, 1)};
  return Ideal(std::move(ring), std::move(g));
}

Ideal Ideal::from_strings(const RingPtr& ring,
                          const std::vector<std::string>& polys) {
  std::vector<Polynomial> g;
  g.reserve(polys.size());
  for (const auto& s : polys) g.push_back(parse_polynomial(ring, s));
  return Ideal(ring, std::move(g));
}

const std::vector<Polynomial>& Ideal::groebner(const GroebnerBudget& budget) const {
  {
    std::lock_guard<std::mutex> lk(*mu_);
    if (gb_) return *gb_;
  }
  auto basis = std::make_shared<const std::vector<Polynomial>>(
      groebner_basis(gens_, budget));
  std::lock_guard<std::mutex> lk(*mu_);
  if (!gb_) gb_ = std::move(basis);
  return *gb_;
}

Polynomial Ideal::reduce(const Polynomial& f, const GroebnerBudget& budget) const {
  check_same_ring(ring_, f.ring(), "Ideal::reduce");
  if (gens_.empty()) return f;
  return normal_form(f, groebner(budget));
}

bool Ideal::contains(const Polynomial& f, const GroebnerBudget& budget) const {
  return reduce(f, budget).is_zero();
}

bool Ideal::contains(const Ideal& other, const GroebnerBudget& budget) const {
  check_same_ring(ring_, other.ring_, "Ideal::contains");
  for (const auto& g : other.gens_)
    if (!contains(g, budget)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other, const GroebnerBudget& budget) const {
  return contains(other, budget) && other.contains(*this, budget);
}

bool Ideal::is_unit(const GroebnerBudget& budget) const {
  if (gens_.empty()) return false;
  for (const auto& g : gens_)
    if (!g.is_zero() && g.is_constant()) return true;
  const auto& gb = groebner(budget);
  return gb.size() == 1 && gb[0].is_one();
}

std::vector<std::string> Ideal::canonical_strings(const GroebnerBudget& budget) const {
  std::vector<std::string> out;
  if (gens_.empty()) return out;
  for (const auto& g : groebner(budget)) out.push_back(g.normalized().to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace adjlab
