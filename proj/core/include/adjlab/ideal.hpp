// Finitely generated ideals with a write-once cached reduced Groebner
// basis. Equality is mutual membership of generators, so it is
// independent of the presentation.
#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "adjlab/groebner.hpp"
#include "adjlab/parser.hpp"

namespace adjlab {

class Ideal {
public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  Ideal(const Ideal& o);
  Ideal& operator=(const Ideal& o);
  Ideal(Ideal&&) = default;
  Ideal& operator=(Ideal&&) = default;

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(RingPtr ring);
  static Ideal from_strings(const RingPtr& ring,
                            const std::vector<std::string>& polys);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool has_generators() const { return !gens_.empty(); }

  /// Reduced Groebner basis in the ring's order; cached after first use.
  const std::vector<Polynomial>& groebner(const GroebnerBudget& budget = {}) const;

  Polynomial reduce(const Polynomial& f, const GroebnerBudget& budget = {}) const;
  bool contains(const Polynomial& f, const GroebnerBudget& budget = {}) const;
  bool contains(const Ideal& other, const GroebnerBudget& budget = {}) const;
  bool equals(const Ideal& other, const GroebnerBudget& budget = {}) const;

  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit(const GroebnerBudget& budget = {}) const;

  /// Sorted reduced-Groebner generator strings; textual equality of two
  /// ideals' canonical strings is ideal equality.
  std::vector<std::string> canonical_strings(const GroebnerBudget& budget = {}) const;

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
  mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

}  // namespace adjlab
