// PolyRing: a named list of variables over Q or F_p with a monomial order.
// Rings are immutable and shared; two rings are interchangeable iff their
// contents (names, field, order) agree.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adjlab/field.hpp"
#include "adjlab/monomial.hpp"

namespace adjlab {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
public:
  static RingPtr make(std::vector<std::string> vars, CoeffField field,
                      MonomialOrder order = MonomialOrder::grevlex());

  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> var_index(const std::string& name) const;

  const CoeffField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  bool same_as(const PolyRing& o) const {
    return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
  }

  /// Same variables and field, possibly different order.
  bool compatible_with(const PolyRing& o) const {
    return vars_ == o.vars_ && field_ == o.field_;
  }

private:
  PolyRing(std::vector<std::string> vars, CoeffField field, MonomialOrder order)
      : vars_(std::move(vars)), field_(field), order_(order) {}

  std::vector<std::string> vars_;
  CoeffField field_;
  MonomialOrder order_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b,
                            const char* where) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b))
    throw RingMismatchError(std::string(where) + ": operands live in different rings");
}

}  // namespace adjlab
