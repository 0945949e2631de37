#include "adjlab/ring.hpp"

#include <set>

namespace adjlab {

RingPtr PolyRing::make(std::vector<std::string> vars, CoeffField field,
                       MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("PolyRing: empty variable name");
    if (!seen.insert(v).second)
      throw std::invalid_argument("PolyRing: duplicate variable name '" + v + "'");
  }
  if (order.kind() == MonomialOrder::Kind::Block && order.split() > vars.size())
    throw std::invalid_argument("PolyRing: block split index out of range");
  return RingPtr(new PolyRing(std::move(vars), field, order));
}

std::optional<std::size_t> PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

}  // namespace adjlab
