#include "bosebounds/estimate.hpp"

#include "bosebounds/errors.hpp"

namespace bosebounds {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::exact: return "exact";
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::estimate: return "estimate";
  }
  return "estimate";
}

BoundKind bound_kind_from_string(std::string_view name) {
  if (name == "exact") return BoundKind::exact;
  if (name == "upper") return BoundKind::upper;
  if (name == "lower") return BoundKind::lower;
  if (name == "estimate") return BoundKind::estimate;
  throw InvalidArgument("unknown bound kind '" + std::string(name) + "'");
}

EnergyEstimate EnergyEstimate::scaled(const Rational& factor, std::string method, int n) const {
  if (factor <= 0) throw InvalidArgument("bound direction is only preserved by positive factors");
  return {to_double(factor * Rational(value_)), kind_, std::move(method), family_, n};
}

EnergyEstimate EnergyEstimate::relabelled(BoundKind kind, std::string method) const {
  const bool widening = kind == kind_ || kind == BoundKind::estimate ||
                        (kind_ == BoundKind::exact && kind != BoundKind::exact);
  if (!widening)
    throw InvalidArgument("cannot relabel a " + std::string(to_string(kind_)) + " value as " +
                          std::string(to_string(kind)));
  return {value_, kind, std::move(method), family_, n_};
}

}  // namespace bosebounds
