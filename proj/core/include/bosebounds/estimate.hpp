#pragma once

#include <string>
#include <string_view>

#include "bosebounds/rational.hpp"
#include "bosebounds/system.hpp"

namespace bosebounds {

/// How an energy value relates to the true ground-state energy.
enum class BoundKind { exact, upper, lower, estimate };

std::string_view to_string(BoundKind kind);
BoundKind bound_kind_from_string(std::string_view name);

/// A dimensionless energy together with its bound character.
///
/// Values are only combined through the members below so the bound direction
/// is carried along: scaling by a positive constant keeps the kind; anything
/// else must build a new estimate explicitly.
class EnergyEstimate {
public:
  EnergyEstimate() = default;
  EnergyEstimate(double value, BoundKind kind, std::string method, Family family, int n)
      : value_(value), kind_(kind), method_(std::move(method)), family_(family), n_(n) {}

  double value() const { return value_; }
  BoundKind kind() const { return kind_; }
  const std::string& method() const { return method_; }
  Family family() const { return family_; }
  int n() const { return n_; }

  bool is_exact() const { return kind_ == BoundKind::exact; }

  /// `factor` * this. Requires factor > 0; an exact value scaled by a coefficient
  /// that came from an inequality is no longer exact, so the caller chooses
  /// the resulting kind via `as_kind` when it differs.
  EnergyEstimate scaled(const Rational& factor, std::string method, int n) const;

  /// Same value relabelled. Only valid for widening: exact -> upper/lower/estimate,
  /// upper/lower -> estimate.
  EnergyEstimate relabelled(BoundKind kind, std::string method) const;

private:
  double value_ = 0.0;
  BoundKind kind_ = BoundKind::estimate;
  std::string method_;
  Family family_ = Family::coulomb_atom;
  int n_ = 0;
};

}  // namespace bosebounds
