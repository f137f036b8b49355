#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "modspace/rational.hpp"

namespace modspace {

/// An extended exponent p in (0, inf], stored exactly.
class Exponent {
 public:
  /// Throws std::domain_error unless value > 0.
  explicit Exponent(Rational value);
  Exponent(std::int64_t num, std::int64_t den);
  explicit Exponent(std::int64_t value) : Exponent(value, 1) {}

  static Exponent infinity() { return Exponent(); }

  /// "inf", "a" or "a/b".
  static Exponent parse(std::string_view text);

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  /// 1/p, exactly; zero for p = inf.
  Rational reciprocal() const;

  /// Hoelder conjugate: 1/p + 1/p' = 1 for p >= 1, and p' = inf for 0 < p < 1.
  Exponent dual() const;

  double to_double() const;
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  Exponent() = default;
  std::optional<Rational> value_;
};

inline Exponent inf_exponent() { return Exponent::infinity(); }

/// Which affine piece of the max (tau) or min (sigma) is attained. Ties resolve
/// in declaration order.
enum class IndexPiece { ZeroPiece, QminusP, PplusQminus1 };

std::string_view to_string(IndexPiece piece);

Rational reciprocal(const Exponent& p);
Exponent dual(const Exponent& p);

/// d * max(0, 1/q - 1/p, 1/q + 1/p - 1)
Rational tau(const Exponent& p, const Exponent& q, int d);

/// d * min(0, 1/q - 1/p, 1/q + 1/p - 1)
Rational sigma(const Exponent& p, const Exponent& q, int d);

IndexPiece tau_region(const Exponent& p0, const Exponent& q);
IndexPiece sigma_region(const Exponent& p1, const Exponent& q);

/// Throws std::domain_error for d < 1.
void require_dimension(int d);

}  // namespace modspace
