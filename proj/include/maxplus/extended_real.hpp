#ifndef MAXPLUS_EXTENDED_REAL_HPP_
#define MAXPLUS_EXTENDED_REAL_HPP_

#include <cmath>
#include <compare>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace maxplus {

/**
 * A real number or one of the two infinities.
 *
 * This is the scalar of both completed semirings: (R ∪ {±∞}, max, +) and
 * (R ∪ {±∞}, min, +). Which semiring is meant is decided by the operation,
 * never by the value. Infinities are stored as IEEE infinities so the
 * natural double order is the order NEG_INF < finite < POS_INF.
 *
 * NaN is rejected at construction.
 */
class ExtendedReal {
 public:
  constexpr ExtendedReal() noexcept = default;

  // Implicit so that Eigen's comma initializer and literals read naturally.
  ExtendedReal(double v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(v)) {
      throw std::domain_error("ExtendedReal: NaN is not a semiring value");
    }
  }

  static constexpr ExtendedReal neg_inf() noexcept {
    return ExtendedReal(-std::numeric_limits<double>::infinity(), Raw{});
  }
  static constexpr ExtendedReal pos_inf() noexcept {
    return ExtendedReal(std::numeric_limits<double>::infinity(), Raw{});
  }

  constexpr double value() const noexcept { return value_; }
  constexpr bool is_neg_inf() const noexcept {
    return value_ == -std::numeric_limits<double>::infinity();
  }
  constexpr bool is_pos_inf() const noexcept {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const noexcept {
    return !is_neg_inf() && !is_pos_inf();
  }

  // Exact comparison; values are never NaN so the order is total.
  constexpr bool operator==(const ExtendedReal&) const noexcept = default;
  constexpr std::partial_ordering operator<=>(
      const ExtendedReal& o) const noexcept {
    return value_ <=> o.value_;
  }

 private:
  struct Raw {};
  constexpr ExtendedReal(double v, Raw) noexcept : value_(v) {}

  // All semiring kernels go through these; they never produce NaN.
  friend constexpr ExtendedReal max_plus_mul(ExtendedReal,
                                             ExtendedReal) noexcept;
  friend constexpr ExtendedReal min_plus_mul(ExtendedReal,
                                             ExtendedReal) noexcept;
  friend constexpr ExtendedReal conjugate_scalar(ExtendedReal) noexcept;

  double value_ = 0.0;
};

inline constexpr ExtendedReal kNegInf = ExtendedReal::neg_inf();
inline constexpr ExtendedReal kPosInf = ExtendedReal::pos_inf();

/// a ⊕ b = max{a, b}; NEG_INF is neutral.
constexpr ExtendedReal max_plus_add(ExtendedReal a, ExtendedReal b) noexcept {
  return a < b ? b : a;
}

/// a ⊗ b = a + b with NEG_INF absorbing, including NEG_INF ⊗ POS_INF.
constexpr ExtendedReal max_plus_mul(ExtendedReal a, ExtendedReal b) noexcept {
  if (a.is_neg_inf() || b.is_neg_inf()) {
    return kNegInf;
  }
  return ExtendedReal(a.value_ + b.value_, ExtendedReal::Raw{});
}

/// a ⊕′ b = min{a, b}; POS_INF is neutral.
constexpr ExtendedReal min_plus_add(ExtendedReal a, ExtendedReal b) noexcept {
  return b < a ? b : a;
}

/// a ⊗′ b = a + b with POS_INF absorbing, including POS_INF ⊗′ NEG_INF.
constexpr ExtendedReal min_plus_mul(ExtendedReal a, ExtendedReal b) noexcept {
  if (a.is_pos_inf() || b.is_pos_inf()) {
    return kPosInf;
  }
  return ExtendedReal(a.value_ + b.value_, ExtendedReal::Raw{});
}

/// Negation, which swaps the two infinities. Zero maps to +0, never -0.
constexpr ExtendedReal conjugate_scalar(ExtendedReal a) noexcept {
  return ExtendedReal(0.0 - a.value_, ExtendedReal::Raw{});
}

/// True for finite values with no fractional part.
inline bool is_integral(ExtendedReal a) noexcept {
  return a.is_finite() && std::trunc(a.value()) == a.value();
}

/**
 * Parses one scalar token: a decimal literal, `-inf` or `+inf` (any case).
 * Throws std::invalid_argument on anything else, including NaN and values
 * that overflow to infinity.
 */
ExtendedReal parse_scalar(std::string_view token);

/// Shortest text that parses back to the identical value.
std::string format_scalar(ExtendedReal a);

std::ostream& operator<<(std::ostream& os, ExtendedReal a);

}  // namespace maxplus

namespace Eigen {

// Lets ExtendedReal live inside Eigen dense storage. No Eigen arithmetic is
// used on it; every product goes through the semiring kernels in matrix.hpp.
template <>
struct NumTraits<maxplus::ExtendedReal> : NumTraits<double> {
  using Real = maxplus::ExtendedReal;
  using NonInteger = maxplus::ExtendedReal;
  using Nested = maxplus::ExtendedReal;
  using Literal = maxplus::ExtendedReal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
};

}  // namespace Eigen

#endif  // MAXPLUS_EXTENDED_REAL_HPP_
