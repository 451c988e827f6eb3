#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hausp {

/// Utilities are integral: quantity x external utility.
using Utility = std::int64_t;

/// Exact non-floating rational used for average utilities and bounds.
///
/// Always stored in lowest terms with a positive denominator. Comparison is by
/// cross-multiplication in 128-bit arithmetic, so ties are decided exactly.
/// Arithmetic throws std::overflow_error if a reduced result does not fit.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(Utility num, Utility den = 1);  // NOLINT: implicit from integers is intended

  Utility num() const { return num_; }
  Utility den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Ratio operator+(const Ratio& o) const;
  Ratio operator-(const Ratio& o) const;
  Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
  Ratio& operator-=(const Ratio& o) { return *this = *this - o; }

  friend bool operator==(const Ratio& a, const Ratio& b) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

  /// "40" for integers, "41/3" otherwise.
  std::string str() const;

  /// Accepts "n", "n/d" and finite decimals such as "54.75".
  static Ratio parse(std::string_view text);

 private:
  Utility num_ = 0;
  Utility den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

}  // namespace hausp
