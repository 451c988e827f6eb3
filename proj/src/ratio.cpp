#include "hausp/ratio.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hausp {
namespace {

__extension__ typedef __int128 Wide;

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Ratio from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("ratio with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lo = std::numeric_limits<Utility>::min();
  constexpr Wide hi = std::numeric_limits<Utility>::max();
  if (num < lo || num > hi || den > hi) throw std::overflow_error("ratio overflow");
  return Ratio(static_cast<Utility>(num), static_cast<Utility>(den));
}

Utility parse_int(std::string_view s) {
  Utility v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Ratio::Ratio(Utility num, Utility den) {
  if (den == 0) throw std::domain_error("ratio with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Utility g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Ratio Ratio::operator+(const Ratio& o) const {
  if (den_ == o.den_) return from_wide(Wide(num_) + o.num_, den_);
  return from_wide(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
}

Ratio Ratio::operator-(const Ratio& o) const {
  if (den_ == o.den_) return from_wide(Wide(num_) - o.num_, den_);
  return from_wide(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Ratio::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Ratio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) {
      throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
    }
    bool negative = !whole.empty() && whole.front() == '-';
    Utility w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
    Utility scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Utility f = parse_int(frac);
    if (f < 0) throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
    Wide num = Wide(w < 0 ? -w : w) * scale + f;
    if (negative) num = -num;
    return from_wide(num, scale);
  }
  return Ratio(parse_int(text));
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

}  // namespace hausp
