#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace torus {

/// Reduced fraction with a positive denominator.
class Rational {
public:
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / (g == 0 ? 1 : g);
    den_ = den / (g == 0 ? 1 : g);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Decimal rendering rounded half-up at `decimals` places, computed in integers.
  std::string to_fixed(int decimals) const {
    const bool negative = num_ < 0;
    const std::int64_t a = negative ? -num_ : num_;
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    // round(a * scale / den) with ties away from zero
    const __int128 scaled = static_cast<__int128>(a) * scale;
    const __int128 q = (2 * scaled + den_) / (2 * static_cast<__int128>(den_));
    const auto whole = static_cast<std::int64_t>(q / scale);
    const auto frac = static_cast<std::int64_t>(q % scale);
    std::string out = negative && q != 0 ? "-" : "";
    out += std::to_string(whole);
    if (decimals > 0) {
      std::string digits = std::to_string(frac);
      out += '.';
      out += std::string(static_cast<std::size_t>(decimals) - digits.size(), '0');
      out += digits;
    }
    return out;
  }

  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace torus
