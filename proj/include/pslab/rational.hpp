#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pslab {

// Exponent c = num/den kept exact so that [n^c] is decidable.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Rational() = default;
  // Reduces to lowest terms; den must be nonzero (sign is moved to num).
  Rational(std::int64_t n, std::int64_t d);

  // Accepts "a/b" or a bare integer "a". Decimal input such as "1.1" is
  // rejected with DomainError.
  static Rational parse(std::string_view text);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Exact comparison a < b by cross multiplication.
bool less(const Rational& a, const Rational& b);

}  // namespace pslab
