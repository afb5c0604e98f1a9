#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace arnold {

// Integer polynomial in t that may carry negative exponents. Zero
// coefficients are never stored; all arithmetic is overflow-checked.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant) { add_term(0, constant); }  // NOLINT: implicit by design

  static LaurentPoly monomial(std::int64_t coeff, int exp);
  // Accepts "5+23t^2+18t^4", "t", "-3t^-1", "0".
  static LaurentPoly parse(std::string_view text);

  const std::map<int, std::int64_t>& coeffs() const noexcept { return c_; }
  std::int64_t coeff(int exp) const;
  bool is_zero() const noexcept { return c_.empty(); }
  int min_exp() const;
  int max_exp() const;

  LaurentPoly& add_term(int exp, std::int64_t coeff);
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly shifted(int by) const;  // times t^by
  LaurentPoly derivative() const;
  std::int64_t eval_at_one() const;

  std::string to_string() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, std::int64_t> c_;
};

}  // namespace arnold
