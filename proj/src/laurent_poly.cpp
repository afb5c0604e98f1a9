#include "arnold/laurent_poly.hpp"

#include <cctype>

#include "arnold/checked.hpp"
#include "arnold/error.hpp"

namespace arnold {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exp) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw Error(ErrorCode::InvariantViolation, "min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw Error(ErrorCode::InvariantViolation, "max_exp of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly& LaurentPoly::add_term(int exp, std::int64_t coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = c_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) c_.erase(it);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.c_) add_term(e, checked_sub(0, c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto [ea, ca] : a.c_)
    for (auto [eb, cb] : b.c_) r.add_term(ea + eb, checked_mul(ca, cb));
  return r;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r;
  for (auto [e, c] : c_) r.c_.emplace(e + by, c);
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (auto [e, c] : c_) r.add_term(e - 1, checked_mul(c, e));
  return r;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (auto [e, c] : c_) s = checked_add(s, c);
  return s;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto [e, c] : c_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (mag != 1 || e == 0) s += std::to_string(mag);
    if (e != 0) s += "t";
    if (e != 0 && e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly p;
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorCode::ParseError, "bad polynomial '" + std::string(text) + "'"); };
  auto read_int = [&](std::int64_t& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) return false;
    out = std::stoll(std::string(text.substr(start, i - start)));
    return true;
  };
  if (text.empty()) fail();
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::int64_t coeff = 1;
    bool has_coeff = read_int(coeff);
    int exp = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        int esign = 1;
        if (i < text.size() && text[i] == '-') {
          esign = -1;
          ++i;
        }
        std::int64_t e;
        if (!read_int(e)) fail();
        exp = static_cast<int>(esign * e);
      }
    } else if (!has_coeff) {
      fail();
    }
    p.add_term(exp, sign * coeff);
  }
  return p;
}

}  // namespace arnold
