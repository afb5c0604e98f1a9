#pragma once

#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "arnold/error.hpp"
#include "arnold/laurent_poly.hpp"

namespace arnold {

// One row of the double triangle: neg holds k = -n..-1, pos holds k = 1..n.
template <class T>
struct ArnoldRow {
  int n = 0;
  std::vector<T> neg;
  std::vector<T> pos;

  const T& at(int k) const {
    if (k == 0 || std::abs(k) > n)
      throw Error(ErrorCode::IndexOutOfRange, "k=" + std::to_string(k) + " for n=" + std::to_string(n));
    return k > 0 ? pos[static_cast<std::size_t>(k - 1)] : neg[static_cast<std::size_t>(k + n)];
  }
  T& at(int k) { return const_cast<T&>(std::as_const(*this).at(k)); }
};

// E[n-1][k-1] = E_{n,k}.
std::vector<std::vector<std::int64_t>> entringer(int n_max);

std::vector<ArnoldRow<std::int64_t>> arnold_numbers(int n_max);
std::vector<ArnoldRow<LaurentPoly>> arnold_hoffman(int n_max);

// Derivative polynomials of tan and sec:
//   P_{n+1} = (1+t^2) P_n',  Q_{n+1} = (1+t^2) Q_n' + t Q_n,
// from d/dx tan = 1 + tan^2 and d/dx sec = tan sec.
struct HoffmanPair {
  LaurentPoly p;
  LaurentPoly q;
};
std::vector<HoffmanPair> hoffman_pq(int n_max);

struct HoffmanRowCheck {
  int n = 0;
  LaurentPoly pos_sum;  // sum of V_{n,k}, k > 0
  LaurentPoly neg_sum;  // sum of V_{n,-k}, k > 0
  bool q_ok = false;    // t Q_n == pos_sum
  bool p_ok = false;    // P_n - t Q_n == neg_sum
};
std::vector<HoffmanRowCheck> check_hoffman_identities(int n_max);

template <class T>
T row_sum(const std::vector<T>& side) {
  T s{};
  for (const auto& x : side) s += x;
  return s;
}

}  // namespace arnold
