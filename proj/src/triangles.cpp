#include "arnold/triangles.hpp"

#include <string>

#include "arnold/checked.hpp"

namespace arnold {

namespace {

void require_positive(int n_max) {
  if (n_max < 1) throw Error(ErrorCode::SizeCapExceeded, "n_max must be >= 1, got " + std::to_string(n_max));
}

struct NumericOps {
  static std::int64_t add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
  static std::int64_t shift(std::int64_t a, int) { return a; }
  static std::int64_t zero() { return 0; }
};

struct PolyOps {
  static LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
  static LaurentPoly shift(const LaurentPoly& a, int by) { return a.shifted(by); }
  static LaurentPoly zero() { return {}; }
};

// Negative side right to left, the bridge v_{n,1} = t^2 v_{n,-1}, then the
// positive side left to right. The numeric triangle is the t = 1 shadow.
template <class T, class Ops>
std::vector<ArnoldRow<T>> boustrophedon(int n_max, const T& v11, const T& v1m1) {
  require_positive(n_max);
  std::vector<ArnoldRow<T>> rows;
  rows.push_back({1, {v1m1}, {v11}});
  for (int n = 2; n <= n_max; ++n) {
    const auto& prev = rows.back();
    ArnoldRow<T> row{n, std::vector<T>(static_cast<std::size_t>(n)), std::vector<T>(static_cast<std::size_t>(n))};
    row.at(-n) = Ops::zero();
    for (int k = n - 1; k >= 1; --k) row.at(-k) = Ops::add(row.at(-k - 1), Ops::shift(prev.at(k), -1));
    row.at(1) = Ops::shift(row.at(-1), 2);
    for (int k = 2; k <= n; ++k) row.at(k) = Ops::add(row.at(k - 1), Ops::shift(prev.at(-k + 1), 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<std::int64_t>> entringer(int n_max) {
  require_positive(n_max);
  std::vector<std::vector<std::int64_t>> e{{1}};
  for (int n = 2; n <= n_max; ++n) {
    const auto& prev = e.back();
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0);
    for (int k = 2; k <= n; ++k) row[k - 1] = checked_add(row[k - 2], prev[n - k]);
    e.push_back(std::move(row));
  }
  return e;
}

std::vector<ArnoldRow<std::int64_t>> arnold_numbers(int n_max) {
  return boustrophedon<std::int64_t, NumericOps>(n_max, 1, 1);
}

std::vector<ArnoldRow<LaurentPoly>> arnold_hoffman(int n_max) {
  auto rows = boustrophedon<LaurentPoly, PolyOps>(n_max, LaurentPoly::monomial(1, 2), LaurentPoly(1));
  for (const auto& row : rows)
    for (const auto* side : {&row.neg, &row.pos})
      for (const auto& v : *side)
        for (auto [e, c] : v.coeffs())
          if (e < 0 || c < 0)
            throw Error(ErrorCode::InvariantViolation, "V_{" + std::to_string(row.n) + ",k} = " + v.to_string());
  return rows;
}

std::vector<HoffmanPair> hoffman_pq(int n_max) {
  require_positive(n_max);
  const LaurentPoly one_plus_t2 = LaurentPoly(1) + LaurentPoly::monomial(1, 2);
  std::vector<HoffmanPair> out{{one_plus_t2, LaurentPoly::monomial(1, 1)}};
  for (int n = 2; n <= n_max; ++n) {
    const auto& [p, q] = out.back();
    out.push_back({one_plus_t2 * p.derivative(), one_plus_t2 * q.derivative() + q.shifted(1)});
  }
  return out;
}

std::vector<HoffmanRowCheck> check_hoffman_identities(int n_max) {
  auto rows = arnold_hoffman(n_max);
  auto pq = hoffman_pq(n_max);
  std::vector<HoffmanRowCheck> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto& row = rows[n - 1];
    HoffmanRowCheck r{n, row_sum(row.pos), row_sum(row.neg)};
    const auto tq = pq[n - 1].q.shifted(1);
    r.q_ok = tq == r.pos_sum;
    r.p_ok = pq[n - 1].p - tq == r.neg_sum;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace arnold
