#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arnold/families.hpp"
#include "arnold/signed_perm.hpp"

namespace arnold {

// Image of one object under a recurrence map. The target lies in the
// family of the given side at size n and index k; shift is the change of
// the statistic (npk for CUD, neg for VS) the recurrence predicts.
struct PsiImage {
  Side side;
  int n = 0;
  int k = 0;
  SignedPerm perm;
  std::optional<CycleForm> cycles;  // CUD maps only
  int shift = 0;
  std::string rule;
};

// D side (index k > 1): to D_{n,k-1} or B_{n-1,k-1}.
// B side (index k < n): to B_{n,k+1} or D_{n-1,k}; index n: to D_{n,n}.
PsiImage psi_cud(const CycleForm& c, Side side);
PsiImage psi_vs(const SignedPerm& p, Side side);

struct PairingReport {
  Side side;
  int n = 0;
  int k = 0;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::size_t distinct_images = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Applies the map to the whole domain and checks targets, statistic shifts,
// injectivity and cardinalities.
PairingReport recurrence_step_cud(Side side, int n, int k);
PairingReport recurrence_step_vs(Side side, int n, int k);

}  // namespace arnold
