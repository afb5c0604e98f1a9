#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "arnold/signed_perm.hpp"

namespace arnold {

// Positions are 1-based. Both sets are empty for words of length 1.
std::vector<int> valleys(std::span<const int> a);
std::vector<int> peaks(std::span<const int> a);

int stat_neg(const SignedPerm& p);
// Requires a special cycle form, or a special one followed by a final (k,-k)
// cycle (which counts 1); anything else is MalformedCudCycleForm.
int stat_npk(const CycleForm& c);
// Signed peaks with sigma_0 = sigma_{n+1} = 0.
int stat_spk(std::span<const int> w);
inline int stat_spk(const SignedPerm& p) { return stat_spk(p.window()); }
// Signed maximum, by the min-|.| split recursion.
int stat_smax(std::span<const int> w);
inline int stat_smax(const SignedPerm& p) { return stat_smax(p.window()); }

std::vector<int> left_to_right_minima(std::span<const int> a);

using StatReport = std::map<std::string, int>;
// neg, spk, smax, valleys, peaks and ltr-min (the last three on |p|); npk is
// added when the cycle form is of CUD type.
StatReport stat_report(const SignedPerm& p);

}  // namespace arnold
