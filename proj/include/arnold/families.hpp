#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "arnold/signed_perm.hpp"

namespace arnold {

enum class Side { B, D };

enum class FamilyId { Alternating, SnakesB, SnakesD, CudA, CudB, CudD, VsB, VsD, FlB, FlD };

std::string_view to_string(FamilyId f);
// Throws UnknownFamily.
FamilyId parse_family(std::string_view tag);
const std::vector<FamilyId>& all_families();
bool is_signed_family(FamilyId f);

// 2^n n!; rank is the position of the window in lexicographic order, so
// unrank(0, n) = [-n, ..., -1].
std::uint64_t signed_count(int n);
std::uint64_t rank(const SignedPerm& p);
SignedPerm unrank(std::uint64_t i, int n);

// Lexicographic rank of an unsigned permutation among the n! of its size.
std::uint64_t unsigned_rank(std::span<const int> p);

// Reverses the prefix of length k. Legal when k == n or |p_{k+1}| is below
// every |p_i| with i <= k; otherwise IllegalFlip.
bool is_legal_flip(std::span<const int> w, int k);
SignedPerm flip(const SignedPerm& p, int k);

bool is_up_down(std::span<const int> a);    // a1 < a2 > a3 < ...
bool is_down_up(std::span<const int> a);    // a1 > a2 < a3 > ...
bool is_alternating(const SignedPerm& p);   // unsigned and down-up
bool is_snake_b(const SignedPerm& p);       // p1 > 0, down-up
bool is_snake_d(const SignedPerm& p);       // p1 < 0, p1 > -p2, up-down
bool is_cud_a(const CycleForm& c);
bool is_cud_b(const CycleForm& c);
bool is_cud_d(const CycleForm& c);
bool is_vs_b(const SignedPerm& p);
bool is_vs_d(const SignedPerm& p);

struct FlipClass {
  SignedPerm canon;                  // lexicographically least member
  std::vector<SignedPerm> members;   // sorted
  int smax = 0;
  int spk = 0;
};

// Builds a class from its members; throws InvariantViolation when smax or
// spk differ between members.
FlipClass make_flip_class(std::vector<SignedPerm> members);

// Raw flip-equivalence partition of B_n (signed) or S_n (unsigned), classes
// sorted by least member. Membership only; no invariants are asserted.
std::vector<std::vector<SignedPerm>> flip_partition(int n, bool signed_perms);
std::vector<FlipClass> flip_classes(int n);

struct FamilyObject {
  SignedPerm perm;                          // class representative for fl-*
  std::optional<CycleForm> cycles;          // cud-*
  std::shared_ptr<const FlipClass> cls;     // fl-*
  int index = 0;
};

// Family index: first entry (alternating, snakes-b), minus first entry
// (snakes-d), last cycle leader (cud-*), |first entry| (vs-*), |smax| (fl-*).
std::vector<FamilyObject> enumerate(FamilyId f, int n);
std::vector<FamilyObject> enumerate_indexed(FamilyId f, int n, int k);

}  // namespace arnold
