#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace codedcache {

/// A set of user indices in [0, 64), kept as a bit mask. Iteration and
/// positional access follow ascending element order, so nth(0) is the
/// smallest member.
class UserSet {
 public:
  constexpr UserSet() = default;
  constexpr explicit UserSet(std::uint64_t mask) : mask_(mask) {}
  static UserSet of(std::span<const int> members);
  static UserSet of(std::initializer_list<int> members) {
    return of(std::span<const int>(members.begin(), members.size()));
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(int user) const noexcept {
    return user >= 0 && user < 64 && ((mask_ >> user) & 1u) != 0;
  }
  constexpr bool subset_of(UserSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr UserSet with(int user) const noexcept {
    return UserSet(mask_ | (std::uint64_t{1} << user));
  }
  constexpr UserSet without(int user) const noexcept {
    return UserSet(mask_ & ~(std::uint64_t{1} << user));
  }

  /// The i-th smallest member; i must be < size().
  int nth(int i) const;
  /// Number of members smaller than `user`.
  int position(int user) const noexcept {
    return std::popcount(mask_ & ((std::uint64_t{1} << user) - 1));
  }
  std::vector<int> members() const;

  constexpr bool operator==(const UserSet&) const = default;
  /// Lexicographic order of the ascending member sequences.
  std::strong_ordering operator<=>(const UserSet& other) const noexcept;

 private:
  std::uint64_t mask_ = 0;
};

std::string to_string(UserSet s);

/// C(n, k) as an exact 64-bit integer; 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// All `size`-subsets of `ground` (sorted ascending) in lexicographic order.
/// Throws RangeError when size > |ground| or size < 0.
std::vector<std::vector<int>> enumerate_subsets(std::span<const int> ground, int size);

/// Same enumeration as masks, over the contiguous ground {first, ..., first+count-1}.
std::vector<UserSet> enumerate_user_sets(int first, int count, int size);

/// Rank of `s` in the lexicographic enumeration of |s|-subsets of
/// {first, ..., first+count-1}.
std::uint64_t lex_rank(UserSet s, int first, int count);

}  // namespace codedcache
