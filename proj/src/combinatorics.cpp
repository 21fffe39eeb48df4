#include "codedcache/combinatorics.hpp"

#include "codedcache/errors.hpp"

namespace codedcache {

UserSet UserSet::of(std::span<const int> members) {
  std::uint64_t mask = 0;
  for (int m : members) {
    if (m < 0 || m >= 64) throw RangeError("user index " + std::to_string(m) + " outside [0, 64)");
    mask |= std::uint64_t{1} << m;
  }
  return UserSet(mask);
}

int UserSet::nth(int i) const {
  std::uint64_t m = mask_;
  for (int k = 0; k < i; ++k) m &= m - 1;
  if (m == 0) throw RangeError("position " + std::to_string(i) + " beyond set of size " + std::to_string(size()));
  return std::countr_zero(m);
}

std::vector<int> UserSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::strong_ordering UserSet::operator<=>(const UserSet& other) const noexcept {
  const std::uint64_t diff = mask_ ^ other.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  // Both sequences agree below the lowest differing element p. The set holding
  // p is smaller unless the other one has nothing left (it is then a prefix).
  const int p = std::countr_zero(diff);
  const bool mine = (mask_ >> p) & 1u;
  const std::uint64_t above = p == 63 ? 0 : ~((std::uint64_t{2} << p) - 1);
  const std::uint64_t rest_other = (mine ? other.mask_ : mask_) & (above | (std::uint64_t{1} << p));
  if (rest_other == 0) return mine ? std::strong_ordering::greater : std::strong_ordering::less;
  return mine ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(UserSet s) {
  std::string out = "{";
  bool first = true;
  for (int m : s.members()) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::vector<std::vector<int>> enumerate_subsets(std::span<const int> ground, int size) {
  const int n = static_cast<int>(ground.size());
  if (size < 0 || size > n) {
    throw RangeError("subset size " + std::to_string(size) + " outside [0, " + std::to_string(n) + "]");
  }
  std::vector<std::vector<int>> out;
  out.reserve(binomial(n, size));
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> subset;
    subset.reserve(idx.size());
    for (int i : idx) subset.push_back(ground[static_cast<std::size_t>(i)]);
    out.push_back(std::move(subset));
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<UserSet> enumerate_user_sets(int first, int count, int size) {
  std::vector<int> ground(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) ground[static_cast<std::size_t>(i)] = first + i;
  std::vector<UserSet> out;
  for (const auto& s : enumerate_subsets(ground, size)) out.push_back(UserSet::of(s));
  return out;
}

std::uint64_t lex_rank(UserSet s, int first, int count) {
  const int k = s.size();
  std::uint64_t rank = 0;
  int prev = -1;
  int i = 0;
  for (int member : s.members()) {
    const int c = member - first;
    if (c < 0 || c >= count) throw RangeError("member " + std::to_string(member) + " outside the ground set");
    for (int j = prev + 1; j < c; ++j) rank += binomial(count - 1 - j, k - 1 - i);
    prev = c;
    ++i;
  }
  return rank;
}

}  // namespace codedcache
