#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "codedcache/rational.hpp"

namespace codedcache {

enum class Group { Fixed = 1, Mobile = 2 };

/// Parameters of a two-group system: K1 fixed users with placement parameter
/// t1, K2 mobile users with t2, and N files. Cache sizes are derived exactly:
/// M_i = t_i * N / K_i.
class SystemConfig {
 public:
  int k1() const noexcept { return k1_; }
  int k2() const noexcept { return k2_; }
  int t1() const noexcept { return t1_; }
  int t2() const noexcept { return t2_; }
  int files() const noexcept { return n_; }
  int users() const noexcept { return k1_ + k2_; }

  Rational m1() const { return Rational(std::int64_t{t1_} * n_, k1_); }
  Rational m2() const { return Rational(std::int64_t{t2_} * n_, k2_); }
  /// Normalized cache sizes M_i / N = t_i / K_i.
  Rational lambda1() const { return Rational(t1_, k1_); }
  Rational lambda2() const { return Rational(t2_, k2_); }

  Group group_of(int user) const;
  bool operator==(const SystemConfig&) const = default;

 private:
  friend SystemConfig validate_parameters(int, int, int, int, int);
  SystemConfig(int k1, int k2, int t1, int t2, int n)
      : k1_(k1), k2_(k2), t1_(t1), t2_(t2), n_(n) {}

  int k1_;
  int k2_;
  int t1_;
  int t2_;
  int n_;
};

inline constexpr int kMaxAnalysisUsers = 1000;

/// Range checks only, for closed-form analysis. Configs from here may be too
/// large to simulate.
SystemConfig validate_parameters(int k1, int k2, int t1, int t2, int n);

/// Throws RangeError unless K_i >= 2, 1 <= t_i < K_i, N >= 1 and
/// K1 + K2 <= 64 (user sets are stored as 64-bit masks).
SystemConfig validate_config(int k1, int k2, int t1, int t2, int n);

/// Requested file index per user, users 0..K1+K2-1.
class DemandVector {
 public:
  DemandVector(const SystemConfig& cfg, std::vector<int> files);

  int operator[](int user) const { return files_[static_cast<std::size_t>(user)]; }
  std::size_t size() const noexcept { return files_.size(); }
  std::span<const int> files() const noexcept { return files_; }

  /// d = (0, 1, ..., K-1) mod N.
  static DemandVector worst_case(const SystemConfig& cfg);
  static DemandVector all_same(const SystemConfig& cfg, int file = 0);

 private:
  std::vector<int> files_;
};

std::string describe(const SystemConfig& cfg);

}  // namespace codedcache
