#include "codedcache/config.hpp"

#include <sstream>

#include "codedcache/errors.hpp"

namespace codedcache {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Group SystemConfig::group_of(int user) const {
  if (user < 0 || user >= users()) throw RangeError("user " + std::to_string(user) + " out of range");
  return user < k1_ ? Group::Fixed : Group::Mobile;
}

SystemConfig validate_parameters(int k1, int k2, int t1, int t2, int n) {
  auto fail = [&](const std::string& why) {
    throw RangeError("invalid configuration (K1=" + std::to_string(k1) + ", K2=" + std::to_string(k2) +
                     ", t1=" + std::to_string(t1) + ", t2=" + std::to_string(t2) +
                     ", N=" + std::to_string(n) + "): " + why);
  };
  if (k1 < 2) fail("K1 must be at least 2");
  if (k2 < 2) fail("K2 must be at least 2");
  if (n < 1) fail("N must be at least 1");
  if (t1 < 1 || t1 >= k1) fail("t1 must lie in [1, K1)");
  if (t2 < 1 || t2 >= k2) fail("t2 must lie in [1, K2)");
  // keeps the closed-form numerators inside 64 bits
  if (k1 > kMaxAnalysisUsers || k2 > kMaxAnalysisUsers) fail("K1 and K2 must not exceed 1000");
  return SystemConfig(k1, k2, t1, t2, n);
}

SystemConfig validate_config(int k1, int k2, int t1, int t2, int n) {
  const SystemConfig cfg = validate_parameters(k1, k2, t1, t2, n);
  if (k1 + k2 > 64) {
    throw RangeError("invalid configuration (K1=" + std::to_string(k1) + ", K2=" + std::to_string(k2) +
                     ", t1=" + std::to_string(t1) + ", t2=" + std::to_string(t2) + ", N=" + std::to_string(n) +
                     "): K1 + K2 must not exceed 64");
  }
  return cfg;
}

DemandVector::DemandVector(const SystemConfig& cfg, std::vector<int> files) : files_(std::move(files)) {
  if (files_.size() != static_cast<std::size_t>(cfg.users())) {
    throw RangeError("demand vector has " + std::to_string(files_.size()) + " entries, expected " +
                     std::to_string(cfg.users()));
  }
  for (std::size_t k = 0; k < files_.size(); ++k) {
    if (files_[k] < 0 || files_[k] >= cfg.files()) {
      throw RangeError("user " + std::to_string(k) + " requests file " + std::to_string(files_[k]) +
                       " outside [0, " + std::to_string(cfg.files()) + ")");
    }
  }
}

DemandVector DemandVector::worst_case(const SystemConfig& cfg) {
  std::vector<int> d(static_cast<std::size_t>(cfg.users()));
  for (int k = 0; k < cfg.users(); ++k) d[static_cast<std::size_t>(k)] = k % cfg.files();
  return DemandVector(cfg, std::move(d));
}

DemandVector DemandVector::all_same(const SystemConfig& cfg, int file) {
  return DemandVector(cfg, std::vector<int>(static_cast<std::size_t>(cfg.users()), file));
}

std::string describe(const SystemConfig& cfg) {
  std::ostringstream os;
  os << "K1=" << cfg.k1() << " K2=" << cfg.k2() << " t1=" << cfg.t1() << " t2=" << cfg.t2()
     << " N=" << cfg.files();
  return os.str();
}

}  // namespace codedcache
