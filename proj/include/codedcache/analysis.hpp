#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codedcache/config.hpp"

namespace codedcache {

/// (K - t) / (t + 1); throws RangeError unless 1 <= t <= K.
Rational rate_mn(int users, int t);

/// Each group served by its own single-group scheme.
Rational rate_baseline_split(const SystemConfig& cfg);

/// Upper bound for the two-group scheme; branch on M1 < M2.
Rational rate_bound(const SystemConfig& cfg);

/// Exact message count over F with the actual ceiling L (what a plan achieves).
Rational rate_csm_exact(const SystemConfig& cfg);

/// Whether the ceiling in L is attained without rounding.
bool ceiling_is_tight(const SystemConfig& cfg);

/// sum_{i<K} prod_{j<=i} (1 - M_j / N) over cache sizes sorted ascending.
/// Throws RangeError if any M_j is outside [0, N] or the list is unsorted.
double rate_rd(std::span<const double> cache_sizes, double files);

/// Two-group closed form of rate_rd with normalized sizes lambda1, lambda2.
double rate_rd_two_group(int k1, int k2, double lambda1, double lambda2);

/// Continuous-lambda rate of the two-group scheme (t_i = K_i lambda_i). For
/// lambda1 <= lambda2:
///   (1/l1 - 1)(1/t2 + 1/(t1+1)) + (1/l2 - 1)(1 - 1/(t1+1)),
/// and the group-swapped expression otherwise.
double rate_csm_lambda(int k1, int k2, double lambda1, double lambda2);

/// rate_csm_lambda / rate_rd_two_group; throws DomainError unless
/// K1 lambda1 > 1 and K2 lambda2 > 1.
double ratio_csm_over_rd(int k1, int k2, double lambda1, double lambda2);

/// K1(1-l1) + K2(1-l2) + 1/l1 + 1/l2 < 2 + K1/l1 (l1 <= l2) or 2 + K2/l2.
bool region_condition(int k1, int k2, double lambda1, double lambda2);

/// Auxiliary x of the smaller-rate argument in the l1 <= l2 branch:
/// -1/(K1 l1 + 1) + 1/(K2 l2) + (1 - l1)^K1. The region argument needs x < 0.
double region_auxiliary_x(int k1, int k2, double lambda1, double lambda2);

enum class RegionDomain { All, Lambda1AboveLambda2 };

struct GridSpec {
  int points = 100;  // per axis, lambda = i / (points + 1) for i = 1..points
  RegionDomain domain = RegionDomain::All;
};

struct RegionRow {
  double lambda1 = 0;
  double lambda2 = 0;
  bool in_region = false;
  double rate_csm = 0;
  double rate_rd = 0;
  std::optional<double> ratio;  // absent when K_i lambda_i <= 1
};

/// Row-major over lambda1 then lambda2, both ascending. Throws RangeError when
/// points < 2.
std::vector<RegionRow> region_scan(int k1, int k2, const GridSpec& grid);
void write_region_csv(std::ostream& os, const std::vector<RegionRow>& rows);

struct RateReport {
  Rational rate_mn_fixed;
  Rational rate_mn_mobile;
  Rational rate_baseline;
  Rational rate_bound;
  Rational rate_exact;
  std::optional<Rational> achieved;
  double rate_rd = 0;
  double rate_csm_lambda = 0;
  std::optional<double> ratio;
  bool region_flag = false;
};

RateReport make_rate_report(const SystemConfig& cfg, std::optional<Rational> achieved = std::nullopt);

}  // namespace codedcache
