#include "codedcache/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "codedcache/delivery_graph.hpp"
#include "codedcache/errors.hpp"

namespace codedcache {

Rational rate_mn(int users, int t) {
  if (users < 1 || t < 1 || t > users) {
    throw RangeError("single-group rate needs 1 <= t <= K, got K=" + std::to_string(users) + " t=" + std::to_string(t));
  }
  return Rational(users - t, t + 1);
}

Rational rate_baseline_split(const SystemConfig& cfg) {
  return rate_mn(cfg.k1(), cfg.t1()) + rate_mn(cfg.k2(), cfg.t2());
}

Rational rate_bound(const SystemConfig& cfg) {
  const std::int64_t k1 = cfg.k1(), k2 = cfg.k2(), t1 = cfg.t1(), t2 = cfg.t2();
  if (cfg.m1() < cfg.m2()) {
    return Rational((k1 - t1) * (t1 * t2 + t1 + 1), (t1 + 1) * t1 * t2) + Rational(k2 - t2, (t1 + 1) * t2);
  }
  return Rational(k1 - t1, (t2 + 1) * t1) + Rational((k2 - t2) * (t1 * t2 + t2 + 1), (t2 + 1) * t1 * t2);
}

Rational rate_csm_exact(const SystemConfig& cfg) {
  const std::int64_t k1 = cfg.k1(), k2 = cfg.k2(), t1 = cfg.t1(), t2 = cfg.t2();
  const std::int64_t L = layer_limit(cfg);
  if (saturated_side(cfg) == Side::SaturateX) {
    return Rational(k2 - t2, t2 + 1) * Rational(L * (t2 + 1) + (t1 - L) * t2, t1 * t2);
  }
  return Rational(k1 - t1, t1 + 1) * Rational(L * (t1 + 1) + (t2 - L) * t1, t1 * t2);
}

bool ceiling_is_tight(const SystemConfig& cfg) {
  const int k1 = cfg.k1(), k2 = cfg.k2(), t1 = cfg.t1(), t2 = cfg.t2();
  if (saturated_side(cfg) == Side::SaturateX) return (t2 * (k1 - t1)) % (k2 - t2) == 0;
  return (t1 * (k2 - t2)) % (k1 - t1) == 0;
}

double rate_rd(std::span<const double> cache_sizes, double files) {
  if (!(files > 0)) throw RangeError("file count must be positive");
  double sum = 0;
  double prod = 1;
  double prev = 0;
  for (double m : cache_sizes) {
    if (!(m >= 0 && m <= files)) throw RangeError("cache size outside [0, N]");
    if (m < prev) throw RangeError("cache sizes must be sorted ascending");
    prev = m;
    prod *= 1 - m / files;
    sum += prod;
  }
  return sum;
}

double rate_rd_two_group(int k1, int k2, double lambda1, double lambda2) {
  double a = lambda1, b = lambda2;
  int ka = k1, kb = k2;
  if (lambda1 > lambda2) {
    std::swap(a, b);
    std::swap(ka, kb);
  }
  const double pa = std::pow(1 - a, ka);
  return (1 / a - 1) * (1 - pa) + pa * (1 / b - 1) * (1 - std::pow(1 - b, kb));
}

double rate_csm_lambda(int k1, int k2, double lambda1, double lambda2) {
  const double t1 = k1 * lambda1;
  const double t2 = k2 * lambda2;
  if (lambda1 <= lambda2) {
    return (1 / lambda1 - 1) * (1 / t2 + 1 / (t1 + 1)) + (1 / lambda2 - 1) * (1 - 1 / (t1 + 1));
  }
  return (1 / lambda2 - 1) * (1 / t1 + 1 / (t2 + 1)) + (1 / lambda1 - 1) * (1 - 1 / (t2 + 1));
}

double ratio_csm_over_rd(int k1, int k2, double lambda1, double lambda2) {
  if (!(k1 * lambda1 > 1 && k2 * lambda2 > 1)) {
    throw DomainError("ratio needs K1*lambda1 > 1 and K2*lambda2 > 1");
  }
  return rate_csm_lambda(k1, k2, lambda1, lambda2) / rate_rd_two_group(k1, k2, lambda1, lambda2);
}

bool region_condition(int k1, int k2, double lambda1, double lambda2) {
  const double lhs = k1 * (1 - lambda1) + k2 * (1 - lambda2) + 1 / lambda1 + 1 / lambda2;
  return lhs < (lambda1 <= lambda2 ? 2 + k1 / lambda1 : 2 + k2 / lambda2);
}

double region_auxiliary_x(int k1, int k2, double lambda1, double lambda2) {
  return -1 / (k1 * lambda1 + 1) + 1 / (k2 * lambda2) + std::pow(1 - lambda1, k1);
}

std::vector<RegionRow> region_scan(int k1, int k2, const GridSpec& grid) {
  if (grid.points < 2) throw RangeError("region grid needs at least 2 points per axis");
  if (k1 < 1 || k2 < 1) throw RangeError("group sizes must be positive");
  std::vector<RegionRow> rows;
  const double step = 1.0 / (grid.points + 1);
  for (int i = 1; i <= grid.points; ++i) {
    for (int j = 1; j <= grid.points; ++j) {
      if (grid.domain == RegionDomain::Lambda1AboveLambda2 && i <= j) continue;
      RegionRow row;
      row.lambda1 = i * step;
      row.lambda2 = j * step;
      row.in_region = region_condition(k1, k2, row.lambda1, row.lambda2);
      row.rate_csm = rate_csm_lambda(k1, k2, row.lambda1, row.lambda2);
      row.rate_rd = rate_rd_two_group(k1, k2, row.lambda1, row.lambda2);
      if (k1 * row.lambda1 > 1 && k2 * row.lambda2 > 1) row.ratio = row.rate_csm / row.rate_rd;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_region_csv(std::ostream& os, const std::vector<RegionRow>& rows) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << "lambda1,lambda2,in_region,rate_csm,rate_rd,ratio\n" << std::setprecision(12);
  for (const RegionRow& r : rows) {
    os << r.lambda1 << ',' << r.lambda2 << ',' << (r.in_region ? 1 : 0) << ',' << r.rate_csm << ',' << r.rate_rd
       << ',';
    if (r.ratio) os << *r.ratio;
    os << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

RateReport make_rate_report(const SystemConfig& cfg, std::optional<Rational> achieved) {
  RateReport r;
  r.rate_mn_fixed = rate_mn(cfg.k1(), cfg.t1());
  r.rate_mn_mobile = rate_mn(cfg.k2(), cfg.t2());
  r.rate_baseline = r.rate_mn_fixed + r.rate_mn_mobile;
  r.rate_bound = rate_bound(cfg);
  r.rate_exact = rate_csm_exact(cfg);
  r.achieved = achieved;
  const double l1 = to_double(cfg.lambda1());
  const double l2 = to_double(cfg.lambda2());
  r.rate_rd = rate_rd_two_group(cfg.k1(), cfg.k2(), l1, l2);
  r.rate_csm_lambda = rate_csm_lambda(cfg.k1(), cfg.k2(), l1, l2);
  if (cfg.t1() > 1 && cfg.t2() > 1) r.ratio = r.rate_csm_lambda / r.rate_rd;
  r.region_flag = region_condition(cfg.k1(), cfg.k2(), l1, l2);
  return r;
}

}  // namespace codedcache
