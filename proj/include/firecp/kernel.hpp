// Dispersal kernels as radial shell tables over L-inf distance. The
// short-range kernel puts mass c1 on each of the 8 nearest sites; the
// truncated power-law kernel adds mass c2*r^(-rho) on each site of shells
// 2..M. Sampling is two-stage: shell by CDF, then uniform over the 8r
// perimeter sites of that shell.

#ifndef FIRECP_KERNEL_HPP
#define FIRECP_KERNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "firecp/errors.hpp"
#include "firecp/rng.hpp"

namespace firecp {

inline constexpr double kKernelMassTolerance = 1e-12;

// Number of sites at L-inf distance exactly r (r >= 1).
inline std::int64_t shell_site_count(int r) { return 8LL * r; }

struct Offset {
  int dx = 0;
  int dy = 0;
};

// Maps j in [0, 8r) to the j-th site of the L-inf ring of radius r, walking
// the perimeter in four edge segments of length 2r.
inline Offset shell_offset(int r, std::int64_t j) {
  const std::int64_t seg = j / (2 * r), t = j % (2 * r);
  switch (seg) {
    case 0: return {-r + static_cast<int>(t), -r};
    case 1: return {r, -r + static_cast<int>(t)};
    case 2: return {r - static_cast<int>(t), r};
    default: return {-r, r - static_cast<int>(t)};
  }
}

class KernelTable {
 public:
  // p2(x,y) = 1/8 on the Moore neighborhood.
  static KernelTable moore() { return KernelTable(0.125, 0.0, 0.0, 1); }

  // p1(x,y) = c1 on shell 1 plus c2*r^(-rho) on shells 2..M; total mass must
  // come out to 1 within tolerance.
  static KernelTable power(double c1, double c2, double rho, int cutoff) {
    return KernelTable(c1, c2, rho, cutoff);
  }

  // Derive (c1, c2) from the short/long mass split: c1 = w_short/8 and
  // c2 = w_long / Z with Z = sum_{r=2..M} 8 r^(1-rho).
  static std::pair<double, double> normalize_weights(double w_short, double w_long,
                                                     double rho, int cutoff) {
    if (std::abs(w_short + w_long - 1.0) > 1e-9)
      throw ConfigError("kernel weights must sum to 1");
    if (w_short <= 0.0 || w_long <= 0.0)
      throw ConfigError("kernel weights must both be positive");
    if (cutoff < 2) throw ConfigError("weight split needs cutoff M >= 2");
    double z = 0.0;
    for (int r = 2; r <= cutoff; ++r)
      z += static_cast<double>(shell_site_count(r)) * std::pow(r, -rho);
    return {w_short / 8.0, w_long / z};
  }

  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double rho() const { return rho_; }
  int cutoff() const { return cutoff_; }

  double shell_mass(int r) const {
    return (r >= 1 && r <= cutoff_) ? mass_[r] : 0.0;
  }

  // Kernel mass at a single offset; 0 at the origin and beyond the cutoff.
  double mass_at(int dx, int dy) const {
    const int r = std::max(std::abs(dx), std::abs(dy));
    if (r < 1 || r > cutoff_) return 0.0;
    if (r == 1) return c1_;
    return c2_ * std::pow(r, -rho_);
  }

  Offset sample_offset(Rng& rng) const {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf_.begin() + 1, cdf_.end(), u);
    const int r = static_cast<int>(it - cdf_.begin());
    return shell_offset(r, static_cast<std::int64_t>(
                               rng.below(static_cast<std::uint32_t>(8 * r))));
  }

  void dump_shells_csv(std::ostream& os) const {
    os << "r,sites,mass\n";
    for (int r = 1; r <= cutoff_; ++r)
      os << r << ',' << shell_site_count(r) << ',' << mass_[r] << '\n';
  }

 private:
  KernelTable(double c1, double c2, double rho, int cutoff)
      : c1_(c1), c2_(c2), rho_(rho), cutoff_(cutoff) {
    if (cutoff_ < 1) throw ConfigError("kernel cutoff M must be >= 1");
    if (c1_ <= 0.0) throw ConfigError("kernel requires c1 > 0");
    if (cutoff_ > 1 && c2_ <= 0.0) throw ConfigError("kernel requires c2 > 0 when M > 1");
    if (rho_ >= 3.0) throw ConfigError("kernel exponent rho must be < 3");
    mass_.assign(cutoff_ + 1, 0.0);
    cdf_.assign(cutoff_ + 1, 0.0);
    mass_[1] = 8.0 * c1_;
    for (int r = 2; r <= cutoff_; ++r)
      mass_[r] = static_cast<double>(shell_site_count(r)) * c2_ * std::pow(r, -rho_);
    double acc = 0.0;
    for (int r = 1; r <= cutoff_; ++r) {
      acc += mass_[r];
      cdf_[r] = acc;
    }
    if (std::abs(acc - 1.0) > kKernelMassTolerance)
      throw NormalizationError(
          "kernel mass is " + std::to_string(acc) + ", off by " +
              std::to_string(acc - 1.0),
          acc);
    cdf_[cutoff_] = 1.0;
  }

  double c1_;
  double c2_;
  double rho_;
  int cutoff_;
  std::vector<double> mass_;  // mass_[r] = total mass of shell r
  std::vector<double> cdf_;
};

}  // namespace firecp

#endif  // FIRECP_KERNEL_HPP
