// Named process variants assembled from the engine, plus the parameter
// condition report for the two-type survival inequalities.

#ifndef FIRECP_PROCESS_HPP
#define FIRECP_PROCESS_HPP

#include <cstdint>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "firecp/engine.hpp"
#include "firecp/errors.hpp"
#include "firecp/lattice.hpp"

namespace firecp {

enum class Variant { TwoTypeFire, ZetaFlip, Contact, Richardson };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::TwoTypeFire: return "two_type_fire";
    case Variant::ZetaFlip: return "zeta_flip";
    case Variant::Contact: return "contact";
    default: return "richardson";
  }
}

struct InitSpec {
  enum class Mode { Empty, Full, SingleCenter, CenterBox, Mix, Patches, Sites };
  Mode mode = Mode::Empty;
  SiteState fill_type = SiteState::One;  // Full / SingleCenter / CenterBox
  int half_width = 0;                    // CenterBox: fills [-hw, hw]^2
  double density1 = 0.0;                 // Mix: independent per-site draw
  double density2 = 0.0;
  // Patches: type-1 colonies inside cleared squares on random centers in a
  // sea of 2's, the profile a fire-driven quasi-equilibrium relaxes from.
  // Each patch clears a square of half-width patch_half_width and plants
  // 1's at density1 on the inner square of half-width patch_core.
  int patch_count = 0;
  int patch_half_width = 0;
  int patch_core = 0;
  std::vector<std::pair<int, int>> sites1;  // Sites mode, absolute coords
  std::vector<std::pair<int, int>> sites2;
};

// Contact and Richardson are single-type and use the type-1 slots
// (beta1, delta1, kernel1); Richardson additionally has delta1 = 0.
struct ProcessSpec {
  Variant variant = Variant::Contact;
  int width = 0;
  int height = 0;
  Boundary boundary = Boundary::Torus;
  ProcessParams params;
  InitSpec init;

  void validate() const {
    params.validate();
    if (width < 1 || height < 1) throw ConfigError("lattice dimensions must be >= 1");
    switch (variant) {
      case Variant::Richardson:
        if (params.delta1 != 0.0)
          throw ConfigError("richardson requires death rate 0");
        [[fallthrough]];
      case Variant::Contact:
        if (params.beta2 != 0.0 || params.delta2 != 0.0 || params.delta0 != 0.0)
          throw ConfigError("single-type variant must zero the type-2 and fire rates");
        break;
      case Variant::ZetaFlip:
        if (params.delta0 != 0.0)
          throw ConfigError("flip variant requires delta0 = 0");
        break;
      case Variant::TwoTypeFire:
        break;
    }
    if (init.mode == InitSpec::Mode::Mix &&
        (init.density1 < 0 || init.density2 < 0 ||
         init.density1 + init.density2 > 1.0))
      throw ConfigError("mix densities must be >= 0 and sum to <= 1");
  }
};

struct RunnableProcess {
  ProcessSpec spec;

  Lattice make_lattice(Rng& rng) const {
    const bool track_vacant = spec.variant == Variant::ZetaFlip;
    Lattice lat(spec.width, spec.height, spec.boundary, track_vacant);
    const auto& init = spec.init;
    const std::int32_t cx = spec.width / 2, cy = spec.height / 2;
    switch (init.mode) {
      case InitSpec::Mode::Empty:
        break;
      case InitSpec::Mode::Full:
        lat.fill(init.fill_type);
        break;
      case InitSpec::Mode::SingleCenter:
        lat.set_state(lat.index(cx, cy), init.fill_type);
        break;
      case InitSpec::Mode::CenterBox:
        for (int dy = -init.half_width; dy <= init.half_width; ++dy)
          for (int dx = -init.half_width; dx <= init.half_width; ++dx)
            lat.set_state(lat.index(cx + dx, cy + dy), init.fill_type);
        break;
      case InitSpec::Mode::Mix:
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(lat.size()); ++i) {
          const double u = rng.uniform();
          if (u < init.density1)
            lat.set_state(i, SiteState::One);
          else if (u < init.density1 + init.density2)
            lat.set_state(i, SiteState::Two);
        }
        break;
      case InitSpec::Mode::Patches: {
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(lat.size()); ++i)
          if (rng.uniform() < init.density2) lat.set_state(i, SiteState::Two);
        const int core = init.patch_core > 0 ? init.patch_core
                                             : init.patch_half_width / 2;
        for (int p = 0; p < init.patch_count; ++p) {
          const std::int32_t c = lat.uniform_site(rng);
          for (int dy = -init.patch_half_width; dy <= init.patch_half_width; ++dy)
            for (int dx = -init.patch_half_width; dx <= init.patch_half_width; ++dx) {
              const std::int32_t s = lat.apply_offset(c, dx, dy);
              if (s < 0) continue;
              const bool in_core = std::abs(dx) <= core && std::abs(dy) <= core;
              lat.set_state(s, in_core && rng.uniform() < init.density1
                                   ? SiteState::One
                                   : SiteState::Vacant);
            }
        }
        break;
      }
      case InitSpec::Mode::Sites:
        for (const auto& [x, y] : init.sites1)
          lat.set_state(lat.index(x, y), SiteState::One);
        for (const auto& [x, y] : init.sites2)
          lat.set_state(lat.index(x, y), SiteState::Two);
        break;
    }
    return lat;
  }

  template <class OnEvent = detail::NoOpOnEvent>
  Trajectory run_on(Lattice& lat, const StopSpec& stop, const ObserverSpec& obs,
                    Rng& rng, std::uint64_t seed,
                    OnEvent&& on_event = OnEvent{}) const {
    if (spec.variant == Variant::ZetaFlip) {
      ZetaFlipDynamics dyn(spec.params);
      return run_until(lat, dyn, stop, obs, rng, seed,
                       std::forward<OnEvent>(on_event));
    }
    TwoTypeDynamics dyn(spec.params);
    return run_until(lat, dyn, stop, obs, rng, seed,
                     std::forward<OnEvent>(on_event));
  }

  template <class OnEvent = detail::NoOpOnEvent>
  Trajectory run(const StopSpec& stop, const ObserverSpec& obs,
                 std::uint64_t seed, OnEvent&& on_event = OnEvent{}) const {
    Rng rng(seed);
    Lattice lat = make_lattice(rng);
    return run_on(lat, stop, obs, rng, seed, std::forward<OnEvent>(on_event));
  }
};

inline RunnableProcess make_process(const ProcessSpec& spec) {
  spec.validate();
  return RunnableProcess{spec};
}

// Both inequalities the two-type parameter point must satisfy, evaluated
// against a supplied critical-value estimate, plus the effective birth
// rate gamma = beta2*delta1/(beta1+delta1) of the fast-flip limit.
struct ConditionReport {
  double lambda_c = 0.0;
  double lhs1 = 0.0, rhs1 = 0.0;  // beta2/(1+beta1/delta1) > delta2*lambda_c
  double lhs2 = 0.0, rhs2 = 0.0;  // beta1/delta1 > lambda_c
  bool pass1 = false, pass2 = false, pass = false;
  double gamma = 0.0;
};

inline ConditionReport check_condition_1(double beta1, double beta2,
                                         double delta1, double delta2,
                                         double lambda_c) {
  if (delta1 <= 0.0) throw ConfigError("condition check requires delta1 > 0");
  if (lambda_c <= 0.0) throw ConfigError("condition check requires lambda_c > 0");
  ConditionReport r;
  r.lambda_c = lambda_c;
  r.lhs1 = beta2 / (1.0 + beta1 / delta1);
  r.rhs1 = delta2 * lambda_c;
  r.lhs2 = beta1 / delta1;
  r.rhs2 = lambda_c;
  r.pass1 = r.lhs1 > r.rhs1;
  r.pass2 = r.lhs2 > r.rhs2;
  r.pass = r.pass1 && r.pass2;
  r.gamma = beta2 * delta1 / (beta1 + delta1);
  return r;
}

}  // namespace firecp

#endif  // FIRECP_PROCESS_HPP
