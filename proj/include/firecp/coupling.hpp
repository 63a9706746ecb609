// Shared-randomness coupling of single-type processes. Instead of
// aggregate category dispatch, this realizes the per-site clock picture
// directly: one Poisson stream of total rate N*(beta+delta) emits either a
// birth arrow (site, kernel offset) or a death mark (site), and every
// coupled lattice consumes the same stream. Nested initial states stay
// nested under this construction.
//
// An optional truncation window per lattice discards arrows whose target
// falls outside the window, which is how the box-truncated process rides
// on the same site space as a free one.

#ifndef FIRECP_COUPLING_HPP
#define FIRECP_COUPLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "firecp/engine.hpp"
#include "firecp/errors.hpp"
#include "firecp/kernel.hpp"
#include "firecp/lattice.hpp"
#include "firecp/rng.hpp"

namespace firecp {

struct Window {
  int x0, y0, x1, y1;  // inclusive corners
  bool contains(int x, int y) const {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }
};

struct CoupledOptions {
  double beta = 0.0;
  double delta = 0.0;
  const KernelTable* kernel = nullptr;
  SiteState type = SiteState::One;
  double t_max = 0.0;
  std::vector<double> sample_times;  // sorted
  std::optional<Window> window_a;
  std::optional<Window> window_b;
  bool check_containment = false;  // verify A(x) occupied => B(x) occupied
};

struct CoupledResult {
  std::uint64_t events = 0;
  std::uint64_t containment_violations = 0;
  double final_time = 0.0;
};

namespace detail {
struct NoOpOnCoupledSample {
  void operator()(double, const Lattice&, const Lattice&) const {}
};
struct NoOpOnCoupledBirth {
  void operator()(int, std::int32_t, double) const {}
};
}  // namespace detail

// on_sample(t, a, b) fires at each configured sample time; on_birth(which,
// target, t) after every successful birth, which = 0 for a and 1 for b.
template <class OnSample = detail::NoOpOnCoupledSample,
          class OnBirth = detail::NoOpOnCoupledBirth>
CoupledResult coupled_run(Lattice& a, Lattice& b, const CoupledOptions& opt,
                          Rng& rng, OnSample&& on_sample = OnSample{},
                          OnBirth&& on_birth = OnBirth{}) {
  if (a.width() != b.width() || a.height() != b.height())
    throw ConfigError("coupled lattices must have identical dimensions");
  if (opt.kernel == nullptr) throw ConfigError("coupled run needs a kernel");
  if (opt.beta < 0 || opt.delta < 0) throw ConfigError("rates must be >= 0");

  const double site_rate = opt.beta + opt.delta;
  const double lambda = site_rate * static_cast<double>(a.size());
  const SiteState occ = opt.type;

  CoupledResult res;
  double clock = 0.0;
  std::size_t next_sample = 0;
  auto emit_until = [&](double horizon) {
    while (next_sample < opt.sample_times.size() &&
           opt.sample_times[next_sample] <= horizon) {
      on_sample(opt.sample_times[next_sample], a, b);
      ++next_sample;
    }
  };

  auto apply_arrow = [&](Lattice& lat, const std::optional<Window>& win,
                         std::int32_t src, const Offset& off) -> std::int32_t {
    if (lat.state(src) != occ) return -1;
    const std::int32_t tgt = lat.apply_offset(src, off.dx, off.dy);
    if (tgt < 0) return -1;
    if (win && !win->contains(lat.x_of(tgt), lat.y_of(tgt))) return -1;
    if (lat.state(tgt) != SiteState::Vacant) return -1;
    lat.set_state(tgt, occ);
    return tgt;
  };

  while (lambda > 0.0) {
    const double t_next = clock + rng.exponential(lambda);
    if (t_next > opt.t_max) break;
    emit_until(t_next);
    clock = t_next;
    ++res.events;

    const std::int32_t site = a.uniform_site(rng);
    std::int32_t touched = site;
    if (rng.uniform() * site_rate < opt.beta) {
      const Offset off = opt.kernel->sample_offset(rng);
      const std::int32_t ta = apply_arrow(a, opt.window_a, site, off);
      const std::int32_t tb = apply_arrow(b, opt.window_b, site, off);
      if (ta >= 0) on_birth(0, ta, clock);
      if (tb >= 0) on_birth(1, tb, clock);
      touched = tb >= 0 ? tb : ta;
      if (touched < 0) touched = site;
      // The two lattices may map the offset differently only if their
      // boundaries differ; check both touched sites.
      if (opt.check_containment && ta >= 0 && ta != tb) {
        if (b.state(ta) != occ && a.state(ta) == occ) ++res.containment_violations;
      }
    } else {
      if (a.state(site) == occ) a.set_state(site, SiteState::Vacant);
      if (b.state(site) == occ) b.set_state(site, SiteState::Vacant);
    }
    if (opt.check_containment) {
      if (a.state(touched) == occ && b.state(touched) != occ)
        ++res.containment_violations;
      if (a.state(site) == occ && b.state(site) != occ)
        ++res.containment_violations;
    }
  }
  emit_until(opt.t_max);
  res.final_time = opt.t_max;
  return res;
}

}  // namespace firecp

#endif  // FIRECP_COUPLING_HPP
