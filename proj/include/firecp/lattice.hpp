// 2D site grid with per-state registries giving O(1) insert/delete and
// O(1) uniform sampling of occupied sites (swap-remove), plus block
// clearing. Boundary semantics: Torus wraps, TruncatedBox discards any
// site outside the grid.

#ifndef FIRECP_LATTICE_HPP
#define FIRECP_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "firecp/errors.hpp"
#include "firecp/rng.hpp"

namespace firecp {

enum class SiteState : std::uint8_t { Vacant = 0, One = 1, Two = 2 };

enum class Boundary { Torus, TruncatedBox };

inline const char* to_string(Boundary b) {
  return b == Boundary::Torus ? "torus" : "box";
}

// Block side implied by fire width F: radius floor(F/2), so side 2*floor(F/2)+1.
inline int effective_block_side(int fire_width) {
  return 2 * (fire_width / 2) + 1;
}

class Lattice {
 public:
  // track_vacant also registers vacant sites, enabling uniform sampling
  // over vacancies (needed only by the flip-process variant).
  Lattice(int width, int height, Boundary boundary, bool track_vacant = false)
      : width_(width),
        height_(height),
        boundary_(boundary),
        track_vacant_(track_vacant) {
    if (width < 1 || height < 1)
      throw ConfigError("lattice dimensions must be >= 1");
    const std::size_t n = static_cast<std::size_t>(width) * height;
    grid_.assign(n, SiteState::Vacant);
    pos_.assign(n, -1);
    if (track_vacant_) {
      registry_[0].resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        registry_[0][i] = static_cast<std::int32_t>(i);
        pos_[i] = static_cast<std::int32_t>(i);
      }
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::int64_t size() const { return static_cast<std::int64_t>(width_) * height_; }
  Boundary boundary() const { return boundary_; }
  bool tracks_vacant() const { return track_vacant_; }

  std::int32_t index(int x, int y) const { return y * width_ + x; }
  int x_of(std::int32_t i) const { return i % width_; }
  int y_of(std::int32_t i) const { return i / width_; }

  SiteState state(std::int32_t i) const { return grid_[i]; }
  SiteState state(int x, int y) const { return grid_[index(x, y)]; }

  std::int64_t count(SiteState s) const {
    if (s == SiteState::Vacant && !track_vacant_)
      return size() - count(SiteState::One) - count(SiteState::Two);
    return static_cast<std::int64_t>(registry_[static_cast<int>(s)].size());
  }

  void set_state(std::int32_t i, SiteState s) {
    const SiteState old = grid_[i];
    if (old == s) return;
    registry_remove(i, old);
    grid_[i] = s;
    registry_add(i, s);
  }

  void fill(SiteState s) {
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(grid_.size()); ++i)
      set_state(i, s);
  }

  // Uniform draw from the sites currently in state s.
  std::int32_t sample_occupied(SiteState s, Rng& rng) const {
    const auto& reg = registry_[static_cast<int>(s)];
    if (reg.empty())
      throw std::logic_error("sample_occupied: no site holds the requested state");
    return reg[rng.below(static_cast<std::uint32_t>(reg.size()))];
  }

  std::int32_t uniform_site(Rng& rng) const {
    return static_cast<std::int32_t>(rng.below(static_cast<std::uint32_t>(size())));
  }

  // Kill every site within L-inf distance floor(F/2) of center. Returns the
  // number of sites vacated. On a torus so small that the block wraps onto
  // itself, each row/column is cleared once; on a truncated box the block is
  // clipped at the edges.
  int clear_block(std::int32_t center, int fire_width) {
    const int r = fire_width / 2;
    const int cx = x_of(center), cy = y_of(center);
    int removed = 0;
    if (boundary_ == Boundary::Torus) {
      const int span_x = std::min(2 * r + 1, width_);
      const int span_y = std::min(2 * r + 1, height_);
      for (int dy = 0; dy < span_y; ++dy) {
        const int y = wrap(cy - r + dy, height_);
        for (int dx = 0; dx < span_x; ++dx) {
          const int x = wrap(cx - r + dx, width_);
          removed += vacate(index(x, y));
        }
      }
    } else {
      const int y0 = std::max(0, cy - r), y1 = std::min(height_ - 1, cy + r);
      const int x0 = std::max(0, cx - r), x1 = std::min(width_ - 1, cx + r);
      for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
          removed += vacate(index(x, y));
    }
    return removed;
  }

  // Site reached from i by (dx, dy): wrapped on a torus, -1 when the target
  // falls outside a truncated box.
  std::int32_t apply_offset(std::int32_t i, int dx, int dy) const {
    int x = x_of(i) + dx;
    int y = y_of(i) + dy;
    if (boundary_ == Boundary::Torus) {
      x = wrap(x, width_);
      y = wrap(y, height_);
    } else if (x < 0 || x >= width_ || y < 0 || y >= height_) {
      return -1;
    }
    return index(x, y);
  }

  // One character per site, one row per line: '.', '1', '2'.
  std::string to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(size()) + height_);
    for (int y = 0; y < height_; ++y) {
      for (int x = 0; x < width_; ++x) {
        switch (state(x, y)) {
          case SiteState::Vacant: out.push_back('.'); break;
          case SiteState::One: out.push_back('1'); break;
          case SiteState::Two: out.push_back('2'); break;
        }
      }
      out.push_back('\n');
    }
    return out;
  }

 private:
  static int wrap(int v, int n) {
    v %= n;
    return v < 0 ? v + n : v;
  }

  int vacate(std::int32_t i) {
    if (grid_[i] == SiteState::Vacant) return 0;
    set_state(i, SiteState::Vacant);
    return 1;
  }

  void registry_remove(std::int32_t i, SiteState s) {
    if (s == SiteState::Vacant && !track_vacant_) return;
    auto& reg = registry_[static_cast<int>(s)];
    const std::int32_t p = pos_[i];
    const std::int32_t last = reg.back();
    reg[p] = last;
    pos_[last] = p;
    reg.pop_back();
    pos_[i] = -1;
  }

  void registry_add(std::int32_t i, SiteState s) {
    if (s == SiteState::Vacant && !track_vacant_) return;
    auto& reg = registry_[static_cast<int>(s)];
    pos_[i] = static_cast<std::int32_t>(reg.size());
    reg.push_back(i);
  }

  int width_;
  int height_;
  Boundary boundary_;
  bool track_vacant_;
  std::vector<SiteState> grid_;
  std::vector<std::int32_t> pos_;
  std::vector<std::int32_t> registry_[3];
};

}  // namespace firecp

#endif  // FIRECP_LATTICE_HPP
