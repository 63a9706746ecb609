#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "firecp/lattice.hpp"
#include "firecp/rng.hpp"

using namespace firecp;

TEST_CASE("construction and counts", "[lattice]") {
  Lattice empty(3, 3, Boundary::Torus);
  REQUIRE(empty.count(SiteState::One) == 0);
  REQUIRE(empty.count(SiteState::Two) == 0);
  REQUIRE(empty.count(SiteState::Vacant) == 9);

  Lattice full1(3, 3, Boundary::Torus);
  full1.fill(SiteState::One);
  REQUIRE(full1.count(SiteState::One) == 9);
  REQUIRE(full1.count(SiteState::Two) == 0);

  Lattice single(5, 5, Boundary::TruncatedBox);
  single.set_state(single.index(2, 2), SiteState::One);
  REQUIRE(single.count(SiteState::One) == 1);

  REQUIRE_THROWS_AS(Lattice(0, 3, Boundary::Torus), ConfigError);
  REQUIRE_THROWS_AS(Lattice(3, 0, Boundary::Torus), ConfigError);
}

TEST_CASE("sample_occupied singleton and empty registry", "[lattice]") {
  Lattice lat(4, 4, Boundary::Torus);
  Rng rng(1);
  lat.set_state(lat.index(1, 2), SiteState::Two);
  REQUIRE(lat.sample_occupied(SiteState::Two, rng) == lat.index(1, 2));
  REQUIRE_THROWS_AS(lat.sample_occupied(SiteState::One, rng), std::logic_error);
}

TEST_CASE("sample_occupied is uniform over the registry", "[lattice]") {
  Lattice lat(10, 10, Boundary::Torus);
  const std::array<std::int32_t, 4> sites = {lat.index(0, 0), lat.index(3, 7),
                                             lat.index(9, 9), lat.index(5, 2)};
  for (auto s : sites) lat.set_state(s, SiteState::One);
  Rng rng(42);
  const int draws = 100000;
  std::array<int, 4> counts{};
  for (int i = 0; i < draws; ++i) {
    const auto s = lat.sample_occupied(SiteState::One, rng);
    for (std::size_t j = 0; j < sites.size(); ++j)
      if (sites[j] == s) ++counts[j];
  }
  const double expected = draws / 4.0;
  const double sigma = std::sqrt(draws * 0.25 * 0.75);
  for (auto c : counts) REQUIRE(std::abs(c - expected) < 5.0 * sigma);
}

TEST_CASE("clear_block sizes on a full torus", "[lattice]") {
  REQUIRE(effective_block_side(2) == 3);
  REQUIRE(effective_block_side(4) == 5);

  Lattice lat(9, 9, Boundary::Torus);
  lat.fill(SiteState::One);
  REQUIRE(lat.clear_block(lat.index(4, 4), 2) == 9);

  Lattice lat2(9, 9, Boundary::Torus);
  lat2.fill(SiteState::Two);
  REQUIRE(lat2.clear_block(lat2.index(4, 4), 4) == 25);
}

TEST_CASE("clear_block clips at a truncated box corner", "[lattice]") {
  Lattice lat(9, 9, Boundary::TruncatedBox);
  lat.fill(SiteState::One);
  // Oracle: enumerate sites with L-inf distance <= 2 from (0,0) inside the grid.
  int expected = 0;
  for (int y = 0; y < 9; ++y)
    for (int x = 0; x < 9; ++x)
      if (std::max(std::abs(x - 0), std::abs(y - 0)) <= 2) ++expected;
  REQUIRE(expected == 9);
  REQUIRE(lat.clear_block(lat.index(0, 0), 4) == 9);
  REQUIRE(lat.count(SiteState::One) == 81 - 9);
}

TEST_CASE("clear_block wraps on the torus and is idempotent", "[lattice]") {
  Lattice lat(9, 9, Boundary::Torus);
  lat.fill(SiteState::One);
  REQUIRE(lat.clear_block(lat.index(0, 0), 4) == 25);
  // Same center again: nothing left to remove.
  REQUIRE(lat.clear_block(lat.index(0, 0), 4) == 0);
  REQUIRE(lat.count(SiteState::One) == 81 - 25);
  // Wrapped cells really are vacant.
  REQUIRE(lat.state(7, 7) == SiteState::Vacant);
  REQUIRE(lat.state(2, 2) == SiteState::Vacant);
  REQUIRE(lat.state(3, 3) == SiteState::One);
}

TEST_CASE("clear_block on a torus smaller than the block clears everything once",
          "[lattice]") {
  Lattice lat(3, 3, Boundary::Torus);
  lat.fill(SiteState::Two);
  REQUIRE(lat.clear_block(lat.index(1, 1), 10) == 9);
}

TEST_CASE("registries stay consistent under a random replay", "[lattice]") {
  Lattice lat(8, 8, Boundary::Torus, true);
  Rng rng(2024);
  for (int step = 0; step < 5000; ++step) {
    const auto site = lat.uniform_site(rng);
    const auto s = static_cast<SiteState>(rng.below(3));
    if (rng.below(20) == 0) {
      lat.clear_block(site, 1 + static_cast<int>(rng.below(6)));
    } else {
      lat.set_state(site, s);
    }
    if (step % 500 == 0) {
      std::int64_t n[3] = {0, 0, 0};
      for (int i = 0; i < 64; ++i) n[static_cast<int>(lat.state(i))]++;
      REQUIRE(lat.count(SiteState::Vacant) == n[0]);
      REQUIRE(lat.count(SiteState::One) == n[1]);
      REQUIRE(lat.count(SiteState::Two) == n[2]);
    }
  }
}

TEST_CASE("apply_offset wraps or discards", "[lattice]") {
  Lattice torus(5, 5, Boundary::Torus);
  REQUIRE(torus.apply_offset(torus.index(4, 4), 1, 1) == torus.index(0, 0));
  REQUIRE(torus.apply_offset(torus.index(0, 0), -1, -2) == torus.index(4, 3));

  Lattice box(5, 5, Boundary::TruncatedBox);
  REQUIRE(box.apply_offset(box.index(4, 4), 1, 0) == -1);
  REQUIRE(box.apply_offset(box.index(2, 2), 1, -1) == box.index(3, 1));
}

TEST_CASE("snapshot text uses '.', '1', '2'", "[lattice]") {
  Lattice lat(3, 2, Boundary::Torus);
  lat.set_state(lat.index(0, 0), SiteState::One);
  lat.set_state(lat.index(2, 1), SiteState::Two);
  REQUIRE(lat.to_text() == "1..\n..2\n");
}
