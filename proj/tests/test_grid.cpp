#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semiclass/grid.hpp"

using namespace semiclass;

TEST_CASE("two-node trapezoid grid") {
  const HalfSpaceGrid g = make_grid(1.0, 2);
  CHECK(g.size() == 2);
  CHECK(g.normal_coord(0) == 0.0);
  CHECK(g.normal_coord(1) == 1.0);
  CHECK(g.weight(0) == 0.5);
  CHECK(g.weight(1) == 0.5);
}

TEST_CASE("uniform trapezoid weights, five nodes") {
  const HalfSpaceGrid g = make_grid(4.0, 5);
  CHECK(g.normal_spacing() == 1.0);
  const Vec w = g.weights();
  CHECK(w(0) == 0.5);
  CHECK(w(1) == 1.0);
  CHECK(w(2) == 1.0);
  CHECK(w(3) == 1.0);
  CHECK(w(4) == 0.5);
}

TEST_CASE("dim-2 weight sum equals the box measure") {
  const HalfSpaceGrid g = make_grid(2, 8.0, 8.0, 65, 129);
  CHECK(g.size() == 65 * 129);
  CHECK(g.box_measure() == 128.0);
  CHECK(g.weights().sum() == doctest::Approx(128.0).epsilon(1e-12));
}

TEST_CASE("spacing times intervals spans the extent exactly") {
  for (const auto& g :
       {make_grid(1.0, 2), make_grid(4.0, 5), make_grid(16.0, 129),
        make_grid(2, 8.0, 8.0, 65, 129)}) {
    CHECK(g.normal_spacing() * Real(g.points_normal - 1) == g.normal_extent);
    if (g.dim == 2)
      CHECK(g.tangential_spacing() * Real(g.points_tangential - 1) ==
            2.0 * g.tangential_extent);
  }
}

TEST_CASE("weights positive, sum matches measure") {
  for (const auto& g : {make_grid(1.0, 2), make_grid(7.0, 23), make_grid(16.0, 33, true),
                        make_grid(2, 4.0, 2.0, 9, 7)}) {
    const Vec w = g.weights();
    CHECK(w.minCoeff() > 0.0);
    CHECK(std::abs(w.sum() - g.box_measure()) <= 1e-12 * g.box_measure());
  }
}

TEST_CASE("interior grids center the normal axis") {
  const HalfSpaceGrid g = make_grid(16.0, 17, true);
  CHECK(g.normal_coord(0) == -8.0);
  CHECK(g.normal_coord(16) == 8.0);
  CHECK(g.node(8)(1) == 0.0);
}

TEST_CASE("rejects degenerate input") {
  CHECK_THROWS_AS(make_grid(1.0, 1), Error);
  CHECK_THROWS_AS(make_grid(0.0, 4), Error);
  CHECK_THROWS_AS(make_grid(-2.0, 4), Error);
  CHECK_THROWS_AS(make_grid(3, 1.0, 1.0, 4, 4), Error);
  CHECK_THROWS_AS(make_grid(2, 1.0, 0.0, 4, 4), Error);
  CHECK_THROWS_AS(make_grid(2, 1.0, 1.0, 4, 1), Error);
}
