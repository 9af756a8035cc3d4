#include "semiclass/grid.hpp"

#include <sstream>

namespace semiclass {

namespace {

Real axis_weight(Index i, Index n, Real spacing) {
  return (i == 0 || i == n - 1) ? 0.5 * spacing : spacing;
}

}  // namespace

Real HalfSpaceGrid::max_spacing() const {
  Real h = normal_spacing();
  if (dim == 2) h = std::max(h, tangential_spacing());
  return h;
}

Point HalfSpaceGrid::node(Index i) const {
  const Index in = i % points_normal;
  const Index it = i / points_normal;
  return Point(dim == 2 ? tangential_coord(it) : 0.0, normal_coord(in));
}

Real HalfSpaceGrid::weight(Index i) const {
  const Index in = i % points_normal;
  const Index it = i / points_normal;
  Real w = axis_weight(in, points_normal, normal_spacing());
  if (dim == 2) w *= axis_weight(it, points_tangential, tangential_spacing());
  return w;
}

Vec HalfSpaceGrid::weights() const {
  Vec w(size());
  for (Index i = 0; i < size(); ++i) w(i) = weight(i);
  return w;
}

Real HalfSpaceGrid::box_measure() const {
  return dim == 2 ? normal_extent * 2.0 * tangential_extent : normal_extent;
}

bool HalfSpaceGrid::same_layout(const HalfSpaceGrid& other) const {
  return dim == other.dim && normal_extent == other.normal_extent &&
         tangential_extent == other.tangential_extent &&
         points_normal == other.points_normal &&
         points_tangential == other.points_tangential && interior == other.interior;
}

std::string HalfSpaceGrid::describe() const {
  std::ostringstream os;
  os << "grid(dim=" << dim << ", Ln=" << normal_extent;
  if (dim == 2) os << ", Lt=" << tangential_extent;
  os << ", Nn=" << points_normal;
  if (dim == 2) os << ", Nt=" << points_tangential;
  if (interior) os << ", interior";
  os << ")";
  return os.str();
}

HalfSpaceGrid make_grid(int dim, Real normal_extent, Real tangential_extent,
                        Index points_normal, Index points_tangential, bool interior) {
  if (dim != 1 && dim != 2) throw Error("make_grid: dim must be 1 or 2");
  if (normal_extent <= 0.0) throw Error("make_grid: normal extent must be positive");
  if (points_normal < 2) throw Error("make_grid: need at least 2 normal points");
  if (dim == 2) {
    if (tangential_extent <= 0.0)
      throw Error("make_grid: tangential extent must be positive");
    if (points_tangential < 2) throw Error("make_grid: need at least 2 tangential points");
  } else {
    tangential_extent = 0.0;
    points_tangential = 1;
  }
  HalfSpaceGrid g;
  g.dim = dim;
  g.normal_extent = normal_extent;
  g.tangential_extent = tangential_extent;
  g.points_normal = points_normal;
  g.points_tangential = points_tangential;
  g.interior = interior;
  return g;
}

}  // namespace semiclass
