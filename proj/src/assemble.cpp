#include "semiclass/assemble.hpp"

#include <cmath>
#include <sstream>

#include "semiclass/parallel.hpp"

namespace semiclass {

namespace {

void check_hbar(Real hbar) {
  if (!(hbar > 0.0) || hbar > 1.0) throw Error("hbar must lie in (0, 1]");
}

void require_rho_resolution(const HalfSpaceGrid& grid, Real hbar, Real radius,
                            const char* what) {
  const Real h = grid.max_spacing();
  if (h > hbar * radius / 8.0) {
    std::ostringstream os;
    os << what << ": grid spacing " << h << " exceeds hbar*radius/8 = "
       << hbar * radius / 8.0 << "; finest admissible hbar for this grid is "
       << 8.0 * h / radius;
    throw ResolutionError(os.str());
  }
}

}  // namespace

DiscreteOperator assemble_rho(const Symbol& f, Real hbar, const HalfSpaceGrid& grid) {
  check_hbar(hbar);
  const Index n = grid.size();
  std::ostringstream label;
  label << "rho[" << hbar << "](" << f.label << ")";
  if (f.zero) return make_operator(grid, CMat::Zero(n, n), label.str());
  if (f.dim != grid.dim) throw Error("assemble_rho: symbol/grid dimension mismatch");
  require_rho_resolution(grid, hbar, f.decay_radius, "assemble_rho");

  const Real scale = std::pow(hbar, -grid.dim);
  const Real cutoff = f.decay_radius;
  CMat kernel = CMat::Zero(n, n);
  parallel_for(n, [&](Index i) {
    const Point xi = grid.node(i);
    for (Index j = 0; j < n; ++j) {
      const Point v = (xi - grid.node(j)) / hbar;
      if (v.norm() >= cutoff) continue;  // below the decay floor
      kernel(i, j) = scale * f(xi, v);
    }
  });
  return make_operator(grid, std::move(kernel), label.str());
}

DiscreteOperator assemble_kappa(const BoundaryKernel& K, Real hbar,
                                const HalfSpaceGrid& grid) {
  check_hbar(hbar);
  const Index n = grid.size();
  std::ostringstream label;
  label << "kappa[" << hbar << "](" << K.label << ")";
  if (K.zero) return make_operator(grid, CMat::Zero(n, n), label.str());
  if (K.dim != grid.dim) throw Error("assemble_kappa: kernel/grid dimension mismatch");
  if (grid.interior) throw Error("assemble_kappa: needs a half-space grid");
  require_rho_resolution(grid, hbar, K.decay_radius, "assemble_kappa");

  const Real scale = std::pow(hbar, -grid.dim);
  const Real cutoff = K.decay_radius;
  CMat kernel = CMat::Zero(n, n);
  parallel_for(n, [&](Index i) {
    const Point xi = grid.node(i);
    if (xi(1) / hbar >= cutoff) return;
    for (Index j = 0; j < n; ++j) {
      const Point xj = grid.node(j);
      if (xj(1) / hbar >= cutoff) continue;
      if (grid.dim == 2 && std::abs(xi(0) - xj(0)) / hbar >= cutoff) continue;
      kernel(i, j) = scale * K(xi(0), (xi(0) - xj(0)) / hbar, xi(1) / hbar, xj(1) / hbar);
    }
  });
  return make_operator(grid, std::move(kernel), label.str());
}

std::vector<Real> TangentGrid::base_normals() const {
  std::vector<Real> out;
  out.reserve(base_nodes.size());
  for (const auto& p : base_nodes) out.push_back(p(1));
  return out;
}

TangentGrid make_tangent_grid(int dim, std::vector<Point> base_nodes, Real fiber_extent,
                              Index fiber_points) {
  if (dim != 1 && dim != 2) throw Error("make_tangent_grid: dim must be 1 or 2");
  if (base_nodes.empty()) throw Error("make_tangent_grid: need base nodes");
  if (fiber_extent <= 0.0 || fiber_points < 2)
    throw Error("make_tangent_grid: bad fiber parameters");
  TangentGrid g;
  g.dim = dim;
  g.base_nodes = std::move(base_nodes);
  g.fiber_extent = fiber_extent;
  g.fiber_points = fiber_points;
  return g;
}

namespace {

Real wrap_periodic(Real d, Real extent) {
  // into [-extent, extent)
  return d - 2.0 * extent * std::floor((d + extent) / (2.0 * extent));
}

}  // namespace

DiscreteOperator assemble_pi0(const Symbol& f, const TangentGrid& tgrid) {
  const Index m = tgrid.fiber_points;
  const Index blocks = Index(tgrid.base_nodes.size());
  const Index fiber_size = tgrid.dim == 2 ? m * m : m;
  const Index n = blocks * fiber_size;
  const Real hv = tgrid.fiber_spacing();

  DiscreteOperator op;
  op.kernel = CMat::Zero(n, n);
  op.weights = Vec::Constant(n, tgrid.dim == 2 ? hv * hv : hv);
  op.label = "pi0(" + f.label + ")";
  if (f.zero) return op;
  if (f.dim != tgrid.dim) throw Error("assemble_pi0: symbol/grid dimension mismatch");
  if (tgrid.fiber_extent < f.decay_radius)
    throw ResolutionError("assemble_pi0: fiber extent must cover the decay radius");
  if (hv > f.decay_radius / 8.0) {
    std::ostringstream os;
    os << "assemble_pi0: fiber spacing " << hv << " too coarse; required <= "
       << f.decay_radius / 8.0;
    throw ResolutionError(os.str());
  }

  const Real Lv = tgrid.fiber_extent;
  parallel_for(blocks, [&](Index b) {
    const Point& x = tgrid.base_nodes[b];
    const Index off = b * fiber_size;
    if (tgrid.dim == 1) {
      // Circulant: entries depend on the wrapped fiber difference only.
      CVec row(m);
      for (Index d = 0; d < m; ++d)
        row(d) = f(x, point1(wrap_periodic(Real(d) * hv, Lv)));
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j)
          op.kernel(off + i, off + j) = row((i - j + m) % m);
    } else {
      CMat page(m, m);
      for (Index dt = 0; dt < m; ++dt)
        for (Index dn = 0; dn < m; ++dn)
          page(dt, dn) = f(x, point2(wrap_periodic(Real(dt) * hv, Lv),
                                     wrap_periodic(Real(dn) * hv, Lv)));
      for (Index it = 0; it < m; ++it)
        for (Index in = 0; in < m; ++in)
          for (Index jt = 0; jt < m; ++jt)
            for (Index jn = 0; jn < m; ++jn)
              op.kernel(off + it * m + in, off + jt * m + jn) =
                  page((it - jt + m) % m, (in - jn + m) % m);
    }
  });
  return op;
}

SpectrumGrid pi0_matched_spectrum(const TangentGrid& tgrid) {
  if (tgrid.dim == 1)
    return matched_spectrum_grid(tgrid.base_normals(), tgrid.fiber_extent,
                                 tgrid.fiber_points);
  SpectrumGrid g;
  g.dim = 2;
  g.base_nodes = tgrid.base_nodes;
  const Index m = tgrid.fiber_points;
  for (Index kt = -m / 2; kt < (m + 1) / 2; ++kt)
    for (Index kn = -m / 2; kn < (m + 1) / 2; ++kn)
      g.sigma_nodes.push_back(point2(kPi * Real(kt) / tgrid.fiber_extent,
                                     kPi * Real(kn) / tgrid.fiber_extent));
  return g;
}

DiscreteOperator assemble_pi0_boundary(const Symbol& f, const BoundaryKernel& K,
                                       const HalfSpaceGrid& grid,
                                       const BoundaryFamily& family,
                                       const QuadratureSpec& quad) {
  if (grid.interior) throw Error("assemble_pi0_boundary: needs a half-space grid");
  if (!f.zero && f.dim != grid.dim)
    throw Error("assemble_pi0_boundary: symbol dimension mismatch");
  if (!K.zero && K.dim != grid.dim)
    throw Error("assemble_pi0_boundary: kernel dimension mismatch");
  const std::string label = "pi0d(" + f.label + ", " + K.label + ")";

  if (grid.dim == 1) {
    const Index n = grid.size();
    const Real h = grid.normal_spacing();
    if (!f.zero && h > f.decay_radius / 8.0)
      throw ResolutionError("assemble_pi0_boundary: spacing too coarse for symbol");
    if (!K.zero && h > K.decay_radius / 8.0)
      throw ResolutionError("assemble_pi0_boundary: spacing too coarse for kernel");
    CMat kernel = CMat::Zero(n, n);
    parallel_for(n, [&](Index i) {
      const Real xi = grid.normal_coord(i);
      for (Index j = 0; j < n; ++j) {
        const Real xj = grid.normal_coord(j);
        Complex val(0.0);
        if (!f.zero && std::abs(xi - xj) < f.decay_radius)
          val += f(point1(0.0), point1(xi - xj));
        if (!K.zero && xi < K.decay_radius && xj < K.decay_radius)
          val += K.at(xi, xj);
        kernel(i, j) = val;
      }
    });
    return make_operator(grid, std::move(kernel), label);
  }

  // dim 2: one half-line block per (x', sigma') after the tangential
  // Fourier transform, mirroring the frozen-frequency diagonalization.
  if (family.sigma_nodes.empty())
    throw Error("assemble_pi0_boundary: dim 2 requires a sigma' family");
  const Index nn = grid.points_normal;
  const Index nb = grid.points_tangential;
  const Index ns = Index(family.sigma_nodes.size());
  const Real hn = grid.normal_spacing();

  const Real radius = std::max(f.zero ? 1.0 : f.decay_radius,
                               K.zero ? 1.0 : K.decay_radius);
  const Real hq = quad.resolved_spacing(radius);
  Real sigma_max = 0.0;
  for (Real s : family.sigma_nodes) sigma_max = std::max(sigma_max, std::abs(s));
  if (sigma_max * hq > 0.5 * kPi)
    throw ResolutionError("assemble_pi0_boundary: sigma' family beyond Nyquist range");
  const Real Rt = quad.resolved_radius(radius);
  const LineRule trule = trapezoid_rule(-Rt, Rt, hq);

  // Normal-axis trapezoid weights per block; the family index carries unit
  // weight, so the stacked norm is the family supremum.
  Vec wline(nn);
  for (Index i = 0; i < nn; ++i)
    wline(i) = (i == 0 || i == nn - 1) ? 0.5 * hn : hn;

  DiscreteOperator op;
  const Index n = nb * ns * nn;
  op.kernel = CMat::Zero(n, n);
  op.weights = Vec::Zero(n);
  op.label = label;
  for (Index blk = 0; blk < nb * ns; ++blk)
    op.weights.segment(blk * nn, nn) = wline;

  parallel_for(nb * ns, [&](Index blk) {
    const Index bi = blk / ns;
    const Index si = blk % ns;
    const Real xp = grid.tangential_coord(bi);
    const Real sp = family.sigma_nodes[si];
    CVec phases(trule.size());
    for (Index q = 0; q < trule.size(); ++q)
      phases(q) = trule.weights(q) * std::polar(1.0, -trule.nodes(q) * sp);
    const Index off = blk * nn;
    for (Index i = 0; i < nn; ++i) {
      const Real vn = grid.normal_coord(i);
      for (Index j = 0; j < nn; ++j) {
        const Real wn = grid.normal_coord(j);
        Complex val(0.0);
        if (!f.zero && std::abs(vn - wn) < f.decay_radius) {
          Complex acc(0.0);
          for (Index q = 0; q < trule.size(); ++q)
            acc += phases(q) * f(point2(xp, 0.0), point2(trule.nodes(q), vn - wn));
          val += acc;
        }
        if (!K.zero && vn < K.decay_radius && wn < K.decay_radius) {
          Complex acc(0.0);
          for (Index q = 0; q < trule.size(); ++q)
            acc += phases(q) * K(xp, trule.nodes(q), vn, wn);
          val += acc;
        }
        op.kernel(off + i, off + j) = val;
      }
    }
  });
  return op;
}

DiscreteOperator boundary_projection(const HalfSpaceGrid& grid, Real thickness) {
  if (grid.interior) throw Error("boundary_projection: needs a half-space grid");
  if (!(thickness > 0.0)) throw Error("boundary_projection: thickness must be positive");
  if (thickness < grid.normal_spacing())
    throw Error("boundary_projection: slab thinner than one grid spacing");
  const Index n = grid.size();
  const bool all = thickness >= grid.normal_extent;
  CMat kernel = CMat::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (all || grid.node(i)(1) < thickness) kernel(i, i) = Complex(1.0 / grid.weight(i));
  std::ostringstream label;
  label << "P[a=" << thickness << "]";
  return make_operator(grid, std::move(kernel), label.str());
}

DiscreteOperator boundary_projection_hbar(const HalfSpaceGrid& grid, Real hbar,
                                          Real beta) {
  check_hbar(hbar);
  if (!(beta > 0.0) || beta >= 1.0)
    throw Error("boundary_projection_hbar: beta must lie in (0, 1)");
  return boundary_projection(grid, std::pow(hbar, beta));
}

DiscreteOperator dilation(Real hbar, const HalfSpaceGrid& grid) {
  check_hbar(hbar);
  const Index n = grid.size();
  const Real h = grid.normal_spacing();
  const Real lo = grid.normal_lo();
  CMat kernel = CMat::Zero(n, n);
  const Real amp = std::sqrt(hbar);
  for (Index i = 0; i < n; ++i) {
    const Index in = i % grid.points_normal;
    const Index it = i / grid.points_normal;
    const Real target = hbar * grid.normal_coord(in);
    if (target < lo - 1e-12 || target > lo + grid.normal_extent + 1e-12)
      throw Error("dilation: target nodes outside grid");
    Index k = Index(std::floor((target - lo) / h));
    k = std::min(k, grid.points_normal - 2);
    const Real theta = (target - (lo + Real(k) * h)) / h;
    const Index j0 = grid.node_index(it, k);
    const Index j1 = grid.node_index(it, k + 1);
    kernel(i, j0) += amp * (1.0 - theta) / grid.weight(j0);
    kernel(i, j1) += amp * theta / grid.weight(j1);
  }
  std::ostringstream label;
  label << "D[" << hbar << "]";
  return make_operator(grid, std::move(kernel), label.str());
}

}  // namespace semiclass
