#include "semiclass/operators.hpp"

namespace semiclass {

namespace {

void check_compatible(const DiscreteOperator& a, const DiscreteOperator& b,
                      const char* what) {
  if (a.size() != b.size() || a.weights.size() != b.weights.size() ||
      a.weights != b.weights)
    throw Error(std::string(what) + ": grid mismatch between '" + a.label + "' and '" +
                b.label + "'");
  if (a.has_grid && b.has_grid && !a.grid.same_layout(b.grid))
    throw Error(std::string(what) + ": grid mismatch between '" + a.label + "' and '" +
                b.label + "'");
}

}  // namespace

CVec DiscreteOperator::apply(const CVec& xi) const {
  if (xi.size() != kernel.cols()) throw Error("apply: size mismatch");
  return kernel * (weights.cast<Complex>().cwiseProduct(xi));
}

CVec DiscreteOperator::apply_rowwise(const CVec& xi) const {
  if (xi.size() != kernel.cols()) throw Error("apply_rowwise: size mismatch");
  CVec out(kernel.rows());
  for (Index i = 0; i < kernel.rows(); ++i) {
    Complex acc(0.0);
    for (Index j = 0; j < kernel.cols(); ++j) acc += kernel(i, j) * weights(j) * xi(j);
    out(i) = acc;
  }
  return out;
}

DiscreteOperator make_operator(const HalfSpaceGrid& grid, CMat kernel, std::string label) {
  DiscreteOperator op;
  if (kernel.rows() != grid.size() || kernel.cols() != grid.size())
    throw Error("make_operator: kernel dimensions do not match grid node count");
  op.kernel = std::move(kernel);
  op.weights = grid.weights();
  op.label = std::move(label);
  op.grid = grid;
  op.has_grid = true;
  return op;
}

DiscreteOperator identity_operator(const HalfSpaceGrid& grid) {
  const Index n = grid.size();
  CMat k = CMat::Zero(n, n);
  const Vec w = grid.weights();
  for (Index i = 0; i < n; ++i) k(i, i) = Complex(1.0 / w(i));
  return make_operator(grid, std::move(k), "identity");
}

DiscreteOperator compose(const DiscreteOperator& a, const DiscreteOperator& b) {
  check_compatible(a, b, "compose");
  DiscreteOperator out = a;
  out.kernel = a.kernel * a.weights.asDiagonal() * b.kernel;
  out.label = a.label + " . " + b.label;
  return out;
}

DiscreteOperator adjoint(const DiscreteOperator& a) {
  DiscreteOperator out = a;
  out.kernel = a.kernel.adjoint();
  out.label = "adj(" + a.label + ")";
  return out;
}

DiscreteOperator operator_sum(const DiscreteOperator& a, const DiscreteOperator& b) {
  check_compatible(a, b, "operator_sum");
  DiscreteOperator out = a;
  out.kernel = a.kernel + b.kernel;
  out.label = a.label + " + " + b.label;
  return out;
}

DiscreteOperator operator_diff(const DiscreteOperator& a, const DiscreteOperator& b) {
  check_compatible(a, b, "operator_diff");
  DiscreteOperator out = a;
  out.kernel = a.kernel - b.kernel;
  out.label = a.label + " - " + b.label;
  return out;
}

DiscreteOperator operator_scale(const DiscreteOperator& a, Complex c) {
  DiscreteOperator out = a;
  out.kernel = a.kernel * c;
  return out;
}

CMat weighted_matrix(const DiscreteOperator& a) {
  const Vec sq = a.weights.cwiseSqrt();
  return sq.asDiagonal() * a.kernel * sq.asDiagonal();
}

DiscreteOperator restrict_interval(const DiscreteOperator& a, Real lo, Real hi) {
  if (!a.has_grid) throw Error("restrict_interval: operator has no grid provenance");
  std::vector<Index> keep;
  for (Index i = 0; i < a.size(); ++i) {
    const Real xn = a.grid.node(i)(1);
    if (xn >= lo && xn < hi) keep.push_back(i);
  }
  DiscreteOperator out;
  const Index n = Index(keep.size());
  out.kernel.resize(n, n);
  out.weights.resize(n);
  for (Index i = 0; i < n; ++i) {
    out.weights(i) = a.weights(keep[std::size_t(i)]);
    for (Index j = 0; j < n; ++j)
      out.kernel(i, j) = a.kernel(keep[std::size_t(i)], keep[std::size_t(j)]);
  }
  out.label = "restrict(" + a.label + ")";
  return out;
}

}  // namespace semiclass
