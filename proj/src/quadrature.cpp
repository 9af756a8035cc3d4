#include "semiclass/quadrature.hpp"

#include <cmath>
#include <cstring>

namespace semiclass {

LineRule trapezoid_rule(Real a, Real b, Real target_spacing) {
  if (!(b > a)) throw Error("trapezoid_rule: empty interval");
  if (!(target_spacing > 0.0)) throw Error("trapezoid_rule: spacing must be positive");
  const Index n = std::max<Index>(2, Index(std::ceil((b - a) / target_spacing)) + 1);
  LineRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.spacing = (b - a) / Real(n - 1);
  for (Index i = 0; i < n; ++i) {
    rule.nodes(i) = (i == n - 1) ? b : a + Real(i) * rule.spacing;
    rule.weights(i) = (i == 0 || i == n - 1) ? 0.5 * rule.spacing : rule.spacing;
  }
  return rule;
}

}  // namespace semiclass
