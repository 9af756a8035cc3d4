#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "semiclass/types.hpp"

namespace semiclass {

/// Controls the composite-trapezoid rules behind symbol-level integrals.
/// spacing == 0 picks decay_radius/256; the integration box reaches
/// box_factor times the decay radius unless box_radius overrides it.
struct QuadratureSpec {
  Real spacing = 0.0;
  Real box_factor = 1.5;
  Real box_radius = 0.0;

  Real resolved_spacing(Real decay_radius) const {
    return spacing > 0.0 ? spacing : decay_radius / 256.0;
  }
  Real resolved_radius(Real decay_radius) const {
    return box_radius > 0.0 ? box_radius : box_factor * decay_radius;
  }
};

/// Nodes and weights of a composite trapezoid rule on [a, b] whose spacing
/// does not exceed the target.
struct LineRule {
  Vec nodes;
  Vec weights;
  Real spacing = 0.0;

  Index size() const { return nodes.size(); }
};

LineRule trapezoid_rule(Real a, Real b, Real target_spacing);

/// Memoizes a two-argument kernel evaluation on exact double keys.
/// Quadrature lattices revisit identical coordinates, so composed kernels
/// reuse inner integrals instead of recomputing them.
class PairCache {
 public:
  template <class F>
  Complex get(Real a, Real b, F&& compute) {
    const Key k = key_of(a, b);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = map_.find(k);
      if (it != map_.end()) return it->second;
    }
    Complex value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(k, value);
    return value;
  }

 private:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  static Key key_of(Real a, Real b) {
    std::uint64_t ka, kb;
    std::memcpy(&ka, &a, sizeof ka);
    std::memcpy(&kb, &b, sizeof kb);
    return {ka, kb};
  }
  std::mutex mutex_;
  std::unordered_map<Key, Complex, KeyHash> map_;
};

using PairCachePtr = std::shared_ptr<PairCache>;

}  // namespace semiclass
