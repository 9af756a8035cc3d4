#include "semiclass/symbol.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace semiclass {

namespace {

struct Params {
  std::string name;
  std::map<std::string, Real> kv;

  Real get(const std::string& key, Real fallback) const {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  }
};

Params parse_id(const std::string& id, const std::vector<std::string>& allowed) {
  Params p;
  const auto colon = id.find(':');
  p.name = id.substr(0, colon);
  if (colon == std::string::npos) return p;
  std::stringstream rest(id.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("catalogue id '" + id + "': expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    bool known = false;
    for (const auto& a : allowed) known = known || (a == key);
    if (!known) throw ConfigError("catalogue id '" + id + "': unknown parameter '" + key + "'");
    const std::string val = item.substr(eq + 1);
    char* end = nullptr;
    const Real x = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0')
      throw ConfigError("catalogue id '" + id + "': bad numeric value '" + val + "'");
    p.kv[key] = x;
  }
  return p;
}

std::string name_of(const std::string& id) {
  return id.substr(0, id.find(':'));
}

/// Radius r with |scale| * exp(-b (r - |center|)^2) < kDecayFloor.
Real gauss_radius(Real b, Real center, Real scale) {
  if (b <= 0.0) throw ConfigError("catalogue: Gaussian width must be positive");
  const Real mass = std::log(std::abs(scale) / kDecayFloor);
  const Real r = std::abs(center) + std::sqrt(std::max(mass, 0.0) / b);
  return std::max(r, 1.0);
}

}  // namespace

Symbol make_symbol(const std::string& id) {
  const std::string name = name_of(id);
  if (name == "zero") return Symbol{};

  if (name == "gauss") {
    const Params p = parse_id(id, {"a", "b", "x0", "v0", "scale", "vphase"});
    const Real a = p.get("a", 0.0), b = p.get("b", 1.0);
    const Real x0 = p.get("x0", 0.0), v0 = p.get("v0", 0.0);
    const Real scale = p.get("scale", 1.0), vphase = p.get("vphase", 0.0);
    if (a < 0.0 || b <= 0.0) throw ConfigError("gauss: need a >= 0 and b > 0");
    Symbol f;
    f.dim = 1;
    f.label = id;
    f.zero = (scale == 0.0);
    f.decay_radius = gauss_radius(b, v0, scale);
    f.eval_fn = [=](const Point& x, const Point& v) {
      const Real xn = x(1), vn = v(1);
      const Real mod = scale * std::exp(-a * (xn - x0) * (xn - x0) -
                                        b * (vn - v0) * (vn - v0));
      if (vphase == 0.0) return Complex(mod);
      return mod * std::polar(1.0, vphase * vn);
    };
    return f;
  }

  if (name == "bump") {
    const Params p = parse_id(id, {"w", "v0", "scale"});
    const Real w = p.get("w", 1.0), v0 = p.get("v0", 0.0), scale = p.get("scale", 1.0);
    if (w <= 0.0) throw ConfigError("bump: need w > 0");
    Symbol f;
    f.dim = 1;
    f.label = id;
    f.zero = (scale == 0.0);
    f.decay_radius = std::abs(v0) + w;
    f.eval_fn = [=](const Point&, const Point& v) {
      const Real t = (v(1) - v0) / w;
      if (std::abs(t) >= 1.0) return Complex(0.0);
      return Complex(scale * std::exp(1.0 - 1.0 / (1.0 - t * t)));
    };
    return f;
  }

  if (name == "gauss2") {
    const Params p = parse_id(id, {"at", "an", "bt", "bn", "xt0", "xn0", "vt0", "vn0", "scale"});
    const Real at = p.get("at", 0.0), an = p.get("an", 0.0);
    const Real bt = p.get("bt", 1.0), bn = p.get("bn", 1.0);
    const Real xt0 = p.get("xt0", 0.0), xn0 = p.get("xn0", 0.0);
    const Real vt0 = p.get("vt0", 0.0), vn0 = p.get("vn0", 0.0);
    const Real scale = p.get("scale", 1.0);
    if (at < 0.0 || an < 0.0 || bt <= 0.0 || bn <= 0.0)
      throw ConfigError("gauss2: need at,an >= 0 and bt,bn > 0");
    Symbol f;
    f.dim = 2;
    f.label = id;
    f.zero = (scale == 0.0);
    const Real v0norm = std::hypot(vt0, vn0);
    // ||v|| >= r forces one axis deviation >= (r - ||v0||)/sqrt(2).
    const Real mass = std::log(std::abs(scale == 0.0 ? 1.0 : scale) / kDecayFloor);
    f.decay_radius =
        std::max(1.0, v0norm + std::sqrt(2.0 * std::max(mass, 0.0) / std::min(bt, bn)));
    f.eval_fn = [=](const Point& x, const Point& v) {
      const Real e = -at * (x(0) - xt0) * (x(0) - xt0) - an * (x(1) - xn0) * (x(1) - xn0) -
                     bt * (v(0) - vt0) * (v(0) - vt0) - bn * (v(1) - vn0) * (v(1) - vn0);
      return Complex(scale * std::exp(e));
    };
    return f;
  }

  throw ConfigError("unknown symbol catalogue entry '" + id +
                    "' (known: zero, gauss, bump, gauss2)");
}

BoundaryKernel make_kernel(const std::string& id) {
  const std::string name = name_of(id);
  if (name == "zero") return BoundaryKernel{};

  if (name == "rank1") {
    const Params p = parse_id(id, {"as", "ac", "bs", "bc", "scale", "phase"});
    const Real as = p.get("as", 1.0), ac = p.get("ac", 1.0);
    const Real bs = p.get("bs", 1.0), bc = p.get("bc", 1.0);
    const Real scale = p.get("scale", 1.0), phase = p.get("phase", 0.0);
    BoundaryKernel k;
    k.dim = 1;
    k.label = id;
    k.zero = (scale == 0.0);
    k.decay_radius = std::max(gauss_radius(as, ac, scale), gauss_radius(bs, bc, scale));
    k.eval_fn = [=](Real, Real, Real vn, Real wn) {
      const Real mod =
          scale * std::exp(-as * (vn - ac) * (vn - ac) - bs * (wn - bc) * (wn - bc));
      if (phase == 0.0) return Complex(mod);
      return mod * std::polar(1.0, phase * (vn - wn));
    };
    return k;
  }

  if (name == "ridge") {
    const Params p = parse_id(id, {"s", "t", "c", "scale"});
    const Real s = p.get("s", 1.0), t = p.get("t", 1.0), c = p.get("c", 2.0);
    const Real scale = p.get("scale", 1.0);
    if (s <= 0.0 || t <= 0.0) throw ConfigError("ridge: need s,t > 0");
    BoundaryKernel k;
    k.dim = 1;
    k.label = id;
    k.zero = (scale == 0.0);
    // At w = v the diagonal factor is 1 and t(v+w-c)^2 = 4t(v-c/2)^2.
    k.decay_radius = gauss_radius(4.0 * t, 0.5 * c, scale);
    k.eval_fn = [=](Real, Real, Real vn, Real wn) {
      const Real d = vn - wn, m = vn + wn - c;
      return Complex(scale * std::exp(-s * d * d - t * m * m));
    };
    return k;
  }

  if (name == "rank1_2d") {
    const Params p = parse_id(id, {"ts", "as", "ac", "bs", "bc", "scale"});
    const Real ts = p.get("ts", 1.0);
    const Real as = p.get("as", 1.0), ac = p.get("ac", 1.0);
    const Real bs = p.get("bs", 1.0), bc = p.get("bc", 1.0);
    const Real scale = p.get("scale", 1.0);
    if (ts <= 0.0) throw ConfigError("rank1_2d: need ts > 0");
    BoundaryKernel k;
    k.dim = 2;
    k.label = id;
    k.zero = (scale == 0.0);
    k.decay_radius = std::max({gauss_radius(ts, 0.0, scale), gauss_radius(as, ac, scale),
                               gauss_radius(bs, bc, scale)});
    k.eval_fn = [=](Real, Real up, Real vn, Real wn) {
      return Complex(scale * std::exp(-ts * up * up - as * (vn - ac) * (vn - ac) -
                                      bs * (wn - bc) * (wn - bc)));
    };
    return k;
  }

  throw ConfigError("unknown kernel catalogue entry '" + id +
                    "' (known: zero, rank1, ridge, rank1_2d)");
}

Symbol conjugate(const Symbol& f) {
  if (f.zero) return f;
  Symbol g = f;
  g.label = "conj(" + f.label + ")";
  auto base = f.eval_fn;
  g.eval_fn = [base](const Point& x, const Point& v) { return std::conj(base(x, v)); };
  return g;
}

BoundaryKernel conjugate(const BoundaryKernel& k) {
  if (k.zero) return k;
  BoundaryKernel out = k;
  out.label = "conj(" + k.label + ")";
  auto base = k.eval_fn;
  out.eval_fn = [base](Real xp, Real up, Real vn, Real wn) {
    return std::conj(base(xp, up, vn, wn));
  };
  return out;
}

BoundaryKernel add_kernels(const BoundaryKernel& a, const BoundaryKernel& b) {
  if (a.zero) return b;
  if (b.zero) return a;
  if (a.dim != b.dim) throw Error("add_kernels: dimension mismatch");
  BoundaryKernel out;
  out.dim = a.dim;
  out.label = a.label + "+" + b.label;
  out.zero = false;
  out.decay_radius = std::max(a.decay_radius, b.decay_radius);
  auto ea = a.eval_fn, eb = b.eval_fn;
  out.eval_fn = [ea, eb](Real xp, Real up, Real vn, Real wn) {
    return ea(xp, up, vn, wn) + eb(xp, up, vn, wn);
  };
  return out;
}

std::string catalog_help() {
  return
      "symbol catalogue (dim-1 unless noted):\n"
      "  zero\n"
      "  gauss:a=<A>,b=<B>,x0=<X>,v0=<V>,scale=<S>,vphase=<P>\n"
      "      scale * exp(-A (x-x0)^2 - B (v-v0)^2) * exp(i P v)\n"
      "      defaults a=0 b=1 x0=0 v0=0 scale=1 vphase=0\n"
      "  bump:w=<W>,v0=<V>,scale=<S>\n"
      "      scale * exp(1 - 1/(1-t^2)), t=(v-v0)/W, zero for |t|>=1\n"
      "  gauss2:at=,an=,bt=,bn=,xt0=,xn0=,vt0=,vn0=,scale=   (dim 2)\n"
      "      separable Gaussian in (x_t, x_n, v_t, v_n)\n"
      "kernel catalogue:\n"
      "  zero\n"
      "  rank1:as=,ac=,bs=,bc=,scale=,phase=\n"
      "      scale * exp(-as (v-ac)^2) exp(-bs (w-bc)^2) exp(i phase (v-w))\n"
      "  ridge:s=,t=,c=,scale=\n"
      "      scale * exp(-s (v-w)^2 - t (v+w-c)^2)   (not rank one)\n"
      "  rank1_2d:ts=,as=,ac=,bs=,bc=,scale=          (dim 2)\n"
      "      adds a tangential factor exp(-ts u'^2)\n";
}

}  // namespace semiclass
