#pragma once

#include <string>

#include "semiclass/assemble.hpp"
#include "semiclass/symbol.hpp"

namespace semiclass {

/// Circle symbol phi sampled at the N-th roots of unity z_k = e^{2 pi i k/N}.
/// Cayley images satisfy phi(-1) = fhat(infinity) = 0.
struct CircleSymbol {
  CVec samples;
  std::string source;

  Index size() const { return samples.size(); }
  /// Sample at z = -1 (requires an even sample count).
  Complex at_minus_one() const { return samples(samples.size() / 2); }
};

/// phi(z) = fhat(i (z-1)/(z+1)) on the roots of unity, for the dim-1 fiber
/// of f frozen at the boundary. Frequencies beyond the quadrature's Nyquist
/// range are taken as zero after verifying that fhat has decayed there.
CircleSymbol cayley_symbol(const Symbol& f, Index sample_count,
                           const QuadratureSpec& quad = {});

CircleSymbol constant_circle_symbol(Complex c, Index sample_count);
/// phi(z) = z^power.
CircleSymbol monomial_circle_symbol(int power, Index sample_count);

/// Finite section of T_phi on the Hardy basis: entries are the Fourier
/// coefficients of the circle symbol, T(j,k) = phihat(j-k).
struct ToeplitzMatrix {
  Index size = 0;
  CVec coeff;  // phihat(m) at index m + size - 1, |m| < size

  Complex operator()(Index j, Index k) const { return coeff(j - k + size - 1); }
  CMat dense() const;
};

ToeplitzMatrix toeplitz_assemble(const CircleSymbol& phi, Index section_size);

Real toeplitz_norm(const ToeplitzMatrix& t);
Vec toeplitz_singular_values(const ToeplitzMatrix& t);

/// Half convolution xi -> integral_0^inf f(s-w) xi(w) dw on the half-line grid.
DiscreteOperator half_convolution_assemble(const Symbol& f, const HalfSpaceGrid& grid);

/// Singular values (descending) of the finite-section commutator
/// T_phi T_psi - T_psi T_phi; the decay profile is the compactness signature.
Vec commutator_singular_values(const CircleSymbol& phi, const CircleSymbol& psi,
                               Index section_size);

/// Compares the half-convolution operator with the finite Toeplitz section
/// of its Cayley symbol: norms and the ten largest singular values.
struct EquivalenceReport {
  std::string symbol_id;
  Index section_size = 0;
  Real half_convolution_norm = 0.0;
  Real toeplitz_section_norm = 0.0;
  Real norm_gap_rel = 0.0;
  Vec leading_singular_half;   // up to 10
  Vec leading_singular_toeplitz;
  Real max_singular_gap_rel = 0.0;
  Real cayley_at_minus_one = 0.0;
};

EquivalenceReport equivalence_report(const Symbol& f, const HalfSpaceGrid& grid,
                                     Index section_size,
                                     const QuadratureSpec& quad = {});

std::string to_json(const EquivalenceReport& report);

}  // namespace semiclass
