#pragma once

#include <string>

#include "semiclass/operators.hpp"
#include "semiclass/spectrum.hpp"

namespace semiclass {

/// Locale-independent shortest round-trip formatting used by every emitter,
/// so identical numbers always produce identical bytes.
std::string format_real(Real x);

/// Node coordinates plus re/im columns; dim 1 writes x,sigma,re,im.
void write_spectrum_csv(const SampledSpectrum& spectrum, const std::string& path);

/// Binary dump: "SCOP", u32 version, u64 rows, u64 cols, then row-major
/// complex doubles (re, im), all little-endian.
void write_operator_binary(const DiscreteOperator& op, const std::string& path);
CMat read_operator_binary(const std::string& path);

}  // namespace semiclass
