#pragma once

#include "fmk/grr.hpp"

#include <string>

namespace fmk {

// -----------------------------------------------------------------------------
// JSON wire format for kernels. All six scalar fields are exact rationals,
// encoded as JSON integers when the denominator is 1 (and the value fits in
// 64 bits), and as reduced strings "p/q" (or "p" for big integers)
// otherwise. "gamma" is a 2g x 2g' row-major array and may be omitted when
// zero.
//
// On the wire, "gamma" holds the *action form* G = J_g . M of the Kunneth
// coefficient matrix M stored in KernelClass: G^T is the matrix of the
// induced Jacobian homomorphism, so e.g. the normalized elliptic Poincare
// kernel is written with gamma = [[1, 0], [0, 1]]. parse/emit convert
// exactly and round-trip bit-for-bit.
// -----------------------------------------------------------------------------

// Canonical bytes: two-space indent, sorted keys, LF, trailing newline.
std::string emit_kernel_json(const KernelClass& e);

// Strict parse of the wire format; throws ParseError with line/field
// diagnostics on malformed input (floats, unreduced fractions, wrong gamma
// shape, unknown fields, ...).
KernelClass parse_kernel_json(const std::string& text);

KernelClass load_kernel_file(const std::string& path);
void save_kernel_file(const std::string& path, const KernelClass& e);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace fmk
