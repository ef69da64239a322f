#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "schemekit/exact/matrix.hpp"
#include "schemekit/exact/rational.hpp"
#include "schemekit/exact/scalar.hpp"

namespace schemekit::exact {

// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled
// integer matrix.
std::size_t rank(const RationalMatrix& m);

// Right kernel basis as column vectors; size = cols - rank.
std::vector<RationalMatrix> nullspace(const RationalMatrix& m);

// Same contract over an exact field type (Gauss-Jordan).
std::size_t rank(const ScalarMatrix& m);
std::vector<ScalarMatrix> nullspace(const ScalarMatrix& m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Minimal common eigenspace projectors of symmetric, pairwise commuting
// integer matrices with integer spectra. Eigenvalues are searched in [-B, B]
// where B is the largest absolute row sum; each projector is built from an
// exact Gram-Schmidt basis V of its eigenspace as sum_v v v^T / (v^T v).
// Projectors are returned in descending lexicographic order of their
// eigenvalue vectors (lambda_1, ..., lambda_r) over the input matrices.
// Throws Error(NonIntegerSpectrum) when the integer search cannot account
// for the full dimension of some eigenspace.
struct EigenProjector {
  RationalMatrix projector;
  std::vector<long> eigenvalues;  // one per input matrix
  std::size_t rank = 0;
};
std::vector<EigenProjector> common_eigenspace(std::span<const RationalMatrix> mats, std::size_t n);

std::vector<RationalMatrix> common_eigenspace_projectors(std::span<const RationalMatrix> mats, std::size_t n);

}  // namespace schemekit::exact
