#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "schemekit/exact.hpp"

namespace schemekit::scheme {

using exact::FieldPtr;
using exact::Rational;
using exact::RationalMatrix;
using exact::Scalar;
using exact::ScalarMatrix;

// Partition of X x X into classes 0..d given as an n x n label grid.
struct RelationPartition {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<int> rel;  // row-major, n * n

  int operator()(std::size_t x, std::size_t y) const { return rel[x * n + y]; }
  friend bool operator==(const RelationPartition&, const RelationPartition&) = default;
};

// A validated symmetric association scheme. Idempotents are in canonical
// order: eigenvalue vectors (p_1(j), ..., p_d(j)) descending
// lexicographically, which puts E_0 first and, for distance-regular graphs,
// orders eigenvalues of A_1 from largest to smallest.
struct SchemeCore {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<long> p;  // p_{i,j}^k at index (i*(d+1) + j)*(d+1) + k
  std::vector<long> valencies;
  std::vector<long> multiplicities;
  std::vector<ScalarMatrix> idempotents;
  ScalarMatrix P;  // P(j, i) = p_i(j): eigenvalue of A_i on E_j
  ScalarMatrix Q;  // Q(i, j) = q_j(i), so E_j = (1/n) sum_i Q(i, j) A_i
  FieldPtr field;  // null when the spectrum is rational
  RelationPartition relations;

  long intersection(std::size_t i, std::size_t j, std::size_t k) const { return p[(i * (d + 1) + j) * (d + 1) + k]; }
  const Scalar& eigenvalue(std::size_t relation, std::size_t idempotent) const { return P(idempotent, relation); }
  const Scalar& dual_eigenvalue(std::size_t idempotent, std::size_t relation) const { return Q(relation, idempotent); }
};

// Krein parameters q_{i,j}^k with E_i o E_j = (1/n) sum_k q_{i,j}^k E_k.
struct KreinTensor {
  std::size_t d = 0;
  std::vector<Scalar> q;

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return q[(i * (d + 1) + j) * (d + 1) + k]; }
};

RationalMatrix adjacency_matrix(const RelationPartition& rp, std::size_t i);

// Checks the scheme axioms and computes all structure constants. Throws
// Error(NotAScheme) with axiom id "labels", "identity", "symmetry" or
// "closure"; Error(ClassCountMismatch) if the common eigenspaces do not number
// d + 1; Error(NonIntegerSpectrum) for irrational spectra that admit no
// generating character field.
SchemeCore validate_scheme(const RelationPartition& rp);

// B_i with (B_i)(k, j) = p_{i,j}^k, the left-regular representation of A_i.
exact::Matrix<long> intersection_numbers(const SchemeCore& sc, std::size_t i);

KreinTensor krein_parameters(const SchemeCore& sc);

// Per idempotent: E_j == (1/n) sum_i q_j(i) A_i entrywise.
std::vector<bool> dual_eigen_consistency(const SchemeCore& sc);

// New idempotent j is old idempotent perm[j].
SchemeCore relabel_idempotents(const SchemeCore& sc, std::span<const std::size_t> perm);
KreinTensor relabel(const KreinTensor& kt, std::span<const std::size_t> perm);

}  // namespace schemekit::scheme
