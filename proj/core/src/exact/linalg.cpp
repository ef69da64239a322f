#include "schemekit/exact/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "schemekit/error.hpp"

namespace schemekit::exact {

namespace {

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const T inv = T(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const T factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::vector<Matrix<T>> kernel_basis(const Matrix<T>& m) {
  Matrix<T> a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Matrix<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix<T> v(m.cols(), 1);
    v(free, 0) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer lcm_of_denominators(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Integer l = lcm_of_denominators(m.row(i));
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m(i, j);
      a[i * cols + j] = q.get_num() * (l / q.get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::vector<RationalMatrix> nullspace(const RationalMatrix& m) { return kernel_basis(m); }

std::size_t rank(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  return rref(a).size();
}

std::vector<ScalarMatrix> nullspace(const ScalarMatrix& m) { return kernel_basis(m); }

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

namespace {

struct Eigenspace {
  RationalMatrix basis;  // n x r
  std::vector<long> eigenvalues;
};

RationalMatrix hstack(const RationalMatrix& v, const std::vector<RationalMatrix>& coeffs) {
  RationalMatrix c(v.cols(), coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (std::size_t i = 0; i < v.cols(); ++i) c(i, k) = coeffs[k](i, 0);
  return v * c;
}

long max_abs_row_sum(const RationalMatrix& a) {
  Rational best(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s(0);
    for (const auto& q : a.row(i)) s += abs(q);
    if (s > best) best = s;
  }
  return floor(best).get_si();
}

RationalMatrix projector_from_basis(const RationalMatrix& v) {
  const std::size_t n = v.rows();
  std::vector<std::vector<Rational>> ortho;
  for (std::size_t k = 0; k < v.cols(); ++k) {
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = v(i, k);
    for (const auto& u : ortho) {
      Rational dot_wu(0), dot_uu(0);
      for (std::size_t i = 0; i < n; ++i) {
        dot_wu += w[i] * u[i];
        dot_uu += u[i] * u[i];
      }
      const Rational f = dot_wu / dot_uu;
      for (std::size_t i = 0; i < n; ++i) w[i] -= f * u[i];
    }
    ortho.push_back(std::move(w));
  }
  RationalMatrix e(n, n);
  for (const auto& u : ortho) {
    Rational norm(0);
    for (const auto& x : u) norm += x * x;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(u[i]) == 0) continue;
      const Rational ui = u[i] / norm;
      for (std::size_t j = 0; j < n; ++j) e(i, j) += ui * u[j];
    }
  }
  return e;
}

}  // namespace

std::vector<EigenProjector> common_eigenspace(std::span<const RationalMatrix> mats, std::size_t n) {
  std::vector<Eigenspace> spaces{{RationalMatrix::identity(n), {}}};
  for (const auto& a : mats) {
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("common_eigenspace: size mismatch");
    const long bound = max_abs_row_sum(a);
    std::vector<Eigenspace> next;
    for (const auto& space : spaces) {
      const RationalMatrix av = a * space.basis;
      const std::size_t dim = space.basis.cols();
      std::size_t found = 0;
      for (long lambda = bound; lambda >= -bound && found < dim; --lambda) {
        RationalMatrix k = av - space.basis * Rational(lambda);
        auto ker = nullspace(k);
        if (ker.empty()) continue;
        found += ker.size();
        auto eig = space.eigenvalues;
        eig.push_back(lambda);
        next.push_back({hstack(space.basis, ker), std::move(eig)});
      }
      if (found != dim)
        throw Error(ErrorKind::NonIntegerSpectrum,
                    "integer eigenvalue search accounted for " + std::to_string(found) + " of " + std::to_string(dim) +
                        " dimensions");
    }
    spaces = std::move(next);
  }
  std::sort(spaces.begin(), spaces.end(),
            [](const Eigenspace& x, const Eigenspace& y) { return x.eigenvalues > y.eigenvalues; });
  std::vector<EigenProjector> out;
  out.reserve(spaces.size());
  for (const auto& s : spaces) out.push_back({projector_from_basis(s.basis), s.eigenvalues, s.basis.cols()});
  return out;
}

std::vector<RationalMatrix> common_eigenspace_projectors(std::span<const RationalMatrix> mats, std::size_t n) {
  std::vector<RationalMatrix> out;
  for (auto& p : common_eigenspace(mats, n)) out.push_back(std::move(p.projector));
  return out;
}

}  // namespace schemekit::exact
