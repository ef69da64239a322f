#include "schemekit/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "schemekit/error.hpp"

namespace schemekit::scheme {

namespace {

using exact::FieldPtr;
using exact::NumberField;
using exact::QPolynomial;

[[noreturn]] void not_a_scheme(const std::string& axiom, const std::string& what) {
  throw Error(ErrorKind::NotAScheme, axiom + ": " + what);
}

void check_axioms(const RelationPartition& rp) {
  const std::size_t n = rp.n;
  if (n == 0) not_a_scheme("labels", "empty point set");
  if (rp.rel.size() != n * n) not_a_scheme("labels", "relation grid is not n x n");
  std::vector<bool> seen(rp.d + 1, false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int r = rp(x, y);
      if (r < 0 || static_cast<std::size_t>(r) > rp.d)
        not_a_scheme("labels", "label " + std::to_string(r) + " outside 0.." + std::to_string(rp.d));
      seen[r] = true;
      if ((r == 0) != (x == y))
        not_a_scheme("identity", "R_0 differs from the diagonal at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (rp(y, x) != r) not_a_scheme("symmetry", "pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  for (std::size_t i = 0; i <= rp.d; ++i)
    if (!seen[i]) not_a_scheme("labels", "class " + std::to_string(i) + " is empty");
}

// Counts p_{i,j}^k from one representative pair per class, then confirms the
// count is the same for every pair in that class.
std::vector<long> closure_counts(const RelationPartition& rp) {
  const std::size_t n = rp.n;
  const std::size_t D = rp.d + 1;
  std::vector<long> p(D * D * D, 0);
  std::vector<bool> have(D, false);
  std::vector<long> table(D * D);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      const std::size_t k = rp(x, y);
      std::fill(table.begin(), table.end(), 0);
      const int* rx = &rp.rel[x * n];
      const int* ry = &rp.rel[y * n];
      for (std::size_t z = 0; z < n; ++z) ++table[rx[z] * D + ry[z]];
      if (!have[k]) {
        for (std::size_t ij = 0; ij < D * D; ++ij) p[ij * D + k] = table[ij];
        have[k] = true;
        continue;
      }
      for (std::size_t ij = 0; ij < D * D; ++ij)
        if (p[ij * D + k] != table[ij])
          not_a_scheme("closure", "p_{" + std::to_string(ij / D) + "," + std::to_string(ij % D) + "}^" + std::to_string(k) +
                                      " is not constant on R_" + std::to_string(k));
    }
  return p;
}

struct Spectrum {
  FieldPtr field;
  std::vector<std::vector<Scalar>> columns;  // columns[j][i] = q_j(i)
};

bool idempotent_column(const std::vector<Scalar>& w, const std::vector<long>& p, std::size_t D, long n) {
  for (std::size_t l = 0; l < D; ++l) {
    Scalar acc(0);
    for (std::size_t a = 0; a < D; ++a) {
      if (w[a].is_zero()) continue;
      for (std::size_t b = 0; b < D; ++b) {
        const long c = p[(a * D + b) * D + l];
        if (c != 0 && !w[b].is_zero()) acc += w[a] * w[b] * Scalar(c);
      }
    }
    if (acc != w[l] * Scalar(n)) return false;
  }
  return true;
}

// Builds all dual-eigenvalue columns from a single character by the
// three-term Hadamard recurrence w_1 o w_i = c w_{i+1} + a w_i + b w_{i-1}.
// Succeeds exactly when the character's idempotent generates a Q-polynomial
// ordering, in which case every column lies in the character's field.
std::optional<std::vector<std::vector<Scalar>>> grow_columns(const std::vector<Scalar>& character, const std::vector<long>& p,
                                                             const std::vector<long>& k, long n) {
  const std::size_t D = k.size();
  Scalar norm(0);
  for (std::size_t i = 0; i < D; ++i) norm += character[i] * character[i] / Scalar(k[i]);
  if (norm.is_zero()) return std::nullopt;
  const Scalar m = Scalar(n) / norm;
  std::vector<std::vector<Scalar>> w;
  w.emplace_back(D, Scalar(1));
  std::vector<Scalar> u(D);
  for (std::size_t i = 0; i < D; ++i) u[i] = m * character[i] / Scalar(k[i]);
  if (!idempotent_column(u, p, D, n)) return std::nullopt;
  w.push_back(u);
  auto inner = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar acc(0);
    for (std::size_t l = 0; l < D; ++l) acc += Scalar(k[l]) * x[l] * y[l];
    return acc;
  };
  for (std::size_t i = 1; i + 1 < D; ++i) {
    std::vector<Scalar> r(D);
    for (std::size_t l = 0; l < D; ++l) r[l] = u[l] * w[i][l];
    const Scalar a = inner(r, w[i]) / inner(w[i], w[i]);
    const Scalar b = inner(r, w[i - 1]) / inner(w[i - 1], w[i - 1]);
    for (std::size_t l = 0; l < D; ++l) r[l] -= a * w[i][l] + b * w[i - 1][l];
    std::size_t lead = 0;
    while (lead < D && r[lead].is_zero()) ++lead;
    if (lead == D) return std::nullopt;
    Scalar s(0);
    for (std::size_t x = 0; x < D; ++x) {
      if (r[x].is_zero()) continue;
      for (std::size_t y = 0; y < D; ++y) {
        const long c = p[(x * D + y) * D + lead];
        if (c != 0) s += r[x] * r[y] * Scalar(c);
      }
    }
    if (s.is_zero()) return std::nullopt;
    const Scalar scale = s / (Scalar(n) * r[lead]);
    for (auto& v : r) v /= scale;
    if (!idempotent_column(r, p, D, n)) return std::nullopt;
    w.push_back(std::move(r));
  }
  for (std::size_t l = 0; l < D; ++l) {
    Scalar acc(0);
    for (const auto& col : w) acc += col[l];
    if (acc != Scalar(l == 0 ? n : 0)) return std::nullopt;
  }
  return w;
}

std::vector<RationalMatrix> intersection_matrices(const std::vector<long>& p, std::size_t D) {
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < D; ++i) {
    RationalMatrix b(D, D);
    for (std::size_t kk = 0; kk < D; ++kk)
      for (std::size_t j = 0; j < D; ++j) b(kk, j) = Rational(p[(i * D + j) * D + kk]);
    out.push_back(std::move(b));
  }
  return out;
}

// Spectrum of the Bose-Mesner algebra from its regular representation when
// the eigenvalues are not all integers.
Spectrum algebraic_spectrum(const std::vector<long>& p, const std::vector<long>& k, long n) {
  const std::size_t D = k.size();
  const auto B = intersection_matrices(p, D);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> coef(-7, 7);
  RationalMatrix M = B.size() > 1 ? B[1] : B[0];
  QPolynomial chi = exact::characteristic_polynomial(M);
  for (int attempt = 0; attempt < 64 && !exact::is_squarefree(chi); ++attempt) {
    M = RationalMatrix(D, D);
    for (std::size_t i = 1; i < D; ++i) M += B[i] * Rational(coef(rng));
    chi = exact::characteristic_polynomial(M);
  }
  if (!exact::is_squarefree(chi))
    throw Error(ErrorKind::NonIntegerSpectrum, "no element of the algebra separates the idempotents");

  auto factors = exact::factor_real_rooted(chi);
  std::stable_sort(factors.begin(), factors.end(),
                   [](const auto& a, const auto& b) { return a.poly.degree() > b.poly.degree(); });
  for (const auto& f : factors) {
    FieldPtr field;
    Scalar alpha;
    if (f.poly.degree() == 1) {
      alpha = Scalar(Rational(-f.poly[0]));
    } else {
      field = std::make_shared<NumberField>(f.poly, f.roots.back());
      alpha = Scalar::generator(field);
    }
    exact::ScalarMatrix shifted(D, D);
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) shifted(r, c) = Scalar(M(r, c)) - (r == c ? alpha : Scalar(0));
    const auto kernel = exact::nullspace(shifted);
    if (kernel.size() != 1) continue;
    const auto& v = kernel.front();
    std::size_t lead = 0;
    while (v(lead, 0).is_zero()) ++lead;
    std::vector<Scalar> character(D);
    for (std::size_t i = 0; i < D; ++i) {
      Scalar acc(0);
      for (std::size_t c = 0; c < D; ++c)
        if (B[i](lead, c) != 0) acc += Scalar(B[i](lead, c)) * v(c, 0);
      character[i] = acc / v(lead, 0);
    }
    if (auto cols = grow_columns(character, p, k, n)) return {field, std::move(*cols)};
  }
  throw Error(ErrorKind::NonIntegerSpectrum,
              "irrational eigenvalues and no idempotent generates the dual algebra by the three-term recurrence");
}

Spectrum rational_spectrum(const RelationPartition& rp) {
  std::vector<RationalMatrix> mats;
  for (std::size_t i = 1; i <= rp.d; ++i) mats.push_back(adjacency_matrix(rp, i));
  const auto eig = exact::common_eigenspace(mats, rp.n);
  if (eig.size() != rp.d + 1)
    throw Error(ErrorKind::ClassCountMismatch,
                std::to_string(eig.size()) + " common eigenspaces for " + std::to_string(rp.d) + " classes");
  Spectrum s;
  for (const auto& e : eig) {
    // q_j(i) = n (E_j)_{xy} for any (x,y) in R_i; read it off the projector.
    std::vector<Scalar> col(rp.d + 1);
    std::vector<bool> set(rp.d + 1, false);
    for (std::size_t x = 0; x < rp.n; ++x)
      for (std::size_t y = 0; y < rp.n; ++y) {
        const int r = rp(x, y);
        if (set[r]) continue;
        col[r] = Scalar(Rational(e.projector(x, y) * static_cast<long>(rp.n)));
        set[r] = true;
      }
    s.columns.push_back(std::move(col));
  }
  return s;
}

[[noreturn]] void internal(const std::string& what) { throw std::logic_error("validate_scheme: " + what); }

}  // namespace

RationalMatrix adjacency_matrix(const RelationPartition& rp, std::size_t i) {
  RationalMatrix a(rp.n, rp.n);
  for (std::size_t x = 0; x < rp.n; ++x)
    for (std::size_t y = 0; y < rp.n; ++y)
      if (rp(x, y) == static_cast<int>(i)) a(x, y) = 1;
  return a;
}

SchemeCore validate_scheme(const RelationPartition& rp) {
  check_axioms(rp);
  SchemeCore sc;
  sc.n = rp.n;
  sc.d = rp.d;
  sc.relations = rp;
  const std::size_t D = rp.d + 1;
  const long n = static_cast<long>(rp.n);
  sc.p = closure_counts(rp);
  sc.valencies.resize(D);
  for (std::size_t i = 0; i < D; ++i) sc.valencies[i] = sc.p[(i * D + i) * D + 0];

  Spectrum spec;
  try {
    spec = rational_spectrum(rp);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonIntegerSpectrum) throw;
    spec = algebraic_spectrum(sc.p, sc.valencies, n);
  }
  if (spec.columns.size() != D)
    throw Error(ErrorKind::ClassCountMismatch, std::to_string(spec.columns.size()) + " idempotents for d = " + std::to_string(rp.d));
  sc.field = spec.field;

  // Characters p_i(j) = k_i q_j(i) / m_j, then canonical order.
  std::vector<std::vector<Scalar>> chars(D, std::vector<Scalar>(D));
  for (std::size_t j = 0; j < D; ++j) {
    const Scalar& mj = spec.columns[j][0];
    if (!mj.is_rational() || !exact::is_integer(mj.to_rational()) || mj.sign() <= 0) internal("non-integral multiplicity");
    for (std::size_t i = 0; i < D; ++i) chars[j][i] = Scalar(sc.valencies[i]) * spec.columns[j][i] / mj;
  }
  std::vector<std::size_t> order(D);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 1; i < D; ++i) {
      const int s = (chars[a][i] - chars[b][i]).sign();
      if (s != 0) return s > 0;
    }
    return false;
  });

  sc.P = ScalarMatrix(D, D);
  sc.Q = ScalarMatrix(D, D);
  for (std::size_t j = 0; j < D; ++j) {
    const std::size_t src = order[j];
    sc.multiplicities.push_back(mpz_class(spec.columns[src][0].to_rational()).get_si());
    for (std::size_t i = 0; i < D; ++i) {
      sc.P(j, i) = chars[src][i];
      sc.Q(i, j) = spec.columns[src][i];
    }
  }
  const Scalar inv_n = Scalar(Rational(1, n));
  for (std::size_t j = 0; j < D; ++j) {
    std::vector<Scalar> entries(rp.n * rp.n);
    std::vector<Scalar> by_class(D);
    for (std::size_t i = 0; i < D; ++i) by_class[i] = sc.Q(i, j) * inv_n;
    for (std::size_t xy = 0; xy < rp.n * rp.n; ++xy) entries[xy] = by_class[rp.rel[xy]];
    sc.idempotents.emplace_back(rp.n, rp.n, std::move(entries));
  }

  // Invariants.
  if (std::accumulate(sc.valencies.begin(), sc.valencies.end(), 0L) != n) internal("valencies do not sum to n");
  if (std::accumulate(sc.multiplicities.begin(), sc.multiplicities.end(), 0L) != n) internal("multiplicities do not sum to n");
  const ScalarMatrix PQ = sc.P * sc.Q;
  if (PQ != ScalarMatrix::identity(D) * Scalar(n)) internal("PQ != nI");
  for (std::size_t j = 0; j < D; ++j) {
    const auto& E = sc.idempotents[j];
    std::vector<Scalar> sums(D);
    for (std::size_t x = 0; x < rp.n; ++x)
      for (std::size_t y = 0; y < rp.n; ++y) {
        std::fill(sums.begin(), sums.end(), Scalar(0));
        for (std::size_t z = 0; z < rp.n; ++z) sums[rp(x, z)] += E(z, y);
        for (std::size_t i = 0; i < D; ++i)
          if (sums[i] != sc.P(j, i) * E(x, y)) internal("A_i E_j != p_i(j) E_j");
      }
    const std::size_t r = sc.field ? exact::rank(E) : [&] {
      RationalMatrix rm(rp.n, rp.n);
      for (std::size_t x = 0; x < rp.n; ++x)
        for (std::size_t y = 0; y < rp.n; ++y) rm(x, y) = E(x, y).to_rational();
      return exact::rank(rm);
    }();
    if (static_cast<long>(r) != sc.multiplicities[j]) internal("rank(E_j) != m_j");
  }
  return sc;
}

exact::Matrix<long> intersection_numbers(const SchemeCore& sc, std::size_t i) {
  if (i > sc.d) throw Error(ErrorKind::IndexOutOfRange, "relation " + std::to_string(i) + " > d = " + std::to_string(sc.d));
  const std::size_t D = sc.d + 1;
  exact::Matrix<long> b(D, D);
  for (std::size_t k = 0; k < D; ++k)
    for (std::size_t j = 0; j < D; ++j) b(k, j) = sc.intersection(i, j, k);
  return b;
}

KreinTensor krein_parameters(const SchemeCore& sc) {
  const std::size_t D = sc.d + 1;
  const std::size_t N = sc.n * sc.n;
  KreinTensor kt;
  kt.d = sc.d;
  kt.q.assign(D * D * D, Scalar(0));
  const Scalar n(static_cast<long>(sc.n));
  std::vector<Scalar> prod(N);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = i; j < D; ++j) {
      const auto ei = sc.idempotents[i].data();
      const auto ej = sc.idempotents[j].data();
      for (std::size_t xy = 0; xy < N; ++xy) prod[xy] = ei[xy] * ej[xy];
      for (std::size_t k = 0; k < D; ++k) {
        // trace((E_i o E_j) E_k) with E_k symmetric.
        const auto ek = sc.idempotents[k].data();
        Scalar tr(0);
        for (std::size_t xy = 0; xy < N; ++xy)
          if (!prod[xy].is_zero()) tr += prod[xy] * ek[xy];
        const Scalar q = n * tr / Scalar(sc.multiplicities[k]);
        if (q.sign() < 0)
          throw Error(ErrorKind::NegativeKrein, "q_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(k) + " = " + q.to_string());
        kt.q[(i * D + j) * D + k] = q;
        kt.q[(j * D + i) * D + k] = q;
      }
      // E_i o E_j == (1/n) sum_k q_{i,j}^k E_k.
      for (std::size_t xy = 0; xy < N; ++xy) {
        Scalar acc(0);
        for (std::size_t k = 0; k < D; ++k) {
          const Scalar& q = kt.q[(i * D + j) * D + k];
          if (!q.is_zero()) acc += q * sc.idempotents[k].data()[xy];
        }
        if (acc != prod[xy] * n) throw std::logic_error("krein_parameters: reconstruction mismatch");
      }
    }
  return kt;
}

std::vector<bool> dual_eigen_consistency(const SchemeCore& sc) {
  const std::size_t D = sc.d + 1;
  std::vector<bool> out(D, true);
  const Scalar inv_n = Scalar(Rational(1, static_cast<long>(sc.n)));
  for (std::size_t j = 0; j < D; ++j) {
    const auto& E = sc.idempotents[j];
    for (std::size_t x = 0; x < sc.n && out[j]; ++x)
      for (std::size_t y = 0; y < sc.n; ++y) {
        Scalar acc(0);
        for (std::size_t i = 0; i < D; ++i)
          if (sc.relations(x, y) == static_cast<int>(i)) acc += sc.Q(i, j);
        if (acc * inv_n != E(x, y)) {
          out[j] = false;
          break;
        }
      }
  }
  return out;
}

SchemeCore relabel_idempotents(const SchemeCore& sc, std::span<const std::size_t> perm) {
  const std::size_t D = sc.d + 1;
  if (perm.size() != D) throw Error(ErrorKind::IndexOutOfRange, "permutation length");
  SchemeCore out = sc;
  for (std::size_t j = 0; j < D; ++j) {
    const std::size_t src = perm[j];
    if (src >= D) throw Error(ErrorKind::IndexOutOfRange, "permutation entry " + std::to_string(src));
    out.idempotents[j] = sc.idempotents[src];
    out.multiplicities[j] = sc.multiplicities[src];
    for (std::size_t i = 0; i < D; ++i) {
      out.P(j, i) = sc.P(src, i);
      out.Q(i, j) = sc.Q(i, src);
    }
  }
  return out;
}

KreinTensor relabel(const KreinTensor& kt, std::span<const std::size_t> perm) {
  const std::size_t D = kt.d + 1;
  if (perm.size() != D) throw Error(ErrorKind::IndexOutOfRange, "permutation length");
  KreinTensor out = kt;
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j)
      for (std::size_t k = 0; k < D; ++k) out.q[(i * D + j) * D + k] = kt(perm[i], perm[j], perm[k]);
  return out;
}

}  // namespace schemekit::scheme
