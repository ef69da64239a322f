#include "schemekit/qpoly.hpp"

#include <algorithm>
#include <string>

#include "schemekit/error.hpp"

namespace schemekit::qpoly {

namespace {

std::string krein_name(std::size_t i, std::size_t j, std::size_t k) {
  return "q_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(k);
}

std::optional<std::vector<std::size_t>> grow(const KreinTensor& kt, std::size_t s) {
  const std::size_t D = kt.d + 1;
  std::vector<std::size_t> perm{0, s};
  std::vector<bool> used(D, false);
  used[0] = used[s] = true;
  while (perm.size() < D) {
    const std::size_t cur = perm.back();
    std::optional<std::size_t> next;
    for (std::size_t l = 0; l < D; ++l) {
      if (used[l] || kt(s, cur, l).sign() <= 0) continue;
      if (next) return std::nullopt;
      next = l;
    }
    if (!next) return std::nullopt;
    used[*next] = true;
    perm.push_back(*next);
  }
  return perm;
}

}  // namespace

bool is_qpolynomial(const KreinTensor& kt, std::span<const std::size_t> perm) {
  const std::size_t D = kt.d + 1;
  if (perm.size() != D || perm[0] != 0) return false;
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j)
      for (std::size_t k = 0; k < D; ++k) {
        const int s = kt(perm[i], perm[j], perm[k]).sign();
        if ((k > i + j || i > j + k || j > i + k) && s != 0) return false;
        if (k == i + j && s <= 0) return false;
      }
  return true;
}

std::vector<QPolyOrdering> find_qpoly_orderings(const KreinTensor& kt, const SchemeCore& sc) {
  if (kt.d != sc.d) throw Error(ErrorKind::ClassCountMismatch, "Krein tensor and scheme disagree on d");
  std::vector<QPolyOrdering> out;
  for (std::size_t s = 1; s <= kt.d; ++s) {
    const auto perm = grow(kt, s);
    if (!perm || !is_qpolynomial(kt, *perm)) continue;
    auto ord = abc_sequences(kt, *perm);
    if (ord.m != Rational(sc.multiplicities[s])) throw std::logic_error("find_qpoly_orderings: m != rank(E_1)");
    out.push_back(std::move(ord));
  }
  return out;
}

QPolyOrdering abc_sequences(const KreinTensor& kt, std::span<const std::size_t> perm) {
  const std::size_t D = kt.d + 1;
  if (perm.size() != D || D < 2) throw Error(ErrorKind::NotTridiagonal, "ordering must list all d + 1 >= 2 idempotents");
  std::vector<bool> seen(D, false);
  for (std::size_t v : perm) {
    if (v >= D || seen[v]) throw Error(ErrorKind::NotTridiagonal, "ordering is not a permutation");
    seen[v] = true;
  }
  if (perm[0] != 0) throw Error(ErrorKind::NotTridiagonal, "ordering must fix E_0");
  const std::size_t one = perm[1];
  auto q = [&](std::size_t j, std::size_t k) -> const exact::Scalar& { return kt(one, perm[j], perm[k]); };
  for (std::size_t j = 0; j < D; ++j)
    for (std::size_t k = 0; k < D; ++k)
      if ((j > k + 1 || k > j + 1) && !q(j, k).is_zero())
        throw Error(ErrorKind::NotTridiagonal, krein_name(1, j, k) + " = " + q(j, k).to_string());
  QPolyOrdering ord;
  ord.perm.assign(perm.begin(), perm.end());
  ord.m = q(1, 0).to_rational();
  ord.a_star.resize(D);
  ord.b_star.resize(D);
  ord.c_star.resize(D);
  for (std::size_t i = 0; i < D; ++i) {
    ord.a_star[i] = q(i, i).to_rational();
    ord.b_star[i] = i + 1 < D ? q(i + 1, i).to_rational() : Rational(0);
    ord.c_star[i] = i > 0 ? q(i - 1, i).to_rational() : Rational(0);
    if (ord.a_star[i] + ord.b_star[i] + ord.c_star[i] != ord.m)
      throw Error(ErrorKind::NotTridiagonal, "a_" + std::to_string(i) + "* + b* + c* != m");
    if (i + 1 < D && sgn(ord.b_star[i]) <= 0) throw Error(ErrorKind::NotTridiagonal, "b_" + std::to_string(i) + "* is not positive");
    if (i > 0 && sgn(ord.c_star[i]) <= 0) throw Error(ErrorKind::NotTridiagonal, "c_" + std::to_string(i) + "* is not positive");
  }
  if (ord.a_star[0] != 0 || ord.c_star[1] != 1) throw std::logic_error("abc_sequences: a_0* or c_1* off");
  return ord;
}

}  // namespace schemekit::qpoly
