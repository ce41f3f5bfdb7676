#include "wittartin/liecore.hpp"

#include <sstream>

namespace wittartin {

LieAlgebra::LieAlgebra(Index dim, std::vector<Rational> constants) : dim_(dim), constants_(std::move(constants)) {
  if (auto defect = find_defect(dim, constants_)) throw Error(ErrorCode::InvalidAlgebra, *defect);
}

std::optional<std::string> LieAlgebra::find_defect(Index n, const std::vector<Rational>& c) {
  if (n < 0 || c.size() != static_cast<std::size_t>(n * n * n)) {
    return "expected " + std::to_string(n * n * n) + " structure constants, got " + std::to_string(c.size());
  }
  auto at = [&](Index i, Index j, Index k) -> const Rational& {
    return c[static_cast<std::size_t>((i * n + j) * n + k)];
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (at(i, j, k) != -at(j, i, k)) {
          std::ostringstream os;
          os << "antisymmetry fails: c[" << i << "][" << j << "][" << k << "] = " << to_string(at(i, j, k))
             << " but c[" << j << "][" << i << "][" << k << "] = " << to_string(at(j, i, k));
          return os.str();
        }
  // sum over cyclic (i,j,k) of [e_i, [e_j, e_k]] = 0
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k)
        for (Index l = 0; l < n; ++l) {
          Rational total = 0;
          for (Index m = 0; m < n; ++m) {
            total += at(j, k, m) * at(i, m, l) + at(k, i, m) * at(j, m, l) + at(i, j, m) * at(k, m, l);
          }
          if (total != 0) {
            std::ostringstream os;
            os << "Jacobi identity fails for triple (" << i << ", " << j << ", " << k << ") in component " << l;
            return os.str();
          }
        }
  return std::nullopt;
}

LieAlgebra so3() {
  std::vector<Rational> c(27, Rational(0));
  auto set = [&](Index i, Index j, Index k, int v) {
    c[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = v;
    c[static_cast<std::size_t>((j * 3 + i) * 3 + k)] = -v;
  };
  set(0, 1, 2, 1);
  set(1, 2, 0, 1);
  set(2, 0, 1, 1);
  return LieAlgebra(3, std::move(c));
}

LieAlgebra abelian(Index dim) {
  return LieAlgebra(dim, std::vector<Rational>(static_cast<std::size_t>(dim * dim * dim), Rational(0)));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const Index na = a.dim();
  const Index n = na + b.dim();
  std::vector<Rational> c(static_cast<std::size_t>(n * n * n), Rational(0));
  auto put = [&](Index i, Index j, Index k, const Rational& v) { c[static_cast<std::size_t>((i * n + j) * n + k)] = v; };
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < na; ++j)
      for (Index k = 0; k < na; ++k) put(i, j, k, a.c(i, j, k));
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      for (Index k = 0; k < b.dim(); ++k) put(na + i, na + j, na + k, b.c(i, j, k));
  return LieAlgebra(n, std::move(c));
}

Vector coadjoint(const LieAlgebra& algebra, const Vector& x, const Vector& lambda) {
  return coad_matrix(algebra, x) * lambda;
}

std::optional<std::pair<Index, Index>> closure_defect(const LieAlgebra& algebra, const Subspace& sub) {
  if (sub.ambient_dim() != algebra.dim()) throw Error(ErrorCode::AmbientMismatch, "subspace is not in g");
  const Matrix& basis = sub.basis();
  for (Index i = 0; i < sub.dim(); ++i)
    for (Index j = i + 1; j < sub.dim(); ++j) {
      if (!sub.contains(algebra.bracket<Rational>(basis.col(i), basis.col(j)))) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_subalgebra(const LieAlgebra& algebra, const Subspace& sub) { return !closure_defect(algebra, sub); }

BilinearForm chu_form(const LieAlgebra& algebra, const Vector& mu) {
  const Index n = algebra.dim();
  if (mu.size() != n) throw Error(ErrorCode::DimensionMismatch, "mu has wrong length");
  Matrix gram = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (algebra.c(i, j, k) != 0 && mu(k) != 0) gram(i, j) += algebra.c(i, j, k) * mu(k);
  return BilinearForm(std::move(gram));
}

Subspace stabilizer_of_momentum(const LieAlgebra& algebra, const Vector& mu) {
  const Index n = algebra.dim();
  // column i holds ad*_{e_i} mu
  Matrix map(n, n);
  for (Index i = 0; i < n; ++i) map.col(i) = coadjoint(algebra, unit(n, i), mu);
  return kernel(map);
}

Subspace h_perp_mu(const LieAlgebra& algebra, const Subspace& h, const Vector& mu) {
  if (auto bad = closure_defect(algebra, h)) {
    throw Error(ErrorCode::NotSubalgebra, "h is not bracket-closed: basis pair (" + std::to_string(bad->first) +
                                              ", " + std::to_string(bad->second) + ")");
  }
  if (h.dim() == 0) return Subspace::full(algebra.dim());
  // row r: x -> <mu, [x, eta_r]>
  const Matrix psi = chu_form(algebra, mu).gram();
  return kernel((psi * h.basis()).transpose());
}

Subspace h_alpha(const LieAlgebra& algebra, const Subspace& h, const Vector& mu) {
  return intersect(h, h_perp_mu(algebra, h, mu));
}

Subspace stabilizer_in_subalgebra(const LieAlgebra& algebra, const Subspace& h, const Vector& mu) {
  if (h.dim() == 0) return h;
  const Matrix& basis = h.basis();
  const Matrix restricted = basis.transpose() * chu_form(algebra, mu).gram() * basis;
  return image(basis, kernel(restricted.transpose()));
}

BilinearForm killing_form(const LieAlgebra& algebra) {
  const Index n = algebra.dim();
  std::vector<Matrix> ads;
  ads.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) ads.push_back(ad_matrix<Rational>(algebra, unit(n, i)));
  Matrix gram(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) gram(i, j) = (ads[i] * ads[j]).trace();
  return BilinearForm(std::move(gram));
}

Vector unit(Index n, Index i) {
  Vector e = Vector::Zero(n);
  e(i) = 1;
  return e;
}

}  // namespace wittartin
