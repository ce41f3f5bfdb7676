#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittartin/error.hpp"
#include "wittartin/exactlin.hpp"

namespace wittartin {

/// Finite-dimensional Lie algebra given by structure constants,
/// [e_i, e_j] = sum_k c(i,j,k) e_k. Antisymmetry and the Jacobi identity are
/// checked on construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// `constants` is row-major over (i, j, k). Throws Error(InvalidAlgebra)
  /// naming the first failing index pair or triple.
  LieAlgebra(Index dim, std::vector<Rational> constants);

  /// Describes the first antisymmetry or Jacobi failure, if any.
  static std::optional<std::string> find_defect(Index dim, const std::vector<Rational>& constants);

  Index dim() const { return dim_; }
  const Rational& c(Index i, Index j, Index k) const { return constants_[flat(i, j, k)]; }
  const std::vector<Rational>& constants() const { return constants_; }

  template <class Scalar>
  VectorX<Scalar> bracket(const VectorX<Scalar>& x, const VectorX<Scalar>& y) const;

 private:
  std::size_t flat(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((i * dim_ + j) * dim_ + k);
  }

  Index dim_ = 0;
  std::vector<Rational> constants_;
};

LieAlgebra so3();
LieAlgebra abelian(Index dim);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Matrix of y -> [x, y].
template <class Scalar>
MatrixX<Scalar> ad_matrix(const LieAlgebra& algebra, const VectorX<Scalar>& x) {
  const Index n = algebra.dim();
  MatrixX<Scalar> ad = MatrixX<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (x(i) == Scalar(0)) continue;
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Rational& c = algebra.c(i, j, k);
        if (c != 0) ad(k, j) += x(i) * scalar_cast<Scalar>(c);
      }
  }
  return ad;
}

/// Matrix of lambda -> ad*_x lambda with <ad*_x lambda, y> = <lambda, [x, y]>,
/// i.e. the transpose of ad_matrix.
template <class Scalar>
MatrixX<Scalar> coad_matrix(const LieAlgebra& algebra, const VectorX<Scalar>& x) {
  return ad_matrix(algebra, x).transpose();
}

template <class Scalar>
VectorX<Scalar> LieAlgebra::bracket(const VectorX<Scalar>& x, const VectorX<Scalar>& y) const {
  return ad_matrix(*this, x) * y;
}

/// ad*_x lambda.
Vector coadjoint(const LieAlgebra& algebra, const Vector& x, const Vector& lambda);

/// First basis pair whose bracket leaves `sub`, if any.
std::optional<std::pair<Index, Index>> closure_defect(const LieAlgebra& algebra, const Subspace& sub);
bool is_subalgebra(const LieAlgebra& algebra, const Subspace& sub);

/// g_mu = {x : ad*_x mu = 0}.
Subspace stabilizer_of_momentum(const LieAlgebra& algebra, const Vector& mu);
/// {x : <mu, [x, eta]> = 0 for all eta in h}. Throws Error(NotSubalgebra).
Subspace h_perp_mu(const LieAlgebra& algebra, const Subspace& h, const Vector& mu);
/// Stabilizer in h of alpha = mu|_h, computed as h ∩ h_perp_mu.
Subspace h_alpha(const LieAlgebra& algebra, const Subspace& h, const Vector& mu);
/// Stabilizer of alpha computed inside h from the restricted pairing only
/// (the second route to h_alpha).
Subspace stabilizer_in_subalgebra(const LieAlgebra& algebra, const Subspace& h, const Vector& mu);

/// Psi(x, y) = <mu, [x, y]>.
BilinearForm chu_form(const LieAlgebra& algebra, const Vector& mu);
/// B(x, y) = trace(ad_x ad_y).
BilinearForm killing_form(const LieAlgebra& algebra);

/// Basis vector e_i of length n.
Vector unit(Index n, Index i);

}  // namespace wittartin
