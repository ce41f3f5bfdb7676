#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "wittartin/rational.hpp"

namespace wittartin {

/// Exact test; Eigen's isZero() is tolerance based and unsuitable for rationals.
template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

/// Reduced row echelon form with smallest-index pivoting.
struct RowEchelon {
  Matrix reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

RowEchelon rref(Matrix a);
Index rank(const Matrix& a);
Rational determinant(const Matrix& a);
/// Exact inverse; throws Error(Singular).
Matrix inverse(const Matrix& a);
/// Coefficients c with basis * c == v, if any. Columns of `basis` must be independent.
std::optional<Vector> coordinates(const Matrix& basis, const Vector& v);
/// Horizontal concatenation; all blocks must share the row count `rows`.
Matrix hconcat(Index rows, std::initializer_list<const Matrix*> blocks);

/// A linear subspace of Q^n, stored as the reduced column echelon form of a
/// spanning set. Two subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() : Subspace(0) {}
  explicit Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  static Subspace zero(Index ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(Index ambient_dim);
  /// Span of the columns of `vectors` (dependent columns allowed).
  static Subspace span(const Matrix& vectors);
  /// Span of coordinate vectors e_offset .. e_{offset+count-1}.
  static Subspace coordinate(Index ambient_dim, Index offset, Index count);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.cols() == b.basis_.cols() && a.basis_ == b.basis_;
  }

 private:
  Index ambient_;
  Matrix basis_;
};

/// {v : A v = 0}. rank(A) + dim = cols(A).
Subspace kernel(const Matrix& a);
/// A · U for a linear map A with cols(A) == ambient(U).
Subspace image(const Matrix& a, const Subspace& u);
Subspace image(const Matrix& a);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace sum(std::initializer_list<Subspace> parts);
Subspace intersect(const Subspace& u, const Subspace& v);
/// True iff the dimensions of `parts` add up to the dimension of their sum.
bool is_direct_sum(std::span<const Subspace> parts);
bool is_direct_sum(std::initializer_list<Subspace> parts);

/// Bilinear form on Q^n given by its Gram matrix. Symmetry and antisymmetry
/// are queried, never assumed.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram);

  Index ambient_dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational operator()(const Vector& x, const Vector& y) const;

  bool is_symmetric() const;
  bool is_antisymmetric() const;
  /// Leading principal minors test; only meaningful for symmetric forms.
  bool is_positive_definite() const;
  bool is_nondegenerate() const;

 private:
  Matrix gram_;
};

/// Complement of U in W, orthogonal for `ip`. Throws Error(NotContained) if
/// U is not inside W, Error(NotPositiveDefinite) if ip fails the minors test.
Subspace orth_complement(const Subspace& u, const Subspace& w, const BilinearForm& ip);

/// Gram matrix of `form` on the canonical basis of U.
Matrix gram_on(const BilinearForm& form, const Subspace& u);
/// Gram matrix of `form` on the columns of `basis`.
Matrix gram_on(const BilinearForm& form, const Matrix& basis);
/// Cross block: entry (i,j) = form(left_i, right_j).
Matrix gram_between(const BilinearForm& form, const Matrix& left, const Matrix& right);

/// Vectors of U that pair to zero with every vector of W under `form`.
Subspace form_orthogonal(const BilinearForm& form, const Subspace& w, const Subspace& u);
/// True iff the restriction of `form` to U is nondegenerate.
bool is_nondegenerate_on(const BilinearForm& form, const Subspace& u);
/// True iff `form` vanishes on U x V.
bool is_orthogonal(const BilinearForm& form, const Subspace& u, const Subspace& v);

}  // namespace wittartin
