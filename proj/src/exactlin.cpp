#include "wittartin/exactlin.hpp"

#include <utility>

#include "wittartin/error.hpp"

namespace wittartin {

RowEchelon rref(Matrix a) {
  RowEchelon out;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    const Rational inv = 1 / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational factor = a(i, c);
      for (Index j = c; j < cols; ++j) {
        if (a(r, j) != 0) a(i, j) -= factor * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

Index rank(const Matrix& a) { return rref(a).rank(); }

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  Matrix m = a;
  const Index n = m.rows();
  Rational det = 1;
  for (Index c = 0; c < n; ++c) {
    Index pivot = -1;
    for (Index i = c; i < n; ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational factor = m(i, c) / m(c, c);
      for (Index j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const Index n = a.rows();
  Matrix aug(n, 2 * n);
  aug << a, Matrix::Identity(n, n);
  RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots.back() >= n)) throw Error(ErrorCode::Singular, "matrix is singular");
  return e.reduced.rightCols(n);
}

std::optional<Vector> coordinates(const Matrix& basis, const Vector& v) {
  if (basis.rows() != v.size()) throw Error(ErrorCode::DimensionMismatch, "coordinates: length mismatch");
  const Index k = basis.cols();
  Matrix aug(basis.rows(), k + 1);
  aug << basis, v;
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  Vector c = Vector::Zero(k);
  for (Index i = 0; i < e.rank(); ++i) c(e.pivots[i]) = e.reduced(i, k);
  return c;
}

Matrix hconcat(Index rows, std::initializer_list<const Matrix*> blocks) {
  Index cols = 0;
  for (const Matrix* b : blocks) {
    if (b->rows() != rows) throw Error(ErrorCode::DimensionMismatch, "hconcat: row count mismatch");
    cols += b->cols();
  }
  Matrix out(rows, cols);
  Index at = 0;
  for (const Matrix* b : blocks) {
    out.middleCols(at, b->cols()) = *b;
    at += b->cols();
  }
  return out;
}

Subspace Subspace::full(Index ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::Identity(ambient_dim, ambient_dim);
  return s;
}

Subspace Subspace::span(const Matrix& vectors) {
  Subspace s(vectors.rows());
  if (vectors.cols() == 0) return s;
  RowEchelon e = rref(vectors.transpose());
  s.basis_ = e.reduced.topRows(e.rank()).transpose();
  return s;
}

Subspace Subspace::coordinate(Index ambient_dim, Index offset, Index count) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::Identity(ambient_dim, ambient_dim).middleCols(offset, count);
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "contains: vector length mismatch");
  // Column echelon basis: the pivot of column i is its first nonzero row and
  // every other column vanishes there, so the coefficients are read off.
  Vector rest = v;
  for (Index i = 0; i < basis_.cols(); ++i) {
    Index pivot = 0;
    while (basis_(pivot, i) == 0) ++pivot;
    const Rational coeff = rest(pivot);
    if (coeff != 0) rest -= coeff * basis_.col(i);
  }
  return all_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::AmbientMismatch, "contains: ambient mismatch");
  for (Index i = 0; i < other.dim(); ++i) {
    if (!contains(Vector(other.basis_.col(i)))) return false;
  }
  return true;
}

Subspace kernel(const Matrix& a) {
  const Index cols = a.cols();
  if (a.rows() == 0) return Subspace::full(cols);
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix vectors(cols, cols - e.rank());
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector v = Vector::Zero(cols);
    v(f) = 1;
    for (Index i = 0; i < e.rank(); ++i) v(e.pivots[i]) = -e.reduced(i, f);
    vectors.col(k++) = v;
  }
  return Subspace::span(vectors);
}

Subspace image(const Matrix& a, const Subspace& u) {
  if (a.cols() != u.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "image: map/subspace mismatch");
  if (u.dim() == 0) return Subspace(a.rows());
  return Subspace::span(a * u.basis());
}

Subspace image(const Matrix& a) {
  if (a.cols() == 0) return Subspace(a.rows());
  return Subspace::span(a);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "sum: ambient mismatch");
  Matrix both(u.ambient_dim(), u.dim() + v.dim());
  both << u.basis(), v.basis();
  return Subspace::span(both);
}

Subspace sum(std::initializer_list<Subspace> parts) {
  if (parts.size() == 0) return Subspace();
  Subspace acc = *parts.begin();
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) acc = sum(acc, *it);
  return acc;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "intersect: ambient mismatch");
  if (u.dim() == 0 || v.dim() == 0) return Subspace(u.ambient_dim());
  Matrix both(u.ambient_dim(), u.dim() + v.dim());
  both << u.basis(), -v.basis();
  const Subspace k = kernel(both);
  if (k.dim() == 0) return Subspace(u.ambient_dim());
  return Subspace::span(u.basis() * k.basis().topRows(u.dim()));
}

bool is_direct_sum(std::span<const Subspace> parts) {
  if (parts.empty()) return true;
  const Index ambient = parts.front().ambient_dim();
  Index total = 0;
  Index cols = 0;
  for (const Subspace& p : parts) {
    if (p.ambient_dim() != ambient) throw Error(ErrorCode::AmbientMismatch, "is_direct_sum: ambient mismatch");
    total += p.dim();
    cols += p.dim();
  }
  Matrix all(ambient, cols);
  Index at = 0;
  for (const Subspace& p : parts) {
    all.middleCols(at, p.dim()) = p.basis();
    at += p.dim();
  }
  return rank(all) == total;
}

bool is_direct_sum(std::initializer_list<Subspace> parts) {
  return is_direct_sum(std::span<const Subspace>(parts.begin(), parts.size()));
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square");
}

Rational BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != ambient_dim() || y.size() != ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "form evaluation: length mismatch");
  }
  return x.dot(gram_ * y);
}

bool BilinearForm::is_symmetric() const { return gram_ == gram_.transpose(); }

bool BilinearForm::is_antisymmetric() const { return gram_ == Matrix(-gram_.transpose()); }

bool BilinearForm::is_positive_definite() const {
  for (Index k = 1; k <= gram_.rows(); ++k) {
    if (determinant(gram_.topLeftCorner(k, k)) <= 0) return false;
  }
  return true;
}

bool BilinearForm::is_nondegenerate() const { return determinant(gram_) != 0; }

Subspace orth_complement(const Subspace& u, const Subspace& w, const BilinearForm& ip) {
  if (u.ambient_dim() != w.ambient_dim() || ip.ambient_dim() != w.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "orth_complement: ambient mismatch");
  }
  if (!w.contains(u)) throw Error(ErrorCode::NotContained, "orth_complement: U is not contained in W");
  if (!ip.is_symmetric() || !ip.is_positive_definite()) {
    throw Error(ErrorCode::NotPositiveDefinite, "orth_complement: inner product fails the leading-minor test");
  }
  if (w.dim() == 0) return Subspace(w.ambient_dim());
  if (u.dim() == 0) return w;
  const Subspace coeffs = kernel(u.basis().transpose() * ip.gram() * w.basis());
  Subspace result = image(w.basis(), coeffs);
  if (!is_direct_sum({u, result}) || sum(u, result) != w) {
    throw Error(ErrorCode::NotPositiveDefinite, "orth_complement: result is not a complement of U in W");
  }
  return result;
}

Matrix gram_on(const BilinearForm& form, const Matrix& basis) {
  if (basis.rows() != form.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "gram_on: ambient mismatch");
  return basis.transpose() * form.gram() * basis;
}

Matrix gram_on(const BilinearForm& form, const Subspace& u) { return gram_on(form, u.basis()); }

Matrix gram_between(const BilinearForm& form, const Matrix& left, const Matrix& right) {
  if (left.rows() != form.ambient_dim() || right.rows() != form.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "gram_between: ambient mismatch");
  }
  return left.transpose() * form.gram() * right;
}

Subspace form_orthogonal(const BilinearForm& form, const Subspace& w, const Subspace& u) {
  if (u.dim() == 0) return u;
  if (w.dim() == 0) return u;
  const Subspace coeffs = kernel(gram_between(form, w.basis(), u.basis()));
  return image(u.basis(), coeffs);
}

bool is_nondegenerate_on(const BilinearForm& form, const Subspace& u) {
  if (u.dim() == 0) return true;
  return determinant(gram_on(form, u)) != 0;
}

bool is_orthogonal(const BilinearForm& form, const Subspace& u, const Subspace& v) {
  if (u.dim() == 0 || v.dim() == 0) return true;
  return all_zero(gram_between(form, u.basis(), v.basis()));
}

}  // namespace wittartin
