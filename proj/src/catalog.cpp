#include "wittartin/catalog.hpp"

namespace wittartin {

namespace {

Matrix columns(Index n, std::initializer_list<std::initializer_list<int>> cols) {
  Matrix m(n, static_cast<Index>(cols.size()));
  Index j = 0;
  for (const auto& col : cols) {
    Index i = 0;
    for (int v : col) m(i++, j) = v;
    ++j;
  }
  return m;
}

Vector vec(std::initializer_list<int> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (int x : entries) v(i++) = x;
  return v;
}

SliceRep standard_plane(Index gm_dim) {
  SliceRep s;
  s.dim = 2;
  Matrix j(2, 2);
  j << 0, 1, -1, 0;
  s.omega = BilinearForm(j);
  s.action.assign(static_cast<std::size_t>(gm_dim), Matrix::Zero(2, 2));
  return s;
}

ProblemInstance base(LieAlgebra algebra, Matrix h, Matrix gm, Vector mu) {
  ProblemInstance inst;
  const Index n = algebra.dim();
  inst.algebra = std::move(algebra);
  inst.h_basis = std::move(h);
  inst.slice = standard_plane(gm.cols());
  inst.gm_basis = std::move(gm);
  inst.mu = std::move(mu);
  inst.ip = BilinearForm(Matrix::Identity(n, n));
  return inst;
}

ProblemInstance torus(const CatalogParams& p) {
  if (p.dim < 1 || p.subdim < 0 || p.subdim > p.dim)
    throw Error(ErrorCode::UnknownExample, "torus needs 0 <= subdim <= dim and dim >= 1");
  Matrix h = Matrix::Zero(p.dim, p.subdim);
  for (Index i = 0; i < p.subdim; ++i) h(i, i) = 1;
  Vector mu(p.dim);
  for (Index i = 0; i < p.dim; ++i) mu(i) = Rational(i + 1, i + 2);
  return base(abelian(p.dim), h, Matrix(p.dim, 0), mu);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"so3-generic", "so3-collinear", "so3-zero", "torus", "so3xso3-diagonal", "so3xso3-stabilized"};
}

ProblemInstance catalog_instance(const std::string& name, const CatalogParams& params) {
  if (name == "so3-generic") return base(so3(), columns(3, {{1, 0, 0}}), Matrix(3, 0), vec({0, 0, 1}));
  if (name == "so3-collinear") return base(so3(), columns(3, {{0, 0, 1}}), Matrix(3, 0), vec({0, 0, 1}));
  if (name == "so3-zero") return base(so3(), columns(3, {{0, 0, 1}}), Matrix(3, 0), vec({0, 0, 0}));
  if (name == "torus") return torus(params);
  const Matrix diagonal = columns(6, {{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}});
  if (name == "so3xso3-diagonal")
    return base(direct_sum(so3(), so3()), diagonal, Matrix(6, 0), vec({0, 0, 1, 0, 0, 2}));
  if (name == "so3xso3-stabilized") {
    ProblemInstance inst =
        base(direct_sum(so3(), so3()), diagonal, columns(6, {{0, 0, 1, 0, 0, 1}}), vec({0, 0, 1, 0, 0, 1}));
    // rotation of the slice plane, infinitesimally symplectic for the standard form
    inst.slice.action[0] << 0, -1, 1, 0;
    return inst;
  }
  throw Error(ErrorCode::UnknownExample, "unknown example \"" + name + "\"");
}

}  // namespace wittartin
