#include "corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "wittartin/sampling.hpp"

namespace corpus {

using namespace wittartin;

namespace {

int pick(Sampler& rng, int count) { return std::uniform_int_distribution<int>(0, count - 1)(rng.engine()); }

Vector nonzero_vector(Sampler& rng, Index n) {
  for (;;) {
    Vector v = rng.rational_vector(n, 3, 3);
    if (!all_zero(v)) return v;
  }
}

Matrix full_rank(Sampler& rng, Index n, Index k) {
  for (;;) {
    Matrix m(n, k);
    for (Index j = 0; j < k; ++j) m.col(j) = rng.rational_vector(n, 3, 2);
    if (rank(m) == k) return m;
  }
}

Matrix random_spd(Sampler& rng, Index n) {
  const Matrix m = full_rank(rng, n, n);
  return m.transpose() * m + Matrix(Matrix::Identity(n, n));
}

/// Rational rotation (I - K)^{-1}(I + K) for a random skew K.
Matrix cayley_rotation(Sampler& rng) {
  Matrix k = Matrix::Zero(3, 3);
  const Vector w = rng.rational_vector(3, 2, 2);
  k(0, 1) = -w(2);
  k(1, 0) = w(2);
  k(0, 2) = w(1);
  k(2, 0) = -w(1);
  k(1, 2) = -w(0);
  k(2, 1) = w(0);
  const Matrix id = Matrix::Identity(3, 3);
  return inverse(Matrix(id - k)) * Matrix(id + k);
}

/// A slice of dimension 0, 2 or 4 with omega = P^T J P and, for each g_m
/// basis vector, action Omega^{-1} S with S symmetric.
SliceRep random_slice(Sampler& rng, Index gm_dim) {
  SliceRep s;
  s.dim = 2 * pick(rng, 3);
  Matrix j = Matrix::Zero(s.dim, s.dim);
  for (Index i = 0; i < s.dim / 2; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  const Matrix p = full_rank(rng, s.dim, s.dim);
  const Matrix omega = p.transpose() * j * p;
  s.omega = BilinearForm(omega);
  for (Index k = 0; k < gm_dim; ++k) {
    Matrix sym(s.dim, s.dim);
    for (Index a = 0; a < s.dim; ++a)
      for (Index b = a; b < s.dim; ++b) sym(a, b) = sym(b, a) = rng.rational(3, 2);
    s.action.push_back(s.dim == 0 ? Matrix(0, 0) : Matrix(inverse(omega) * sym));
  }
  return s;
}

/// First candidate line that is admissible as g_m, or an empty basis.
Matrix admissible_gm(const ProblemInstance& base, const std::vector<Vector>& candidates) {
  for (const Vector& v : candidates) {
    if (all_zero(v)) continue;
    ProblemInstance trial = base;
    trial.gm_basis = v;
    trial.slice = SliceRep{};
    trial.slice.action.assign(1, Matrix(0, 0));
    if (all_passed(validate(trial))) return v;
  }
  return Matrix(base.dim(), 0);
}

ProblemInstance abelian_instance(Sampler& rng, std::string& label) {
  const Index n = 1 + pick(rng, 5);
  const Index k = pick(rng, static_cast<int>(n) + 1);
  ProblemInstance inst;
  inst.algebra = abelian(n);
  inst.h_basis = k == 0 ? Matrix(n, 0) : full_rank(rng, n, k);
  inst.mu = pick(rng, 4) == 0 ? Vector(Vector::Zero(n)) : rng.rational_vector(n, 4, 3);
  inst.gm_basis = pick(rng, 2) == 0 ? Matrix(n, 0) : Matrix(nonzero_vector(rng, n));
  inst.ip = BilinearForm(random_spd(rng, n));
  label = "abelian(" + std::to_string(n) + "," + std::to_string(k) + ")";
  return inst;
}

ProblemInstance so3_instance(Sampler& rng, std::string& label) {
  ProblemInstance inst;
  inst.algebra = so3();
  const int h_kind = pick(rng, 4);
  const Vector line = nonzero_vector(rng, 3);
  inst.h_basis = h_kind == 0 ? Matrix(3, 0) : h_kind == 3 ? Matrix(Matrix::Identity(3, 3)) : Matrix(line);
  const int mu_kind = pick(rng, 3);
  inst.mu = mu_kind == 0 ? Vector(Vector::Zero(3)) : mu_kind == 1 ? Vector(line * rng.rational(3, 2)) : nonzero_vector(rng, 3);
  if (mu_kind == 1 && all_zero(inst.mu)) inst.mu = line;
  inst.ip = BilinearForm(Matrix(Matrix::Identity(3, 3)));
  inst.gm_basis = Matrix(3, 0);
  if (pick(rng, 2) == 0) {
    const Vector scale = rng.rational_vector(1, 3, 3);
    const Rational c = 1 + scale(0) * scale(0);
    inst.ip = BilinearForm(Matrix(c * Matrix::Identity(3, 3)));
    inst.gm_basis = admissible_gm(inst, {inst.mu, line, nonzero_vector(rng, 3)});
  }
  if (inst.gm_basis.cols() == 0 && pick(rng, 2) == 0) inst.ip = BilinearForm(random_spd(rng, 3));
  label = "so3(h" + std::to_string(inst.h_basis.cols()) + ",mu" + std::to_string(mu_kind) + ")";
  return inst;
}

ProblemInstance so3xso3_instance(Sampler& rng, std::string& label) {
  ProblemInstance inst;
  inst.algebra = direct_sum(so3(), so3());
  const int h_kind = pick(rng, 6);
  Matrix h;
  switch (h_kind) {
    case 0: {  // diagonal
      h = Matrix::Zero(6, 3);
      for (Index i = 0; i < 3; ++i) h(i, i) = h(i + 3, i) = 1;
      break;
    }
    case 1: {  // graph of a rational rotation
      const Matrix rot = cayley_rotation(rng);
      h = Matrix::Zero(6, 3);
      h.topRows(3) = Matrix::Identity(3, 3);
      h.bottomRows(3) = rot;
      break;
    }
    case 2: {  // first factor
      h = Matrix::Zero(6, 3);
      h.topRows(3) = Matrix::Identity(3, 3);
      break;
    }
    case 3: {  // a torus line in each factor
      h = Matrix::Zero(6, 2);
      h.col(0).head(3) = nonzero_vector(rng, 3);
      h.col(1).tail(3) = nonzero_vector(rng, 3);
      break;
    }
    case 4: {  // one line
      h = Matrix(nonzero_vector(rng, 6));
      break;
    }
    default:
      h = Matrix(6, 0);
  }
  inst.h_basis = h;
  Vector mu(6);
  const int mu_kind = pick(rng, 4);
  if (mu_kind == 0) {
    mu.setZero();
  } else if (mu_kind == 1) {  // aligned with the third axis in both factors
    mu << 0, 0, rng.rational(3, 2), 0, 0, rng.rational(3, 2);
  } else {
    mu = rng.rational_vector(6, 3, 3);
  }
  inst.mu = mu;
  const Rational alpha = 1 + Rational(pick(rng, 3)), beta = 1 + Rational(pick(rng, 3), 2);
  Matrix ip = Matrix::Zero(6, 6);
  ip.topLeftCorner(3, 3) = alpha * Matrix::Identity(3, 3);
  ip.bottomRightCorner(3, 3) = beta * Matrix::Identity(3, 3);
  inst.ip = BilinearForm(ip);
  inst.gm_basis = Matrix(6, 0);
  if (pick(rng, 3) != 0) {
    const Subspace g_mu = stabilizer_of_momentum(inst.algebra, mu);
    std::vector<Vector> candidates;
    for (Index j = 0; j < g_mu.dim(); ++j) candidates.push_back(g_mu.basis().col(j));
    for (Index j = 0; j + 1 < g_mu.dim(); ++j) candidates.push_back(g_mu.basis().col(j) + g_mu.basis().col(j + 1));
    Vector diag_axis(6);
    diag_axis << 0, 0, 1, 0, 0, 1;
    candidates.push_back(diag_axis);
    std::shuffle(candidates.begin(), candidates.end(), rng.engine());
    inst.gm_basis = admissible_gm(inst, candidates);
  }
  label = "so3xso3(h" + std::to_string(h_kind) + ",mu" + std::to_string(mu_kind) + ")";
  return inst;
}

}  // namespace

std::vector<Entry> make(std::size_t count, std::uint64_t seed) {
  Sampler rng(seed);
  std::vector<Entry> out;
  while (out.size() < count) {
    std::string label;
    ProblemInstance inst;
    switch (out.size() % 3) {
      case 0: inst = abelian_instance(rng, label); break;
      case 1: inst = so3_instance(rng, label); break;
      default: inst = so3xso3_instance(rng, label); break;
    }
    inst.slice = random_slice(rng, inst.gm_basis.cols());
    label += ",gm" + std::to_string(inst.gm_basis.cols()) + ",N" + std::to_string(inst.slice.dim);
    if (!all_passed(validate(inst))) throw std::logic_error("corpus generator produced an invalid instance: " + label);
    out.push_back({"#" + std::to_string(out.size()) + " " + label, std::move(inst)});
  }
  return out;
}

}  // namespace corpus
