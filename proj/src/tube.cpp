#include "wittartin/tube.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wittartin/sampling.hpp"

namespace wittartin {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string format_error(const char* label, double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << label << " " << value;
  return os.str();
}

double rel_dev(const VectorXd& got, const VectorXd& want) {
  return (got - want).lpNorm<Eigen::Infinity>() / std::max(1.0, want.lpNorm<Eigen::Infinity>());
}

/// mu + B^{-T}[phi; rho; 0] for any scalar.
template <class Scalar>
VectorX<Scalar> covector_at_slice(const TangentModel& md, const VectorX<Scalar>& rho, const VectorX<Scalar>& phi) {
  VectorX<Scalar> c = VectorX<Scalar>::Zero(md.dim_g());
  c.head(md.dim_gm) = phi;
  c.segment(md.dim_gm, md.dim_m) = rho;
  return cast_matrix<Scalar>(md.inst.mu) + cast_matrix<Scalar>(md.group_basis_inv).transpose() * c;
}

VectorXd slice_momentum_double(const TangentModel& md, const VectorXd& nu) {
  const MatrixXd omega = cast_matrix<double>(md.inst.slice.omega.gram());
  VectorXd phi(md.dim_gm);
  for (Index i = 0; i < md.dim_gm; ++i) {
    const MatrixXd a = cast_matrix<double>(md.inst.slice.action[static_cast<std::size_t>(i)]);
    phi(i) = 0.5 * (a * nu).dot(omega * nu);
  }
  return phi;
}

VectorXd covector_double(const TangentModel& md, const VectorXd& rho, const VectorXd& nu) {
  return covector_at_slice<double>(md, rho, slice_momentum_double(md, nu));
}

void require_slice_point(const TangentModel& md, const TubePoint<Rational>& p) {
  if (!all_zero(p.xi)) throw Error(ErrorCode::OffSlice, "omega_tube is evaluated on the slice chart only");
  if (p.xi.size() != md.dim_g() || p.rho.size() != md.dim_m || p.nu.size() != md.dim_slice)
    throw Error(ErrorCode::DimensionMismatch, "tube point blocks do not match the model");
}

/// Tube vector of the G_m orbit through the point, generated by eta.
TubeVector orbit_direction(const TangentModel& md, const TubePoint<Rational>& p, const Vector& eta) {
  const Matrix act = gm_action(md, eta);
  return {-eta, act.block(md.R.offset, md.R.offset, md.R.count, md.R.count) * p.rho,
          act.block(md.V.offset, md.V.offset, md.V.count, md.V.count) * p.nu};
}

}  // namespace

Rational omega_tube(const TangentModel& md, const TubePoint<Rational>& p, const TubeVector& v1, const TubeVector& v2) {
  require_slice_point(md, p);
  const ProblemInstance& inst = md.inst;
  const Vector zero_rho = Vector::Zero(md.dim_m);
  auto linear_part = [&](const TubeVector& v) {
    return Vector(covector_at_slice<Rational>(md, v.rho_dot, slice_momentum_derivative(inst, p.nu, v.nu_dot)) -
                  inst.mu);
  };
  const Vector lambda = covector_at_slice<Rational>(md, p.rho, slice_momentum_map(inst, p.nu));
  return linear_part(v2).dot(v1.xi) - linear_part(v1).dot(v2.xi) +
         lambda.dot(inst.algebra.bracket<Rational>(v1.xi, v2.xi)) + inst.slice.omega(v1.nu_dot, v2.nu_dot);
}

Matrix omega_tube_gram(const TangentModel& md, const TubePoint<Rational>& p, const std::vector<TubeVector>& vs) {
  const Index k = static_cast<Index>(vs.size());
  Matrix g(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) g(i, j) = omega_tube(md, p, vs[i], vs[j]);
  return g;
}

TubeVector to_tube_vector(const TangentModel& md, const TangentVector& v) {
  return {md.u_basis() * v.u, v.rho, v.nu};
}

std::vector<TubeVector> model_tube_basis(const TangentModel& md) {
  std::vector<TubeVector> out;
  for (Index k = 0; k < md.total_dim(); ++k) out.push_back(to_tube_vector(md, md.unpack(unit(md.total_dim(), k))));
  return out;
}

MatrixXd expm(const MatrixXd& a, double tol) {
  if (!a.allFinite()) throw Error(ErrorCode::SeriesNotConverged, "matrix has non-finite entries");
  const Index n = a.rows();
  const double norm = n == 0 ? 0.0 : a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const MatrixXd x = a / std::ldexp(1.0, squarings);
  const double xn = norm / std::ldexp(1.0, squarings);

  constexpr int max_terms = 40;
  MatrixXd result = MatrixXd::Identity(n, n);
  MatrixXd term = MatrixXd::Identity(n, n);
  double scalar_term = 1.0;  // xn^k / k!
  bool converged = xn == 0.0;
  for (int k = 1; k <= max_terms && !converged; ++k) {
    term = term * x / k;
    result += term;
    scalar_term *= xn / k;
    // tail sum_{j>k} xn^j/j! <= scalar_term * xn/(k+1) / (1 - xn/(k+2))
    const double tail = scalar_term * xn / (k + 1) / (1.0 - xn / (k + 2));
    converged = tail <= tol;
  }
  if (!converged) throw Error(ErrorCode::SeriesNotConverged, "Taylor remainder bound above tolerance");
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

MatrixXd adjoint_exp(const LieAlgebra& algebra, const VectorXd& xi) { return expm(ad_matrix<double>(algebra, xi)); }

MatrixXd coadjoint_exp(const LieAlgebra& algebra, const VectorXd& xi) {
  return expm(MatrixXd(-ad_matrix<double>(algebra, xi))).transpose();
}

Vector slice_momentum_value(const TangentModel& md, const Vector& rho, const Vector& nu) {
  return covector_at_slice<Rational>(md, rho, slice_momentum_map(md.inst, nu));
}

Vector phi_tilde_at_slice(const TangentModel& md, const Vector& rho, const Vector& nu) {
  return slice_momentum_value(md, rho, nu);
}

VectorXd phi_tilde(const TangentModel& md, const TubePoint<double>& p, FloatTolerance tol) {
  if (p.xi.size() != md.dim_g() || p.rho.size() != md.dim_m || p.nu.size() != md.dim_slice)
    throw Error(ErrorCode::DimensionMismatch, "tube point blocks do not match the model");
  const VectorXd lambda = covector_double(md, p.rho, p.nu);
  const MatrixXd ad = ad_matrix<double>(md.inst.algebra, p.xi);
  return expm(MatrixXd(-ad), std::min(tol.rel_tol, 1e-15)).transpose() * lambda;
}

CheckReport check_dphi_consistency(const TangentModel& md, double step, double rel_tol) {
  const MatrixXd d = cast_matrix<double>(dphi_G(md));
  const MatrixXd bu = cast_matrix<double>(md.u_basis());
  const Index n = md.dim_g();
  double worst[3] = {0, 0, 0};
  for (Index k = 0; k < md.total_dim(); ++k) {
    TubePoint<double> plus{VectorXd::Zero(n), VectorXd::Zero(md.dim_m), VectorXd::Zero(md.dim_slice)};
    TubePoint<double> minus = plus;
    int block = 0;
    double scale = 1.0;  // steps are taken along unit vectors
    if (k < md.R.offset) {
      scale = bu.col(k).norm();
      plus.xi = step / scale * bu.col(k);
      minus.xi = -step / scale * bu.col(k);
    } else if (k < md.V.offset) {
      block = 1;
      plus.rho(k - md.R.offset) = step;
      minus.rho(k - md.R.offset) = -step;
    } else {
      block = 2;
      plus.nu(k - md.V.offset) = step;
      minus.nu(k - md.V.offset) = -step;
    }
    const VectorXd fd = (phi_tilde(md, plus) - phi_tilde(md, minus)) / (2 * step);
    worst[block] = std::max(worst[block], rel_dev(fd, VectorXd(d.col(k) / scale)));
  }
  CheckReport out;
  const char* names[3] = {"tube.dphi finite differences, g/g_m directions", "tube.dphi finite differences, m* directions",
                          "tube.dphi finite differences, N1 directions"};
  for (int b = 0; b < 3; ++b) out.push_back({names[b], worst[b] < rel_tol, format_error("max relative error", worst[b])});
  return out;
}

CheckReport phi_equivariance_check(const TangentModel& md, int samples, FloatTolerance tol, std::uint64_t seed) {
  Sampler rng(seed);
  const LieAlgebra& alg = md.inst.algebra;
  const Index n = md.dim_g();
  const MatrixXd b_t = cast_matrix<double>(md.group_basis).transpose();
  double left_mult = 0, one_param = 0, quotient = 0;
  for (int i = 0; i < samples; ++i) {
    const VectorXd xi1 = rng.real_vector(n, 1.0);
    const VectorXd xi2 = rng.real_vector(n, 1.0);
    const VectorXd rho = cast_matrix<double>(rng.small_rational_vector(md.dim_m));
    const VectorXd nu = cast_matrix<double>(rng.small_rational_vector(md.dim_slice));
    const VectorXd lambda = covector_double(md, rho, nu);

    // Phi(g1 . [g2, rho, nu]) with g1 g2 formed in the adjoint representation
    const MatrixXd ad_product = adjoint_exp(alg, xi1) * adjoint_exp(alg, xi2);
    const VectorXd lhs = ad_product.transpose().partialPivLu().solve(lambda);
    const VectorXd rhs = coadjoint_exp(alg, xi1) * phi_tilde(md, {xi2, rho, nu}, tol);
    left_mult = std::max(left_mult, rel_dev(lhs, rhs));

    const double t = rng.uniform(-1, 1), s = rng.uniform(-1, 1);
    const VectorXd joined = phi_tilde(md, {VectorXd((t + s) * xi1), rho, nu}, tol);
    const VectorXd split = coadjoint_exp(alg, VectorXd(t * xi1)) * phi_tilde(md, {VectorXd(s * xi1), rho, nu}, tol);
    one_param = std::max(one_param, rel_dev(joined, split));

    if (md.dim_gm > 0) {
      // [g exp(eta), rho, nu] = [g, exp(eta) . rho, exp(eta) . nu]
      VectorXd coeffs = rng.real_vector(md.dim_gm, 1.0);
      MatrixXd a_eta = MatrixXd::Zero(md.dim_slice, md.dim_slice);
      for (Index k = 0; k < md.dim_gm; ++k)
        a_eta += coeffs(k) * cast_matrix<double>(md.inst.slice.action[static_cast<std::size_t>(k)]);
      // Keep exp(A_eta) well conditioned: Phi_N1 is invariant along the flow
      // only through cancellation, so roundoff grows like |exp(A_eta)|^2.
      const double a_norm = md.dim_slice == 0 ? 0.0 : a_eta.cwiseAbs().colwise().sum().maxCoeff();
      if (a_norm > 1.0) {
        coeffs /= a_norm;
        a_eta /= a_norm;
      }
      const VectorXd eta = cast_matrix<double>(md.inst.gm_basis) * coeffs;
      const MatrixXd ad_ge = adjoint_exp(alg, xi1) * adjoint_exp(alg, eta);
      const VectorXd moved = ad_ge.transpose().partialPivLu().solve(lambda);
      const VectorXd rho_g = coadjoint_exp(alg, eta) * covector_at_slice<double>(md, rho, VectorXd::Zero(md.dim_gm));
      const VectorXd mu_d = cast_matrix<double>(md.inst.mu);
      const VectorXd rho_moved = (b_t * (rho_g - mu_d)).segment(md.dim_gm, md.dim_m);
      const VectorXd nu_moved = expm(a_eta) * nu;
      quotient = std::max(quotient, rel_dev(moved, phi_tilde(md, {xi1, rho_moved, nu_moved}, tol)));
    }
  }
  CheckReport out;
  out.push_back({"tube.phi equivariant under left multiplication", left_mult <= tol.rel_tol,
                 format_error("max relative deviation", left_mult)});
  out.push_back({"tube.phi consistent along one-parameter subgroups", one_param <= tol.rel_tol,
                 format_error("max relative deviation", one_param)});
  out.push_back({"tube.phi well defined on the G_m quotient", quotient <= tol.rel_tol,
                 format_error("max relative deviation", quotient)});
  return out;
}

CheckReport check_tube_form(const TangentModel& md, int samples, std::uint64_t seed) {
  CheckReport out;
  const std::vector<TubeVector> basis = model_tube_basis(md);
  const TubePoint<Rational> origin{Vector::Zero(md.dim_g()), Vector::Zero(md.dim_m), Vector::Zero(md.dim_slice)};
  out.push_back({"tube.omega at origin = omega(m)", omega_tube_gram(md, origin, basis) == md.omega.gram(), ""});

  Sampler rng(seed);
  bool antisymmetric = true, nondegenerate = true, radical = true;
  for (int i = 0; i < samples; ++i) {
    const TubePoint<Rational> p{Vector::Zero(md.dim_g()), rng.small_rational_vector(md.dim_m),
                                rng.small_rational_vector(md.dim_slice)};
    const Matrix g = omega_tube_gram(md, p, basis);
    antisymmetric = antisymmetric && all_zero(Matrix(g + g.transpose()));
    nondegenerate = nondegenerate && (g.rows() == 0 || determinant(g) != 0);
    for (Index k = 0; k < md.dim_gm && radical; ++k) {
      const TubeVector orbit = orbit_direction(md, p, md.inst.gm_basis.col(k));
      for (const TubeVector& v : basis)
        if (omega_tube(md, p, orbit, v) != 0) {
          radical = false;
          break;
        }
    }
  }
  out.push_back({"tube.omega antisymmetric at slice points", antisymmetric, ""});
  out.push_back({"tube.omega nondegenerate near the origin", nondegenerate, ""});
  out.push_back({"tube.G_m orbit directions in the radical", radical, ""});
  return out;
}

}  // namespace wittartin
