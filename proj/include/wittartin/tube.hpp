#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "wittartin/checks.hpp"
#include "wittartin/pointmodel.hpp"

namespace wittartin {

/// The class [exp(xi), rho, nu] in G ×_{G_m} (m* × N1).
template <class Scalar>
struct TubePoint {
  VectorX<Scalar> xi;   // in g
  VectorX<Scalar> rho;  // in m*
  VectorX<Scalar> nu;   // in N1
};

/// Tangent vector (xi, rho_dot, nu_dot) to G × m* × N1 at a slice point.
struct TubeVector {
  Vector xi;
  Vector rho_dot;
  Vector nu_dot;
};

struct FloatTolerance {
  double rel_tol = 1e-9;
};

/// omega_{Y0} at a point of the slice chart. Exact. Throws Error(OffSlice) if
/// xi != 0.
Rational omega_tube(const TangentModel& model, const TubePoint<Rational>& point, const TubeVector& v1,
                    const TubeVector& v2);
/// Gram matrix of omega_tube on the given vectors.
Matrix omega_tube_gram(const TangentModel& model, const TubePoint<Rational>& point,
                       const std::vector<TubeVector>& vectors);
/// The model coordinate basis as tube vectors (u mapped into g).
std::vector<TubeVector> model_tube_basis(const TangentModel& model);
TubeVector to_tube_vector(const TangentModel& model, const TangentVector& v);

/// exp(A) by scaling and squaring with a Taylor core; throws
/// Error(SeriesNotConverged) if the truncation bound does not reach `tol`.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a, double tol = 1e-15);
/// Ad*_{exp(-xi)} = exp(-ad_xi)^T.
Eigen::MatrixXd coadjoint_exp(const LieAlgebra& algebra, const Eigen::VectorXd& xi);
/// Ad_{exp(xi)} = exp(ad_xi).
Eigen::MatrixXd adjoint_exp(const LieAlgebra& algebra, const Eigen::VectorXd& xi);

/// mu + iota(rho) + iota_gm(Phi_N1(nu)) in g*, exact.
Vector slice_momentum_value(const TangentModel& model, const Vector& rho, const Vector& nu);
/// Ad*_{exp(-xi)}(mu + rho + Phi_N1(nu)).
Eigen::VectorXd phi_tilde(const TangentModel& model, const TubePoint<double>& point, FloatTolerance tol = {});
/// Exact at xi = 0.
Vector phi_tilde_at_slice(const TangentModel& model, const Vector& rho, const Vector& nu);

/// Central differences of phi_tilde at the base point against DPhi_G.
CheckReport check_dphi_consistency(const TangentModel& model, double step = 1e-4, double rel_tol = 1e-6);
/// Equivariance of phi_tilde under left multiplication and well-definedness
/// on the G_m quotient, on `samples` random points.
CheckReport phi_equivariance_check(const TangentModel& model, int samples, FloatTolerance tol = {},
                                   std::uint64_t seed = 1);
/// Exact properties of omega_tube: agreement with omega(m) at the origin,
/// antisymmetry, G_m orbit directions in the radical, nondegeneracy near 0.
CheckReport check_tube_form(const TangentModel& model, int samples, std::uint64_t seed = 1);

}  // namespace wittartin
