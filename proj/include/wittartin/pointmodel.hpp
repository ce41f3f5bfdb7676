#pragma once

#include "wittartin/checks.hpp"
#include "wittartin/splitting.hpp"

namespace wittartin {

/// A tangent vector (u, rho, nu): u in m ⊕ n coordinates, rho in m*, nu in N1.
struct TangentVector {
  Vector u;
  Vector rho;
  Vector nu;
};

/// Offset and length of a coordinate block.
struct BlockRange {
  Index offset = 0;
  Index count = 0;
};

/// Coordinate model of T_mM = (g / g_m) ⊕ m* ⊕ N1 at the base point of the
/// tube. Coordinates are ordered U (p, b, a, s, n_tilde, r), then R (the dual
/// basis of p, b), then V (N1).
struct TangentModel {
  ProblemInstance inst;
  SplittingChain chain;

  /// Columns [g_m | p | b | a | s | n_tilde | r]; invertible.
  Matrix group_basis;
  Matrix group_basis_inv;
  BilinearForm psi;    // Chu form <mu, [x, y]> on g
  BilinearForm omega;  // omega(m) on the model

  Index dim_gm = 0, dim_m = 0, dim_n = 0, dim_slice = 0;
  // Blocks in model coordinates.
  BlockRange U, R, V;
  BlockRange p, b, a, s, ntilde, r;  // inside U
  BlockRange p_dual, b_dual;         // inside R

  Index total_dim() const { return U.count + R.count + V.count; }
  Index dim_g() const { return inst.dim(); }
  /// U columns of group_basis, i.e. the m ⊕ n part.
  Matrix u_basis() const { return group_basis.rightCols(U.count); }

  Vector pack(const TangentVector& v) const;
  TangentVector unpack(const Vector& x) const;
  /// Coordinate subspace of a block.
  Subspace block(BlockRange range) const { return Subspace::coordinate(total_dim(), range.offset, range.count); }
};

/// Assembles omega(m). Throws Error(DegenerateModel) if it is singular.
TangentModel build_model(const SplittingChain& chain, const ProblemInstance& inst);

/// x_M(m): the m ⊕ n component of x, with rho = 0 and nu = 0.
TangentVector inf_action(const TangentModel& model, const Vector& x);
/// Column i is inf_action(e_i), packed.
Matrix inf_action_matrix(const TangentModel& model);

/// f(w) for w in N0. Throws Error(NotInN0) if u or nu is nonzero.
Vector f_map(const TangentModel& model, const TangentVector& w);

/// Zero extension of rho in m* to g*, vanishing on g_m ⊕ n.
Vector iota_m(const TangentModel& model, const Vector& rho);
/// Zero extension of a covector on g_m (in the instance's g_m basis) to g*,
/// vanishing on m ⊕ n.
Vector iota_gm(const TangentModel& model, const Vector& phi);

/// DPhi_G(m): dim g x total_dim.
Matrix dphi_G(const TangentModel& model);
/// DPhi_H(m) = restriction to h (canonical h basis) of DPhi_G(m).
Matrix dphi_H(const TangentModel& model);

/// Linearized action of eta in g_m on the model: [eta, .] on U, -ad*_eta on R,
/// the slice representation on V.
Matrix gm_action(const TangentModel& model, const Vector& eta);

/// The point-level identities: omega(m) nondegenerate, kernels of DPhi_G and
/// DPhi_H, the contract of f, equivariance of DPhi_G under g_m.
CheckReport check_model(const TangentModel& model);

/// Symplectic orthogonal of W in the model.
Subspace omega_orthogonal(const TangentModel& model, const Subspace& w);

}  // namespace wittartin
