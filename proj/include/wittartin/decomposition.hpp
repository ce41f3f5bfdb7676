#pragma once

#include "wittartin/checks.hpp"
#include "wittartin/pointmodel.hpp"

namespace wittartin {

/// T_mM = T0 ⊕ T1 ⊕ N0 ⊕ N1 for the G-action.
struct WittDecompositionG {
  Subspace T0, T1, N0, N1;
  Matrix gram_T1, gram_N1;
};

/// T_mM = TH0 ⊕ TH1 ⊕ NH0 ⊕ NH1 for the H-action, NH1 = s.m ⊕ X_m ⊕ N1.
struct WittDecompositionH {
  Subspace TH0, TH1, NH0, NH1;
  Subspace s_block, Xm, N1_block;  // NH1 pieces
  Subspace bm, Ym;                 // X_m = b.m ⊕ Y_m
  Subspace Zm;                     // a.m ⊕ r.m
  Subspace M;                      // {z_M(m) + w in T1 ⊕ N0 : -ad*_z mu + f(w) ∈ h°}
};

/// The blocks without running any checks.
WittDecompositionG assemble_G(const TangentModel& model);
/// Throws Error(ChainInconsistent) naming the failed property.
WittDecompositionG decompose_G(const TangentModel& model);
CheckReport check_decomposition_G(const WittDecompositionG& d, const TangentModel& model);

WittDecompositionH assemble_H(const TangentModel& model);
/// Throws Error(ChainInconsistent) naming the failed assertion (1)-(7).
WittDecompositionH decompose_H(const TangentModel& model);
CheckReport check_decomposition_H(const WittDecompositionH& d, const TangentModel& model);

/// omega restricted to NH1 in the block basis (s, b.m, Y_m, N1).
struct SliceForm {
  BilinearForm form;
  Matrix basis;  // model coordinates, one column per block basis vector
  BlockRange s, bm, Ym, N1;
};

SliceForm slice_form(const WittDecompositionH& d, const TangentModel& model);
/// Every off-diagonal block is exactly zero and the diagonal blocks are the
/// Chu form on s, the canonical pairing on b.m × Y_m, and omega_N1.
CheckReport check_slice_form(const SliceForm& sf, const TangentModel& model);

/// Momentum of nu_tilde (coordinates in the SliceForm basis) paired with each
/// h_m basis vector, by the three-term formula. Empty when h_m = 0.
Vector slice_momentum(const SliceForm& sf, const TangentModel& model, const Vector& nu_tilde);
/// The same covector from (1/2) omega(eta . nu_tilde, nu_tilde).
Vector slice_momentum_direct(const SliceForm& sf, const TangentModel& model, const Vector& nu_tilde);

/// s.mu as a symplectic slice for the H-action on the coadjoint orbit.
CheckReport coadjoint_slice_check(const SplittingChain& chain, const ProblemInstance& inst);

/// DPhi_N1(nu)(A_eta nu) = -ad*_eta Phi_N1(nu) for each g_m basis vector eta.
bool slice_momentum_equivariant(const ProblemInstance& inst, const Vector& nu);

}  // namespace wittartin
