#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wittartin/checks.hpp"
#include "wittartin/exactlin.hpp"
#include "wittartin/liecore.hpp"

namespace wittartin {

/// Linear symplectic representation of g_m on the slice N1.
struct SliceRep {
  Index dim = 0;
  BilinearForm omega{Matrix(0, 0)};
  std::vector<Matrix> action;  // one matrix per g_m basis vector, in basis order
};

/// Algebra-level data of a point m with momentum mu: g, h, g_m, mu, an inner
/// product realizing the invariant complements, and the slice representation.
struct ProblemInstance {
  LieAlgebra algebra;
  Matrix h_basis;   // n x dim h, columns
  Matrix gm_basis;  // n x dim g_m, columns; slice.action follows this order
  Vector mu;
  BilinearForm ip;
  SliceRep slice;
  /// Optional Ad-representatives of the components of G_m (n x n each).
  std::vector<Matrix> gm_component_reps;

  Index dim() const { return algebra.dim(); }
  Subspace h() const { return Subspace::span(h_basis); }
  Subspace gm() const { return Subspace::span(gm_basis); }
};

/// Coordinates of eta in the given g_m basis. Throws Error(NotContained).
Vector gm_coordinates(const ProblemInstance& inst, const Vector& eta);
/// The slice action of eta in g_m, extended linearly from the basis matrices.
Matrix slice_action(const ProblemInstance& inst, const Vector& eta);
/// Phi_N1(nu) in the dual of the given g_m basis: component i is
/// (1/2) omega(A_i nu, nu).
Vector slice_momentum_map(const ProblemInstance& inst, const Vector& nu);
/// Exact derivative DPhi_N1(nu) applied to nu_dot.
Vector slice_momentum_derivative(const ProblemInstance& inst, const Vector& nu, const Vector& nu_dot);

/// Checks every instance invariant; failures carry a witnessing basis pair.
CheckReport validate(const ProblemInstance& inst);

/// The invariant splitting of g used by both decompositions.
struct SplittingChain {
  Subspace g_mu, h_mu, hm, hm_perp_in_gm, p, b;
  Subspace h_perp_mu, h_alpha, a, s, q;
  Subspace ntilde, r, m_space, n_space;
};

/// Chain subspaces paired with the names used in reports.
std::vector<std::pair<std::string, Subspace>> named_spaces(const SplittingChain& chain);

/// Builds the chain. Throws Error(ValidationFailed) if `validate` fails and
/// Error(ChainInconsistent) if a defining identity does not hold.
SplittingChain build_chain(const ProblemInstance& inst);
/// The defining identities of the chain, each as a named check.
CheckReport check_chain(const SplittingChain& chain, const ProblemInstance& inst);

struct DimReport {
  Index slice_dim = 0;
  Index n1_tilde_dim = 0;  // dim N1 + 2 dim b + dim s
  Index ker_gap = 0;       // dim ker DPhi_H - dim ker DPhi_G = dim q + dim b
  Index s_inclusion_exclusion = 0;  // dim h_perp_mu - dim g_mu - dim h_alpha + dim h_mu
};

DimReport dim_formulas(const SplittingChain& chain, Index slice_dim);

/// True iff [eta, V] ⊆ V for every basis vector eta of g_m.
bool is_gm_invariant(const LieAlgebra& algebra, const Subspace& gm, const Subspace& v);

}  // namespace wittartin
