#include "wittartin/decomposition.hpp"

namespace wittartin {

namespace {

CheckResult check(std::string name, bool ok, std::string detail_on_fail = "") {
  return {std::move(name), ok, ok ? "" : std::move(detail_on_fail)};
}

void throw_first_failure(const CheckReport& report) {
  for (const CheckResult& c : report)
    if (!c.passed) throw Error(ErrorCode::ChainInconsistent, c.name + (c.detail.empty() ? "" : ": " + c.detail));
}

bool isotropic(const BilinearForm& form, const Subspace& u) { return is_orthogonal(form, u, u); }

/// L is Lagrangian in W: isotropic, inside W, half its dimension, and W symplectic.
bool lagrangian_in(const BilinearForm& form, const Subspace& l, const Subspace& w) {
  return w.contains(l) && isotropic(form, l) && 2 * l.dim() == w.dim() && is_nondegenerate_on(form, w);
}

bool invariant_under_gm(const TangentModel& md, const Subspace& v) {
  for (Index k = 0; k < md.dim_gm; ++k)
    if (!v.contains(image(gm_action(md, md.inst.gm_basis.col(k)), v))) return false;
  return true;
}

}  // namespace

WittDecompositionG decompose_G(const TangentModel& md) {
  WittDecompositionG d = assemble_G(md);
  throw_first_failure(check_decomposition_G(d, md));
  return d;
}

WittDecompositionG assemble_G(const TangentModel& md) {
  WittDecompositionG d;
  d.T0 = md.block({md.U.offset, md.dim_m});
  d.T1 = md.block({md.U.offset + md.dim_m, md.dim_n});
  d.N0 = md.block(md.R);
  d.N1 = md.block(md.V);
  d.gram_T1 = gram_on(md.omega, d.T1);
  d.gram_N1 = gram_on(md.omega, d.N1);
  return d;
}

CheckReport check_decomposition_G(const WittDecompositionG& d, const TangentModel& md) {
  CheckReport out;
  const BilinearForm& w = md.omega;
  const Subspace all = Subspace::full(md.total_dim());
  const Matrix act = inf_action_matrix(md);
  const Subspace ker_g = kernel(dphi_G(md));
  const Subspace t0n0 = sum(d.T0, d.N0);

  out.push_back(check("G.T0+T1+N0+N1 = T_mM", is_direct_sum({d.T0, d.T1, d.N0, d.N1}) &&
                                                   sum({d.T0, d.T1, d.N0, d.N1}) == all));
  out.push_back(check("G.T0 = g_mu.m = ker DPhi_G ∩ g.m",
                      d.T0 == image(act, md.chain.g_mu) && d.T0 == intersect(ker_g, image(act))));
  out.push_back(check("G.T1 = n.m", d.T1 == image(act, md.chain.n_space)));
  out.push_back(check("G.T0+N1 = ker DPhi_G", is_direct_sum({d.T0, d.N1}) && sum(d.T0, d.N1) == ker_g));
  out.push_back(check("G.T1, N1, T0+N0 mutually orthogonal",
                      is_orthogonal(w, d.T1, d.N1) && is_orthogonal(w, d.T1, t0n0) && is_orthogonal(w, d.N1, t0n0)));
  out.push_back(check("G.T0 Lagrangian in T0+N0", lagrangian_in(w, d.T0, t0n0)));
  out.push_back(check("G.N0 Lagrangian in T0+N0", lagrangian_in(w, d.N0, t0n0)));
  const Matrix n_basis = md.u_basis().middleCols(md.dim_m, md.dim_n);
  out.push_back(check("G.T1 symplectic (KKS)",
                      is_nondegenerate_on(w, d.T1) && d.gram_T1 == gram_on(md.psi, n_basis)));
  out.push_back(check("G.N1 symplectic", is_nondegenerate_on(w, d.N1) && d.gram_N1 == md.inst.slice.omega.gram()));
  out.push_back(check("G.blocks g_m-invariant", invariant_under_gm(md, d.T0) && invariant_under_gm(md, d.T1) &&
                                                    invariant_under_gm(md, d.N0) && invariant_under_gm(md, d.N1)));
  return out;
}

WittDecompositionH decompose_H(const TangentModel& md) {
  WittDecompositionH d = assemble_H(md);
  throw_first_failure(check_decomposition_H(d, md));
  return d;
}

WittDecompositionH assemble_H(const TangentModel& md) {
  WittDecompositionH d;
  const Matrix act = inf_action_matrix(md);
  d.TH0 = image(act, md.chain.h_alpha);
  d.TH1 = md.block(md.ntilde);
  d.s_block = md.block(md.s);
  d.bm = md.block(md.b);
  d.Ym = md.block(md.b_dual);
  d.Xm = sum(d.bm, d.Ym);
  d.N1_block = md.block(md.V);
  d.NH1 = sum({d.s_block, d.Xm, d.N1_block});
  d.NH0 = sum(md.block(md.p_dual), md.block(md.r));
  d.Zm = sum(md.block(md.a), md.block(md.r));

  // M straight from its definition: (u_n, rho) with H^T(Psi u + iota(rho)) = 0
  const Subspace t1n0 = md.block({md.U.offset + md.dim_m, md.dim_n + md.R.count});
  d.M = image(t1n0.basis(), kernel(dphi_H(md) * t1n0.basis()));
  return d;
}

CheckReport check_decomposition_H(const WittDecompositionH& d, const TangentModel& md) {
  CheckReport out;
  const BilinearForm& w = md.omega;
  const Subspace all = Subspace::full(md.total_dim());
  const Matrix act = inf_action_matrix(md);
  const Subspace ker_g = kernel(dphi_G(md));
  const Subspace ker_h = kernel(dphi_H(md));
  const Subspace th0nh0 = sum(d.TH0, d.NH0);
  const Subspace am = md.block(md.a);

  out.push_back(check("H.TH0 = h_alpha.m, TH1 = n_tilde.m, h.m = TH0+TH1",
                      d.TH0 == sum(md.block(md.p), am) && d.TH1 == image(act, md.chain.ntilde) &&
                          is_direct_sum({d.TH0, d.TH1}) && sum(d.TH0, d.TH1) == image(act, md.inst.h())));
  out.push_back(check("H.1 TH0+TH1+NH0+NH1 = T_mM", is_direct_sum({d.TH0, d.TH1, d.NH0, d.NH1}) &&
                                                        sum({d.TH0, d.TH1, d.NH0, d.NH1}) == all));
  out.push_back(check("H.2 TH0+NH1 = ker DPhi_H", is_direct_sum({d.TH0, d.NH1}) && sum(d.TH0, d.NH1) == ker_h));
  out.push_back(check("H.3 ker DPhi_H = ker DPhi_G + M, M = q.m + Y_m",
                      is_direct_sum({ker_g, d.M}) && sum(ker_g, d.M) == ker_h &&
                          d.M == sum({am, d.s_block, d.Ym}) && d.M == sum(image(act, md.chain.q), d.Ym)));
  out.push_back(check("H.4 TH1, NH1, TH0+NH0 mutually orthogonal",
                      is_orthogonal(w, d.TH1, d.NH1) && is_orthogonal(w, d.TH1, th0nh0) &&
                          is_orthogonal(w, d.NH1, th0nh0)));
  out.push_back(check("H.4 TH0 Lagrangian in TH0+NH0", lagrangian_in(w, d.TH0, th0nh0)));
  out.push_back(check("H.4 NH0 Lagrangian in TH0+NH0", lagrangian_in(w, d.NH0, th0nh0)));
  out.push_back(check("H.4 TH1 symplectic", is_nondegenerate_on(w, d.TH1)));
  out.push_back(check("H.5 s.m symplectic (KKS)", is_nondegenerate_on(w, d.s_block) &&
                                                      is_nondegenerate_on(md.psi, md.chain.s)));
  out.push_back(check("H.5 X_m symplectic", is_nondegenerate_on(w, d.Xm) && d.Xm.dim() == 2 * md.chain.b.dim()));
  out.push_back(check("H.5 NH1 symplectic", is_nondegenerate_on(w, d.NH1)));
  out.push_back(check("H.5 Z_m symplectic", is_nondegenerate_on(w, d.Zm)));
  {
    const Matrix pairing = gram_between(md.psi, md.chain.a.basis(), md.chain.r.basis());
    const bool square = md.chain.a.dim() == md.chain.r.dim();
    out.push_back(check("H.6 <mu,[a,r]> nondegenerate (r.m ≅ a*)",
                        square && (pairing.rows() == 0 || determinant(pairing) != 0)));
  }
  out.push_back(check("H.7 a.m Lagrangian in Z_m",
                      all_zero(gram_on(md.psi, md.chain.a)) && lagrangian_in(w, am, d.Zm)));
  out.push_back(check("H.r isotropic and orthogonal to s, n_tilde",
                      isotropic(md.psi, md.chain.r) && is_orthogonal(md.psi, md.chain.r, md.chain.s) &&
                          is_orthogonal(md.psi, md.chain.r, md.chain.ntilde)));
  {
    const DimReport dims = dim_formulas(md.chain, md.dim_slice);
    out.push_back(check("H.dim NH1 = dim N1 + 2 dim b + dim s", d.NH1.dim() == dims.n1_tilde_dim,
                        std::to_string(d.NH1.dim()) + " != " + std::to_string(dims.n1_tilde_dim)));
    out.push_back(check("H.dim ker DPhi_H - dim ker DPhi_G = dim q + dim b",
                        ker_h.dim() - ker_g.dim() == dims.ker_gap));
  }
  bool inv = true;
  for (const Subspace* v : {&d.TH0, &d.TH1, &d.NH0, &d.NH1, &d.s_block, &d.Xm, &d.Ym, &d.Zm, &d.M})
    inv = inv && invariant_under_gm(md, *v);
  out.push_back(check("H.blocks g_m-invariant", inv));
  return out;
}

SliceForm slice_form(const WittDecompositionH& d, const TangentModel& md) {
  SliceForm sf;
  const Matrix s = d.s_block.basis();
  const Matrix bm = d.bm.basis();
  const Matrix ym = d.Ym.basis();
  const Matrix n1 = d.N1_block.basis();
  sf.basis = hconcat(md.total_dim(), {&s, &bm, &ym, &n1});
  Index at = 0;
  sf.s = {at, s.cols()};
  at += s.cols();
  sf.bm = {at, bm.cols()};
  at += bm.cols();
  sf.Ym = {at, ym.cols()};
  at += ym.cols();
  sf.N1 = {at, n1.cols()};
  sf.form = BilinearForm(gram_on(md.omega, sf.basis));
  return sf;
}

CheckReport check_slice_form(const SliceForm& sf, const TangentModel& md) {
  CheckReport out;
  const Matrix& g = sf.form.gram();
  const BlockRange blocks[] = {sf.s, sf.bm, sf.Ym, sf.N1};
  // b.m and Y_m together form the X_m block
  auto same_diagonal_block = [&](int i, int j) { return i == j || (i >= 1 && i <= 2 && j >= 1 && j <= 2); };
  bool off_zero = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!same_diagonal_block(i, j))
        off_zero = off_zero && all_zero(g.block(blocks[i].offset, blocks[j].offset, blocks[i].count, blocks[j].count));
  out.push_back(check("slice_form.off-diagonal blocks zero", off_zero));

  const Matrix chu_s = gram_on(md.psi, Matrix(md.u_basis().middleCols(md.s.offset, md.s.count)));
  out.push_back(check("slice_form.s block = Chu form",
                      g.block(sf.s.offset, sf.s.offset, sf.s.count, sf.s.count) == chu_s));
  const Index nb = sf.bm.count;
  out.push_back(check("slice_form.X_m block = canonical pairing",
                      all_zero(g.block(sf.bm.offset, sf.bm.offset, nb, nb)) &&
                          all_zero(g.block(sf.Ym.offset, sf.Ym.offset, nb, nb)) &&
                          g.block(sf.bm.offset, sf.Ym.offset, nb, nb) == Matrix::Identity(nb, nb) &&
                          g.block(sf.Ym.offset, sf.bm.offset, nb, nb) == Matrix(-Matrix::Identity(nb, nb))));
  out.push_back(check("slice_form.N1 block = omega_N1",
                      g.block(sf.N1.offset, sf.N1.offset, sf.N1.count, sf.N1.count) == md.inst.slice.omega.gram()));
  out.push_back(check("slice_form.nondegenerate", sf.form.ambient_dim() == 0 || sf.form.is_nondegenerate()));
  return out;
}

Vector slice_momentum(const SliceForm& sf, const TangentModel& md, const Vector& nu_tilde) {
  if (nu_tilde.size() != sf.form.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "nu_tilde has wrong length");
  const LieAlgebra& alg = md.inst.algebra;
  const Matrix bu = md.u_basis();
  const Vector x = bu.middleCols(md.s.offset, md.s.count) * nu_tilde.segment(sf.s.offset, sf.s.count);
  const Matrix b_basis = bu.middleCols(md.b.offset, md.b.count);
  const Vector bb = b_basis * nu_tilde.segment(sf.bm.offset, sf.bm.count);
  Vector rho = Vector::Zero(md.dim_m);
  rho.segment(md.b_dual.offset - md.R.offset, md.b_dual.count) = nu_tilde.segment(sf.Ym.offset, sf.Ym.count);
  const Vector f_w = iota_m(md, rho);
  const Vector nu = nu_tilde.segment(sf.N1.offset, sf.N1.count);

  const Matrix& hm = md.chain.hm.basis();
  Vector out(hm.cols());
  for (Index k = 0; k < hm.cols(); ++k) {
    const Vector eta = hm.col(k);
    const Rational curvature = md.inst.mu.dot(alg.bracket<Rational>(x, alg.bracket<Rational>(x, eta))) / 2;
    const Rational pairing = f_w.dot(alg.bracket<Rational>(eta, bb));
    const Rational slice = md.inst.slice.omega(slice_action(md.inst, eta) * nu, nu) / 2;
    out(k) = curvature + pairing + slice;
  }
  return out;
}

Vector slice_momentum_direct(const SliceForm& sf, const TangentModel& md, const Vector& nu_tilde) {
  if (nu_tilde.size() != sf.form.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "nu_tilde has wrong length");
  const Vector v = sf.basis * nu_tilde;
  const Matrix& hm = md.chain.hm.basis();
  Vector out(hm.cols());
  for (Index k = 0; k < hm.cols(); ++k) out(k) = md.omega(gm_action(md, hm.col(k)) * v, v) / 2;
  return out;
}

CheckReport coadjoint_slice_check(const SplittingChain& ch, const ProblemInstance& inst) {
  CheckReport out;
  const BilinearForm psi = chu_form(inst.algebra, inst.mu);
  // x . mu = -ad*_x mu = Psi x
  const Matrix& orbit_map = psi.gram();
  const Subspace tangent = image(orbit_map);
  const Matrix h = inst.h().basis();
  const Subspace ker = image(tangent.basis(), kernel(h.transpose() * tangent.basis()));
  const Subspace q_mu = image(orbit_map, ch.q);
  const Subspace s_mu = image(orbit_map, ch.s);
  const Subspace h_alpha_mu = image(orbit_map, ch.h_alpha);
  out.push_back(check("coadjoint.ker = (a+s).mu", ker == q_mu && q_mu.dim() == ch.q.dim()));
  out.push_back(check("coadjoint.s.mu complements h_alpha.mu in ker",
                      is_direct_sum({h_alpha_mu, s_mu}) && sum(h_alpha_mu, s_mu) == ker && s_mu.dim() == ch.s.dim()));
  out.push_back(check("coadjoint.KKS nondegenerate on s", is_nondegenerate_on(psi, ch.s)));
  return out;
}

bool slice_momentum_equivariant(const ProblemInstance& inst, const Vector& nu) {
  const Vector phi = slice_momentum_map(inst, nu);
  const Index l = inst.gm_basis.cols();
  for (Index k = 0; k < l; ++k) {
    const Vector eta = inst.gm_basis.col(k);
    const Vector lhs = slice_momentum_derivative(inst, nu, inst.slice.action[static_cast<std::size_t>(k)] * nu);
    Vector rhs(l);
    for (Index i = 0; i < l; ++i) {
      const Vector c = gm_coordinates(inst, inst.algebra.bracket<Rational>(eta, inst.gm_basis.col(i)));
      rhs(i) = -phi.dot(c);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace wittartin
