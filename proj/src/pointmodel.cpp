#include "wittartin/pointmodel.hpp"

namespace wittartin {

namespace {

CheckResult check(std::string name, bool ok, std::string detail_on_fail = "") {
  return {std::move(name), ok, ok ? "" : std::move(detail_on_fail)};
}

void require_length(const Vector& v, Index n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  }
}

}  // namespace

Vector TangentModel::pack(const TangentVector& v) const {
  require_length(v.u, U.count, "u");
  require_length(v.rho, R.count, "rho");
  require_length(v.nu, V.count, "nu");
  Vector x(total_dim());
  x << v.u, v.rho, v.nu;
  return x;
}

TangentVector TangentModel::unpack(const Vector& x) const {
  require_length(x, total_dim(), "tangent vector");
  return {x.segment(U.offset, U.count), x.segment(R.offset, R.count), x.segment(V.offset, V.count)};
}

TangentModel build_model(const SplittingChain& chain, const ProblemInstance& inst) {
  TangentModel md;
  md.inst = inst;
  md.chain = chain;

  const Index n = inst.dim();
  md.dim_gm = inst.gm_basis.cols();
  md.dim_m = chain.m_space.dim();
  md.dim_n = chain.n_space.dim();
  md.dim_slice = inst.slice.dim;

  // g_m keeps the instance basis so the slice action matrices line up.
  const Matrix& gm = inst.gm_basis;
  md.group_basis = hconcat(n, {&gm, &chain.p.basis(), &chain.b.basis(), &chain.a.basis(), &chain.s.basis(),
                               &chain.ntilde.basis(), &chain.r.basis()});
  md.group_basis_inv = inverse(md.group_basis);

  Index at = 0;
  auto take = [&at](Index count) {
    BlockRange range{at, count};
    at += count;
    return range;
  };
  md.p = take(chain.p.dim());
  md.b = take(chain.b.dim());
  md.a = take(chain.a.dim());
  md.s = take(chain.s.dim());
  md.ntilde = take(chain.ntilde.dim());
  md.r = take(chain.r.dim());
  md.U = {0, at};
  md.p_dual = take(chain.p.dim());
  md.b_dual = take(chain.b.dim());
  md.R = {md.U.count, md.dim_m};
  md.V = take(md.dim_slice);

  md.psi = chu_form(inst.algebra, inst.mu);
  const Matrix bu = md.u_basis();
  Matrix gram = Matrix::Zero(md.total_dim(), md.total_dim());
  gram.block(0, 0, md.U.count, md.U.count) = bu.transpose() * md.psi.gram() * bu;
  for (Index i = 0; i < md.dim_m; ++i) {
    gram(md.U.offset + i, md.R.offset + i) = 1;
    gram(md.R.offset + i, md.U.offset + i) = -1;
  }
  gram.block(md.V.offset, md.V.offset, md.V.count, md.V.count) = inst.slice.omega.gram();
  md.omega = BilinearForm(std::move(gram));
  if (!md.omega.is_nondegenerate()) {
    throw Error(ErrorCode::DegenerateModel, "omega(m) is singular; the slice data or chain is inconsistent");
  }
  return md;
}

TangentVector inf_action(const TangentModel& model, const Vector& x) {
  require_length(x, model.dim_g(), "x");
  const Vector c = model.group_basis_inv * x;
  return {c.tail(model.U.count), Vector::Zero(model.R.count), Vector::Zero(model.V.count)};
}

Matrix inf_action_matrix(const TangentModel& model) {
  Matrix out = Matrix::Zero(model.total_dim(), model.dim_g());
  out.topRows(model.U.count) = model.group_basis_inv.bottomRows(model.U.count);
  return out;
}

Vector f_map(const TangentModel& model, const TangentVector& w) {
  if (!all_zero(w.u) || !all_zero(w.nu)) throw Error(ErrorCode::NotInN0, "only the m* block may be nonzero");
  require_length(w.rho, model.R.count, "rho");
  return w.rho;
}

Vector iota_m(const TangentModel& model, const Vector& rho) {
  require_length(rho, model.dim_m, "rho");
  Vector c = Vector::Zero(model.dim_g());
  c.segment(model.dim_gm, model.dim_m) = rho;
  return model.group_basis_inv.transpose() * c;
}

Vector iota_gm(const TangentModel& model, const Vector& phi) {
  require_length(phi, model.dim_gm, "g_m covector");
  Vector c = Vector::Zero(model.dim_g());
  c.head(model.dim_gm) = phi;
  return model.group_basis_inv.transpose() * c;
}

Matrix dphi_G(const TangentModel& model) {
  const Index n = model.dim_g();
  Matrix d = Matrix::Zero(n, model.total_dim());
  // -ad*_x mu = Psi x
  d.leftCols(model.U.count) = model.psi.gram() * model.u_basis();
  for (Index j = 0; j < model.dim_m; ++j) d.col(model.R.offset + j) = iota_m(model, unit(model.dim_m, j));
  return d;
}

Matrix dphi_H(const TangentModel& model) { return model.inst.h().basis().transpose() * dphi_G(model); }

Matrix gm_action(const TangentModel& model, const Vector& eta) {
  const Matrix ad = ad_matrix<Rational>(model.inst.algebra, eta);
  const Matrix in_basis = model.group_basis_inv * ad * model.group_basis;
  const Index offset_u = model.dim_gm;
  Matrix act = Matrix::Zero(model.total_dim(), model.total_dim());
  act.block(model.U.offset, model.U.offset, model.U.count, model.U.count) =
      in_basis.block(offset_u, offset_u, model.U.count, model.U.count);
  const Matrix on_m = in_basis.block(offset_u, offset_u, model.dim_m, model.dim_m);
  act.block(model.R.offset, model.R.offset, model.R.count, model.R.count) = -on_m.transpose();
  act.block(model.V.offset, model.V.offset, model.V.count, model.V.count) = slice_action(model.inst, eta);
  return act;
}

Subspace omega_orthogonal(const TangentModel& model, const Subspace& w) {
  return form_orthogonal(model.omega, w, Subspace::full(model.total_dim()));
}

CheckReport check_model(const TangentModel& md) {
  CheckReport out;
  const Index total = md.total_dim();
  const Index expected_total = (md.dim_g() - md.dim_gm) + md.dim_m + md.dim_slice;
  out.push_back(check("model.total_dim", total == expected_total,
                      "total " + std::to_string(total) + " != " + std::to_string(expected_total)));
  out.push_back(check("model.omega_antisymmetric", md.omega.is_antisymmetric()));
  out.push_back(check("model.omega_nondegenerate", md.omega.is_nondegenerate()));

  const Matrix act = inf_action_matrix(md);
  out.push_back(check("model.inf_action_kernel_is_gm", kernel(act) == md.inst.gm()));
  const Subspace g_orbit = image(act);
  const Subspace h_orbit = image(act * md.inst.h().basis());

  const Subspace ker_g = kernel(dphi_G(md));
  const Subspace ker_h = kernel(dphi_H(md));
  const Subspace t0_n1 = sum(image(act, md.chain.g_mu), md.block(md.V));
  out.push_back(check("model.ker_dphi_G = g_mu.m + N1", ker_g == t0_n1));
  out.push_back(check("model.ker_dphi_G ⊆ ker_dphi_H", ker_h.contains(ker_g)));
  out.push_back(check("model.ker_dphi_G = (g.m)^omega", ker_g == omega_orthogonal(md, g_orbit)));
  out.push_back(check("model.ker_dphi_H = (h.m)^omega", ker_h == omega_orthogonal(md, h_orbit)));

  {
    // <f(w), y> = omega(y_M(m), w) for y in m and w in N0
    bool ok = true;
    const Matrix m_basis = md.group_basis.middleCols(md.dim_gm, md.dim_m);
    for (Index j = 0; j < md.dim_m && ok; ++j) {
      TangentVector w{Vector::Zero(md.U.count), unit(md.dim_m, j), Vector::Zero(md.V.count)};
      const Vector fw = f_map(md, w);
      for (Index i = 0; i < md.dim_m; ++i) {
        const Vector y = m_basis.col(i);
        const Rational lhs = iota_m(md, fw).dot(y);
        const Rational rhs = md.omega(md.pack(inf_action(md, y)), md.pack(w));
        if (lhs != rhs || lhs != (i == j ? Rational(1) : Rational(0))) ok = false;
      }
    }
    out.push_back(check("model.f_contract", ok, "<f(w), y> != omega(y_M(m), w) for some basis pair"));
  }
  {
    bool ok = true;
    const Matrix d = dphi_G(md);
    for (Index k = 0; k < md.dim_gm && ok; ++k) {
      const Vector eta = md.inst.gm_basis.col(k);
      const Matrix act_eta = gm_action(md, eta);
      const Matrix symplectic_defect = act_eta.transpose() * md.omega.gram() + md.omega.gram() * act_eta;
      const Matrix equivariance_defect = d * act_eta + coad_matrix<Rational>(md.inst.algebra, eta) * d;
      ok = all_zero(symplectic_defect) && all_zero(equivariance_defect);
    }
    out.push_back(check("model.gm_action_symplectic_and_dphi_equivariant", ok));
  }
  return out;
}

}  // namespace wittartin
