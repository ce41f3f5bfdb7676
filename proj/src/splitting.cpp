#include "wittartin/splitting.hpp"

#include <sstream>

namespace wittartin {

namespace {

std::string pair_witness(const char* what, Index i, Index j) {
  std::ostringstream os;
  os << what << " fails for basis pair (" << i << ", " << j << ")";
  return os.str();
}

CheckResult pass(std::string name) { return {std::move(name), true, ""}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }
CheckResult check(std::string name, bool ok, std::string detail_on_fail = "") {
  return {std::move(name), ok, ok ? "" : std::move(detail_on_fail)};
}

bool independent(const Matrix& basis) { return rank(basis) == basis.cols(); }

CheckReport shape_checks(const ProblemInstance& inst) {
  CheckReport out;
  const Index n = inst.dim();
  std::string why;
  if (inst.h_basis.rows() != n) why = "h basis vectors have length " + std::to_string(inst.h_basis.rows());
  else if (inst.gm_basis.rows() != n) why = "g_m basis vectors have length " + std::to_string(inst.gm_basis.rows());
  else if (inst.mu.size() != n) why = "mu has length " + std::to_string(inst.mu.size());
  else if (inst.ip.ambient_dim() != n) why = "inner product is " + std::to_string(inst.ip.ambient_dim()) + "-dimensional";
  else if (inst.slice.omega.ambient_dim() != inst.slice.dim) why = "slice form does not match slice dim";
  else if (static_cast<Index>(inst.slice.action.size()) != inst.gm_basis.cols())
    why = "expected " + std::to_string(inst.gm_basis.cols()) + " slice action matrices, got " +
          std::to_string(inst.slice.action.size());
  else {
    for (std::size_t i = 0; i < inst.slice.action.size(); ++i) {
      const Matrix& a = inst.slice.action[i];
      if (a.rows() != inst.slice.dim || a.cols() != inst.slice.dim) why = "slice action " + std::to_string(i) + " has wrong size";
    }
    for (std::size_t i = 0; i < inst.gm_component_reps.size(); ++i) {
      const Matrix& r = inst.gm_component_reps[i];
      if (r.rows() != n || r.cols() != n) why = "g_m component representative " + std::to_string(i) + " has wrong size";
    }
  }
  out.push_back(check("shape", why.empty(), why));
  return out;
}

CheckResult subalgebra_check(const std::string& name, const LieAlgebra& algebra, const Subspace& sub) {
  if (auto bad = closure_defect(algebra, sub)) return fail(name, pair_witness("bracket closure", bad->first, bad->second));
  return pass(name);
}

}  // namespace

Vector gm_coordinates(const ProblemInstance& inst, const Vector& eta) {
  auto c = coordinates(inst.gm_basis, eta);
  if (!c) throw Error(ErrorCode::NotContained, "vector is not in g_m");
  return *c;
}

Matrix slice_action(const ProblemInstance& inst, const Vector& eta) {
  const Vector c = gm_coordinates(inst, eta);
  Matrix a = Matrix::Zero(inst.slice.dim, inst.slice.dim);
  for (Index i = 0; i < c.size(); ++i)
    if (c(i) != 0) a += c(i) * inst.slice.action[static_cast<std::size_t>(i)];
  return a;
}

Vector slice_momentum_map(const ProblemInstance& inst, const Vector& nu) {
  const Index l = inst.gm_basis.cols();
  Vector phi(l);
  for (Index i = 0; i < l; ++i) {
    phi(i) = inst.slice.omega(inst.slice.action[static_cast<std::size_t>(i)] * nu, nu) / 2;
  }
  return phi;
}

Vector slice_momentum_derivative(const ProblemInstance& inst, const Vector& nu, const Vector& nu_dot) {
  const Index l = inst.gm_basis.cols();
  Vector d(l);
  for (Index i = 0; i < l; ++i) {
    const Matrix& a = inst.slice.action[static_cast<std::size_t>(i)];
    d(i) = (inst.slice.omega(a * nu_dot, nu) + inst.slice.omega(a * nu, nu_dot)) / 2;
  }
  return d;
}

bool is_gm_invariant(const LieAlgebra& algebra, const Subspace& gm, const Subspace& v) {
  for (Index i = 0; i < gm.dim(); ++i) {
    const Matrix ad = ad_matrix<Rational>(algebra, gm.basis().col(i));
    for (Index j = 0; j < v.dim(); ++j)
      if (!v.contains(Vector(ad * v.basis().col(j)))) return false;
  }
  return true;
}

CheckReport validate(const ProblemInstance& inst) {
  CheckReport out = shape_checks(inst);
  if (!out.back().passed) return out;

  const LieAlgebra& g = inst.algebra;
  const Index n = g.dim();
  const Subspace h = inst.h();
  const Subspace gm = inst.gm();

  out.push_back(check("h.independent", independent(inst.h_basis), "h basis columns are dependent"));
  out.push_back(check("gm.independent", independent(inst.gm_basis), "g_m basis columns are dependent"));
  out.push_back(subalgebra_check("h.subalgebra", g, h));
  out.push_back(subalgebra_check("gm.subalgebra", g, gm));

  {
    const Subspace g_mu = stabilizer_of_momentum(g, inst.mu);
    CheckResult c = pass("gm.in_g_mu");
    for (Index i = 0; i < gm.dim(); ++i)
      if (!g_mu.contains(Vector(gm.basis().col(i)))) {
        c = fail("gm.in_g_mu", "ad*_eta mu != 0 for g_m basis vector " + std::to_string(i));
        break;
      }
    out.push_back(c);
  }
  {
    CheckResult c = pass("gm.normalizes_h");
    for (Index i = 0; i < gm.dim() && c.passed; ++i)
      for (Index j = 0; j < h.dim(); ++j)
        if (!h.contains(g.bracket<Rational>(gm.basis().col(i), h.basis().col(j)))) {
          c = fail("gm.normalizes_h", pair_witness("[g_m, h] ⊆ h", i, j));
          break;
        }
    out.push_back(c);
  }

  const bool symmetric = inst.ip.is_symmetric();
  out.push_back(check("ip.symmetric", symmetric, "inner product Gram matrix is not symmetric"));
  out.push_back(check("ip.positive_definite", symmetric && inst.ip.is_positive_definite(),
                      "a leading principal minor is not positive"));
  {
    CheckResult c = pass("ip.ad_gm_invariant");
    for (Index k = 0; k < gm.dim() && c.passed; ++k) {
      const Matrix ad = ad_matrix<Rational>(g, gm.basis().col(k));
      const Matrix defect = ad.transpose() * inst.ip.gram() + inst.ip.gram() * ad;
      for (Index i = 0; i < n && c.passed; ++i)
        for (Index j = 0; j < n; ++j)
          if (defect(i, j) != 0) {
            c = fail("ip.ad_gm_invariant", "g_m basis vector " + std::to_string(k) + ": " +
                                               pair_witness("<[eta,x],y> + <x,[eta,y]> = 0", i, j));
            break;
          }
    }
    out.push_back(c);
  }

  const SliceRep& slice = inst.slice;
  out.push_back(check("slice.omega_antisymmetric", slice.omega.is_antisymmetric(), "slice form is not antisymmetric"));
  out.push_back(check("slice.omega_nondegenerate", slice.dim == 0 || slice.omega.is_nondegenerate(),
                      "slice form is degenerate"));
  {
    CheckResult c = pass("slice.action_symplectic");
    for (std::size_t k = 0; k < slice.action.size(); ++k) {
      const Matrix& a = slice.action[k];
      const Matrix defect = a.transpose() * slice.omega.gram() + slice.omega.gram() * a;
      if (!all_zero(defect)) {
        c = fail("slice.action_symplectic", "action matrix " + std::to_string(k) + " is not infinitesimally symplectic");
        break;
      }
    }
    out.push_back(c);
  }
  {
    CheckResult c = pass("slice.action_homomorphism");
    const Index l = inst.gm_basis.cols();
    const bool basis_ok = independent(inst.gm_basis) && is_subalgebra(g, gm);
    for (Index i = 0; i < l && c.passed && basis_ok; ++i)
      for (Index j = i + 1; j < l; ++j) {
        const Vector br = g.bracket<Rational>(inst.gm_basis.col(i), inst.gm_basis.col(j));
        const Matrix& ai = slice.action[static_cast<std::size_t>(i)];
        const Matrix& aj = slice.action[static_cast<std::size_t>(j)];
        if (slice_action(inst, br) != Matrix(ai * aj - aj * ai)) {
          c = fail("slice.action_homomorphism", pair_witness("action([x,y]) = [action(x), action(y)]", i, j));
          break;
        }
      }
    if (!basis_ok) c = fail("slice.action_homomorphism", "g_m basis is not an independent subalgebra basis");
    out.push_back(c);
  }

  for (std::size_t k = 0; k < inst.gm_component_reps.size(); ++k) {
    const Matrix& rep = inst.gm_component_reps[k];
    const std::string tag = "gm_rep[" + std::to_string(k) + "].";
    CheckResult aut = pass(tag + "automorphism");
    for (Index i = 0; i < n && aut.passed; ++i)
      for (Index j = i + 1; j < n; ++j) {
        const Vector lhs = g.bracket<Rational>(rep.col(i), rep.col(j));
        const Vector rhs = rep * g.bracket<Rational>(unit(n, i), unit(n, j));
        if (lhs != rhs) {
          aut = fail(tag + "automorphism", pair_witness("[Rx, Ry] = R[x, y]", i, j));
          break;
        }
      }
    out.push_back(aut);
    out.push_back(check(tag + "preserves_h", h.contains(image(rep, h)), "R h is not inside h"));
    out.push_back(check(tag + "preserves_gm", gm.contains(image(rep, gm)), "R g_m is not inside g_m"));
    out.push_back(check(tag + "fixes_mu", Vector(rep.transpose() * inst.mu) == inst.mu, "Ad*_R mu != mu"));
    out.push_back(check(tag + "preserves_ip", Matrix(rep.transpose() * inst.ip.gram() * rep) == inst.ip.gram(),
                        "R^T G R != G"));
  }
  return out;
}

namespace {

// Lagrangian complement r to a inside C = (s ⊕ ñ)^Psi, starting from the
// ip-orthogonal complement c of g_mu ⊕ a in C and shearing it along a so that
// Psi vanishes on r. The shear is built from invariant data only, so r stays
// ad(g_m)-invariant.
Subspace lagrangian_r(const LieAlgebra& g, const Vector& mu, const BilinearForm& ip, const Subspace& g_mu,
                      const Subspace& a, const Subspace& s, const Subspace& ntilde) {
  const Index n = g.dim();
  const BilinearForm psi = chu_form(g, mu);
  const Subspace big_c = form_orthogonal(psi, sum(s, ntilde), Subspace::full(n));
  const Subspace c = orth_complement(sum(g_mu, a), big_c, ip);
  if (c.dim() != a.dim()) {
    throw Error(ErrorCode::ChainInconsistent, "identity 6: complement of g_mu + a in (s + n_tilde)^Psi has dim " +
                                                  std::to_string(c.dim()) + ", expected dim a = " +
                                                  std::to_string(a.dim()));
  }
  if (a.dim() == 0) return Subspace(n);
  const Matrix pairing = gram_between(psi, a.basis(), c.basis());  // Psi(a_i, c_k)
  const Matrix on_c = gram_on(psi, c);                             // Psi(c_j, c_k)
  Matrix shear;
  try {
    shear = inverse(pairing.transpose()) * on_c / Rational(2);
  } catch (const Error&) {
    throw Error(ErrorCode::ChainInconsistent, "identity 6: Psi does not pair a with its complement nondegenerately");
  }
  return Subspace::span(c.basis() + a.basis() * shear);
}

}  // namespace

SplittingChain build_chain(const ProblemInstance& inst) {
  const CheckReport report = validate(inst);
  for (const CheckResult& c : report)
    if (!c.passed) throw Error(ErrorCode::ValidationFailed, c.name + ": " + c.detail);

  const LieAlgebra& g = inst.algebra;
  const Subspace h = inst.h();
  const Subspace gm = inst.gm();
  const BilinearForm& ip = inst.ip;

  SplittingChain ch;
  try {
    ch.g_mu = stabilizer_of_momentum(g, inst.mu);
    ch.h_mu = intersect(h, ch.g_mu);
    ch.hm = intersect(h, gm);
    ch.hm_perp_in_gm = orth_complement(ch.hm, gm, ip);
    ch.p = orth_complement(ch.hm, ch.h_mu, ip);
    ch.b = orth_complement(sum(gm, ch.h_mu), ch.g_mu, ip);
    ch.h_perp_mu = h_perp_mu(g, h, inst.mu);
    ch.h_alpha = intersect(h, ch.h_perp_mu);
    ch.a = orth_complement(ch.h_mu, ch.h_alpha, ip);
    ch.s = orth_complement(sum(ch.g_mu, ch.h_alpha), ch.h_perp_mu, ip);
    ch.q = sum(ch.a, ch.s);
    ch.ntilde = orth_complement(ch.h_alpha, h, ip);
    ch.r = lagrangian_r(g, inst.mu, ip, ch.g_mu, ch.a, ch.s, ch.ntilde);
    ch.m_space = sum(ch.p, ch.b);
    ch.n_space = sum({ch.q, ch.ntilde, ch.r});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ChainInconsistent) throw;
    throw Error(ErrorCode::ChainInconsistent, e.what());
  }

  const CheckReport identities = check_chain(ch, inst);
  for (const CheckResult& c : identities)
    if (!c.passed) throw Error(ErrorCode::ChainInconsistent, c.name + (c.detail.empty() ? "" : ": " + c.detail));
  return ch;
}

std::vector<std::pair<std::string, Subspace>> named_spaces(const SplittingChain& ch) {
  return {{"g_mu", ch.g_mu},         {"h_mu", ch.h_mu},   {"h_m", ch.hm}, {"h_m_perp_in_g_m", ch.hm_perp_in_gm},
          {"p", ch.p},               {"b", ch.b},         {"h_perp_mu", ch.h_perp_mu},
          {"h_alpha", ch.h_alpha},   {"a", ch.a},         {"s(G,H,mu)", ch.s},
          {"q", ch.q},               {"n_tilde", ch.ntilde}, {"r", ch.r},
          {"m", ch.m_space},         {"n", ch.n_space}};
}

CheckReport check_chain(const SplittingChain& ch, const ProblemInstance& inst) {
  const LieAlgebra& g = inst.algebra;
  const Index n = g.dim();
  const Subspace h = inst.h();
  const Subspace gm = inst.gm();
  const Subspace all = Subspace::full(n);
  CheckReport out;

  out.push_back(check("chain.1 g_mu = h_m + p + h_m_perp + b",
                      is_direct_sum({ch.hm, ch.p, ch.hm_perp_in_gm, ch.b}) &&
                          sum({ch.hm, ch.p, ch.hm_perp_in_gm, ch.b}) == ch.g_mu &&
                          is_direct_sum({ch.hm, ch.p}) && sum(ch.hm, ch.p) == ch.h_mu &&
                          is_direct_sum({ch.hm, ch.hm_perp_in_gm}) && sum(ch.hm, ch.hm_perp_in_gm) == gm));
  out.push_back(check("chain.2 h_alpha = h_mu + a",
                      is_direct_sum({ch.h_mu, ch.a}) && sum(ch.h_mu, ch.a) == ch.h_alpha));
  out.push_back(check("chain.3 h_perp_mu = g_mu + a + s",
                      is_direct_sum({ch.g_mu, ch.a, ch.s}) && sum({ch.g_mu, ch.a, ch.s}) == ch.h_perp_mu));
  out.push_back(check("chain.4 q = a + s", is_direct_sum({ch.a, ch.s}) && sum(ch.a, ch.s) == ch.q));
  out.push_back(check("chain.5 h = h_alpha + n_tilde, n_tilde ∩ h_perp_mu = 0",
                      is_direct_sum({ch.h_alpha, ch.ntilde}) && sum(ch.h_alpha, ch.ntilde) == h &&
                          intersect(ch.ntilde, ch.h_perp_mu).dim() == 0));
  out.push_back(check("chain.6 g = h_perp_mu + n_tilde + r",
                      is_direct_sum({ch.h_perp_mu, ch.ntilde, ch.r}) &&
                          sum({ch.h_perp_mu, ch.ntilde, ch.r}) == all));
  out.push_back(check("chain.7 g = g_m + m + n",
                      is_direct_sum({gm, ch.m_space, ch.n_space}) && sum({gm, ch.m_space, ch.n_space}) == all &&
                          is_direct_sum({ch.p, ch.b}) && sum(ch.p, ch.b) == ch.m_space &&
                          is_direct_sum({ch.q, ch.ntilde, ch.r}) &&
                          sum({ch.q, ch.ntilde, ch.r}) == ch.n_space));
  out.push_back(check("chain.g_mu + h_alpha ⊆ h_perp_mu",
                      ch.h_perp_mu.contains(ch.g_mu) && ch.h_perp_mu.contains(ch.h_alpha)));
  out.push_back(check("chain.h_alpha two routes agree",
                      ch.h_alpha == stabilizer_in_subalgebra(g, h, inst.mu) && is_subalgebra(g, ch.h_alpha) &&
                          ch.h_alpha.contains(ch.h_mu)));
  {
    const DimReport d = dim_formulas(ch, inst.slice.dim);
    out.push_back(check("chain.dim_s inclusion-exclusion", ch.s.dim() == d.s_inclusion_exclusion,
                        "dim s = " + std::to_string(ch.s.dim()) + ", formula gives " +
                            std::to_string(d.s_inclusion_exclusion)));
    out.push_back(check("chain.dim r = dim a", ch.r.dim() == ch.a.dim()));
  }
  for (const auto& [label, space] : named_spaces(ch)) {
    out.push_back(check("chain.8 ad(g_m)-invariant " + label, is_gm_invariant(g, gm, space),
                        "[g_m, " + label + "] is not inside " + label));
  }
  for (std::size_t k = 0; k < inst.gm_component_reps.size(); ++k) {
    bool ok = true;
    for (const auto& entry : named_spaces(ch)) ok = ok && entry.second.contains(image(inst.gm_component_reps[k], entry.second));
    out.push_back(check("chain.invariant under gm_rep[" + std::to_string(k) + "]", ok));
  }
  return out;
}

DimReport dim_formulas(const SplittingChain& ch, Index slice_dim) {
  DimReport d;
  d.slice_dim = slice_dim;
  d.n1_tilde_dim = slice_dim + 2 * ch.b.dim() + ch.s.dim();
  d.ker_gap = ch.q.dim() + ch.b.dim();
  d.s_inclusion_exclusion = ch.h_perp_mu.dim() - ch.g_mu.dim() - ch.h_alpha.dim() + ch.h_mu.dim();
  return d;
}

}  // namespace wittartin
