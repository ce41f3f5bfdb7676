#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wittartin/catalog.hpp"
#include "wittartin/splitting.hpp"

using namespace wittartin;

namespace {

Vector vec(std::initializer_list<int> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (int x : entries) v(i++) = x;
  return v;
}

const CheckResult* find(const CheckReport& report, const std::string& name) {
  for (const auto& c : report)
    if (c.name == name) return &c;
  return nullptr;
}

void expect_only_failure(const CheckReport& report, const std::string& name) {
  const CheckResult* c = find(report, name);
  ASSERT_NE(c, nullptr) << name;
  EXPECT_FALSE(c->passed) << name;
  EXPECT_FALSE(c->detail.empty());
  for (const auto& other : report) {
    if (other.name != name) {
      EXPECT_TRUE(other.passed) << other.name << ": " << other.detail;
    }
  }
}

struct Dims {
  Index h_mu, p, b, a, s, ntilde, r;
};

void expect_dims(const SplittingChain& c, const Dims& d) {
  EXPECT_EQ(c.h_mu.dim(), d.h_mu);
  EXPECT_EQ(c.p.dim(), d.p);
  EXPECT_EQ(c.b.dim(), d.b);
  EXPECT_EQ(c.a.dim(), d.a);
  EXPECT_EQ(c.s.dim(), d.s);
  EXPECT_EQ(c.ntilde.dim(), d.ntilde);
  EXPECT_EQ(c.r.dim(), d.r);
}

ProblemInstance with_slice_dim(ProblemInstance inst, Index dim) {
  inst.slice.dim = dim;
  Matrix j = Matrix::Zero(dim, dim);
  for (Index i = 0; i + 1 < dim; i += 2) {
    j(i, i + 1) = 1;
    j(i + 1, i) = -1;
  }
  inst.slice.omega = BilinearForm(j);
  inst.slice.action.assign(static_cast<std::size_t>(inst.gm_basis.cols()), Matrix::Zero(dim, dim));
  return inst;
}

}  // namespace

TEST(Validate, So3GenericPassesEverything) {
  const CheckReport report = validate(catalog_instance("so3-generic"));
  EXPECT_TRUE(all_passed(report));
  EXPECT_GE(report.size(), 10u);
}

TEST(Validate, StabilizerOutsideGMu) {
  ProblemInstance inst = catalog_instance("so3-generic");
  inst.mu = vec({1, 0, 0});
  inst.gm_basis = Matrix(vec({0, 0, 1}));
  inst.slice.action.assign(1, Matrix::Zero(2, 2));
  inst.h_basis = Matrix(vec({0, 0, 1}));
  expect_only_failure(validate(inst), "gm.in_g_mu");
}

TEST(Validate, NonInvariantInnerProduct) {
  ProblemInstance inst = catalog_instance("so3-collinear");
  inst.gm_basis = Matrix(vec({0, 0, 1}));
  inst.slice.action.assign(1, Matrix::Zero(2, 2));
  Matrix ip = Matrix::Zero(3, 3);
  ip(0, 0) = 1;
  ip(1, 1) = 2;
  ip(2, 2) = 3;
  inst.ip = BilinearForm(ip);
  expect_only_failure(validate(inst), "ip.ad_gm_invariant");
}

TEST(Validate, SliceActionMustBeSymplectic) {
  ProblemInstance inst = catalog_instance("so3xso3-stabilized");
  inst.slice.action[0] << 1, 0, 0, 0;
  const CheckResult* c = find(validate(inst), "slice.action_symplectic");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
}

TEST(Validate, HMustBeSubalgebra) {
  ProblemInstance inst = catalog_instance("so3-generic");
  Matrix h = Matrix::Zero(3, 2);
  h(0, 0) = h(1, 1) = 1;
  inst.h_basis = h;
  EXPECT_FALSE(find(validate(inst), "h.subalgebra")->passed);
  EXPECT_THROW(build_chain(inst), Error);
}

TEST(BuildChain, So3NotCollinear) {
  const SplittingChain c = build_chain(catalog_instance("so3-generic"));
  expect_dims(c, {0, 0, 1, 1, 0, 0, 1});
  EXPECT_EQ(c.b, Subspace::span(Matrix(vec({0, 0, 1}))));
  EXPECT_EQ(c.a, Subspace::span(Matrix(vec({1, 0, 0}))));
}

TEST(BuildChain, So3Collinear) {
  const SplittingChain c = build_chain(catalog_instance("so3-collinear"));
  expect_dims(c, {1, 1, 0, 0, 2, 0, 0});
  EXPECT_EQ(c.s, Subspace::coordinate(3, 0, 2));
}

TEST(BuildChain, So3ZeroMomentum) {
  const SplittingChain c = build_chain(catalog_instance("so3-zero"));
  expect_dims(c, {1, 1, 2, 0, 0, 0, 0});
}

TEST(BuildChain, TorusFamily) {
  for (Index n = 1; n <= 5; ++n) {
    for (Index k = 0; k <= n; ++k) {
      const SplittingChain c = build_chain(catalog_instance("torus", {n, k}));
      EXPECT_EQ(c.s.dim(), 0);
      EXPECT_EQ(c.a.dim(), 0);
      EXPECT_EQ(c.b.dim(), n - k);
      EXPECT_EQ(c.r.dim(), 0);
    }
  }
}

TEST(BuildChain, WholeAlgebraAsSubgroup) {
  for (const Vector& mu : {vec({0, 0, 0}), vec({0, 0, 1}), vec({1, 2, -3})}) {
    ProblemInstance inst = catalog_instance("so3-generic");
    inst.h_basis = Matrix::Identity(3, 3);
    inst.mu = mu;
    const SplittingChain c = build_chain(inst);
    EXPECT_EQ(c.s.dim(), 0);
    EXPECT_EQ(c.a.dim(), 0);
    EXPECT_EQ(c.b.dim(), 0);
    EXPECT_EQ(c.q.dim(), 0);
    EXPECT_EQ(dim_formulas(c, 4).n1_tilde_dim, 4);
  }
}

TEST(BuildChain, EmptySubgroup) {
  ProblemInstance inst = catalog_instance("so3-generic");
  inst.h_basis = Matrix(3, 0);
  const SplittingChain c = build_chain(inst);
  EXPECT_EQ(c.h_perp_mu, Subspace::full(3));
  EXPECT_EQ(c.h_alpha.dim(), 0);
  EXPECT_TRUE(all_passed(check_chain(c, inst)));
}

TEST(BuildChain, DiagonalSo3MatchesRankOracle) {
  const ProblemInstance inst = catalog_instance("so3xso3-diagonal");
  const SplittingChain c = build_chain(inst);
  const oracle::ChainDims o = oracle::chain_dims(inst);
  // frozen oracle output
  EXPECT_EQ(o.g_mu, 2);
  EXPECT_EQ(o.h_mu, 1);
  EXPECT_EQ(o.h_perp_mu, 4);
  EXPECT_EQ(o.h_alpha, 1);
  EXPECT_EQ(o.a, 0);
  EXPECT_EQ(o.s, 2);
  EXPECT_EQ(o.ntilde, 2);
  EXPECT_EQ(o.r, 0);
  EXPECT_EQ(o.p, 1);
  EXPECT_EQ(o.b, 1);
  EXPECT_EQ(c.g_mu.dim(), o.g_mu);
  EXPECT_EQ(c.h_mu.dim(), o.h_mu);
  EXPECT_EQ(c.h_perp_mu.dim(), o.h_perp_mu);
  EXPECT_EQ(c.h_alpha.dim(), o.h_alpha);
  EXPECT_EQ(c.a.dim(), o.a);
  EXPECT_EQ(c.s.dim(), o.s);
  EXPECT_EQ(c.ntilde.dim(), o.ntilde);
  EXPECT_EQ(c.r.dim(), o.r);
  EXPECT_EQ(c.p.dim(), o.p);
  EXPECT_EQ(c.b.dim(), o.b);
}

TEST(BuildChain, AllIdentitiesHoldOnCatalog) {
  for (const auto& name : catalog_names()) {
    const ProblemInstance inst = catalog_instance(name);
    const CheckReport report = check_chain(build_chain(inst), inst);
    for (const auto& c : report) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
  }
}

TEST(BuildChain, StabilizedExampleKeepsBlocksInvariant) {
  const ProblemInstance inst = catalog_instance("so3xso3-stabilized");
  const SplittingChain c = build_chain(inst);
  EXPECT_EQ(c.hm.dim(), 1);
  for (const auto& [name, space] : named_spaces(c))
    EXPECT_TRUE(is_gm_invariant(inst.algebra, inst.gm(), space)) << name;
}

TEST(BuildChain, IsDeterministic) {
  const ProblemInstance inst = catalog_instance("so3xso3-stabilized");
  const auto a = named_spaces(build_chain(inst));
  const auto b = named_spaces(build_chain(inst));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, b[i].first);
    EXPECT_EQ(a[i].second.basis(), b[i].second.basis()) << a[i].first;
  }
}

TEST(DimFormulas, So3Cases) {
  EXPECT_EQ(dim_formulas(build_chain(with_slice_dim(catalog_instance("so3-generic"), 4)), 4).n1_tilde_dim, 6);
  EXPECT_EQ(dim_formulas(build_chain(with_slice_dim(catalog_instance("so3-collinear"), 4)), 4).n1_tilde_dim, 6);
  EXPECT_EQ(dim_formulas(build_chain(catalog_instance("so3-zero")), 2).n1_tilde_dim, 6);
}

TEST(DimFormulas, InclusionExclusionForS) {
  for (const auto& name : catalog_names()) {
    const SplittingChain c = build_chain(catalog_instance(name));
    const DimReport d = dim_formulas(c, 2);
    EXPECT_EQ(d.s_inclusion_exclusion, c.s.dim()) << name;
    EXPECT_EQ(d.ker_gap, c.q.dim() + c.b.dim()) << name;
  }
}

TEST(SliceMomentumMap, QuadraticInNu) {
  const ProblemInstance inst = catalog_instance("so3xso3-stabilized");
  Vector nu(2);
  nu << 1, 2;
  // A = [[0,-1],[1,0]], omega = J: (1/2) omega(A nu, nu) = -(1/2)|nu|^2
  EXPECT_EQ(slice_momentum_map(inst, nu)(0), Rational(-5, 2));
  EXPECT_EQ(slice_momentum_map(inst, Vector(2 * nu))(0), Rational(-10));
  EXPECT_THROW(gm_coordinates(inst, vec({1, 0, 0, 0, 0, 0})), Error);
}
