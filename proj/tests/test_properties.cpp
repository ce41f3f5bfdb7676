#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "wittartin/decomposition.hpp"
#include "wittartin/verify.hpp"

using namespace wittartin;

namespace {

const std::vector<corpus::Entry>& entries() {
  static const std::vector<corpus::Entry> e = corpus::make(60, 101);
  return e;
}

}  // namespace

TEST(Corpus, GeneratorCoversTheInstanceFamilies) {
  int abelian = 0, zero_mu = 0, with_gm = 0, slices[3] = {0, 0, 0};
  for (const auto& [label, inst] : entries()) {
    abelian += label.find("abelian") != std::string::npos;
    zero_mu += all_zero(inst.mu);
    with_gm += inst.gm_basis.cols() > 0;
    ++slices[inst.slice.dim / 2];
  }
  EXPECT_GT(abelian, 0);
  EXPECT_GT(zero_mu, 0);
  EXPECT_GT(with_gm, 0);
  for (int s : slices) EXPECT_GT(s, 0);
}

TEST(Corpus, EveryNamedCheckPasses) {
  VerifyOptions options;
  options.tube_samples = 5;
  for (const auto& [label, inst] : entries()) {
    for (const auto& c : verify_instance(inst, options)) EXPECT_TRUE(c.passed) << label << ": " << c.name << " " << c.detail;
  }
}

TEST(Corpus, ChainDimensionsMatchRankOracle) {
  for (const auto& [label, inst] : entries()) {
    const SplittingChain c = build_chain(inst);
    const oracle::ChainDims o = oracle::chain_dims(inst);
    EXPECT_EQ(c.g_mu.dim(), o.g_mu) << label;
    EXPECT_EQ(c.h_mu.dim(), o.h_mu) << label;
    EXPECT_EQ(c.hm.dim(), o.hm) << label;
    EXPECT_EQ(c.p.dim(), o.p) << label;
    EXPECT_EQ(c.b.dim(), o.b) << label;
    EXPECT_EQ(c.h_perp_mu.dim(), o.h_perp_mu) << label;
    EXPECT_EQ(c.h_alpha.dim(), o.h_alpha) << label;
    EXPECT_EQ(c.a.dim(), o.a) << label;
    EXPECT_EQ(c.s.dim(), o.s) << label;
    EXPECT_EQ(c.ntilde.dim(), o.ntilde) << label;
    EXPECT_EQ(c.r.dim(), o.r) << label;
    EXPECT_EQ(build_model(c, inst).total_dim(), o.model) << label;
  }
}

TEST(Corpus, KernelOfDPhiHMatchesOracle) {
  int compared = 0;
  for (const auto& [label, inst] : entries()) {
    const TangentModel md = build_model(build_chain(inst), inst);
    if (md.total_dim() > 10) continue;
    const WittDecompositionH d = assemble_H(md);
    const Matrix constructed = sum(d.TH0, d.NH1).basis();
    EXPECT_TRUE(oracle::same_column_span(oracle::kernel_columns(dphi_H(md)), constructed)) << label;
    // second route: the omega-orthogonal of h.m
    const Matrix h_orbit = inf_action_matrix(md) * inst.h().basis();
    const Matrix pairing = h_orbit.transpose() * md.omega.gram();
    EXPECT_TRUE(oracle::same_column_span(oracle::kernel_columns(pairing), constructed)) << label;
    ++compared;
  }
  EXPECT_GT(compared, 20);
}

TEST(Corpus, ChainIsDeterministic) {
  for (const auto& [label, inst] : entries()) {
    const auto a = named_spaces(build_chain(inst));
    const auto b = named_spaces(build_chain(inst));
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].second.basis(), b[i].second.basis()) << label;
  }
}

TEST(Corpus, GeneratorIsReproducible) {
  const auto a = corpus::make(12, 5), b = corpus::make(12, 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].label, b[i].label);
    EXPECT_EQ(a[i].inst.mu, b[i].inst.mu);
    EXPECT_EQ(a[i].inst.h_basis, b[i].inst.h_basis);
  }
}
