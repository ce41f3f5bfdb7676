// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"
#include "wittartin/catalog.hpp"
#include "wittartin/decomposition.hpp"
#include "wittartin/report.hpp"
#include "wittartin/sampling.hpp"
#include "wittartin/tube.hpp"
#include "wittartin/verify.hpp"

using namespace wittartin;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failure reasons for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  bool passed() const { return failures.empty(); }
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void require_all(Outcome& out, const CheckReport& report, const std::string& context) {
  for (const auto& c : report) out.require(c.passed, context + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

const std::vector<corpus::Entry>& corpus_entries() {
  static const std::vector<corpus::Entry> e = corpus::make(120, 7);
  return e;
}

Outcome so3_golden_tables() {
  Outcome out;
  const auto start = Clock::now();
  struct Case {
    const char* name;
    long s, b, xm;
  };
  const Case cases[] = {{"so3-generic", 0, 1, 2}, {"so3-collinear", 2, 0, 0}, {"so3-zero", 0, 2, 4}};
  for (const Case& c : cases) {
    const ProblemInstance inst = catalog_instance(c.name);
    const Report rep = decomposition_report(inst);
    const auto& dims = rep.doc["dims"];
    const auto& h = rep.doc["witt_artin_H"];
    const auto& blocks = rep.doc["N1_tilde"]["blocks"];
    const std::string ctx = c.name;
    out.require(rep.passed, ctx + ": report has failed checks");
    out.require(dims["s(G,H,mu)"].get<long>() == c.s, ctx + ": dim s");
    out.require(dims["b"].get<long>() == c.b, ctx + ": dim b");
    out.require(h["X_m"]["dim"].get<long>() == c.xm, ctx + ": dim X_m");
    out.require(blocks["s(G,H,mu).m"].get<long>() == c.s, ctx + ": s.m block of N1_tilde");
    out.require(blocks["b.m"].get<long>() + blocks["Y_m"].get<long>() == c.xm, ctx + ": X_m block of N1_tilde");
    out.require(blocks["N1"].get<long>() == inst.slice.dim, ctx + ": N1 block of N1_tilde");
    out.require(h["NH1"]["dim"].get<long>() == c.s + c.xm + inst.slice.dim, ctx + ": NH1 = s.m + X_m + N1");
    const auto golden = std::filesystem::path(WITTARTIN_DATA_DIR) / "golden" /
                        (std::string(c.name).replace(3, 1, "_") + ".report.json");
    out.require(render_json(rep) == read_file(golden), ctx + ": differs from " + golden.string());
  }
  // mu = 0: b is a complement of h, so X_m = b.m + Y_m is g/h + (g/h)*
  const ProblemInstance zero = catalog_instance("so3-zero");
  const SplittingChain chain = build_chain(zero);
  out.require(is_direct_sum({chain.b, zero.h()}) && sum(chain.b, zero.h()) == Subspace::full(3),
              "so3-zero: b is not a complement of h");
  const double t = seconds_since(start);
  out.require(t < 1.0, "runtime " + std::to_string(t) + " s >= 1 s");
  out.summary = "3 cases, " + std::to_string(t) + " s";
  return out;
}

Outcome abelian_tori() {
  Outcome out;
  Sampler rng(2024);
  int count = 0;
  double worst = 0;
  for (Index n = 2; n <= 6; ++n) {
    for (Index k = 1; k < n; ++k) {
      const auto start = Clock::now();
      ProblemInstance inst = catalog_instance("torus", {n, k});
      inst.mu = rng.rational_vector(n, 9, 7);
      const std::string ctx = "torus(" + std::to_string(n) + "," + std::to_string(k) + ")";
      const TangentModel md = build_model(build_chain(inst), inst);
      const WittDecompositionH d = assemble_H(md);
      require_all(out, check_decomposition_H(d, md), ctx);
      const SliceForm sf = slice_form(d, md);
      require_all(out, check_slice_form(sf, md), ctx);
      out.require(d.s_block.dim() == 0 && sf.s.count == 0, ctx + ": s != 0");
      out.require(d.Xm.dim() == 2 * (n - k), ctx + ": dim X_m != 2(n-k)");
      out.require(all_zero(md.psi.gram()), ctx + ": Chu block nonzero");
      const double t = seconds_since(start);
      worst = std::max(worst, t);
      out.require(t < 1.0, ctx + ": runtime " + std::to_string(t) + " s >= 1 s");
      ++count;
    }
  }
  out.summary = std::to_string(count) + " tori, slowest " + std::to_string(worst) + " s";
  return out;
}

Outcome property_suite() {
  Outcome out;
  const auto start = Clock::now();
  const auto& entries = corpus_entries();
  int zero_mu = 0, with_gm = 0, families[3] = {0, 0, 0}, slices[3] = {0, 0, 0};
  std::size_t checks = 0;
  for (const auto& [label, inst] : entries) {
    const CheckReport report = verify_instance(inst);
    require_all(out, report, label);
    out.require(report.size() >= 40, label + ": fewer than 40 named checks");
    checks += report.size();
    zero_mu += all_zero(inst.mu);
    with_gm += inst.gm_basis.cols() > 0;
    families[label.find("so3xso3") != std::string::npos ? 2 : label.find("so3") != std::string::npos ? 1 : 0]++;
    ++slices[inst.slice.dim / 2];
  }
  out.require(entries.size() >= 100, "corpus smaller than 100");
  out.require(zero_mu > 0 && with_gm > 0, "corpus lacks mu = 0 or g_m != 0 instances");
  for (int f : families) out.require(f > 0, "corpus lacks an algebra family");
  for (int s : slices) out.require(s > 0, "corpus lacks a slice dimension");
  const double t = seconds_since(start);
  out.require(t < 60.0, "runtime " + std::to_string(t) + " s >= 60 s");
  out.summary = std::to_string(entries.size()) + " instances, " + std::to_string(checks) + " checks, " +
                std::to_string(t) + " s";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  int compared = 0;
  for (const auto& [label, inst] : corpus_entries()) {
    const TangentModel md = build_model(build_chain(inst), inst);
    if (md.total_dim() > 10) continue;
    const WittDecompositionH d = assemble_H(md);
    const Matrix constructed = sum(d.TH0, d.NH1).basis();
    out.require(oracle::same_column_span(oracle::kernel_columns(dphi_H(md)), constructed),
                label + ": ker DPhi_H != TH0 + NH1");
    ++compared;
  }
  out.require(compared >= 50, "only " + std::to_string(compared) + " instances with model dim <= 10");
  out.summary = std::to_string(compared) + " instances compared";
  return out;
}

Outcome tube_consistency() {
  Outcome out;
  const auto start = Clock::now();
  std::vector<std::pair<std::string, ProblemInstance>> family;
  for (const auto& name : catalog_names())
    if (name.rfind("so3", 0) == 0) family.emplace_back(name, catalog_instance(name));
  for (const auto& [label, inst] : corpus_entries())
    if (label.find("so3") != std::string::npos) family.emplace_back(label, inst);
  for (const auto& [label, inst] : family) {
    const TangentModel md = build_model(build_chain(inst), inst);
    const TubePoint<Rational> origin{Vector::Zero(md.dim_g()), Vector::Zero(md.dim_m), Vector::Zero(md.dim_slice)};
    out.require(omega_tube_gram(md, origin, model_tube_basis(md)) == md.omega.gram(), label + ": omega_tube at origin");
    require_all(out, check_dphi_consistency(md, 1e-4, 1e-6), label);
    require_all(out, phi_equivariance_check(md, 20, {1e-9}, 11), label);
  }
  const double t = seconds_since(start);
  out.require(t < 10.0, "runtime " + std::to_string(t) + " s >= 10 s");
  out.summary = std::to_string(family.size()) + " so(3)-family instances, " + std::to_string(t) + " s";
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 so(3) golden tables", so3_golden_tables},
      {"2 abelian tori", abelian_tori},
      {"3 randomized property suite", property_suite},
      {"4 oracle kernel equivalence", oracle_equivalence},
      {"5 tube consistency", tube_consistency},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.passed() ? "PASS " : "FAIL ") << name << " [" << o.summary << "]\n";
    const std::size_t shown = std::min<std::size_t>(o.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << o.failures[i] << "\n";
    if (o.failures.size() > shown) std::cout << "    ... " << o.failures.size() - shown << " more\n";
    failed += !o.passed();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
