#include "wittartin/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "wittartin/decomposition.hpp"
#include "wittartin/instance_io.hpp"
#include "wittartin/verify.hpp"

namespace wittartin {

using nlohmann::ordered_json;

namespace {

ordered_json space_json(const Subspace& v) {
  ordered_json out;
  out["dim"] = v.dim();
  out["basis"] = columns_to_json(v.basis());
  return out;
}

ordered_json model_json(const TangentModel& md) {
  ordered_json out;
  out["total_dim"] = md.total_dim();
  ordered_json labels = ordered_json::array();
  auto label = [&labels](const std::string& name, BlockRange r) {
    for (Index i = 0; i < r.count; ++i) labels.push_back(name + "[" + std::to_string(i) + "]");
  };
  label("p", md.p);
  label("b", md.b);
  label("a", md.a);
  label("s(G,H,mu)", md.s);
  label("n_tilde", md.ntilde);
  label("r", md.r);
  label("p*", md.p_dual);
  label("b*", md.b_dual);
  label("N1", md.V);
  out["coordinates"] = labels;
  out["group_basis"] = columns_to_json(md.group_basis);
  out["omega"] = matrix_to_json(md.omega.gram());
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  // display width, counting UTF-8 continuation bytes as zero
  std::size_t shown = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++shown;
  return s + std::string(shown < width ? width - shown : 0, ' ');
}

}  // namespace

ordered_json checks_to_json(const CheckReport& checks) {
  ordered_json out = ordered_json::array();
  for (const CheckResult& c : checks) {
    ordered_json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    if (!c.detail.empty()) item["detail"] = c.detail;
    out.push_back(item);
  }
  return out;
}

Report decomposition_report(const ProblemInstance& inst, const ReportOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  ordered_json& doc = rep.doc;
  doc["instance"] = instance_to_json(inst);

  VerifyOptions verify;
  verify.include_tube = false;
  const CheckReport checks = verify_instance(inst, verify);
  rep.passed = all_passed(checks);

  try {
    const SplittingChain chain = build_chain(inst);
    ordered_json chain_json;
    for (const auto& [name, space] : named_spaces(chain)) chain_json[name] = space_json(space);
    doc["chain"] = chain_json;

    const DimReport dims = dim_formulas(chain, inst.slice.dim);
    ordered_json dims_json;
    for (const auto& [name, space] : named_spaces(chain)) dims_json[name] = space.dim();
    dims_json["N1"] = dims.slice_dim;
    dims_json["N1_tilde (dim N1 + 2 dim b + dim s)"] = dims.n1_tilde_dim;
    dims_json["ker DPhi_H - ker DPhi_G (dim q + dim b)"] = dims.ker_gap;
    doc["dims"] = dims_json;

    const TangentModel md = build_model(chain, inst);
    doc["model"] = model_json(md);

    const WittDecompositionG dg = assemble_G(md);
    ordered_json g;
    g["T0"] = space_json(dg.T0);
    g["T1"] = space_json(dg.T1);
    g["N0"] = space_json(dg.N0);
    g["N1"] = space_json(dg.N1);
    g["gram_T1"] = matrix_to_json(dg.gram_T1);
    g["gram_N1"] = matrix_to_json(dg.gram_N1);
    doc["witt_artin_G"] = g;

    const WittDecompositionH dh = assemble_H(md);
    ordered_json h;
    h["TH0"] = space_json(dh.TH0);
    h["TH1"] = space_json(dh.TH1);
    h["NH0"] = space_json(dh.NH0);
    h["NH1"] = space_json(dh.NH1);
    h["s(G,H,mu).m"] = space_json(dh.s_block);
    h["X_m"] = space_json(dh.Xm);
    h["b.m"] = space_json(dh.bm);
    h["Y_m"] = space_json(dh.Ym);
    h["Z_m"] = space_json(dh.Zm);
    h["M"] = space_json(dh.M);
    doc["witt_artin_H"] = h;

    const SliceForm sf = slice_form(dh, md);
    ordered_json n1t;
    n1t["dim"] = sf.form.ambient_dim();
    n1t["blocks"] = {{"s(G,H,mu).m", sf.s.count}, {"b.m", sf.bm.count}, {"Y_m", sf.Ym.count}, {"N1", sf.N1.count}};
    n1t["omega"] = matrix_to_json(sf.form.gram());
    doc["N1_tilde"] = n1t;
  } catch (const Error& e) {
    doc["construction_error"] = e.what();
    rep.passed = false;
  }

  doc["checks"] = checks_to_json(checks);
  doc["passed"] = rep.passed;
  if (options.timing) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    doc["timing_ms"] = elapsed.count();
  }
  return rep;
}

std::string render_json(const Report& report) { return report.doc.dump(2) + "\n"; }

std::string render_text(const Report& report) {
  const ordered_json& doc = report.doc;
  std::ostringstream os;
  os << "instance: dim g = " << doc["instance"]["dim"].get<int>() << ", dim h = " << doc["instance"]["h_basis"].size()
     << ", dim g_m = " << doc["instance"]["gm_basis"].size() << ", dim N1 = " << doc["instance"]["slice"]["dim"].get<int>()
     << "\n";
  if (doc.contains("dims")) {
    os << "\nsplitting chain\n";
    for (const auto& [name, value] : doc["dims"].items()) os << "  " << pad(name, 44) << value.get<int>() << "\n";
    os << "\nWitt-Artin decomposition for G\n";
    for (const char* key : {"T0", "T1", "N0", "N1"})
      os << "  " << pad(key, 44) << doc["witt_artin_G"][key]["dim"].get<int>() << "\n";
    os << "\nWitt-Artin decomposition for H\n";
    for (const char* key : {"TH0", "TH1", "NH0", "NH1", "s(G,H,mu).m", "X_m", "b.m", "Y_m", "Z_m", "M"})
      os << "  " << pad(key, 44) << doc["witt_artin_H"][key]["dim"].get<int>() << "\n";
    os << "\nN1_tilde = s(G,H,mu).m + X_m + N1, omega in block basis (s, b.m, Y_m, N1)\n";
    for (const auto& row : doc["N1_tilde"]["omega"]) {
      os << "  ";
      for (const auto& entry : row) os << std::setw(6) << entry.get<std::string>();
      os << "\n";
    }
  }
  if (doc.contains("construction_error")) os << "\nconstruction failed: " << doc["construction_error"].get<std::string>() << "\n";
  os << "\nchecks\n";
  std::size_t failed = 0;
  for (const auto& c : doc["checks"]) {
    const bool ok = c["passed"].get<bool>();
    failed += ok ? 0 : 1;
    os << "  " << (ok ? "PASS  " : "FAIL  ") << c["name"].get<std::string>();
    if (c.contains("detail")) os << "  (" << c["detail"].get<std::string>() << ")";
    os << "\n";
  }
  os << "\n" << doc["checks"].size() - failed << "/" << doc["checks"].size() << " checks passed\n";
  if (doc.contains("timing_ms")) os << "time: " << std::fixed << std::setprecision(2) << doc["timing_ms"].get<double>() << " ms\n";
  return os.str();
}

}  // namespace wittartin
