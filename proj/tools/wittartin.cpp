// Command-line front end: check, decompose, verify, example.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wittartin/catalog.hpp"
#include "wittartin/instance_io.hpp"
#include "wittartin/report.hpp"
#include "wittartin/verify.hpp"

namespace {

using namespace wittartin;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Loads an instance. Parse problems print a diagnostic and yield kUsage; an
/// invalid Lie algebra is reported as a failed check and yields kCheckFailed.
std::optional<ProblemInstance> load_or_report(const std::string& path, int& exit_code) {
  try {
    return load_instance(path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidAlgebra) {
      nlohmann::ordered_json doc;
      doc["checks"] = checks_to_json({{"algebra.lie", false, e.what()}});
      doc["passed"] = false;
      std::cout << doc.dump(2) << "\n";
      exit_code = kCheckFailed;
    } else {
      std::cerr << "wittartin: " << path << ": " << e.what() << "\n";
      exit_code = kUsage;
    }
    return std::nullopt;
  }
}

int cmd_check(const std::string& path) {
  int code = kOk;
  const auto inst = load_or_report(path, code);
  if (!inst) return code;
  const CheckReport report = validate(*inst);
  nlohmann::ordered_json doc;
  doc["checks"] = checks_to_json(report);
  doc["passed"] = all_passed(report);
  std::cout << doc.dump(2) << "\n";
  return all_passed(report) ? kOk : kCheckFailed;
}

int cmd_decompose(const std::string& path, const std::string& format, bool timing) {
  int code = kOk;
  const auto inst = load_or_report(path, code);
  if (!inst) return code;
  const Report report = decomposition_report(*inst, {timing});
  std::cout << (format == "text" ? render_text(report) : render_json(report));
  return report.passed ? kOk : kCheckFailed;
}

int cmd_verify(const std::vector<std::string>& paths, bool all_examples, int samples) {
  std::vector<std::pair<std::string, ProblemInstance>> work;
  if (all_examples) {
    for (const std::string& name : catalog_names()) work.emplace_back(name, catalog_instance(name));
  }
  for (const std::string& path : paths) {
    int code = kOk;
    auto inst = load_or_report(path, code);
    if (!inst) return code;
    work.emplace_back(path, std::move(*inst));
  }
  if (work.empty()) {
    std::cerr << "wittartin: verify needs a file or --all-examples\n";
    return kUsage;
  }
  VerifyOptions options;
  options.samples = samples;
  std::size_t total = 0, failed = 0;
  for (const auto& [label, inst] : work) {
    const CheckReport report = verify_instance(inst, options);
    std::size_t bad = 0;
    std::cout << "== " << label << "\n";
    for (const CheckResult& c : report) {
      bad += c.passed ? 0 : 1;
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << report.size() - bad << "/" << report.size() << " checks passed\n\n";
    total += report.size();
    failed += bad;
  }
  std::cout << "total: " << total - failed << "/" << total << " checks passed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

int cmd_example(const std::string& name, const CatalogParams& params) {
  try {
    std::cout << dump_instance(catalog_instance(name, params));
    return kOk;
  } catch (const Error& e) {
    std::cerr << "wittartin: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatible Witt-Artin decompositions and symplectic slices"};
  app.require_subcommand(1);

  std::string path;
  auto* check = app.add_subcommand("check", "validate an instance file");
  check->add_option("file", path, "instance file")->required();

  std::string format = "json";
  bool timing = false;
  auto* decompose = app.add_subcommand("decompose", "report both Witt-Artin decompositions");
  decompose->add_option("file", path, "instance file")->required();
  decompose->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  decompose->add_flag("--timing", timing, "append wall-clock time (breaks byte-stable output)");

  std::vector<std::string> files;
  bool all_examples = false;
  int samples = 10;
  auto* verify = app.add_subcommand("verify", "run every named check");
  verify->add_option("files", files, "instance files");
  verify->add_flag("--all-examples", all_examples, "verify every catalog example");
  verify->add_option("--samples", samples, "random vectors per sampled identity")->check(CLI::PositiveNumber);

  std::string name;
  CatalogParams params;
  auto* example = app.add_subcommand("example", "print a catalog instance");
  example->add_option("name", name, "one of: so3-generic so3-collinear so3-zero torus so3xso3-diagonal "
                                    "so3xso3-stabilized")
      ->required();
  example->add_option("--dim", params.dim, "torus dimension n");
  example->add_option("--subdim", params.subdim, "torus subgroup dimension k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(path);
    if (*decompose) return cmd_decompose(path, format, timing);
    if (*verify) return cmd_verify(files, all_examples, samples);
    if (*example) return cmd_example(name, params);
  } catch (const Error& e) {
    std::cerr << "wittartin: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
