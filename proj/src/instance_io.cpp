#include "wittartin/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace wittartin {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::Parse, path + ": " + message);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

Index read_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return static_cast<Index>(v.get<long long>());
}

Rational read_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) fail(path, "expected an exact rational, as an integer or a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Vector read_vector(const json& v, Index n, const std::string& path) {
  if (!v.is_array()) fail(path, "expected a list of rationals");
  if (static_cast<Index>(v.size()) != n)
    fail(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  Vector out(n);
  for (Index i = 0; i < n; ++i) out(i) = read_rational(v[static_cast<std::size_t>(i)], path + "[" + std::to_string(i) + "]");
  return out;
}

Matrix read_matrix(const json& v, Index rows, Index cols, const std::string& path) {
  if (!v.is_array()) fail(path, "expected a list of rows");
  if (static_cast<Index>(v.size()) != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  Matrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) out.row(i) = read_vector(v[static_cast<std::size_t>(i)], cols, path + "[" + std::to_string(i) + "]").transpose();
  return out;
}

Matrix read_columns(const json& v, Index n, const std::string& path) {
  if (!v.is_array()) fail(path, "expected a list of vectors");
  Matrix out(n, static_cast<Index>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) out.col(static_cast<Index>(j)) = read_vector(v[j], n, path + "[" + std::to_string(j) + "]");
  return out;
}

LieAlgebra read_algebra(const json& doc, Index n) {
  std::vector<Rational> c(static_cast<std::size_t>(n * n * n), Rational(0));
  std::vector<bool> seen(c.size(), false);
  const json& brackets = field(doc, "brackets", "brackets");
  if (!brackets.is_array()) fail("brackets", "expected a list of [i, j, k, c] entries");
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string path = "brackets[" + std::to_string(e) + "]";
    const json& entry = brackets[e];
    if (!entry.is_array() || entry.size() != 4) fail(path, "expected [i, j, k, c]");
    Index idx[3];
    for (int t = 0; t < 3; ++t) {
      idx[t] = read_count(entry[static_cast<std::size_t>(t)], path + "[" + std::to_string(t) + "]");
      if (idx[t] >= n) fail(path, "index " + std::to_string(idx[t]) + " out of range for dim " + std::to_string(n));
    }
    if (idx[0] >= idx[1]) fail(path, "list each bracket once with i < j; [e_j, e_i] follows by antisymmetry");
    const std::size_t at = static_cast<std::size_t>((idx[0] * n + idx[1]) * n + idx[2]);
    if (seen[at]) fail(path, "duplicate entry");
    seen[at] = true;
    const Rational value = read_rational(entry[3], path + "[3]");
    c[at] = value;
    c[static_cast<std::size_t>((idx[1] * n + idx[0]) * n + idx[2])] = -value;
  }
  return LieAlgebra(n, std::move(c));
}

BilinearForm read_inner_product(const json& doc, const LieAlgebra& algebra) {
  const Index n = algebra.dim();
  auto it = doc.find("inner_product");
  if (it == doc.end() || (it->is_string() && it->get<std::string>() == "identity"))
    return BilinearForm(Matrix::Identity(n, n));
  if (it->is_string()) {
    if (it->get<std::string>() == "neg_killing") return BilinearForm(Matrix(-killing_form(algebra).gram()));
    fail("inner_product", "unknown preset \"" + it->get<std::string>() + "\" (expected identity or neg_killing)");
  }
  return BilinearForm(read_matrix(*it, n, n, "inner_product"));
}

SliceRep read_slice(const json& doc, Index gm_dim) {
  SliceRep rep;
  auto it = doc.find("slice");
  if (it == doc.end() || it->is_null()) {
    rep.action.assign(static_cast<std::size_t>(gm_dim), Matrix(0, 0));
    return rep;
  }
  const json& s = *it;
  if (!s.is_object()) fail("slice", "expected an object");
  rep.dim = read_count(field(s, "dim", "slice"), "slice.dim");
  rep.omega = BilinearForm(rep.dim == 0 && !s.contains("omega") ? Matrix(0, 0)
                                                                : read_matrix(field(s, "omega", "slice"), rep.dim, rep.dim, "slice.omega"));
  rep.action.assign(static_cast<std::size_t>(gm_dim), Matrix::Zero(rep.dim, rep.dim));
  auto act = s.find("action");
  if (act != s.end()) {
    if (!act->is_object()) fail("slice.action", "expected an object keyed by g_m basis index");
    for (const auto& [key, value] : act->items()) {
      const std::string path = "slice.action." + key;
      std::size_t used = 0;
      long long index = -1;
      try {
        index = std::stoll(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || index < 0 || index >= gm_dim)
        fail(path, "key must be a g_m basis index below " + std::to_string(gm_dim));
      rep.action[static_cast<std::size_t>(index)] = read_matrix(value, rep.dim, rep.dim, path);
    }
  }
  return rep;
}

}  // namespace

ProblemInstance parse_instance(const json& doc) {
  if (!doc.is_object()) fail("(root)", "expected an object");
  {
    const json& format = field(doc, "format", "(root)");
    if (!format.is_string() || format.get<std::string>() != kInstanceFormat)
      fail("format", std::string("expected \"") + kInstanceFormat + "\"");
    const json& version = field(doc, "version", "(root)");
    if (!version.is_number_integer() || version.get<int>() != kInstanceVersion)
      fail("version", "unsupported version (this build reads version " + std::to_string(kInstanceVersion) + ")");
  }
  const Index n = read_count(field(doc, "dim", "(root)"), "dim");

  ProblemInstance inst;
  inst.algebra = read_algebra(doc, n);
  inst.h_basis = read_columns(field(doc, "h_basis", "(root)"), n, "h_basis");
  inst.gm_basis = doc.contains("gm_basis") ? read_columns(doc["gm_basis"], n, "gm_basis") : Matrix(n, 0);
  inst.mu = read_vector(field(doc, "mu", "(root)"), n, "mu");
  inst.ip = read_inner_product(doc, inst.algebra);
  inst.slice = read_slice(doc, inst.gm_basis.cols());
  if (auto it = doc.find("gm_component_reps"); it != doc.end()) {
    if (!it->is_array()) fail("gm_component_reps", "expected a list of matrices");
    for (std::size_t k = 0; k < it->size(); ++k)
      inst.gm_component_reps.push_back(read_matrix((*it)[k], n, n, "gm_component_reps[" + std::to_string(k) + "]"));
  }
  return inst;
}

ProblemInstance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return parse_instance(doc);
}

ProblemInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance_text(text.str());
}

ordered_json rational_to_json(const Rational& value) { return to_string(value); }

ordered_json vector_to_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i).transpose()));
  return out;
}

ordered_json columns_to_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (Index j = 0; j < m.cols(); ++j) out.push_back(vector_to_json(m.col(j)));
  return out;
}

ordered_json instance_to_json(const ProblemInstance& inst) {
  const Index n = inst.dim();
  ordered_json doc;
  doc["format"] = kInstanceFormat;
  doc["version"] = kInstanceVersion;
  doc["dim"] = n;
  ordered_json brackets = ordered_json::array();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (inst.algebra.c(i, j, k) != 0) brackets.push_back({i, j, k, to_string(inst.algebra.c(i, j, k))});
  doc["brackets"] = brackets;
  doc["h_basis"] = columns_to_json(inst.h_basis);
  doc["gm_basis"] = columns_to_json(inst.gm_basis);
  doc["mu"] = vector_to_json(inst.mu);
  if (inst.ip.gram() == Matrix(Matrix::Identity(n, n))) {
    doc["inner_product"] = "identity";
  } else {
    doc["inner_product"] = matrix_to_json(inst.ip.gram());
  }
  ordered_json slice;
  slice["dim"] = inst.slice.dim;
  slice["omega"] = matrix_to_json(inst.slice.omega.gram());
  ordered_json action = ordered_json::object();
  for (std::size_t k = 0; k < inst.slice.action.size(); ++k) action[std::to_string(k)] = matrix_to_json(inst.slice.action[k]);
  slice["action"] = action;
  doc["slice"] = slice;
  if (!inst.gm_component_reps.empty()) {
    ordered_json reps = ordered_json::array();
    for (const Matrix& r : inst.gm_component_reps) reps.push_back(matrix_to_json(r));
    doc["gm_component_reps"] = reps;
  }
  return doc;
}

std::string dump_instance(const ProblemInstance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

}  // namespace wittartin
