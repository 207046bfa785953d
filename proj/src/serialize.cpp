#include "galoisazu/serialize.hpp"

namespace galoisazu {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  raise(ErrorCode::ParseError, path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing key '") + key + "'");
  return *it;
}

const Json& array_of(const Json& j, std::size_t length, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  if (j.size() != length)
    bad(path, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  return j;
}

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string coefficient_text(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  bad(path, "expected a coefficient string");
}

}  // namespace

Json element_to_json(const Field& field, const Scalar& a) {
  auto parts = field.coefficient_strings(a);
  if (!field.is_polynomial_kind()) return parts.front();
  return Json(parts);
}

Scalar element_from_json(const Field& field, const Json& j, const std::string& path) {
  try {
    if (j.is_array()) {
      if (!field.is_polynomial_kind()) bad(path, "coefficient list given for " + field.descriptor());
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(coefficient_text(j[i], index_path(path, i)));
      return field.from_coefficients(parts);
    }
    return field.parse_element(coefficient_text(j, path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(path, e.what());
  }
}

Json vec_to_json(const Field& field, const Vec& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(element_to_json(field, c));
  return out;
}

Vec vec_from_json(const Field& field, const Json& j, std::size_t length, const std::string& path) {
  array_of(j, length, path);
  Vec out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(element_from_json(field, j[i], index_path(path, i)));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(*m.field(), m.row(i)));
  return out;
}

Matrix matrix_from_json(const FieldPtr& field, const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& path) {
  array_of(j, rows, path);
  std::vector<Vec> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(vec_from_json(*field, j[i], cols, index_path(path, i)));
  return Matrix::from_rows(field, cols, r);
}

Json algebra_to_json(const Algebra& a) {
  const auto& F = *a.field();
  Json sc = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vec_to_json(F, a.product_dense(i, j)));
    sc.push_back(std::move(row));
  }
  return Json{{"field", F.descriptor()},
              {"dim", a.dim()},
              {"labels", a.labels()},
              {"sc", std::move(sc)},
              {"unit", vec_to_json(F, a.unit())}};
}

AlgebraPtr algebra_from_json(const Json& j) {
  const std::string path = "$.algebra";
  const Json& field_j = member(j, "field", path);
  if (!field_j.is_string()) bad(path + ".field", "expected a field descriptor");
  FieldPtr F;
  try {
    F = Field::parse(field_j.get<std::string>());
  } catch (const Error& e) {
    bad(path + ".field", e.what());
  }
  const Json& dim_j = member(j, "dim", path);
  if (!dim_j.is_number_unsigned() || dim_j.get<std::size_t>() == 0) bad(path + ".dim", "expected a positive integer");
  const auto d = dim_j.get<std::size_t>();
  if (d > max_algebra_dim())
    raise(ErrorCode::DimensionTooLarge, "dim " + std::to_string(d) + " exceeds " + std::to_string(max_algebra_dim()));
  const Json& labels_j = array_of(member(j, "labels", path), d, path + ".labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    if (!labels_j[i].is_string()) bad(index_path(path + ".labels", i), "expected a string");
    labels.push_back(labels_j[i].get<std::string>());
  }
  const Json& sc = array_of(member(j, "sc", path), d, path + ".sc");
  std::vector<Vec> products;
  products.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto row_path = index_path(path + ".sc", i);
    array_of(sc[i], d, row_path);
    for (std::size_t k = 0; k < d; ++k) products.push_back(vec_from_json(*F, sc[i][k], d, index_path(row_path, k)));
  }
  Vec unit = vec_from_json(*F, member(j, "unit", path), d, path + ".unit");
  return Algebra::create(F, std::move(labels), products, std::move(unit));
}

Json action_to_json(const AlgebraAction& action) {
  Json gens = Json::array();
  for (const auto& m : action.generators()) gens.push_back(matrix_to_json(m));
  return Json{{"group", action.group().to_string()}, {"generators", std::move(gens)}};
}

AlgebraAction action_from_json(const Json& j, const AlgebraPtr& algebra) {
  const std::string path = "$.action";
  const Json& group_j = member(j, "group", path);
  if (!group_j.is_string()) bad(path + ".group", "expected a group such as \"Z2xZ2\"");
  GroupSpec G;
  try {
    G = GroupSpec::parse(group_j.get<std::string>());
  } catch (const Error& e) {
    bad(path + ".group", e.what());
  }
  const Json& gens = array_of(member(j, "generators", path), G.rank(), path + ".generators");
  std::vector<Matrix> mats;
  const auto d = algebra->dim();
  for (std::size_t g = 0; g < G.rank(); ++g)
    mats.push_back(matrix_from_json(algebra->field(), gens[g], d, d, index_path(path + ".generators", g)));
  return AlgebraAction::make(G, algebra, std::move(mats));
}

Json subalgebra_to_json(const SubalgebraBasis& sub) {
  Json vs = Json::array();
  for (const auto& v : sub.vectors()) vs.push_back(vec_to_json(*sub.algebra()->field(), v));
  return Json{{"vectors", std::move(vs)}};
}

SubalgebraBasis subalgebra_from_json(const Json& j, const AlgebraPtr& algebra) {
  const std::string path = "$.base";
  const Json& vs = member(j, "vectors", path);
  if (!vs.is_array() || vs.empty()) bad(path + ".vectors", "expected a nonempty array");
  std::vector<Vec> spanning;
  for (std::size_t i = 0; i < vs.size(); ++i)
    spanning.push_back(vec_from_json(*algebra->field(), vs[i], algebra->dim(), index_path(path + ".vectors", i)));
  return SubalgebraBasis(algebra, spanning);
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

Json certificate_to_json(const GaloisCertificate& cert) {
  const auto& ext = cert.extension;
  const auto& F = *ext.total()->field();
  Json eta = Json::array();
  for (const auto& e : cert.eta) eta.push_back(vec_to_json(F, e));
  Json elements = Json::array();
  for (std::size_t g = 0; g < cert.action.group().order(); ++g)
    elements.push_back(cert.action.group().element_label(g));
  Json x = Json::array(), y = Json::array();
  for (const auto& v : cert.basis.x) x.push_back(vec_to_json(F, v));
  for (const auto& v : cert.basis.y) y.push_back(vec_to_json(F, v));
  return Json{{"field", F.descriptor()},
              {"algebra", algebra_to_json(*ext.total())},
              {"action", action_to_json(cert.action)},
              {"base", ext.is_ground() ? Json(nullptr) : subalgebra_to_json(ext.base())},
              {"group_elements", std::move(elements)},
              {"gamma", matrix_to_json(cert.gamma)},
              {"eta", std::move(eta)},
              {"galois_basis", Json{{"x", std::move(x)}, {"y", std::move(y)}}},
              {"invariants_ok", cert.invariants_ok},
              {"gamma_bijective", cert.gamma_bijective},
              {"strict", cert.strict},
              {"checks", checks_to_json(cert.checks)},
              {"notes", cert.notes},
              {"all_passed", cert.all_passed()}};
}

GaloisCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) bad("$", "expected a certificate object");
  auto A = algebra_from_json(member(j, "algebra", "$"));
  auto action = action_from_json(member(j, "action", "$"), A);
  auto base = j.find("base");
  Extension ext = (base == j.end() || base->is_null()) ? Extension::ground(A)
                                                        : Extension::over(A, subalgebra_from_json(*base, A));
  auto cert = certify_galois(ext, action);
  if (auto g = j.find("gamma"); g != j.end()) {
    if (matrix_from_json(A->field(), *g, cert.gamma.rows(), cert.gamma.cols(), "$.gamma") != cert.gamma)
      bad("$.gamma", "does not match the matrix recomputed from the algebra and action");
  }
  if (auto e = j.find("eta"); e != j.end()) {
    array_of(*e, cert.eta.size(), "$.eta");
    for (std::size_t g = 0; g < cert.eta.size(); ++g)
      if (vec_from_json(*A->field(), (*e)[g], ext.tensor_dim(), index_path("$.eta", g)) != cert.eta[g])
        bad(index_path("$.eta", g), "does not match the recomputed Galois element");
  }
  return cert;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace galoisazu
