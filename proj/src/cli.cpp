#include "galoisazu/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iterator>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "galoisazu/brauer.hpp"
#include "galoisazu/fixtures.hpp"
#include "galoisazu/frobenius.hpp"
#include "galoisazu/rmatrix.hpp"
#include "galoisazu/serialize.hpp"

namespace galoisazu::cli {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvariantsMismatch:
    case ErrorCode::GammaSingular:
    case ErrorCode::CheckFailed:
    case ErrorCode::NotInvertible:
    case ErrorCode::NotEquivariant:
    case ErrorCode::NotAlgebraMorphism:
      return 1;
    default:
      return 2;
  }
}

namespace {

enum class Format { Json, Text };

struct Context {
  std::istream& in;
  std::ostream& out;
  Format format = Format::Json;
};

[[noreturn]] void usage(const std::string& message) { raise(ErrorCode::ParseError, message); }

std::string slurp(std::istream& s) { return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()}; }

// A JSON argument is a path, "-" for stdin, or the JSON text itself.
Json read_json(const std::string& arg, std::istream& in) {
  std::string text;
  if (arg == "-") {
    text = slurp(in);
  } else if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream f(arg);
    if (!f) usage("cannot read '" + arg + "'");
    text = slurp(f);
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    usage((arg.size() > 40 ? "input" : arg) + ": " + e.what());
  }
}

std::string source_label(const std::string& arg) {
  if (arg == "-") return "stdin";
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return "inline";
  return arg;
}

struct CertInput {
  std::string cert;
  std::string fixture;
};

void add_cert_options(CLI::App* sub, CertInput& input, const std::string& suffix = "") {
  auto* c = sub->add_option("--cert" + suffix, input.cert, "Certificate JSON: a path, '-' for stdin, or inline text");
  auto* f = sub->add_option("--fixture" + suffix, input.fixture, "Bundled fixture")
                ->check(CLI::IsMember(fixture_names()));
  c->excludes(f);
}

GaloisCertificate load_cert(const CertInput& input, std::istream& in, const std::string& suffix = "") {
  if (!input.fixture.empty()) return certify_fixture(fixture(input.fixture));
  if (input.cert.empty()) usage("one of --cert" + suffix + " or --fixture" + suffix + " is required");
  return certificate_from_json(read_json(input.cert, in));
}

Json echo(const CertInput& input) {
  if (!input.fixture.empty()) return Json{{"fixture", input.fixture}};
  return Json{{"cert", source_label(input.cert)}};
}

std::string echo_text(const CertInput& input) {
  return input.fixture.empty() ? "certificate " + source_label(input.cert) : "fixture " + input.fixture;
}

// Text rendering ----------------------------------------------------------------------

const char* mark(bool passed) { return passed ? "pass" : "FAIL"; }

// A basis vector prints as its label.
std::string leg_text(const Algebra& A, const Vec& v) {
  const auto& F = *A.field();
  std::optional<std::size_t> only;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (F.is_zero(v[i])) continue;
    if (only || !F.is_one(v[i])) return "(" + A.format(v) + ")";
    only = i;
  }
  return only ? A.labels()[*only] : "0";
}

std::string format_tensor(const Extension& ext, const Vec& t) {
  const auto& A = *ext.total();
  const auto& F = *A.field();
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (F.is_zero(t[k])) continue;
    if (!out.empty()) out += " + ";
    out += F.format(t[k]) + "*(" + leg_text(A, ext.left_leg(k)) + " ⊗ " + leg_text(A, ext.right_leg(k)) + ")";
  }
  return out.empty() ? "0" : out;
}

void write_checks(std::ostream& out, const std::vector<Check>& checks, const std::string& indent = "  ") {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks)
    out << indent << mark(c.passed) << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
        << c.detail << "\n";
}

void write_matrix(std::ostream& out, const Matrix& m, const std::string& indent = "  ") {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i].push_back(m.field()->format(m.at(i, j)));
      width = std::max(width, cells[i].back().size());
    }
  for (const auto& row : cells) {
    out << indent;
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << std::right << std::setw(static_cast<int>(width)) << row[j];
    out << "\n";
  }
}

void write_certificate_text(std::ostream& out, const GaloisCertificate& cert) {
  const auto& G = cert.action.group();
  out << "extension: " << cert.extension.describe() << " over " << cert.extension.total()->field()->descriptor()
      << "\n";
  out << "group: " << G.to_string() << " (order " << G.order() << ")\n";
  out << "Gamma: " << cert.gamma.rows() << " x " << cert.gamma.cols() << ", "
      << (cert.gamma_bijective ? "bijective" : "singular") << "\n";
  out << "invariants S^G = R: " << mark(cert.invariants_ok) << "\n";
  out << "strict: " << (cert.strict ? "yes" : "no") << "\n";
  out << "checks:\n";
  write_checks(out, cert.checks);
  out << "eta_e = " << format_tensor(cert.extension, cert.eta.front()) << "\n";
  for (const auto& n : cert.notes) out << "note: " << n << "\n";
  out << "result: " << (cert.all_passed() ? "all checks passed" : "FAILED") << "\n";
}

void emit(Context& ctx, const Json& j, const std::function<void(std::ostream&)>& text) {
  if (ctx.format == Format::Json) {
    ctx.out << dump_json(j);
  } else {
    text(ctx.out);
  }
}

// construct -----------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::string field = "Q";
  std::string a, b, zeta, group, name;
  int n = 0;
  std::string emit = "algebra";
};

int do_construct(Context& ctx, const ConstructArgs& args) {
  AlgebraPtr algebra;
  std::optional<AlgebraAction> action;
  std::string no_action;
  auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) usage(args.kind + " requires " + flag);
  };
  if (args.kind == "fixture") {
    need(args.name, "--name");
    auto f = fixture(args.name);
    algebra = f.algebra;
    action = f.action;
    no_action = "fixture '" + f.name + "' carries no Galois action";
  } else {
    auto F = Field::parse(args.field);
    auto el = [&](const std::string& text, const char* flag) {
      need(text, flag);
      return F->parse_element(text);
    };
    if (args.kind == "quaternion") {
      algebra = quaternion_algebra(F, el(args.a, "--a"), el(args.b, "--b"));
      action = quaternion_v_action(algebra);
    } else if (args.kind == "char2quat") {
      algebra = char2_quaternion(F, el(args.a, "--a"), el(args.b, "--b"));
      no_action = "char2quat carries no Galois action";
    } else if (args.kind == "symbol") {
      if (args.n < 2) usage("symbol requires --n >= 2");
      const Scalar zeta = el(args.zeta, "--zeta");
      algebra = symbol_algebra(F, el(args.a, "--a"), el(args.b, "--b"), zeta, args.n);
      action = symbol_action(algebra, zeta, args.n);
    } else if (args.kind == "matrix") {
      if (args.n < 1) usage("matrix requires --n >= 1");
      algebra = matrix_algebra(F, args.n);
      if (!args.zeta.empty()) action = matrix_action(algebra, F->parse_element(args.zeta), args.n);
      no_action = "matrix needs --zeta for its action";
    } else {
      need(args.group, "--group");
      const auto G = GroupSpec::parse(args.group);
      algebra = function_algebra(field_algebra(F), G);
      action = translation_action(algebra, G);
    }
  }
  if (args.emit != "algebra" && !action) raise(ErrorCode::Unsupported, no_action);
  Json j;
  if (args.emit == "algebra") {
    j = algebra_to_json(*algebra);
  } else if (args.emit == "action") {
    j = action_to_json(*action);
  } else {
    j = Json{{"algebra", algebra_to_json(*algebra)}, {"action", action_to_json(*action)}};
  }
  emit(ctx, j, [&](std::ostream& out) {
    const auto& A = *algebra;
    if (args.emit != "action") {
      out << "field: " << A.field()->descriptor() << "\ndim: " << A.dim() << "\nbasis: ";
      for (std::size_t k = 0; k < A.dim(); ++k) out << (k ? ", " : "") << A.labels()[k];
      out << "\nunit: " << A.format(A.unit()) << "\nproducts:\n";
      for (std::size_t p = 0; p < A.dim(); ++p)
        for (std::size_t q = 0; q < A.dim(); ++q)
          out << "  " << A.labels()[p] << " * " << A.labels()[q] << " = " << A.format(A.product_dense(p, q)) << "\n";
    }
    if (action) {
      if (args.emit == "algebra") return;
      out << "group: " << action->group().to_string() << "\n";
      for (std::size_t g = 0; g < action->generators().size(); ++g) {
        out << "generator " << g << ":";
        for (std::size_t k = 0; k < A.dim(); ++k)
          out << (k ? ", " : " ") << A.labels()[k] << " -> " << A.format(action->generators()[g].column(k));
        out << "\n";
      }
    }
  });
  return 0;
}

// certify -------------------------------------------------------------------------------

struct CertifyArgs {
  std::string algebra, action, base, fixture;
};

int do_certify(Context& ctx, const CertifyArgs& args) {
  GaloisCertificate cert;
  if (!args.fixture.empty()) {
    cert = certify_fixture(fixture(args.fixture));
  } else {
    if (args.algebra.empty()) usage("one of --algebra or --fixture is required");
    const Json aj = read_json(args.algebra, ctx.in);
    // A bundle from `construct --emit bundle` carries its own action.
    const bool bundle = aj.is_object() && aj.contains("algebra");
    if (!bundle && args.action.empty()) usage("--action is required unless --algebra is a bundle");
    auto A = algebra_from_json(bundle ? aj.at("algebra") : aj);
    auto action = action_from_json(args.action.empty() ? aj.at("action") : read_json(args.action, ctx.in), A);
    std::optional<Json> base;
    if (!args.base.empty()) base = read_json(args.base, ctx.in);
    else if (bundle && aj.contains("base") && !aj.at("base").is_null()) base = aj.at("base");
    const auto ext = base ? Extension::over(A, subalgebra_from_json(*base, A)) : Extension::ground(A);
    cert = certify_galois(ext, action);
  }
  emit(ctx, certificate_to_json(cert), [&](std::ostream& out) { write_certificate_text(out, cert); });
  return cert.all_passed() ? 0 : 1;
}

// frobenius -----------------------------------------------------------------------------

Json symmetry_to_json(const Field& F, const SymmetryResult& s) {
  return Json{{"outcome", std::string(to_string(s.outcome))},
              {"witness", s.witness ? vec_to_json(F, *s.witness) : Json(nullptr)},
              {"solution_dim", s.solution_dim},
              {"candidates_tested", s.candidates_tested},
              {"method", s.method}};
}

int do_frobenius(Context& ctx, const CertInput& input) {
  const auto cert = load_cert(input, ctx.in);
  const auto& A = *cert.extension.total();
  const auto& F = *A.field();
  const auto frob = frobenius_from_galois(cert);
  const auto sep = separability_check(cert.extension, cert.eta.front());
  std::optional<NakayamaResult> nak;
  std::optional<SymmetryResult> sym;
  if (cert.extension.is_ground()) {
    nak = nakayama(cert);
    sym = is_symmetric(cert, nak->nu);
  }
  Json u = Json::array(), v = Json::array();
  for (const auto& x : frob.u) u.push_back(vec_to_json(F, x));
  for (const auto& x : frob.v) v.push_back(vec_to_json(F, x));
  Json j{{"inputs", echo(input)},
         {"frobenius", Json{{"u", u}, {"v", v}, {"tau", matrix_to_json(frob.tau)}, {"checks", checks_to_json(frob.checks)}}},
         {"separability",
          Json{{"casimir", sep.casimir_ok},
               {"multiplication_to_one", sep.mu_one_ok},
               {"idempotent", sep.idempotent_ok ? Json(*sep.idempotent_ok) : Json(nullptr)}}},
         {"nakayama", nak ? Json{{"nu", matrix_to_json(nak->nu)}, {"checks", checks_to_json(nak->checks)}} : Json(nullptr)},
         {"symmetry", sym ? symmetry_to_json(F, *sym) : Json(nullptr)}};
  const bool ok = frob.all_passed() && sep.all_passed() && (!nak || nak->all_passed());
  j["all_passed"] = ok;
  emit(ctx, j, [&](std::ostream& out) {
    out << "input: " << echo_text(input) << "\n";
    out << "Frobenius system (" << frob.u.size() << " pairs):\n";
    write_checks(out, frob.checks);
    out << "tau:\n";
    write_matrix(out, frob.tau);
    out << "separability:\n  " << mark(sep.casimir_ok) << "  casimir\n  " << mark(sep.mu_one_ok)
        << "  multiplication_to_one\n";
    if (sep.idempotent_ok) out << "  " << mark(*sep.idempotent_ok) << "  idempotent\n";
    if (nak) {
      out << "Nakayama automorphism:\n";
      write_checks(out, nak->checks);
      write_matrix(out, nak->nu);
      out << "symmetry: " << to_string(sym->outcome);
      if (sym->witness) out << ", witness " << A.format(*sym->witness);
      out << " (" << sym->method << ")\n";
    } else {
      out << "Nakayama automorphism: not computed over an intermediate base\n";
    }
    out << "result: " << (ok ? "all checks passed" : "FAILED") << "\n";
  });
  return ok ? 0 : 1;
}

// rmatrix -------------------------------------------------------------------------------

struct RMatrixArgs {
  CertInput input;
  bool blocks = false;
  int braid = 0;
};

int do_rmatrix(Context& ctx, const RMatrixArgs& args) {
  const auto cert = load_cert(args.input, ctx.in);
  const auto& A = cert.extension.total();
  const auto& F = *A->field();
  if (args.blocks && A->dim() != 4) usage("--blocks needs a quaternion certificate of dim 4");
  const auto eta = galois_tensor(cert);
  const auto fs = check_fs_equation(eta);
  const bool yb = check_yang_baxter(eta);
  const auto op = left_mult_operator(eta);
  const bool inv = invertible(op);
  const bool azumaya = is_azumaya_over_field(A).azumaya;
  Json j{{"inputs", echo(args.input)},
         {"eta", Json{{"order", eta.order}, {"coeffs", vec_to_json(F, eta.coeffs)}}},
         {"fs", Json{{"first", fs.first}, {"second", fs.second}}},
         {"yang_baxter", yb},
         {"l_eta", matrix_to_json(op.matrix)},
         {"invertible", inv},
         {"azumaya", azumaya},
         {"kadison_agrees", inv == azumaya}};
  std::optional<QuaternionBlocks> blocks;
  if (args.blocks) {
    blocks = quaternion_blocks(A);
    static const char* names[4] = {"V_1", "V_i", "V_j", "V_k"};
    Json bj = Json::array();
    for (std::size_t u = 0; u < 4; ++u) {
      Json basis = Json::array();
      for (const auto& [p, q] : blocks->bases[u]) basis.push_back(Json{A->labels()[p], A->labels()[q]});
      bj.push_back(Json{{"subspace", names[u]}, {"basis", basis}, {"xi", matrix_to_json(blocks->xi[u])}});
    }
    j["blocks"] = bj;
  }
  std::vector<Matrix> braid;
  if (args.braid) {
    braid = braid_representation(eta, args.braid);
    Json gens = Json::array();
    for (const auto& m : braid) gens.push_back(matrix_to_json(m));
    j["braid"] = Json{{"n", args.braid}, {"dim", braid.front().rows()}, {"generators", gens}};
  }
  const bool ok = fs.holds() && yb && inv == azumaya;
  j["all_passed"] = ok;
  emit(ctx, j, [&](std::ostream& out) {
    out << "input: " << echo_text(args.input) << "\n";
    out << "eta = " << format_tensor(cert.extension, cert.eta.front()) << "\n";
    out << "  " << mark(fs.first) << "  fs_first         X12 X23 = X23 X13\n";
    out << "  " << mark(fs.second) << "  fs_second        X23 X13 = X13 X12\n";
    out << "  " << mark(yb) << "  yang_baxter      X12 X23 X12 = X23 X12 X23\n";
    out << "  " << mark(inv == azumaya) << "  kadison          l_eta " << (inv ? "invertible" : "singular")
        << ", algebra " << (azumaya ? "" : "not ") << "Azumaya\n";
    if (blocks) {
      static const char* names[4] = {"V_1", "V_i", "V_j", "V_k"};
      for (std::size_t u = 0; u < 4; ++u) {
        out << "Xi on " << names[u] << " (";
        for (std::size_t c = 0; c < 4; ++c) {
          const auto [p, q] = blocks->bases[u][c];
          out << (c ? ", " : "") << A->labels()[p] << "⊗" << A->labels()[q];
        }
        out << "):\n";
        write_matrix(out, blocks->xi[u]);
      }
    }
    if (!braid.empty())
      out << "braid representation: n = " << args.braid << ", " << braid.size() << " generators of size "
          << braid.front().rows() << ", relations verified\n";
    out << "result: " << (ok ? "all checks passed" : "FAILED") << "\n";
  });
  return ok ? 0 : 1;
}

// Brauer verbs --------------------------------------------------------------------------

mpq_class parse_rational_arg(const std::string& text) {
  return std::get<mpq_class>(Field::rationals()->parse_element(text));
}

Json places_json(const std::vector<Place>& places) {
  Json out = Json::array();
  for (const auto& p : places) out.push_back(p.to_string());
  return out;
}

std::string places_text(const std::vector<Place>& places) {
  if (places.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < places.size(); ++i) out += (i ? ", " : "") + places[i].to_string();
  return out + "}";
}

struct HilbertArgs {
  std::string a, b, place;
};

int do_hilbert(Context& ctx, const HilbertArgs& args) {
  const auto a = parse_rational_arg(args.a), b = parse_rational_arg(args.b);
  if (!args.place.empty()) {
    const int s = hilbert_symbol(a, b, parse_place(args.place));
    ctx.out << s << "\n";
    return 0;
  }
  std::set<Place> places{Place{2}, Place::infinity()};
  for (const auto& x : {a, b}) {
    const auto r = squarefree_representative(x);
    for (auto p : prime_divisors(r < 0 ? -r : r)) places.insert(Place{p});
  }
  Json symbols = Json::object();
  std::vector<Place> ramified;
  for (const auto& p : places) {
    const int s = hilbert_symbol(a, b, p);
    symbols[p.to_string()] = s;
    if (s == -1) ramified.push_back(p);
  }
  Json j{{"a", a.get_str()}, {"b", b.get_str()}, {"symbols", symbols}, {"ramified", places_json(ramified)},
         {"split", ramified.empty()}};
  emit(ctx, j, [&](std::ostream& out) {
    for (const auto& p : places) out << "(" << a << ", " << b << ")_" << p.to_string() << " = " << symbols[p.to_string()].get<int>() << "\n";
  });
  return 0;
}

int do_class(Context& ctx, const std::string& a_text, const std::string& b_text) {
  const auto a = parse_rational_arg(a_text), b = parse_rational_arg(b_text);
  const auto c = quaternion_class(a, b);
  Json j{{"a", a.get_str()},
         {"b", b.get_str()},
         {"square_classes", Json{std::to_string(c.a), std::to_string(c.b)}},
         {"ramified", places_json(c.ramified)},
         {"split", c.is_trivial()},
         {"notes", c.notes}};
  emit(ctx, j, [&](std::ostream& out) {
    out << "(" << a << ", " << b << " / Q) ~ (" << c.a << ", " << c.b << ")\n";
    out << "ramified: " << places_text(c.ramified) << "\n";
    out << (c.is_trivial() ? "split" : "division algebra") << "\n";
  });
  return 0;
}

int do_class_product(Context& ctx, const std::vector<std::string>& values) {
  BrauerClass total = BrauerClass::trivial();
  for (std::size_t k = 0; k + 1 < values.size(); k += 2)
    total = class_product(total, BrauerClass::of(quaternion_class(parse_rational_arg(values[k]),
                                                                  parse_rational_arg(values[k + 1]))));
  Json factors = Json::array();
  for (const auto& [a, b] : total.factors) factors.push_back(Json{std::to_string(a), std::to_string(b)});
  Json j{{"factors", factors}, {"ramified", places_json(total.ramified)}, {"split", total.is_trivial()}};
  emit(ctx, j, [&](std::ostream& out) {
    for (std::size_t k = 0; k < total.factors.size(); ++k)
      out << (k ? " ⊗ " : "") << "(" << total.factors[k].first << ", " << total.factors[k].second << ")";
    out << "\nramified: " << places_text(total.ramified) << "\n" << (total.is_trivial() ? "split" : "not split") << "\n";
  });
  return 0;
}

// tensor, fixed-ring, base-change ------------------------------------------------------------

int do_tensor(Context& ctx, const CertInput& first, const CertInput& second) {
  const auto a = load_cert(first, ctx.in);
  const auto b = load_cert(second, ctx.in, "2");
  const auto cert = tensor_galois(a, b);
  const auto az = is_azumaya_over_field(cert.extension.total());
  Json j{{"inputs", Json{{"first", echo(first)}, {"second", echo(second)}}},
         {"certificate", certificate_to_json(cert)},
         {"centre_dim", az.centre_dim},
         {"azumaya", az.azumaya}};
  emit(ctx, j, [&](std::ostream& out) {
    write_certificate_text(out, cert);
    out << "centre dim: " << az.centre_dim << "\nAzumaya: " << (az.azumaya ? "yes" : "no") << "\n";
  });
  return cert.all_passed() ? 0 : 1;
}

GroupSpec::Element parse_group_element(const std::string& text, const GroupSpec& G) {
  GroupSpec::Element g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      g.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      usage("bad group element '" + text + "'");
    }
  }
  if (g.size() != G.rank()) usage("group element '" + text + "' needs " + std::to_string(G.rank()) + " entries");
  return G.reduce(g);
}

struct FixedRingArgs {
  CertInput input;
  std::vector<std::string> subgroup;
};

int do_fixed_ring(Context& ctx, const FixedRingArgs& args) {
  const auto cert = load_cert(args.input, ctx.in);
  std::vector<GroupSpec::Element> gens;
  for (const auto& s : args.subgroup) gens.push_back(parse_group_element(s, cert.action.group()));
  const auto result = fixed_ring_extension(cert, gens);
  const auto& A = cert.extension.total();
  const auto cent = centralizer(A, result.fixed_ring.vectors());
  const bool maximal = cent.same_span(result.fixed_ring);
  Json j{{"inputs", echo(args.input)},
         {"subgroup", args.subgroup},
         {"fixed_ring", Json{{"dim", result.fixed_ring.dim()}, {"vectors", subalgebra_to_json(result.fixed_ring)["vectors"]}}},
         {"centralizer_equals_fixed_ring", maximal},
         {"upper", certificate_to_json(result.upper)},
         {"lower", result.lower ? certificate_to_json(*result.lower) : Json(nullptr)},
         {"notes", result.notes}};
  const bool ok = result.upper.all_passed() && (!result.lower || result.lower->all_passed());
  j["all_passed"] = ok;
  emit(ctx, j, [&](std::ostream& out) {
    out << "fixed ring (dim " << result.fixed_ring.dim() << "):";
    for (const auto& v : result.fixed_ring.vectors()) out << " " << leg_text(*A, v);
    out << "\ncentralizer equals fixed ring: " << (maximal ? "yes" : "no") << "\n";
    out << "-- U -> S\n";
    write_certificate_text(out, result.upper);
    if (result.lower) {
      out << "-- R -> U\n";
      write_certificate_text(out, *result.lower);
    }
    for (const auto& n : result.notes) out << "note: " << n << "\n";
  });
  return ok ? 0 : 1;
}

struct BaseChangeArgs {
  CertInput input;
  std::string target, image;
};

int do_base_change(Context& ctx, const BaseChangeArgs& args) {
  const auto cert = load_cert(args.input, ctx.in);
  const auto T = Field::parse(args.target);
  std::optional<Scalar> image;
  if (!args.image.empty()) image = T->parse_element(args.image);
  const FieldEmbedding embedding(cert.extension.total()->field(), T, image);
  const auto changed = base_change(cert, embedding);
  const auto morphism = check_base_change_morphism(cert, changed, embedding);
  Json j{{"inputs", echo(args.input)},
         {"embedding", Json{{"source", embedding.source()->descriptor()},
                            {"target", T->descriptor()},
                            {"generator_image", image ? element_to_json(*T, *image) : Json(nullptr)}}},
         {"certificate", certificate_to_json(changed)},
         {"morphism", checks_to_json(morphism.checks)}};
  const bool ok = changed.all_passed() && morphism.all_passed();
  j["all_passed"] = ok;
  emit(ctx, j, [&](std::ostream& out) {
    out << "base change " << embedding.source()->descriptor() << " -> " << T->descriptor() << "\n";
    write_certificate_text(out, changed);
    out << "insertion S -> S ⊗ T:\n";
    write_checks(out, morphism.checks);
  });
  return ok ? 0 : 1;
}

// report ----------------------------------------------------------------------------------

struct ReportArgs {
  CertInput input;
  bool timing = false;
};

struct ReportRow {
  std::string section;
  Check check;
};

int do_report(Context& ctx, const ReportArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  const auto cert = load_cert(args.input, ctx.in);
  std::vector<ReportRow> rows;
  rows.push_back({"definition", {"invariants", cert.invariants_ok, "S^G = R"}});
  rows.push_back({"definition", {"gamma_bijective", cert.gamma_bijective, "Gamma: S (x)_R S -> S(G) is bijective"}});
  for (const auto& c : cert.checks) rows.push_back({"identities", c});
  const auto frob = frobenius_from_galois(cert);
  for (const auto& c : frob.checks) rows.push_back({"frobenius", c});
  std::optional<SymmetryResult> sym;
  if (cert.extension.is_ground()) {
    const auto nak = nakayama(cert);
    for (const auto& c : nak.checks) rows.push_back({"frobenius", c});
    sym = is_symmetric(cert, nak.nu);
    const auto eta = galois_tensor(cert);
    const auto fs = check_fs_equation(eta);
    rows.push_back({"equations", {"fs_first", fs.first, "X12 X23 = X23 X13"}});
    rows.push_back({"equations", {"fs_second", fs.second, "X23 X13 = X13 X12"}});
    rows.push_back({"equations", {"yang_baxter", check_yang_baxter(eta), "X12 X23 X12 = X23 X12 X23"}});
    const bool inv = invertible(left_mult_operator(eta));
    const bool az = is_azumaya_over_field(cert.extension.total()).azumaya;
    rows.push_back({"equations",
                    {"kadison", inv == az,
                     std::string("l_eta ") + (inv ? "invertible" : "singular") + ", Azumaya " + (az ? "yes" : "no")}});
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.check.passed; });

  Json checks = Json::array();
  for (const auto& r : rows)
    checks.push_back(
        Json{{"section", r.section}, {"name", r.check.name}, {"passed", r.check.passed}, {"detail", r.check.detail}});
  Json j{{"tool", Json{{"name", "galoisazu"}, {"version", std::string(kVersion)}}},
         {"inputs", echo(args.input)},
         {"extension", cert.extension.describe()},
         {"field", cert.extension.total()->field()->descriptor()},
         {"group", cert.action.group().to_string()},
         {"checks", checks},
         {"properties", Json{{"strict", cert.strict},
                             {"symmetric", sym ? Json(std::string(to_string(sym->outcome))) : Json(nullptr)}}},
         {"all_passed", ok}};
  if (args.timing) j["timing_ms"] = elapsed;
  emit(ctx, j, [&](std::ostream& out) {
    out << "galoisazu " << kVersion << " certification report\n";
    out << "input: " << echo_text(args.input) << "\n";
    out << "extension: " << cert.extension.describe() << " over " << cert.extension.total()->field()->descriptor()
        << ", group " << cert.action.group().to_string() << "\n\n";
    std::size_t sw = 7, nw = 5;
    for (const auto& r : rows) {
      sw = std::max(sw, r.section.size());
      nw = std::max(nw, r.check.name.size());
    }
    auto line = [&](const std::string& s, const std::string& n, const std::string& res, const std::string& d) {
      out << std::left << std::setw(static_cast<int>(sw)) << s << "  " << std::setw(static_cast<int>(nw)) << n << "  "
          << std::setw(6) << res << "  " << d << "\n";
    };
    line("section", "check", "result", "detail");
    for (const auto& r : rows) line(r.section, r.check.name, mark(r.check.passed), r.check.detail);
    out << "\nstrict: " << (cert.strict ? "yes" : "no") << "\n";
    if (sym) out << "symmetric: " << to_string(sym->outcome) << "\n";
    if (args.timing) out << "time: " << elapsed << " ms\n";
    const auto passed = std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.check.passed; });
    out << "result: " << passed << "/" << rows.size() << " checks passed\n";
  });
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of Galois, Frobenius and Azumaya structure on finite-dimensional algebras",
               "galoisazu"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--format", format, "Output format (json, or text; report defaults to text)")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::pair<CLI::App*, std::function<int(Context&)>>> verbs;

  ConstructArgs construct;
  {
    auto* sub = app.add_subcommand("construct", "Build an algebra and emit its structure constants");
    sub->add_option("kind", construct.kind, "quaternion, symbol, matrix, function, char2quat or fixture")
        ->required()
        ->check(CLI::IsMember({"quaternion", "symbol", "matrix", "function", "char2quat", "fixture"}));
    sub->add_option("--field", construct.field, "Field descriptor: Q, Fp:p, Fq:p:poly, Qzeta:n")
        ->capture_default_str();
    sub->add_option("--a", construct.a, "First parameter");
    sub->add_option("--b", construct.b, "Second parameter");
    sub->add_option("--zeta", construct.zeta, "Primitive n-th root of unity");
    sub->add_option("--n", construct.n, "Degree");
    sub->add_option("--group", construct.group, "Group for function algebras, e.g. Z2xZ3");
    sub->add_option("--name", construct.name, "Fixture name")->check(CLI::IsMember(fixture_names()));
    sub->add_option("--emit", construct.emit, "algebra, action, or bundle (both)")
        ->capture_default_str()
        ->check(CLI::IsMember({"algebra", "action", "bundle"}));
    verbs.emplace_back(sub, [&](Context& ctx) { return do_construct(ctx, construct); });
  }

  CertifyArgs certify;
  {
    auto* sub = app.add_subcommand("certify", "Certify a Galois extension and emit the certificate");
    sub->add_option("--algebra", certify.algebra, "Algebra JSON, or a bundle with algebra and action");
    sub->add_option("--action", certify.action, "Action JSON");
    sub->add_option("--base", certify.base, "Subalgebra JSON for the base ring");
    sub->add_option("--fixture", certify.fixture, "Bundled fixture")->check(CLI::IsMember(fixture_names()));
    verbs.emplace_back(sub, [&](Context& ctx) { return do_certify(ctx, certify); });
  }

  CertInput frob;
  {
    auto* sub = app.add_subcommand("frobenius", "Frobenius system, separability, Nakayama automorphism, symmetry");
    add_cert_options(sub, frob);
    verbs.emplace_back(sub, [&](Context& ctx) { return do_frobenius(ctx, frob); });
  }

  RMatrixArgs rmat;
  {
    auto* sub = app.add_subcommand("rmatrix", "FS and Yang-Baxter equations, l_eta, blocks, braid representation");
    add_cert_options(sub, rmat.input);
    sub->add_flag("--blocks", rmat.blocks, "Blocks of l_eta on the four quaternion subspaces");
    sub->add_option("--braid", rmat.braid, "Braid group representation on S^(x)n")->check(CLI::Range(2, 4));
    verbs.emplace_back(sub, [&](Context& ctx) { return do_rmatrix(ctx, rmat); });
  }

  HilbertArgs hilbert;
  {
    auto* sub = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at one place or at every relevant place");
    sub->add_option("a", hilbert.a, "Nonzero rational")->required();
    sub->add_option("b", hilbert.b, "Nonzero rational")->required();
    sub->add_option("--place", hilbert.place, "A prime or inf");
    verbs.emplace_back(sub, [&](Context& ctx) { return do_hilbert(ctx, hilbert); });
  }

  std::string class_a, class_b;
  {
    auto* sub = app.add_subcommand("class", "Ramified places of (a, b / Q)");
    sub->add_option("a", class_a, "Nonzero rational")->required();
    sub->add_option("b", class_b, "Nonzero rational")->required();
    verbs.emplace_back(sub, [&](Context& ctx) { return do_class(ctx, class_a, class_b); });
  }

  std::vector<std::string> product_values;
  {
    auto* sub = app.add_subcommand("class-product", "Product of two quaternion classes over Q");
    sub->add_option("values", product_values, "a1 b1 a2 b2")->required()->expected(4);
    verbs.emplace_back(sub, [&](Context& ctx) { return do_class_product(ctx, product_values); });
  }

  CertInput tensor_a, tensor_b;
  {
    auto* sub = app.add_subcommand("tensor", "Tensor product of two Galois extensions of the ground field");
    add_cert_options(sub, tensor_a);
    add_cert_options(sub, tensor_b, "2");
    verbs.emplace_back(sub, [&](Context& ctx) { return do_tensor(ctx, tensor_a, tensor_b); });
  }

  FixedRingArgs fixed;
  {
    auto* sub = app.add_subcommand("fixed-ring", "Fixed ring of a subgroup and the two induced extensions");
    add_cert_options(sub, fixed.input);
    sub->add_option("--subgroup", fixed.subgroup, "Generator as comma-separated entries, e.g. 0,1; repeatable")
        ->required();
    verbs.emplace_back(sub, [&](Context& ctx) { return do_fixed_ring(ctx, fixed); });
  }

  BaseChangeArgs change;
  {
    auto* sub = app.add_subcommand("base-change", "Extend scalars along a field embedding");
    add_cert_options(sub, change.input);
    sub->add_option("--target", change.target, "Target field descriptor")->required();
    sub->add_option("--image", change.image, "Image of the source field generator");
    verbs.emplace_back(sub, [&](Context& ctx) { return do_base_change(ctx, change); });
  }

  ReportArgs report;
  {
    auto* sub = app.add_subcommand("report", "Table of every certification check");
    add_cert_options(sub, report.input);
    sub->add_flag("--timing", report.timing, "Include the elapsed time");
    verbs.emplace_back(sub, [&](Context& ctx) { return do_report(ctx, report); });
  }

  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--format") {
      ++k;
      continue;
    }
    if (!args[k].empty() && args[k].front() == '-') continue;
    if (!app.get_subcommand_no_throw(args[k])) {
      err << "unknown verb '" << args[k] << "'\nRun with --help for more information.\n";
      return 2;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto& [sub, handler] : verbs) {
    if (!sub->parsed()) continue;
    Context ctx{in, out};
    const bool text_default = sub->get_name() == "report";
    ctx.format = format.empty() ? (text_default ? Format::Text : Format::Json)
                                : (format == "text" ? Format::Text : Format::Json);
    try {
      return handler(ctx);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return exit_code(e.code());
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return 3;
    }
  }
  return 3;
}

}  // namespace galoisazu::cli
