#include "galoisazu/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace galoisazu {

namespace {

Vec kron_vec(const Field& F, const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size(), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!F.is_zero(b[j])) out[i * b.size() + j] = F.mul(a[i], b[j]);
  }
  return out;
}

void axpy(const Field& F, Vec& acc, const Scalar& c, const Vec& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!F.is_zero(x[i])) F.add_mul(acc[i], c, x[i]);
}

std::size_t inverse_index(const GroupSpec& G, std::size_t g) { return G.index(G.neg(G.element(g))); }

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, std::move(detail)};
}

// Minimal polynomial of u over F inside A, monic, lowest coefficient first.
Vec minimal_polynomial(const Algebra& A, const Vec& u) {
  const auto& F = *A.field();
  std::vector<Vec> powers{A.unit()};
  for (;;) {
    const Vec next = A.multiply(powers.back(), u);
    std::vector<Vec> cols = powers;
    cols.push_back(next);
    const Matrix m = Matrix::from_columns(A.field(), A.dim(), cols);
    const Matrix kernel = nullspace(m);
    if (kernel.cols() > 0) {
      Vec c = kernel.column(0);
      const Scalar lead = c.back();
      for (auto& x : c) x = F.div(x, lead);
      return c;
    }
    powers.push_back(next);
  }
}

// Rational root test on an integer polynomial of degree 2 or 3.
std::optional<bool> has_rational_root(const std::vector<mpz_class>& f) {
  if (f.front() == 0) return true;
  auto divisors = [](mpz_class n) -> std::optional<std::vector<mpz_class>> {
    n = abs(n);
    if (n > mpz_class("1000000000000")) return std::nullopt;
    std::vector<mpz_class> out;
    for (mpz_class k = 1; k * k <= n; ++k)
      if (n % k == 0) {
        out.push_back(k);
        if (k * k != n) out.push_back(n / k);
      }
    return out;
  };
  const auto num = divisors(f.front());
  const auto den = divisors(f.back());
  if (!num || !den) return std::nullopt;
  for (const auto& p : *num)
    for (const auto& q : *den)
      for (int sign : {1, -1}) {
        // evaluate q^deg f(sign p / q) exactly
        mpz_class acc = 0;
        std::vector<mpz_class> qp{1};
        for (std::size_t i = 1; i < f.size(); ++i) qp.push_back(qp.back() * q);
        mpz_class ppow = 1;
        const std::size_t deg = f.size() - 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
          acc += f[i] * ppow * qp[deg - i];
          ppow *= sign * p;
        }
        if (acc == 0) return true;
      }
  return false;
}

// nullopt when irreducibility cannot be decided at desk scale.
std::optional<bool> is_irreducible(const Field& F, const Vec& monic) {
  const std::size_t deg = monic.size() - 1;
  if (deg <= 1) return true;
  if (F.kind() == FieldKind::Prime) {
    std::vector<std::int64_t> c;
    for (const auto& s : monic) c.push_back(std::get<std::int64_t>(s));
    return is_irreducible_mod_p(F.characteristic(), c);
  }
  if (F.kind() != FieldKind::Rationals) return std::nullopt;
  mpz_class den = 1;
  for (const auto& s : monic) den = lcm(den, std::get<mpq_class>(s).get_den());
  std::vector<mpz_class> f;
  for (const auto& s : monic) f.push_back(mpz_class(std::get<mpq_class>(s) * den));
  if (deg <= 3) {
    auto root = has_rational_root(f);
    if (!root) return std::nullopt;
    return !*root;
  }
  for (std::int64_t p = 2; p < 200; ++p) {
    if (!is_prime(p) || f.back() % p == 0) continue;
    std::vector<std::int64_t> red;
    const mpz_class lead_inv = [&] {
      mpz_class inv;
      mpz_class lp = f.back() % p;
      if (lp < 0) lp += p;
      mpz_invert(inv.get_mpz_t(), lp.get_mpz_t(), mpz_class(p).get_mpz_t());
      return inv;
    }();
    for (const auto& c : f) {
      mpz_class r = (c * lead_inv) % p;
      if (r < 0) r += p;
      red.push_back(r.get_si());
    }
    if (is_irreducible_mod_p(p, red)) return true;
  }
  return std::nullopt;
}

void require_field(const SubalgebraBasis& U) {
  if (!U.is_commutative()) raise(ErrorCode::Unsupported, "base subalgebra is not commutative");
  const std::size_t m = U.dim();
  if (m == 1) return;
  const AlgebraPtr Ua = subalgebra_as_algebra(U);
  const auto& F = *Ua->field();
  const bool small = F.is_finite() && *F.cardinality() <= 1'000'000;
  const std::uint64_t q = small ? F.enumerable_size(1'000'000) : 0;
  std::uint64_t total = 1;
  bool enumerable = small;
  for (std::size_t i = 0; enumerable && i < m; ++i) {
    if (total > 1'000'000 / q) enumerable = false;
    total *= q;
  }
  if (enumerable) {
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      Vec v;
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < m; ++i) {
        v.push_back(F.element_at(rest % q));
        rest /= q;
      }
      if (F.is_zero(determinant(Ua->left_mult_matrix(v))))
        raise(ErrorCode::FixedRingNotField, "fixed ring has the zero divisor " + U.algebra()->format([&] {
                Vec w = zero_vec(F, U.algebra()->dim());
                for (std::size_t i = 0; i < m; ++i) axpy(F, w, v[i], U.vectors()[i]);
                return w;
              }()));
    }
    return;
  }
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < m; ++i) candidates.push_back(Ua->basis_vector(i));
  for (std::int64_t c = 1; c <= 3; ++c) {
    Vec v = zero_vec(F, m);
    std::int64_t coef = 1;
    for (std::size_t i = 0; i < m; ++i, coef += c) v[i] = F.from_int(coef);
    candidates.push_back(v);
  }
  bool certified = false;
  for (const auto& u : candidates) {
    const Vec mp = minimal_polynomial(*Ua, u);
    const auto irr = is_irreducible(F, mp);
    if (irr && !*irr)
      raise(ErrorCode::FixedRingNotField, "an element of the fixed ring has a reducible minimal polynomial");
    if (irr && *irr && mp.size() - 1 == m) certified = true;
  }
  if (!certified) raise(ErrorCode::Unsupported, "could not decide whether the fixed ring is a field");
}

// Greedy choice of basis vectors b with {chosen w_m} independent.
std::vector<Vec> module_basis(const Algebra& A, const std::vector<Vec>& w, bool right) {
  const std::size_t d = A.dim(), m = w.size();
  std::vector<Vec> chosen, span;
  for (std::size_t i = 0; i < d && span.size() < d; ++i) {
    const Vec b = A.basis_vector(i);
    std::vector<Vec> trial = span;
    for (const auto& u : w) trial.push_back(right ? A.multiply(b, u) : A.multiply(u, b));
    if (rank(Matrix::from_columns(A.field(), d, trial)) == span.size() + m) {
      chosen.push_back(b);
      span = std::move(trial);
    }
  }
  if (span.size() != d) raise(ErrorCode::Unsupported, "algebra is not free over the base");
  return chosen;
}

Matrix stacked_vectors(const FieldPtr& field, std::size_t rows, const std::vector<Vec>& cols) {
  return Matrix::from_columns(field, rows, cols);
}

}  // namespace

// Extension ---------------------------------------------------------------------

Extension Extension::ground(AlgebraPtr total) {
  Extension e;
  const std::size_t d = total->dim();
  e.ground_ = true;
  e.base_ = std::make_shared<const SubalgebraBasis>(total, std::vector<Vec>{total->unit()});
  for (std::size_t i = 0; i < d; ++i) {
    e.right_basis_.push_back(total->basis_vector(i));
    e.left_basis_.push_back(total->basis_vector(i));
  }
  e.right_expand_ = Matrix::identity(total->field(), d);
  e.left_expand_ = Matrix::identity(total->field(), d);
  e.total_ = std::move(total);
  return e;
}

Extension Extension::over(AlgebraPtr total, SubalgebraBasis base) {
  if (base.algebra().get() != total.get() && !(*base.algebra() == *total))
    raise(ErrorCode::BaseMismatch, "base subalgebra lives in a different algebra");
  require_field(base);
  Extension e;
  const auto& A = *total;
  const std::size_t d = A.dim();
  e.ground_ = base.dim() == 1;
  const auto& w = base.vectors();
  e.right_basis_ = module_basis(A, w, true);
  e.left_basis_ = module_basis(A, w, false);
  std::vector<Vec> rcols, lcols;
  for (const auto& b : e.right_basis_)
    for (const auto& u : w) rcols.push_back(A.multiply(b, u));
  for (const auto& u : w)
    for (const auto& b : e.left_basis_) lcols.push_back(A.multiply(u, b));
  e.right_expand_ = *inverse(stacked_vectors(total->field(), d, rcols));
  e.left_expand_ = *inverse(stacked_vectors(total->field(), d, lcols));
  e.base_ = std::make_shared<const SubalgebraBasis>(std::move(base));
  e.total_ = std::move(total);
  return e;
}

Vec Extension::pure_tensor(const Vec& x, const Vec& y) const {
  const auto& F = *total_->field();
  const std::size_t m = base_dim(), r = rank();
  if (ground_ && m == 1 && right_expand_.is_identity()) return kron_vec(F, x, y);
  Vec out = zero_vec(F, tensor_dim());
  const Vec cx = right_expand_.apply(x);
  const auto& w = base_->vectors();
  for (std::size_t k = 0; k < r; ++k) {
    Vec u = zero_vec(F, total_->dim());
    bool any = false;
    for (std::size_t mm = 0; mm < m; ++mm)
      if (!F.is_zero(cx[k * m + mm])) {
        axpy(F, u, cx[k * m + mm], w[mm]);
        any = true;
      }
    if (!any) continue;
    const Vec cy = left_expand_.apply(total_->multiply(u, y));
    for (std::size_t idx = 0; idx < cy.size(); ++idx) out[k * m * r + idx] = cy[idx];
  }
  return out;
}

Vec Extension::left_leg(std::size_t t) const { return right_basis_.at(t / (base_dim() * rank())); }

Vec Extension::right_leg(std::size_t t) const {
  const std::size_t rest = t % (base_dim() * rank());
  return total_->multiply(base_->vectors()[rest / rank()], left_basis_[rest % rank()]);
}

Vec Extension::left_act(const Vec& s, const Vec& tensor) const {
  const auto& F = *total_->field();
  Vec out = zero_vec(F, tensor_dim());
  for (std::size_t t = 0; t < tensor.size(); ++t)
    if (!F.is_zero(tensor[t])) axpy(F, out, tensor[t], pure_tensor(total_->multiply(s, left_leg(t)), right_leg(t)));
  return out;
}

Vec Extension::right_act(const Vec& tensor, const Vec& s) const {
  const auto& F = *total_->field();
  Vec out = zero_vec(F, tensor_dim());
  for (std::size_t t = 0; t < tensor.size(); ++t)
    if (!F.is_zero(tensor[t])) axpy(F, out, tensor[t], pure_tensor(left_leg(t), total_->multiply(right_leg(t), s)));
  return out;
}

Vec Extension::multiply_out(const Vec& tensor) const {
  const auto& F = *total_->field();
  Vec out = total_->zero();
  for (std::size_t t = 0; t < tensor.size(); ++t)
    if (!F.is_zero(tensor[t])) axpy(F, out, tensor[t], total_->multiply(left_leg(t), right_leg(t)));
  return out;
}

Vec Extension::map_legs(const Vec& tensor, const Matrix& f, const Matrix& g) const {
  const auto& F = *total_->field();
  Vec out = zero_vec(F, tensor_dim());
  for (std::size_t t = 0; t < tensor.size(); ++t)
    if (!F.is_zero(tensor[t])) axpy(F, out, tensor[t], pure_tensor(f.apply(left_leg(t)), g.apply(right_leg(t))));
  return out;
}

std::string Extension::describe() const {
  if (ground_) return "over the ground field, dim " + std::to_string(total_->dim());
  return "over a subfield of dim " + std::to_string(base_dim()) + ", rank " + std::to_string(rank());
}

// Certification ---------------------------------------------------------------------

bool GaloisCertificate::all_passed() const {
  return invariants_ok && gamma_bijective &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool MorphismReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Matrix gamma_matrix(const Extension& ext, const AlgebraAction& action) {
  const auto& A = *ext.total();
  if (action.algebra().get() != ext.total().get() && !(*action.algebra() == A))
    raise(ErrorCode::BaseMismatch, "action is on a different algebra");
  for (std::size_t g = 0; g < action.generators().size(); ++g)
    for (const auto& w : ext.base().vectors())
      if (action.generators()[g].apply(w) != w)
        raise(ErrorCode::ActionMovesBase, "generator " + std::to_string(g) + " moves " + A.format(w));
  const std::size_t d = A.dim(), n = action.group().order(), td = ext.tensor_dim();
  Matrix gamma(A.field(), n * d, td);
  for (std::size_t t = 0; t < td; ++t) {
    const Vec x = ext.left_leg(t), y = ext.right_leg(t);
    for (std::size_t g = 0; g < n; ++g) {
      const Vec s = A.multiply(x, action.act(g, y));
      for (std::size_t i = 0; i < d; ++i) gamma.at(g * d + i, t) = s[i];
    }
  }
  return gamma;
}

Vec delta(const GaloisCertificate& cert, std::size_t g) {
  const auto& A = *cert.extension.total();
  const std::size_t d = A.dim();
  Vec out = zero_vec(*A.field(), cert.action.group().order() * d);
  for (std::size_t i = 0; i < d; ++i) out[g * d + i] = A.unit()[i];
  return out;
}

Vec eta_of(const GaloisCertificate& cert, std::size_t g) {
  const auto& ext = cert.extension;
  const auto& F = *ext.total()->field();
  const std::size_t ginv = inverse_index(cert.action.group(), g);
  Vec out = zero_vec(F, ext.tensor_dim());
  for (std::size_t i = 0; i < cert.basis.x.size(); ++i)
    axpy(F, out, F.one(), ext.pure_tensor(cert.basis.x[i], cert.action.act(ginv, cert.basis.y[i])));
  return out;
}

const Vec& galois_element(const GaloisCertificate& cert) { return cert.eta.at(0); }
const GaloisBasis& galois_basis(const GaloisCertificate& cert) { return cert.basis; }

Vec trace(const GaloisCertificate& cert, const Vec& s) {
  const auto& F = *cert.extension.total()->field();
  Vec out = zero_vec(F, s.size());
  for (std::size_t g = 0; g < cert.action.group().order(); ++g) axpy(F, out, F.one(), cert.action.act(g, s));
  return out;
}

Matrix trace_map(const GaloisCertificate& cert) {
  const auto& A = *cert.extension.total();
  Matrix out(A.field(), A.dim(), A.dim());
  for (std::size_t g = 0; g < cert.action.group().order(); ++g) out = out + cert.action.element_matrix(g);
  return out;
}

GaloisCertificate certify_galois(const Extension& ext, const AlgebraAction& action) {
  GaloisCertificate cert;
  cert.extension = ext;
  cert.action = action;
  const auto& A = *ext.total();
  const auto& F = *A.field();
  const GroupSpec& G = action.group();
  const std::size_t n = G.order();

  cert.gamma = gamma_matrix(ext, action);
  const SubalgebraBasis inv = invariants(action);
  cert.invariants_ok = inv.same_span(ext.base());
  if (!cert.invariants_ok) {
    std::string found;
    for (const auto& v : inv.vectors()) found += (found.empty() ? "" : ", ") + A.format(v);
    raise(ErrorCode::InvariantsMismatch, "S^G has dimension " + std::to_string(inv.dim()) + " (basis " + found +
                                             "), base has dimension " + std::to_string(ext.base_dim()));
  }
  if (cert.gamma.rows() != cert.gamma.cols())
    raise(ErrorCode::GammaSingular, "Gamma is " + std::to_string(cert.gamma.rows()) + " x " +
                                        std::to_string(cert.gamma.cols()) + ", rank " +
                                        std::to_string(rank(cert.gamma)));
  auto gi = inverse(cert.gamma);
  if (!gi) raise(ErrorCode::GammaSingular, "Gamma has rank " + std::to_string(rank(cert.gamma)) + " < " +
                                               std::to_string(cert.gamma.rows()));
  cert.gamma_inverse = std::move(*gi);
  cert.gamma_bijective = true;
  const std::size_t N = cert.gamma.rows();
  cert.strict = F.characteristic() == 0 || n % static_cast<std::size_t>(F.characteristic()) != 0;

  for (std::size_t g = 0; g < n; ++g) cert.eta.push_back(cert.gamma_inverse.apply(delta(cert, g)));

  // Galois basis from eta_e grouped by the left leg
  const Vec& eta_e = cert.eta[0];
  const std::size_t block = ext.base_dim() * ext.rank();
  for (std::size_t k = 0; k < ext.rank(); ++k) {
    Vec y = A.zero();
    for (std::size_t t = k * block; t < (k + 1) * block; ++t)
      if (!F.is_zero(eta_e[t])) axpy(F, y, eta_e[t], ext.right_leg(t));
    if (is_zero_vec(F, y)) continue;
    cert.basis.x.push_back(ext.right_basis()[k]);
    cert.basis.y.push_back(std::move(y));
  }

  cert.checks.push_back(make_check("gamma_inverse",
                                   matmul(cert.gamma, cert.gamma_inverse).is_identity() &&
                                       matmul(cert.gamma_inverse, cert.gamma).is_identity(),
                                   std::to_string(N) + " x " + std::to_string(N)));

  bool basis_ok = true;
  for (std::size_t g = 0; g < n && basis_ok; ++g) {
    Vec s = A.zero();
    for (std::size_t i = 0; i < cert.basis.x.size(); ++i)
      axpy(F, s, F.one(), A.multiply(cert.basis.x[i], action.act(g, cert.basis.y[i])));
    basis_ok = s == (g == 0 ? A.unit() : A.zero());
  }
  cert.checks.push_back(make_check("galois_basis", basis_ok, "sum_i x_i g(y_i) = delta_(g,e)"));

  bool eta_ok = true;
  for (std::size_t g = 0; g < n && eta_ok; ++g) eta_ok = eta_of(cert, g) == cert.eta[g];
  cert.checks.push_back(make_check("eta_from_basis", eta_ok, "eta_g = sum_i x_i (x) g^-1(y_i)"));

  Vec sum = zero_vec(F, ext.tensor_dim());
  for (const auto& e : cert.eta) axpy(F, sum, F.one(), e);
  cert.checks.push_back(make_check("eta_sum", sum == ext.pure_tensor(A.unit(), A.unit()), "sum_g eta_g = 1 (x) 1"));

  bool inter = true;
  for (std::size_t g = 0; g < n && inter; ++g)
    for (std::size_t i = 0; i < A.dim() && inter; ++i) {
      const Vec s = A.basis_vector(i);
      inter = ext.right_act(cert.eta[g], s) == ext.left_act(action.act(g, s), cert.eta[g]);
    }
  cert.checks.push_back(make_check("eta_intertwines", inter, "eta_g s = g(s) eta_g"));

  Vec tr_sum = A.zero();
  for (std::size_t i = 0; i < cert.basis.x.size(); ++i)
    axpy(F, tr_sum, F.one(), A.multiply(cert.basis.x[i], trace(cert, cert.basis.y[i])));
  cert.checks.push_back(make_check("trace_basis", tr_sum == A.unit(), "sum_i x_i tr(y_i) = 1"));

  cert.notes.push_back("S is free over the base on an explicit basis, so it is faithfully flat");
  if (!cert.strict) cert.notes.push_back("|G| is not invertible in the base field; the extension is not strict");
  return cert;
}

// Constructions -----------------------------------------------------------------

GaloisCertificate tensor_galois(const GaloisCertificate& a, const GaloisCertificate& b) {
  if (!a.extension.is_ground() || !b.extension.is_ground())
    raise(ErrorCode::BaseMismatch, "tensor products are formed over the ground field only");
  const auto& Sa = a.extension.total();
  const auto& Sb = b.extension.total();
  if (!Sa->field()->same_as(*Sb->field())) raise(ErrorCode::FieldMismatch, "factors over different fields");
  if (Sa->dim() * Sb->dim() > max_algebra_dim())
    raise(ErrorCode::DimensionTooLarge, "tensor dimension " + std::to_string(Sa->dim() * Sb->dim()) + " exceeds the cap");
  const auto& F = *Sa->field();
  const AlgebraPtr T = tensor_algebra(Sa, Sb);
  const AlgebraAction act = tensor_action(a.action, b.action, T);
  GaloisCertificate cert = certify_galois(Extension::ground(T), act);

  Vec prod = zero_vec(F, cert.extension.tensor_dim());
  for (std::size_t i = 0; i < a.basis.x.size(); ++i)
    for (std::size_t j = 0; j < b.basis.x.size(); ++j)
      axpy(F, prod, F.one(),
           cert.extension.pure_tensor(kron_vec(F, a.basis.x[i], b.basis.x[j]), kron_vec(F, a.basis.y[i], b.basis.y[j])));
  cert.checks.push_back(make_check("eta_product", prod == cert.eta[0], "eta_e = sum (x_i (x) x'_j) (x) (y_i (x) y'_j)"));
  return cert;
}

GaloisCertificate opposite_extension(const GaloisCertificate& cert) {
  if (!cert.extension.is_ground()) raise(ErrorCode::Unsupported, "opposite extension needs a ground-field base");
  const AlgebraPtr op = opposite(cert.extension.total());
  const AlgebraAction act = opposite_action(cert.action, op);
  GaloisCertificate out = certify_galois(Extension::ground(op), act);
  const auto& F = *op->field();
  const GroupSpec& G = cert.action.group();
  bool ok = true;
  for (std::size_t g = 0; g < G.order() && ok; ++g) {
    const std::size_t ginv = inverse_index(G, g);
    Vec t = zero_vec(F, out.extension.tensor_dim());
    for (std::size_t i = 0; i < cert.basis.x.size(); ++i)
      axpy(F, t, F.one(), out.extension.pure_tensor(cert.basis.y[i], cert.action.act(ginv, cert.basis.x[i])));
    ok = out.gamma.apply(t) == delta(out, g);
  }
  out.checks.push_back(make_check("opposite_basis", ok, "Gamma_op(sum y_i^o (x) g^-1(x_i)^o) = delta_g"));
  return out;
}

FixedRingResult fixed_ring_extension(const GaloisCertificate& cert, const std::vector<GroupSpec::Element>& subgroup) {
  if (!cert.extension.is_ground()) raise(ErrorCode::Unsupported, "fixed rings are taken from ground-field extensions");
  if (!cert.strict) raise(ErrorCode::NotStrict, "|G| is not invertible in the base field");
  const AlgebraAction restricted = restrict_action(cert.action, subgroup);
  SubalgebraBasis U = invariants(restricted);
  Extension ext = Extension::over(cert.extension.total(), U);
  GaloisCertificate upper = certify_galois(ext, restricted);
  FixedRingResult result{std::move(U), std::move(upper), std::nullopt, {}};
  try {
    result.lower = quotient_extension(cert, subgroup);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SubgroupNotFactor) throw;
    result.notes.push_back(e.what());
  }
  return result;
}

GaloisCertificate quotient_extension(const GaloisCertificate& cert, const std::vector<GroupSpec::Element>& subgroup) {
  if (!cert.extension.is_ground()) raise(ErrorCode::Unsupported, "quotients are taken from ground-field extensions");
  const GroupSpec& G = cert.action.group();
  std::vector<bool> touched(G.rank(), false);
  for (const auto& h : subgroup) {
    if (h.size() != G.rank()) raise(ErrorCode::ParseError, "subgroup generator has the wrong arity");
    const auto r = G.reduce(h);
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) touched[i] = true;
  }
  std::size_t factor_order = 1;
  for (std::size_t i = 0; i < G.rank(); ++i)
    if (touched[i]) factor_order *= static_cast<std::size_t>(G.factors()[i]);
  if (subgroup_closure(G, subgroup).size() != factor_order)
    raise(ErrorCode::SubgroupNotFactor, "subgroup is not a product of whole factors of G");

  const AlgebraAction restricted = restrict_action(cert.action, subgroup);
  const SubalgebraBasis U = invariants(restricted);
  const AlgebraPtr Ua = subalgebra_as_algebra(U);
  std::vector<int> orders;
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < G.rank(); ++i) {
    if (touched[i]) continue;
    orders.push_back(G.factors()[i]);
    Matrix m(Ua->field(), U.dim(), U.dim());
    for (std::size_t k = 0; k < U.dim(); ++k) m.set_column(k, *U.coordinates(cert.action.generators()[i].apply(U.vectors()[k])));
    gens.push_back(std::move(m));
  }
  return certify_galois(Extension::ground(Ua), AlgebraAction::make(GroupSpec(orders), Ua, gens));
}

// Base change -------------------------------------------------------------------

FieldEmbedding::FieldEmbedding(FieldPtr source, FieldPtr target, std::optional<Scalar> generator_image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(generator_image)) {
  const auto& S = *source_;
  const auto& T = *target_;
  if (S.characteristic() != T.characteristic())
    raise(ErrorCode::EmbeddingInvalid, "characteristics differ: " + S.descriptor() + " -> " + T.descriptor());
  if (image_ && !T.is_canonical(*image_)) raise(ErrorCode::EmbeddingInvalid, "generator image is not an element of the target");
  const bool needs_image = S.kind() == FieldKind::Extension || S.kind() == FieldKind::Cyclotomic;
  if (!needs_image) {
    image_.reset();
    return;
  }
  if (!image_) {
    if (!S.same_as(T)) raise(ErrorCode::EmbeddingInvalid, "an image of the generator is required");
    image_ = T.generator();
    return;
  }
  // the image must be a root of the defining polynomial
  Scalar value = T.zero(), power = T.one();
  if (S.kind() == FieldKind::Extension) {
    for (auto c : S.extension_modulus()) {
      T.add_mul(value, T.from_int(c), power);
      power = T.mul(power, *image_);
    }
  } else {
    for (const auto& c : S.cyclotomic_modulus()) {
      T.add_mul(value, T.from_rational(c), power);
      power = T.mul(power, *image_);
    }
  }
  if (!T.is_zero(value))
    raise(ErrorCode::EmbeddingInvalid, T.format(*image_) + " is not a root of the defining polynomial of " + S.descriptor());
}

Scalar FieldEmbedding::operator()(const Scalar& s) const {
  const auto& T = *target_;
  switch (source_->kind()) {
    case FieldKind::Rationals: return T.from_rational(std::get<mpq_class>(s));
    case FieldKind::Prime: return T.from_int(std::get<std::int64_t>(s));
    case FieldKind::Extension: {
      Scalar value = T.zero(), power = T.one();
      for (auto c : std::get<std::vector<std::int64_t>>(s)) {
        T.add_mul(value, T.from_int(c), power);
        power = T.mul(power, *image_);
      }
      return value;
    }
    case FieldKind::Cyclotomic: {
      Scalar value = T.zero(), power = T.one();
      for (const auto& c : std::get<std::vector<mpq_class>>(s)) {
        T.add_mul(value, T.from_rational(c), power);
        power = T.mul(power, *image_);
      }
      return value;
    }
  }
  raise(ErrorCode::EmbeddingInvalid, "unknown field kind");
}

bool FieldEmbedding::is_identity() const {
  return source_->same_as(*target_) && (!image_ || *image_ == target_->generator());
}

GaloisCertificate base_change(const GaloisCertificate& cert, const FieldEmbedding& embedding) {
  if (!cert.extension.is_ground()) raise(ErrorCode::NotCentralizing, "base change needs a ground-field base");
  if (!cert.extension.total()->field()->same_as(*embedding.source()))
    raise(ErrorCode::FieldMismatch, "embedding source is not the field of the certificate");
  const auto& T = embedding.target();
  const AlgebraPtr ST = map_scalars(cert.extension.total(), T, embedding);
  std::vector<Matrix> gens;
  for (const auto& m : cert.action.generators()) gens.push_back(map_entries(m, T, embedding));
  GaloisCertificate out = certify_galois(Extension::ground(ST), AlgebraAction::make(cert.action.group(), ST, gens));
  Vec mapped;
  for (const auto& s : cert.eta[0]) mapped.push_back(embedding(s));
  out.checks.push_back(make_check("eta_base_change", mapped == out.eta[0], "(phi (x) phi)(eta_e) = eta'_e"));
  return out;
}

MorphismReport check_morphism(const GaloisCertificate& a, const GaloisCertificate& b, const Matrix& phi) {
  if (!a.extension.is_ground() || !b.extension.is_ground())
    raise(ErrorCode::Unsupported, "morphism checks need ground-field bases");
  const auto& Sa = *a.extension.total();
  const auto& Sb = *b.extension.total();
  if (!Sa.field()->same_as(*Sb.field())) raise(ErrorCode::FieldMismatch, "algebras over different fields");
  if (phi.rows() != Sb.dim() || phi.cols() != Sa.dim())
    raise(ErrorCode::NotAlgebraMorphism, "matrix has the wrong shape");
  if (!is_unital(Sa, Sb, phi) || !is_multiplicative(Sa, Sb, phi))
    raise(ErrorCode::NotAlgebraMorphism, "map is not a unital algebra morphism");
  if (a.action.group().factors() != b.action.group().factors())
    raise(ErrorCode::NotEquivariant, "the two actions are by different groups");
  for (std::size_t g = 0; g < a.action.generators().size(); ++g)
    if (matmul(phi, a.action.generators()[g]) != matmul(b.action.generators()[g], phi))
      raise(ErrorCode::NotEquivariant, "phi does not commute with generator " + std::to_string(g));

  MorphismReport report;
  const std::size_t n = a.action.group().order();
  const Matrix lhs = matmul(block_diagonal(phi, n), a.gamma);
  const Matrix pp = kron(phi, phi);
  const Matrix rhs = matmul(b.gamma, pp);
  report.checks.push_back(make_check("gamma_naturality", lhs == rhs, "blockdiag(phi) Gamma = Gamma' (phi (x) phi)"));
  report.checks.push_back(make_check("eta_naturality", pp.apply(a.eta[0]) == b.eta[0], "(phi (x) phi)(eta_e) = eta'_e"));
  return report;
}

MorphismReport check_base_change_morphism(const GaloisCertificate& source, const GaloisCertificate& changed,
                                          const FieldEmbedding& embedding) {
  if (source.action.group().factors() != changed.action.group().factors())
    raise(ErrorCode::NotEquivariant, "the two actions are by different groups");
  const auto& T = embedding.target();
  if (!changed.extension.total()->field()->same_as(*T)) raise(ErrorCode::FieldMismatch, "target field mismatch");
  const AlgebraPtr mapped = map_scalars(source.extension.total(), T, embedding);
  if (!(*mapped == *changed.extension.total()))
    raise(ErrorCode::NotAlgebraMorphism, "structure constants do not map to those of the base-changed algebra");
  for (std::size_t g = 0; g < source.action.generators().size(); ++g)
    if (map_entries(source.action.generators()[g], T, embedding) != changed.action.generators()[g])
      raise(ErrorCode::NotEquivariant, "generator " + std::to_string(g) + " does not map to its base change");
  MorphismReport report;
  report.checks.push_back(
      make_check("gamma_naturality", map_entries(source.gamma, T, embedding) == changed.gamma, "phi(Gamma) = Gamma'"));
  Vec eta;
  for (const auto& s : source.eta[0]) eta.push_back(embedding(s));
  report.checks.push_back(make_check("eta_naturality", eta == changed.eta[0], "phi(eta_e) = eta'_e"));
  return report;
}

TensorBaseResult prop32_check(const GaloisCertificate& a, const GaloisCertificate& b) {
  if (!a.extension.is_ground() || !b.extension.is_ground())
    raise(ErrorCode::BaseMismatch, "both extensions must be over the ground field");
  const AlgebraPtr& Sa = a.extension.total();
  const AlgebraPtr& Sb = b.extension.total();
  if (!Sa->field()->same_as(*Sb->field())) raise(ErrorCode::FieldMismatch, "factors over different fields");
  if (!Sa->is_commutative() || !Sb->is_commutative())
    raise(ErrorCode::NotCommutative, "both algebras must be commutative");
  const auto& F = *Sa->field();
  const std::size_t order = a.action.group().order() * b.action.group().order();
  if (F.characteristic() != 0 && order % static_cast<std::size_t>(F.characteristic()) == 0)
    raise(ErrorCode::NotStrict, "|G x G'| is divisible by the characteristic");

  const AlgebraPtr T = tensor_algebra(Sa, Sb);
  const Matrix ia = Matrix::identity(Sa->field(), Sa->dim());
  const Matrix ib = Matrix::identity(Sa->field(), Sb->dim());

  std::vector<Vec> first_base, second_base;
  for (std::size_t i = 0; i < Sa->dim(); ++i) first_base.push_back(kron_vec(F, Sa->basis_vector(i), Sb->unit()));
  for (std::size_t j = 0; j < Sb->dim(); ++j) second_base.push_back(kron_vec(F, Sa->unit(), Sb->basis_vector(j)));

  std::vector<Matrix> g2, g1;
  for (const auto& m : b.action.generators()) g2.push_back(kron(ia, m));
  for (const auto& m : a.action.generators()) g1.push_back(kron(m, ib));

  TensorBaseResult out;
  out.first = certify_galois(Extension::over(T, SubalgebraBasis(T, first_base)),
                             AlgebraAction::make(b.action.group(), T, g2));
  out.second = certify_galois(Extension::over(T, SubalgebraBasis(T, second_base)),
                              AlgebraAction::make(a.action.group(), T, g1));
  return out;
}

}  // namespace galoisazu
