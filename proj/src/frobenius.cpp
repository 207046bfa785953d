#include "galoisazu/frobenius.hpp"

#include <algorithm>
#include <numeric>

namespace galoisazu {

namespace {

constexpr std::uint64_t kExhaustiveCap = 1'000'000;

void axpy(const Field& F, Vec& acc, const Scalar& c, const Vec& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!F.is_zero(x[i])) F.add_mul(acc[i], c, x[i]);
}

bool all_of_checks(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

// (a (x) b)(c (x) d) = ac (x) db in S (x) S^op, ground basis i * d + j.
Vec multiply_in_enveloping(const Algebra& A, const Vec& p, const Vec& q) {
  const auto& F = *A.field();
  const std::size_t d = A.dim();
  Vec out = zero_vec(F, d * d);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (F.is_zero(p[s])) continue;
    for (std::size_t t = 0; t < q.size(); ++t) {
      if (F.is_zero(q[t])) continue;
      const Scalar c = F.mul(p[s], q[t]);
      const SparseVec& left = A.product(s / d, t / d);
      const SparseVec& right = A.product(t % d, s % d);
      for (const auto& l : left)
        for (const auto& r : right) F.add_mul(out[l.index * d + r.index], c, F.mul(l.value, r.value));
    }
  }
  return out;
}

// First n primes, as coefficients for a generic point.
std::vector<std::int64_t> first_primes(std::size_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 2; out.size() < n; ++k) {
    bool prime = true;
    for (std::int64_t p : out) {
      if (p * p > k) break;
      if (k % p == 0) prime = false;
    }
    if (prime) out.push_back(k);
  }
  return out;
}

}  // namespace

// Frobenius systems -------------------------------------------------------------

bool FrobeniusSystem::all_passed() const { return all_of_checks(checks); }

Vec FrobeniusSystem::tau_of(const Vec& s) const {
  const auto& A = *extension.total();
  const auto& F = *A.field();
  const Vec coords = tau.apply(s);
  Vec out = A.zero();
  const auto& w = extension.base().vectors();
  for (std::size_t m = 0; m < coords.size(); ++m)
    if (!F.is_zero(coords[m])) axpy(F, out, coords[m], w[m]);
  return out;
}

FrobeniusSystem make_frobenius_system(const Extension& ext, std::vector<Vec> u, std::vector<Vec> v, Matrix tau) {
  const auto& A = *ext.total();
  const auto& F = *A.field();
  const std::size_t d = A.dim();
  if (u.size() != v.size()) raise(ErrorCode::ParseError, "Frobenius pairs have unequal lengths");
  if (tau.rows() != ext.base_dim() || tau.cols() != d)
    raise(ErrorCode::ParseError, "tau must be a base_dim x dim matrix");
  FrobeniusSystem fs{ext, std::move(u), std::move(v), std::move(tau), {}};

  bool bimodule = true;
  std::string witness;
  for (const auto& r : ext.base().vectors())
    for (std::size_t i = 0; i < d && bimodule; ++i) {
      const Vec s = A.basis_vector(i);
      if (fs.tau_of(A.multiply(r, s)) != A.multiply(r, fs.tau_of(s)) ||
          fs.tau_of(A.multiply(s, r)) != A.multiply(fs.tau_of(s), r)) {
        bimodule = false;
        witness = "fails on basis element " + A.labels()[i];
      }
    }
  fs.checks.push_back({"tau_bimodule", bimodule, witness});

  bool left = true, right = true;
  std::string left_witness, right_witness;
  for (std::size_t b = 0; b < d; ++b) {
    const Vec s = A.basis_vector(b);
    Vec lhs = A.zero(), rhs = A.zero();
    for (std::size_t i = 0; i < fs.u.size(); ++i) {
      lhs = add_vec(F, lhs, A.multiply(fs.u[i], fs.tau_of(A.multiply(fs.v[i], s))));
      rhs = add_vec(F, rhs, A.multiply(fs.tau_of(A.multiply(s, fs.u[i])), fs.v[i]));
    }
    if (left && lhs != s) {
      left = false;
      left_witness = "s = " + A.labels()[b] + " gives " + A.format(lhs);
    }
    if (right && rhs != s) {
      right = false;
      right_witness = "s = " + A.labels()[b] + " gives " + A.format(rhs);
    }
  }
  fs.checks.push_back({"normalizing_left", left, left_witness});
  fs.checks.push_back({"normalizing_right", right, right_witness});
  return fs;
}

FrobeniusSystem frobenius_from_galois(const GaloisCertificate& cert) {
  const auto& ext = cert.extension;
  const auto& A = *ext.total();
  const Matrix tr = trace_map(cert);
  Matrix tau(A.field(), ext.base_dim(), A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const auto coords = ext.base().coordinates(tr.column(j));
    if (!coords) raise(ErrorCode::InvariantsMismatch, "trace leaves the base on " + A.labels()[j]);
    for (std::size_t m = 0; m < coords->size(); ++m) tau.at(m, j) = (*coords)[m];
  }
  return make_frobenius_system(ext, cert.basis.x, cert.basis.y, std::move(tau));
}

// Separability ------------------------------------------------------------------

SeparabilityReport separability_check(const Extension& ext, const Vec& eta) {
  const auto& A = *ext.total();
  SeparabilityReport rep;
  rep.eta = eta;
  rep.casimir_ok = true;
  for (std::size_t i = 0; i < A.dim() && rep.casimir_ok; ++i) {
    const Vec s = A.basis_vector(i);
    rep.casimir_ok = ext.left_act(s, eta) == ext.right_act(eta, s);
  }
  rep.mu_one_ok = ext.multiply_out(eta) == A.unit();
  if (ext.is_ground() && ext.base_dim() == 1) rep.idempotent_ok = multiply_in_enveloping(A, eta, eta) == eta;
  return rep;
}

// Nakayama ----------------------------------------------------------------------

bool NakayamaResult::all_passed() const { return all_of_checks(checks); }

NakayamaResult nakayama(const GaloisCertificate& cert) {
  const auto& ext = cert.extension;
  if (!ext.is_ground() || ext.base_dim() != 1)
    raise(ErrorCode::NotCentralizing, "the Nakayama automorphism needs the ground field as base");
  const AlgebraPtr& Ap = ext.total();
  const auto& A = *Ap;
  const auto& F = *A.field();
  const std::size_t d = A.dim();
  const auto& x = cert.basis.x;
  const auto& y = cert.basis.y;

  NakayamaResult res;
  res.nu = Matrix(A.field(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vec dj = A.basis_vector(j);
    Vec col = A.zero();
    for (std::size_t i = 0; i < x.size(); ++i) col = add_vec(F, col, A.multiply(trace(cert, A.multiply(x[i], dj)), y[i]));
    res.nu.set_column(j, col);
  }

  const Matrix& nu = res.nu;
  const bool unital = is_unital(A, A, nu);
  const bool mult = is_multiplicative(A, A, nu);
  const bool bij = inverse(nu).has_value();
  res.checks.push_back({"automorphism", unital && mult && bij,
                        std::string(unital ? "" : "not unital ") + (mult ? "" : "not multiplicative ") +
                            (bij ? "" : "not bijective")});

  bool defining = true;
  std::string witness;
  for (std::size_t a = 0; a < d && defining; ++a)
    for (std::size_t b = 0; b < d && defining; ++b) {
      const Vec s = A.basis_vector(b);
      const Vec lhs = trace(cert, A.multiply(nu.column(a), s));
      const Vec rhs = trace(cert, A.multiply(s, A.basis_vector(a)));
      if (lhs != rhs) {
        defining = false;
        witness = "d = " + A.labels()[a] + ", s = " + A.labels()[b];
      }
    }
  res.checks.push_back({"tau_nu_identity", defining, witness});

  bool fixes_base = true;
  for (const auto& r : ext.base().vectors()) fixes_base = fixes_base && nu.apply(r) == r;
  res.checks.push_back({"fixes_base", fixes_base, {}});
  return res;
}

// Symmetry ----------------------------------------------------------------------

std::string_view to_string(SymmetryOutcome outcome) {
  switch (outcome) {
    case SymmetryOutcome::Symmetric:
      return "symmetric";
    case SymmetryOutcome::NotInner:
      return "not_inner";
    case SymmetryOutcome::NotFoundAtDeskScale:
      return "not_found_at_desk_scale";
  }
  return "unknown";
}

SymmetryResult is_symmetric(const GaloisCertificate& cert, const Matrix& nu) {
  const auto& ext = cert.extension;
  if (!ext.is_ground() || ext.base_dim() != 1)
    raise(ErrorCode::NotCentralizing, "symmetry is tested over the ground field only");
  const auto& A = *ext.total();
  const auto& F = *A.field();
  const std::size_t d = A.dim();
  if (nu.rows() != d || nu.cols() != d) raise(ErrorCode::ParseError, "nu has the wrong shape");

  // nu(s) w - w s = 0 for every basis s, stacked.
  Matrix system(A.field(), d * d, d);
  for (std::size_t b = 0; b < d; ++b) {
    const Matrix diff = A.left_mult_matrix(nu.column(b)) - A.right_mult_matrix(A.basis_vector(b));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) system.at(b * d + i, j) = diff.at(i, j);
  }
  const Matrix W = nullspace(system);
  SymmetryResult res;
  res.solution_dim = W.cols();
  if (W.cols() == 0) {
    res.outcome = SymmetryOutcome::NotInner;
    res.method = "solution space is zero";
    return res;
  }

  auto verified = [&](const Vec& w) -> bool {
    ++res.candidates_tested;
    const auto w_inv = try_invert(A, w);
    if (!w_inv) return false;
    for (std::size_t b = 0; b < d; ++b)
      if (A.multiply(A.multiply(w, A.basis_vector(b)), *w_inv) != nu.column(b)) return false;
    return true;
  };
  auto combine = [&](const std::vector<Scalar>& c) {
    Vec w = A.zero();
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!F.is_zero(c[k])) axpy(F, w, c[k], W.column(k));
    return w;
  };

  const std::size_t k = W.cols();
  const bool small = F.is_finite() && *F.cardinality() <= mpz_class(static_cast<unsigned long>(kExhaustiveCap));
  const std::uint64_t points = small ? F.enumerable_size(kExhaustiveCap) : 0;
  std::uint64_t total = 1;
  bool exhaustive = points > 0;
  for (std::size_t i = 0; i < k && exhaustive; ++i) {
    if (total > kExhaustiveCap / points) exhaustive = false;
    total *= points;
  }

  if (exhaustive) {
    res.method = "exhaustive over " + std::to_string(total) + " points";
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::vector<Scalar> c(k);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < k; ++i) {
        c[i] = F.element_at(rest % points);
        rest /= points;
      }
      const Vec w = combine(c);
      if (verified(w)) {
        res.outcome = SymmetryOutcome::Symmetric;
        res.witness = w;
        return res;
      }
    }
    res.outcome = SymmetryOutcome::NotInner;
    return res;
  }

  res.method = "basis vectors and a distinct-prime combination";
  for (std::size_t i = 0; i < k; ++i) {
    const Vec w = W.column(i);
    if (verified(w)) {
      res.outcome = SymmetryOutcome::Symmetric;
      res.witness = w;
      return res;
    }
  }
  std::vector<Scalar> c;
  for (std::int64_t p : first_primes(k)) c.push_back(F.from_int(p));
  const Vec w = combine(c);
  if (verified(w)) {
    res.outcome = SymmetryOutcome::Symmetric;
    res.witness = w;
    return res;
  }
  res.outcome = SymmetryOutcome::NotFoundAtDeskScale;
  return res;
}

}  // namespace galoisazu
