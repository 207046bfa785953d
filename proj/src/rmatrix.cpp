#include "galoisazu/rmatrix.hpp"

#include <algorithm>
#include <functional>

namespace galoisazu {

namespace {

std::size_t power_of(std::size_t d, int k) {
  std::size_t out = 1;
  for (int i = 0; i < k; ++i) out *= d;
  return out;
}

void require_same(const TensorElement& a, const TensorElement& b) {
  if (a.order != b.order || a.algebra.get() != b.algebra.get())
    raise(ErrorCode::FieldMismatch, "tensor elements live in different spaces");
}

// Row-compressed matrix used to verify relations among kron-shaped generators.
struct Sparse {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
};

Sparse to_sparse(const Matrix& m) {
  const auto& F = *m.field();
  Sparse s{m.rows(), std::vector<std::vector<std::pair<std::size_t, Scalar>>>(m.rows())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!F.is_zero(m.at(i, j))) s.rows[i].emplace_back(j, m.at(i, j));
  return s;
}

Sparse sparse_mul(const Field& F, const Sparse& a, const Sparse& b) {
  Sparse out{a.n, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(a.n)};
  std::vector<Scalar> acc(a.n, F.zero());
  std::vector<char> touched(a.n, 0);
  for (std::size_t i = 0; i < a.n; ++i) {
    std::vector<std::size_t> cols;
    for (const auto& [k, v] : a.rows[i])
      for (const auto& [j, w] : b.rows[k]) {
        if (!touched[j]) {
          touched[j] = 1;
          cols.push_back(j);
        }
        F.add_mul(acc[j], v, w);
      }
    std::sort(cols.begin(), cols.end());
    for (std::size_t j : cols) {
      if (!F.is_zero(acc[j])) out.rows[i].emplace_back(j, acc[j]);
      acc[j] = F.zero();
      touched[j] = 0;
    }
  }
  return out;
}

bool sparse_equal(const Sparse& a, const Sparse& b) { return a.rows == b.rows; }

Matrix kron_power(const Matrix& m, int n) {
  Matrix out = m;
  for (int i = 1; i < n; ++i) out = kron(out, m);
  return out;
}

}  // namespace

// Tensor powers -----------------------------------------------------------------

TensorElement tensor_element(const AlgebraPtr& algebra, int order, Vec coeffs) {
  if (order < 1 || order > 4) raise(ErrorCode::DimensionTooLarge, "tensor order must be between 1 and 4");
  if (coeffs.size() != power_of(algebra->dim(), order))
    raise(ErrorCode::ParseError, "tensor coefficient vector has the wrong length");
  return TensorElement{algebra, order, std::move(coeffs)};
}

TensorElement pure_tensor_power(const AlgebraPtr& algebra, const std::vector<Vec>& legs) {
  const auto& F = *algebra->field();
  Vec out{F.one()};
  for (const auto& leg : legs) {
    Vec next(out.size() * leg.size(), F.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (F.is_zero(out[i])) continue;
      for (std::size_t j = 0; j < leg.size(); ++j)
        if (!F.is_zero(leg[j])) next[i * leg.size() + j] = F.mul(out[i], leg[j]);
    }
    out = std::move(next);
  }
  return tensor_element(algebra, static_cast<int>(legs.size()), std::move(out));
}

TensorElement tensor_unit(const AlgebraPtr& algebra, int order) {
  return pure_tensor_power(algebra, std::vector<Vec>(static_cast<std::size_t>(order), algebra->unit()));
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
  require_same(a, b);
  const auto& A = *a.algebra;
  const auto& F = *A.field();
  const std::size_t d = A.dim();
  const int k = a.order;
  Vec out = zero_vec(F, a.coeffs.size());
  std::vector<std::size_t> da(k), db(k);
  for (std::size_t s = 0; s < a.coeffs.size(); ++s) {
    if (F.is_zero(a.coeffs[s])) continue;
    for (std::size_t r = s, leg = k; leg-- > 0; r /= d) da[leg] = r % d;
    for (std::size_t t = 0; t < b.coeffs.size(); ++t) {
      if (F.is_zero(b.coeffs[t])) continue;
      for (std::size_t r = t, leg = k; leg-- > 0; r /= d) db[leg] = r % d;
      const Scalar c = F.mul(a.coeffs[s], b.coeffs[t]);
      // expand the product of the legs term by term
      std::function<void(int, std::size_t, const Scalar&)> expand = [&](int leg, std::size_t idx, const Scalar& coef) {
        if (leg == k) {
          F.add_mul(out[idx], c, coef);
          return;
        }
        for (const auto& e : A.product(da[leg], db[leg])) expand(leg + 1, idx * d + e.index, F.mul(coef, e.value));
      };
      expand(0, 0, F.one());
    }
  }
  return TensorElement{a.algebra, k, std::move(out)};
}

TensorElement embed(const TensorElement& x, Slot slot) {
  if (x.order != 2) raise(ErrorCode::ParseError, "embed expects an element of the tensor square");
  const auto& A = *x.algebra;
  const auto& F = *A.field();
  const std::size_t d = A.dim();
  Vec out = zero_vec(F, d * d * d);
  for (std::size_t t = 0; t < x.coeffs.size(); ++t) {
    if (F.is_zero(x.coeffs[t])) continue;
    const std::size_t p = t / d, q = t % d;
    for (const auto& u : to_sparse(F, A.unit())) {
      std::size_t idx = 0;
      switch (slot) {
        case Slot::S12: idx = (p * d + q) * d + u.index; break;
        case Slot::S23: idx = (u.index * d + p) * d + q; break;
        case Slot::S13: idx = (p * d + u.index) * d + q; break;
      }
      F.add_mul(out[idx], x.coeffs[t], u.value);
    }
  }
  return TensorElement{x.algebra, 3, std::move(out)};
}

FsResult check_fs_equation(const TensorElement& eta) {
  const TensorElement x12 = embed(eta, Slot::S12), x23 = embed(eta, Slot::S23), x13 = embed(eta, Slot::S13);
  const TensorElement p = multiply(x12, x23), q = multiply(x23, x13), r = multiply(x13, x12);
  return FsResult{p == q, q == r};
}

bool check_yang_baxter(const TensorElement& eta) {
  const TensorElement x12 = embed(eta, Slot::S12), x23 = embed(eta, Slot::S23);
  return multiply(multiply(x12, x23), x12) == multiply(multiply(x23, x12), x23);
}

// l_eta -------------------------------------------------------------------------

RMatrixOperator left_mult_operator(const TensorElement& eta) {
  if (eta.order != 2) raise(ErrorCode::ParseError, "l_eta acts on the tensor square");
  const auto& A = *eta.algebra;
  const std::size_t n = eta.coeffs.size();
  Matrix m(A.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e = zero_vec(*A.field(), n);
    e[j] = A.field()->one();
    m.set_column(j, multiply(eta, TensorElement{eta.algebra, 2, std::move(e)}).coeffs);
  }
  return RMatrixOperator{eta, std::move(m)};
}

bool invertible(const RMatrixOperator& op) { return rank(op.matrix) == op.matrix.rows(); }

TensorElement galois_tensor(const GaloisCertificate& cert) {
  const auto& ext = cert.extension;
  if (!ext.is_ground() || ext.base_dim() != 1)
    raise(ErrorCode::Unsupported, "tensor identities are evaluated over the ground field only");
  return tensor_element(ext.total(), 2, galois_element(cert));
}

// Quaternion blocks -------------------------------------------------------------

QuaternionBlocks quaternion_blocks(const AlgebraPtr& quaternion) {
  const auto& H = *quaternion;
  if (H.dim() != 4 || H.labels() != std::vector<std::string>{"1", "i", "j", "k"})
    raise(ErrorCode::Unsupported, "quaternion_blocks expects an algebra from quaternion_algebra");
  const auto& F = *H.field();
  const auto cert = certify_galois(Extension::ground(quaternion), quaternion_v_action(quaternion));
  const Matrix l = left_mult_operator(galois_tensor(cert)).matrix;

  QuaternionBlocks out;
  out.bases = {{
      {{{0, 0}, {1, 1}, {2, 2}, {3, 3}}},
      {{{0, 1}, {1, 0}, {2, 3}, {3, 2}}},
      {{{0, 2}, {2, 0}, {3, 1}, {1, 3}}},
      {{{0, 3}, {3, 0}, {1, 2}, {2, 1}}},
  }};
  std::vector<int> owner(16, -1);
  for (std::size_t u = 0; u < 4; ++u)
    for (const auto& [p, q] : out.bases[u]) {
      if (owner[p * 4 + q] != -1) raise(ErrorCode::CheckFailed, "block bases overlap");
      owner[p * 4 + q] = static_cast<int>(u);
    }
  if (std::count(owner.begin(), owner.end(), -1) != 0) raise(ErrorCode::CheckFailed, "block bases do not span");

  for (std::size_t u = 0; u < 4; ++u) {
    Matrix xi(H.field(), 4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t col = out.bases[u][c][0] * 4 + out.bases[u][c][1];
      for (std::size_t row = 0; row < 16; ++row) {
        if (F.is_zero(l.at(row, col))) continue;
        if (owner[row] != static_cast<int>(u)) raise(ErrorCode::CheckFailed, "V_u is not stable under l_eta");
        const auto& basis = out.bases[u];
        const auto it = std::find_if(basis.begin(), basis.end(),
                                     [&](const auto& pq) { return pq[0] * 4 + pq[1] == row; });
        xi.at(static_cast<std::size_t>(it - basis.begin()), c) = l.at(row, col);
      }
    }
    out.xi[u] = std::move(xi);
  }
  return out;
}

// Braid representations -------------------------------------------------------------

std::vector<Matrix> braid_representation(const TensorElement& eta, int n) {
  if (n < 2 || n > 4) raise(ErrorCode::DimensionTooLarge, "braid representations need 2 <= n <= 4");
  const auto& A = *eta.algebra;
  const FieldPtr& Fp = A.field();
  const std::size_t d = A.dim();
  if (power_of(d, n) > kMaxBraidDim)
    raise(ErrorCode::DimensionTooLarge,
          "S^(x)" + std::to_string(n) + " has dimension " + std::to_string(power_of(d, n)));
  const RMatrixOperator op = left_mult_operator(eta);
  if (!invertible(op)) raise(ErrorCode::NotInvertible, "l_eta is singular");

  std::vector<Matrix> gens;
  for (int i = 1; i < n; ++i) {
    Matrix g = op.matrix;
    if (i > 1) g = kron(Matrix::identity(Fp, power_of(d, i - 1)), g);
    if (n - i - 1 > 0) g = kron(g, Matrix::identity(Fp, power_of(d, n - i - 1)));
    gens.push_back(std::move(g));
  }

  std::vector<Sparse> sp;
  for (const auto& g : gens) sp.push_back(to_sparse(g));
  const auto& F = *Fp;
  for (std::size_t i = 0; i + 1 < sp.size(); ++i) {
    const Sparse lhs = sparse_mul(F, sparse_mul(F, sp[i], sp[i + 1]), sp[i]);
    const Sparse rhs = sparse_mul(F, sparse_mul(F, sp[i + 1], sp[i]), sp[i + 1]);
    if (!sparse_equal(lhs, rhs))
      raise(ErrorCode::CheckFailed, "braid relation fails for sigma_" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = i + 2; j < sp.size(); ++j)
      if (!sparse_equal(sparse_mul(F, sp[i], sp[j]), sparse_mul(F, sp[j], sp[i])))
        raise(ErrorCode::CheckFailed, "distant generators do not commute");
  return gens;
}

bool RepMorphismReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

RepMorphismReport check_rep_morphism(const GaloisCertificate& a, const GaloisCertificate& b, const Matrix& phi,
                                     const std::optional<FieldEmbedding>& embedding) {
  RepMorphismReport rep;
  const MorphismReport upstream =
      embedding ? check_base_change_morphism(a, b, *embedding) : check_morphism(a, b, phi);
  rep.checks.push_back({"morphism", upstream.all_passed(), {}});
  const FieldPtr& target = b.extension.total()->field();
  if (phi.rows() != b.extension.total()->dim() || phi.cols() != a.extension.total()->dim())
    raise(ErrorCode::NotAlgebraMorphism, "phi has the wrong shape");
  const TensorElement eta_a = galois_tensor(a), eta_b = galois_tensor(b);
  const std::size_t da = a.extension.total()->dim(), db = b.extension.total()->dim();
  for (int n = 2; n <= 3; ++n) {
    if (power_of(std::max(da, db), n) > kMaxBraidDim) break;
    const auto ra = braid_representation(eta_a, n);
    const auto rb = braid_representation(eta_b, n);
    const Matrix phin = kron_power(phi, n);
    bool ok = true;
    for (std::size_t i = 0; i < ra.size(); ++i) {
      const Matrix src = embedding ? map_entries(ra[i], target, [&](const Scalar& s) { return (*embedding)(s); }) : ra[i];
      ok = ok && matmul(phin, src) == matmul(rb[i], phin);
    }
    rep.checks.push_back({"commuting_square_n" + std::to_string(n), ok, {}});
  }
  return rep;
}

}  // namespace galoisazu
