#include "galoisazu/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace galoisazu {

SparseVec to_sparse(const Field& field, const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field.is_zero(v[i])) out.push_back({static_cast<std::uint32_t>(i), v[i]});
  return out;
}

std::size_t max_algebra_dim() {
  std::size_t cap = 64;
  if (const char* env = std::getenv("GALOISAZU_MAX_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) cap = std::min<std::size_t>(static_cast<std::size_t>(v), 128);
  }
  return cap;
}

namespace {

bool triple_associates(const Algebra& a, std::size_t i, std::size_t j, std::size_t k, Vec& lhs, Vec& rhs,
                       std::vector<std::uint32_t>& touched) {
  const auto& F = *a.field();
  touched.clear();
  for (const auto& [m, c] : a.product(i, j))
    for (const auto& [t, v] : a.product(m, k)) {
      F.add_mul(lhs[t], c, v);
      touched.push_back(t);
    }
  for (const auto& [m, c] : a.product(j, k))
    for (const auto& [t, v] : a.product(i, m)) {
      F.add_mul(rhs[t], c, v);
      touched.push_back(t);
    }
  bool ok = true;
  for (auto t : touched) {
    if (ok && !F.equal(lhs[t], rhs[t])) ok = false;
    lhs[t] = F.zero();
    rhs[t] = F.zero();
  }
  return ok;
}

}  // namespace

std::optional<std::array<std::size_t, 3>> find_associativity_failure(const Algebra& a, bool parallel) {
  const std::size_t d = a.dim();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first_failure(d, kNone);
  const auto n = static_cast<std::ptrdiff_t>(d);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Vec lhs = a.zero(), rhs = a.zero();
    std::vector<std::uint32_t> touched;
    for (std::size_t jk = 0; jk < d * d; ++jk) {
      if (!triple_associates(a, i, jk / d, jk % d, lhs, rhs, touched)) {
        first_failure[i] = jk;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    if (first_failure[i] != kNone) return std::array<std::size_t, 3>{i, first_failure[i] / d, first_failure[i] % d};
  return std::nullopt;
}

AlgebraPtr Algebra::create(FieldPtr field, std::vector<std::string> labels, const std::vector<Vec>& products,
                           Vec unit) {
  const std::size_t d = unit.size();
  if (d == 0) raise(ErrorCode::ParseError, "algebra of dimension 0");
  if (d > max_algebra_dim())
    raise(ErrorCode::DimensionTooLarge,
          "dimension " + std::to_string(d) + " exceeds the cap " + std::to_string(max_algebra_dim()));
  if (products.size() != d * d) raise(ErrorCode::ParseError, "structure constant table has the wrong size");
  if (labels.empty())
    for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i));
  if (labels.size() != d) raise(ErrorCode::ParseError, "label count does not match the dimension");

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->field_ = std::move(field);
  alg->dim_ = d;
  alg->labels_ = std::move(labels);
  alg->table_.reserve(d * d);
  for (const auto& p : products) {
    if (p.size() != d) raise(ErrorCode::ParseError, "structure constant vector has the wrong length");
    for (const auto& s : p)
      if (!alg->field_->is_canonical(s)) raise(ErrorCode::FieldMismatch, "structure constant outside the field");
    alg->table_.push_back(to_sparse(*alg->field_, p));
  }
  for (const auto& s : unit)
    if (!alg->field_->is_canonical(s)) raise(ErrorCode::FieldMismatch, "unit coefficient outside the field");
  alg->unit_ = std::move(unit);

  for (std::size_t i = 0; i < d; ++i) {
    const Vec b = alg->basis_vector(i);
    if (alg->multiply(alg->unit_, b) != b || alg->multiply(b, alg->unit_) != b)
      raise(ErrorCode::NotAssociative, "unit is not a two-sided identity on " + alg->labels_[i]);
  }
  if (auto bad = find_associativity_failure(*alg))
    raise(ErrorCode::NotAssociative, "(" + alg->labels_[(*bad)[0]] + " " + alg->labels_[(*bad)[1]] + ") " +
                                         alg->labels_[(*bad)[2]] + " differs from the other bracketing");
  return alg;
}

Vec Algebra::product_dense(std::size_t i, std::size_t j) const {
  Vec v = zero();
  for (const auto& [t, c] : product(i, j)) v[t] = c;
  return v;
}

Vec Algebra::basis_vector(std::size_t i) const {
  Vec v = zero();
  v.at(i) = field_->one();
  return v;
}

Vec Algebra::scalar(const Scalar& c) const { return scale_vec(*field_, unit_, c); }

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) raise(ErrorCode::ParseError, "element length does not match the algebra");
  Vec out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_->is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_->is_zero(b[j])) continue;
      const Scalar c = field_->mul(a[i], b[j]);
      for (const auto& [t, v] : product(i, j)) field_->add_mul(out[t], c, v);
    }
  }
  return out;
}

Vec Algebra::power(const Vec& a, std::uint64_t n) const {
  Vec result = unit_;
  Vec base = a;
  while (n > 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

Matrix Algebra::left_mult_matrix(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(a, basis_vector(j)));
  return m;
}

Matrix Algebra::right_mult_matrix(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(basis_vector(j), a));
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (product_dense(i, j) != product_dense(j, i)) return false;
  return true;
}

std::optional<std::size_t> Algebra::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::string Algebra::format(const Vec& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (field_->is_zero(v[i])) continue;
    if (!out.empty()) out += " + ";
    out += field_->format(v[i]) + "*" + labels_[i];
  }
  return out.empty() ? "0" : out;
}

bool Algebra::operator==(const Algebra& o) const {
  if (!field_->same_as(*o.field_) || dim_ != o.dim_ || unit_ != o.unit_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (product_dense(i, j) != o.product_dense(i, j)) return false;
  return true;
}

AlgElement::AlgElement(AlgebraPtr algebra, Vec coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->dim()) raise(ErrorCode::ParseError, "element length does not match the algebra");
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
  return {algebra_, add_vec(*algebra_->field(), coeffs_, o.coeffs_)};
}

AlgElement AlgElement::operator*(const AlgElement& o) const { return {algebra_, algebra_->multiply(coeffs_, o.coeffs_)}; }

std::optional<Vec> try_invert(const Algebra& a, const Vec& s) {
  const Matrix L = a.left_mult_matrix(s);
  auto x = solve(L, Matrix::from_columns(a.field(), a.dim(), {a.unit()}));
  if (!x) return std::nullopt;
  Vec inv = x->column(0);
  if (a.multiply(inv, s) != a.unit()) return std::nullopt;
  return inv;
}

Vec invert(const Algebra& a, const Vec& s) {
  auto inv = try_invert(a, s);
  if (!inv) raise(ErrorCode::NotAUnit, a.format(s) + " is not a unit");
  return *inv;
}

// Constructors ---------------------------------------------------------------

namespace {

struct TableBuilder {
  const Field& F;
  std::size_t d;
  std::vector<Vec> products;

  TableBuilder(const Field& field, std::size_t dim) : F(field), d(dim), products(dim * dim, zero_vec(field, dim)) {}
  void set(std::size_t i, std::size_t j, std::size_t t, const Scalar& c) { products[i * d + j][t] = c; }
  void add(std::size_t i, std::size_t j, std::size_t t, const Scalar& c) {
    products[i * d + j][t] = F.add(products[i * d + j][t], c);
  }
};

Vec unit_vector(const Field& F, std::size_t d, std::size_t i) {
  Vec v = zero_vec(F, d);
  v[i] = F.one();
  return v;
}

}  // namespace

AlgebraPtr field_algebra(FieldPtr field) {
  std::vector<Vec> products{{field->one()}};
  Vec unit{field->one()};
  return Algebra::create(field, {"1"}, products, unit);
}

AlgebraPtr quaternion_algebra(FieldPtr field, const Scalar& a, const Scalar& b) {
  const auto& F = *field;
  if (F.characteristic() == 2) raise(ErrorCode::CharTwo, "quaternion relations need characteristic != 2");
  if (F.is_zero(a) || F.is_zero(b)) raise(ErrorCode::ZeroParameter, "quaternion parameters must be nonzero");
  enum { E = 0, I = 1, J = 2, K = 3 };
  TableBuilder t(F, 4);
  const Scalar one = F.one(), m1 = F.neg(one), ab = F.mul(a, b);
  for (int x = 0; x < 4; ++x) {
    t.set(E, x, x, one);
    t.set(x, E, x, one);
  }
  t.set(I, I, E, a);
  t.set(J, J, E, b);
  t.set(K, K, E, F.neg(ab));
  t.set(I, J, K, one);
  t.set(J, I, K, m1);
  t.set(I, K, J, a);
  t.set(K, I, J, F.neg(a));
  t.set(J, K, I, F.neg(b));
  t.set(K, J, I, b);
  return Algebra::create(field, {"1", "i", "j", "k"}, t.products, unit_vector(F, 4, 0));
}

AlgebraPtr char2_quaternion(FieldPtr field, const Scalar& a, const Scalar& b) {
  const auto& F = *field;
  if (F.characteristic() != 2) raise(ErrorCode::CharNotTwo, "this presentation needs characteristic 2");
  enum { E = 0, U = 1, V = 2, W = 3 };
  TableBuilder t(F, 4);
  const Scalar one = F.one(), ab = F.mul(a, b);
  for (int x = 0; x < 4; ++x) {
    t.set(E, x, x, one);
    t.set(x, E, x, one);
  }
  t.set(U, U, U, one);
  t.set(U, U, E, a);
  t.set(V, V, E, b);
  t.set(U, V, W, one);
  t.set(V, U, W, one);
  t.set(V, U, V, one);
  t.set(U, W, W, one);
  t.set(U, W, V, a);
  t.set(W, U, V, a);
  t.set(V, W, U, b);
  t.set(V, W, E, b);
  t.set(W, V, U, b);
  t.set(W, W, E, ab);
  return Algebra::create(field, {"1", "e1", "e2", "e1e2"}, t.products, unit_vector(F, 4, 0));
}

AlgebraPtr symbol_algebra(FieldPtr field, const Scalar& a, const Scalar& b, const Scalar& zeta, int n) {
  const auto& F = *field;
  if (n < 2) raise(ErrorCode::BadRootOrder, "symbol algebras need n >= 2");
  if (F.is_zero(a) || F.is_zero(b)) raise(ErrorCode::ZeroParameter, "symbol parameters must be nonzero");
  if (auto ord = multiplicative_order(F, zeta, n); !ord || *ord != n)
    raise(ErrorCode::BadRootOrder, F.format(zeta) + " does not have exact order " + std::to_string(n));
  const auto N = static_cast<std::size_t>(n);
  const std::size_t d = N * N;
  std::vector<Scalar> zeta_pow(N);
  zeta_pow[0] = F.one();
  for (std::size_t e = 1; e < N; ++e) zeta_pow[e] = F.mul(zeta_pow[e - 1], zeta);

  TableBuilder t(F, d);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t s = 0; s < N; ++s) {
      std::string label;
      if (r > 0) label += r == 1 ? "x" : "x^" + std::to_string(r);
      if (s > 0) label += std::string(label.empty() ? "" : " ") + (s == 1 ? "u" : "u^" + std::to_string(s));
      labels.push_back(label.empty() ? "1" : label);
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l) {
          Scalar c = zeta_pow[(k * s) % N];
          std::size_t x_exp = r + k, u_exp = s + l;
          if (x_exp >= N) {
            x_exp -= N;
            c = F.mul(c, a);
          }
          if (u_exp >= N) {
            u_exp -= N;
            c = F.mul(c, b);
          }
          t.set(r * N + s, k * N + l, x_exp * N + u_exp, c);
        }
    }
  return Algebra::create(field, labels, t.products, unit_vector(F, d, 0));
}

AlgebraPtr matrix_algebra(FieldPtr field, int n) {
  const auto& F = *field;
  if (n < 1) raise(ErrorCode::ParseError, "matrix size must be >= 1");
  const auto N = static_cast<std::size_t>(n);
  TableBuilder t(F, N * N);
  std::vector<std::string> labels;
  Vec unit = zero_vec(F, N * N);
  for (std::size_t i = 0; i < N; ++i) {
    unit[i * N + i] = F.one();
    for (std::size_t j = 0; j < N; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + (N > 9 ? "_" : "") + std::to_string(j + 1));
      for (std::size_t l = 0; l < N; ++l) t.set(i * N + j, j * N + l, i * N + l, F.one());
    }
  }
  return Algebra::create(field, labels, t.products, unit);
}

AlgebraPtr function_algebra(const AlgebraPtr& s, const GroupSpec& group) {
  const auto& F = *s->field();
  const std::size_t ds = s->dim(), order = group.order();
  const std::size_t d = ds * order;
  if (d > max_algebra_dim())
    raise(ErrorCode::DimensionTooLarge, "function algebra dimension " + std::to_string(d) + " exceeds the cap");
  TableBuilder t(F, d);
  std::vector<std::string> labels;
  Vec unit = zero_vec(F, d);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t i = 0; i < ds; ++i) {
      const std::string delta = "δ" + group.element_label(g);
      labels.push_back(s->labels()[i] == "1" ? delta : s->labels()[i] + "·" + delta);
      unit[g * ds + i] = s->unit()[i];
      for (std::size_t j = 0; j < ds; ++j)
        for (const auto& [m, c] : s->product(i, j)) t.set(g * ds + i, g * ds + j, g * ds + m, c);
    }
  return Algebra::create(s->field(), labels, t.products, unit);
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a->field()->same_as(*b->field())) raise(ErrorCode::FieldMismatch, "tensor factors over different fields");
  const auto& F = *a->field();
  const std::size_t da = a->dim(), db = b->dim(), d = da * db;
  if (d > max_algebra_dim())
    raise(ErrorCode::DimensionTooLarge, "tensor dimension " + std::to_string(d) + " exceeds the cap");
  TableBuilder t(F, d);
  std::vector<std::string> labels;
  Vec unit = zero_vec(F, d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      labels.push_back(a->labels()[i] + "⊗" + b->labels()[j]);
      unit[i * db + j] = F.mul(a->unit()[i], b->unit()[j]);
    }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l)
          for (const auto& [m, c] : a->product(i, k))
            for (const auto& [n, e] : b->product(j, l)) t.add(i * db + j, k * db + l, m * db + n, F.mul(c, e));
  return Algebra::create(a->field(), labels, t.products, unit);
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  std::vector<Vec> products;
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) products.push_back(a->product_dense(j, i));
  std::vector<std::string> labels;
  for (const auto& l : a->labels()) {
    if (l.size() > 2 && l.compare(l.size() - 2, 2, "^o") == 0) labels.push_back(l.substr(0, l.size() - 2));
    else labels.push_back(l + "^o");
  }
  return Algebra::create(a->field(), labels, products, a->unit());
}

AlgebraPtr quotient_algebra(FieldPtr field, const Vec& monic) {
  const auto& F = *field;
  if (monic.size() < 2 || !F.is_one(monic.back())) raise(ErrorCode::ParseError, "quotient modulus must be monic of degree >= 1");
  const std::size_t d = monic.size() - 1;
  // x^e reduced mod f for e < 2d - 1
  std::vector<Vec> powers;
  Vec cur = zero_vec(F, d);
  cur[0] = F.one();
  for (std::size_t e = 0; e + 1 < 2 * d; ++e) {
    powers.push_back(cur);
    Vec next = zero_vec(F, d);
    for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
    const Scalar top = cur[d - 1];
    for (std::size_t i = 0; i < d; ++i) next[i] = F.sub(next[i], F.mul(top, monic[i]));
    cur = std::move(next);
  }
  TableBuilder t(F, d);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (std::size_t j = 0; j < d; ++j) t.products[i * d + j] = powers[i + j];
  }
  return Algebra::create(field, labels, t.products, unit_vector(F, d, 0));
}

// Subalgebras -----------------------------------------------------------------

SubalgebraBasis::SubalgebraBasis(AlgebraPtr algebra, const std::vector<Vec>& spanning) : algebra_(std::move(algebra)) {
  const auto& F = *algebra_->field();
  const std::size_t d = algebra_->dim();
  if (!spanning.empty()) {
    auto [r, pivots] = rref(Matrix::from_rows(algebra_->field(), d, spanning));
    for (std::size_t k = 0; k < pivots.size(); ++k) vectors_.push_back(r.row(k));
  }
  basis_ = Matrix::from_columns(algebra_->field(), d, vectors_);
  if (!contains(algebra_->unit())) raise(ErrorCode::NotAssociative, "subalgebra does not contain the unit");
  for (const auto& x : vectors_)
    for (const auto& y : vectors_)
      if (!contains(algebra_->multiply(x, y)))
        raise(ErrorCode::NotAssociative, "span is not closed under multiplication");
  (void)F;
}

std::optional<Vec> SubalgebraBasis::coordinates(const Vec& v) const {
  if (vectors_.empty()) {
    if (is_zero_vec(*algebra_->field(), v)) return Vec{};
    return std::nullopt;
  }
  auto x = solve(basis_, Matrix::from_columns(algebra_->field(), algebra_->dim(), {v}));
  if (!x) return std::nullopt;
  return x->column(0);
}

bool SubalgebraBasis::same_span(const SubalgebraBasis& o) const {
  if (dim() != o.dim()) return false;
  return std::all_of(o.vectors_.begin(), o.vectors_.end(), [&](const Vec& v) { return contains(v); });
}

bool SubalgebraBasis::is_commutative() const {
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    for (std::size_t j = i + 1; j < vectors_.size(); ++j)
      if (algebra_->multiply(vectors_[i], vectors_[j]) != algebra_->multiply(vectors_[j], vectors_[i])) return false;
  return true;
}

AlgebraPtr subalgebra_as_algebra(const SubalgebraBasis& sub, std::vector<std::string> labels) {
  const auto& A = *sub.algebra();
  std::vector<Vec> products;
  for (const auto& x : sub.vectors())
    for (const auto& y : sub.vectors()) products.push_back(*sub.coordinates(A.multiply(x, y)));
  if (labels.empty())
    for (const auto& v : sub.vectors()) labels.push_back(A.format(v));
  return Algebra::create(A.field(), std::move(labels), products, *sub.coordinates(A.unit()));
}

SubalgebraBasis centralizer(const AlgebraPtr& a, const std::vector<Vec>& elements) {
  const std::size_t d = a->dim();
  Matrix stacked(a->field(), d * elements.size(), d);
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const Matrix diff = a->right_mult_matrix(elements[e]) - a->left_mult_matrix(elements[e]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked.at(e * d + i, j) = diff.at(i, j);
  }
  if (elements.empty()) stacked = Matrix(a->field(), 0, d);
  const Matrix kernel = nullspace(stacked);
  std::vector<Vec> vectors;
  for (std::size_t j = 0; j < kernel.cols(); ++j) vectors.push_back(kernel.column(j));
  return SubalgebraBasis(a, vectors);
}

SubalgebraBasis centre(const AlgebraPtr& a) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < a->dim(); ++i) basis.push_back(a->basis_vector(i));
  return centralizer(a, basis);
}

AzumayaReport is_azumaya_over_field(const AlgebraPtr& a) {
  AzumayaReport report;
  report.centre_dim = centre(a).dim();
  const std::size_t d = a->dim();
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < d; ++i) {
    left.push_back(a->left_mult_matrix(a->basis_vector(i)));
    right.push_back(a->right_mult_matrix(a->basis_vector(i)));
  }
  Matrix sandwich(a->field(), d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix op = matmul(left[i], right[j]);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) sandwich.at(r * d + c, i * d + j) = op.at(r, c);
    }
  report.sandwich_rank = rank(sandwich);
  report.azumaya = report.centre_dim == 1 && report.sandwich_rank == d * d;
  return report;
}

Char2SkewFieldReport char2_skewfield_test(FieldPtr field, const Scalar& a, const Scalar& b) {
  const auto& F = *field;
  if (!F.is_finite()) raise(ErrorCode::InfiniteField, "the quartic-form sweep needs a finite field");
  if (F.characteristic() != 2) raise(ErrorCode::CharNotTwo, "the quartic form belongs to characteristic 2");
  const std::uint64_t q = F.enumerable_size(64);
  std::vector<Scalar> elems;
  for (std::uint64_t i = 0; i < q; ++i) elems.push_back(F.element_at(i));
  Char2SkewFieldReport report;
  report.form_anisotropic = true;
  for (std::uint64_t t = 1; t < q * q * q * q; ++t) {
    const Scalar& x0 = elems[t / (q * q * q)];
    const Scalar& x1 = elems[(t / (q * q)) % q];
    const Scalar& x2 = elems[(t / q) % q];
    const Scalar& x3 = elems[t % q];
    Scalar first = F.add(F.add(F.mul(x0, x0), F.mul(x0, x1)), F.mul(a, F.mul(x1, x1)));
    Scalar second = F.add(F.add(F.mul(x2, x2), F.mul(x1, x2)), F.mul(a, F.mul(x3, x3)));
    ++report.tuples_checked;
    if (F.is_zero(F.add(first, F.mul(b, second)))) {
      report.form_anisotropic = false;
      report.form_zero = std::array<Scalar, 4>{x0, x1, x2, x3};
      break;
    }
  }
  if (q > 16) return report;
  const auto h = char2_quaternion(field, a, b);
  bool units = true;
  for (std::uint64_t t = 1; t < q * q * q * q && units; ++t) {
    Vec v{elems[t / (q * q * q)], elems[(t / (q * q)) % q], elems[(t / q) % q], elems[t % q]};
    if (F.is_zero(determinant(h->left_mult_matrix(v)))) units = false;
  }
  report.all_nonzero_units = units;
  return report;
}

}  // namespace galoisazu
