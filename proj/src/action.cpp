#include "galoisazu/action.hpp"

#include <algorithm>
#include <set>

namespace galoisazu {

bool is_multiplicative(const Algebra& source, const Algebra& target, const Matrix& phi) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(phi.column(i));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j)
      if (phi.apply(source.product_dense(i, j)) != target.multiply(images[i], images[j])) return false;
  return true;
}

bool is_unital(const Algebra& source, const Algebra& target, const Matrix& phi) {
  return phi.apply(source.unit()) == target.unit();
}

AlgebraAction AlgebraAction::make(GroupSpec group, AlgebraPtr algebra, std::vector<Matrix> generators) {
  if (generators.size() != group.rank())
    raise(ErrorCode::ParseError, "expected " + std::to_string(group.rank()) + " generator matrices, got " +
                                     std::to_string(generators.size()));
  const std::size_t d = algebra->dim();
  const auto& field = algebra->field();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& m = generators[g];
    if (m.rows() != d || m.cols() != d) raise(ErrorCode::NotAutomorphism, "generator matrix has the wrong shape");
    if (!m.field()->same_as(*field)) raise(ErrorCode::FieldMismatch, "generator matrix over a different field");
    if (!is_unital(*algebra, *algebra, m) || !is_multiplicative(*algebra, *algebra, m))
      raise(ErrorCode::NotAutomorphism, "generator " + std::to_string(g) + " is not a unital algebra morphism");
    if (!inverse(m)) raise(ErrorCode::NotAutomorphism, "generator " + std::to_string(g) + " is singular");
    Matrix power = Matrix::identity(field, d);
    for (int e = 0; e < group.factors()[g]; ++e) power = matmul(power, m);
    if (!power.is_identity())
      raise(ErrorCode::WrongOrder, "generator " + std::to_string(g) + " does not have order dividing " +
                                       std::to_string(group.factors()[g]));
  }
  for (std::size_t g = 0; g < generators.size(); ++g)
    for (std::size_t h = g + 1; h < generators.size(); ++h)
      if (matmul(generators[g], generators[h]) != matmul(generators[h], generators[g]))
        raise(ErrorCode::NonCommuting, "generators " + std::to_string(g) + " and " + std::to_string(h) + " do not commute");

  std::vector<std::vector<Matrix>> powers(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    powers[g].push_back(Matrix::identity(field, d));
    for (int e = 1; e < group.factors()[g]; ++e) powers[g].push_back(matmul(powers[g].back(), generators[g]));
  }
  AlgebraAction action;
  action.elements_.reserve(group.order());
  for (std::size_t idx = 0; idx < group.order(); ++idx) {
    const auto tuple = group.element(idx);
    Matrix m = Matrix::identity(field, d);
    for (std::size_t g = 0; g < tuple.size(); ++g)
      if (tuple[g] != 0) m = matmul(m, powers[g][static_cast<std::size_t>(tuple[g])]);
    action.elements_.push_back(std::move(m));
  }
  action.group_ = std::move(group);
  action.algebra_ = std::move(algebra);
  action.generators_ = std::move(generators);
  return action;
}

SubalgebraBasis invariants(const AlgebraAction& action) {
  const auto& A = action.algebra();
  const std::size_t d = A->dim();
  const auto& gens = action.generators();
  Matrix stacked(A->field(), d * gens.size(), d);
  const Matrix id = Matrix::identity(A->field(), d);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Matrix diff = gens[g] - id;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked.at(g * d + i, j) = diff.at(i, j);
  }
  const Matrix kernel = nullspace(stacked);
  std::vector<Vec> vectors;
  for (std::size_t j = 0; j < kernel.cols(); ++j) vectors.push_back(kernel.column(j));
  return SubalgebraBasis(A, vectors);
}

AlgebraAction opposite_action(const AlgebraAction& action, const AlgebraPtr& opposite_algebra) {
  return AlgebraAction::make(action.group(), opposite_algebra, action.generators());
}

std::vector<std::size_t> subgroup_closure(const GroupSpec& group, const std::vector<GroupSpec::Element>& generators) {
  std::set<std::size_t> seen{group.index(group.identity())};
  std::vector<GroupSpec::Element> frontier{group.identity()};
  while (!frontier.empty()) {
    std::vector<GroupSpec::Element> next;
    for (const auto& g : frontier)
      for (const auto& s : generators) {
        auto h = group.add(g, group.reduce(s));
        if (seen.insert(group.index(h)).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

AlgebraAction restrict_action(const AlgebraAction& action, const std::vector<GroupSpec::Element>& generators) {
  const auto& G = action.group();
  std::vector<int> orders;
  std::vector<Matrix> mats;
  std::size_t product = 1;
  for (const auto& g : generators) {
    if (g.size() != G.rank()) raise(ErrorCode::ParseError, "subgroup generator has the wrong arity");
    const int ord = G.element_order(g);
    if (ord == 1) continue;
    orders.push_back(ord);
    product *= static_cast<std::size_t>(ord);
    mats.push_back(action.element_matrix(G.index(G.reduce(g))));
  }
  const auto closure = subgroup_closure(G, generators);
  if (closure.size() != product)
    raise(ErrorCode::UnsupportedSubgroup, "subgroup generators are not independent (closure order " +
                                              std::to_string(closure.size()) + ", product of orders " +
                                              std::to_string(product) + ")");
  return AlgebraAction::make(GroupSpec(orders), action.algebra(), mats);
}

// Standard actions --------------------------------------------------------------

namespace {

Matrix diagonal(const FieldPtr& field, const std::vector<Scalar>& entries) {
  Matrix m(field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

}  // namespace

AlgebraAction quaternion_v_action(const AlgebraPtr& quaternion) {
  const auto& F = *quaternion->field();
  const Scalar one = F.one(), m1 = F.neg(one);
  Matrix alpha = diagonal(quaternion->field(), {one, one, m1, m1});
  Matrix beta = diagonal(quaternion->field(), {one, m1, one, m1});
  return AlgebraAction::make(GroupSpec({2, 2}), quaternion, {alpha, beta});
}

AlgebraAction symbol_action(const AlgebraPtr& symbol, const Scalar& zeta, int n) {
  const auto& F = *symbol->field();
  const auto N = static_cast<std::size_t>(n);
  std::vector<Scalar> zeta_pow{F.one()};
  for (std::size_t e = 1; e < N; ++e) zeta_pow.push_back(F.mul(zeta_pow.back(), zeta));
  std::vector<Scalar> alpha, beta;
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t l = 0; l < N; ++l) {
      alpha.push_back(zeta_pow[l]);
      beta.push_back(zeta_pow[k]);
    }
  return AlgebraAction::make(GroupSpec({n, n}), symbol,
                             {diagonal(symbol->field(), alpha), diagonal(symbol->field(), beta)});
}

AlgebraAction translation_action(const AlgebraPtr& function_alg, const GroupSpec& group) {
  const std::size_t order = group.order();
  if (function_alg->dim() % order != 0) raise(ErrorCode::ParseError, "algebra is not a function algebra on this group");
  const std::size_t ds = function_alg->dim() / order;
  std::vector<Matrix> gens;
  for (std::size_t f = 0; f < group.rank(); ++f) {
    Matrix m(function_alg->field(), function_alg->dim(), function_alg->dim());
    const auto gen = group.generator(f);
    for (std::size_t h = 0; h < order; ++h) {
      const std::size_t target = group.index(group.add(group.element(h), group.neg(gen)));
      for (std::size_t i = 0; i < ds; ++i) m.at(target * ds + i, h * ds + i) = function_alg->field()->one();
    }
    gens.push_back(std::move(m));
  }
  return AlgebraAction::make(group, function_alg, gens);
}

AlgebraAction substitution_action(const AlgebraPtr& quotient, const Vec& image_of_x, int order) {
  Matrix m(quotient->field(), quotient->dim(), quotient->dim());
  Vec power = quotient->unit();
  for (std::size_t k = 0; k < quotient->dim(); ++k) {
    m.set_column(k, power);
    power = quotient->multiply(power, image_of_x);
  }
  return AlgebraAction::make(GroupSpec({order}), quotient, {m});
}

AlgebraAction matrix_action(const AlgebraPtr& matrices, const Scalar& zeta, int n) {
  const auto& F = *matrices->field();
  const auto N = static_cast<std::size_t>(n);
  if (matrices->dim() != N * N) raise(ErrorCode::ParseError, "algebra is not M_n");
  if (auto ord = multiplicative_order(F, zeta, n); !ord || *ord != n)
    raise(ErrorCode::BadRootOrder, F.format(zeta) + " does not have exact order " + std::to_string(n));
  std::vector<Scalar> zeta_pow{F.one()};
  for (std::size_t e = 1; e < N; ++e) zeta_pow.push_back(F.mul(zeta_pow.back(), zeta));
  // conjugation by D = diag(zeta^i): E_ij -> zeta^(i-j) E_ij
  std::vector<Scalar> alpha;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) alpha.push_back(zeta_pow[(i + N - j) % N]);
  // conjugation by the cyclic shift P e_i = e_(i+1): E_ij -> E_(i+1)(j+1)
  Matrix beta(matrices->field(), N * N, N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) beta.at(((i + 1) % N) * N + (j + 1) % N, i * N + j) = F.one();
  return AlgebraAction::make(GroupSpec({n, n}), matrices, {diagonal(matrices->field(), alpha), beta});
}

AlgebraAction tensor_action(const AlgebraAction& a, const AlgebraAction& b, const AlgebraPtr& product) {
  const auto& field = product->field();
  const Matrix ia = Matrix::identity(field, a.algebra()->dim());
  const Matrix ib = Matrix::identity(field, b.algebra()->dim());
  std::vector<Matrix> gens;
  for (const auto& m : a.generators()) gens.push_back(kron(m, ib));
  for (const auto& m : b.generators()) gens.push_back(kron(ia, m));
  return AlgebraAction::make(a.group().product(b.group()), product, gens);
}

}  // namespace galoisazu
