#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "galoisazu/galois.hpp"

namespace galoisazu {

using Json = nlohmann::json;

// Elements of Q and F_p are single strings ("p/q", "3"); elements of F_q and
// Q(zeta_n) are lists of coefficient strings in the power basis. Integers are
// accepted on input. Every reader raises ParseError naming the offending path.

Json element_to_json(const Field& field, const Scalar& a);
Scalar element_from_json(const Field& field, const Json& j, const std::string& path = "$");

Json vec_to_json(const Field& field, const Vec& v);
Vec vec_from_json(const Field& field, const Json& j, std::size_t length, const std::string& path = "$");

/// List of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& field, const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& path = "$");

/// {"field", "dim", "labels", "sc", "unit"}; sc[i][j] is the coefficient list of b_i b_j.
Json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const Json& j);

/// {"group", "generators"}; one matrix per group factor, acting on coefficient columns.
Json action_to_json(const AlgebraAction& action);
AlgebraAction action_from_json(const Json& j, const AlgebraPtr& algebra);

/// {"vectors"}: spanning columns in the basis of the ambient algebra.
Json subalgebra_to_json(const SubalgebraBasis& sub);
SubalgebraBasis subalgebra_from_json(const Json& j, const AlgebraPtr& algebra);

Json checks_to_json(const std::vector<Check>& checks);

/// Inputs, Gamma, the eta decomposition, the Galois basis and every check.
Json certificate_to_json(const GaloisCertificate& cert);
/// Re-certifies from "algebra", "action" and "base"; stored "gamma" and "eta",
/// when present, must equal the recomputed ones.
GaloisCertificate certificate_from_json(const Json& j);

/// Canonical text of a JSON value: two-space indent, sorted keys, trailing newline.
std::string dump_json(const Json& j);

}  // namespace galoisazu
