#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galoisazu/galois.hpp"

namespace galoisazu {

/// A bundled example: an algebra and, when it is a Galois extension of the
/// ground field, the group action to certify.
struct Fixture {
  std::string name;
  std::string summary;
  AlgebraPtr algebra;
  std::optional<AlgebraAction> action;
};

/// hamilton, symbol-7-3, trivial-5-6, char2, tensor-square.
const std::vector<std::string>& fixture_names();
/// Raises ParseError for an unknown name.
Fixture fixture(std::string_view name);
/// Raises Unsupported when the fixture carries no action.
GaloisCertificate certify_fixture(const Fixture& f);

}  // namespace galoisazu
