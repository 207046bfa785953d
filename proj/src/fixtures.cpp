#include "galoisazu/fixtures.hpp"

namespace galoisazu {

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"hamilton", "symbol-7-3", "trivial-5-6", "char2", "tensor-square"};
  return names;
}

Fixture fixture(std::string_view name) {
  if (name == "hamilton") {
    auto Q = Field::rationals();
    auto H = quaternion_algebra(Q, Q->from_int(-1), Q->from_int(-1));
    return {"hamilton", "(-1, -1 / Q) with the Klein four-group action", H, quaternion_v_action(H)};
  }
  if (name == "symbol-7-3") {
    auto F = Field::prime(7);
    const Scalar zeta = F->from_int(2);
    auto S = symbol_algebra(F, F->from_int(3), F->from_int(5), zeta, 3);
    return {"symbol-7-3", "(3, 5, 2)_F7 with n = 3 and the (Z/3)^2 action", S, symbol_action(S, zeta, 3)};
  }
  if (name == "trivial-5-6") {
    auto F = Field::prime(5);
    const GroupSpec G({2, 3});
    auto S = function_algebra(field_algebra(F), G);
    return {"trivial-5-6", "F5(Z/2 x Z/3) with the translation action", S, translation_action(S, G)};
  }
  if (name == "char2") {
    auto F = Field::prime(2);
    return {"char2", "characteristic-2 quaternions over F2 with a = b = 1", char2_quaternion(F, F->one(), F->one()),
            std::nullopt};
  }
  if (name == "tensor-square") {
    const Fixture h = fixture("hamilton");
    auto T = tensor_algebra(h.algebra, h.algebra);
    return {"tensor-square", "(-1, -1 / Q) (x) (-1, -1 / Q) with the (Z/2)^4 action", T,
            tensor_action(*h.action, *h.action, T)};
  }
  raise(ErrorCode::ParseError, "unknown fixture '" + std::string(name) + "'");
}

GaloisCertificate certify_fixture(const Fixture& f) {
  if (!f.action) raise(ErrorCode::Unsupported, "fixture '" + f.name + "' carries no Galois action");
  return certify_galois(Extension::ground(f.algebra), *f.action);
}

}  // namespace galoisazu
