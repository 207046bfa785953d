#include "galoisazu/group.hpp"

#include <numeric>

#include "galoisazu/error.hpp"

namespace galoisazu {

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int n : factors_) {
    if (n < 1) raise(ErrorCode::ParseError, "cyclic factor orders must be >= 1");
    order_ *= static_cast<std::size_t>(n);
    if (order_ > 4096) raise(ErrorCode::DimensionTooLarge, "group order exceeds 4096");
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string s(text);
  if (s == "1" || s.empty()) return GroupSpec();
  std::vector<int> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto end = s.find('x', pos);
    if (end == std::string::npos) end = s.size();
    auto part = s.substr(pos, end - pos);
    if (part.size() < 2 || part[0] != 'Z' || part.find_first_not_of("0123456789", 1) != std::string::npos ||
        part.size() > 6)
      raise(ErrorCode::ParseError, "bad group factor '" + part + "' in '" + s + "'");
    factors.push_back(std::stoi(part.substr(1)));
    pos = end + 1;
    if (end + 1 == s.size()) raise(ErrorCode::ParseError, "trailing 'x' in group '" + s + "'");
  }
  return GroupSpec(std::move(factors));
}

GroupSpec::Element GroupSpec::element(std::size_t index) const {
  if (index >= order_) raise(ErrorCode::ParseError, "group element index out of range");
  Element g(factors_.size(), 0);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g[i] = static_cast<int>(index % static_cast<std::size_t>(factors_[i]));
    index /= static_cast<std::size_t>(factors_[i]);
  }
  return g;
}

std::size_t GroupSpec::index(const Element& g) const {
  if (g.size() != factors_.size()) raise(ErrorCode::ParseError, "group element has the wrong arity");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int c = g[i] % factors_[i];
    if (c < 0) c += factors_[i];
    idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(c);
  }
  return idx;
}

GroupSpec::Element GroupSpec::reduce(Element g) const {
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] %= factors_[i];
    if (g[i] < 0) g[i] += factors_[i];
  }
  return g;
}

GroupSpec::Element GroupSpec::add(const Element& g, const Element& h) const {
  Element out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] + h[i];
  return reduce(std::move(out));
}

GroupSpec::Element GroupSpec::neg(const Element& g) const {
  Element out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = -g[i];
  return reduce(std::move(out));
}

GroupSpec::Element GroupSpec::generator(std::size_t i) const {
  Element g = identity();
  g.at(i) = factors_[i] > 1 ? 1 : 0;
  return g;
}

int GroupSpec::element_order(const Element& g) const {
  int order = 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    int c = ((g[i] % factors_[i]) + factors_[i]) % factors_[i];
    order = std::lcm(order, factors_[i] / std::gcd(c, factors_[i]));
  }
  return order;
}

GroupSpec GroupSpec::product(const GroupSpec& other) const {
  auto f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return GroupSpec(std::move(f));
}

std::string GroupSpec::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? "xZ" : "Z") + std::to_string(factors_[i]);
  return out;
}

std::string GroupSpec::element_label(std::size_t index) const {
  auto g = element(index);
  if (g.empty()) return "e";
  if (g.size() == 1) return std::to_string(g[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out + ")";
}

}  // namespace galoisazu
