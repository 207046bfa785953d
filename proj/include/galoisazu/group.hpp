#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace galoisazu {

/// Z/n_1 x ... x Z/n_k. Elements are tuples; the flat index is lexicographic
/// with the first factor most significant. No factors means the trivial group.
class GroupSpec {
 public:
  using Element = std::vector<int>;

  GroupSpec() = default;
  explicit GroupSpec(std::vector<int> factors);
  /// "Z2xZ2", "Z3", "1" (trivial).
  static GroupSpec parse(std::string_view text);

  const std::vector<int>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }

  Element identity() const { return Element(factors_.size(), 0); }
  Element element(std::size_t index) const;
  std::size_t index(const Element& g) const;
  Element add(const Element& g, const Element& h) const;
  Element neg(const Element& g) const;
  Element reduce(Element g) const;
  /// Standard generator of the i-th factor.
  Element generator(std::size_t i) const;
  int element_order(const Element& g) const;

  GroupSpec product(const GroupSpec& other) const;
  std::string to_string() const;
  std::string element_label(std::size_t index) const;
  bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

 private:
  std::vector<int> factors_;
  std::size_t order_ = 1;
};

}  // namespace galoisazu
