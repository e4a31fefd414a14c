#include "qlogic/reference_cases.hpp"

#include <stdexcept>

namespace qlogic::reference {

std::array<SubsetMask, 4> mo4_generators() {
  return {mask_of({0, 1, 2}), mask_of({1, 2, 3}), mask_of({2, 3, 4}), mask_of({0, 2, 4})};
}

Family mo4_logic() {
  const auto g = mo4_generators();
  return concrete_closure(Universe(6), g);
}

StateTable mo4_two_valued_state() {
  const auto [a, b, c, d] = mo4_generators();
  return complete_state(mo4_logic(), PartialState{{{a, 0}, {b, 1}, {c, 0}, {d, 1}}});
}

StateTable negative_point_state(std::size_t k) {
  if (k < 2) throw std::domain_error("negative_point_state: k must be at least 2");
  const Family family = make_even_logic(2 * k);
  const Rational pair = rat(1, static_cast<long>(k - 1));
  std::vector<Rational> values;
  values.reserve(family.size());
  for (SubsetMask s : family.members()) {
    // Pairs avoiding point 0 carry 1/(k-1); the pair holding 0 carries 0.
    const std::size_t pairs = cardinality(s) / 2;
    const std::size_t weighted = (s & 1) ? pairs - 1 : pairs;
    values.push_back(pair * static_cast<long>(weighted));
  }
  return StateTable(family, std::move(values));
}

std::array<SubsetMask, 4> mo15_generators() {
  return {mask_of({0, 1, 4, 7}), mask_of({0, 2, 5, 8}), mask_of({0, 1, 2, 3}), mask_of({0, 4, 5, 6})};
}

Family mo15_logic() {
  const auto g = mo15_generators();
  return difference_closure(Universe(10), g);
}

StateTable mo15_conflicting_state() {
  const auto [a, b, c, d] = mo15_generators();
  return complete_state(mo15_logic(),
                        PartialState{{{a, 1}, {c, 1}, {a ^ b, 1}, {b, 0}, {d, 0}, {c ^ d, 0}}});
}

StateTable mo15_subadditive_state() {
  const auto g = mo15_generators();
  return complete_state(mo15_logic(), PartialState{{{g[0], rat(1, 3)}, {g[1], rat(1, 4)}, {g[2], rat(2, 5)}}});
}

}  // namespace qlogic::reference
