#pragma once

#include "qlogic/linalg.hpp"
#include "qlogic/rational.hpp"
#include "qlogic/setlogic.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlogic {

struct StateViolation {
  enum class Kind { empty_not_zero, full_not_one, negative, above_one, additivity };
  Kind kind;
  SubsetMask first;
  SubsetMask second = 0;  // only for additivity: the disjoint partner

  std::string describe() const;
};

struct StateReport {
  std::optional<StateViolation> violation;
  bool valid() const { return !violation; }
};

// Checks s(∅) = 0, s(X) = 1, 0 <= s <= 1 and additivity over every disjoint
// pair whose union is a member. Throws std::invalid_argument when `values`
// is not aligned with the family.
StateReport validate_state(const Family& family, std::span<const Rational> values);

// Thrown when a requested state is not a valid state on its family.
class InvalidState : public std::runtime_error {
 public:
  explicit InvalidState(StateViolation v);
  const StateViolation& violation() const { return violation_; }

 private:
  StateViolation violation_;
};

// A validated state: one value per member, aligned with canonical order.
class StateTable {
 public:
  // Throws InvalidState if the values do not form a state on the family.
  StateTable(Family family, std::vector<Rational> values);

  const Family& family() const { return family_; }
  std::span<const Rational> values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  // Throws std::out_of_range if s is not a member.
  const Rational& value(SubsetMask s) const;

  friend bool operator==(const StateTable&, const StateTable&) = default;

 private:
  Family family_;
  std::vector<Rational> values_;
};

struct PartialState {
  std::vector<std::pair<SubsetMask, Rational>> assignments;
};

// Fills a partial assignment: complements of assigned members get 1 - value,
// remaining complement pairs get (fill, 1 - fill), ∅ -> 0 and X -> 1.
// Throws std::invalid_argument for non-member or repeated masks and
// InvalidState if the completed table is not a state.
StateTable complete_state(const Family& family, const PartialState& partial, const Rational& fill = rat(1, 2));

// Point masses on the universe; a subset's measure is the sum of its masses.
struct SignedPointMeasure {
  std::vector<Rational> masses;

  Rational measure(SubsetMask s) const;
  Rational total() const;
  bool nonnegative() const;
  friend bool operator==(const SignedPointMeasure&, const SignedPointMeasure&) = default;
};

// Restricts a point measure to the family. Throws std::domain_error if the
// masses do not sum to one or the length differs from the universe size,
// and InvalidState naming the member if some induced value is negative.
StateTable state_from_masses(const Family& family, const SignedPointMeasure& masses);

struct SubadditivityResult {
  bool holds = true;
  std::optional<std::pair<SubsetMask, SubsetMask>> witness;  // s(AδB) > s(A) + s(B)
};

// s(AδB) <= s(A) + s(B) over all member pairs; the witness is the first
// violating pair in canonical order. Throws std::domain_error when the
// family is not closed under symmetric difference.
SubadditivityResult is_subadditive(const StateTable& state);

bool is_two_valued(const StateTable& state);
// The point p such that s(A) = [p ∈ A] for every member, if any.
std::optional<std::size_t> dirac_point(const StateTable& state);

enum class SampleMode { nonneg, one_negative };

// Seeded state on the even logic over n points, induced by integer masses.
// nonneg: masses in [0, 20]. one_negative: exactly one negative mass whose
// magnitude is at most the smallest of the others. Throws
// std::domain_error unless n is even and 4 <= n <= 12.
StateTable sample_state_even(std::size_t n, std::uint64_t seed, SampleMode mode);

// Closed form for states induced by point masses on even-cardinality sets:
// with total mass one, the induced function is nonnegative on every even
// set iff at most one mass is negative and its magnitude does not exceed
// the smallest remaining mass.
bool masses_give_even_state(std::span<const Rational> masses);

// Values over a common denominator as machine integers, for fast scans.
struct ScaledValues {
  mpz_class denominator;
  std::vector<std::int64_t> numerators;
};
// Nullopt when some scaled numerator does not fit comfortably in int64.
std::optional<ScaledValues> scale_to_common_denominator(std::span<const Rational> values);

}  // namespace qlogic
