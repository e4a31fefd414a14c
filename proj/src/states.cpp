#include "qlogic/states.hpp"

#include "qlogic/qlf.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace qlogic {

std::string StateViolation::describe() const {
  switch (kind) {
    case Kind::empty_not_zero:
      return "value of {} is not 0";
    case Kind::full_not_one:
      return "value of " + format_set(first) + " (whole set) is not 1";
    case Kind::negative:
      return "value of " + format_set(first) + " is negative";
    case Kind::above_one:
      return "value of " + format_set(first) + " exceeds 1";
    case Kind::additivity:
      return "additivity fails for disjoint " + format_set(first) + " and " + format_set(second);
  }
  return "unknown violation";
}

StateReport validate_state(const Family& family, std::span<const Rational> values) {
  if (values.size() != family.size())
    throw std::invalid_argument("validate_state: " + std::to_string(values.size()) + " values for " +
                                std::to_string(family.size()) + " members");
  using Kind = StateViolation::Kind;
  const SubsetMask full = family.universe().full();
  const auto members = family.members();

  if (const auto e = family.index_of(0); e && sgn(values[*e]) != 0) return {StateViolation{Kind::empty_not_zero, 0}};
  if (const auto x = family.index_of(full); x && values[*x] != 1) return {StateViolation{Kind::full_not_one, full}};
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (sgn(values[i]) < 0) return {StateViolation{Kind::negative, members[i]}};
    if (values[i] > 1) return {StateViolation{Kind::above_one, members[i]}};
  }

  const MemberIndex index(family);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == 0) continue;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if ((members[i] & members[j]) != 0) continue;
      const auto u = index.find(members[i] | members[j]);
      if (u && values[*u] != values[i] + values[j])
        return {StateViolation{Kind::additivity, members[i], members[j]}};
    }
  }
  return {};
}

InvalidState::InvalidState(StateViolation v) : std::runtime_error("not a state: " + v.describe()), violation_(v) {}

StateTable::StateTable(Family family, std::vector<Rational> values)
    : family_(std::move(family)), values_(std::move(values)) {
  if (const auto report = validate_state(family_, values_); !report.valid()) throw InvalidState(*report.violation);
}

const Rational& StateTable::value(SubsetMask s) const {
  const auto i = family_.index_of(s);
  if (!i) throw std::out_of_range("state lookup: " + format_set(s) + " is not a member");
  return values_[*i];
}

StateTable complete_state(const Family& family, const PartialState& partial, const Rational& fill) {
  const Universe& u = family.universe();
  std::vector<std::optional<Rational>> slots(family.size());
  for (const auto& [mask, value] : partial.assignments) {
    const auto i = family.index_of(mask);
    if (!i) throw std::invalid_argument("complete_state: " + format_set(mask) + " is not a member");
    if (slots[*i]) throw std::invalid_argument("complete_state: " + format_set(mask) + " assigned twice");
    slots[*i] = value;
  }
  if (const auto e = family.index_of(0); e && !slots[*e]) slots[*e] = Rational(0);
  if (const auto x = family.index_of(u.full()); x && !slots[*x]) slots[*x] = Rational(1);

  for (std::size_t i = 0; i < family.size(); ++i) {
    if (slots[i]) continue;
    const auto c = family.index_of(u.complement(family[i]));
    if (c && slots[*c]) slots[i] = Rational(1 - *slots[*c]);
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (slots[i]) continue;
    slots[i] = fill;
    if (const auto c = family.index_of(u.complement(family[i])); c && !slots[*c]) slots[*c] = Rational(1 - fill);
  }

  std::vector<Rational> values;
  values.reserve(slots.size());
  for (auto& s : slots) values.push_back(std::move(*s));
  return StateTable(family, std::move(values));
}

Rational SignedPointMeasure::measure(SubsetMask s) const {
  Rational sum = 0;
  for (std::size_t p : points_of(s)) sum += masses.at(p);
  return sum;
}

Rational SignedPointMeasure::total() const {
  Rational sum = 0;
  for (const auto& m : masses) sum += m;
  return sum;
}

bool SignedPointMeasure::nonnegative() const {
  return std::all_of(masses.begin(), masses.end(), [](const Rational& m) { return sgn(m) >= 0; });
}

StateTable state_from_masses(const Family& family, const SignedPointMeasure& masses) {
  if (masses.masses.size() != family.universe().size())
    throw std::domain_error("state_from_masses: one mass per point required");
  if (masses.total() != 1) throw std::domain_error("state_from_masses: masses must sum to 1");
  std::vector<Rational> values;
  values.reserve(family.size());
  for (SubsetMask m : family.members()) {
    values.push_back(masses.measure(m));
    if (sgn(values.back()) < 0) throw InvalidState(StateViolation{StateViolation::Kind::negative, m});
  }
  return StateTable(family, std::move(values));
}

std::optional<ScaledValues> scale_to_common_denominator(std::span<const Rational> values) {
  static const mpz_class kLimit = mpz_class(1) << 58;
  ScaledValues out;
  out.denominator = 1;
  for (const auto& v : values) mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), v.get_den_mpz_t());
  out.numerators.reserve(values.size());
  for (const auto& v : values) {
    const mpz_class scaled = v.get_num() * (out.denominator / v.get_den());
    if (abs(scaled) >= kLimit) return std::nullopt;
    out.numerators.push_back(scaled.get_si());
  }
  return out;
}

SubadditivityResult is_subadditive(const StateTable& state) {
  const Family& family = state.family();
  if (!is_difference_closed(family)) throw std::domain_error("subadditivity needs a difference-closed family");

  const MemberIndex index(family);
  const auto members = family.members();
  const auto scaled = scale_to_common_denominator(state.values());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const std::size_t d = *index.find(members[i] ^ members[j]);
      const bool violated = scaled ? scaled->numerators[d] > scaled->numerators[i] + scaled->numerators[j]
                                   : state[d] > state[i] + state[j];
      if (violated) return {false, std::pair{members[i], members[j]}};
    }
  }
  return {};
}

bool is_two_valued(const StateTable& state) {
  return std::all_of(state.values().begin(), state.values().end(),
                     [](const Rational& v) { return sgn(v) == 0 || v == 1; });
}

std::optional<std::size_t> dirac_point(const StateTable& state) {
  const Family& family = state.family();
  for (std::size_t p = 0; p < family.universe().size(); ++p) {
    bool matches = true;
    for (std::size_t i = 0; i < family.size() && matches; ++i) {
      const bool inside = (family[i] >> p) & 1;
      matches = state[i] == (inside ? 1 : 0);
    }
    if (matches) return p;
  }
  return std::nullopt;
}

StateTable sample_state_even(std::size_t n, std::uint64_t seed, SampleMode mode) {
  if (n < 4 || n > 12 || n % 2 != 0)
    throw std::domain_error("sample_state_even: n must be even in [4, 12], got " + std::to_string(n));
  const Family family = make_even_logic(n);
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<long> weights(n);
    if (mode == SampleMode::nonneg) {
      std::uniform_int_distribution<long> draw(0, 20);
      for (auto& w : weights) w = draw(rng);
    } else {
      std::uniform_int_distribution<long> draw(1, 20);
      for (auto& w : weights) w = draw(rng);
      const std::size_t negative = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      long smallest = 20;
      for (std::size_t i = 0; i < n; ++i)
        if (i != negative) smallest = std::min(smallest, weights[i]);
      weights[negative] = -std::uniform_int_distribution<long>(1, smallest)(rng);
    }
    long total = 0;
    for (long w : weights) total += w;
    if (total <= 0) continue;

    SignedPointMeasure masses;
    for (long w : weights) masses.masses.push_back(rat(w, total));
    if (!masses_give_even_state(masses.masses)) continue;
    return state_from_masses(family, masses);
  }
  throw std::runtime_error("sample_state_even: no valid sample after 1000 attempts");
}

bool masses_give_even_state(std::span<const Rational> masses) {
  std::size_t negatives = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < masses.size(); ++i)
    if (sgn(masses[i]) < 0) {
      ++negatives;
      at = i;
    }
  if (negatives == 0) return true;
  if (negatives > 1) return false;
  for (std::size_t i = 0; i < masses.size(); ++i)
    if (i != at && masses[i] + masses[at] < 0) return false;
  return true;
}

}  // namespace qlogic
