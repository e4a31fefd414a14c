#include "qlogic/extend.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlogic {

IncidenceSystem incidence_system(const StateTable& state) {
  const Family& family = state.family();
  const std::size_t n = family.universe().size();
  IncidenceSystem sys{RatMatrix(family.size(), n), RatVector(state.values().begin(), state.values().end())};
  for (std::size_t r = 0; r < family.size(); ++r)
    for (std::size_t p : points_of(family[r])) sys.matrix(r, p) = 1;
  return sys;
}

bool is_even_logic(const Family& family) {
  const std::size_t n = family.universe().size();
  if (n % 2 != 0 || n > 62) return false;
  if (family.size() != (std::size_t{1} << (n - 1))) return false;
  return std::all_of(family.members().begin(), family.members().end(),
                     [](SubsetMask m) { return cardinality(m) % 2 == 0; });
}

Rational pair_combination(const StateTable& state, std::size_t x, std::size_t u, std::size_t v) {
  if (!is_even_logic(state.family())) throw std::domain_error("pair_combination: state is not on an even logic");
  const std::size_t n = state.family().universe().size();
  if (x >= n || u >= n || v >= n || x == u || x == v || u == v)
    throw std::domain_error("pair_combination: points must be distinct and inside the universe");
  return state.value(mask_of({x, u})) + state.value(mask_of({x, v})) - state.value(mask_of({u, v}));
}

SignedPointMeasure even_logic_masses(const StateTable& state) {
  if (!is_even_logic(state.family())) throw std::domain_error("even_logic_masses: state is not on an even logic");
  const std::size_t n = state.family().universe().size();
  SignedPointMeasure out;
  if (n == 2) {
    out.masses = {rat(1, 2), rat(1, 2)};
    return out;
  }
  out.masses.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t u = x == 0 ? 1 : 0;
    const std::size_t v = (x <= 1) ? 2 : 1;
    out.masses.push_back(pair_combination(state, x, u, v) / 2);
  }
  return out;
}

bool certificate_is_sound(const StateTable& state, const RatVector& certificate) {
  const auto sys = incidence_system(state);
  if (certificate.size() != sys.matrix.rows()) return false;
  return is_zero(left_multiply(certificate, sys.matrix)) && sgn(dot(certificate, sys.rhs)) != 0;
}

namespace {

// Rewrites λ using χ_Y = (χ_Y - χ_{Y^c}) / 2 + χ_X / 2, which holds pointwise
// and, because s(Y) + s(Y^c) = s(X), also under s. Members without a
// complement keep their coefficient; ∅ contributes nothing and is dropped.
RatVector balance_over_complements(const Family& family, const RatVector& lambda) {
  const Universe& u = family.universe();
  const auto full = family.index_of(u.full());
  if (!full) return lambda;
  RatVector out(lambda.size());
  out[*full] += lambda[*full];
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i == *full || family[i] == 0 || sgn(lambda[i]) == 0) continue;
    const auto c = family.index_of(u.complement(family[i]));
    if (!c) {
      out[i] += lambda[i];
      continue;
    }
    const Rational half = lambda[i] / 2;
    out[i] += half;
    out[*c] -= half;
    out[*full] += half;
  }
  return out;
}

}  // namespace

ExtensionOutcome solve_signed_extension(const StateTable& state) {
  const auto sys = incidence_system(state);
  const auto outcome = solve_affine(sys.matrix, sys.rhs);
  if (const auto* bad = std::get_if<AffineInconsistent>(&outcome)) {
    auto balanced = normalize_integer_vector(balance_over_complements(state.family(), bad->certificate));
    if (!certificate_is_sound(state, balanced)) balanced = bad->certificate;
    return ExtensionInfeasible{std::move(balanced)};
  }
  const auto& sol = std::get<AffineSolution>(outcome);
  return ExtensionFeasible{SignedPointMeasure{sol.particular}, sol.rank == state.family().universe().size()};
}

ExtensionOutcome solve_state_extension(const StateTable& state) {
  // A failing signed problem settles the question and supplies a certificate.
  auto signed_outcome = solve_signed_extension(state);
  if (!feasible(signed_outcome)) return signed_outcome;
  const bool unique = std::get<ExtensionFeasible>(signed_outcome).unique;

  const auto sys = incidence_system(state);
  auto result = nonneg_feasible(sys.matrix, sys.rhs);
  if (!result.witness) return ExtensionInfeasible{};
  return ExtensionFeasible{SignedPointMeasure{std::move(*result.witness)}, unique};
}

SubadditiveExtensionVerdict check_subadditive_extension(const StateTable& state) {
  const Family& family = state.family();
  if (!is_difference_closed(family)) throw std::domain_error("family is not difference-closed");

  SubadditiveExtensionVerdict v;
  v.hypothesis_holds = intersections_generate_atoms(family);
  v.subadditive = is_subadditive(state).holds;
  const auto outcome = solve_signed_extension(state);
  v.signed_extendable = feasible(outcome);

  if (v.signed_extendable) {
    const auto& witness = std::get<ExtensionFeasible>(outcome).witness;

    std::vector<Rational> combined(state.values().begin(), state.values().end());
    combined.insert(combined.end(), witness.masses.begin(), witness.masses.end());
    const auto members = family.members();
    const MemberIndex index(family);
    bool identity = true;
    if (const auto scaled = scale_to_common_denominator(combined)) {
      const auto& num = scaled->numerators;
      const std::size_t offset = family.size();
      for (std::size_t i = 0; i < members.size() && identity; ++i)
        for (std::size_t j = i; j < members.size() && identity; ++j) {
          std::int64_t meet = 0;
          for (std::size_t p : points_of(members[i] & members[j])) meet += num[offset + p];
          const std::size_t d = *index.find(members[i] ^ members[j]);
          identity = num[i] + num[j] - num[d] == 2 * meet;
        }
    } else {
      for (std::size_t i = 0; i < members.size() && identity; ++i)
        for (std::size_t j = i; j < members.size() && identity; ++j) {
          const std::size_t d = *index.find(members[i] ^ members[j]);
          identity = state[i] + state[j] - state[d] == 2 * witness.measure(members[i] & members[j]);
        }
    }
    v.intersection_identity_holds = identity;

    // Mass of each atom is what the family determines; points inside an
    // atom share it uniformly.
    SignedPointMeasure spread;
    spread.masses.assign(family.universe().size(), Rational(0));
    bool nonnegative = true;
    for (SubsetMask atom : boolean_atoms(family)) {
      const Rational mass = witness.measure(atom);
      nonnegative = nonnegative && sgn(mass) >= 0;
      const Rational share = mass / static_cast<long>(cardinality(atom));
      for (std::size_t p : points_of(atom)) spread.masses[p] = share;
    }
    v.extension_is_state = nonnegative;
    if (nonnegative) v.state_extension = std::move(spread);
  }

  v.consistent =
      !v.hypothesis_holds || !v.signed_extendable || (v.subadditive == v.extension_is_state.value_or(false));
  return v;
}

StateClassification classify_state(const StateTable& state) {
  StateClassification c;
  c.signed_extendable = feasible(solve_signed_extension(state));
  c.state_extendable = c.signed_extendable && feasible(solve_state_extension(state));
  if (is_difference_closed(state.family())) c.subadditive = is_subadditive(state).holds;
  c.two_valued = is_two_valued(state);
  c.dirac = dirac_point(state);
  return c;
}

std::string format_outcome_machine(const ExtensionOutcome& outcome) {
  std::ostringstream out;
  if (const auto* ok = std::get_if<ExtensionFeasible>(&outcome)) {
    out << "FEASIBLE unique=" << (ok->unique ? 1 : 0) << " masses=";
    for (std::size_t i = 0; i < ok->witness.masses.size(); ++i)
      out << (i ? "," : "") << to_string(ok->witness.masses[i]);
    return out.str();
  }
  const auto& bad = std::get<ExtensionInfeasible>(outcome);
  out << "INFEASIBLE cert=";
  if (bad.certificate) {
    bool first = true;
    for (std::size_t i = 0; i < bad.certificate->size(); ++i) {
      if (sgn((*bad.certificate)[i]) == 0) continue;
      out << (first ? "" : ",") << i << ':' << to_string((*bad.certificate)[i]);
      first = false;
    }
  }
  return out.str();
}

}  // namespace qlogic
