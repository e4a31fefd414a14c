#pragma once

#include "qlogic/linalg.hpp"
#include "qlogic/setlogic.hpp"
#include "qlogic/states.hpp"

#include <optional>
#include <string>
#include <variant>

namespace qlogic {

struct ExtensionFeasible {
  SignedPointMeasure witness;
  bool unique = false;
};

struct ExtensionInfeasible {
  // Coefficients over family members (canonical order) with
  // Σ λ_A χ_A ≡ 0 pointwise and Σ λ_A s(A) != 0. Absent when the answer came
  // from the nonnegative solver alone.
  std::optional<RatVector> certificate;
};

using ExtensionOutcome = std::variant<ExtensionFeasible, ExtensionInfeasible>;

inline bool feasible(const ExtensionOutcome& o) { return std::holds_alternative<ExtensionFeasible>(o); }

// Member-by-point incidence matrix and the state values as right-hand side.
struct IncidenceSystem {
  RatMatrix matrix;
  RatVector rhs;
};
IncidenceSystem incidence_system(const StateTable& state);

// Point masses of the unique signed extension of a state on the even logic:
// m(x) = (s{x,u} + s{x,v} - s{u,v}) / 2 with u, v the two smallest points
// other than x. For two points the symmetric (1/2, 1/2) is returned.
// Throws std::domain_error if the family is not an even logic.
SignedPointMeasure even_logic_masses(const StateTable& state);

// s{x,u} + s{x,v} - s{u,v} on an even-logic state. Throws
// std::domain_error unless x, u, v are distinct points.
Rational pair_combination(const StateTable& state, std::size_t x, std::size_t u, std::size_t v);

bool is_even_logic(const Family& family);

// Decides whether the state extends to a signed measure on all subsets.
// Infeasible outcomes carry a certificate rewritten over complement pairs
// and scaled to the smallest integer vector with positive leading entry.
ExtensionOutcome solve_signed_extension(const StateTable& state);

// Decides whether the state extends to a state (nonnegative) on all subsets.
ExtensionOutcome solve_state_extension(const StateTable& state);

// Sound iff Σ λ_A χ_A vanishes pointwise and Σ λ_A s(A) != 0.
bool certificate_is_sound(const StateTable& state, const RatVector& certificate);

struct SubadditiveExtensionVerdict {
  bool hypothesis_holds = false;  // every atom is an intersection of two members
  bool signed_extendable = false;
  bool subadditive = false;
  std::optional<bool> extension_is_state;
  // s(A) + s(B) - s(AδB) == 2 m(A ∩ B) for every member pair; only checked
  // when a signed extension exists.
  std::optional<bool> intersection_identity_holds;
  // Nonnegative extension built by spreading each atom's mass uniformly over
  // its points; present when extension_is_state is true.
  std::optional<SignedPointMeasure> state_extension;
  bool consistent = false;
};

// For a difference-closed family: when the atoms are pairwise
// intersections and a signed extension exists, the state is subadditive
// exactly when that extension is nonnegative. Throws std::domain_error if
// the family is not difference-closed.
SubadditiveExtensionVerdict check_subadditive_extension(const StateTable& state);

struct StateClassification {
  bool signed_extendable = false;
  bool state_extendable = false;
  std::optional<bool> subadditive;  // only on difference-closed families
  bool two_valued = false;
  std::optional<std::size_t> dirac;
};

StateClassification classify_state(const StateTable& state);

// "FEASIBLE unique=<0|1> masses=p/q,..." or "INFEASIBLE cert=<idx>:<coeff>,...".
std::string format_outcome_machine(const ExtensionOutcome& outcome);

}  // namespace qlogic
