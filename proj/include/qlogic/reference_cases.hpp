#pragma once

#include "qlogic/setlogic.hpp"
#include "qlogic/states.hpp"

#include <array>

namespace qlogic::reference {

// Four 3-point sets on six points whose concrete closure represents MO4.
std::array<SubsetMask, 4> mo4_generators();
Family mo4_logic();
// s(A) = 0, s(B) = 1, s(C) = 0, s(D) = 1; complements follow.
StateTable mo4_two_valued_state();

// Even logic on 2k points: s{0,c} = 0 and s{b,c} = 1/(k-1) for b, c != 0,
// extended to every even set by splitting it into pairs.
StateTable negative_point_state(std::size_t k);

// Four 4-point sets on ten points whose difference closure represents MO15.
std::array<SubsetMask, 4> mo15_generators();
Family mo15_logic();
// s(A) = s(C) = s(AδB) = 1, s(B) = s(D) = s(CδD) = 0, 1/2 elsewhere.
StateTable mo15_conflicting_state();
// s(A) = 1/3, s(B) = 1/4, s(C) = 2/5, 1/2 on the remaining complement pairs.
StateTable mo15_subadditive_state();

}  // namespace qlogic::reference
