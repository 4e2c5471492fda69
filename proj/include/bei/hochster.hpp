#pragma once

#include "bei/betti_table.hpp"
#include "bei/ideal.hpp"

namespace bei {

/// Betti numbers of S/I for a squarefree monomial ideal I via Hochster's
/// formula: beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Delta_W), where
/// Delta is the Stanley-Reisner complex of I. Throws InputError if a generator
/// is not a squarefree monomial.
BettiTable hochster_betti(const IdealBasis& ideal, const BettiBounds& bounds = {});

}  // namespace bei
