#pragma once

#include "bei/betti_table.hpp"
#include "bei/groebner.hpp"

namespace bei {

using KoszulConfig = BettiBounds;

/// Betti numbers of S/J as the homology of the Koszul complex on the variables
/// tensored with S/J, written in the standard-monomial basis of gb.
///
/// Variables dividing no leading monomial are regular on S/J and are factored
/// out first. The remaining complex is split into graded blocks (the finest of
/// Z^{2n}, Z^n x Z, Z in which J is homogeneous), and only blocks whose degree
/// can carry a Betti number are built: those below the lcm of the leading
/// monomials, the Taylor bound for S/in(J) which dominates S/J. Without caps
/// the table is therefore complete. Throws InputError if J is not homogeneous
/// or max_internal_degree < max_homological_degree.
BettiTable koszul_betti(const GroebnerBasis& gb, const KoszulConfig& config = {});

}  // namespace bei
