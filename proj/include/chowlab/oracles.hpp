#pragma once

#include "chowlab/schur.hpp"

namespace chowlab::oracles {

// Independent Littlewood-Richardson count: enumerate every semistandard
// filling of nu/lambda with content mu by a row-major left-to-right fill,
// then test the reverse reading word for the lattice property afterwards.
// Deliberately shares no code with lr_coefficient; used to cross-check it.
Int lr_brute_force(const Partition& lambda, const Partition& mu, const Partition& nu);

// Euler number of the Hilbert scheme of n points on a surface with Euler
// number chi: coefficient of q^n in prod_{m>=1} (1-q^m)^{-chi}.
Int hilbert_scheme_euler(int chi, int n);

}  // namespace chowlab::oracles
