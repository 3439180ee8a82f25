#pragma once

#include "propdiv/game.hpp"

namespace propdiv {

// Admissibility regions for the two residual operators. Outputs live in the
// unrestricted game class; callers re-test domain membership themselves.

// (x, g) admits the upward residual iff sum(x) != g(N).
bool in_upsilon_up(const Allocation& x, const Game& g);
// (x, g) admits the downward residual iff sum(x) != 0.
bool in_upsilon_down(const Allocation& x, const Game& g);

// U(x,g)(S) = g(S) - sum_{k in S} x_k. Raises upsilon_violation when
// sum(x) == g(N) (the residual grand worth would vanish).
Game residual_up(const Allocation& x, const Game& g);

// D(x,g)(S) = sum_{k in S} x_k for proper S, g(N) at the grand coalition.
// Raises upsilon_violation when sum(x) == 0.
Game residual_down(const Allocation& x, const Game& g);

// Projection that treats everyone outside s as paid off and null:
//   T >= s: g(N) - sum_{k not in s} x_k
//   else:   g(T intersect s)
// s must be nonempty; s = N returns g unchanged. Every player outside s is
// null in the result.
Game project_nullified(const Allocation& x, const Game& g, Coalition s);

} // namespace propdiv
