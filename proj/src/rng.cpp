#include "propdiv/rng.hpp"

namespace propdiv {

Game random_game(Rng& rng, int n, int num_lo, int num_hi, int den_lo, int den_hi) {
    Game g(n);
    for (std::uint32_t m = 1; m <= g.grand().bits(); ++m)
        g.set_worth(Coalition(m), rng.rational(num_lo, num_hi, den_lo, den_hi));
    return g;
}

} // namespace propdiv
