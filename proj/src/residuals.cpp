#include "propdiv/residuals.hpp"

#include "propdiv/errors.hpp"

namespace propdiv {

static void require_matching(const Allocation& x, const Game& g) {
    if (x.size() != static_cast<std::size_t>(g.players()))
        raise(Errc::player_count, "payoff vector length does not match the player count");
}

static Rational partial_sum(const Allocation& x, Coalition s) {
    Rational acc;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (s.contains(static_cast<int>(i))) acc += x[i];
    return acc;
}

bool in_upsilon_up(const Allocation& x, const Game& g) {
    require_matching(x, g);
    return x.sum() != g.worth(g.grand());
}

bool in_upsilon_down(const Allocation& x, const Game& g) {
    require_matching(x, g);
    return !x.sum().is_zero();
}

Game residual_up(const Allocation& x, const Game& g) {
    if (!in_upsilon_up(x, g))
        raise(Errc::upsilon_violation, "upward residual needs sum(x) != v(N)");
    Game out(g.players(), g.labels());
    for (std::uint32_t m = 1; m <= g.grand().bits(); ++m) {
        Coalition s(m);
        out.set_worth(s, g.worth(s) - partial_sum(x, s));
    }
    return out;
}

Game residual_down(const Allocation& x, const Game& g) {
    if (!in_upsilon_down(x, g))
        raise(Errc::upsilon_violation, "downward residual needs sum(x) != 0");
    Game out(g.players(), g.labels());
    const std::uint32_t grand = g.grand().bits();
    for (std::uint32_t m = 1; m < grand; ++m)
        out.set_worth(Coalition(m), partial_sum(x, Coalition(m)));
    out.set_worth(g.grand(), g.worth(g.grand()));
    return out;
}

Game project_nullified(const Allocation& x, const Game& g, Coalition s) {
    require_matching(x, g);
    if (s.is_empty())
        raise(Errc::empty_projection_set, "projection set must be nonempty");
    if (!s.subset_of(g.grand()))
        raise(Errc::out_of_range, "projection set outside the player set");
    const Rational kept = g.worth(g.grand()) - partial_sum(x, s.complement(g.players()));
    Game out(g.players(), g.labels());
    for (std::uint32_t m = 1; m <= g.grand().bits(); ++m) {
        Coalition t(m);
        out.set_worth(t, s.subset_of(t) ? kept : g.worth(t.intersect(s)));
    }
    return out;
}

} // namespace propdiv
