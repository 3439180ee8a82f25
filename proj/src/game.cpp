#include "propdiv/game.hpp"

#include "propdiv/errors.hpp"

namespace propdiv {

DomainClass parse_domain(std::string_view text) {
    if (text == "all" || text == "ALL") return DomainClass::all;
    if (text == "V" || text == "v") return DomainClass::v;
    if (text == "VHAT" || text == "vhat" || text == "Vhat") return DomainClass::vhat;
    raise(Errc::unknown_kind, "unknown domain class: \"" + std::string(text) + "\"");
}

const char* domain_name(DomainClass d) {
    switch (d) {
    case DomainClass::all: return "all";
    case DomainClass::v: return "V";
    case DomainClass::vhat: return "VHAT";
    }
    return "?";
}

Rational Allocation::sum() const {
    Rational s;
    for (const auto& p : payoffs) s += p;
    return s;
}

Allocation operator+(const Allocation& a, const Allocation& b) {
    if (a.size() != b.size())
        raise(Errc::player_count, "allocation size mismatch");
    Allocation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Allocation operator-(const Allocation& a, const Allocation& b) {
    if (a.size() != b.size())
        raise(Errc::player_count, "allocation size mismatch");
    Allocation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Allocation operator*(const Rational& c, const Allocation& a) {
    Allocation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Allocation operator-(const Allocation& a) {
    Allocation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Rational inf_norm_diff(const Allocation& a, const Allocation& b) {
    if (a.size() != b.size())
        raise(Errc::player_count, "allocation size mismatch");
    Rational m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = (a[i] - b[i]).abs();
        if (d > m) m = d;
    }
    return m;
}

static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

Game::Game(int n) : Game(n, default_labels(n)) {}

Game::Game(int n, std::vector<std::string> labels) : n_(n), labels_(std::move(labels)) {
    if (n_ < 2 || n_ > k_max_players)
        raise(Errc::player_count, "player count must be in [2, 16], got " + std::to_string(n_));
    if (labels_.size() != static_cast<std::size_t>(n_))
        raise(Errc::player_count, "label count does not match player count");
    worths_.assign(std::size_t{1} << n_, Rational());
}

const Rational& Game::worth(Coalition s) const {
    if (s.bits() >= worths_.size())
        raise(Errc::out_of_range, "coalition outside the player set");
    return worths_[s.bits()];
}

void Game::set_worth(Coalition s, Rational value) {
    if (s.bits() >= worths_.size())
        raise(Errc::out_of_range, "coalition outside the player set");
    if (s.is_empty()) {
        if (!value.is_zero())
            raise(Errc::domain_error, "the empty coalition's worth is fixed at 0");
        return;
    }
    worths_[s.bits()] = std::move(value);
}

Rational sum_singletons(const Game& g) {
    Rational s;
    for (int i = 0; i < g.players(); ++i) s += g.worth(Coalition::singleton(i));
    return s;
}

Allocation singleton_vector(const Game& g) {
    Allocation a(static_cast<std::size_t>(g.players()));
    for (int i = 0; i < g.players(); ++i) a[i] = g.worth(Coalition::singleton(i));
    return a;
}

Game replace_grand(const Game& g, const Rational& alpha) {
    Game out = g;
    out.set_worth(g.grand(), alpha);
    return out;
}

bool in_domain(const Game& g, DomainClass d) {
    if (d == DomainClass::all) return true;
    if (sum_singletons(g).is_zero()) return false;
    if (d == DomainClass::v) return true;
    // VHat: n >= 3 and singleton worths all >= 0 or all <= 0
    if (g.players() < 3) return false;
    bool any_pos = false, any_neg = false;
    for (int i = 0; i < g.players(); ++i) {
        int s = g.worth(Coalition::singleton(i)).sign();
        if (s > 0) any_pos = true;
        if (s < 0) any_neg = true;
    }
    return !(any_pos && any_neg);
}

bool is_null_player(const Game& g, int i) {
    const std::uint32_t full = Coalition::full(g.players()).bits();
    const std::uint32_t bit = std::uint32_t{1} << i;
    const std::uint32_t rest = full & ~bit;
    // enumerate S <= rest via the subset-walk trick, including S = 0
    std::uint32_t s = rest;
    while (true) {
        if (g.worth(Coalition(s | bit)) != g.worth(Coalition(s))) return false;
        if (s == 0) break;
        s = (s - 1) & rest;
    }
    return true;
}

int count_null_players(const Game& g) {
    int c = 0;
    for (int i = 0; i < g.players(); ++i)
        if (is_null_player(g, i)) ++c;
    return c;
}

Game add_games(const Game& a, const Game& b) {
    if (a.players() != b.players())
        raise(Errc::player_count, "cannot add games with different player counts");
    Game out = a;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << a.players()); ++m)
        out.set_worth(Coalition(m), a.worth(Coalition(m)) + b.worth(Coalition(m)));
    return out;
}

Game scale_game(const Rational& c, const Game& g) {
    Game out = g;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << g.players()); ++m)
        out.set_worth(Coalition(m), c * g.worth(Coalition(m)));
    return out;
}

Game oplus(const Game& a, const Game& b) {
    if (a.players() != b.players())
        raise(Errc::player_count, "cannot combine games with different player counts");
    const std::uint32_t grand = a.grand().bits();
    for (std::uint32_t m = 1; m < grand; ++m)
        if (a.worth(Coalition(m)) != b.worth(Coalition(m)))
            raise(Errc::coincidence_violation,
                  "games disagree on a proper coalition (mask " + std::to_string(m) + ")");
    Game out = a;
    out.set_worth(a.grand(), a.worth(a.grand()) + b.worth(b.grand()));
    return out;
}

} // namespace propdiv
