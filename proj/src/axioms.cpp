#include "propdiv/axioms.hpp"

#include "propdiv/errors.hpp"
#include "propdiv/game_io.hpp"
#include "propdiv/residuals.hpp"
#include "propdiv/rng.hpp"

#include <array>

namespace propdiv {

// --- names and bundles ---------------------------------------------------

namespace {

constexpr std::array<const char*, k_axiom_count> k_axiom_names = {
    "GH", "GN", "L", "CU", "CD", "SIP", "GCON", "LCU",
    "LCD", "OGN", "GR", "E", "ER", "PNC", "BPNC", "GA"};

} // namespace

const char* axiom_name(Axiom a) { return k_axiom_names[static_cast<std::size_t>(a)]; }

Axiom parse_axiom(std::string_view text) {
    for (int i = 0; i < k_axiom_count; ++i)
        if (text == k_axiom_names[static_cast<std::size_t>(i)]) return static_cast<Axiom>(i);
    raise(Errc::unknown_axiom, "no axiom named \"" + std::string(text) + "\"");
}

std::vector<Axiom> all_axioms() {
    std::vector<Axiom> out;
    for (int i = 0; i < k_axiom_count; ++i) out.push_back(static_cast<Axiom>(i));
    return out;
}

std::vector<Axiom> theorem_axioms(int k) {
    switch (k) {
    case 1: return {Axiom::GH, Axiom::GN};
    case 2: return {Axiom::CU, Axiom::CD, Axiom::SIP, Axiom::GCON};
    case 3: return {Axiom::LCU, Axiom::LCD, Axiom::OGN, Axiom::GR};
    case 4: return {Axiom::PNC, Axiom::BPNC, Axiom::E, Axiom::ER};
    case 5: return {Axiom::PNC, Axiom::SIP, Axiom::GA, Axiom::GCON};
    }
    raise(Errc::unknown_axiom, "theorem bundle must be 1..5, got " + std::to_string(k));
}

DomainClass axiom_domain(Axiom a) {
    switch (a) {
    case Axiom::L:
        return DomainClass::all;
    case Axiom::E:
    case Axiom::ER:
    case Axiom::PNC:
    case Axiom::BPNC:
    case Axiom::GA:
        return DomainClass::vhat;
    default:
        return DomainClass::v;
    }
}

const char* verdict_name(Verdict::Kind k) {
    switch (k) {
    case Verdict::Kind::holds: return "holds";
    case Verdict::Kind::fails: return "fails";
    case Verdict::Kind::not_applicable: return "not_applicable";
    }
    return "?";
}

// --- shared instantiation machinery --------------------------------------

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

const std::string* find_param(const Params& params, std::string_view key) {
    for (const auto& [k, v] : params)
        if (k == key) return &v;
    return nullptr;
}

Rational rational_param(const Params& params, const char* key) {
    const std::string* v = find_param(params, key);
    if (!v) raise(Errc::param_error, std::string("missing instantiation parameter \"") + key + "\"");
    return Rational::parse(*v);
}

int int_param(const Params& params, const char* key) {
    return static_cast<int>(rational_param(params, key).num().convert_to<long long>());
}

Coalition set_param(const Params& params, const char* key, int n) {
    const std::string* v = find_param(params, key);
    if (!v) raise(Errc::param_error, std::string("missing instantiation parameter \"") + key + "\"");
    Coalition s;
    std::size_t pos = 0;
    while (pos <= v->size()) {
        auto comma = v->find(',', pos);
        int i = std::stoi(v->substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (i < 0 || i >= n) raise(Errc::out_of_range, "player index out of range in parameter");
        s = s.with(i);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return s;
}

std::string set_to_csv(Coalition s) {
    std::string out;
    for (int i : s.members()) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

// One evaluated instantiation of an axiom's equation.
struct Instance {
    bool applicable = false;
    std::string skip_reason; // set iff !applicable
    WitnessValue lhs, rhs;
    bool is_bound = false; // true: require lhs <= rhs, else lhs == rhs
    std::string equation;

    bool violated() const {
        if (is_bound) return *lhs.scalar > *rhs.scalar;
        return !(lhs == rhs);
    }

    static Instance skip(std::string why) {
        Instance inst;
        inst.skip_reason = std::move(why);
        return inst;
    }
    static Instance eq(WitnessValue l, WitnessValue r, std::string equation) {
        Instance inst;
        inst.applicable = true;
        inst.lhs = std::move(l);
        inst.rhs = std::move(r);
        inst.equation = std::move(equation);
        return inst;
    }
    static Instance bound(Rational l, Rational r, std::string equation) {
        Instance inst = eq(WitnessValue::of(std::move(l)), WitnessValue::of(std::move(r)), std::move(equation));
        inst.is_bound = true;
        return inst;
    }
};

// The single source of truth for every axiom equation. Checkers enumerate
// parameters and call this; reevaluate_witness replays it from stored
// parameters. games[0] is the game under test, games[1] the partner for the
// linearity-additivity instance.
Instance eval_instance(Axiom a, const Solution& s, const std::vector<Game>& games,
                       const Params& params) {
    const Game& g = games.at(0);
    const Rational grand = g.worth(g.grand());
    const Rational s1 = sum_singletons(g);

    auto apply = [&s](const Game& game) { return s(game); };

    switch (a) {
    case Axiom::GH: {
        const Rational alpha = rational_param(params, "alpha");
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        EvalOutcome moved = apply(replace_grand(g, alpha * grand));
        if (!moved.defined()) return Instance::skip("solution undefined on the regraded game: " + moved.reason);
        return Instance::eq(WitnessValue::of(*moved.payoffs), WitnessValue::of(alpha * *base.payoffs),
                            "phi(regrand(v, alpha*v(N))) == alpha*phi(v)");
    }
    case Axiom::GN: {
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        EvalOutcome moved = apply(replace_grand(g, grand - s1));
        if (!moved.defined()) return Instance::skip("solution undefined on the regraded game: " + moved.reason);
        return Instance::eq(WitnessValue::of(*moved.payoffs),
                            WitnessValue::of(*base.payoffs - singleton_vector(g)),
                            "phi(regrand(v, v(N)-s1)) == phi(v) - singletons");
    }
    case Axiom::L: {
        const std::string* part = find_param(params, "part");
        if (!part) raise(Errc::param_error, "linearity instantiation needs \"part\"");
        if (*part == "add") {
            const Game& h = games.at(1);
            EvalOutcome fg = apply(g), fh = apply(h), fsum = apply(add_games(g, h));
            if (!fg.defined()) return Instance::skip("solution undefined on the game: " + fg.reason);
            if (!fh.defined()) return Instance::skip("solution undefined on the partner game: " + fh.reason);
            if (!fsum.defined()) return Instance::skip("solution undefined on the sum game: " + fsum.reason);
            return Instance::eq(WitnessValue::of(*fsum.payoffs), WitnessValue::of(*fg.payoffs + *fh.payoffs),
                                "phi(v + w) == phi(v) + phi(w)");
        }
        const Rational c = rational_param(params, "scalar");
        EvalOutcome fg = apply(g), fc = apply(scale_game(c, g));
        if (!fg.defined()) return Instance::skip("solution undefined on the game: " + fg.reason);
        if (!fc.defined()) return Instance::skip("solution undefined on the scaled game: " + fc.reason);
        return Instance::eq(WitnessValue::of(*fc.payoffs), WitnessValue::of(c * *fg.payoffs),
                            "phi(c*v) == c*phi(v)");
    }
    case Axiom::CU:
    case Axiom::LCU: {
        const Rational alpha = rational_param(params, "alpha");
        if (a == Axiom::LCU && !(Rational(0) <= alpha && alpha <= grand))
            return Instance::skip("alpha outside [0, v(N)]");
        EvalOutcome part = apply(replace_grand(g, alpha));
        if (!part.defined()) return Instance::skip("solution undefined on the regraded game: " + part.reason);
        if (!in_upsilon_up(*part.payoffs, g))
            return Instance::skip("pair leaves the upward admissibility region (sum(x) == v(N))");
        Game up = residual_up(*part.payoffs, g);
        if (!in_domain(up, DomainClass::v)) return Instance::skip("upward residual leaves V");
        EvalOutcome rest = apply(up);
        if (!rest.defined()) return Instance::skip("solution undefined on the upward residual: " + rest.reason);
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        std::string equation = "phi(v) == phi(regrand(v, alpha)) + phi(up(phi(regrand(v, alpha)), v))";
        if (a == Axiom::LCU) equation += " with 0 <= alpha <= v(N)";
        return Instance::eq(WitnessValue::of(*base.payoffs), WitnessValue::of(*part.payoffs + *rest.payoffs),
                            std::move(equation));
    }
    case Axiom::CD:
    case Axiom::LCD: {
        const Rational alpha = rational_param(params, "alpha");
        if (a == Axiom::LCD && !(Rational(0) <= grand && grand <= alpha))
            return Instance::skip("alpha outside [v(N), +inf) or v(N) < 0");
        EvalOutcome part = apply(replace_grand(g, alpha));
        if (!part.defined()) return Instance::skip("solution undefined on the regraded game: " + part.reason);
        if (!in_upsilon_down(*part.payoffs, g))
            return Instance::skip("pair leaves the downward admissibility region (sum(x) == 0)");
        Game down = residual_down(*part.payoffs, g);
        if (!in_domain(down, DomainClass::v)) return Instance::skip("downward residual leaves V");
        EvalOutcome rest = apply(down);
        if (!rest.defined()) return Instance::skip("solution undefined on the downward residual: " + rest.reason);
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        std::string equation = "phi(v) == phi(down(phi(regrand(v, alpha)), v))";
        if (a == Axiom::LCD) equation += " with 0 <= v(N) <= alpha";
        return Instance::eq(WitnessValue::of(*base.payoffs), WitnessValue::of(*rest.payoffs),
                            std::move(equation));
    }
    case Axiom::SIP: {
        EvalOutcome at_sum = apply(replace_grand(g, s1));
        if (!at_sum.defined())
            return Instance::skip("solution undefined on the inessential-at-grand game: " + at_sum.reason);
        return Instance::eq(WitnessValue::of(*at_sum.payoffs), WitnessValue::of(singleton_vector(g)),
                            "phi(regrand(v, s1)) == singletons");
    }
    case Axiom::GCON: {
        const Rational base_point = rational_param(params, "base");
        const Rational eps = rational_param(params, "eps");
        const Rational k = rational_param(params, "k");
        EvalOutcome at = apply(replace_grand(g, base_point));
        if (!at.defined()) return Instance::skip("solution undefined at the base point: " + at.reason);
        EvalOutcome stepped = apply(replace_grand(g, base_point + eps));
        if (!stepped.defined()) return Instance::skip("solution undefined at the stepped point: " + stepped.reason);
        return Instance::bound(inf_norm_diff(*stepped.payoffs, *at.payoffs), k * eps,
                               "|phi(regrand(v, base+eps)) - phi(regrand(v, base))|_inf <= K*eps");
    }
    case Axiom::OGN: {
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        if (s1 >= grand) {
            EvalOutcome moved = apply(replace_grand(g, s1 - grand));
            if (!moved.defined())
                return Instance::skip("solution undefined on the regraded game: " + moved.reason);
            return Instance::eq(WitnessValue::of(*moved.payoffs),
                                WitnessValue::of(singleton_vector(g) - *base.payoffs),
                                "phi(regrand(v, s1-v(N))) == singletons - phi(v)  [s1 >= v(N)]");
        }
        EvalOutcome moved = apply(replace_grand(g, grand - s1));
        if (!moved.defined()) return Instance::skip("solution undefined on the regraded game: " + moved.reason);
        return Instance::eq(WitnessValue::of(*moved.payoffs),
                            WitnessValue::of(*base.payoffs - singleton_vector(g)),
                            "phi(regrand(v, v(N)-s1)) == phi(v) - singletons  [s1 < v(N)]");
    }
    case Axiom::GR: {
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        EvalOutcome mirrored = apply(replace_grand(g, -grand));
        if (!mirrored.defined())
            return Instance::skip("solution undefined on the mirrored game: " + mirrored.reason);
        return Instance::eq(WitnessValue::of(*base.payoffs), WitnessValue::of(-*mirrored.payoffs),
                            "phi(v) == -phi(regrand(v, -v(N)))");
    }
    case Axiom::E: {
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        return Instance::eq(WitnessValue::of(base.payoffs->sum()), WitnessValue::of(grand),
                            "sum_k phi_k(v) == v(N)");
    }
    case Axiom::ER: {
        const int i = int_param(params, "i"), j = int_param(params, "j");
        for (int k2 = 0; k2 < g.players(); ++k2)
            if (k2 != i && k2 != j && !is_null_player(g, k2))
                return Instance::skip("players outside the pair are not all null");
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        const Allocation& x = *base.payoffs;
        return Instance::eq(
            WitnessValue::of(x[static_cast<std::size_t>(i)] * g.worth(Coalition::singleton(j))),
            WitnessValue::of(x[static_cast<std::size_t>(j)] * g.worth(Coalition::singleton(i))),
            "phi_i(v)*v({j}) == phi_j(v)*v({i})  [all others null]");
    }
    case Axiom::PNC:
    case Axiom::BPNC: {
        const Coalition set = set_param(params, "set", g.players());
        const int i = int_param(params, "i");
        if (!set.contains(i)) raise(Errc::param_error, "checked player must belong to the projection set");
        bool anchored = false;
        for (int j : set.members())
            if (!g.worth(Coalition::singleton(j)).is_zero()) anchored = true;
        if (!anchored)
            return Instance::skip("projection set has no member with nonzero singleton worth");
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        Game projected = project_nullified(*base.payoffs, g, set);
        if (!in_domain(projected, DomainClass::vhat))
            return Instance::skip("projected game leaves VHAT");
        EvalOutcome proj = apply(projected);
        if (!proj.defined()) return Instance::skip("solution undefined on the projected game: " + proj.reason);
        return Instance::eq(WitnessValue::of((*base.payoffs)[static_cast<std::size_t>(i)]),
                            WitnessValue::of((*proj.payoffs)[static_cast<std::size_t>(i)]),
                            a == Axiom::BPNC
                                ? "phi_i(v) == phi_i(project(phi(v), v, {i,j}))"
                                : "phi_i(v) == phi_i(project(phi(v), v, S)) for i in S");
    }
    case Axiom::GA: {
        const Rational beta = rational_param(params, "beta");
        if (count_null_players(g) < g.players() - 2)
            return Instance::skip("game has more than two non-null players");
        EvalOutcome base = apply(g);
        if (!base.defined()) return Instance::skip("solution undefined on the game: " + base.reason);
        EvalOutcome other = apply(replace_grand(g, beta));
        if (!other.defined()) return Instance::skip("solution undefined on the companion game: " + other.reason);
        EvalOutcome joined = apply(replace_grand(g, grand + beta));
        if (!joined.defined()) return Instance::skip("solution undefined on the combined game: " + joined.reason);
        return Instance::eq(WitnessValue::of(*base.payoffs + *other.payoffs),
                            WitnessValue::of(*joined.payoffs),
                            "phi(v) + phi(regrand(v, beta)) == phi(regrand(v, v(N)+beta))");
    }
    }
    raise(Errc::unknown_axiom, "unhandled axiom");
}

// Running tally while enumerating instantiations of one (axiom, game) check.
struct Tally {
    std::size_t trials = 0, skipped = 0;
    std::optional<Witness> witness;

    // Returns true when enumeration should stop (first failure wins).
    bool feed(Axiom a, const Solution& s, const std::vector<Game>& games, Params params) {
        Instance inst = eval_instance(a, s, games, params);
        if (!inst.applicable) {
            ++skipped;
            return false;
        }
        if (inst.violated()) {
            Witness w;
            w.axiom = a;
            w.solution = s.name();
            w.games = games;
            w.params = std::move(params);
            w.lhs = std::move(inst.lhs);
            w.rhs = std::move(inst.rhs);
            w.equation = std::move(inst.equation);
            witness = std::move(w);
            return true;
        }
        ++trials;
        return false;
    }

    Verdict close(std::string na_reason) const {
        if (witness) return Verdict::fails(*witness, trials, skipped);
        if (trials == 0) return Verdict::not_applicable(std::move(na_reason), skipped);
        return Verdict::holds(trials, skipped);
    }
};

std::string outside_reason(DomainClass d) {
    return std::string("game outside ") + domain_name(d);
}

// NotApplicable when the game is outside the axiom's class; also when the
// solution itself is undefined on the game (narrower solution domain).
std::optional<Verdict> preflight(Axiom a, const Solution& s, const Game& g) {
    if (!in_domain(g, axiom_domain(a))) return Verdict::not_applicable(outside_reason(axiom_domain(a)));
    if (a == Axiom::L) return std::nullopt; // total-domain axiom: instances skip individually
    EvalOutcome base = s(g);
    if (!base.defined()) return Verdict::not_applicable("solution undefined on the game: " + base.reason);
    return std::nullopt;
}

} // namespace

// --- samples --------------------------------------------------------------

std::vector<Rational> alpha_samples(const Game& g, const CheckConfig& cfg) {
    std::vector<Rational> out = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                 Rational(1, 2), Rational(1), Rational(3, 2),
                                 g.worth(g.grand()), sum_singletons(g),
                                 g.worth(g.grand()) + Rational(1)};
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.random_alphas; ++i) out.push_back(rng.rational(-20, 20, 1, 5));
    return out;
}

// --- checkers ---------------------------------------------------------------

static Verdict alpha_family_check(Axiom a, const Solution& s, const Game& g, const CheckConfig& cfg,
                                  const char* key, std::string na_reason) {
    if (auto v = preflight(a, s, g)) return *v;
    Tally tally;
    for (const Rational& alpha : alpha_samples(g, cfg))
        if (tally.feed(a, s, {g}, {{key, alpha.str()}})) break;
    return tally.close(std::move(na_reason));
}

Verdict check_GH(const Solution& s, const Game& g, const CheckConfig& cfg) {
    return alpha_family_check(Axiom::GH, s, g, cfg, "alpha", "no applicable grand-worth sample");
}

Verdict check_GN(const Solution& s, const Game& g, const CheckConfig& cfg) {
    (void)cfg;
    if (auto v = preflight(Axiom::GN, s, g)) return *v;
    Tally tally;
    tally.feed(Axiom::GN, s, {g}, {});
    return tally.close("no applicable instantiation");
}

Verdict check_L(const Solution& s, const Game& g, const CheckConfig& cfg) {
    if (auto v = preflight(Axiom::L, s, g)) return *v;
    Rng rng(cfg.seed);
    Tally tally;
    for (std::size_t t = 0; t < cfg.pair_samples; ++t) {
        Game h = random_game(rng, g.players());
        Rational c = rng.rational(-20, 20, 1, 5);
        if (tally.feed(Axiom::L, s, {g, h}, {{"part", "add"}})) break;
        if (tally.feed(Axiom::L, s, {g}, {{"part", "scale"}, {"scalar", c.str()}})) break;
    }
    return tally.close("every sampled linearity instantiation was skipped");
}

Verdict check_CU(const Solution& s, const Game& g, const CheckConfig& cfg) {
    return alpha_family_check(Axiom::CU, s, g, cfg, "alpha",
                              "every sampled alpha left the admissibility region or the class");
}

Verdict check_CD(const Solution& s, const Game& g, const CheckConfig& cfg) {
    return alpha_family_check(Axiom::CD, s, g, cfg, "alpha",
                              "every sampled alpha left the admissibility region or the class");
}

Verdict check_SIP(const Solution& s, const Game& g, const CheckConfig& cfg) {
    (void)cfg;
    if (auto v = preflight(Axiom::SIP, s, g)) return *v;
    Tally tally;
    tally.feed(Axiom::SIP, s, {g}, {});
    return tally.close("solution undefined on the inessential-at-grand game");
}

Verdict check_GCON(const Solution& s, const Game& g, const CheckConfig& cfg) {
    if (auto v = preflight(Axiom::GCON, s, g)) return *v;
    const Rational coarse(1, 10);
    const std::array<Rational, 2> fine = {Rational(1, 100), Rational(1, 1000)};

    // Pass 1: slope scale K from the coarsest step, maximized over all base
    // points so piecewise-linear solutions are measured at their steepest
    // sampled segment.
    std::vector<Rational> bases;
    Rational k(0);
    std::size_t skipped = 0;
    for (const Rational& base : alpha_samples(g, cfg)) {
        EvalOutcome at = s(replace_grand(g, base));
        EvalOutcome stepped = s(replace_grand(g, base + coarse));
        if (!at.defined() || !stepped.defined()) {
            ++skipped;
            continue;
        }
        Rational quotient = inf_norm_diff(*stepped.payoffs, *at.payoffs) / coarse;
        if (quotient > k) k = quotient;
        bases.push_back(base);
    }
    if (bases.empty())
        return Verdict::not_applicable("solution undefined at every sampled base point", skipped);

    Tally tally;
    tally.skipped = skipped;
    for (const Rational& base : bases) {
        bool stop = false;
        for (const Rational& eps : fine) {
            if (tally.feed(Axiom::GCON, s, {g},
                           {{"base", base.str()}, {"eps", eps.str()}, {"k", k.str()}})) {
                stop = true;
                break;
            }
        }
        if (stop) break;
    }
    return tally.close("no applicable base point");
}

Verdict check_LCU(const Solution& s, const Game& g, const CheckConfig& cfg) {
    return alpha_family_check(Axiom::LCU, s, g, cfg, "alpha",
                              "no sampled alpha satisfies 0 <= alpha <= v(N)");
}

Verdict check_LCD(const Solution& s, const Game& g, const CheckConfig& cfg) {
    return alpha_family_check(Axiom::LCD, s, g, cfg, "alpha",
                              "no sampled alpha satisfies 0 <= v(N) <= alpha");
}

Verdict check_OGN(const Solution& s, const Game& g, const CheckConfig& cfg) {
    (void)cfg;
    if (auto v = preflight(Axiom::OGN, s, g)) return *v;
    Tally tally;
    tally.feed(Axiom::OGN, s, {g}, {});
    return tally.close("no applicable instantiation");
}

Verdict check_GR(const Solution& s, const Game& g, const CheckConfig& cfg) {
    (void)cfg;
    if (auto v = preflight(Axiom::GR, s, g)) return *v;
    Tally tally;
    tally.feed(Axiom::GR, s, {g}, {});
    return tally.close("no applicable instantiation");
}

Verdict check_E(const Solution& s, const Game& g, const CheckConfig& cfg) {
    (void)cfg;
    if (auto v = preflight(Axiom::E, s, g)) return *v;
    Tally tally;
    tally.feed(Axiom::E, s, {g}, {});
    return tally.close("no applicable instantiation");
}

Verdict check_ER(const Solution& s, const Game& g, const CheckConfig& cfg) {
    (void)cfg;
    if (auto v = preflight(Axiom::ER, s, g)) return *v;
    Tally tally;
    bool stop = false;
    for (int i = 0; i < g.players() && !stop; ++i)
        for (int j = i + 1; j < g.players() && !stop; ++j)
            stop = tally.feed(Axiom::ER, s, {g},
                              {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
    return tally.close("no pair of players with all others null");
}

static Verdict projection_check(Axiom a, const Solution& s, const Game& g, const CheckConfig& cfg,
                                bool pairs_only) {
    (void)cfg;
    if (auto v = preflight(a, s, g)) return *v;
    if (g.players() > 8)
        return Verdict::not_applicable("subset enumeration is capped at 8 players");
    Tally tally;
    const std::uint32_t full = g.grand().bits();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Coalition set(mask);
        if (pairs_only && set.size() != 2) continue;
        bool stop = false;
        for (int i : set.members()) {
            if (tally.feed(a, s, {g}, {{"set", set_to_csv(set)}, {"i", std::to_string(i)}})) {
                stop = true;
                break;
            }
        }
        if (stop) break;
    }
    return tally.close("every projection instantiation was skipped");
}

Verdict check_PNC(const Solution& s, const Game& g, const CheckConfig& cfg) {
    return projection_check(Axiom::PNC, s, g, cfg, false);
}

Verdict check_BPNC(const Solution& s, const Game& g, const CheckConfig& cfg) {
    return projection_check(Axiom::BPNC, s, g, cfg, true);
}

Verdict check_GA(const Solution& s, const Game& g, const CheckConfig& cfg) {
    if (auto v = preflight(Axiom::GA, s, g)) return *v;
    if (count_null_players(g) < g.players() - 2)
        return Verdict::not_applicable("game has more than two non-null players");
    Tally tally;
    for (const Rational& beta : alpha_samples(g, cfg))
        if (tally.feed(Axiom::GA, s, {g}, {{"beta", beta.str()}})) break;
    return tally.close("no applicable grand-worth sample");
}

Verdict check(Axiom a, const Solution& s, const Game& g, const CheckConfig& cfg) {
    switch (a) {
    case Axiom::GH: return check_GH(s, g, cfg);
    case Axiom::GN: return check_GN(s, g, cfg);
    case Axiom::L: return check_L(s, g, cfg);
    case Axiom::CU: return check_CU(s, g, cfg);
    case Axiom::CD: return check_CD(s, g, cfg);
    case Axiom::SIP: return check_SIP(s, g, cfg);
    case Axiom::GCON: return check_GCON(s, g, cfg);
    case Axiom::LCU: return check_LCU(s, g, cfg);
    case Axiom::LCD: return check_LCD(s, g, cfg);
    case Axiom::OGN: return check_OGN(s, g, cfg);
    case Axiom::GR: return check_GR(s, g, cfg);
    case Axiom::E: return check_E(s, g, cfg);
    case Axiom::ER: return check_ER(s, g, cfg);
    case Axiom::PNC: return check_PNC(s, g, cfg);
    case Axiom::BPNC: return check_BPNC(s, g, cfg);
    case Axiom::GA: return check_GA(s, g, cfg);
    }
    raise(Errc::unknown_axiom, "unhandled axiom");
}

bool reevaluate_witness(const Solution& s, const Witness& w) {
    Instance inst = eval_instance(w.axiom, s, w.games, w.params);
    if (!inst.applicable) return false;
    if (!(inst.lhs == w.lhs) || !(inst.rhs == w.rhs)) return false;
    return inst.violated();
}

// --- suite ------------------------------------------------------------------

bool SuiteReport::any_failure() const {
    for (const auto& row : rows)
        if (row.verdict == Verdict::Kind::fails) return true;
    return false;
}

SuiteReport check_suite(const Solution& s, const std::vector<Axiom>& axioms,
                        const std::vector<Game>& games, const CheckConfig& cfg) {
    SuiteReport report;
    report.solution = s.name();
    report.seed = cfg.seed;
    report.games = games.size();
    for (std::size_t ai = 0; ai < axioms.size(); ++ai) {
        SuiteRow row;
        row.axiom = axioms[ai];
        for (std::size_t gi = 0; gi < games.size(); ++gi) {
            CheckConfig cell = cfg;
            cell.seed = Rng::derive(cfg.seed, static_cast<std::uint64_t>(axioms[ai]), gi);
            Verdict v = check(axioms[ai], s, games[gi], cell);
            row.trials += v.trials;
            row.skipped += v.skipped;
            switch (v.kind) {
            case Verdict::Kind::holds:
                ++row.games_held;
                break;
            case Verdict::Kind::fails:
                ++row.games_failed;
                if (!row.witness) row.witness = v.witness;
                break;
            case Verdict::Kind::not_applicable:
                ++row.games_na;
                ++row.na_reasons[v.reason];
                break;
            }
        }
        if (row.games_failed > 0)
            row.verdict = Verdict::Kind::fails;
        else if (row.games_held > 0)
            row.verdict = Verdict::Kind::holds;
        else
            row.verdict = Verdict::Kind::not_applicable;
        report.rows.push_back(std::move(row));
    }
    return report;
}

// --- JSON -------------------------------------------------------------------

static nlohmann::ordered_json value_json(const WitnessValue& v) {
    if (v.scalar) return v.scalar->str();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : v.alloc->payoffs) arr.push_back(p.str());
    return arr;
}

nlohmann::ordered_json witness_json(const Witness& w) {
    nlohmann::ordered_json doc;
    doc["axiom"] = axiom_name(w.axiom);
    doc["solution"] = w.solution;
    doc["equation"] = w.equation;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : w.params) params[k] = v;
    doc["params"] = std::move(params);
    nlohmann::ordered_json games = nlohmann::ordered_json::array();
    for (const auto& g : w.games) games.push_back(game_to_json(g));
    doc["games"] = std::move(games);
    doc["lhs"] = value_json(w.lhs);
    doc["rhs"] = value_json(w.rhs);
    return doc;
}

nlohmann::ordered_json suite_report_json(const SuiteReport& report) {
    nlohmann::ordered_json doc;
    doc["solution"] = report.solution;
    doc["seed"] = report.seed;
    doc["games"] = report.games;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["axiom"] = axiom_name(row.axiom);
        r["verdict"] = verdict_name(row.verdict);
        r["games_held"] = row.games_held;
        r["games_failed"] = row.games_failed;
        r["games_not_applicable"] = row.games_na;
        r["trials"] = row.trials;
        r["skipped"] = row.skipped;
        if (!row.na_reasons.empty()) {
            nlohmann::ordered_json na = nlohmann::ordered_json::object();
            for (const auto& [reason, count] : row.na_reasons) na[reason] = count;
            r["na_reasons"] = std::move(na);
        }
        if (row.axiom == Axiom::GCON && row.verdict == Verdict::Kind::holds)
            r["note"] = "no discontinuity detected";
        if (row.witness) r["witness"] = witness_json(*row.witness);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

} // namespace propdiv
