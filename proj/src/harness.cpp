#include "propdiv/harness.hpp"

#include "propdiv/errors.hpp"
#include "propdiv/rng.hpp"

#include <sstream>

namespace propdiv {

// --- generators ---------------------------------------------------------

Game gen_game(const GeneratorConfig& cfg) {
    if (cfg.players < 2 || cfg.players > k_max_players)
        raise(Errc::player_count, "generator needs 2..16 players");
    if (cfg.domain == DomainClass::vhat && cfg.players < 3)
        raise(Errc::param_error, "VHAT games need at least 3 players");
    Rng rng(cfg.seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        bool non_neg = true;
        if (cfg.domain == DomainClass::vhat)
            non_neg = cfg.sign == SignMode::random_uniform ? rng.coin()
                                                           : cfg.sign == SignMode::non_neg;
        Game g(cfg.players);
        const std::uint32_t full = g.grand().bits();
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            Coalition s(mask);
            Rational w;
            if (cfg.domain == DomainClass::vhat && s.size() == 1)
                w = non_neg ? rng.rational(0, cfg.num_hi, cfg.den_lo, cfg.den_hi)
                            : rng.rational(cfg.num_lo, 0, cfg.den_lo, cfg.den_hi);
            else
                w = rng.rational(cfg.num_lo, cfg.num_hi, cfg.den_lo, cfg.den_hi);
            g.set_worth(s, w);
        }
        if (in_domain(g, cfg.domain)) return g;
    }
    raise(Errc::retry_exhausted, "could not hit the requested game class in 1000 draws");
}

Game gen_w_class(int n, std::uint64_t seed, std::optional<Rational> grand) {
    if (n < 2 || n > k_max_players) raise(Errc::player_count, "generator needs 2..16 players");
    Rng rng(seed);
    Game g(n);
    const std::uint32_t full = g.grand().bits();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Coalition s(mask);
        if (s.size() == 1)
            g.set_worth(s, s.contains(n - 1) ? rng.rational(1, 20) * Rational(rng.coin() ? 1 : -1)
                                             : Rational(0));
        else
            g.set_worth(s, rng.rational(-20, 20));
    }
    if (grand) g.set_worth(g.grand(), *grand);
    return g;
}

Game gen_w_prime_class(int n, std::uint64_t seed, std::optional<Rational> grand) {
    if (n < 2 || n > k_max_players) raise(Errc::player_count, "generator needs 2..16 players");
    Rng rng(seed);
    Game g(n);
    const std::uint32_t full = g.grand().bits();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Coalition s(mask);
        if (s.size() == 1)
            g.set_worth(s, s.contains(0) ? Rational(1) : Rational(0));
        else
            g.set_worth(s, rng.rational(-20, 20));
    }
    if (grand) g.set_worth(g.grand(), *grand);
    return g;
}

Game gen_two_active(int n, int i, int j, std::uint64_t seed) {
    if (n < 3 || n > k_max_players) raise(Errc::player_count, "two-active games need 3..16 players");
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
        raise(Errc::param_error, "active players must be two distinct indices below n");
    Rng rng(seed);
    const Rational sign(rng.coin() ? 1 : -1);
    const Rational a = sign * rng.rational(1, 20);
    const Rational b = sign * rng.rational(1, 20);
    const Rational c = rng.rational(-20, 20);
    const Coalition pair = Coalition::singleton(i).unite(Coalition::singleton(j));
    Game g(n);
    const std::uint32_t full = g.grand().bits();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Coalition s(mask);
        Coalition overlap = s.intersect(pair);
        Rational w(0);
        if (overlap == pair)
            w = c;
        else if (overlap == Coalition::singleton(i))
            w = a;
        else if (overlap == Coalition::singleton(j))
            w = b;
        g.set_worth(s, w);
    }
    return g;
}

Game gen_inessential(const Game& g) { return replace_grand(g, sum_singletons(g)); }

// --- audit table ----------------------------------------------------------

const char* expectation_name(Expectation e) {
    switch (e) {
    case Expectation::holds: return "holds";
    case Expectation::fails_somewhere: return "fails_somewhere";
    case Expectation::not_applicable_everywhere: return "not_applicable_everywhere";
    }
    return "?";
}

namespace {

std::function<SolutionSpec(int)> fixed_spec(std::string text) {
    return [text = std::move(text)](int) { return SolutionSpec::parse(text); };
}

// x = (1, -1, 0, ..., 0) with n-1 entries: nonzero, sums to zero.
SolutionSpec w_fixed_spec(int n) {
    std::string x = "1,-1";
    for (int k = 3; k < n; ++k) x += ",0";
    return SolutionSpec::parse("w_fixed:x=" + x);
}

AuditRow row(std::string name, std::function<SolutionSpec(int)> spec, Axiom a, Expectation e,
             DomainClass d, std::string sampling, std::string claim) {
    AuditRow r;
    r.name = std::move(name);
    r.spec_for_n = std::move(spec);
    r.axiom = a;
    r.expected = e;
    r.domain = d;
    r.sampling = std::move(sampling);
    r.claim = std::move(claim);
    return r;
}

std::vector<AuditRow> build_audit_table() {
    using X = Expectation;
    const auto V = DomainClass::v;
    const auto VH = DomainClass::vhat;
    const auto ALL = DomainClass::all;
    std::vector<AuditRow> t;

    // The proportional rule satisfies the full battery.
    t.push_back(row("proportional/GH", fixed_spec("proportional"), Axiom::GH, X::holds, V, "",
                    "rescaling the grand worth rescales proportional payoffs"));
    t.push_back(row("proportional/GN", fixed_spec("proportional"), Axiom::GN, X::holds, V, "",
                    "dropping the singleton sum from the grand worth drops the singleton vector from payoffs"));
    t.push_back(row("proportional/CU", fixed_spec("proportional"), Axiom::CU, X::holds, V, "",
                    "paying an intermediate grand worth and then the upward residual recovers the full payoff"));
    t.push_back(row("proportional/CD", fixed_spec("proportional"), Axiom::CD, X::holds, V, "",
                    "re-solving the downward residual of any intermediate payoff reproduces the payoff"));
    t.push_back(row("proportional/SIP", fixed_spec("proportional"), Axiom::SIP, X::holds, V, "",
                    "when the grand worth equals the singleton sum, everyone gets their singleton worth"));
    t.push_back(row("proportional/GCON", fixed_spec("proportional"), Axiom::GCON, X::holds, V, "",
                    "payoffs move at a bounded rate along the grand-worth line"));
    t.push_back(row("proportional/LCU", fixed_spec("proportional"), Axiom::LCU, X::holds, V, "",
                    "the upward decomposition already holds on the restricted window 0 <= alpha <= v(N)"));
    t.push_back(row("proportional/LCD", fixed_spec("proportional"), Axiom::LCD, X::holds, V, "",
                    "the downward reconstruction already holds on the restricted window 0 <= v(N) <= alpha"));
    t.push_back(row("proportional/OGN", fixed_spec("proportional"), Axiom::OGN, X::holds, V, "",
                    "the one-sided grand-shift identity holds in both of its sign cases"));
    t.push_back(row("proportional/GR", fixed_spec("proportional"), Axiom::GR, X::holds, V, "",
                    "negating the grand worth negates every payoff"));
    t.push_back(row("proportional/PNC", fixed_spec("proportional"), Axiom::PNC, X::holds, VH, "",
                    "kept players' payoffs survive nullifying the others at their payoffs"));
    t.push_back(row("proportional/BPNC", fixed_spec("proportional"), Axiom::BPNC, X::holds, VH, "",
                    "the two-player form of nullified-projection consistency holds"));
    t.push_back(row("proportional/E", fixed_spec("proportional"), Axiom::E, X::holds, VH, "",
                    "payoffs sum to the grand worth"));
    t.push_back(row("proportional/ER", fixed_spec("proportional"), Axiom::ER, X::holds, VH,
                    "two_active",
                    "with all other players null, payoffs stand in the singleton-worth ratio"));
    t.push_back(row("proportional/GA", fixed_spec("proportional"), Axiom::GA, X::holds, VH,
                    "two_active",
                    "payoffs add across grand-worth splits on games with at most two non-null players"));
    t.push_back(row("proportional/GA@generic", fixed_spec("proportional"), Axiom::GA,
                    X::not_applicable_everywhere, VH, "",
                    "grand additivity never applies when three or more players are non-null"));
    t.push_back(row("proportional/SIP@VHAT", fixed_spec("proportional"), Axiom::SIP, X::holds, VH,
                    "", "the singleton-payoff identity also holds on the sign-restricted class"));
    t.push_back(row("proportional/GCON@VHAT", fixed_spec("proportional"), Axiom::GCON, X::holds,
                    VH, "", "the continuity bound also holds on the sign-restricted class"));

    // Independence companions that satisfy one side of each bundle.
    t.push_back(row("dictatorship/GH", fixed_spec("dictatorship:d=0"), Axiom::GH, X::holds, V, "",
                    "handing the whole grand worth to one player is homogeneous in the grand worth"));
    t.push_back(row("w_fixed/GN", w_fixed_spec, Axiom::GN, X::holds, V, "w_class",
                    "the pinned-vector rule absorbs grand-worth shifts in its last coordinate"));
    t.push_back(row("cis/CU", fixed_spec("cis"), Axiom::CU, X::holds, V, "",
                    "the surplus-sharing rule decomposes upward at every admissible split"));
    t.push_back(row("cis/CD", fixed_spec("cis"), Axiom::CD, X::holds, V, "",
                    "the surplus-sharing rule reconstructs itself from downward residuals"));
    t.push_back(row("cis/SIP", fixed_spec("cis"), Axiom::SIP, X::holds, V, "",
                    "the surplus-sharing rule pays singletons when the surplus vanishes"));
    t.push_back(row("cis/GCON", fixed_spec("cis"), Axiom::GCON, X::holds, V, "",
                    "the surplus-sharing rule moves at rate 1/n along the grand-worth line"));
    t.push_back(row("shifted/CU", fixed_spec("shifted:a=1"), Axiom::CU, X::holds, V, "",
                    "the shifted proportional rule keeps the upward decomposition"));
    t.push_back(row("shifted/CD", fixed_spec("shifted:a=1"), Axiom::CD, X::holds, V, "",
                    "the shifted proportional rule keeps the downward reconstruction"));
    t.push_back(row("shifted/GCON", fixed_spec("shifted:a=1"), Axiom::GCON, X::holds, V, "",
                    "the shifted proportional rule stays continuous along the grand-worth line"));
    t.push_back(row("shifted/GN", fixed_spec("shifted:a=1"), Axiom::GN, X::holds, V, "",
                    "the shifted proportional rule absorbs singleton-sum shifts"));
    t.push_back(row("periodic_perturbation/SIP", fixed_spec("periodic_perturbation"), Axiom::SIP,
                    X::holds, V, "w_prime_class",
                    "the perturbed rule still pays singletons when the grand worth hits their sum"));
    t.push_back(row("periodic_perturbation/GCON", fixed_spec("periodic_perturbation"), Axiom::GCON,
                    X::holds, V, "w_prime_class",
                    "the triangle-wave perturbation is Lipschitz along the grand-worth line"));
    t.push_back(row("periodic_perturbation/GN", fixed_spec("periodic_perturbation"), Axiom::GN,
                    X::holds, V, "w_prime_class",
                    "the unit periodicity of the perturbation absorbs unit grand shifts"));
    t.push_back(row("hybrid_null/E", fixed_spec("hybrid_null"), Axiom::E, X::holds, VH, "",
                    "both branches of the null-count hybrid are efficient"));
    t.push_back(row("hybrid_null/ER", fixed_spec("hybrid_null"), Axiom::ER, X::holds, VH,
                    "two_active",
                    "on games with at most two non-null players the hybrid takes the proportional branch"));
    t.push_back(row("scaled/PNC", fixed_spec("scaled:a=1"), Axiom::PNC, X::holds, VH, "",
                    "the grand-pinned proportional rule keeps kept players' payoffs under nullification"));
    t.push_back(row("scaled/ER", fixed_spec("scaled:a=1"), Axiom::ER, X::holds, VH, "two_active",
                    "the grand-pinned rule still pays in the singleton-worth ratio"));
    t.push_back(row("shapley/L", fixed_spec("shapley"), Axiom::L, X::holds, ALL, "",
                    "the marginal-averaging rule is additive and homogeneous in the game"));
    t.push_back(row("cis/L", fixed_spec("cis"), Axiom::L, X::holds, ALL, "",
                    "the surplus-sharing rule is additive and homogeneous in the game"));
    t.push_back(row("ensc/L", fixed_spec("ensc"), Axiom::L, X::holds, ALL, "",
                    "the complement-based rule is additive and homogeneous in the game"));
    t.push_back(row("equal_division/L", fixed_spec("equal_division"), Axiom::L, X::holds, ALL, "",
                    "equal division is additive and homogeneous in the game"));

    // Each row below certifies a reproducible counterexample.
    t.push_back(row("dictatorship/GN", fixed_spec("dictatorship:d=0"), Axiom::GN,
                    X::fails_somewhere, V, "",
                    "the dictatorship rule does not shift coordinatewise with the singleton sum"));
    t.push_back(row("w_fixed/GH", w_fixed_spec, Axiom::GH, X::fails_somewhere, V, "w_class",
                    "the pinned vector does not rescale with the grand worth"));
    t.push_back(row("cis/GN", fixed_spec("cis"), Axiom::GN, X::fails_somewhere, V, "",
                    "equal surplus sharing does not absorb singleton-sum shifts coordinatewise"));
    t.push_back(row("shifted/SIP", fixed_spec("shifted:a=1"), Axiom::SIP, X::fails_somewhere, V,
                    "", "the shifted rule pays non-singleton amounts on inessential-at-grand games"));
    t.push_back(row("periodic_perturbation/CU", fixed_spec("periodic_perturbation"), Axiom::CU,
                    X::fails_somewhere, V, "w_prime_class",
                    "the perturbation breaks the upward decomposition at non-special grand worths"));
    t.push_back(row("periodic_perturbation/CD", fixed_spec("periodic_perturbation"), Axiom::CD,
                    X::fails_somewhere, V, "w_prime_class",
                    "the perturbation breaks the downward reconstruction at non-special grand worths"));
    t.push_back(row("hybrid_null/PNC", fixed_spec("hybrid_null"), Axiom::PNC, X::fails_somewhere,
                    VH, "",
                    "nullification can flip the hybrid's branch and change a kept player's payoff"));
    t.push_back(row("scaled/E", fixed_spec("scaled:a=1"), Axiom::E, X::fails_somewhere, VH, "",
                    "the grand-pinned rule pays the pinned total rather than the grand worth"));
    t.push_back(row("shapley/GN", fixed_spec("shapley"), Axiom::GN, X::fails_somewhere, V, "",
                    "marginal averaging does not absorb singleton-sum shifts coordinatewise"));
    t.push_back(row("ensc/GN", fixed_spec("ensc"), Axiom::GN, X::fails_somewhere, V, "",
                    "the complement-based rule does not absorb singleton-sum shifts coordinatewise"));
    t.push_back(row("equal_division/GN", fixed_spec("equal_division"), Axiom::GN,
                    X::fails_somewhere, V, "",
                    "equal division ignores singleton worths and misses the shifted target"));
    return t;
}

} // namespace

const std::vector<AuditRow>& audit_table() {
    static const std::vector<AuditRow> t = build_audit_table();
    return t;
}

// --- audit runner -----------------------------------------------------------

namespace {

std::pair<int, int> nth_pair(int n, std::size_t p) {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (idx++ == p) return {i, j};
    return {0, 1};
}

Game audit_game(const AuditRow& r, int n, std::size_t t, std::uint64_t seed) {
    const bool targeted = (t % 2 == 0) && !r.sampling.empty();
    if (targeted) {
        if (r.sampling == "w_class") return gen_w_class(n, seed);
        if (r.sampling == "w_prime_class") return gen_w_prime_class(n, seed);
        if (r.sampling == "two_active") {
            auto [i, j] = nth_pair(n, (t / 2) % (static_cast<std::size_t>(n) * (n - 1) / 2));
            return gen_two_active(n, i, j, seed);
        }
        raise(Errc::param_error, "unknown sampling kind \"" + r.sampling + "\"");
    }
    GeneratorConfig cfg;
    cfg.players = n;
    cfg.domain = r.domain;
    cfg.seed = seed;
    return gen_game(cfg);
}

bool verdict_matches(Expectation e, Verdict::Kind k) {
    switch (e) {
    case Expectation::holds: return k == Verdict::Kind::holds;
    case Expectation::fails_somewhere: return k == Verdict::Kind::fails;
    case Expectation::not_applicable_everywhere: return k == Verdict::Kind::not_applicable;
    }
    return false;
}

} // namespace

AuditReport run_audit(std::uint64_t seed, std::size_t trials) {
    AuditReport report;
    report.seed = seed;
    report.trials_per_row = trials;
    report.all_match = true;
    const auto& table = audit_table();
    for (std::size_t ri = 0; ri < table.size(); ++ri) {
        const AuditRow& r = table[ri];
        AuditRowResult out;
        out.name = r.name;
        out.solution = r.spec_for_n(3).str();
        out.axiom = r.axiom;
        out.expected = r.expected;
        out.claim = r.claim;

        Solution sols[3] = {resolve(r.spec_for_n(3)), resolve(r.spec_for_n(4)),
                            resolve(r.spec_for_n(5))};
        for (std::size_t t = 0; t < trials; ++t) {
            const int n = 3 + static_cast<int>(t % 3);
            const std::uint64_t game_seed = Rng::derive(seed, ri, t);
            Game g = audit_game(r, n, t, game_seed);
            CheckConfig cfg;
            cfg.seed = game_seed;
            Verdict v = check(r.axiom, sols[n - 3], g, cfg);
            out.trials += v.trials;
            out.skipped += v.skipped;
            switch (v.kind) {
            case Verdict::Kind::holds:
                ++out.games_held;
                break;
            case Verdict::Kind::fails:
                ++out.games_failed;
                if (!out.witness) out.witness = v.witness;
                break;
            case Verdict::Kind::not_applicable:
                ++out.games_na;
                ++out.na_reasons[v.reason];
                break;
            }
        }
        if (out.games_failed > 0)
            out.observed = Verdict::Kind::fails;
        else if (out.games_held > 0)
            out.observed = Verdict::Kind::holds;
        else
            out.observed = Verdict::Kind::not_applicable;
        if (out.witness) {
            const int n = out.witness->games.at(0).players();
            out.witness_sound = reevaluate_witness(sols[n - 3], *out.witness);
        }
        out.match = verdict_matches(out.expected, out.observed) &&
                    (out.observed != Verdict::Kind::fails || out.witness_sound);
        report.all_match = report.all_match && out.match;
        report.rows.push_back(std::move(out));
    }
    report.notes.push_back(
        "the continuity probe samples rational base points only; a jump placed at an "
        "irrational grand worth is outside exact rational arithmetic and is covered "
        "analytically by the synthetic step fixture in the unit tests");
    report.notes.push_back(
        "scaled/PNC: the expected verdict recorded in this table is \"holds\", but the checker "
        "finds a reproducible counterexample, so the row reports a mismatch by design; see "
        "README \"Known deviation\" for the analysis");
    return report;
}

// --- reporting -----------------------------------------------------------

nlohmann::ordered_json audit_json(const AuditReport& report) {
    nlohmann::ordered_json doc;
    doc["seed"] = report.seed;
    doc["trials_per_row"] = report.trials_per_row;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["solution"] = r.solution;
        row["axiom"] = axiom_name(r.axiom);
        row["expected"] = expectation_name(r.expected);
        row["observed"] = verdict_name(r.observed);
        row["match"] = r.match;
        row["games_held"] = r.games_held;
        row["games_failed"] = r.games_failed;
        row["games_not_applicable"] = r.games_na;
        row["trials"] = r.trials;
        row["skipped"] = r.skipped;
        if (!r.na_reasons.empty()) {
            nlohmann::ordered_json na = nlohmann::ordered_json::object();
            for (const auto& [reason, count] : r.na_reasons) na[reason] = count;
            row["na_reasons"] = std::move(na);
        }
        if (r.witness) {
            row["witness_sound"] = r.witness_sound;
            row["witness"] = witness_json(*r.witness);
        }
        row["claim"] = r.claim;
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["all_match"] = report.all_match;
    doc["notes"] = report.notes;
    return doc;
}

std::string audit_summary(const AuditReport& report) {
    std::ostringstream out;
    out << "audit: seed=" << report.seed << " trials_per_row=" << report.trials_per_row << "\n";
    out << "  " << std::string(30, '-') << "+----------------+----------------+------\n";
    for (const auto& r : report.rows) {
        std::string name = r.name;
        if (name.size() < 30) name.resize(30, ' ');
        std::string exp = expectation_name(r.expected);
        if (exp.size() < 16) exp.resize(16, ' ');
        std::string obs = verdict_name(r.observed);
        if (obs.size() < 16) obs.resize(16, ' ');
        out << "  " << name << "| " << exp << "| " << obs << "| "
            << (r.match ? "ok" : "MISMATCH") << "\n";
    }
    std::size_t mismatches = 0;
    for (const auto& r : report.rows)
        if (!r.match) ++mismatches;
    out << "  rows=" << report.rows.size() << " mismatches=" << mismatches
        << (report.all_match ? " (all rows match)" : "") << "\n";
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
    return out.str();
}

} // namespace propdiv
