#include "propdiv/axioms.hpp"
#include "propdiv/errors.hpp"
#include "propdiv/harness.hpp"
#include "propdiv/residuals.hpp"

#include <doctest.h>

using namespace propdiv;

namespace {

Game v3() {
    Game g(3);
    g.set_worth(Coalition::of({0}), Rational(1));
    g.set_worth(Coalition::of({1}), Rational(2));
    g.set_worth(Coalition::of({2}), Rational(3));
    g.set_worth(Coalition::of({0, 1}), Rational(4));
    g.set_worth(Coalition::of({0, 2}), Rational(5));
    g.set_worth(Coalition::of({1, 2}), Rational(6));
    g.set_worth(Coalition::of({0, 1, 2}), Rational(12));
    return g;
}

// players {0, 1} active, player 2 null, grand worth 5
Game two_active_fixture() {
    Game g(3);
    g.set_worth(Coalition::of({0}), Rational(1));
    g.set_worth(Coalition::of({1}), Rational(2));
    g.set_worth(Coalition::of({2}), Rational(0));
    g.set_worth(Coalition::of({0, 1}), Rational(5));
    g.set_worth(Coalition::of({0, 2}), Rational(1));
    g.set_worth(Coalition::of({1, 2}), Rational(2));
    g.set_worth(Coalition::of({0, 1, 2}), Rational(5));
    return g;
}

Solution sol(const char* text) { return resolve(SolutionSpec::parse(text)); }

const CheckConfig k_cfg{7, 32, 32};

} // namespace

TEST_CASE("alpha samples: fixed adversarial head, seeded tail") {
    Game g = v3();
    auto samples = alpha_samples(g, k_cfg);
    REQUIRE(samples.size() == 42);
    CHECK(samples[0] == Rational(-2));
    CHECK(samples[1] == Rational(-1));
    CHECK(samples[2] == Rational(-1, 2));
    CHECK(samples[3] == Rational(0));
    CHECK(samples[4] == Rational(1, 2));
    CHECK(samples[5] == Rational(1));
    CHECK(samples[6] == Rational(3, 2));
    CHECK(samples[7] == Rational(12)); // the grand worth itself
    CHECK(samples[8] == Rational(6));  // the singleton sum
    CHECK(samples[9] == Rational(13)); // grand worth + 1
    CHECK(alpha_samples(g, k_cfg) == samples); // deterministic
    CheckConfig other = k_cfg;
    other.seed = 8;
    CHECK(alpha_samples(g, other) != samples);
}

TEST_CASE("axiom names, bundles, and quantification classes") {
    CHECK(parse_axiom("GH") == Axiom::GH);
    CHECK(parse_axiom("BPNC") == Axiom::BPNC);
    CHECK_THROWS_AS(parse_axiom("nope"), Error);
    for (Axiom a : all_axioms()) CHECK(parse_axiom(axiom_name(a)) == a);
    CHECK(all_axioms().size() == 16);

    CHECK(theorem_axioms(1) == std::vector<Axiom>{Axiom::GH, Axiom::GN});
    CHECK(theorem_axioms(2) == std::vector<Axiom>{Axiom::CU, Axiom::CD, Axiom::SIP, Axiom::GCON});
    CHECK(theorem_axioms(3) == std::vector<Axiom>{Axiom::LCU, Axiom::LCD, Axiom::OGN, Axiom::GR});
    CHECK(theorem_axioms(4) == std::vector<Axiom>{Axiom::PNC, Axiom::BPNC, Axiom::E, Axiom::ER});
    CHECK(theorem_axioms(5) == std::vector<Axiom>{Axiom::PNC, Axiom::SIP, Axiom::GA, Axiom::GCON});
    CHECK_THROWS_AS(theorem_axioms(0), Error);
    CHECK_THROWS_AS(theorem_axioms(6), Error);

    CHECK(axiom_domain(Axiom::L) == DomainClass::all);
    CHECK(axiom_domain(Axiom::GH) == DomainClass::v);
    CHECK(axiom_domain(Axiom::E) == DomainClass::vhat);
    CHECK(axiom_domain(Axiom::GA) == DomainClass::vhat);
}

TEST_CASE("GH: proportional scales, the pinned-vector rule does not") {
    Verdict ok = check_GH(sol("proportional"), v3(), k_cfg);
    CHECK(ok.kind == Verdict::Kind::holds);
    CHECK(ok.trials == 42);

    Game w = gen_w_class(3, 11);
    Solution wf = sol("w_fixed:x=1,-1");
    Verdict bad = check_GH(wf, w, k_cfg);
    REQUIRE(bad.kind == Verdict::Kind::fails);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->axiom == Axiom::GH);
    CHECK(reevaluate_witness(wf, *bad.witness));
}

TEST_CASE("GN: exact witness for equal division") {
    Solution ed = sol("equal_division");
    Verdict v = check_GN(ed, v3(), k_cfg);
    REQUIRE(v.kind == Verdict::Kind::fails);
    REQUIRE(v.witness.has_value());
    // phi(regrand(v, 6)) = (2,2,2); phi(v) - singletons = (4,4,4) - (1,2,3) = (3,2,1)
    Allocation lhs(std::vector<Rational>{Rational(2), Rational(2), Rational(2)});
    Allocation rhs(std::vector<Rational>{Rational(3), Rational(2), Rational(1)});
    CHECK(v.witness->lhs == WitnessValue::of(lhs));
    CHECK(v.witness->rhs == WitnessValue::of(rhs));
    CHECK(reevaluate_witness(ed, *v.witness));

    for (const char* other : {"shapley", "ensc", "cis", "dictatorship:d=0"}) {
        CAPTURE(other);
        Verdict w = check_GN(sol(other), v3(), k_cfg);
        CHECK(w.kind == Verdict::Kind::fails);
        REQUIRE(w.witness.has_value());
        CHECK(reevaluate_witness(sol(other), *w.witness));
    }
    CHECK(check_GN(sol("proportional"), v3(), k_cfg).kind == Verdict::Kind::holds);
    CHECK(check_GN(sol("w_fixed:x=1,-1"), gen_w_class(3, 11), k_cfg).kind ==
          Verdict::Kind::holds);
}

TEST_CASE("L: the four linear rules pass, proportional does not") {
    for (const char* name : {"shapley", "cis", "ensc", "equal_division"}) {
        CAPTURE(name);
        Verdict v = check_L(sol(name), v3(), k_cfg);
        CHECK(v.kind == Verdict::Kind::holds);
        CHECK(v.trials == 2 * k_cfg.pair_samples); // one add + one scale per draw
    }
    Verdict bad = check_L(sol("proportional"), v3(), k_cfg);
    CHECK(bad.kind == Verdict::Kind::fails);
    REQUIRE(bad.witness.has_value());
    CHECK(reevaluate_witness(sol("proportional"), *bad.witness));
}

TEST_CASE("CU and CD: proportional decomposes at every admissible split") {
    Verdict up = check_CU(sol("proportional"), v3(), k_cfg);
    CHECK(up.kind == Verdict::Kind::holds);
    CHECK(up.trials + up.skipped == 42);
    CHECK(up.skipped >= 2); // alpha = v(N) is inadmissible; alpha = s1 empties the residual class

    Verdict down = check_CD(sol("proportional"), v3(), k_cfg);
    CHECK(down.kind == Verdict::Kind::holds);
    CHECK(down.trials + down.skipped == 42);
    CHECK(down.skipped >= 1); // alpha = 0 makes the payoff sum to zero

    for (const char* name : {"cis", "shifted:a=1"}) {
        CAPTURE(name);
        CHECK(check_CU(sol(name), v3(), k_cfg).kind == Verdict::Kind::holds);
        CHECK(check_CD(sol(name), v3(), k_cfg).kind == Verdict::Kind::holds);
    }
}

TEST_CASE("CU and CD: the periodic perturbation breaks both on its class") {
    Game wp = gen_w_prime_class(3, 3, Rational(9, 8));
    Solution pp = sol("periodic_perturbation");
    Verdict up = check_CU(pp, wp, k_cfg);
    REQUIRE(up.kind == Verdict::Kind::fails);
    CHECK(reevaluate_witness(pp, *up.witness));

    Verdict down = check_CD(pp, wp, k_cfg);
    REQUIRE(down.kind == Verdict::Kind::fails);
    CHECK(reevaluate_witness(pp, *down.witness));

    // off the special class the rule is plain proportional and decomposes fine
    CHECK(check_CU(pp, v3(), k_cfg).kind == Verdict::Kind::holds);
    CHECK(check_CD(pp, v3(), k_cfg).kind == Verdict::Kind::holds);
}

TEST_CASE("SIP: exact witness for the shifted rule") {
    CHECK(check_SIP(sol("proportional"), v3(), k_cfg).kind == Verdict::Kind::holds);

    Verdict v = check_SIP(sol("shifted:a=1"), v3(), k_cfg);
    REQUIRE(v.kind == Verdict::Kind::fails);
    // phi(regrand(v, 6)) = (5/6, 5/3, 5/2) but the singletons are (1, 2, 3)
    CHECK(v.witness->lhs ==
          WitnessValue::of(Allocation(std::vector<Rational>{Rational(5, 6), Rational(5, 3), Rational(5, 2)})));
    CHECK(v.witness->rhs ==
          WitnessValue::of(Allocation(std::vector<Rational>{Rational(1), Rational(2), Rational(3)})));
    CHECK(reevaluate_witness(sol("shifted:a=1"), *v.witness));
}

TEST_CASE("GCON: Lipschitz rules pass, a jump is caught") {
    for (const char* name : {"proportional", "cis", "shifted:a=1"}) {
        CAPTURE(name);
        Verdict v = check_GCON(sol(name), v3(), k_cfg);
        CHECK(v.kind == Verdict::Kind::holds);
        CHECK(v.trials == 2 * 42); // two fine steps per base point
    }
    // the triangle wave: steep (slope 5) but still Lipschitz
    Verdict pp = check_GCON(sol("periodic_perturbation"), gen_w_prime_class(3, 3, Rational(9, 8)),
                            k_cfg);
    CHECK(pp.kind == Verdict::Kind::holds);

    // synthetic fixture with a genuine jump at grand worth 0
    Solution step(SolutionSpec{"step_fixture", {}}, [](const Game& g) {
        if (!in_domain(g, DomainClass::v)) return EvalOutcome::undefined("outside V");
        Allocation x = proportional(g);
        if (g.worth(g.grand()).sign() > 0) x[0] += Rational(1);
        return EvalOutcome::ok(x);
    });
    Verdict bad = check_GCON(step, v3(), k_cfg);
    REQUIRE(bad.kind == Verdict::Kind::fails);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->params.size() == 3); // base, eps, k
    CHECK(reevaluate_witness(step, *bad.witness));
}

TEST_CASE("LCU and LCD: the window guards skip out-of-range grand worths") {
    Verdict lcu = check_LCU(sol("proportional"), v3(), k_cfg);
    CHECK(lcu.kind == Verdict::Kind::holds);
    CHECK(lcu.skipped > 0);
    CHECK(lcu.trials + lcu.skipped == 42);

    Verdict lcd = check_LCD(sol("proportional"), v3(), k_cfg);
    CHECK(lcd.kind == Verdict::Kind::holds);
    CHECK(lcd.skipped > 0);

    // negative grand worth: the downward window is empty
    Game neg = replace_grand(v3(), Rational(-4));
    Verdict na = check_LCD(sol("proportional"), neg, k_cfg);
    CHECK(na.kind == Verdict::Kind::not_applicable);
    CHECK(na.reason == "no sampled alpha satisfies 0 <= v(N) <= alpha");
}

TEST_CASE("OGN: both sign cases") {
    Solution p = sol("proportional");
    CHECK(check_OGN(p, v3(), k_cfg).kind == Verdict::Kind::holds); // s1 < v(N)
    CHECK(check_OGN(p, replace_grand(v3(), Rational(3)), k_cfg).kind ==
          Verdict::Kind::holds); // s1 >= v(N)
    CHECK(check_OGN(sol("dictatorship:d=0"), v3(), k_cfg).kind == Verdict::Kind::fails);
}

TEST_CASE("GR: reflection holds for proportional, fails for surplus sharing") {
    CHECK(check_GR(sol("proportional"), v3(), k_cfg).kind == Verdict::Kind::holds);
    Verdict v = check_GR(sol("cis"), v3(), k_cfg);
    REQUIRE(v.kind == Verdict::Kind::fails);
    // phi(v) = (3,4,5) but -phi(regrand(v, -12)) = (5,4,3)
    CHECK(v.witness->lhs ==
          WitnessValue::of(Allocation(std::vector<Rational>{Rational(3), Rational(4), Rational(5)})));
    CHECK(v.witness->rhs ==
          WitnessValue::of(Allocation(std::vector<Rational>{Rational(5), Rational(4), Rational(3)})));
}

TEST_CASE("rules satisfying GR make GN and OGN agree game by game") {
    // the one-sided identity is the two-sided one modulo reflection, so any
    // reflective rule must receive identical verdict kinds from both checkers
    for (const char* name : {"proportional", "dictatorship:d=0", "periodic_perturbation"}) {
        CAPTURE(name);
        Solution s = sol(name);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            GeneratorConfig gc;
            gc.players = 3 + static_cast<int>(seed % 3);
            gc.seed = seed;
            Game g = gen_game(gc);
            REQUIRE(check_GR(s, g, k_cfg).kind == Verdict::Kind::holds);
            CHECK(check_GN(s, g, k_cfg).kind == check_OGN(s, g, k_cfg).kind);
        }
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Game g = gen_w_prime_class(3, seed);
            REQUIRE(check_GR(s, g, k_cfg).kind == Verdict::Kind::holds);
            CHECK(check_GN(s, g, k_cfg).kind == check_OGN(s, g, k_cfg).kind);
        }
    }
}

TEST_CASE("E: efficiency scalar witness") {
    CHECK(check_E(sol("proportional"), v3(), k_cfg).kind == Verdict::Kind::holds);
    Verdict v = check_E(sol("scaled:a=1"), v3(), k_cfg);
    REQUIRE(v.kind == Verdict::Kind::fails);
    CHECK(v.witness->lhs == WitnessValue::of(Rational(1)));  // pays the pinned total
    CHECK(v.witness->rhs == WitnessValue::of(Rational(12))); // not the grand worth
    CHECK(reevaluate_witness(sol("scaled:a=1"), *v.witness));
}

TEST_CASE("ER: applicable only when the pair is alone among non-null players") {
    Game g = two_active_fixture();
    Verdict v = check_ER(sol("proportional"), g, k_cfg);
    CHECK(v.kind == Verdict::Kind::holds);
    CHECK(v.trials == 1);  // only the pair {0, 1}
    CHECK(v.skipped == 2); // {0, 2} and {1, 2} have a non-null outsider

    CHECK(check_ER(sol("proportional"), v3(), k_cfg).kind == Verdict::Kind::not_applicable);
    CHECK(check_ER(sol("scaled:a=1"), g, k_cfg).kind == Verdict::Kind::holds);
    CHECK(check_ER(sol("hybrid_null"), g, k_cfg).kind == Verdict::Kind::holds);
}

TEST_CASE("PNC: proportional survives projection, the hybrid flips branches") {
    CHECK(check_PNC(sol("proportional"), v3(), k_cfg).kind == Verdict::Kind::holds);
    CHECK(check_BPNC(sol("proportional"), v3(), k_cfg).kind == Verdict::Kind::holds);

    Solution hy = sol("hybrid_null");
    Verdict v = check_PNC(hy, v3(), k_cfg);
    REQUIRE(v.kind == Verdict::Kind::fails);
    REQUIRE(v.witness.has_value());
    // first violation in subset order: S = {0,1}; the projection has n-2 null
    // players, so the projected side switches to the proportional branch
    CHECK(v.witness->params ==
          std::vector<std::pair<std::string, std::string>>{{"set", "0,1"}, {"i", "0"}});
    CHECK(v.witness->lhs == WitnessValue::of(Rational(3)));
    CHECK(v.witness->rhs == WitnessValue::of(Rational(7, 3)));
    CHECK(reevaluate_witness(hy, *v.witness));

    Verdict b = check_BPNC(hy, v3(), k_cfg);
    REQUIRE(b.kind == Verdict::Kind::fails);
    CHECK(b.witness->params ==
          std::vector<std::pair<std::string, std::string>>{{"set", "0,1"}, {"i", "0"}});
}

TEST_CASE("PNC: the grand-pinned rule fails already at singleton projections") {
    Solution sc = sol("scaled:a=1");
    Verdict v = check_PNC(sc, v3(), k_cfg);
    REQUIRE(v.kind == Verdict::Kind::fails);
    // phi_0(v) = 1/6, but the projected one-survivor game pays the pinned total 1
    CHECK(v.witness->params ==
          std::vector<std::pair<std::string, std::string>>{{"set", "0"}, {"i", "0"}});
    CHECK(v.witness->lhs == WitnessValue::of(Rational(1, 6)));
    CHECK(v.witness->rhs == WitnessValue::of(Rational(1)));
    CHECK(reevaluate_witness(sc, *v.witness));
}

TEST_CASE("GA: additive on nearly-null games, not applicable elsewhere") {
    Game g = two_active_fixture();
    Verdict v = check_GA(sol("proportional"), g, k_cfg);
    CHECK(v.kind == Verdict::Kind::holds);
    CHECK(v.trials == 42);

    Verdict na = check_GA(sol("proportional"), v3(), k_cfg);
    CHECK(na.kind == Verdict::Kind::not_applicable);
    CHECK(na.reason == "game has more than two non-null players");
}

TEST_CASE("checkers report class mismatches as not applicable") {
    Game zero_sum = v3();
    zero_sum.set_worth(Coalition::of({2}), Rational(-3)); // singleton sum = 0
    Verdict v = check_GH(sol("proportional"), zero_sum, k_cfg);
    CHECK(v.kind == Verdict::Kind::not_applicable);
    CHECK(v.reason == "game outside V");

    Game mixed = v3();
    mixed.set_worth(Coalition::of({2}), Rational(-1)); // in V, not in VHAT
    Verdict e = check_E(sol("proportional"), mixed, k_cfg);
    CHECK(e.kind == Verdict::Kind::not_applicable);
    CHECK(e.reason == "game outside VHAT");

    // game inside the axiom's class but outside the solution's: the checker
    // reports not-applicable and echoes why the solution refused
    Verdict u = check_GH(sol("hybrid_null"), mixed, k_cfg);
    CHECK(u.kind == Verdict::Kind::not_applicable);
    CHECK(u.reason.find("solution undefined on the game") == 0);
}

TEST_CASE("witness re-evaluation rejects tampering") {
    Solution ed = sol("equal_division");
    Verdict v = check_GN(ed, v3(), k_cfg);
    REQUIRE(v.witness.has_value());
    REQUIRE(reevaluate_witness(ed, *v.witness));

    Witness forged = *v.witness;
    forged.lhs = WitnessValue::of(Rational(99));
    CHECK(!reevaluate_witness(ed, forged));

    Witness healed = *v.witness;
    // claim the equation held: both sides equal; recomputation must refuse it
    healed.rhs = healed.lhs;
    CHECK(!reevaluate_witness(ed, healed));

    Witness other_game = *v.witness;
    other_game.games[0] = replace_grand(v3(), Rational(0));
    CHECK(!reevaluate_witness(ed, other_game));
}

TEST_CASE("witness JSON carries everything needed to replay") {
    Solution hy = sol("hybrid_null");
    Verdict v = check_PNC(hy, v3(), k_cfg);
    REQUIRE(v.witness.has_value());
    auto doc = witness_json(*v.witness);
    CHECK(doc["axiom"] == "PNC");
    CHECK(doc["solution"] == "hybrid_null");
    CHECK(doc["params"]["set"] == "0,1");
    CHECK(doc["lhs"] == "3");
    CHECK(doc["rhs"] == "7/3");
    CHECK(doc["games"].size() == 1);
    CHECK(doc["equation"].get<std::string>().find("phi_i") == 0);
}

TEST_CASE("suite: per-axiom aggregation over a game list") {
    std::vector<Game> games = {v3(), replace_grand(v3(), Rational(-4)), two_active_fixture()};
    CheckConfig cfg;
    cfg.seed = 5;
    SuiteReport rep = check_suite(sol("proportional"), all_axioms(), games, cfg);
    REQUIRE(rep.rows.size() == 16);
    CHECK(rep.solution == "proportional");
    CHECK(rep.games == 3);

    for (const auto& row : rep.rows) {
        CAPTURE(axiom_name(row.axiom));
        if (row.axiom == Axiom::L) continue; // proportional is not linear
        CHECK(row.games_failed == 0);
        CHECK(row.games_held + row.games_na == 3);
    }
    // the linearity row is the only failing one
    CHECK(rep.any_failure());
    for (const auto& row : rep.rows)
        if (row.axiom == Axiom::L) {
            CHECK(row.verdict == Verdict::Kind::fails);
            REQUIRE(row.witness.has_value());
            CHECK(reevaluate_witness(sol("proportional"), *row.witness));
        }

    // byte-identical JSON across repeated runs
    SuiteReport again = check_suite(sol("proportional"), all_axioms(), games, cfg);
    CHECK(suite_report_json(rep).dump(2) == suite_report_json(again).dump(2));
}

TEST_CASE("suite: NA reasons are tallied per row") {
    std::vector<Game> games = {v3()}; // VHAT game, no null players
    CheckConfig cfg;
    cfg.seed = 5;
    SuiteReport rep = check_suite(sol("proportional"), {Axiom::GA, Axiom::ER}, games, cfg);
    for (const auto& row : rep.rows) {
        CHECK(row.verdict == Verdict::Kind::not_applicable);
        REQUIRE(row.na_reasons.size() == 1);
        CHECK(row.na_reasons.begin()->second == 1);
    }
    CHECK(!rep.any_failure());
}
