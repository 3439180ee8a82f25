#include "propdiv/errors.hpp"
#include "propdiv/harness.hpp"
#include "propdiv/solutions.hpp"

#include <doctest.h>

#include <set>

using namespace propdiv;

TEST_CASE("gen_game: deterministic and lands in the requested class") {
    GeneratorConfig cfg;
    cfg.players = 4;
    cfg.seed = 99;
    Game a = gen_game(cfg);
    Game b = gen_game(cfg);
    CHECK(a == b);
    CHECK(a.players() == 4);
    CHECK(in_domain(a, DomainClass::v));
    CHECK(a.worth(Coalition()) == Rational(0));

    cfg.seed = 100;
    CHECK(gen_game(cfg) != a);
}

TEST_CASE("gen_game: VHAT draws respect the sign mode") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorConfig cfg;
        cfg.players = 3 + static_cast<int>(seed % 3);
        cfg.domain = DomainClass::vhat;
        cfg.seed = seed;

        cfg.sign = SignMode::non_neg;
        Game g = gen_game(cfg);
        REQUIRE(in_domain(g, DomainClass::vhat));
        for (int i = 0; i < g.players(); ++i)
            CHECK(g.worth(Coalition::singleton(i)).sign() >= 0);

        cfg.sign = SignMode::non_pos;
        Game h = gen_game(cfg);
        REQUIRE(in_domain(h, DomainClass::vhat));
        for (int i = 0; i < h.players(); ++i)
            CHECK(h.worth(Coalition::singleton(i)).sign() <= 0);

        cfg.sign = SignMode::random_uniform;
        CHECK(in_domain(gen_game(cfg), DomainClass::vhat));
    }
}

TEST_CASE("gen_game: domain V draws stay in V across sizes") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorConfig cfg;
        cfg.players = 2 + static_cast<int>(seed % 5);
        cfg.seed = seed;
        CHECK(in_domain(gen_game(cfg), DomainClass::v));
    }
}

TEST_CASE("gen_game: parameter validation") {
    GeneratorConfig cfg;
    cfg.players = 1;
    CHECK_THROWS_AS(gen_game(cfg), Error);
    cfg.players = 17;
    CHECK_THROWS_AS(gen_game(cfg), Error);
    cfg.players = 2;
    cfg.domain = DomainClass::vhat; // needs n >= 3
    CHECK_THROWS_AS(gen_game(cfg), Error);
}

TEST_CASE("gen_w_class: only the last singleton is worth anything") {
    Game g = gen_w_class(4, 5);
    REQUIRE(g.players() == 4);
    for (int i = 0; i < 3; ++i) CHECK(g.worth(Coalition::singleton(i)) == Rational(0));
    Rational last = g.worth(Coalition::singleton(3));
    CHECK(last != Rational(0));
    CHECK(in_domain(g, DomainClass::v));
    CHECK(sum_singletons(g) == last);
    CHECK(gen_w_class(4, 5) == g);

    Game pinned = gen_w_class(3, 5, Rational(9, 8));
    CHECK(pinned.worth(pinned.grand()) == Rational(9, 8));
}

TEST_CASE("gen_w_prime_class: singleton worths are exactly (1, 0, ..., 0)") {
    Game g = gen_w_prime_class(5, 21);
    CHECK(g.worth(Coalition::singleton(0)) == Rational(1));
    for (int i = 1; i < 5; ++i) CHECK(g.worth(Coalition::singleton(i)) == Rational(0));
    CHECK(sum_singletons(g) == Rational(1));
    Game pinned = gen_w_prime_class(3, 21, Rational(-7, 3));
    CHECK(pinned.worth(pinned.grand()) == Rational(-7, 3));
}

TEST_CASE("gen_two_active: everyone outside the pair is null") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Game g = gen_two_active(4, 1, 3, seed);
        REQUIRE(in_domain(g, DomainClass::vhat));
        CHECK(!is_null_player(g, 1));
        CHECK(!is_null_player(g, 3));
        CHECK(is_null_player(g, 0));
        CHECK(is_null_player(g, 2));
        CHECK(count_null_players(g) == 2);
        // worth depends only on the overlap with the pair
        CHECK(g.worth(g.grand()) == g.worth(Coalition::of({1, 3})));
        CHECK(g.worth(Coalition::of({0, 1})) == g.worth(Coalition::singleton(1)));
        CHECK(g.worth(Coalition::of({0, 2})) == Rational(0));
        // the two active singletons share a strict sign
        CHECK(g.worth(Coalition::singleton(1)).sign() ==
              g.worth(Coalition::singleton(3)).sign());
        CHECK(g.worth(Coalition::singleton(1)).sign() != 0);
    }
    CHECK_THROWS_AS(gen_two_active(3, 1, 1, 0), Error);
    CHECK_THROWS_AS(gen_two_active(3, 0, 3, 0), Error);
}

TEST_CASE("gen_inessential: proportional pays the singletons themselves") {
    GeneratorConfig cfg;
    cfg.seed = 31;
    Game g = gen_game(cfg);
    Game flat = gen_inessential(g);
    CHECK(flat.worth(flat.grand()) == sum_singletons(g));
    CHECK(proportional(flat) == singleton_vector(flat));
}

TEST_CASE("audit table: fifty rows, unique names, stated claims") {
    const auto& table = audit_table();
    CHECK(table.size() == 50);
    std::set<std::string> names;
    for (const auto& row : table) {
        CAPTURE(row.name);
        names.insert(row.name);
        CHECK(!row.claim.empty());
        REQUIRE(row.spec_for_n);
        // the per-size spec must resolve for every audited player count
        for (int n : {3, 4, 5}) CHECK(resolve(row.spec_for_n(n)).spec().name.size() > 0);
    }
    CHECK(names.size() == 50);

    std::size_t fails_rows = 0;
    for (const auto& row : table)
        if (row.expected == Expectation::fails_somewhere) ++fails_rows;
    CHECK(fails_rows == 11);
}

TEST_CASE("audit run: deterministic JSON, sound witnesses") {
    AuditReport rep = run_audit(7, 4);
    REQUIRE(rep.rows.size() == 50);
    CHECK(rep.seed == 7);
    CHECK(rep.trials_per_row == 4);

    for (const auto& row : rep.rows) {
        CAPTURE(row.name);
        CHECK(row.games_held + row.games_failed + row.games_na == 4);
        if (row.observed == Verdict::Kind::fails) {
            REQUIRE(row.witness.has_value());
            CHECK(row.witness_sound);
        }
    }

    AuditReport again = run_audit(7, 4);
    CHECK(audit_json(rep).dump(2) == audit_json(again).dump(2));
    CHECK(audit_summary(rep) == audit_summary(again));

    AuditReport other = run_audit(8, 4);
    CHECK(audit_json(rep).dump(2) != audit_json(other).dump(2));
}

TEST_CASE("audit run: the summary names every mismatching row") {
    AuditReport rep = run_audit(7, 4);
    std::string text = audit_summary(rep);
    for (const auto& row : rep.rows)
        if (!row.match) CHECK(text.find(row.name) != std::string::npos);
    CHECK(text.find("mismatches=") != std::string::npos);
    CHECK(text.find("MISMATCH") != std::string::npos); // the designed-in deviation row
}
