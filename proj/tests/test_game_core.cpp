#include "propdiv/errors.hpp"
#include "propdiv/game.hpp"
#include "propdiv/game_io.hpp"

#include <doctest.h>

#include <functional>

using namespace propdiv;

namespace {

Game three_player() {
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

const char* k_doc = R"({
  "players": ["1", "2", "3"],
  "worths": {
    "1": "1", "2": "2", "3": "3",
    "1|2": "4", "1|3": "5", "2|3": "6",
    "1|2|3": "12"
  }
})";

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::io_error;
}

} // namespace

TEST_CASE("coalition bit algebra") {
    Coalition s = Coalition::of({0, 2});
    CHECK(s.size() == 2);
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
    CHECK(s.unite(Coalition::singleton(1)) == Coalition::full(3));
    CHECK(s.intersect(Coalition::singleton(2)) == Coalition::singleton(2));
    CHECK(s.minus(Coalition::singleton(2)) == Coalition::singleton(0));
    CHECK(s.complement(3) == Coalition::singleton(1));
    CHECK(Coalition::singleton(2).subset_of(s));
    CHECK(!s.subset_of(Coalition::singleton(2)));
    CHECK(s.members() == std::vector<int>{0, 2});
    CHECK(Coalition::empty().is_empty());
}

TEST_CASE("the empty coalition's worth is pinned to zero") {
    Game g(2);
    CHECK(g.worth(Coalition::empty()) == Rational(0));
    CHECK_THROWS_AS(g.set_worth(Coalition::empty(), Rational(1)), Error);
    g.set_worth(Coalition::empty(), Rational(0)); // a no-op, not an error
    CHECK(g.worth(Coalition::empty()) == Rational(0));
}

TEST_CASE("replace_grand touches exactly the grand worth") {
    Game g = three_player();
    Game h = replace_grand(g, Rational(-7, 2));
    CHECK(h.worth(h.grand()) == Rational(-7, 2));
    for (std::uint32_t mask = 1; mask < 7; ++mask)
        CHECK(h.worth(Coalition(mask)) == g.worth(Coalition(mask)));
    CHECK(replace_grand(h, Rational(12)) == g);
}

TEST_CASE("singleton helpers") {
    Game g = three_player();
    CHECK(sum_singletons(g) == Rational(6));
    Allocation s = singleton_vector(g);
    REQUIRE(s.payoffs.size() == 3);
    CHECK(s.payoffs[0] == Rational(1));
    CHECK(s.payoffs[2] == Rational(3));
    CHECK(s.sum() == Rational(6));
}

TEST_CASE("null players are detected through every coalition, not just singletons") {
    // player 2 contributes nothing anywhere
    Game g(3);
    g.set_worth(Coalition::of({0}), Rational(1));
    g.set_worth(Coalition::of({1}), Rational(2));
    g.set_worth(Coalition::of({2}), Rational(0));
    g.set_worth(Coalition::of({0, 1}), Rational(5));
    g.set_worth(Coalition::of({0, 2}), Rational(1));
    g.set_worth(Coalition::of({1, 2}), Rational(2));
    g.set_worth(Coalition::of({0, 1, 2}), Rational(5));
    CHECK(is_null_player(g, 2));
    CHECK(!is_null_player(g, 0));
    CHECK(count_null_players(g) == 1);

    // zero singleton worth alone is not enough
    Game h = g;
    h.set_worth(Coalition::of({0, 2}), Rational(2));
    CHECK(!is_null_player(h, 2));
    CHECK(count_null_players(h) == 0);
}

TEST_CASE("domain classes") {
    Game g = three_player();
    CHECK(in_domain(g, DomainClass::all));
    CHECK(in_domain(g, DomainClass::v));
    CHECK(in_domain(g, DomainClass::vhat));

    Game zero_sum = g;
    zero_sum.set_worth(Coalition::of({2}), Rational(-3));
    CHECK(in_domain(zero_sum, DomainClass::all));
    CHECK(!in_domain(zero_sum, DomainClass::v));    // singleton sum vanishes
    CHECK(!in_domain(zero_sum, DomainClass::vhat)); // and signs are mixed

    Game mixed = g;
    mixed.set_worth(Coalition::of({2}), Rational(-1));
    CHECK(in_domain(mixed, DomainClass::v));
    CHECK(!in_domain(mixed, DomainClass::vhat));

    Game neg(3);
    for (int i = 0; i < 3; ++i) neg.set_worth(Coalition::singleton(i), Rational(-1 - i));
    CHECK(in_domain(neg, DomainClass::vhat)); // all non-positive also qualifies

    Game two(2);
    two.set_worth(Coalition::of({0}), Rational(1));
    two.set_worth(Coalition::of({1}), Rational(1));
    two.set_worth(Coalition::of({0, 1}), Rational(3));
    CHECK(in_domain(two, DomainClass::v));
    CHECK(!in_domain(two, DomainClass::vhat)); // needs three players

    CHECK(parse_domain("all") == DomainClass::all);
    CHECK(parse_domain("V") == DomainClass::v);
    CHECK(parse_domain("VHAT") == DomainClass::vhat);
    CHECK_THROWS_AS(parse_domain("w"), Error);
}

TEST_CASE("game arithmetic") {
    Game g = three_player();
    Game sum = add_games(g, g);
    CHECK(sum.worth(Coalition::of({0, 1})) == Rational(8));
    CHECK(sum.worth(sum.grand()) == Rational(24));
    Game half = scale_game(Rational(1, 2), g);
    CHECK(half.worth(Coalition::of({2})) == Rational(3, 2));
    CHECK(add_games(half, half) == g);
}

TEST_CASE("oplus needs agreement off the grand coalition") {
    Game g = three_player();
    Game h = replace_grand(g, Rational(5, 3));
    Game joined = oplus(g, h);
    CHECK(joined.worth(joined.grand()) == Rational(12) + Rational(5, 3));
    CHECK(joined.worth(Coalition::of({0, 1})) == Rational(4));

    Game off = h;
    off.set_worth(Coalition::of({0, 1}), Rational(0));
    CHECK(code_of([&] { oplus(g, off); }) == Errc::coincidence_violation);
}

TEST_CASE("documents round-trip and carry labels") {
    Game g = parse_game(k_doc);
    CHECK(g == three_player());
    CHECK(g.labels()[1] == "2");
    std::string text = serialize_game(g);
    CHECK(parse_game(text) == g);
    CHECK(serialize_game(parse_game(text)) == text);
}

TEST_CASE("custom labels round-trip and order keys") {
    Game g(3, {"ann", "bob", "cy"});
    g.set_worth(Coalition::of({0}), Rational(1));
    g.set_worth(Coalition::of({1}), Rational(2));
    g.set_worth(Coalition::of({2}), Rational(3, 7));
    g.set_worth(Coalition::of({0, 1}), Rational(4));
    g.set_worth(Coalition::of({0, 2}), Rational(5));
    g.set_worth(Coalition::of({1, 2}), Rational(6));
    g.set_worth(Coalition::of({0, 1, 2}), Rational(-12));
    std::string text = serialize_game(g);
    CHECK(text.find("ann|bob|cy") != std::string::npos);
    CHECK(text.find("3/7") != std::string::npos);
    Game back = parse_game(text);
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
}

TEST_CASE("document rejection: structure") {
    CHECK(code_of([] { parse_game("[]"); }) == Errc::bad_document);
    CHECK(code_of([] { parse_game("{"); }) == Errc::bad_document);
    CHECK(code_of([] { parse_game(R"({"worths": {}})"); }) == Errc::bad_document);
    CHECK(code_of([] { parse_game(R"({"players": ["1","2"]})"); }) == Errc::bad_document);
    CHECK(code_of([] {
        parse_game(R"({"players": ["1","2"], "worths": {"1":"0","2":"0","1|2":"0"}, "x": 1})");
    }) == Errc::bad_document);
    CHECK(code_of([] { parse_game(R"({"players": ["1"], "worths": {"1": "1"}})"); }) ==
          Errc::player_count);
    CHECK(code_of([] { parse_game(R"({"players": ["1","1"], "worths": {}})"); }) ==
          Errc::bad_document);
}

TEST_CASE("document rejection: worth table") {
    // missing coalition
    CHECK(code_of([] {
        parse_game(R"({"players": ["1","2"], "worths": {"1": "1", "2": "2"}})");
    }) == Errc::missing_coalition);
    // unknown coalition key
    CHECK(code_of([] {
        parse_game(
            R"({"players": ["1","2"], "worths": {"1":"1","2":"2","1|2":"3","2|1":"3"}})");
    }) == Errc::bad_document);
    // malformed worth
    CHECK(code_of([] {
        parse_game(R"({"players": ["1","2"], "worths": {"1":"4/0","2":"2","1|2":"3"}})");
    }) == Errc::invalid_rational);
    CHECK(code_of([] {
        parse_game(R"({"players": ["1","2"], "worths": {"1":1.5,"2":"2","1|2":"3"}})");
    }) == Errc::bad_document);
    // duplicate key, byte-identical spelling: invisible to the DOM, caught by the scan
    CHECK(code_of([] {
        parse_game(R"({"players": ["1","2"], "worths": {"1":"1","1":"9","2":"2","1|2":"3"}})");
    }) == Errc::duplicate_key);
}

TEST_CASE("bare JSON integers are accepted as worths") {
    Game g = parse_game(R"({"players": ["1","2"], "worths": {"1": 1, "2": -2, "1|2": 3}})");
    CHECK(g.worth(Coalition::of({1})) == Rational(-2));
    // but floats are not exact and stay rejected
    CHECK(code_of([] {
        parse_game(R"({"players": ["1","2"], "worths": {"1": 1, "2": 2.5, "1|2": 3}})");
    }) == Errc::bad_document);
}

TEST_CASE("allocation arithmetic") {
    Allocation a{{Rational(1), Rational(2)}};
    Allocation b{{Rational(3), Rational(-2)}};
    CHECK((a + b).payoffs[0] == Rational(4));
    CHECK((a - b).payoffs[1] == Rational(4));
    CHECK((Rational(2) * a).payoffs[1] == Rational(4));
    CHECK((-a).payoffs[0] == Rational(-1));
    CHECK(a.sum() == Rational(3));
    CHECK(inf_norm_diff(a, b) == Rational(4));
}
