#pragma once

#include "propdiv/coalition.hpp"
#include "propdiv/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace propdiv {

// Game classes, nested: all > V > VHat.
//   All:  every characteristic function with v(empty) = 0.
//   V:    sum of singleton worths is nonzero.
//   VHat: additionally n >= 3 and singleton worths all >= 0 or all <= 0.
enum class DomainClass { all, v, vhat };

DomainClass parse_domain(std::string_view text); // "all" | "V" | "VHAT"
const char* domain_name(DomainClass d);

// Payoff vector, one entry per player, index-aligned with the game.
struct Allocation {
    std::vector<Rational> payoffs;

    Allocation() = default;
    explicit Allocation(std::size_t n) : payoffs(n) {}
    explicit Allocation(std::vector<Rational> p) : payoffs(std::move(p)) {}

    std::size_t size() const { return payoffs.size(); }
    Rational& operator[](std::size_t i) { return payoffs[i]; }
    const Rational& operator[](std::size_t i) const { return payoffs[i]; }

    Rational sum() const;

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

Allocation operator+(const Allocation& a, const Allocation& b);
Allocation operator-(const Allocation& a, const Allocation& b);
Allocation operator*(const Rational& c, const Allocation& a);
Allocation operator-(const Allocation& a);
// max_i |a_i - b_i|
Rational inf_norm_diff(const Allocation& a, const Allocation& b);

// Transferable-utility game on players 0..n-1. Worths are stored for all
// 2^n coalitions indexed by bitmask; the empty coalition is pinned to 0.
// Labels are cosmetic (used only by the document format); semantics are
// index-based throughout.
class Game {
public:
    explicit Game(int n);
    Game(int n, std::vector<std::string> labels);

    int players() const { return n_; }
    Coalition grand() const { return Coalition::full(n_); }

    const Rational& worth(Coalition s) const;
    void set_worth(Coalition s, Rational value);

    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const Game&, const Game&) = default;

private:
    int n_;
    std::vector<Rational> worths_; // size 1 << n_, [0] stays 0
    std::vector<std::string> labels_;
};

Rational sum_singletons(const Game& g);
// Worths of singletons as a payoff-shaped vector.
Allocation singleton_vector(const Game& g);

// Same game except the grand coalition's worth becomes `alpha` (the v^alpha
// transform). Proper coalitions are untouched.
Game replace_grand(const Game& g, const Rational& alpha);

bool in_domain(const Game& g, DomainClass d);

// Null player: v(S + i) = v(S) for every S not containing i, including
// S = empty, so a null player's singleton worth is 0.
bool is_null_player(const Game& g, int i);
int count_null_players(const Game& g);

// Coalition-wise sum / scaling (player counts must match for add).
Game add_games(const Game& a, const Game& b);
Game scale_game(const Rational& c, const Game& g);

// Grand-worth sum of two games that agree on every proper coalition:
// result = a off the grand coalition, a(N) + b(N) at it. Disagreement on a
// proper coalition is a coincidence_violation error.
Game oplus(const Game& a, const Game& b);

} // namespace propdiv
