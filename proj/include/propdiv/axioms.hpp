#pragma once

#include "propdiv/game.hpp"
#include "propdiv/solutions.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace propdiv {

// Checkable axioms. GH/GN/L and the consistency family quantify over grand
// worths; E/ER/PNC/BPNC/GA live on the sign-restricted class VHat.
enum class Axiom { GH, GN, L, CU, CD, SIP, GCON, LCU, LCD, OGN, GR, E, ER, PNC, BPNC, GA };

inline constexpr int k_axiom_count = 16;

const char* axiom_name(Axiom a);
Axiom parse_axiom(std::string_view text);
std::vector<Axiom> all_axioms();
// Bundles exposed by the CLI as --theorem 1..5.
std::vector<Axiom> theorem_axioms(int k);
// The game class an axiom quantifies over.
DomainClass axiom_domain(Axiom a);

// One side of a checked equation: a payoff vector or a scalar.
struct WitnessValue {
    std::optional<Rational> scalar;
    std::optional<Allocation> alloc;

    static WitnessValue of(Rational r) { return {std::move(r), std::nullopt}; }
    static WitnessValue of(Allocation a) { return {std::nullopt, std::move(a)}; }

    friend bool operator==(const WitnessValue&, const WitnessValue&) = default;
};

// A reproducible counterexample: enough data to re-derive both sides of the
// violated equation from scratch (see reevaluate_witness).
struct Witness {
    Axiom axiom{};
    std::string solution;
    std::vector<Game> games;
    std::vector<std::pair<std::string, std::string>> params;
    WitnessValue lhs, rhs;
    std::string equation;
};

struct Verdict {
    enum class Kind { holds, fails, not_applicable };

    Kind kind = Kind::not_applicable;
    std::size_t trials = 0;  // applicable instantiations that were checked
    std::size_t skipped = 0; // instantiations dropped by a guard, never counted toward holds
    std::optional<Witness> witness;
    std::string reason; // set for not_applicable

    static Verdict holds(std::size_t trials, std::size_t skipped) {
        return {Kind::holds, trials, skipped, std::nullopt, {}};
    }
    static Verdict fails(Witness w, std::size_t trials, std::size_t skipped) {
        return {Kind::fails, trials, skipped, std::move(w), {}};
    }
    static Verdict not_applicable(std::string reason, std::size_t skipped = 0) {
        return {Kind::not_applicable, 0, skipped, std::nullopt, std::move(reason)};
    }
};

const char* verdict_name(Verdict::Kind k);

struct CheckConfig {
    std::uint64_t seed = 0;
    // random grand-worth samples added to the fixed adversarial set
    std::size_t random_alphas = 32;
    // (partner game, scalar) draws for the linearity check
    std::size_t pair_samples = 32;
};

// Grand-worth samples for a game: the fixed adversarial set
// {-2, -1, -1/2, 0, 1/2, 1, 3/2, v(N), sum-of-singletons, v(N)+1}
// followed by `random_alphas` seeded rationals. Order is the witness
// tie-breaking order.
std::vector<Rational> alpha_samples(const Game& g, const CheckConfig& cfg);

// Every checker: NotApplicable when the game is outside the axiom's class or
// the solution is undefined on it; otherwise Holds iff the axiom's equation
// holds exactly on every applicable sampled instantiation; first failure in
// enumeration order (alpha index, then subset mask, then player index) is the
// witness. All comparisons are exact; no tolerances anywhere.
Verdict check(Axiom a, const Solution& s, const Game& g, const CheckConfig& cfg);

Verdict check_GH(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_GN(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_L(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_CU(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_CD(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_SIP(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_GCON(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_LCU(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_LCD(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_OGN(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_GR(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_E(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_ER(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_PNC(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_BPNC(const Solution& s, const Game& g, const CheckConfig& cfg);
Verdict check_GA(const Solution& s, const Game& g, const CheckConfig& cfg);

// Soundness: recompute the witness's equation from its stored games and
// parameters and confirm both sides reproduce exactly and still differ
// (resp. still break the bound, for the continuity probe).
bool reevaluate_witness(const Solution& s, const Witness& w);

struct SuiteRow {
    Axiom axiom{};
    Verdict::Kind verdict = Verdict::Kind::not_applicable;
    std::size_t games_held = 0, games_failed = 0, games_na = 0;
    std::size_t trials = 0, skipped = 0;
    std::map<std::string, std::size_t> na_reasons;
    std::optional<Witness> witness; // first failing game's witness
};

struct SuiteReport {
    std::string solution;
    std::uint64_t seed = 0;
    std::size_t games = 0;
    std::vector<SuiteRow> rows;

    bool any_failure() const;
};

// Runs each axiom over the whole game list with per-(axiom, game) derived
// seeds. Deterministic: identical inputs yield byte-identical JSON.
SuiteReport check_suite(const Solution& s, const std::vector<Axiom>& axioms,
                        const std::vector<Game>& games, const CheckConfig& cfg);

nlohmann::ordered_json witness_json(const Witness& w);
nlohmann::ordered_json suite_report_json(const SuiteReport& report);

} // namespace propdiv
