#pragma once

#include "propdiv/axioms.hpp"
#include "propdiv/game.hpp"
#include "propdiv/solutions.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace propdiv {

// Sign constraint on singleton worths when generating VHAT games.
enum class SignMode { non_neg, non_pos, random_uniform };

struct GeneratorConfig {
    int players = 3;
    DomainClass domain = DomainClass::v;
    std::uint64_t seed = 0;
    int num_lo = -20, num_hi = 20; // numerator window for every worth
    int den_lo = 1, den_hi = 5;
    SignMode sign = SignMode::random_uniform; // VHAT only
};

// Rejection-samples a game in the requested class; at most 1000 redraws.
Game gen_game(const GeneratorConfig& cfg);

// Games whose singleton worths are all zero except the last player's.
Game gen_w_class(int n, std::uint64_t seed, std::optional<Rational> grand = std::nullopt);

// Games whose singleton worths are (1, 0, ..., 0).
Game gen_w_prime_class(int n, std::uint64_t seed, std::optional<Rational> grand = std::nullopt);

// VHAT games in which every player outside {i, j} is null: each coalition's
// worth depends only on its overlap with {i, j}. Singleton worths of i and j
// share a strict sign.
Game gen_two_active(int n, int i, int j, std::uint64_t seed);

// The inessential companion: grand worth replaced by the singleton sum.
Game gen_inessential(const Game& g);

// --- expected-verdict audit -------------------------------------------------

enum class Expectation { holds, fails_somewhere, not_applicable_everywhere };
const char* expectation_name(Expectation e);

struct AuditRow {
    std::string name; // stable id, "<solution>/<axiom>[@variant]"
    std::function<SolutionSpec(int)> spec_for_n;
    Axiom axiom{};
    Expectation expected = Expectation::holds;
    DomainClass domain = DomainClass::v; // class games are drawn from
    std::string sampling;                // "" | "w_class" | "w_prime_class" | "two_active"
    std::string claim;                   // one-line statement of what the row certifies
};

const std::vector<AuditRow>& audit_table();

struct AuditRowResult {
    std::string name;
    std::string solution; // representative spec (n = 3)
    Axiom axiom{};
    Expectation expected = Expectation::holds;
    Verdict::Kind observed = Verdict::Kind::not_applicable;
    bool match = false;
    std::size_t games_held = 0, games_failed = 0, games_na = 0;
    std::size_t trials = 0, skipped = 0;
    std::map<std::string, std::size_t> na_reasons;
    std::optional<Witness> witness; // first failing game's witness
    bool witness_sound = false;     // reevaluate_witness outcome, when a witness exists
    std::string claim;
};

struct AuditReport {
    std::uint64_t seed = 0;
    std::size_t trials_per_row = 0;
    std::vector<AuditRowResult> rows;
    bool all_match = false;
    std::vector<std::string> notes;
};

// Runs every table row over `trials` generated games (players cycling 3..5,
// per-game derived seeds; special-sampling rows alternate targeted and general
// draws). A fails_somewhere row only matches when its witness re-evaluates.
AuditReport run_audit(std::uint64_t seed, std::size_t trials);

nlohmann::ordered_json audit_json(const AuditReport& report);
// Fixed-width human-readable table.
std::string audit_summary(const AuditReport& report);

} // namespace propdiv
