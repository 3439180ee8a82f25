#pragma once

#include "propdiv/game.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace propdiv {

// Result of applying a (possibly partial) solution to a game. `undefined`
// only ever means "the game is outside this solution's domain class"; bad
// parameters and malformed input are errors, not outcomes.
struct EvalOutcome {
    std::optional<Allocation> payoffs;
    std::string reason; // set iff !payoffs

    bool defined() const { return payoffs.has_value(); }

    static EvalOutcome ok(Allocation a) { return {std::move(a), {}}; }
    static EvalOutcome undefined(std::string why) { return {std::nullopt, std::move(why)}; }
};

// Textual solution selector: NAME[:k=v,...]. Values may contain commas
// (vector parameters), so a comma only starts a new parameter when the next
// token carries '='. Examples: "proportional", "dictatorship:d=0",
// "w_fixed:x=1,-1", "shifted:a=3/2".
struct SolutionSpec {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;

    static SolutionSpec parse(std::string_view text);
    std::string str() const;
    const std::string* find(std::string_view key) const;
};

// A resolved solution: spec echo plus evaluation function.
class Solution {
public:
    Solution(SolutionSpec spec, std::function<EvalOutcome(const Game&)> fn)
        : spec_(std::move(spec)), fn_(std::move(fn)) {}

    const SolutionSpec& spec() const { return spec_; }
    std::string name() const { return spec_.str(); }
    EvalOutcome operator()(const Game& g) const { return fn_(g); }

private:
    SolutionSpec spec_;
    std::function<EvalOutcome(const Game&)> fn_;
};

// Registry: validates parameters (unknown_solution / param_error) and binds
// the evaluation function. Player-count-dependent validation (dictator index,
// fixed-vector length) happens at evaluation time.
Solution resolve(const SolutionSpec& spec);
EvalOutcome evaluate(const SolutionSpec& spec, const Game& g);

struct SolutionInfo {
    std::string name;
    std::string params; // short parameter description, empty when none
    std::string summary;
};
const std::vector<SolutionInfo>& solution_registry();

// Direct API. Partial solutions raise domain_error outside their class;
// the registry path reports EvalOutcome::undefined instead.
Allocation proportional(const Game& g);     // on V
Allocation equal_division(const Game& g);   // total
Allocation cis_value(const Game& g);        // total
Allocation ensc_value(const Game& g);       // total
Allocation shapley(const Game& g);          // total
Allocation dictatorship(const Game& g, int dictator);
Allocation w_fixed(const Game& g, const std::vector<Rational>& x); // on V
Allocation shifted(const Game& g, const Rational& a);              // on V, a > 0
Allocation periodic_perturbation(const Game& g);                   // on V
Allocation hybrid_null(const Game& g);                             // on VHat
Allocation scaled(const Game& g, const Rational& a);               // on VHat, a > 0

// 1-periodic piecewise-linear triangle wave: t(0) = 0, t(1/4) = 1,
// t(3/4) = -1, t(1) = 0; odd and integer-fixing.
Rational triangle_wave(const Rational& alpha);
// eta(alpha) = alpha + t(alpha); Lipschitz constant 5, eta(alpha+1) = eta(alpha)+1.
Rational eta_perturbation(const Rational& alpha);

} // namespace propdiv
