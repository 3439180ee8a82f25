#include "propdiv/solutions.hpp"

#include "propdiv/errors.hpp"

#include <bit>

namespace propdiv {

// --- spec text ---------------------------------------------------------

SolutionSpec SolutionSpec::parse(std::string_view text) {
    SolutionSpec spec;
    auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (spec.name.empty())
        raise(Errc::unknown_solution, "empty solution name");
    if (colon == std::string_view::npos) return spec;

    std::string_view rest = text.substr(colon + 1);
    if (rest.empty())
        raise(Errc::param_error, "dangling ':' in solution spec");
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string_view tok = rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        auto eq = tok.find('=');
        if (eq != std::string_view::npos) {
            spec.params.emplace_back(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
        } else if (!spec.params.empty()) {
            // comma-continued vector value: "x=1,-1" -> x = "1,-1"
            spec.params.back().second += ',';
            spec.params.back().second += std::string(tok);
        } else {
            raise(Errc::param_error, "parameter without '=': \"" + std::string(tok) + "\"");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return spec;
}

std::string SolutionSpec::str() const {
    std::string s = name;
    for (std::size_t i = 0; i < params.size(); ++i) {
        s += i == 0 ? ':' : ',';
        s += params[i].first;
        s += '=';
        s += params[i].second;
    }
    return s;
}

const std::string* SolutionSpec::find(std::string_view key) const {
    for (const auto& [k, v] : params)
        if (k == key) return &v;
    return nullptr;
}

// --- shared pieces ------------------------------------------------------

static void require_domain(const Game& g, DomainClass d, const char* who) {
    if (!in_domain(g, d))
        raise(Errc::domain_error,
              std::string(who) + " is undefined outside " + domain_name(d));
}

static std::string outside(DomainClass d) {
    std::string why = "game outside ";
    why += domain_name(d);
    if (d == DomainClass::v) why += " (singleton worths sum to zero)";
    if (d == DomainClass::vhat) why += " (needs n >= 3, same-sign singletons, nonzero singleton sum)";
    return why;
}

static std::vector<Rational> parse_rational_csv(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(Rational::parse(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// --- direct solutions ---------------------------------------------------

Allocation proportional(const Game& g) {
    require_domain(g, DomainClass::v, "proportional");
    const Rational total = sum_singletons(g);
    const Rational& grand = g.worth(g.grand());
    Allocation a(static_cast<std::size_t>(g.players()));
    for (int i = 0; i < g.players(); ++i)
        a[i] = g.worth(Coalition::singleton(i)) * grand / total;
    return a;
}

Allocation equal_division(const Game& g) {
    const Rational share = g.worth(g.grand()) / Rational(g.players());
    Allocation a(static_cast<std::size_t>(g.players()));
    for (int i = 0; i < g.players(); ++i) a[i] = share;
    return a;
}

Allocation cis_value(const Game& g) {
    const Rational rem = (g.worth(g.grand()) - sum_singletons(g)) / Rational(g.players());
    Allocation a(static_cast<std::size_t>(g.players()));
    for (int i = 0; i < g.players(); ++i) a[i] = g.worth(Coalition::singleton(i)) + rem;
    return a;
}

Allocation ensc_value(const Game& g) {
    const int n = g.players();
    Allocation b(static_cast<std::size_t>(n));
    Rational b_sum;
    for (int i = 0; i < n; ++i) {
        b[i] = g.worth(g.grand()) - g.worth(g.grand().without(i));
        b_sum += b[i];
    }
    const Rational rem = (b_sum - g.worth(g.grand())) / Rational(n);
    Allocation a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[i] = b[i] - rem;
    return a;
}

Allocation shapley(const Game& g) {
    const int n = g.players();
    // weight for |S| = s:  s! (n-s-1)! / n!
    std::vector<Rational::Int> fact(static_cast<std::size_t>(n) + 1);
    fact[0] = 1;
    for (int k = 1; k <= n; ++k) fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;
    std::vector<Rational> weight(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        weight[static_cast<std::size_t>(s)] =
            Rational(fact[static_cast<std::size_t>(s)] * fact[static_cast<std::size_t>(n - s - 1)]) /
            Rational(fact[static_cast<std::size_t>(n)]);

    Allocation a(static_cast<std::size_t>(n));
    const std::uint32_t full = g.grand().bits();
    for (int i = 0; i < n; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        Rational acc;
        for (std::uint32_t s = 0; s <= full; ++s) {
            if (s & bit) continue;
            acc += weight[static_cast<std::size_t>(std::popcount(s))] *
                   (g.worth(Coalition(s | bit)) - g.worth(Coalition(s)));
        }
        a[i] = acc;
    }
    return a;
}

Allocation dictatorship(const Game& g, int dictator) {
    if (dictator < 0 || dictator >= g.players())
        raise(Errc::param_error, "dictator index " + std::to_string(dictator) + " out of range for " +
                                     std::to_string(g.players()) + " players");
    Allocation a(static_cast<std::size_t>(g.players()));
    a[static_cast<std::size_t>(dictator)] = g.worth(g.grand());
    return a;
}

// Games whose singleton worths vanish except possibly the last player's.
static bool in_w_class(const Game& g) {
    if (!in_domain(g, DomainClass::v)) return false;
    for (int i = 0; i + 1 < g.players(); ++i)
        if (!g.worth(Coalition::singleton(i)).is_zero()) return false;
    return true;
}

// Games with first singleton worth 1 and the rest 0.
static bool in_w_prime_class(const Game& g) {
    if (!in_domain(g, DomainClass::v)) return false;
    if (g.worth(Coalition::singleton(0)) != Rational(1)) return false;
    for (int i = 1; i < g.players(); ++i)
        if (!g.worth(Coalition::singleton(i)).is_zero()) return false;
    return true;
}

Allocation w_fixed(const Game& g, const std::vector<Rational>& x) {
    require_domain(g, DomainClass::v, "w_fixed");
    if (x.size() + 1 != static_cast<std::size_t>(g.players()))
        raise(Errc::param_error, "w_fixed needs n-1 fixed payoffs, got " + std::to_string(x.size()));
    Rational sum;
    for (const auto& xi : x) sum += xi;
    if (!sum.is_zero())
        raise(Errc::param_error, "w_fixed vector must sum to zero, sums to " + sum.str());
    if (!in_w_class(g)) return proportional(g);
    Allocation a(static_cast<std::size_t>(g.players()));
    for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] = x[i];
    a[a.size() - 1] = g.worth(g.grand());
    return a;
}

Allocation shifted(const Game& g, const Rational& a) {
    require_domain(g, DomainClass::v, "shifted");
    if (a.sign() <= 0)
        raise(Errc::param_error, "shifted needs a > 0, got " + a.str());
    return proportional(replace_grand(g, g.worth(g.grand()) - a));
}

Rational triangle_wave(const Rational& alpha) {
    const Rational f = alpha.frac();        // [0, 1)
    const Rational quarter(1, 4), three_quarters(3, 4);
    if (f <= quarter) return Rational(4) * f;
    if (f <= three_quarters) return Rational(2) - Rational(4) * f;
    return Rational(4) * f - Rational(4);
}

Rational eta_perturbation(const Rational& alpha) { return alpha + triangle_wave(alpha); }

Allocation periodic_perturbation(const Game& g) {
    require_domain(g, DomainClass::v, "periodic_perturbation");
    if (!in_w_prime_class(g)) return proportional(g);
    Allocation a(static_cast<std::size_t>(g.players()));
    a[0] = eta_perturbation(g.worth(g.grand()));
    return a;
}

Allocation hybrid_null(const Game& g) {
    require_domain(g, DomainClass::vhat, "hybrid_null");
    return count_null_players(g) <= g.players() - 3 ? shapley(g) : proportional(g);
}

Allocation scaled(const Game& g, const Rational& a) {
    require_domain(g, DomainClass::vhat, "scaled");
    if (a.sign() <= 0)
        raise(Errc::param_error, "scaled needs a > 0, got " + a.str());
    return proportional(replace_grand(g, a));
}

// --- registry -----------------------------------------------------------

namespace {

using Fn = std::function<EvalOutcome(const Game&)>;

EvalOutcome guard(const Game& g, DomainClass d, const std::function<Allocation(const Game&)>& f) {
    if (!in_domain(g, d)) return EvalOutcome::undefined(outside(d));
    return EvalOutcome::ok(f(g));
}

void require_no_params(const SolutionSpec& spec) {
    if (!spec.params.empty())
        raise(Errc::param_error, "solution \"" + spec.name + "\" takes no parameters");
}

const std::string& require_param(const SolutionSpec& spec, const char* key) {
    const std::string* v = spec.find(key);
    if (!v)
        raise(Errc::param_error, "solution \"" + spec.name + "\" needs parameter \"" + key + "\"");
    if (spec.params.size() != 1)
        raise(Errc::param_error, "solution \"" + spec.name + "\" takes only \"" + std::string(key) + "\"");
    return *v;
}

Rational positive_rational_param(const SolutionSpec& spec, const char* key) {
    Rational a = Rational::parse(require_param(spec, key));
    if (a.sign() <= 0)
        raise(Errc::param_error, std::string("parameter \"") + key + "\" must be > 0, got " + a.str());
    return a;
}

Fn make_fn(const SolutionSpec& spec) {
    const std::string& name = spec.name;
    if (name == "proportional") {
        require_no_params(spec);
        return [](const Game& g) { return guard(g, DomainClass::v, proportional); };
    }
    if (name == "equal_division") {
        require_no_params(spec);
        return [](const Game& g) { return EvalOutcome::ok(equal_division(g)); };
    }
    if (name == "cis") {
        require_no_params(spec);
        return [](const Game& g) { return EvalOutcome::ok(cis_value(g)); };
    }
    if (name == "ensc") {
        require_no_params(spec);
        return [](const Game& g) { return EvalOutcome::ok(ensc_value(g)); };
    }
    if (name == "shapley") {
        require_no_params(spec);
        return [](const Game& g) { return EvalOutcome::ok(shapley(g)); };
    }
    if (name == "dictatorship") {
        const std::string& text = require_param(spec, "d");
        Rational d = Rational::parse(text);
        if (!d.is_integer() || d.sign() < 0)
            raise(Errc::param_error, "dictator index must be a nonnegative integer, got " + text);
        int idx = static_cast<int>(d.num().convert_to<long long>());
        return [idx](const Game& g) { return EvalOutcome::ok(dictatorship(g, idx)); };
    }
    if (name == "w_fixed") {
        std::vector<Rational> x = parse_rational_csv(require_param(spec, "x"));
        Rational sum;
        for (const auto& xi : x) sum += xi;
        if (!sum.is_zero())
            raise(Errc::param_error, "w_fixed vector must sum to zero, sums to " + sum.str());
        return [x](const Game& g) {
            if (!in_domain(g, DomainClass::v)) return EvalOutcome::undefined(outside(DomainClass::v));
            return EvalOutcome::ok(w_fixed(g, x));
        };
    }
    if (name == "shifted") {
        Rational a = positive_rational_param(spec, "a");
        return [a](const Game& g) {
            if (!in_domain(g, DomainClass::v)) return EvalOutcome::undefined(outside(DomainClass::v));
            return EvalOutcome::ok(shifted(g, a));
        };
    }
    if (name == "periodic_perturbation") {
        require_no_params(spec);
        return [](const Game& g) { return guard(g, DomainClass::v, periodic_perturbation); };
    }
    if (name == "hybrid_null") {
        require_no_params(spec);
        return [](const Game& g) { return guard(g, DomainClass::vhat, hybrid_null); };
    }
    if (name == "scaled") {
        Rational a = positive_rational_param(spec, "a");
        return [a](const Game& g) {
            if (!in_domain(g, DomainClass::vhat)) return EvalOutcome::undefined(outside(DomainClass::vhat));
            return EvalOutcome::ok(scaled(g, a));
        };
    }
    raise(Errc::unknown_solution, "no solution named \"" + name + "\"");
}

} // namespace

Solution resolve(const SolutionSpec& spec) { return Solution(spec, make_fn(spec)); }

EvalOutcome evaluate(const SolutionSpec& spec, const Game& g) { return resolve(spec)(g); }

const std::vector<SolutionInfo>& solution_registry() {
    static const std::vector<SolutionInfo> infos = {
        {"proportional", "", "splits v(N) in proportion to singleton worths; defined on V"},
        {"equal_division", "", "v(N)/n to every player"},
        {"cis", "", "singleton worth plus equal share of the remainder"},
        {"ensc", "", "complement-based marginal worth minus equal share of the excess"},
        {"shapley", "", "subset-weighted marginal contributions"},
        {"dictatorship", "d=<index>", "player d takes v(N), everyone else 0"},
        {"w_fixed", "x=<r,...>", "fixed zero-sum payoffs (plus v(N) to the last player) on games whose"
                                 " non-last singleton worths vanish; proportional elsewhere; defined on V"},
        {"shifted", "a=<r> (a>0)", "proportional split of v(N)-a; defined on V"},
        {"periodic_perturbation", "", "triangle-wave perturbed first payoff on games with singleton worths"
                                      " (1,0,...,0); proportional elsewhere; defined on V"},
        {"hybrid_null", "", "shapley when at most n-3 null players, else proportional; defined on VHAT"},
        {"scaled", "a=<r> (a>0)", "proportional split of the fixed total a; defined on VHAT"},
    };
    return infos;
}

} // namespace propdiv
