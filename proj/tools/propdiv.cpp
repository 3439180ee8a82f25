// propdiv: exact rational solutions and axiom checking for TU games.
#include "propdiv/axioms.hpp"
#include "propdiv/errors.hpp"
#include "propdiv/game_io.hpp"
#include "propdiv/harness.hpp"
#include "propdiv/residuals.hpp"
#include "propdiv/rng.hpp"
#include "propdiv/solutions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace propdiv;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_error, "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) raise(Errc::io_error, "cannot read \"" + path + "\"");
    return buf.str();
}

Game load_game(const std::string& path) { return parse_game(read_file(path)); }

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(text.substr(pos));
            break;
        }
        out.push_back(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

Allocation parse_payoffs(const std::string& csv, int n) {
    Allocation x;
    for (const auto& tok : split_csv(csv)) x.payoffs.push_back(Rational::parse(tok));
    if (static_cast<int>(x.payoffs.size()) != n)
        raise(Errc::param_error, "--x needs exactly one rational per player");
    return x;
}

// --set takes player labels as they appear in the document's players array.
Coalition resolve_set(const std::string& csv, const Game& g) {
    Coalition s;
    for (const auto& tok : split_csv(csv)) {
        bool found = false;
        for (int i = 0; i < g.players(); ++i)
            if (g.labels()[static_cast<std::size_t>(i)] == tok) {
                s = s.with(i);
                found = true;
            }
        if (!found) raise(Errc::param_error, "no player labeled \"" + tok + "\"");
    }
    return s;
}

DomainClass parse_domain_arg(const std::string& text) { return parse_domain(text); }

const char* axiom_blurb(Axiom a) {
    switch (a) {
    case Axiom::GH: return "grand homogeneity: phi(regrand(v, a*v(N))) == a*phi(v)";
    case Axiom::GN: return "grand normalization: phi(regrand(v, v(N)-s1)) == phi(v) - singletons";
    case Axiom::L: return "linearity: additive and homogeneous in the game";
    case Axiom::CU: return "upward consistency: phi(v) == phi(regrand(v, a)) + phi(upward residual)";
    case Axiom::CD: return "downward consistency: phi(v) == phi(downward residual of phi(regrand(v, a)))";
    case Axiom::SIP: return "singleton payoffs: phi(regrand(v, s1)) == singleton vector";
    case Axiom::GCON: return "grand continuity probe: bounded payoff movement along the grand-worth line";
    case Axiom::LCU: return "limited upward consistency: CU restricted to 0 <= a <= v(N)";
    case Axiom::LCD: return "limited downward consistency: CD restricted to 0 <= v(N) <= a";
    case Axiom::OGN: return "one-sided grand normalization: sign-split variant of GN";
    case Axiom::GR: return "grand reflection: phi(v) == -phi(regrand(v, -v(N)))";
    case Axiom::E: return "efficiency: payoffs sum to v(N)";
    case Axiom::ER: return "equal ratios: phi_i*v({j}) == phi_j*v({i}) when all other players are null";
    case Axiom::PNC: return "projection consistency: kept payoffs survive nullifying the others at their payoffs";
    case Axiom::BPNC: return "bilateral projection consistency: PNC restricted to two-player sets";
    case Axiom::GA: return "grand additivity: phi(v) + phi(regrand(v, b)) == phi(regrand(v, v(N)+b)) on nearly-null games";
    }
    return "";
}

int cmd_solve(const std::string& game_path, const std::string& spec_text) {
    Game g = load_game(game_path);
    SolutionSpec spec = SolutionSpec::parse(spec_text);
    EvalOutcome out = evaluate(spec, g);
    nlohmann::ordered_json doc;
    if (!out.defined()) {
        doc["solution"] = spec.str();
        doc["undefined"] = out.reason;
        std::cout << doc.dump(2) << "\n";
        return 1;
    }
    doc["solution"] = spec.str();
    nlohmann::ordered_json payoffs = nlohmann::ordered_json::array();
    for (const auto& p : out.payoffs->payoffs) payoffs.push_back(p.str());
    doc["payoffs"] = std::move(payoffs);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_check(const std::string& spec_text, const std::string& axiom_csv, int theorem,
              const std::vector<std::string>& game_paths, std::size_t random_count, int players,
              const std::string& domain_text, std::uint64_t seed) {
    std::vector<Axiom> axioms;
    if (theorem != 0)
        axioms = theorem_axioms(theorem);
    else if (!axiom_csv.empty())
        for (const auto& tok : split_csv(axiom_csv)) axioms.push_back(parse_axiom(tok));
    else
        axioms = all_axioms();

    std::vector<Game> games;
    for (const auto& path : game_paths) games.push_back(load_game(path));
    if (random_count > 0) {
        GeneratorConfig gc;
        gc.players = players;
        gc.domain = parse_domain_arg(domain_text);
        for (std::size_t i = 0; i < random_count; ++i) {
            gc.seed = Rng::derive(seed, i);
            games.push_back(gen_game(gc));
        }
    }
    if (games.empty()) raise(Errc::param_error, "no games: pass --game files and/or --random COUNT");

    CheckConfig cfg;
    cfg.seed = seed;
    SuiteReport report = check_suite(resolve(SolutionSpec::parse(spec_text)), axioms, games, cfg);
    std::cout << suite_report_json(report).dump(2) << "\n";
    return report.any_failure() ? 1 : 0;
}

int cmd_residual(const std::string& game_path, const std::string& op, const std::string& x_csv,
                 const std::string& set_csv, const std::string& alpha_text) {
    Game g = load_game(game_path);
    Game result(g.players());
    if (op == "up" || op == "down" || op == "project") {
        if (x_csv.empty()) raise(Errc::param_error, "--op " + op + " needs --x");
        Allocation x = parse_payoffs(x_csv, g.players());
        if (op == "up")
            result = residual_up(x, g);
        else if (op == "down")
            result = residual_down(x, g);
        else {
            if (set_csv.empty()) raise(Errc::param_error, "--op project needs --set");
            result = project_nullified(x, g, resolve_set(set_csv, g));
        }
    } else if (op == "regrand") {
        if (alpha_text.empty()) raise(Errc::param_error, "--op regrand needs --alpha");
        result = replace_grand(g, Rational::parse(alpha_text));
    } else {
        raise(Errc::unknown_kind, "--op must be up, down, project, or regrand");
    }
    std::cout << serialize_game(result);
    return 0;
}

int cmd_gen(int players, const std::string& domain_text, std::uint64_t seed, std::size_t count,
            const std::string& special, const std::string& grand_text,
            const std::string& active_text, const std::string& base_game_path,
            const std::string& sign_text) {
    if (special == "inessential") {
        if (base_game_path.empty()) raise(Errc::param_error, "--special inessential needs --game");
        std::cout << serialize_game(gen_inessential(load_game(base_game_path)));
        return 0;
    }
    std::optional<Rational> grand;
    if (!grand_text.empty()) grand = Rational::parse(grand_text);

    auto one = [&](std::uint64_t s) -> Game {
        if (special.empty()) {
            GeneratorConfig gc;
            gc.players = players;
            gc.domain = parse_domain_arg(domain_text);
            gc.seed = s;
            if (sign_text == "non_neg")
                gc.sign = SignMode::non_neg;
            else if (sign_text == "non_pos")
                gc.sign = SignMode::non_pos;
            else if (sign_text == "random")
                gc.sign = SignMode::random_uniform;
            else
                raise(Errc::unknown_kind, "--sign must be non_neg, non_pos, or random");
            return gen_game(gc);
        }
        if (special == "w_class") return gen_w_class(players, s, grand);
        if (special == "w_prime_class") return gen_w_prime_class(players, s, grand);
        if (special == "two_active") {
            auto parts = split_csv(active_text);
            if (parts.size() != 2) raise(Errc::param_error, "--active needs two indices, \"i,j\"");
            return gen_two_active(players, std::stoi(parts[0]), std::stoi(parts[1]), s);
        }
        raise(Errc::unknown_kind,
              "--special must be w_class, w_prime_class, two_active, or inessential");
    };

    if (count == 1) {
        std::cout << serialize_game(one(seed));
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < count; ++c) arr.push_back(game_to_json(one(seed + c)));
        std::cout << arr.dump(2) << "\n";
    }
    return 0;
}

int cmd_audit(std::uint64_t seed, std::size_t trials) {
    AuditReport report = run_audit(seed, trials);
    std::cout << audit_json(report).dump(2) << "\n";
    std::cerr << audit_summary(report);
    return report.all_match ? 0 : 1;
}

int cmd_list(const std::string& what) {
    if (what == "solutions") {
        for (const auto& info : solution_registry()) {
            std::cout << info.name;
            if (!info.params.empty()) std::cout << ":" << info.params;
            std::cout << "\n    " << info.summary << "\n";
        }
        return 0;
    }
    if (what == "axioms") {
        for (Axiom a : all_axioms())
            std::cout << axiom_name(a) << " (on " << domain_name(axiom_domain(a)) << ")\n    "
                      << axiom_blurb(a) << "\n";
        return 0;
    }
    raise(Errc::unknown_kind, "list takes \"solutions\" or \"axioms\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational solutions and axiom checking for transferable-utility games"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "apply a solution to a game document");
    std::string solve_game, solve_spec;
    solve->add_option("--game", solve_game, "game document (JSON)")->required();
    solve->add_option("--solution", solve_spec, "solution spec, NAME[:k=v,...]")->required();

    auto* chk = app.add_subcommand("check", "check axioms against a solution over games");
    std::string chk_spec, chk_axioms, chk_domain = "V";
    int chk_theorem = 0, chk_players = 3;
    std::vector<std::string> chk_games;
    std::size_t chk_random = 0;
    std::uint64_t chk_seed = 0;
    chk->add_option("--solution", chk_spec, "solution spec")->required();
    auto* ax_opt = chk->add_option("--axiom", chk_axioms, "comma-separated axiom names (default: all)");
    chk->add_option("--theorem", chk_theorem, "axiom bundle 1..5")->excludes(ax_opt);
    chk->add_option("--game", chk_games, "game document; repeatable");
    chk->add_option("--random", chk_random, "additionally generate this many games");
    chk->add_option("--players", chk_players, "players for generated games (default 3)");
    chk->add_option("--domain", chk_domain, "class for generated games: all, V, VHAT (default V)");
    chk->add_option("--seed", chk_seed, "seed for generation and sampling (default 0)");

    auto* res = app.add_subcommand("residual", "derived-game operations on a game document");
    std::string res_game, res_op, res_x, res_set, res_alpha;
    res->add_option("--game", res_game, "game document (JSON)")->required();
    res->add_option("--op", res_op, "up | down | project | regrand")->required();
    res->add_option("--x", res_x, "payoff vector, comma-separated rationals");
    res->add_option("--set", res_set, "projection set, comma-separated player labels");
    res->add_option("--alpha", res_alpha, "replacement grand worth (rational)");

    auto* gen = app.add_subcommand("gen", "generate game documents");
    std::string gen_domain = "V", gen_special, gen_grand, gen_active = "0,1", gen_base,
                gen_sign = "random";
    int gen_players = 3;
    std::uint64_t gen_seed = 0;
    std::size_t gen_count = 1;
    gen->add_option("--players", gen_players, "number of players (default 3)");
    gen->add_option("--domain", gen_domain, "all, V, or VHAT (default V)");
    gen->add_option("--seed", gen_seed, "generator seed (default 0); game k uses seed+k");
    gen->add_option("--count", gen_count, "how many games (default 1; >1 emits a JSON array)");
    gen->add_option("--special", gen_special,
                    "w_class | w_prime_class | two_active | inessential");
    gen->add_option("--grand", gen_grand, "grand worth override for w_class/w_prime_class");
    gen->add_option("--active", gen_active, "active pair \"i,j\" for two_active (default 0,1)");
    gen->add_option("--game", gen_base, "base game document for --special inessential");
    gen->add_option("--sign", gen_sign, "VHAT singleton sign: non_neg, non_pos, random");

    auto* audit = app.add_subcommand("audit",
                                     "run the expected-verdict table; JSON to stdout, summary to stderr");
    std::uint64_t audit_seed = 42;
    std::size_t audit_trials = 200;
    audit->add_option("--seed", audit_seed, "master seed (default 42)");
    audit->add_option("--trials", audit_trials, "games per table row (default 200)");

    auto* list = app.add_subcommand("list", "list registered solutions or axioms");
    std::string list_what = "solutions";
    list->add_option("what", list_what, "solutions | axioms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) return cmd_solve(solve_game, solve_spec);
        if (*chk)
            return cmd_check(chk_spec, chk_axioms, chk_theorem, chk_games, chk_random, chk_players,
                             chk_domain, chk_seed);
        if (*res) return cmd_residual(res_game, res_op, res_x, res_set, res_alpha);
        if (*gen)
            return cmd_gen(gen_players, gen_domain, gen_seed, gen_count, gen_special, gen_grand,
                           gen_active, gen_base, gen_sign);
        if (*audit) return cmd_audit(audit_seed, audit_trials);
        if (*list) return cmd_list(list_what);
    } catch (const propdiv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
