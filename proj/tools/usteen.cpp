#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "usteen/expr_io.hpp"
#include "usteen/verify.hpp"

namespace {

using namespace usteen;

std::vector<int> parse_pattern(const std::string& text) {
    std::vector<int> pattern;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (piece != "0" && piece != "1")
            throw BadEpsilon(piece.empty() ? -1 : std::stoll(piece));
        pattern.push_back(piece == "1");
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return pattern;
}

Strategy make_strategy(const std::string& name, std::uint64_t seed) {
    if (name == "leftmost")
        return Strategy::leftmost();
    if (name == "rightmost")
        return Strategy::rightmost();
    if (name == "random")
        return Strategy::seeded_random(seed);
    throw Error("unknown strategy: " + name);
}

nlohmann::json stats_json(const ReductionStats& stats) {
    return {{"steps", stats.steps},
            {"peak_terms", stats.peak_terms},
            {"cache_hits", stats.cache_hits},
            {"fuel_left", stats.fuel_left}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the universal Steenrod algebra at an odd prime"};
    app.require_subcommand(1);
    app.fallthrough();

    std::int64_t prime = 0;
    std::int64_t fuel = 1'000'000;
    std::string strategy_name = "leftmost";
    std::string output = "text";
    std::uint64_t seed = 0;

    app.add_option("-p,--prime", prime, "odd prime for all arithmetic")->required();
    app.add_option("--fuel", fuel, "rewrite-step budget per normal form")
        ->check(CLI::PositiveNumber);
    app.add_option("--strategy", strategy_name, "violation choice: leftmost|rightmost|random")
        ->check(CLI::IsMember({"leftmost", "rightmost", "random"}));
    app.add_option("--output", output, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for the random strategy and sampled suites");

    auto* cmd_relation = app.add_subcommand("relation", "print one generating relation");
    std::string family;
    std::int64_t rel_eps = 0, rel_k = 0, rel_n = 0;
    cmd_relation->add_option("family", family, "R or S")
        ->required()
        ->check(CLI::IsMember({"R", "S"}));
    cmd_relation->add_option("--eps", rel_eps)->required();
    cmd_relation->add_option("--k", rel_k)->required();
    cmd_relation->add_option("--n", rel_n)->required();

    auto* cmd_nf = app.add_subcommand("nf", "normal form of an expression");
    std::string nf_expr;
    cmd_nf->add_option("expr", nf_expr)->required();

    auto* cmd_map = app.add_subcommand("map", "apply an index-scaling map");
    std::string map_name;
    std::int64_t map_power = 1;
    std::string map_expr;
    cmd_map->add_option("--name", map_name)
        ->required()
        ->check(CLI::IsMember({"phi", "psi", "lambda", "theta"}));
    cmd_map->add_option("--power", map_power)->check(CLI::PositiveNumber);
    cmd_map->add_option("expr", map_expr)->required();

    auto* cmd_basis = app.add_subcommand("basis", "enumerate an admissible-word slice");
    std::int64_t basis_len = 0, basis_min = 0, basis_max = 0;
    std::string basis_pattern;
    cmd_basis->add_option("--length", basis_len)->required();
    cmd_basis->add_option("--min", basis_min)->required();
    cmd_basis->add_option("--max", basis_max)->required();
    cmd_basis->add_option("--pattern", basis_pattern, "comma-separated epsilons, e.g. 1,0,0");

    auto* cmd_contains = app.add_subcommand("contains", "relations containing a length-2 word");
    std::string contains_expr;
    cmd_contains->add_option("expr", contains_expr)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::int64_t opt_kmax = -1, opt_nmax = -1, opt_smax = -1, opt_samples = -1;
    {
        auto names = suite_names();
        names.push_back("all");
        cmd_verify->add_option("--suite", suite)->required()->check(CLI::IsMember(names));
    }
    cmd_verify->add_option("--kmax", opt_kmax);
    cmd_verify->add_option("--nmax", opt_nmax);
    cmd_verify->add_option("--smax", opt_smax);
    cmd_verify->add_option("--samples", opt_samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const bool json_out = output == "json";
    try {
        PrimeContext ctx = validate_prime(prime, fuel);

        if (cmd_relation->parsed()) {
            Poly rel = family == "R" ? relation_R(rel_eps, rel_k, rel_n, ctx)
                                     : relation_S(rel_eps, rel_k, rel_n, ctx);
            std::cout << (json_out ? encode_json(rel, ctx) : print_poly(rel, ctx)) << "\n";
            return 0;
        }

        if (cmd_nf->parsed()) {
            Poly x = parse_poly(nf_expr, ctx);
            NormalForm nf = normal_form(x, ctx, make_strategy(strategy_name, seed));
            if (json_out) {
                nlohmann::json j;
                j["poly"] = nlohmann::json::parse(encode_json(nf.poly, ctx));
                j["stats"] = stats_json(nf.stats);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << print_poly(nf.poly, ctx) << "\n";
                std::cout << "steps=" << nf.stats.steps << " peak_terms=" << nf.stats.peak_terms
                          << " cache_hits=" << nf.stats.cache_hits
                          << " fuel_left=" << nf.stats.fuel_left << "\n";
            }
            return 0;
        }

        if (cmd_map->parsed()) {
            MapName name = map_name == "phi"      ? MapName::Phi
                           : map_name == "psi"    ? MapName::Psi
                           : map_name == "lambda" ? MapName::Lambda
                                                  : MapName::Theta;
            Poly image = apply_map(name, parse_poly(map_expr, ctx), map_power, ctx);
            std::cout << (json_out ? encode_json(image, ctx) : print_poly(image, ctx)) << "\n";
            return 0;
        }

        if (cmd_basis->parsed()) {
            std::optional<std::vector<int>> pattern;
            if (!basis_pattern.empty())
                pattern = parse_pattern(basis_pattern);
            auto words = enumerate_admissible(basis_len, basis_min, basis_max, pattern, ctx);
            if (json_out) {
                std::cout << encode_json(words, ctx) << "\n";
            } else {
                for (const Word& w : words)
                    std::cout << print_word(w) << "\n";
            }
            return 0;
        }

        if (cmd_contains->parsed()) {
            Poly x = parse_poly(contains_expr, ctx);
            if (x.terms.size() != 1)
                throw WrongLength("contains expects a single monomial");
            auto ids = relations_containing(x.terms.front().first, ctx);
            if (json_out) {
                std::cout << encode_json(ids) << "\n";
            } else {
                for (const RelationId& id : ids)
                    std::cout << to_string(id) << "\n";
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            VerifyOptions opt;
            if (opt_kmax >= 0)
                opt.kmax = opt_kmax;
            if (opt_nmax >= 0)
                opt.nmax = opt_nmax;
            if (opt_smax >= 0)
                opt.smax = opt_smax;
            if (opt_samples >= 0)
                opt.samples = opt_samples;
            opt.seed = seed;
            auto reports = run_suites(suite, ctx, opt);
            bool all_passed = true;
            for (const SuiteReport& report : reports) {
                all_passed = all_passed && report.passed;
                std::cout << (json_out ? encode_json(report) + "\n" : format_text(report));
            }
            return all_passed ? 0 : 1;
        }
    } catch (const SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BadEpsilon& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NotOddPrime& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NegativeN& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NegativeInput& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const WrongLength& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainViolation& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const NotInSubspace& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const FuelExhausted& e) {
        std::cerr << e.what() << " (steps=" << e.stats.steps
                  << " peak_terms=" << e.stats.peak_terms << ")\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
