#include <cctype>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

#include "bruns/errors.hpp"
#include "bruns/version.hpp"

namespace {

using namespace bruns;
using namespace bruns::cli;

std::string lowercase(std::string text) {
    for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return text;
}

Role role_from(const std::string& text) {
    return lowercase(text) == "bowler" ? Role::Bowler : Role::Batsman;
}

Format format_from(const std::string& text) {
    return lowercase(text) == "json" ? Format::Json : Format::Table;
}

void add_innings_flags(CLI::App* cmd, InningsSpec& spec) {
    cmd->add_option("--balls", spec.max_balls, "ball quota per innings")
        ->capture_default_str();
    cmd->add_option("--wickets", spec.max_wickets, "wickets per innings")
        ->capture_default_str();
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}, CLI::ignore_case))
        ->capture_default_str();
}

CLI::Option* add_role_flag(CLI::App* cmd, std::string& role, const char* help) {
    return cmd->add_option("--role", role, help)
        ->check(CLI::IsMember({"batsman", "bowler"}, CLI::ignore_case));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coin-toss innings model: evaluate, rank and simulate cricketers"};
    app.set_version_flag("--version", std::string("bruns ") + kVersion);
    app.require_subcommand(1);

    EvaluateOptions eval_options;
    std::string eval_format = "table";
    auto* evaluate = app.add_subcommand(
        "evaluate", "Mean, sd and reward-to-risk for every player in a CSV file");
    evaluate->add_option("csv", eval_options.csv_path, "player file (name,role,avg,rate)")
        ->required();
    add_innings_flags(evaluate, eval_options.spec);
    evaluate->add_option("--dl-average", eval_options.dl_average, "par score baseline")
        ->capture_default_str();
    evaluate->add_option("--scale", eval_options.scale, "replacement-player scale factor")
        ->capture_default_str();
    add_format_flag(evaluate, eval_format);

    EvaluateOptions rank_options;
    std::string rank_format = "table";
    std::string rank_role;
    auto* rank =
        app.add_subcommand("rank", "Players ordered by reward-to-risk, best first");
    rank->add_option("csv", rank_options.csv_path, "player file (name,role,avg,rate)")
        ->required();
    auto* rank_role_opt = add_role_flag(rank, rank_role, "keep only this role");
    add_innings_flags(rank, rank_options.spec);
    rank->add_option("--dl-average", rank_options.dl_average, "par score baseline")
        ->capture_default_str();
    rank->add_option("--scale", rank_options.scale, "replacement-player scale factor")
        ->capture_default_str();
    add_format_flag(rank, rank_format);

    double sim_avg = 0.0;
    double sim_rate = 0.0;
    std::string sim_role = "batsman";
    std::string sim_pmf;
    std::string sim_format = "table";
    SimulateOptions sim_options;
    auto* simulate =
        app.add_subcommand("simulate", "Monte Carlo ensemble of innings for one model");
    auto* avg_opt = simulate->add_option("--avg", sim_avg, "career average");
    auto* rate_opt = simulate->add_option(
        "--rate", sim_rate, "strike rate (batsman) or economy (bowler)");
    auto* role_opt = add_role_flag(simulate, sim_role, "batsman or bowler");
    auto* pmf_opt = simulate->add_option(
        "--pmf", sim_pmf,
        "die model, e.g. out:0.2,1:0.2,2:0.2,4:0.2,6:0.2 or the preset book-cricket");
    pmf_opt->excludes(avg_opt)->excludes(rate_opt)->excludes(role_opt);
    simulate->add_option("--n", sim_options.n, "innings to simulate")
        ->capture_default_str();
    simulate->add_option("--seed", sim_options.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--workers", sim_options.workers, "worker threads")
        ->capture_default_str();
    add_innings_flags(simulate, sim_options.spec);
    add_format_flag(simulate, sim_format);

    VerifyOptions verify_options;
    std::string verify_role;
    std::string verify_format = "table";
    auto* verify = app.add_subcommand(
        "verify", "Check the analytical mean against a Monte Carlo ensemble");
    verify->add_option("--avg", verify_options.player.avg, "career average")->required();
    verify
        ->add_option("--rate", verify_options.player.rate,
                     "strike rate (batsman) or economy (bowler)")
        ->required();
    add_role_flag(verify, verify_role, "batsman or bowler")->required();
    verify->add_option("--n", verify_options.n, "innings to simulate")
        ->capture_default_str();
    verify->add_option("--seed", verify_options.seed, "RNG seed")->capture_default_str();
    verify
        ->add_option("--tolerance-sigmas", verify_options.tolerance_sigmas,
                     "budget in standard errors")
        ->capture_default_str();
    verify->add_option("--workers", verify_options.workers, "worker threads")
        ->capture_default_str();
    add_innings_flags(verify, verify_options.spec);
    add_format_flag(verify, verify_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (evaluate->parsed()) {
        eval_options.format = format_from(eval_format);
        return cmd_evaluate(eval_options, std::cout, std::cerr);
    }
    if (rank->parsed()) {
        rank_options.format = format_from(rank_format);
        if (rank_role_opt->count() > 0) {
            rank_options.role_filter = role_from(rank_role);
        }
        return cmd_rank(rank_options, std::cout, std::cerr);
    }
    if (simulate->parsed()) {
        sim_options.format = format_from(sim_format);
        if (pmf_opt->count() > 0) {
            try {
                sim_options.model = parse_pmf(sim_pmf);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitUsage;
            }
        } else if (avg_opt->count() > 0 && rate_opt->count() > 0 &&
                   role_opt->count() > 0) {
            try {
                sim_options.model =
                    derive_params({"player", role_from(sim_role), sim_avg, sim_rate});
            } catch (const Error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitData;
            }
        } else {
            std::cerr << "error: need a model: --pmf, or all of --avg --rate --role\n";
            return kExitUsage;
        }
        return cmd_simulate(sim_options, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        verify_options.player.name = "player";
        verify_options.player.role = role_from(verify_role);
        verify_options.format = format_from(verify_format);
        return cmd_verify(verify_options, std::cout, std::cerr);
    }
    return kExitUsage;
}
