#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "bruns/errors.hpp"
#include "bruns/ingest.hpp"
#include "bruns/metrics.hpp"

namespace bruns::cli {
namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    return text;
}

int check_spec(const InningsSpec& spec, std::ostream& err) {
    try {
        validate(spec);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace

DiePmf parse_pmf(std::string_view text) {
    if (trim(text).empty()) {
        throw std::invalid_argument("pmf: empty model string");
    }
    if (trim(text) == "book-cricket") {
        return DiePmf::book_cricket();
    }
    DiePmf pmf;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view item =
            trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                  : comma - pos));
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("pmf: expected label:probability, got '" +
                                        std::string(item) + "'");
        }
        const std::string_view label = trim(item.substr(0, colon));
        const auto outcome = outcome_from_label(label);
        if (!outcome) {
            throw std::invalid_argument("pmf: unknown label '" + std::string(label) +
                                        "' (labels: out,0,1,2,3,4,6)");
        }
        const std::string_view prob_text = trim(item.substr(colon + 1));
        double prob = 0.0;
        const auto [ptr, ec] =
            std::from_chars(prob_text.data(), prob_text.data() + prob_text.size(), prob);
        if (ec != std::errc{} || ptr != prob_text.data() + prob_text.size()) {
            throw std::invalid_argument("pmf: probability is not a decimal: '" +
                                        std::string(prob_text) + "'");
        }
        pmf.outcomes.emplace_back(*outcome, prob);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }

    double sum = 0.0;
    for (const auto& [outcome, prob] : pmf.outcomes) {
        if (!(prob >= 0.0 && prob <= 1.0)) {
            throw std::invalid_argument("pmf: probability outside [0,1] for label '" +
                                        std::string(to_string(outcome)) + "'");
        }
        sum += prob;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("pmf: probabilities sum to " + std::to_string(sum) +
                                    ", not 1");
    }
    // Hand-typed decimals rarely sum to 1 exactly; scale the residue away.
    for (auto& [outcome, prob] : pmf.outcomes) {
        prob /= sum;
    }
    pmf.validate(1e-12);
    return pmf;
}

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err) {
    if (const int code = check_spec(options.spec, err)) return code;

    PlayerFile file;
    try {
        file = load_players(options.csv_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }

    const auto constants =
        ReplacementConstants::from_dl_average(options.dl_average, options.scale);
    EvaluationReport report;
    report.command = "evaluate";
    report.warnings = file.warnings;
    for (const PlayerRecord& record : file.records) {
        try {
            report.rows.push_back(evaluate_player(record, options.spec, constants));
        } catch (const Error& e) {
            report.failures.emplace_back(record.name, e.what());
        }
    }
    write_evaluation_report(out, report, options.format, options.spec, constants);
    return report.warnings.empty() && report.failures.empty() ? kExitOk : kExitData;
}

int cmd_rank(const EvaluateOptions& options, std::ostream& out, std::ostream& err) {
    if (const int code = check_spec(options.spec, err)) return code;

    PlayerFile file;
    try {
        file = load_players(options.csv_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }

    std::vector<PlayerRecord> records;
    for (const PlayerRecord& record : file.records) {
        if (!options.role_filter || record.role == *options.role_filter) {
            records.push_back(record);
        }
    }

    const auto constants =
        ReplacementConstants::from_dl_average(options.dl_average, options.scale);
    EvaluationReport report;
    report.command = "rank";
    report.warnings = file.warnings;
    try {
        RankOutcome ranked = rank_players(records, options.spec, constants);
        report.rows = std::move(ranked.ranked);
        report.failures = std::move(ranked.skipped);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    write_evaluation_report(out, report, options.format, options.spec, constants);
    return report.warnings.empty() && report.failures.empty() ? kExitOk : kExitData;
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
    if (const int code = check_spec(options.spec, err)) return code;

    SimulationResult result;
    try {
        result = std::visit(
            [&](const auto& model) {
                return run_ensemble(model, options.spec, options.n, options.seed,
                                    options.workers);
            },
            options.model);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    write_simulation_report(out, result, options.model, options.format, options.spec);
    return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    if (const int code = check_spec(options.spec, err)) return code;

    BernoulliParams params;
    try {
        params = derive_params(options.player);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }

    VerifyReport report;
    report.analytical = moment_summary(params, options.spec);
    report.simulated =
        run_ensemble(params, options.spec, options.n, options.seed, options.workers);
    report.tolerance_sigmas = options.tolerance_sigmas;
    report.delta_mean = std::abs(report.simulated.mean - report.analytical.mean);
    report.budget = options.tolerance_sigmas * report.analytical.sd /
                    std::sqrt(static_cast<double>(options.n));
    report.pass = report.delta_mean <= report.budget;
    write_verify_report(out, report, options.format, options.spec);
    return report.pass ? kExitOk : kExitVerifyFailed;
}

} // namespace bruns::cli
