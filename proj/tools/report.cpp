#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "bruns/version.hpp"

namespace bruns::cli {
namespace {

using json = nlohmann::ordered_json;

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

json metadata_json(const InningsSpec& spec) {
    return json{{"version", kVersion},
                {"balls", spec.max_balls},
                {"wickets", spec.max_wickets}};
}

json constants_json(const ReplacementConstants& constants) {
    return json{{"dl_average", constants.dl_average},
                {"scale", constants.scale},
                {"batsman_constant", constants.batsman_constant},
                {"bowler_constant", constants.bowler_constant}};
}

json model_json(const SimModel& model) {
    if (const auto* coin = std::get_if<BernoulliParams>(&model)) {
        return json{{"type", "bernoulli"},
                    {"runs_per_ball", coin->runs_per_ball},
                    {"dismissal_prob", coin->dismissal_prob}};
    }
    const auto& die = std::get<DiePmf>(model);
    json pmf = json::object();
    for (const auto& [outcome, prob] : die.outcomes) {
        pmf[std::string(to_string(outcome))] = prob;
    }
    return json{{"type", "die"}, {"pmf", pmf}};
}

json result_json(const SimulationResult& result) {
    return json{{"n_innings", result.n_innings},
                {"mean", result.mean},
                {"sd", result.sd},
                {"min", result.min},
                {"max", result.max},
                {"wickets_mean", result.wickets_mean},
                {"seed", result.seed}};
}

void write_table_header(std::ostream& out) {
    out << "name                      role     avg     rate    mean      sd     rrr\n";
}

void write_table_row(std::ostream& out, const Evaluation& ev) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-25s %-8s %6.2f %8.2f %8.2f %7.2f %7.2f\n",
                  ev.player.name.c_str(), std::string(to_string(ev.player.role)).c_str(),
                  ev.player.avg, ev.player.rate, round2(ev.summary.mean),
                  round2(ev.summary.sd), round2(ev.rrr));
    out << buf;
}

} // namespace

double round2(double value) {
    // nearbyint under the default FE_TONEAREST mode rounds ties to even
    return std::nearbyint(value * 100.0) / 100.0;
}

void write_evaluation_report(std::ostream& out, const EvaluationReport& report,
                             Format format, const InningsSpec& spec,
                             const ReplacementConstants& constants) {
    if (format == Format::Table) {
        write_table_header(out);
        for (const Evaluation& ev : report.rows) {
            write_table_row(out, ev);
        }
        for (const auto& [line, message] : report.warnings) {
            out << "warning: line " << line << ": " << message << '\n';
        }
        for (const auto& [name, reason] : report.failures) {
            out << "skipped: " << name << ": " << reason << '\n';
        }
        return;
    }

    json doc;
    doc["command"] = report.command;
    json meta = metadata_json(spec);
    meta["constants"] = constants_json(constants);
    doc["metadata"] = meta;
    doc["players"] = json::array();
    int rank = 0;
    for (const Evaluation& ev : report.rows) {
        json row{{"name", ev.player.name},
                 {"role", std::string(to_string(ev.player.role))},
                 {"avg", ev.player.avg},
                 {"rate", ev.player.rate},
                 {"runs_per_ball", ev.params.runs_per_ball},
                 {"dismissal_prob", ev.params.dismissal_prob},
                 {"mean", ev.summary.mean},
                 {"sd", ev.summary.sd},
                 {"rrr", ev.rrr},
                 {"expected_wickets", ev.expected_wickets}};
        if (report.command == "rank") {
            row["rank"] = ++rank;
        }
        doc["players"].push_back(std::move(row));
    }
    doc["warnings"] = json::array();
    for (const auto& [line, message] : report.warnings) {
        doc["warnings"].push_back(json{{"line", line}, {"message", message}});
    }
    doc["skipped"] = json::array();
    for (const auto& [name, reason] : report.failures) {
        doc["skipped"].push_back(json{{"name", name}, {"reason", reason}});
    }
    out << doc.dump(2) << '\n';
}

void write_simulation_report(std::ostream& out, const SimulationResult& result,
                             const SimModel& model, Format format,
                             const InningsSpec& spec) {
    if (format == Format::Table) {
        if (const auto* coin = std::get_if<BernoulliParams>(&model)) {
            out << "model         bernoulli r=" << coin->runs_per_ball
                << " q=" << coin->dismissal_prob << '\n';
        } else {
            out << "model         die";
            for (const auto& [outcome, prob] : std::get<DiePmf>(model).outcomes) {
                out << ' ' << to_string(outcome) << ':' << prob;
            }
            out << '\n';
        }
        out << "innings       " << result.n_innings << '\n'
            << "seed          " << result.seed << '\n'
            << "mean          " << fixed(result.mean, 4) << '\n'
            << "sd            " << fixed(result.sd, 4) << '\n'
            << "min           " << fixed(result.min, 4) << '\n'
            << "max           " << fixed(result.max, 4) << '\n'
            << "wickets_mean  " << fixed(result.wickets_mean, 4) << '\n';
        return;
    }

    json doc;
    doc["command"] = "simulate";
    json meta = metadata_json(spec);
    meta["seed"] = result.seed;
    doc["metadata"] = meta;
    doc["model"] = model_json(model);
    doc["result"] = result_json(result);
    out << doc.dump(2) << '\n';
}

void write_verify_report(std::ostream& out, const VerifyReport& report, Format format,
                         const InningsSpec& spec) {
    if (format == Format::Table) {
        out << "analytical    mean=" << fixed(report.analytical.mean, 6)
            << "  sd=" << fixed(report.analytical.sd, 6) << '\n'
            << "simulated     mean=" << fixed(report.simulated.mean, 6)
            << "  sd=" << fixed(report.simulated.sd, 6)
            << "  (n=" << report.simulated.n_innings << ", seed=" << report.simulated.seed
            << ")\n"
            << "|mean delta|  " << fixed(report.delta_mean, 6) << "  budget "
            << fixed(report.budget, 6) << "  (" << report.tolerance_sigmas
            << " x sd/sqrt(n))\n"
            << (report.pass ? "PASS" : "FAIL") << '\n';
        return;
    }

    json doc;
    doc["command"] = "verify";
    json meta = metadata_json(spec);
    meta["seed"] = report.simulated.seed;
    meta["tolerance_sigmas"] = report.tolerance_sigmas;
    doc["metadata"] = meta;
    doc["analytical"] = json{{"mean", report.analytical.mean},
                             {"sd", report.analytical.sd}};
    doc["simulated"] = result_json(report.simulated);
    doc["delta_mean"] = report.delta_mean;
    doc["budget"] = report.budget;
    doc["pass"] = report.pass;
    out << doc.dump(2) << '\n';
}

} // namespace bruns::cli
