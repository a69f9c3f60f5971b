#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bruns/ingest.hpp"
#include "bruns/metrics.hpp"
#include "bruns/simulate.hpp"

namespace bruns::cli {

enum class Format { Table, Json };

using SimModel = std::variant<BernoulliParams, DiePmf>;

/// Rows plus everything that went wrong while producing them.
struct EvaluationReport {
    std::string command; // "evaluate" or "rank"
    std::vector<Evaluation> rows;
    std::vector<ParseWarning> warnings;
    std::vector<std::pair<std::string, std::string>> failures; // name, reason
};

/// Analytical-vs-simulated comparison produced by the verify command.
struct VerifyReport {
    MomentSummary analytical;
    SimulationResult simulated;
    double tolerance_sigmas = 0.0;
    double delta_mean = 0.0;
    double budget = 0.0; // tolerance_sigmas * sd / sqrt(n)
    bool pass = false;
};

/// Two-decimal display rounding, ties to even. Table mode only; json always
/// carries full precision.
double round2(double value);

void write_evaluation_report(std::ostream& out, const EvaluationReport& report,
                             Format format, const InningsSpec& spec,
                             const ReplacementConstants& constants);

void write_simulation_report(std::ostream& out, const SimulationResult& result,
                             const SimModel& model, Format format,
                             const InningsSpec& spec);

void write_verify_report(std::ostream& out, const VerifyReport& report, Format format,
                         const InningsSpec& spec);

} // namespace bruns::cli
