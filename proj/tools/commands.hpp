#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "report.hpp"

#include "bruns/model.hpp"
#include "bruns/simulate.hpp"

namespace bruns::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitVerifyFailed = 3;

struct EvaluateOptions {
    std::string csv_path;
    InningsSpec spec{};
    double dl_average = 235.0;
    double scale = 0.2;
    Format format = Format::Table;
    std::optional<Role> role_filter; // rank only
};

struct SimulateOptions {
    SimModel model;
    InningsSpec spec{};
    std::uint64_t n = 10000;
    std::uint64_t seed = 0;
    int workers = 1;
    Format format = Format::Table;
};

struct VerifyOptions {
    PlayerRecord player;
    InningsSpec spec{};
    std::uint64_t n = 200000;
    std::uint64_t seed = 0;
    int workers = 1;
    double tolerance_sigmas = 4.0;
    Format format = Format::Table;
};

/// Inline pmf syntax: comma-joined `label:probability` pairs with labels
/// out, 0, 1, 2, 3, 4, 6 — e.g. "out:0.2,1:0.2,2:0.2,4:0.2,6:0.2".
/// The name "book-cricket" resolves to the uniform five-outcome preset.
/// Probabilities must sum to 1 within 1e-9 and are renormalized exactly.
/// Throws std::invalid_argument on any violation.
DiePmf parse_pmf(std::string_view text);

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err);
int cmd_rank(const EvaluateOptions& options, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

} // namespace bruns::cli
