#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bruns/analytical.hpp"
#include "bruns/model.hpp"

namespace bruns {

/// Replacement-level baselines for the reward-to-risk ratio.
///
/// The defaults come from the Duckworth-Lewis par score of 235 runs scaled
/// by the 20% value-over-replacement convention: a team of replacement
/// batsmen scores 0.8 * 235 = 188, a team of replacement bowlers concedes
/// 1.2 * 235 = 282.
struct ReplacementConstants {
    double dl_average = 235.0;
    double scale = 0.2;
    double batsman_constant = 188.0;
    double bowler_constant = 282.0;

    /// Derives both constants from a par score: (1 -+ scale) * dl_average.
    static ReplacementConstants from_dl_average(double dl_average, double scale = 0.2);
};

/// Full evaluation of one player under one innings spec.
struct Evaluation {
    PlayerRecord player;
    BernoulliParams params;
    MomentSummary summary;
    double rrr = 0.0;              // reward-to-risk ratio
    double expected_wickets = 0.0; // Poisson rate over the innings
};

/// Sharpe-style ratio against the replacement baseline:
/// (mean - c_batsman) / sd for batsmen, (c_bowler - mean) / sd for bowlers.
/// Throws DegenerateRisk when sd == 0 rather than returning an infinity.
double reward_risk_ratio(const MomentSummary& summary, Role role,
                         const ReplacementConstants& constants);

/// Dismissals are rare per ball, so wickets lost in B balls are close to
/// Poisson with rate lambda = B * q. Returned unconstrained (not capped at
/// the wicket limit).
double poisson_wickets(const BernoulliParams& params, const InningsSpec& spec);

/// Chains the whole pipeline: career figures -> coin model -> innings
/// moments -> reward-to-risk and expected wickets.
Evaluation evaluate_player(const PlayerRecord& record, const InningsSpec& spec,
                           const ReplacementConstants& constants);

struct RankOutcome {
    std::vector<Evaluation> ranked;
    std::vector<std::pair<std::string, std::string>> skipped; // name, reason
};

/// Evaluations sorted by rrr descending, ties by mean descending then name
/// ascending. Records that fail evaluation are skipped and reported in
/// `skipped`, never silently dropped.
RankOutcome rank_players(std::span<const PlayerRecord> records, const InningsSpec& spec,
                         const ReplacementConstants& constants);

} // namespace bruns
