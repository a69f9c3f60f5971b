#include "bruns/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "bruns/errors.hpp"

namespace bruns {

ReplacementConstants ReplacementConstants::from_dl_average(double dl_average,
                                                           double scale) {
    ReplacementConstants constants;
    constants.dl_average = dl_average;
    constants.scale = scale;
    constants.batsman_constant = (1.0 - scale) * dl_average;
    constants.bowler_constant = (1.0 + scale) * dl_average;
    return constants;
}

double reward_risk_ratio(const MomentSummary& summary, Role role,
                         const ReplacementConstants& constants) {
    if (summary.sd == 0.0) {
        throw DegenerateRisk("standard deviation is zero; reward-to-risk is undefined");
    }
    return role == Role::Batsman
               ? (summary.mean - constants.batsman_constant) / summary.sd
               : (constants.bowler_constant - summary.mean) / summary.sd;
}

double poisson_wickets(const BernoulliParams& params, const InningsSpec& spec) {
    validate(spec);
    return static_cast<double>(spec.max_balls) * params.dismissal_prob;
}

Evaluation evaluate_player(const PlayerRecord& record, const InningsSpec& spec,
                           const ReplacementConstants& constants) {
    Evaluation evaluation;
    evaluation.player = record;
    evaluation.params = derive_params(record);
    evaluation.summary = moment_summary(evaluation.params, spec);
    evaluation.rrr = reward_risk_ratio(evaluation.summary, record.role, constants);
    evaluation.expected_wickets = poisson_wickets(evaluation.params, spec);
    return evaluation;
}

RankOutcome rank_players(std::span<const PlayerRecord> records, const InningsSpec& spec,
                         const ReplacementConstants& constants) {
    if (records.empty()) {
        throw std::invalid_argument("rank_players: empty roster");
    }
    RankOutcome outcome;
    for (const PlayerRecord& record : records) {
        try {
            outcome.ranked.push_back(evaluate_player(record, spec, constants));
        } catch (const Error& e) {
            outcome.skipped.emplace_back(record.name, e.what());
        }
    }
    std::sort(outcome.ranked.begin(), outcome.ranked.end(),
              [](const Evaluation& a, const Evaluation& b) {
                  if (a.rrr != b.rrr) return a.rrr > b.rrr;
                  if (a.summary.mean != b.summary.mean) {
                      return a.summary.mean > b.summary.mean;
                  }
                  return a.player.name < b.player.name;
              });
    return outcome;
}

} // namespace bruns
