#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bruns/model.hpp"
#include "bruns/rng.hpp"

namespace bruns {

/// Per-ball outcome of a die model. Out takes a wicket; Run_k scores k.
enum class BallOutcome { Out, Run0, Run1, Run2, Run3, Run4, Run6 };

int run_value(BallOutcome outcome);
std::string_view to_string(BallOutcome outcome);
std::optional<BallOutcome> outcome_from_label(std::string_view label);

/// Categorical per-ball outcome distribution.
///
/// A pmf without a positive Out probability never ends an innings by
/// dismissal; the finite ball quota in InningsSpec still terminates it.
struct DiePmf {
    std::vector<std::pair<BallOutcome, double>> outcomes;

    /// Throws std::invalid_argument if probabilities leave [0,1], repeat a
    /// label, or miss summing to 1 by more than `tol`.
    void validate(double tol = 1e-12) const;

    int max_run_value() const;

    /// The schoolroom game: out, 1, 2, 4 and 6 each with probability 1/5.
    static DiePmf book_cricket();
};

/// Terminal state of one simulated innings.
struct InningsOutcome {
    double runs = 0.0; // integral for die models, multiples of r for coin model
    int wickets = 0;
    int balls = 0;
};

struct SimulationResult {
    std::uint64_t n_innings = 0;
    double mean = 0.0;
    double sd = 0.0; // unbiased, n-1 denominator; 0 when n == 1
    double min = 0.0;
    double max = 0.0;
    double wickets_mean = 0.0;
    std::uint64_t seed = 0;
};

/// One innings under the coin model: each ball is a wicket with probability
/// q, otherwise scores exactly r runs. Stops at W wickets or B balls.
/// Total runs is r times the number of scoring balls, so the ensemble mean
/// is an unbiased estimator of the analytical mean.
InningsOutcome simulate_bernoulli_innings(const BernoulliParams& params,
                                          const InningsSpec& spec, SplitMix64& rng);

/// One innings under a die model: each ball draws one outcome from the pmf.
InningsOutcome simulate_die_innings(const DiePmf& pmf, const InningsSpec& spec,
                                    SplitMix64& rng);

/// n independent innings with per-innings RNG streams keyed by (seed, index).
/// The result is bit-identical for identical (model, spec, n, seed) whatever
/// the worker count: innings i always uses stream i and the reduction runs
/// in index order.
SimulationResult run_ensemble(const BernoulliParams& params, const InningsSpec& spec,
                              std::uint64_t n, std::uint64_t seed, int workers = 1);
SimulationResult run_ensemble(const DiePmf& pmf, const InningsSpec& spec,
                              std::uint64_t n, std::uint64_t seed, int workers = 1);

} // namespace bruns
