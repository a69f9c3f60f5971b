#include "bruns/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "bruns/compensated.hpp"

namespace bruns {

int run_value(BallOutcome outcome) {
    switch (outcome) {
    case BallOutcome::Out:
    case BallOutcome::Run0:
        return 0;
    case BallOutcome::Run1:
        return 1;
    case BallOutcome::Run2:
        return 2;
    case BallOutcome::Run3:
        return 3;
    case BallOutcome::Run4:
        return 4;
    case BallOutcome::Run6:
        return 6;
    }
    return 0;
}

std::string_view to_string(BallOutcome outcome) {
    switch (outcome) {
    case BallOutcome::Out:
        return "out";
    case BallOutcome::Run0:
        return "0";
    case BallOutcome::Run1:
        return "1";
    case BallOutcome::Run2:
        return "2";
    case BallOutcome::Run3:
        return "3";
    case BallOutcome::Run4:
        return "4";
    case BallOutcome::Run6:
        return "6";
    }
    return "?";
}

std::optional<BallOutcome> outcome_from_label(std::string_view label) {
    if (label == "out") return BallOutcome::Out;
    if (label == "0") return BallOutcome::Run0;
    if (label == "1") return BallOutcome::Run1;
    if (label == "2") return BallOutcome::Run2;
    if (label == "3") return BallOutcome::Run3;
    if (label == "4") return BallOutcome::Run4;
    if (label == "6") return BallOutcome::Run6;
    return std::nullopt;
}

void DiePmf::validate(double tol) const {
    if (outcomes.empty()) {
        throw std::invalid_argument("pmf: no outcomes");
    }
    std::array<bool, 7> seen{};
    double sum = 0.0;
    for (const auto& [outcome, prob] : outcomes) {
        if (!(prob >= 0.0 && prob <= 1.0)) {
            throw std::invalid_argument("pmf: probability outside [0,1] for label '" +
                                        std::string(to_string(outcome)) + "'");
        }
        auto& flag = seen[static_cast<std::size_t>(outcome)];
        if (flag) {
            throw std::invalid_argument("pmf: duplicate label '" +
                                        std::string(to_string(outcome)) + "'");
        }
        flag = true;
        sum += prob;
    }
    if (std::abs(sum - 1.0) > tol) {
        throw std::invalid_argument("pmf: probabilities sum to " + std::to_string(sum) +
                                    ", not 1");
    }
}

int DiePmf::max_run_value() const {
    int best = 0;
    for (const auto& [outcome, prob] : outcomes) {
        if (prob > 0.0) best = std::max(best, run_value(outcome));
    }
    return best;
}

DiePmf DiePmf::book_cricket() {
    return DiePmf{{{BallOutcome::Out, 0.2},
                   {BallOutcome::Run1, 0.2},
                   {BallOutcome::Run2, 0.2},
                   {BallOutcome::Run4, 0.2},
                   {BallOutcome::Run6, 0.2}}};
}

InningsOutcome simulate_bernoulli_innings(const BernoulliParams& params,
                                          const InningsSpec& spec, SplitMix64& rng) {
    validate(spec);
    int scoring_balls = 0;
    int wickets = 0;
    int balls = 0;
    while (balls < spec.max_balls && wickets < spec.max_wickets) {
        ++balls;
        if (rng.next_double() < params.dismissal_prob) {
            ++wickets;
        } else {
            ++scoring_balls;
        }
    }
    return {params.runs_per_ball * scoring_balls, wickets, balls};
}

InningsOutcome simulate_die_innings(const DiePmf& pmf, const InningsSpec& spec,
                                    SplitMix64& rng) {
    validate(spec);
    pmf.validate();
    long long runs = 0;
    int wickets = 0;
    int balls = 0;
    while (balls < spec.max_balls && wickets < spec.max_wickets) {
        ++balls;
        const double u = rng.next_double();
        // Inverse-CDF walk in stored order; the last outcome absorbs any
        // floating-point residue at the top of the cumulative scale.
        BallOutcome drawn = pmf.outcomes.back().first;
        double cumulative = 0.0;
        for (const auto& [outcome, prob] : pmf.outcomes) {
            cumulative += prob;
            if (u < cumulative) {
                drawn = outcome;
                break;
            }
        }
        if (drawn == BallOutcome::Out) {
            ++wickets;
        } else {
            runs += run_value(drawn);
        }
    }
    return {static_cast<double>(runs), wickets, balls};
}

namespace {

// Fills per-innings outcomes (innings i from stream i), then reduces them
// in index order, so the bits of the result cannot depend on the worker
// count or on scheduling.
template <typename SimulateOne>
SimulationResult ensemble_impl(SimulateOne simulate_one, std::uint64_t n,
                               std::uint64_t seed, int workers) {
    if (n < 1) {
        throw std::invalid_argument("ensemble: need at least one innings");
    }
    workers = std::max(workers, 1);
    std::vector<double> runs(n);
    std::vector<int> wickets(n);

    auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            SplitMix64 rng = innings_stream(seed, i);
            const InningsOutcome innings = simulate_one(rng);
            runs[i] = innings.runs;
            wickets[i] = innings.wickets;
        }
    };

    if (workers == 1 || n < static_cast<std::uint64_t>(workers)) {
        fill(0, n);
    } else {
        const std::uint64_t chunk = (n + workers - 1) / workers;
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
            if (lo >= n) break;
            threads.emplace_back(fill, lo, std::min(n, lo + chunk));
        }
        for (auto& t : threads) t.join();
    }

    CompensatedSum run_sum;
    CompensatedSum wicket_sum;
    double lo = runs[0];
    double hi = runs[0];
    for (std::uint64_t i = 0; i < n; ++i) {
        run_sum.add(runs[i]);
        wicket_sum.add(static_cast<double>(wickets[i]));
        lo = std::min(lo, runs[i]);
        hi = std::max(hi, runs[i]);
    }
    const double mean = run_sum.value() / static_cast<double>(n);

    double sd = 0.0;
    if (n > 1) {
        CompensatedSum sq_sum;
        for (std::uint64_t i = 0; i < n; ++i) {
            const double d = runs[i] - mean;
            sq_sum.add(d * d);
        }
        sd = std::sqrt(sq_sum.value() / static_cast<double>(n - 1));
    }

    SimulationResult result;
    result.n_innings = n;
    result.mean = mean;
    result.sd = sd;
    result.min = lo;
    result.max = hi;
    result.wickets_mean = wicket_sum.value() / static_cast<double>(n);
    result.seed = seed;
    return result;
}

} // namespace

SimulationResult run_ensemble(const BernoulliParams& params, const InningsSpec& spec,
                              std::uint64_t n, std::uint64_t seed, int workers) {
    validate(spec);
    return ensemble_impl(
        [&](SplitMix64& rng) { return simulate_bernoulli_innings(params, spec, rng); }, n,
        seed, workers);
}

SimulationResult run_ensemble(const DiePmf& pmf, const InningsSpec& spec, std::uint64_t n,
                              std::uint64_t seed, int workers) {
    validate(spec);
    pmf.validate();
    return ensemble_impl(
        [&](SplitMix64& rng) { return simulate_die_innings(pmf, spec, rng); }, n, seed,
        workers);
}

} // namespace bruns
