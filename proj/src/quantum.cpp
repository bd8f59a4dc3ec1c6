#include "setq/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "setq/rational.hpp"
#include "setq/rng.hpp"

namespace setq {

StateVector StateVector::uniform(int dim) {
    require(dim >= 1, Errc::DimensionMismatch, "dimension must be positive");
    StateVector s;
    s.amplitudes.assign(static_cast<std::size_t>(dim),
                        Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return s;
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const Amplitude& a : amplitudes) total += std::norm(a);
    return total;
}

PhaseOracle::PhaseOracle(int dim, const MarkedPredicate& marked) {
    require(dim >= 1, Errc::DimensionMismatch, "dimension must be positive");
    mask_.resize(static_cast<std::size_t>(dim));
    for (int i = 1; i <= dim; ++i) {
        const bool hit = marked(i);
        mask_[static_cast<std::size_t>(i - 1)] = hit ? 1 : 0;
        marked_count_ += hit;
    }
}

void PhaseOracle::apply(StateVector& state, QueryCounter& queries) const {
    require(state.dim() == dim(), Errc::DimensionMismatch,
            "state dimension " + std::to_string(state.dim()) + " differs from oracle domain " +
                std::to_string(dim()));
    queries.add();
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) state.amplitudes[i] = -state.amplitudes[i];
}

bool PhaseOracle::classical_query(int i, QueryCounter& queries) const {
    require(i >= 1 && i <= dim(), Errc::OutOfRange, "query index outside domain");
    queries.add();
    return is_marked(i);
}

double PhaseOracle::marked_probability(const StateVector& state) const {
    double p = 0.0;
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) p += std::norm(state.amplitudes[i]);
    return p;
}

StateVector phase_oracle_apply(const StateVector& state, const MarkedPredicate& marked,
                               QueryCounter& queries) {
    const PhaseOracle oracle(state.dim(), marked);
    StateVector out = state;
    oracle.apply(out, queries);
    return out;
}

void diffusion(StateVector& state) {
    Amplitude mean(0.0, 0.0);
    for (const Amplitude& a : state.amplitudes) mean += a;
    mean /= static_cast<double>(state.dim());
    for (Amplitude& a : state.amplitudes) a = 2.0 * mean - a;
}

double grover_closed_form(int dim, int marked_count, int iterations) {
    const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) / dim));
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

GroverResult grover_search(int dim, const MarkedPredicate& marked, int iterations) {
    require(iterations >= 0, Errc::InvalidParams, "iteration count must be non-negative");
    const PhaseOracle oracle(dim, marked);
    QueryCounter queries;

    StateVector state = StateVector::uniform(dim);
    for (int t = 0; t < iterations; ++t) {
        oracle.apply(state, queries);
        diffusion(state);
    }

    GroverResult result;
    result.distribution.reserve(static_cast<std::size_t>(dim));
    for (const Amplitude& a : state.amplitudes) result.distribution.push_back(std::norm(a));
    result.success_probability = oracle.marked_probability(state);
    result.norm_error = std::abs(state.norm_sq() - 1.0);
    result.queries_used = queries.count();
    return result;
}

std::string answer_text(const Answer& answer, int found_index) {
    switch (answer) {
        case Answer::Equal: return "equal";
        case Answer::Disjoint: return "disjoint";
        case Answer::Found: return std::to_string(found_index);
        case Answer::NotFound: return "not_found";
    }
    return "not_found";
}

namespace {

// Measurement in the domain basis: sample a 1-based index from |amp|^2.
int sample_index(const StateVector& state, Rng& rng) {
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (int i = 1; i <= state.dim(); ++i) {
        cumulative += std::norm(state.amp(i));
        if (u < cumulative) return i;
    }
    return state.dim();
}

RunResult run_amplification(const PhaseOracle& oracle, std::uint64_t seed,
                            std::uint64_t max_queries) {
    require(max_queries >= 1, Errc::InvalidParams, "query budget must be at least 1");
    const int dim = oracle.dim();
    Rng rng(derive_seed(seed, {0x616d70ULL}));
    QueryCounter queries;

    RunResult result;
    result.seed = seed;

    // BBHT-style schedule: round lengths uniform in {0, ..., ceil(T)-1},
    // T *= 6/5 per failed round, capped at sqrt(dim). The cap on j keeps one
    // query in reserve for the round's classical verification.
    double schedule_limit = 1.0;
    const double schedule_cap = std::max(1.0, std::sqrt(static_cast<double>(dim)));
    double all_rounds_fail = 1.0;

    while (queries.count() < max_queries) {
        const std::uint64_t remaining = max_queries - queries.count();
        std::uint64_t rounds =
            rng.uniform_below(static_cast<std::uint64_t>(std::ceil(schedule_limit)));
        rounds = std::min(rounds, remaining - 1);

        StateVector state = StateVector::uniform(dim);
        for (std::uint64_t t = 0; t < rounds; ++t) {
            oracle.apply(state, queries);
            diffusion(state);
        }
        all_rounds_fail *= 1.0 - oracle.marked_probability(state);

        const int candidate = sample_index(state, rng);
        if (oracle.classical_query(candidate, queries)) {
            result.answer = Answer::Found;
            result.found_index = candidate;
            break;
        }
        schedule_limit = std::min(schedule_limit * 1.2, schedule_cap);
    }

    result.queries_used = queries.count();
    result.exact_success_probability = 1.0 - all_rounds_fail;
    result.success = (oracle.marked_count() > 0) == (result.answer == Answer::Found);
    return result;
}

std::uint64_t scaled_budget(double budget_constant, std::int64_t units) {
    const double raw = budget_constant * static_cast<double>(units);
    return raw < 1.0 ? 1 : static_cast<std::uint64_t>(std::llround(raw));
}

// Smallest integer s with s^2 * k >= n, i.e. ceil(sqrt(n / k)).
std::int64_t ceil_sqrt_ratio(std::int64_t n, std::int64_t k) {
    std::int64_t s = ceil_sqrt(n / k);
    while (s * s * k < n) ++s;
    while (s >= 1 && (s - 1) * (s - 1) * k >= n) --s;
    return s;
}

RunResult finish_set_equality_run(RunResult amplified, std::uint64_t extra_queries,
                                  const SetEqualityInstance& inst, std::uint64_t seed) {
    RunResult result = amplified;
    result.answer = amplified.answer == Answer::Found ? Answer::Equal : Answer::Disjoint;
    result.found_index = 0;
    result.queries_used += extra_queries;
    result.seed = seed;
    const SetPromise truth = inst.promise;
    result.success = (result.answer == Answer::Equal) == (truth == SetPromise::Equal);
    return result;
}

}  // namespace

RunResult amplitude_amplification_unknown_k(int dim, const MarkedPredicate& marked,
                                            std::uint64_t seed, std::uint64_t max_queries) {
    return run_amplification(PhaseOracle(dim, marked), seed, max_queries);
}

RunResult qalg_general_set_equality(const SetEqualityInstance& inst, std::uint64_t seed,
                                    double budget_constant) {
    require(inst.a.n == inst.b.n, Errc::SizeMismatch, "oracles must share a domain size");
    const int n = inst.a.n;
    const std::uint64_t total_budget = std::max<std::uint64_t>(
        2, scaled_budget(budget_constant, ceil_sqrt(n)));

    // One classical query fixes the value to search for; every j with
    // b(j) = a(1) is a witness that the image sets meet.
    QueryCounter setup;
    setup.add();
    const int target = inst.a(1);

    const PhaseOracle oracle(n, [&](int j) { return inst.b(j) == target; });
    RunResult amplified =
        run_amplification(oracle, derive_seed(seed, {0x67656eULL}), total_budget - setup.count());
    return finish_set_equality_run(std::move(amplified), setup.count(), inst, seed);
}

RunResult qalg_one_to_one_set_equality(const SetEqualityInstance& inst, std::uint64_t seed,
                                       double budget_constant) {
    require(inst.a.n == inst.b.n, Errc::SizeMismatch, "oracles must share a domain size");
    require(inst.a.is_injective() && inst.b.is_injective(), Errc::NotInjective,
            "one-to-one algorithm requires injective oracles");
    const int n = inst.a.n;
    const int k = static_cast<int>(ceil_cbrt(n));

    // Classical stage: image table of a on a uniform random k-subset.
    Rng rng(derive_seed(seed, {0x313233ULL}));
    std::vector<int> positions = iota_one_based(n);
    rng.shuffle(positions);

    QueryCounter setup;
    std::unordered_set<int> sampled_images;
    for (int i = 0; i < k; ++i) {
        setup.add();
        sampled_images.insert(inst.a(positions[static_cast<std::size_t>(i)]));
    }

    const std::uint64_t amplify_budget =
        std::max<std::uint64_t>(1, scaled_budget(budget_constant, ceil_sqrt_ratio(n, k)));
    const PhaseOracle oracle(n, [&](int j) { return sampled_images.count(inst.b(j)) > 0; });
    RunResult amplified =
        run_amplification(oracle, derive_seed(seed, {0x6f746fULL}), amplify_budget);
    return finish_set_equality_run(std::move(amplified), setup.count(), inst, seed);
}

}  // namespace setq
