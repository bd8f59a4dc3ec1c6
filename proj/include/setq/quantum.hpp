#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "setq/oracle.hpp"

namespace setq {

using Amplitude = std::complex<double>;

// Dense amplitude vector over the search domain [dim]. The basis is the
// domain itself; no power-of-two padding, so the Grover closed form stays
// exact for every dim.
struct StateVector {
    std::vector<Amplitude> amplitudes;

    static StateVector uniform(int dim);

    int dim() const { return static_cast<int>(amplitudes.size()); }
    double norm_sq() const;

    // 1-based basis index amplitude.
    Amplitude amp(int i) const { return amplitudes[static_cast<std::size_t>(i - 1)]; }
};

// Every oracle application, classical or inside a Grover iteration, costs
// exactly one query.
class QueryCounter {
  public:
    void add(std::uint64_t k = 1) { count_ += k; }
    std::uint64_t count() const { return count_; }

  private:
    std::uint64_t count_ = 0;
};

// Marked-element predicate over the 1-based domain [dim].
using MarkedPredicate = std::function<bool(int)>;

// Phase query: negates the amplitude of every marked basis element. The
// marked set is tabulated once; applying the oracle costs one query.
class PhaseOracle {
  public:
    PhaseOracle(int dim, const MarkedPredicate& marked);

    void apply(StateVector& state, QueryCounter& queries) const;

    int dim() const { return static_cast<int>(mask_.size()); }
    int marked_count() const { return marked_count_; }
    bool is_marked(int i) const { return mask_[static_cast<std::size_t>(i - 1)] != 0; }

    // Classical lookup of the same predicate; also one query.
    bool classical_query(int i, QueryCounter& queries) const;

    double marked_probability(const StateVector& state) const;

  private:
    std::vector<std::uint8_t> mask_;
    int marked_count_ = 0;
};

// Free-function form over an arbitrary predicate; one query per call.
StateVector phase_oracle_apply(const StateVector& state, const MarkedPredicate& marked,
                               QueryCounter& queries);

// Inversion about the mean over all dim components.
void diffusion(StateVector& state);

struct GroverResult {
    std::vector<double> distribution;   // measurement probabilities, index i-1 for element i
    double success_probability = 0.0;   // total probability on marked elements
    double norm_error = 0.0;            // |  ||state||^2 - 1  |
    std::uint64_t queries_used = 0;
};

// `iterations` rounds of (phase oracle; diffusion) from the uniform start.
// success_probability matches sin^2((2t+1) asin(sqrt(k/dim))) exactly up to
// floating error.
GroverResult grover_search(int dim, const MarkedPredicate& marked, int iterations);

double grover_closed_form(int dim, int marked_count, int iterations);

enum class Answer { Equal, Disjoint, Found, NotFound };

std::string answer_text(const Answer& answer, int found_index);

struct RunResult {
    Answer answer = Answer::NotFound;
    int found_index = 0;  // 1-based, meaningful when answer == Found
    std::uint64_t queries_used = 0;
    bool success = false;  // vs ground truth
    // Probability that the executed schedule detects a marked element,
    // computed from exact amplitudes (independent of measurement sampling).
    std::optional<double> exact_success_probability;
    std::uint64_t seed = 0;
};

// Randomized amplitude-amplification schedule for an unknown number of
// marked elements: round lengths drawn uniformly from [0, T), T growing by
// a factor 6/5 per round and capped at sqrt(dim); each round ends with a
// measurement sampled from the exact distribution plus one classical
// verification query. Stops at the query budget, reporting NotFound with
// queries_used == max_queries.
RunResult amplitude_amplification_unknown_k(int dim, const MarkedPredicate& marked,
                                            std::uint64_t seed, std::uint64_t max_queries);

// O(sqrt n) algorithm for the general promise: one classical query a(1),
// then amplified search for j with b(j) = a(1) within a total budget of
// budget_constant * ceil(sqrt n) queries. Disjoint answers are exact.
RunResult qalg_general_set_equality(const SetEqualityInstance& inst, std::uint64_t seed,
                                    double budget_constant = 10.0);

// O(n^(1/3)) algorithm for the one-to-one promise: k = ceil(n^(1/3))
// classical queries of a on a random subset, then amplified search for j
// with b(j) in the sampled image table; budget k + budget_constant *
// ceil(sqrt(n/k)). Throws NotInjective unless both sides are one-to-one.
RunResult qalg_one_to_one_set_equality(const SetEqualityInstance& inst, std::uint64_t seed,
                                       double budget_constant = 10.0);

}  // namespace setq
