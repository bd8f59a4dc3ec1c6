#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setq/oracle.hpp"
#include "setq/rational.hpp"

namespace setq {

// A division of [n] into two labeled halves A and B. Both sides are kept
// sorted ascending; membership is derived from side_a.
struct Bipartition {
    int n = 0;
    std::vector<int> side_a;
    std::vector<int> side_b;

    // Validates |side_a| = n/2 and entries in [1, n]; derives side_b.
    static Bipartition make(int n, std::vector<int> side_a);

    bool in_side_a(int i) const;
};

// Uniform over all C(n, n/2) equal divisions, deterministic per seed.
// Throws OddDomain for odd n.
Bipartition random_bipartition(int n, std::uint64_t seed);

enum class ReductionPrediction { Disjoint, Equal, ReductionFailed };

const char* to_string(ReductionPrediction p);

// Output of the collision -> set-equality reduction. `a` is f restricted to
// side A and re-indexed to [1, n/2] in ascending original-index order, `b`
// likewise on side B. `instance` is engaged with a trusted promise tag
// unless the division was bad for the r-to-one branch.
struct ReductionResult {
    OracleFunction a;
    OracleFunction b;
    ReductionPrediction predicted = ReductionPrediction::ReductionFailed;
    std::optional<SetEqualityInstance> instance;
};

ReductionResult reduce_collision_to_set_equality(const CollisionInstance& c, const Bipartition& p);

// True iff some image of f has all its preimages on one side. f must be
// r-to-one with r >= 2 (the notion is ill-posed for one-to-one tables).
bool is_bad_division(const OracleFunction& f, const Bipartition& p);

// Probability that a uniform division is bad for one fixed image with r
// preimages: 2 C(n-r, n/2-r) / C(n, n/2). Computed both as the binomial
// ratio and as the telescoping product prod_{i=1}^{r-1} (n/2-i)/(n-i); the
// two routes are compared exactly before returning.
ExactProbability per_image_bad_probability_exact(int n, int r);

// Union bound over all n/r images: min(1, 2n / (2^r r)).
ExactProbability union_bound_bad_probability(int n, int r);

// Divisions enumerable without leaving desk scale: C(n, n/2) <= 10^7, n <= 24.
inline constexpr std::int64_t kEnumerationCap = 10'000'000;

// Exact fraction of all C(n, n/2) divisions that are bad for ANY image of f,
// by exhaustive enumeration. Throws TooLarge above the cap.
ExactProbability bad_probability_enumerate(const OracleFunction& f);

struct MonteCarloEstimate {
    double p_hat = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
};

// Bad fraction over seeded random bipartitions; per-trial seeds are derived
// from (seed, trial index).
MonteCarloEstimate bad_probability_montecarlo(const OracleFunction& f, std::int64_t trials,
                                              std::uint64_t seed);

// Nearest n to `target` for which the whole pipeline is runnable with the
// intended parameterization r = ceil(log2 n): n even, r | n, 2 <= r <= n/2.
// Ties between target-d and target+d resolve to the smaller n.
int nearest_log_divisible_size(int target);

}  // namespace setq
