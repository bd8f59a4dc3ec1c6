#include "setq/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "setq/rng.hpp"

namespace setq {

Bipartition Bipartition::make(int n, std::vector<int> side_a) {
    require(n >= 2 && n % 2 == 0, Errc::OddDomain,
            "domain size must be even and >= 2, got " + std::to_string(n));
    require(static_cast<int>(side_a.size()) == n / 2, Errc::InvalidParams,
            "side A must have exactly n/2 indices");
    std::sort(side_a.begin(), side_a.end());
    std::vector<bool> in_a(static_cast<std::size_t>(n), false);
    for (int i : side_a) {
        require(i >= 1 && i <= n, Errc::OutOfRange, "index " + std::to_string(i) + " outside [1, n]");
        require(!in_a[static_cast<std::size_t>(i - 1)], Errc::InvalidParams,
                "duplicate index " + std::to_string(i) + " in side A");
        in_a[static_cast<std::size_t>(i - 1)] = true;
    }

    Bipartition p;
    p.n = n;
    p.side_a = std::move(side_a);
    p.side_b.reserve(static_cast<std::size_t>(n / 2));
    for (int i = 1; i <= n; ++i)
        if (!in_a[static_cast<std::size_t>(i - 1)]) p.side_b.push_back(i);
    return p;
}

bool Bipartition::in_side_a(int i) const {
    return std::binary_search(side_a.begin(), side_a.end(), i);
}

Bipartition random_bipartition(int n, std::uint64_t seed) {
    require(n % 2 == 0, Errc::OddDomain, "cannot halve odd domain size " + std::to_string(n));
    require(n >= 2, Errc::InvalidParams, "domain size must be >= 2");
    Rng rng(derive_seed(seed, {0x626970ULL, static_cast<std::uint64_t>(n)}));
    std::vector<int> indices = iota_one_based(n);
    rng.shuffle(indices);
    indices.resize(static_cast<std::size_t>(n / 2));
    return Bipartition::make(n, std::move(indices));
}

const char* to_string(ReductionPrediction p) {
    switch (p) {
        case ReductionPrediction::Disjoint: return "disjoint";
        case ReductionPrediction::Equal: return "equal";
        case ReductionPrediction::ReductionFailed: return "reduction_failed";
    }
    return "reduction_failed";
}

namespace {

// Preimage index lists of an r-to-one table, keyed by image. Throws
// NotRToOne unless all multiplicities equal some r >= 2.
struct RToOneView {
    int r = 0;
    std::vector<std::vector<int>> preimages;  // one entry per image actually hit
};

RToOneView collect_r_to_one(const OracleFunction& f) {
    std::vector<std::vector<int>> by_value(static_cast<std::size_t>(f.m));
    for (int i = 1; i <= f.n; ++i) by_value[static_cast<std::size_t>(f(i) - 1)].push_back(i);

    RToOneView view;
    for (auto& pre : by_value) {
        if (pre.empty()) continue;
        if (view.preimages.empty()) view.r = static_cast<int>(pre.size());
        require(static_cast<int>(pre.size()) == view.r, Errc::NotRToOne,
                "table is not uniformly many-to-one");
        view.preimages.push_back(std::move(pre));
    }
    require(view.r >= 2, Errc::NotRToOne, "table is one-to-one; bad divisions are ill-posed");
    return view;
}

}  // namespace

ReductionResult reduce_collision_to_set_equality(const CollisionInstance& c, const Bipartition& p) {
    require(p.n == c.f.n, Errc::SizeMismatch,
            "bipartition is over [" + std::to_string(p.n) + "], oracle domain is [" +
                std::to_string(c.f.n) + "]");

    auto restrict_to = [&](const std::vector<int>& side) {
        std::vector<int> vals;
        vals.reserve(side.size());
        for (int i : side) vals.push_back(c.f(i));
        return OracleFunction::make(c.f.m, std::move(vals));
    };

    ReductionResult result;
    result.a = restrict_to(p.side_a);
    result.b = restrict_to(p.side_b);

    if (c.promise == CollisionPromise::OneToOne) {
        result.predicted = ReductionPrediction::Disjoint;
    } else {
        result.predicted = is_bad_division(c.f, p) ? ReductionPrediction::ReductionFailed
                                                   : ReductionPrediction::Equal;
    }

    if (result.predicted != ReductionPrediction::ReductionFailed) {
        SetEqualityInstance inst;
        inst.a = result.a;
        inst.b = result.b;
        inst.promise = result.predicted == ReductionPrediction::Equal ? SetPromise::Equal
                                                                      : SetPromise::Disjoint;
        inst.preimage_bound = c.promise == CollisionPromise::OneToOne ? 1 : c.r;
        inst.seed = c.seed;
        result.instance = std::move(inst);
    }
    return result;
}

bool is_bad_division(const OracleFunction& f, const Bipartition& p) {
    require(p.n == f.n, Errc::SizeMismatch, "bipartition and oracle domain sizes differ");
    const RToOneView view = collect_r_to_one(f);

    std::vector<bool> in_a(static_cast<std::size_t>(f.n), false);
    for (int i : p.side_a) in_a[static_cast<std::size_t>(i - 1)] = true;

    for (const auto& pre : view.preimages) {
        int hits = 0;
        for (int i : pre) hits += in_a[static_cast<std::size_t>(i - 1)];
        if (hits == 0 || hits == static_cast<int>(pre.size())) return true;
    }
    return false;
}

ExactProbability per_image_bad_probability_exact(int n, int r) {
    require(n >= 2 && n % 2 == 0, Errc::InvalidParams, "n must be even, got " + std::to_string(n));
    require(r >= 2 && r <= n / 2, Errc::InvalidParams,
            "need 2 <= r <= n/2, got r = " + std::to_string(r));

    // Route 1: 2 C(n-r, n/2-r) / C(n, n/2).
    const BigRational binomial_form =
        BigRational(2 * binomial(n - r, n / 2 - r), binomial(n, n / 2));

    // Route 2: prod_{i=1}^{r-1} (n/2 - i) / (n - i).
    BigRational product_form = 1;
    for (int i = 1; i <= r - 1; ++i) product_form *= BigRational(n / 2 - i, n - i);

    if (binomial_form != product_form)
        throw std::logic_error("per-image probability self-check failed: " + binomial_form.str() +
                               " vs " + product_form.str());
    return ExactProbability(binomial_form);
}

ExactProbability union_bound_bad_probability(int n, int r) {
    // No r | n requirement: the expression is a pure formula in (n, r), and
    // the intended r = ceil(log2 n) rarely divides n. Divisibility matters
    // only when an actual r-to-one table must exist.
    require(n >= 2 && n % 2 == 0, Errc::InvalidParams, "n must be even, got " + std::to_string(n));
    require(r >= 2 && r <= n / 2, Errc::InvalidParams,
            "need 2 <= r <= n/2, got r = " + std::to_string(r));

    const BigRational bound(2 * BigInt(n), (BigInt(1) << r) * r);
    return ExactProbability(bound > 1 ? BigRational(1) : bound);
}

ExactProbability bad_probability_enumerate(const OracleFunction& f) {
    const RToOneView view = collect_r_to_one(f);
    const int n = f.n;
    require(n % 2 == 0, Errc::InvalidParams, "n must be even, got " + std::to_string(n));
    require(view.r <= n / 2, Errc::InvalidParams,
            "every division is one-sided for r > n/2 (Lemma regime is 2 <= r <= n/2)");
    const BigInt total = binomial(n, n / 2);
    require(total <= kEnumerationCap, Errc::TooLarge,
            "C(n, n/2) = " + total.str() + " exceeds enumeration cap");

    std::vector<std::uint32_t> image_masks;
    image_masks.reserve(view.preimages.size());
    for (const auto& pre : view.preimages) {
        std::uint32_t mask = 0;
        for (int i : pre) mask |= 1u << (i - 1);
        image_masks.push_back(mask);
    }

    // Gosper's hack over all n-bit masks with exactly n/2 bits set.
    std::int64_t bad = 0;
    const std::uint32_t end = 1u << n;
    std::uint32_t side_a = (1u << (n / 2)) - 1;
    while (side_a < end) {
        for (std::uint32_t mask : image_masks) {
            const std::uint32_t hit = side_a & mask;
            if (hit == 0 || hit == mask) {
                ++bad;
                break;
            }
        }
        const std::uint32_t c = side_a & (0u - side_a);
        const std::uint32_t rr = side_a + c;
        side_a = (((rr ^ side_a) >> 2) / c) | rr;
    }
    return ExactProbability(BigInt(bad), total);
}

MonteCarloEstimate bad_probability_montecarlo(const OracleFunction& f, std::int64_t trials,
                                              std::uint64_t seed) {
    require(trials >= 1, Errc::InvalidParams, "need at least one trial");
    const RToOneView view = collect_r_to_one(f);
    require(f.n % 2 == 0, Errc::InvalidParams, "n must be even");

    std::vector<bool> in_a(static_cast<std::size_t>(f.n));
    std::int64_t bad = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        const Bipartition p = random_bipartition(f.n, derive_seed(seed, {static_cast<std::uint64_t>(t)}));
        std::fill(in_a.begin(), in_a.end(), false);
        for (int i : p.side_a) in_a[static_cast<std::size_t>(i - 1)] = true;
        for (const auto& pre : view.preimages) {
            int hits = 0;
            for (int i : pre) hits += in_a[static_cast<std::size_t>(i - 1)];
            if (hits == 0 || hits == static_cast<int>(pre.size())) {
                ++bad;
                break;
            }
        }
    }

    MonteCarloEstimate est;
    est.trials = trials;
    est.p_hat = static_cast<double>(bad) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
    return est;
}

int nearest_log_divisible_size(int target) {
    require(target >= 1, Errc::InvalidParams, "target must be positive");
    auto runnable = [](int n) {
        if (n < 4 || n % 2 != 0) return false;
        const int r = ceil_log2(n);
        return r >= 2 && r <= n / 2 && n % r == 0;
    };
    for (int d = 0;; ++d) {
        if (target - d >= 4 && runnable(target - d)) return target - d;
        if (runnable(target + d)) return target + d;
    }
}

}  // namespace setq
