#include "setq/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "setq/rng.hpp"

namespace setq {

OracleFunction OracleFunction::make(int m, std::vector<int> values) {
    require(!values.empty(), Errc::InvalidParams, "oracle table must be non-empty");
    require(m >= 1, Errc::InvalidParams, "codomain size must be positive");
    for (int v : values)
        require(v >= 1 && v <= m, Errc::InvalidParams,
                "table entry " + std::to_string(v) + " outside [1, " + std::to_string(m) + "]");
    OracleFunction f;
    f.n = static_cast<int>(values.size());
    f.m = m;
    f.values = std::move(values);
    return f;
}

std::vector<int> OracleFunction::preimage_counts() const {
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (int v : values) ++counts[static_cast<std::size_t>(v - 1)];
    return counts;
}

int OracleFunction::max_preimage_count() const {
    int best = 0;
    for (int c : preimage_counts()) best = std::max(best, c);
    return best;
}

bool OracleFunction::is_injective() const { return max_preimage_count() <= 1; }

int preimage_count(const OracleFunction& f, int x) {
    require(x >= 1 && x <= f.m, Errc::OutOfRange,
            "image value " + std::to_string(x) + " outside [1, " + std::to_string(f.m) + "]");
    int count = 0;
    for (int v : f.values)
        if (v == x) ++count;
    return count;
}

const char* to_string(SetPromise p) {
    return p == SetPromise::Equal ? "equal" : "disjoint";
}

const char* to_string(CollisionPromise p) {
    return p == CollisionPromise::OneToOne ? "one_to_one" : "r_to_one";
}

const char* to_string(ObservedPromise p) {
    switch (p) {
        case ObservedPromise::Equal: return "equal";
        case ObservedPromise::Disjoint: return "disjoint";
        case ObservedPromise::OneToOne: return "one_to_one";
        case ObservedPromise::RToOne: return "r_to_one";
        case ObservedPromise::Violation: return "violation";
    }
    return "violation";
}

CollisionInstance gen_collision(int n, int r, CollisionPromise promise, std::uint64_t seed) {
    require(n >= 1, Errc::InvalidParams, "domain size must be positive");
    require(r >= 2, Errc::InvalidR, "r must be at least 2, got " + std::to_string(r));
    Rng rng(derive_seed(seed, {0x636f6cULL, static_cast<std::uint64_t>(n),
                               static_cast<std::uint64_t>(r)}));

    std::vector<int> table(static_cast<std::size_t>(n));
    if (promise == CollisionPromise::OneToOne) {
        // Uniform injection into [n] = uniform permutation (m = n).
        table = iota_one_based(n);
        rng.shuffle(table);
    } else {
        require(n % r == 0, Errc::NonDivisible,
                std::to_string(r) + " does not divide " + std::to_string(n));
        // Uniform partition into n/r blocks of size r: shuffle the domain and
        // cut it into consecutive blocks. Each block gets a distinct image,
        // drawn as a uniform sample of n/r values from [n].
        std::vector<int> domain = iota_one_based(n);
        rng.shuffle(domain);
        std::vector<int> images = iota_one_based(n);
        rng.shuffle(images);
        const int blocks = n / r;
        for (int block = 0; block < blocks; ++block)
            for (int j = 0; j < r; ++j)
                table[static_cast<std::size_t>(domain[static_cast<std::size_t>(block * r + j)] - 1)] =
                    images[static_cast<std::size_t>(block)];
    }

    CollisionInstance inst;
    inst.f = OracleFunction::make(n, std::move(table));
    inst.r = r;
    inst.promise = promise;
    inst.seed = seed;
    return inst;
}

namespace {

// Fills a table over [n] whose image set is exactly `targets` and in which
// no value is used more than `cap` times. Caller guarantees feasibility.
std::vector<int> fill_side(int n, const std::vector<int>& targets, int cap, Rng& rng) {
    std::vector<int> table(static_cast<std::size_t>(n), 0);
    std::vector<int> positions = iota_one_based(n);
    rng.shuffle(positions);

    // Coverage first: each target value appears at least once.
    const auto k = targets.size();
    for (std::size_t i = 0; i < k; ++i)
        table[static_cast<std::size_t>(positions[i] - 1)] = targets[i];

    // Remaining positions draw from values that still have spare capacity.
    std::vector<int> available = targets;
    std::vector<int> used(k, 1);
    std::vector<std::size_t> slot(k);  // index into `used` for available[j]
    for (std::size_t j = 0; j < k; ++j) slot[j] = j;

    for (std::size_t i = k; i < static_cast<std::size_t>(n); ++i) {
        const auto pick = static_cast<std::size_t>(rng.uniform_below(available.size()));
        table[static_cast<std::size_t>(positions[i] - 1)] = available[pick];
        if (++used[slot[pick]] >= cap) {
            available[pick] = available.back();
            slot[pick] = slot.back();
            available.pop_back();
            slot.pop_back();
        }
    }
    return table;
}

}  // namespace

SetEqualityInstance gen_set_equality(int n, int m, SetPromise promise, SetEqualityVariant variant,
                                     std::uint64_t seed) {
    require(n >= 1, Errc::InvalidParams, "domain size must be positive");
    require(m >= 1, Errc::InvalidParams, "codomain size must be positive");

    int cap = n;  // effective per-image preimage bound
    switch (variant.kind) {
        case SetEqualityVariant::Kind::General: cap = n; break;
        case SetEqualityVariant::Kind::OneToOne: cap = 1; break;
        case SetEqualityVariant::Kind::Bounded:
            require(variant.bound >= 1, Errc::InvalidParams, "preimage bound must be >= 1");
            cap = std::min(variant.bound, n);
            break;
    }
    const int min_images = (n + cap - 1) / cap;  // smallest feasible image-set size

    if (promise == SetPromise::Equal)
        require(min_images <= m, Errc::InfeasiblePromise,
                "equal-image instance needs at least " + std::to_string(min_images) +
                    " codomain values, have " + std::to_string(m));
    else
        require(2 * min_images <= m, Errc::InfeasiblePromise,
                "disjoint instance needs at least " + std::to_string(2 * min_images) +
                    " codomain values, have " + std::to_string(m));

    Rng rng(derive_seed(seed, {0x736574ULL, static_cast<std::uint64_t>(n),
                               static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(cap),
                               promise == SetPromise::Equal ? 0ULL : 1ULL}));

    const int max_images = std::min(n, promise == SetPromise::Equal ? m : m - min_images);
    const int size_a =
        min_images + static_cast<int>(rng.uniform_below(
                         static_cast<std::uint64_t>(max_images - min_images + 1)));
    const int size_b = promise == SetPromise::Equal
                           ? size_a
                           : min_images + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(
                                 std::min(n, m - size_a) - min_images + 1)));

    std::vector<int> pool = iota_one_based(m);
    rng.shuffle(pool);
    std::vector<int> targets_a(pool.begin(), pool.begin() + size_a);
    std::vector<int> targets_b =
        promise == SetPromise::Equal
            ? targets_a
            : std::vector<int>(pool.begin() + size_a, pool.begin() + size_a + size_b);

    SetEqualityInstance inst;
    inst.a = OracleFunction::make(m, fill_side(n, targets_a, cap, rng));
    inst.b = OracleFunction::make(m, fill_side(n, targets_b, cap, rng));
    inst.promise = promise;
    if (variant.kind == SetEqualityVariant::Kind::Bounded) inst.preimage_bound = variant.bound;
    if (variant.kind == SetEqualityVariant::Kind::OneToOne) inst.preimage_bound = 1;
    inst.seed = seed;
    return inst;
}

PromiseVerdict verify_set_equality_tables(const OracleFunction& a, const OracleFunction& b) {
    std::unordered_set<int> image_a(a.values.begin(), a.values.end());
    std::unordered_set<int> image_b(b.values.begin(), b.values.end());

    bool equal = image_a.size() == image_b.size();
    bool overlap = false;
    for (int v : image_a) {
        const bool in_b = image_b.count(v) > 0;
        overlap = overlap || in_b;
        equal = equal && in_b;
    }

    PromiseVerdict verdict;
    verdict.max_preimage_a = a.max_preimage_count();
    verdict.max_preimage_b = b.max_preimage_count();
    verdict.observed = equal      ? ObservedPromise::Equal
                       : !overlap ? ObservedPromise::Disjoint
                                  : ObservedPromise::Violation;
    return verdict;
}

PromiseVerdict verify_promise(const SetEqualityInstance& inst) {
    return verify_set_equality_tables(inst.a, inst.b);
}

PromiseVerdict verify_promise(const CollisionInstance& inst) {
    PromiseVerdict verdict;
    verdict.max_preimage_a = inst.f.max_preimage_count();

    // One-to-one, uniformly r'-to-one for some r' >= 2, or neither.
    int uniform_count = 0;
    bool uniform = true;
    for (int c : inst.f.preimage_counts()) {
        if (c == 0) continue;
        if (uniform_count == 0)
            uniform_count = c;
        else
            uniform = uniform && c == uniform_count;
    }

    if (uniform && uniform_count == 1)
        verdict.observed = ObservedPromise::OneToOne;
    else if (uniform && uniform_count >= 2)
        verdict.observed = ObservedPromise::RToOne;
    else
        verdict.observed = ObservedPromise::Violation;
    return verdict;
}

}  // namespace setq
