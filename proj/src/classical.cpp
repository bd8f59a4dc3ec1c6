#include "setq/classical.hpp"

#include <cmath>
#include <unordered_set>

#include "setq/rational.hpp"
#include "setq/rng.hpp"

namespace setq {

namespace {

RunResult decide(const SetEqualityInstance& inst, bool saw_match, std::uint64_t queries,
                 std::uint64_t seed) {
    RunResult result;
    result.answer = saw_match ? Answer::Equal : Answer::Disjoint;
    result.queries_used = queries;
    result.seed = seed;
    result.success = (result.answer == Answer::Equal) == (inst.promise == SetPromise::Equal);
    return result;
}

}  // namespace

RunResult classical_scan_set_equality(const SetEqualityInstance& inst) {
    require(inst.a.n == inst.b.n, Errc::SizeMismatch, "oracles must share a domain size");
    const int n = inst.a.n;

    QueryCounter queries;
    std::unordered_set<int> image_a, image_b;
    for (int i = 1; i <= n; ++i) {
        queries.add();
        image_a.insert(inst.a(i));
    }
    for (int j = 1; j <= n; ++j) {
        queries.add();
        image_b.insert(inst.b(j));
    }

    const bool equal = image_a == image_b;
    RunResult result = decide(inst, equal, queries.count(), 0);
    result.exact_success_probability = 1.0;
    return result;
}

RunResult classical_birthday_one_to_one(const SetEqualityInstance& inst, double c,
                                        std::uint64_t seed) {
    require(inst.a.n == inst.b.n, Errc::SizeMismatch, "oracles must share a domain size");
    require(c > 0, Errc::InvalidParams, "sampling constant must be positive");
    require(inst.a.is_injective() && inst.b.is_injective(), Errc::NotInjective,
            "birthday baseline requires injective oracles");
    const int n = inst.a.n;
    const auto samples =
        static_cast<int>(std::min<std::int64_t>(n, static_cast<std::int64_t>(std::ceil(
                                                       c * std::sqrt(static_cast<double>(n))))));

    QueryCounter queries;
    std::unordered_set<int> seen_a;
    bool match = false;

    if (samples >= n) {
        // Sample count covers the domain; read everything instead.
        for (int i = 1; i <= n; ++i) {
            queries.add();
            seen_a.insert(inst.a(i));
        }
        for (int j = 1; j <= n; ++j) {
            queries.add();
            match = match || seen_a.count(inst.b(j)) > 0;
        }
        return decide(inst, match, queries.count(), seed);
    }

    Rng rng(derive_seed(seed, {0x626477ULL, static_cast<std::uint64_t>(n)}));
    for (int i = 0; i < samples; ++i) {
        queries.add();
        seen_a.insert(inst.a(1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)))));
    }
    for (int j = 0; j < samples; ++j) {
        queries.add();
        match = match || seen_a.count(inst.b(1 + static_cast<int>(rng.uniform_below(
                                           static_cast<std::uint64_t>(n))))) > 0;
    }
    return decide(inst, match, queries.count(), seed);
}

}  // namespace setq
