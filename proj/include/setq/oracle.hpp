#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setq/errors.hpp"

namespace setq {

// Explicit table for a function [n] -> [m]. Values are 1-based throughout
// the public surface; only internal loops use 0-based offsets.
struct OracleFunction {
    int n = 0;
    int m = 0;
    std::vector<int> values;  // length n, entries in [1, m]

    // Validating constructor; n is taken from values.size().
    static OracleFunction make(int m, std::vector<int> values);

    int operator()(int i) const { return values[static_cast<std::size_t>(i - 1)]; }

    // Multiplicity of every image value; index x-1 holds |f^{-1}(x)|.
    std::vector<int> preimage_counts() const;
    int max_preimage_count() const;
    bool is_injective() const;
};

// Number of i with f(i) = x. Throws OutOfRange for x outside [1, m].
int preimage_count(const OracleFunction& f, int x);

enum class SetPromise { Equal, Disjoint };
enum class CollisionPromise { OneToOne, RToOne };

const char* to_string(SetPromise p);
const char* to_string(CollisionPromise p);

struct SetEqualityInstance {
    OracleFunction a;
    OracleFunction b;
    SetPromise promise = SetPromise::Equal;
    std::optional<int> preimage_bound;  // the r of the f(n)-bounded variant
    std::optional<std::uint64_t> seed;  // provenance, carried through JSON
};

struct CollisionInstance {
    OracleFunction f;
    int r = 2;
    CollisionPromise promise = CollisionPromise::OneToOne;
    std::optional<std::uint64_t> seed;
};

// Generator variant selector for set-equality instances.
struct SetEqualityVariant {
    enum class Kind { General, OneToOne, Bounded } kind = Kind::General;
    int bound = 0;  // only for Bounded

    static SetEqualityVariant general() { return {Kind::General, 0}; }
    static SetEqualityVariant one_to_one() { return {Kind::OneToOne, 0}; }
    static SetEqualityVariant bounded(int r) { return {Kind::Bounded, r}; }
};

// Uniformly random collision instance of the promised class, deterministic
// per seed. One-to-one draws a uniform injection [n] -> [n]; r-to-one draws
// a uniform partition of [n] into n/r blocks mapped to distinct images.
CollisionInstance gen_collision(int n, int r, CollisionPromise promise, std::uint64_t seed);

// Instance satisfying the chosen promise and variant, deterministic per seed.
// Throws InfeasiblePromise when no instance of the requested shape exists.
SetEqualityInstance gen_set_equality(int n, int m, SetPromise promise, SetEqualityVariant variant,
                                     std::uint64_t seed);

// What a validator actually observed in the tables, independent of any tag.
enum class ObservedPromise { Equal, Disjoint, OneToOne, RToOne, Violation };

const char* to_string(ObservedPromise p);

struct PromiseVerdict {
    ObservedPromise observed = ObservedPromise::Violation;
    int max_preimage_a = 0;
    int max_preimage_b = 0;  // zero for collision instances (single table)
};

// Recomputes image sets and multiplicities from the tables; never throws,
// violations are reported in the verdict.
PromiseVerdict verify_promise(const SetEqualityInstance& inst);
PromiseVerdict verify_promise(const CollisionInstance& inst);

// Table-level validator used by both the instance overload and the CLI
// (which must be able to judge files whose promise tag is absent or wrong).
PromiseVerdict verify_set_equality_tables(const OracleFunction& a, const OracleFunction& b);

}  // namespace setq
