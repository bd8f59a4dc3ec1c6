#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "setq/errors.hpp"

namespace setq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact probability value. cpp_rational keeps the fraction reduced with a
// positive denominator; the constructor adds the [0, 1] range check.
class ExactProbability {
  public:
    ExactProbability() : value_(0) {}

    explicit ExactProbability(BigRational v) : value_(std::move(v)) {
        require(value_ >= 0 && value_ <= 1, Errc::InvalidParams,
                "probability outside [0, 1]: " + value_.str());
    }

    ExactProbability(const BigInt& num, const BigInt& den)
        : ExactProbability(BigRational(num, den)) {}

    const BigRational& value() const { return value_; }
    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }
    double to_double() const { return static_cast<double>(value_); }

    friend bool operator==(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExactProbability& a, const ExactProbability& b) {
        return !(a == b);
    }
    friend bool operator<(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ > b.value_;
    }
    friend bool operator>=(const ExactProbability& a, const ExactProbability& b) {
        return a.value_ >= b.value_;
    }

  private:
    BigRational value_;
};

// C(n, k), exact. Multiplicative form; every intermediate division is exact.
inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - i + 1;
        result /= i;
    }
    return result;
}

// Integer-exact ceilings; std::sqrt/cbrt rounding must not leak into query
// budgets or sample sizes.
inline std::int64_t ceil_sqrt(std::int64_t n) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r >= 1 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

inline std::int64_t ceil_cbrt(std::int64_t n) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n)));
    while (r * r * r < n) ++r;
    while (r >= 1 && (r - 1) * (r - 1) * (r - 1) >= n) --r;
    return r;
}

// Smallest r with 2^r >= n (so r = ceil(log2 n) for n >= 2).
inline int ceil_log2(std::int64_t n) {
    int r = 0;
    std::int64_t p = 1;
    while (p < n) {
        p *= 2;
        ++r;
    }
    return r;
}

}  // namespace setq
