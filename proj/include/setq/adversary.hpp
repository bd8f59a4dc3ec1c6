#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "setq/errors.hpp"

namespace setq {

// Fixed-length {0,1} string. Positions are 1-based on the public surface to
// match the rest of the toolkit; storage is a plain byte vector.
struct Bitstring {
    std::vector<std::uint8_t> bits;

    static Bitstring from_text(const std::string& text);
    std::string to_text() const;

    int length() const { return static_cast<int>(bits.size()); }
    int bit(int i) const { return bits[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const Bitstring&, const Bitstring&) = default;
};

// Explicit relation R between two labeled input classes X and Y over
// {0,1}^N. Pairs hold indices into X and Y.
struct Relation {
    int input_length = 0;
    std::vector<Bitstring> x_side;
    std::vector<Bitstring> y_side;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct AdversaryParameters {
    int m = 0;        // min relation degree over X
    int m_prime = 0;  // min relation degree over Y
    int l = 0;        // max over (x, i) of |{y : (x,y) in R, x_i != y_i}|
    int l_prime = 0;  // symmetric for (y, i)
    double bound = 0.0;  // sqrt(m m' / (l l'))
};

// Extracts the tight adversary parameters of a relation. Throws
// EmptyRelation for relations with no pairs and IsolatedElement (naming the
// offending bitstring) when some member of X or Y participates in no pair.
AdversaryParameters relation_parameters(const Relation& rel);

// The relation certifying the sqrt(n) lower bound for two-valued set
// equality: X = {0^n 1^n}, Y = {0^i 1 0^{n-i-1} 1^i 0 1^{n-i-1} : 0 <= i < n},
// R = X x Y over inputs of length 2n.
Relation build_set_equality_relation(int n);

enum class PartialValue { Zero, One, Undefined };

const char* to_string(PartialValue v);

// Reads a length-2n input as n a-values followed by n b-values over the
// alphabet {0,1}: One if the two image sets are equal, Zero if disjoint,
// Undefined otherwise. Throws OddLength-style error for odd inputs.
PartialValue eval_partial_set_equality(const Bitstring& bits);

using Classifier = std::function<PartialValue(const Bitstring&)>;

// True iff every member of X classifies to one defined value, every member
// of Y to the other, and nothing is Undefined.
bool verify_relation_wellformed(const Relation& rel, const Classifier& classifier);

}  // namespace setq
