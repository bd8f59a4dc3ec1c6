#include "setq/adversary.hpp"

#include <algorithm>
#include <cmath>

namespace setq {

Bitstring Bitstring::from_text(const std::string& text) {
    Bitstring b;
    b.bits.reserve(text.size());
    for (char c : text) {
        require(c == '0' || c == '1', Errc::InvalidParams,
                std::string("bitstring character must be 0 or 1, got '") + c + "'");
        b.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return b;
}

std::string Bitstring::to_text() const {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t v : bits) s.push_back(static_cast<char>('0' + v));
    return s;
}

AdversaryParameters relation_parameters(const Relation& rel) {
    require(!rel.pairs.empty(), Errc::EmptyRelation, "relation has no pairs");
    const int n_bits = rel.input_length;
    const auto x_count = rel.x_side.size();
    const auto y_count = rel.y_side.size();

    for (const auto& [xi, yi] : rel.pairs) {
        require(xi < x_count && yi < y_count, Errc::OutOfRange, "pair references missing member");
        require(rel.x_side[xi].length() == n_bits && rel.y_side[yi].length() == n_bits,
                Errc::DimensionMismatch, "bitstring length differs from relation input length");
    }

    std::vector<int> degree_x(x_count, 0), degree_y(y_count, 0);
    // flips[x][i] = number of y in relation with x that differ at position i,
    // and symmetrically for y.
    std::vector<std::vector<int>> flips_x(x_count, std::vector<int>(static_cast<std::size_t>(n_bits), 0));
    std::vector<std::vector<int>> flips_y(y_count, std::vector<int>(static_cast<std::size_t>(n_bits), 0));

    for (const auto& [xi, yi] : rel.pairs) {
        ++degree_x[xi];
        ++degree_y[yi];
        const auto& x = rel.x_side[xi].bits;
        const auto& y = rel.y_side[yi].bits;
        for (int i = 0; i < n_bits; ++i) {
            if (x[static_cast<std::size_t>(i)] != y[static_cast<std::size_t>(i)]) {
                ++flips_x[xi][static_cast<std::size_t>(i)];
                ++flips_y[yi][static_cast<std::size_t>(i)];
            }
        }
    }

    for (std::size_t xi = 0; xi < x_count; ++xi)
        require(degree_x[xi] > 0, Errc::IsolatedElement,
                "X member " + rel.x_side[xi].to_text() + " participates in no pair");
    for (std::size_t yi = 0; yi < y_count; ++yi)
        require(degree_y[yi] > 0, Errc::IsolatedElement,
                "Y member " + rel.y_side[yi].to_text() + " participates in no pair");

    AdversaryParameters params;
    params.m = *std::min_element(degree_x.begin(), degree_x.end());
    params.m_prime = *std::min_element(degree_y.begin(), degree_y.end());
    params.l = 0;
    params.l_prime = 0;
    for (const auto& row : flips_x)
        params.l = std::max(params.l, *std::max_element(row.begin(), row.end()));
    for (const auto& row : flips_y)
        params.l_prime = std::max(params.l_prime, *std::max_element(row.begin(), row.end()));
    params.bound = std::sqrt(static_cast<double>(params.m) * params.m_prime /
                             (static_cast<double>(params.l) * params.l_prime));
    return params;
}

Relation build_set_equality_relation(int n) {
    require(n >= 1, Errc::InvalidParams, "n must be positive");
    Relation rel;
    rel.input_length = 2 * n;

    Bitstring x;
    x.bits.assign(static_cast<std::size_t>(2 * n), 0);
    for (int i = n; i < 2 * n; ++i) x.bits[static_cast<std::size_t>(i)] = 1;
    rel.x_side.push_back(std::move(x));

    for (int i = 0; i < n; ++i) {
        // a-half 0^i 1 0^{n-i-1}, b-half 1^i 0 1^{n-i-1}.
        Bitstring y;
        y.bits.assign(static_cast<std::size_t>(2 * n), 0);
        y.bits[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < n; ++j) y.bits[static_cast<std::size_t>(n + j)] = j == i ? 0 : 1;
        rel.y_side.push_back(std::move(y));
        rel.pairs.emplace_back(0, static_cast<std::size_t>(i));
    }
    return rel;
}

const char* to_string(PartialValue v) {
    switch (v) {
        case PartialValue::Zero: return "0";
        case PartialValue::One: return "1";
        case PartialValue::Undefined: return "undefined";
    }
    return "undefined";
}

PartialValue eval_partial_set_equality(const Bitstring& bits) {
    const int len = bits.length();
    require(len >= 2 && len % 2 == 0, Errc::OddDomain,
            "input length must be even and positive, got " + std::to_string(len));
    const int n = len / 2;

    bool a_has[2] = {false, false};
    bool b_has[2] = {false, false};
    for (int i = 1; i <= n; ++i) {
        a_has[bits.bit(i)] = true;
        b_has[bits.bit(n + i)] = true;
    }

    const bool equal = a_has[0] == b_has[0] && a_has[1] == b_has[1];
    const bool disjoint = !(a_has[0] && b_has[0]) && !(a_has[1] && b_has[1]);
    if (equal) return PartialValue::One;
    if (disjoint) return PartialValue::Zero;
    return PartialValue::Undefined;
}

bool verify_relation_wellformed(const Relation& rel, const Classifier& classifier) {
    if (rel.x_side.empty() || rel.y_side.empty()) return false;

    const PartialValue x_value = classifier(rel.x_side.front());
    if (x_value == PartialValue::Undefined) return false;
    for (const auto& x : rel.x_side)
        if (classifier(x) != x_value) return false;

    const PartialValue y_value = classifier(rel.y_side.front());
    if (y_value == PartialValue::Undefined || y_value == x_value) return false;
    for (const auto& y : rel.y_side)
        if (classifier(y) != y_value) return false;
    return true;
}

}  // namespace setq
