#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bumpkit/bigint.hpp"

namespace bumpkit {

// Polynomial in q with big-integer coefficients, stored sparsely by exponent.
// Zero coefficients are never stored.
class SparsePolynomial {
public:
    using Map = std::map<long, Bigint>;

    SparsePolynomial() = default;
    static SparsePolynomial constant(Bigint c);

    void add_term(long exponent, const Bigint& coefficient);
    const Bigint& coeff(long exponent) const; // 0 if absent
    const Map& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    long max_exponent() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Bigint value_at_one() const; // sum of coefficients

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    bool operator==(const SparsePolynomial&) const = default;

    // Ascending exponents, "c q^e" terms joined by " + "; coefficient 1 and
    // exponent 1 are printed bare: "1 + 9q + 4q^2 + 9q^3 + q^6".
    std::string to_string() const;

    // {"n": n, "coeffs": {"<exponent>": "<decimal coefficient>", ...}}
    std::string to_json(int n) const;
    // Inverse of to_json; returns the polynomial and the embedded n.
    static std::pair<SparsePolynomial, int> from_json(const std::string& text);

private:
    Map terms_;
};

// Polynomial in q and t, keyed by (q-exponent, t-exponent).
class BivariatePolynomial {
public:
    using Key = std::pair<long, long>;
    using Map = std::map<Key, Bigint>;

    void add_term(long q_exp, long t_exp, const Bigint& coefficient);
    const Bigint& coeff(long q_exp, long t_exp) const;
    const Map& terms() const { return terms_; }

    bool is_symmetric() const; // invariant under swapping q and t
    SparsePolynomial diagonal() const; // t = q

    bool operator==(const BivariatePolynomial&) const = default;

    std::string to_string() const; // same conventions, q factor then t factor
    std::string to_json(int n) const; // keys "a,b"
    static std::pair<BivariatePolynomial, int> from_json(const std::string& text);

private:
    Map terms_;
};

// Power series in t truncated at t^order, coefficients polynomials in q.
// Arithmetic discards t-powers above the order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {}

    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    SparsePolynomial& operator[](int t_power) { return coeffs_[static_cast<size_t>(t_power)]; }
    const SparsePolynomial& operator[](int t_power) const {
        return coeffs_[static_cast<size_t>(t_power)];
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const;

private:
    std::vector<SparsePolynomial> coeffs_;
};

// a_k^2 >= a_{k-1} a_{k+1} for interior k of [support_lo, support_hi],
// missing coefficients counting as zero.
bool is_log_concave(const SparsePolynomial& p, long support_lo, long support_hi);

} // namespace bumpkit
