#include "bumpkit/genfun.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "bumpkit/rs.hpp"
#include "bumpkit/statistics.hpp"

namespace bumpkit {

namespace {

long bump_exponent(const std::vector<int>& parts) {
    long e = 0;
    for (size_t i = 1; i < parts.size(); ++i) e += static_cast<long>(i) * parts[i];
    return e;
}

// f^lambda with the factorial hoisted out of partition loops.
Bigint syt_count(const std::vector<int>& parts, const Bigint& n_factorial) {
    Bigint hooks = 1;
    unsigned long chunk = 1;
    const int rows = static_cast<int>(parts.size());
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < parts[static_cast<size_t>(r)]; ++c) {
            int below = 0;
            for (int rr = r + 1; rr < rows && parts[static_cast<size_t>(rr)] > c; ++rr) ++below;
            const unsigned long h =
                static_cast<unsigned long>(parts[static_cast<size_t>(r)] - c + below);
            if (chunk > (~0ul) / h) {
                hooks *= chunk;
                chunk = 1;
            }
            chunk *= h;
        }
    }
    hooks *= chunk;
    Bigint f;
    if (!mpz_divisible_p(n_factorial.get_mpz_t(), hooks.get_mpz_t()))
        throw InternalError("hook product does not divide n!");
    mpz_divexact(f.get_mpz_t(), n_factorial.get_mpz_t(), hooks.get_mpz_t());
    return f;
}

void merge(SparsePolynomial& into, const SparsePolynomial& from) { into += from; }
void merge(Bigint& into, const Bigint& from) { into += from; }

// Parallel driver for partition sums. The index space is split by largest
// part; each thread accumulates into Acc and merges are associative adds.
template <typename Acc, typename Body>
Acc partition_sum(int n, Acc init, Body body) {
    if (n == 0) {
        Acc acc = init;
        body(acc, std::vector<int>{});
        return acc;
    }
    Acc total = init;
#pragma omp parallel
    {
        Acc local = init;
#pragma omp for schedule(dynamic) nowait
        for (int first = 1; first <= n; ++first) {
            std::vector<int> parts{first};
            for_each_partition_max_part(n - first, first, [&](const std::vector<int>& rest) {
                parts.resize(1);
                parts.insert(parts.end(), rest.begin(), rest.end());
                body(local, parts);
            });
        }
#pragma omp critical
        merge(total, local);
    }
    return total;
}

std::vector<int> conjugate_parts(const std::vector<int>& parts) {
    std::vector<int> conj;
    if (parts.empty()) return conj;
    conj.resize(static_cast<size_t>(parts[0]));
    for (int c = 0; c < parts[0]; ++c) {
        int count = 0;
        for (int p : parts)
            if (p > c) ++count;
        conj[static_cast<size_t>(c)] = count;
    }
    return conj;
}

} // namespace

SparsePolynomial bn_by_enumeration(int n, int cap) {
    if (n > cap)
        throw CapExceeded("B_" + std::to_string(n) + " by enumeration exceeds cap " +
                          std::to_string(cap));
    SparsePolynomial b;
    for_each_permutation(
        n,
        [&](const Permutation& p) {
            // Count the displacement events themselves, independently of the
            // shape formula this route is checked against.
            long bumps = 0;
            for (int s : rs(p).bump_sequence) bumps += s;
            b.add_term(bumps, 1);
        },
        std::max(n, kExhaustiveCap));
    return b;
}

SparsePolynomial bn_by_shapes(int n) {
    const Bigint nf = factorial(static_cast<unsigned long>(n));
    return partition_sum(n, SparsePolynomial{},
                         [&nf](SparsePolynomial& acc, const std::vector<int>& parts) {
                             const Bigint f = syt_count(parts, nf);
                             acc.add_term(bump_exponent(parts), f * f);
                         });
}

SparsePolynomial bn_by_shapes_serial(int n) {
    const Bigint nf = factorial(static_cast<unsigned long>(n));
    SparsePolynomial b;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        const Bigint f = syt_count(parts, nf);
        b.add_term(bump_exponent(parts), f * f);
    });
    return b;
}

SparsePolynomial bn_321_closed_form(int n) {
    SparsePolynomial b;
    b.add_term(0, 1);
    for (int k = 1; 2 * k <= n; ++k) {
        // multinomial(n; k,k,n-2k) / binomial(n-k+1, k), squared
        const Bigint numer = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
                             binomial(static_cast<unsigned long>(n - k), static_cast<unsigned long>(k));
        const Bigint denom =
            binomial(static_cast<unsigned long>(n - k + 1), static_cast<unsigned long>(k));
        if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()))
            throw InternalError("321 closed form: inexact division at k=" + std::to_string(k));
        Bigint f;
        mpz_divexact(f.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
        b.add_term(k, f * f);
    }
    return b;
}

SparsePolynomial bn_321_by_enumeration(int n, int cap) {
    SparsePolynomial b;
    for_each_permutation(
        n,
        [&](const Permutation& p) {
            if (avoids_321(p)) b.add_term(bump(p), 1);
        },
        cap);
    return b;
}

BivariatePolynomial bn_bivariate(int n, int cap) {
    if (n > cap)
        throw CapExceeded("B_" + std::to_string(n) + "(q,t) by enumeration exceeds cap " +
                          std::to_string(cap));
    BivariatePolynomial b;
    for_each_permutation(
        n, [&](const Permutation& p) { b.add_term(bump(p), bump(reverse(p)), 1); },
        std::max(n, kExhaustiveCap));
    return b;
}

BivariatePolynomial bn_bivariate_by_shapes(int n) {
    // Reversal conjugates the shape, so bump(reverse) = bump(lambda').
    const Bigint nf = factorial(static_cast<unsigned long>(n));
    BivariatePolynomial b;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        const Bigint f = syt_count(parts, nf);
        b.add_term(bump_exponent(parts), bump_exponent(conjugate_parts(parts)), f * f);
    });
    return b;
}

long hook_sum(const Partition& lambda) {
    long total = 0;
    const auto conj = conjugate(lambda);
    for (int r = 1; r <= lambda.num_parts(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c)
            total += lambda.part(r) - c + conj.part(c) - r + 1;
    return total;
}

bool hook_sum_identity_check(const Partition& lambda) {
    return hook_sum(lambda) ==
           bump_from_shape(lambda) + bump_from_shape(conjugate(lambda)) + lambda.size();
}

SparsePolynomial bn_diagonal_via_hooks(int n) {
    const Bigint nf = factorial(static_cast<unsigned long>(n));
    SparsePolynomial b;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        const auto lambda = Partition::unchecked(parts);
        const Bigint f = syt_count(parts, nf);
        b.add_term(hook_sum(lambda) - n, f * f);
    });
    return b;
}

SparsePolynomial tn_direct(int n) {
    return partition_sum(n, SparsePolynomial{},
                         [](SparsePolynomial& acc, const std::vector<int>& parts) {
                             acc.add_term(bump_exponent(parts), 1);
                         });
}

SparsePolynomial tn_direct_serial(int n) {
    SparsePolynomial t;
    for_each_partition(
        n, [&](const std::vector<int>& parts) { t.add_term(bump_exponent(parts), 1); });
    return t;
}

SparsePolynomial tn_via_product(int n) {
    // Factors with i > n cannot contribute to [t^n].
    TruncatedSeries prod = TruncatedSeries::one(n);
    for (int i = 1; i <= n; ++i) {
        TruncatedSeries factor(n);
        const long step = static_cast<long>(i) * (i - 1) / 2; // C(i,2)
        for (int m = 0; m * i <= n; ++m)
            factor[m * i].add_term(step * m, 1);
        prod = prod * factor;
    }
    return prod[n];
}

SparsePolynomial tn_head_series(long max_exponent) {
    // Counting partitions of i into triangular parts C(k,2), k >= 2.
    std::vector<Bigint> ways(static_cast<size_t>(max_exponent) + 1, 0);
    ways[0] = 1;
    for (long k = 2; k * (k - 1) / 2 <= max_exponent; ++k) {
        const long part = k * (k - 1) / 2;
        for (long i = part; i <= max_exponent; ++i)
            ways[static_cast<size_t>(i)] += ways[static_cast<size_t>(i - part)];
    }
    SparsePolynomial head;
    for (long i = 0; i <= max_exponent; ++i) head.add_term(i, ways[static_cast<size_t>(i)]);
    return head;
}

namespace {

template <typename MeanImpl>
Rational mean_bump_impl(int n, int cap, MeanImpl sum_impl) {
    if (n > cap)
        throw CapExceeded("mean bump at n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    const Bigint nf = factorial(static_cast<unsigned long>(n));
    const Bigint total = sum_impl(nf);
    Rational mean(total, nf);
    mean.canonicalize();
    return mean;
}

} // namespace

Rational mean_bump_exact(int n, int cap) {
    return mean_bump_impl(n, cap, [n](const Bigint& nf) {
        return partition_sum(n, Bigint(0), [&nf](Bigint& acc, const std::vector<int>& parts) {
            const Bigint f = syt_count(parts, nf);
            acc += f * f * bump_exponent(parts);
        });
    });
}

Rational mean_bump_exact_serial(int n, int cap) {
    return mean_bump_impl(n, cap, [n](const Bigint& nf) {
        Bigint total = 0;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const Bigint f = syt_count(parts, nf);
            total += f * f * bump_exponent(parts);
        });
        return total;
    });
}

SparsePolynomial weakbump_polynomial(int n) {
    const Bigint nf = factorial(static_cast<unsigned long>(n));
    return partition_sum(n, SparsePolynomial{},
                         [&nf, n](SparsePolynomial& acc, const std::vector<int>& parts) {
                             const Bigint f = syt_count(parts, nf);
                             acc.add_term(n - (parts.empty() ? 0 : parts[0]), f * f);
                         });
}

SparsePolynomial weakbump_polynomial_serial(int n) {
    const Bigint nf = factorial(static_cast<unsigned long>(n));
    SparsePolynomial w;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        const Bigint f = syt_count(parts, nf);
        w.add_term(n - (parts.empty() ? 0 : parts[0]), f * f);
    });
    return w;
}

SparsePolynomial weakbump_polynomial_by_enumeration(int n, int cap) {
    if (n > cap)
        throw CapExceeded("weakbump polynomial by enumeration exceeds cap " +
                          std::to_string(cap));
    SparsePolynomial w;
    for_each_permutation(
        n, [&](const Permutation& p) { w.add_term(weakbump(p), 1); },
        std::max(n, kExhaustiveCap));
    return w;
}

} // namespace bumpkit
