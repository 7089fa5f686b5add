#pragma once

#include "bumpkit/core.hpp"
#include "bumpkit/polynomial.hpp"

namespace bumpkit {

// Default cap for the direct sum over S_n (n! terms).
inline constexpr int kEnumerationCap = 8;
// Default cap for partition-scale sums (p(60) ~ 1e6 partitions).
inline constexpr int kPartitionCap = 60;

// ---- permutation-bump polynomial B_n(q) --------------------------------

// sum over S_n of q^{bump(pi)}, bumps counted by actual insertion events.
SparsePolynomial bn_by_enumeration(int n, int cap = kEnumerationCap);

// sum over partitions of (f^lambda)^2 q^{lambda_2 + 2 lambda_3 + ...}.
// OpenMP kernel split over the largest part; serial reference kept for tests.
SparsePolynomial bn_by_shapes(int n);
SparsePolynomial bn_by_shapes_serial(int n);

// Restriction to 321-avoiding permutations, in closed form:
// 1 + sum_k ( multinomial(n; k,k,n-2k) / binomial(n-k+1, k) )^2 q^k.
SparsePolynomial bn_321_closed_form(int n);
// Oracle route: filtered direct enumeration.
SparsePolynomial bn_321_by_enumeration(int n, int cap = kExhaustiveCap);

// ---- bivariate B_n(q,t) -------------------------------------------------

// Direct sum over S_n of q^{bump(pi)} t^{bump(reverse(pi))}.
BivariatePolynomial bn_bivariate(int n, int cap = kEnumerationCap);
// Equivalent sum over shapes using the conjugate for the reverse.
BivariatePolynomial bn_bivariate_by_shapes(int n);

// q^{-n} sum over shapes of (f^lambda)^2 prod q^{h(c)}; equals the t=q
// diagonal of the bivariate polynomial.
SparsePolynomial bn_diagonal_via_hooks(int n);

// sum of hook lengths == bump(lambda) + bump(lambda') + |lambda|.
bool hook_sum_identity_check(const Partition& lambda);
long hook_sum(const Partition& lambda);

// ---- partition-bump polynomial T_n(q) ------------------------------------

// sum over partitions of n of q^{bump(lambda)}.
SparsePolynomial tn_direct(int n);
SparsePolynomial tn_direct_serial(int n);

// [t^n] of prod_{i=1..n} 1/(1 - q^{C(i,2)} t^i), by truncated expansion.
SparsePolynomial tn_via_product(int n);

// Stabilized head: coefficient of q^i equals [z^i] 1/prod_{k>=2}(1-z^{C(k,2)})
// for every n >= 2i.
SparsePolynomial tn_head_series(long max_exponent);

// ---- misc ----------------------------------------------------------------

// Exact mean of bump over S_n: sum (f^lambda)^2 bump(lambda) / n!.
Rational mean_bump_exact(int n, int cap = kPartitionCap);
Rational mean_bump_exact_serial(int n, int cap = kPartitionCap);

// sum over S_n of q^{weakbump(pi)} = sum over shapes of (f^lambda)^2 q^{n-lambda_1}.
SparsePolynomial weakbump_polynomial(int n);
SparsePolynomial weakbump_polynomial_serial(int n);
SparsePolynomial weakbump_polynomial_by_enumeration(int n, int cap = kEnumerationCap);

} // namespace bumpkit
