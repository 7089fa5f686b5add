// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen; tolerances are exact equality unless a
// numeric band is stated inline. Each criterion also enforces its runtime
// budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bumpkit/bump_diagram.hpp"
#include "bumpkit/genfun.hpp"
#include "bumpkit/oracles.hpp"
#include "bumpkit/rs.hpp"
#include "bumpkit/statistics.hpp"
#include "bumpkit/viennot.hpp"

using namespace bumpkit;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

template <typename A, typename B>
bool expect(std::string& log, const char* what, const A& got, const B& want) {
    if (got == want) return true;
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << "; ";
    log += os.str();
    return false;
}

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// --- criterion bodies -------------------------------------------------

bool c1_table1(std::string& log) {
    const char* bn[] = {"1", "1 + q", "1 + 4q + q^3", "1 + 9q + 4q^2 + 9q^3 + q^6",
                        "1 + 16q + 25q^2 + 36q^3 + 25q^4 + 16q^6 + q^10"};
    const char* tn[] = {"1", "1 + q", "1 + q + q^3", "1 + q + q^2 + q^3 + q^6",
                        "1 + q + q^2 + q^3 + q^4 + q^6 + q^10"};
    bool ok = true;
    for (int n = 1; n <= 5; ++n) {
        ok &= expect(log, ("B_" + std::to_string(n)).c_str(),
                     bn_by_enumeration(n).to_string(), std::string(bn[n - 1]));
        ok &= expect(log, ("T_" + std::to_string(n)).c_str(), tn_direct(n).to_string(),
                     std::string(tn[n - 1]));
    }
    return ok;
}

bool c2_b8(std::string& log) {
    const std::string printed =
        "1 + 49q + 400q^2 + 1225q^3 + 4292q^4 + 4900q^5 + 4361q^6 + 9864q^7 + 3136q^8 + "
        "4900q^9 + 1225q^10 + 4096q^11 + 196q^12 + 784q^13 + 441q^15 + 400q^16 + 49q^21 + "
        "q^28";
    const auto b8 = bn_by_shapes(8);
    bool ok = expect(log, "B_8", b8.to_string(), printed);
    ok &= expect(log, "terms", b8.terms().size(), size_t{18});
    ok &= expect(log, "q^25 coefficient", b8.coeff(25).get_str(), std::string("0"));
    ok &= expect(log, "q^4", b8.coeff(4).get_str(), std::string("4292"));
    ok &= expect(log, "q^7", b8.coeff(7).get_str(), std::string("9864"));
    ok &= expect(log, "q^11", b8.coeff(11).get_str(), std::string("4096"));
    ok &= expect(log, "q^28", b8.coeff(28).get_str(), std::string("1"));
    return ok;
}

bool c3_example_end_to_end(std::string& log) {
    const auto p = parse_permutation("475382691");
    const auto r = rs(p);
    bool ok = expect(log, "P", r.P.to_string(), std::string("1 5 6 9\n2 8\n3\n4\n7"));
    ok &= expect(log, "Q", r.Q.to_string(), std::string("1 2 5 8\n3 7\n4\n6\n9"));
    ok &= expect(log, "bump", bump(p), 11l);
    ok &= expect(log, "bump sequence", vec_str(r.bump_sequence),
                 std::string("(0,0,1,2,0,3,1,0,4)"));
    ok &= expect(log, "alpha sequence", vec_str(alpha_sequence(p)),
                 std::string("(5,3,2,1,0)"));
    ok &= expect(log, "weakbump", weakbump(p), 5);
    return ok;
}

bool c4_threeway(std::string& log) {
    long cases = 0;
    bool ok = true;
    for_each_permutation(6, [&](const Permutation& p) {
        ++cases;
        const long shape = bump_from_shape(shape_of(p));
        const long sim = bump_by_simulation(p);
        const long shadows = bump_via_shadows(p);
        const auto top = bump_sequence_via_diagram(p);
        const long diagram = std::accumulate(top.begin(), top.end(), 0l);
        if (shape != sim || sim != shadows || shadows != diagram) {
            ok = expect(log, ("agreement at " + p.to_string()).c_str(),
                        std::to_string(shape) + "/" + std::to_string(sim) + "/" +
                            std::to_string(shadows) + "/" + std::to_string(diagram),
                        std::string("all equal"));
        }
    });
    return ok & expect(log, "cases", cases, 720l);
}

bool c5_diagram_fidelity(std::string& log) {
    const auto ds = build_bump_diagram(parse_permutation("51324"));
    bool ok = expect(log, "sigma top", vec_str(ds.top_reading()), std::string("(0,1,0,2,0)"));
    ok &= expect(log, "sigma right", vec_str(ds.right_reading()), std::string("(0,0,1,0,2)"));
    const auto dp = build_bump_diagram(parse_permutation("475382691"));
    ok &= expect(log, "pi top", vec_str(dp.top_reading()),
                 std::string("(0,0,1,2,0,3,1,0,4)"));
    ok &= expect(log, "pi right", vec_str(dp.right_reading()),
                 std::string("(0,1,2,3,0,0,4,1,0)"));
    return ok;
}

bool c6_greene(std::string& log) {
    bool ok = true;
    for_each_permutation(6, [&](const Permutation& p) {
        const auto lambda = shape_of(p);
        long prefix = 0;
        const auto conj = conjugate(lambda);
        long cprefix = 0;
        for (int k = 1; k <= 6 && ok; ++k) {
            prefix += lambda.part(k);
            cprefix += conj.part(k);
            ok &= expect(log, ("I_k " + p.to_string()).c_str(), greene_I(p, k), prefix);
            ok &= expect(log, ("D_k " + p.to_string()).c_str(), greene_D(p, k), cprefix);
            ok &= expect(log, ("alpha " + p.to_string()).c_str(), alpha_by_removal(p, k),
                         static_cast<long>(p.size()) - prefix);
        }
    });
    return ok;
}

bool c7_ballot(std::string& log) {
    const long expected[] = {1, 2, 4, 10, 26, 76, 232};
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        Bigint syt_sum = 0;
        for (const auto& lambda : partitions_of(n)) syt_sum += count_syt(lambda);
        long count = 0;
        for_each_ballot_sequence(n, [&](const std::vector<int>& terms) {
            ++count;
            const auto b = WeakBallotSequence::unchecked(terms);
            if (!(bump_sequence(ballot_to_permutation(b)) == b))
                ok &= expect(log, ("round trip " + vec_str(terms)).c_str(),
                             vec_str(bump_sequence(ballot_to_permutation(b)).terms()),
                             vec_str(terms));
        });
        ok &= expect(log, ("count n=" + std::to_string(n)).c_str(), count, expected[n - 1]);
        ok &= expect(log, ("syt sum n=" + std::to_string(n)).c_str(), syt_sum.get_str(),
                     std::to_string(expected[n - 1]));
    }
    return ok;
}

bool c8_weakbump_run_sorting(std::string& log) {
    bool ok = true;
    for_each_permutation(5, [&](const Permutation& p) {
        const int wb = p.size() - shape_of(p).part(1);
        const int run = run_statistic_bruteforce(p);
        const int moves = min_deletion_insertion_moves(p);
        if (run != wb || moves != wb)
            ok &= expect(log, ("S_5 " + p.to_string()).c_str(),
                         std::to_string(run) + "/" + std::to_string(moves),
                         std::to_string(wb));
    });
    ok &= expect(log, "run(314569278) via shape", weakbump(parse_permutation("314569278")), 3);
    ok &= expect(log, "run(475382691) via shape", weakbump(parse_permutation("475382691")), 5);
    return ok;
}

bool c9_tn(std::string& log) {
    bool ok = true;
    std::vector<SparsePolynomial> tn;
    for (int n = 0; n <= 40; ++n) {
        tn.push_back(tn_direct(n));
        if (!(tn.back() == tn_via_product(n)))
            ok &= expect(log, ("T_" + std::to_string(n)).c_str(), tn.back().to_string(),
                         tn_via_product(n).to_string());
    }
    const auto head = tn_head_series(10);
    for (long i = 0; i <= 10; ++i)
        for (int n = static_cast<int>(2 * i); n <= 30; ++n)
            if (!(tn[static_cast<size_t>(n)].coeff(i) == head.coeff(i)))
                ok &= expect(log,
                             ("head i=" + std::to_string(i) + " n=" + std::to_string(n)).c_str(),
                             tn[static_cast<size_t>(n)].coeff(i).get_str(),
                             head.coeff(i).get_str());
    for (int n = 0; n <= 30; ++n)
        for (int j = 0; n + j + 1 <= 30; ++j)
            if (!(tn[static_cast<size_t>(n + j)].coeff(n) <=
                  tn[static_cast<size_t>(n + j + 1)].coeff(n)))
                ok &= expect(log, ("monotone n=" + std::to_string(n)).c_str(),
                             tn[static_cast<size_t>(n + j)].coeff(n).get_str(),
                             "<= " + tn[static_cast<size_t>(n + j + 1)].coeff(n).get_str());
    return ok;
}

bool c10_b321(std::string& log) {
    bool ok = true;
    for (int n = 1; n <= 9; ++n) {
        const auto closed = bn_321_closed_form(n);
        const auto filtered = bn_321_by_enumeration(n, 9);
        if (!(closed == filtered))
            ok &= expect(log, ("closed form n=" + std::to_string(n)).c_str(),
                         closed.to_string(), filtered.to_string());
        Bigint catalan = binomial(2ul * static_cast<unsigned long>(n),
                                  static_cast<unsigned long>(n));
        catalan /= (n + 1);
        ok &= expect(log, ("catalan mass n=" + std::to_string(n)).c_str(),
                     closed.value_at_one().get_str(), catalan.get_str());
    }
    for (int n = 2; n <= 60; ++n)
        if (!is_log_concave(bn_321_closed_form(n), 1, n / 2))
            ok &= expect(log, ("log-concavity n=" + std::to_string(n)).c_str(),
                         std::string("violated"), std::string("log-concave"));
    return ok;
}

bool c11_bivariate(std::string& log) {
    bool ok = true;
    for (int n = 0; n <= 7; ++n) {
        const auto b = bn_bivariate(n);
        ok &= expect(log, ("symmetry n=" + std::to_string(n)).c_str(), b.is_symmetric(), true);
        if (!(b.diagonal() == bn_diagonal_via_hooks(n)))
            ok &= expect(log, ("diagonal n=" + std::to_string(n)).c_str(),
                         b.diagonal().to_string(), bn_diagonal_via_hooks(n).to_string());
    }
    for (int n = 0; n <= 30; ++n)
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const auto lambda = Partition::unchecked(parts);
            if (!hook_sum_identity_check(lambda))
                ok &= expect(log, ("hook identity " + lambda.to_string()).c_str(),
                             std::string("violated"), std::string("holds"));
        });
    return ok;
}

bool c12_romik(std::string& log) {
    bool ok = true;
    for (int n : {40, 60}) {
        const Rational mean = mean_bump_exact(n);
        const double predicted =
            128.0 * std::pow(static_cast<double>(n), 1.5) / (27.0 * M_PI * M_PI);
        const double ratio = mean.get_d() / predicted;
        std::ostringstream os;
        os << "n=" << n << ": exact mean " << mean.get_str() << " ~ " << mean.get_d()
           << ", asymptote " << predicted << ", ratio " << ratio << "; ";
        log += os.str();
        ok &= expect(log, ("ratio in [0.5, 1.5] at n=" + std::to_string(n)).c_str(),
                     ratio >= 0.5 && ratio <= 1.5, true);
    }
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Table 1 reproduction: B_n and T_n for n=1..5, exact", 1.0, c1_table1},
        {2, "B_8 reproduction: all 18 printed terms, zero at q^25, exact", 1.0, c2_b8},
        {3, "Example end-to-end: (P,Q), bump 11, sequences, weakbump 5", 0.1,
         c3_example_end_to_end},
        {4, "three-way bump agreement over all of S_6", 10.0, c4_threeway},
        {5, "bump diagram top/right readings for sigma and pi", 1.0, c5_diagram_fidelity},
        {6, "Greene/alpha subset-search oracle over S_6, all k", 60.0, c6_greene},
        {7, "ballot bijection: counts 1,2,4,10,26,76,232 and round trips", 5.0, c7_ballot},
        {8, "weakbump == run == sorting distance on S_5 plus shape checks", 30.0,
         c8_weakbump_run_sorting},
        {9, "T_n dual computation to n=40, head stabilization, monotonicity", 30.0, c9_tn},
        {10, "321 closed form vs filtered enumeration, Catalan mass, log-concavity", 30.0,
         c10_b321},
        {11, "bivariate symmetry/diagonal and hook-sum identity to n=30", 30.0, c11_bivariate},
        {12, "mean bump against the n^{3/2} asymptote at n=40 and n=60", 300.0, c12_romik},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string log;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log += std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_seconds) {
            ok = false;
            log += "runtime " + std::to_string(elapsed) + "s exceeds budget " +
                   std::to_string(c.budget_seconds) + "s; ";
        }
        std::printf("[%s] criterion %2d (%6.2fs): %s%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    elapsed, c.title.c_str(), log.empty() ? "" : " -- ", log.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
