#include "bumpkit/verify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bumpkit/bump_diagram.hpp"
#include "bumpkit/genfun.hpp"
#include "bumpkit/rs.hpp"
#include "bumpkit/statistics.hpp"
#include "bumpkit/viennot.hpp"

namespace bumpkit {

namespace {

std::string padded(int n) {
    return (n < 10 ? "0" : "") + std::to_string(n);
}

std::string seq_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

// Per-(suite, n) aggregation; failing checks keep the lowest-indexed
// counterexample so output stays deterministic under parallel fan-out.
struct Tally {
    long checks = 0;
    long failures = 0;
    long first_index = std::numeric_limits<long>::max();
    OracleReport first;
};

template <typename Detail>
void check(Tally& t, long index, bool ok, Detail&& detail) {
    ++t.checks;
    if (ok) return;
    ++t.failures;
    if (index < t.first_index) {
        t.first_index = index;
        t.first = detail();
    }
}

void merge_tally(Tally& into, const Tally& from) {
    into.checks += from.checks;
    into.failures += from.failures;
    if (from.first_index < into.first_index) {
        into.first_index = from.first_index;
        into.first = from.first;
    }
}

void emit(std::vector<OracleReport>& reports, const std::string& suite, int n, const Tally& t) {
    OracleReport agg;
    agg.instance = suite + " n=" + padded(n) + " (" + std::to_string(t.checks) + " checks)";
    agg.fast_value = std::to_string(t.checks - t.failures);
    agg.oracle_value = std::to_string(t.checks);
    agg.agree = t.failures == 0;
    reports.push_back(std::move(agg));
    if (t.failures > 0) reports.push_back(t.first);
}

OracleReport detail(std::string instance, std::string fast, std::string oracle) {
    return OracleReport{std::move(instance), std::move(fast), std::move(oracle), false};
}

Bigint catalan(int n) {
    Bigint c = binomial(2ul * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    Bigint r;
    mpz_divexact_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n) + 1);
    return r;
}

Bigint involution_count(int n) {
    Bigint a = 1, b = 1; // i(0), i(1)
    if (n == 0) return a;
    for (int m = 2; m <= n; ++m) {
        Bigint next = b + (m - 1) * a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

int row_of_value(const StandardTableau& t, int value) {
    for (int r = 1; r <= t.num_rows(); ++r)
        for (int v : t.row(r))
            if (v == value) return r;
    return 0;
}

// ---- suites --------------------------------------------------------------

void suite_rs_roundtrip(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        long index = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            const auto r = rs(p);
            check(t, index, inverse_rs(r.P, r.Q) == p, [&] {
                return detail("rs-roundtrip " + p.to_string(),
                              inverse_rs(r.P, r.Q).to_string(), p.to_string());
            });
            const auto ri = rs(inverse(p));
            check(t, index, ri.P == r.Q && ri.Q == r.P, [&] {
                return detail("rs-inverse-swap " + p.to_string(), ri.P.to_string(),
                              r.Q.to_string());
            });
            for (int i = 1; i <= n; ++i)
                check(t, index, r.bump_sequence[static_cast<size_t>(i) - 1] + 1 ==
                                    row_of_value(r.Q, i),
                      [&] {
                          return detail("bump-row " + p.to_string() + " i=" + std::to_string(i),
                                        std::to_string(r.bump_sequence[static_cast<size_t>(i) - 1] + 1),
                                        std::to_string(row_of_value(r.Q, i)));
                      });
            ++index;
        });
        emit(reports, "rs-roundtrip", n, t);
    }
}

void suite_bump_threeway(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        const auto perms = permutations_of(n);
        Tally t;
#pragma omp parallel
        {
            Tally local;
#pragma omp for schedule(dynamic, 64) nowait
            for (long i = 0; i < static_cast<long>(perms.size()); ++i) {
                const auto& p = perms[static_cast<size_t>(i)];
                const long by_shape = bump(p);
                const long by_sim = bump_by_simulation(p);
                const long by_shadow = bump_via_shadows(p);
                long by_diagram = 0;
                for (int v : bump_sequence_via_diagram(p)) by_diagram += v;
                const bool ok = by_shape == by_sim && by_sim == by_shadow &&
                                by_shadow == by_diagram && by_shape == bump(inverse(p));
                check(local, i, ok, [&] {
                    return detail("bump-threeway " + p.to_string(),
                                  std::to_string(by_shape),
                                  std::to_string(by_sim) + "/" + std::to_string(by_shadow) +
                                      "/" + std::to_string(by_diagram));
                });
            }
#pragma omp critical
            merge_tally(t, local);
        }
        emit(reports, "bump-threeway", n, t);
    }
}

void suite_descent(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        long index = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            const auto bs = rs(p).bump_sequence;
            std::vector<int> from_bumps;
            for (int i = 1; i < n; ++i)
                if (bs[static_cast<size_t>(i) - 1] < bs[static_cast<size_t>(i)])
                    from_bumps.push_back(i);
            check(t, index++, descent_set(p) == from_bumps, [&] {
                return detail("descent " + p.to_string(), seq_str(descent_set(p)),
                              seq_str(from_bumps));
            });
        });
        emit(reports, "descent", n, t);
    }
}

void suite_ballot(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        // Count of ballot sequences == sum of f^lambda over shapes of n.
        Bigint syt_sum = 0;
        for (const auto& lambda : partitions_of(n)) syt_sum += count_syt(lambda);
        long ballots = 0;
        long index = 0;
        for_each_ballot_sequence(
            n,
            [&](const std::vector<int>& terms) {
                ++ballots;
                const auto b = WeakBallotSequence::unchecked(terms);
                const auto p = ballot_to_permutation(b);
                check(t, index, bump_sequence(p) == b, [&] {
                    return detail("ballot-roundtrip " + seq_str(terms),
                                  seq_str(bump_sequence(p).terms()), seq_str(terms));
                });
                check(t, index, p == inverse(p), [&] {
                    return detail("ballot-involution " + seq_str(terms), p.to_string(),
                                  inverse(p).to_string());
                });
                ++index;
            },
            std::max(max_n, kExhaustiveCap));
        check(t, index++, Bigint(ballots) == syt_sum, [&] {
            return detail("ballot-count n=" + std::to_string(n), std::to_string(ballots),
                          syt_sum.get_str());
        });
        // Every bump sequence is a valid ballot sequence.
        for_each_permutation(n, [&](const Permutation& p) {
            bool valid = true;
            try {
                WeakBallotSequence b(rs(p).bump_sequence);
            } catch (const NotABallotSequence&) {
                valid = false;
            }
            check(t, index++, valid, [&] {
                return detail("bump-seq-is-ballot " + p.to_string(),
                              seq_str(rs(p).bump_sequence), "weak ballot sequence");
            });
        });
        emit(reports, "ballot", n, t);
    }
}

void suite_diagram(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        long index = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            const auto d = build_bump_diagram(p);
            const auto top = d.top_reading();
            const auto right = d.right_reading();
            check(t, index, top == rs(p).bump_sequence, [&] {
                return detail("diagram-top " + p.to_string(), seq_str(top),
                              seq_str(rs(p).bump_sequence));
            });
            check(t, index, right == rs(inverse(p)).bump_sequence, [&] {
                return detail("diagram-right " + p.to_string(), seq_str(right),
                              seq_str(rs(inverse(p)).bump_sequence));
            });
            auto ts = top, rights = right;
            std::sort(ts.begin(), ts.end());
            std::sort(rights.begin(), rights.end());
            check(t, index, ts == rights, [&] {
                return detail("diagram-multiset " + p.to_string(), seq_str(ts), seq_str(rights));
            });
            ++index;
        });
        emit(reports, "diagram", n, t);
    }
}

void suite_viennot(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        long index = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            const auto d = shadow_diagram(p);
            const auto r = rs(p);
            bool exits_ok = static_cast<int>(d.levels.size()) == r.P.num_rows();
            for (int lv = 1; exits_ok && lv <= static_cast<int>(d.levels.size()); ++lv) {
                exits_ok = d.levels[static_cast<size_t>(lv) - 1].exit_rows_y == r.P.row(lv) &&
                           d.levels[static_cast<size_t>(lv) - 1].exit_cols_x == r.Q.row(lv);
            }
            check(t, index, exits_ok, [&] {
                return detail("viennot-exits " + p.to_string(), "per-level exits",
                              "rows of P and Q");
            });
            auto counts = intermediate_count_per_level(p);
            auto alphas = alpha_sequence(p);
            while (!alphas.empty() && alphas.back() == 0) alphas.pop_back();
            check(t, index, counts == alphas, [&] {
                return detail("viennot-alpha " + p.to_string(), seq_str(counts),
                              seq_str(alphas));
            });
            ++index;
        });
        emit(reports, "viennot", n, t);
    }
}

void suite_greene(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= std::min(max_n, kGreeneCap); ++n) {
        const auto perms = permutations_of(n);
        Tally t;
#pragma omp parallel
        {
            Tally local;
#pragma omp for schedule(dynamic, 16) nowait
            for (long i = 0; i < static_cast<long>(perms.size()); ++i) {
                const auto& p = perms[static_cast<size_t>(i)];
                const auto lambda = shape_of(p);
                const auto conj = conjugate(lambda);
                long sum_l = 0, sum_c = 0;
                for (int k = 1; k <= n; ++k) {
                    sum_l += lambda.part(k);
                    sum_c += conj.part(k);
                    const int gi = greene_I(p, k);
                    const int gd = greene_D(p, k);
                    check(local, i, gi == sum_l, [&] {
                        return detail("greene-I " + p.to_string() + " k=" + std::to_string(k),
                                      std::to_string(sum_l), std::to_string(gi));
                    });
                    check(local, i, gd == sum_c, [&] {
                        return detail("greene-D " + p.to_string() + " k=" + std::to_string(k),
                                      std::to_string(sum_c), std::to_string(gd));
                    });
                    check(local, i, alpha_by_removal(p, k) == alpha(p, k), [&] {
                        return detail("alpha " + p.to_string() + " i=" + std::to_string(k),
                                      std::to_string(alpha(p, k)),
                                      std::to_string(alpha_by_removal(p, k)));
                    });
                }
            }
#pragma omp critical
            merge_tally(t, local);
        }
        emit(reports, "greene", n, t);
    }
}

void suite_sorting_run(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= std::min(max_n, kMovesCap); ++n) {
        Tally t;
        long index = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            const int wb = weakbump(p);
            check(t, index, min_deletion_insertion_moves(p) == wb, [&] {
                return detail("sorting-moves " + p.to_string(), std::to_string(wb),
                              std::to_string(min_deletion_insertion_moves(p)));
            });
            if (n <= kRunWordsCap)
                check(t, index, run_statistic_bruteforce(p) == wb, [&] {
                    return detail("run-statistic " + p.to_string(), std::to_string(wb),
                                  std::to_string(run_statistic_bruteforce(p)));
                });
            ++index;
        });
        emit(reports, "sorting-run", n, t);
    }
}

void suite_b321(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        long index = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            const auto lambda = shape_of(p);
            check(t, index, avoids_321(p) == (lambda.num_parts() <= 2), [&] {
                return detail("avoids-321-shape " + p.to_string(),
                              avoids_321(p) ? "avoids" : "contains", lambda.to_string());
            });
            if (avoids_321(p))
                check(t, index, bump(p) == weakbump(p), [&] {
                    return detail("bump-weakbump-321 " + p.to_string(),
                                  std::to_string(bump(p)), std::to_string(weakbump(p)));
                });
            ++index;
        });
        if (n >= 1) {
            const auto closed = bn_321_closed_form(n);
            const auto enumerated = bn_321_by_enumeration(n, std::max(max_n, kExhaustiveCap));
            check(t, index++, closed == enumerated, [&] {
                return detail("b321-closed-form n=" + std::to_string(n), closed.to_string(),
                              enumerated.to_string());
            });
            check(t, index++, closed.value_at_one() == catalan(n), [&] {
                return detail("b321-catalan n=" + std::to_string(n),
                              closed.value_at_one().get_str(), catalan(n).get_str());
            });
        }
        emit(reports, "b321", n, t);
    }
}

void suite_bn_dual(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        const auto by_enum = bn_by_enumeration(n, std::max(max_n, kEnumerationCap));
        const auto by_shapes = bn_by_shapes(n);
        check(t, 0, by_enum == by_shapes, [&] {
            return detail("bn-dual n=" + std::to_string(n), by_shapes.to_string(),
                          by_enum.to_string());
        });
        check(t, 1, by_shapes == bn_by_shapes_serial(n), [&] {
            return detail("bn-kernel n=" + std::to_string(n), by_shapes.to_string(),
                          bn_by_shapes_serial(n).to_string());
        });
        check(t, 2, by_shapes.value_at_one() == factorial(static_cast<unsigned long>(n)), [&] {
            return detail("bn-mass n=" + std::to_string(n), by_shapes.value_at_one().get_str(),
                          factorial(static_cast<unsigned long>(n)).get_str());
        });
        const long top = by_shapes.max_exponent();
        check(t, 3, top == static_cast<long>(n) * (n - 1) / 2 &&
                        by_shapes.coeff(top) == 1, [&] {
            return detail("bn-degree n=" + std::to_string(n), std::to_string(top),
                          std::to_string(static_cast<long>(n) * (n - 1) / 2));
        });
        emit(reports, "bn-dual", n, t);
    }
}

void suite_bivariate(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        const auto direct = bn_bivariate(n, std::max(max_n, kEnumerationCap));
        check(t, 0, direct.is_symmetric(), [&] {
            return detail("bivariate-symmetry n=" + std::to_string(n), direct.to_string(),
                          "B_n(q,t) == B_n(t,q)");
        });
        check(t, 1, direct == bn_bivariate_by_shapes(n), [&] {
            return detail("bivariate-shapes n=" + std::to_string(n), direct.to_string(),
                          bn_bivariate_by_shapes(n).to_string());
        });
        check(t, 2, direct.diagonal() == bn_diagonal_via_hooks(n), [&] {
            return detail("bivariate-diagonal n=" + std::to_string(n),
                          direct.diagonal().to_string(), bn_diagonal_via_hooks(n).to_string());
        });
        emit(reports, "bivariate", n, t);
    }
}

void suite_hook_identity(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        long index = 0;
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const auto lambda = Partition::unchecked(parts);
            check(t, index++, hook_sum_identity_check(lambda), [&] {
                return detail("hook-identity " + lambda.to_string(),
                              std::to_string(hook_sum(lambda)),
                              std::to_string(bump_from_shape(lambda) +
                                             bump_from_shape(conjugate(lambda)) +
                                             lambda.size()));
            });
        });
        emit(reports, "hook-identity", n, t);
    }
}

void suite_tn_dual(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        const auto direct = tn_direct(n);
        check(t, 0, direct == tn_via_product(n), [&] {
            return detail("tn-dual n=" + std::to_string(n), direct.to_string(),
                          tn_via_product(n).to_string());
        });
        check(t, 1, direct == tn_direct_serial(n), [&] {
            return detail("tn-kernel n=" + std::to_string(n), direct.to_string(),
                          tn_direct_serial(n).to_string());
        });
        check(t, 2, direct.value_at_one() == partition_count_pentagonal(n), [&] {
            return detail("tn-mass n=" + std::to_string(n), direct.value_at_one().get_str(),
                          partition_count_pentagonal(n).get_str());
        });
        emit(reports, "tn-dual", n, t);
    }
}

void suite_syt(int max_n, std::vector<OracleReport>& reports) {
    for (int n = 0; n <= max_n; ++n) {
        Tally t;
        long index = 0;
        check(t, index++,
              Bigint(static_cast<long>(partitions_of(n).size())) ==
                  partition_count_pentagonal(n),
              [&] {
                  return detail("partition-count n=" + std::to_string(n),
                                std::to_string(partitions_of(n).size()),
                                partition_count_pentagonal(n).get_str());
              });
        if (n <= 10) {
            Bigint square_sum = 0, sum = 0;
            for (const auto& lambda : partitions_of(n)) {
                const Bigint f = count_syt(lambda);
                square_sum += f * f;
                sum += f;
                if (n <= 8)
                    check(t, index, f == count_syt_backtracking(lambda), [&] {
                        return detail("syt-backtracking " + lambda.to_string(), f.get_str(),
                                      count_syt_backtracking(lambda).get_str());
                    });
                ++index;
            }
            check(t, index++, square_sum == factorial(static_cast<unsigned long>(n)), [&] {
                return detail("syt-square-sum n=" + std::to_string(n), square_sum.get_str(),
                              factorial(static_cast<unsigned long>(n)).get_str());
            });
            check(t, index++, sum == involution_count(n), [&] {
                return detail("syt-involution n=" + std::to_string(n), sum.get_str(),
                              involution_count(n).get_str());
            });
        }
        // conjugation is an involution preserving size
        for_each_partition(n, [&](const std::vector<int>& parts) {
            const auto lambda = Partition::unchecked(parts);
            check(t, index++, conjugate(conjugate(lambda)) == lambda &&
                                  conjugate(lambda).size() == lambda.size(),
                  [&] {
                      return detail("conjugate-involution " + lambda.to_string(),
                                    conjugate(conjugate(lambda)).to_string(),
                                    lambda.to_string());
                  });
        });
        emit(reports, "syt", n, t);
    }
}

void suite_tn_head(int max_n, std::vector<OracleReport>& reports) {
    Tally t;
    const long max_i = max_n / 2;
    const auto head = tn_head_series(std::max(max_i, 0l));
    std::vector<SparsePolynomial> tn;
    for (int n = 0; n <= max_n; ++n) tn.push_back(tn_direct(n));
    long index = 0;
    for (long i = 0; i <= max_i; ++i)
        for (int n = static_cast<int>(2 * i); n <= max_n; ++n) {
            check(t, index++, tn[static_cast<size_t>(n)].coeff(i) == head.coeff(i), [&] {
                return detail("tn-head i=" + std::to_string(i) + " n=" + std::to_string(n),
                              tn[static_cast<size_t>(n)].coeff(i).get_str(),
                              head.coeff(i).get_str());
            });
        }
    // t_{n+j,n} <= t_{n+j+1,n}
    for (int n = 0; n <= max_n; ++n)
        for (int j = 0; n + j + 1 <= max_n; ++j) {
            check(t, index++,
                  tn[static_cast<size_t>(n + j)].coeff(n) <=
                      tn[static_cast<size_t>(n + j + 1)].coeff(n),
                  [&] {
                      return detail("tn-monotone n=" + std::to_string(n) +
                                        " j=" + std::to_string(j),
                                    tn[static_cast<size_t>(n + j)].coeff(n).get_str(),
                                    tn[static_cast<size_t>(n + j + 1)].coeff(n).get_str());
                  });
        }
    emit(reports, "tn-head", max_n, t);
}

} // namespace

const std::vector<VerifySuite>& verify_suites() {
    static const std::vector<VerifySuite> suites = {
        {"rs-roundtrip", "inverse_rs(rs(p)) == p; RS(p^-1) == (Q,P); bump row indices", false,
         suite_rs_roundtrip},
        {"bump-threeway", "shape formula == insertion count == shadows == diagram", false,
         suite_bump_threeway},
        {"descent", "descents iff strictly rising bump sequence entries", false, suite_descent},
        {"ballot", "bump sequences are exactly the weak ballot sequences", false, suite_ballot},
        {"diagram", "bump diagram readings against the insertion engine", false, suite_diagram},
        {"viennot", "shadow exits reproduce P and Q; intermediates are alphas", false,
         suite_viennot},
        {"greene", "subset-search Greene invariants against shape prefix sums", false,
         suite_greene},
        {"sorting-run", "deletion-insertion BFS and reduced-word runs equal n - lambda_1", false,
         suite_sorting_run},
        {"b321", "321 closed form, Catalan mass, bump == weakbump for avoiders", false,
         suite_b321},
        {"bn-dual", "B_n by enumeration == by shapes (parallel and serial)", false,
         suite_bn_dual},
        {"bivariate", "B_n(q,t) symmetry, shape route, hook diagonal", false, suite_bivariate},
        {"hook-identity", "sum of hooks == bump(lambda) + bump(lambda') + n", true,
         suite_hook_identity},
        {"tn-dual", "T_n direct == product extraction (parallel and serial)", true,
         suite_tn_dual},
        {"syt", "hook-length counts against backtracking; partition counts", true, suite_syt},
        {"tn-head", "head stabilization and monotone growth of T_n", true, suite_tn_head},
    };
    return suites;
}

std::string oracle_report_json(const OracleReport& report) {
    nlohmann::json j{{"instance", report.instance},
                     {"fast_value", report.fast_value},
                     {"oracle_value", report.oracle_value},
                     {"agree", report.agree}};
    return j.dump();
}

bool run_verify(const VerifyOptions& options, std::ostream& out) {
    std::vector<const VerifySuite*> selected;
    for (const auto& suite : verify_suites()) {
        if (options.suites.empty() ||
            std::find(options.suites.begin(), options.suites.end(), suite.name) !=
                options.suites.end())
            selected.push_back(&suite);
    }
    for (const auto& name : options.suites) {
        const bool known =
            std::any_of(verify_suites().begin(), verify_suites().end(),
                        [&](const VerifySuite& s) { return s.name == name; });
        if (!known) throw Error("unknown suite '" + name + "'");
    }
    for (const auto* suite : selected) {
        const int cap = suite->partition_scale ? kVerifyPartitionHardCap
                                               : kVerifyPermutationHardCap;
        if (options.max_n > cap)
            throw CapExceeded("--max-n " + std::to_string(options.max_n) + " exceeds hard cap " +
                              std::to_string(cap) + " of suite '" + suite->name + "'");
    }

    std::vector<OracleReport> reports;
    for (const auto* suite : selected) suite->run(options.max_n, reports);

    std::stable_sort(reports.begin(), reports.end(),
                     [](const OracleReport& a, const OracleReport& b) {
                         return a.instance < b.instance;
                     });
    long checks = 0, disagreements = 0;
    for (const auto& r : reports) {
        out << oracle_report_json(r) << '\n';
        if (!r.agree) ++disagreements;
    }
    for (const auto& r : reports) {
        // Aggregates carry their check counts in oracle_value.
        if (r.instance.find(" checks)") != std::string::npos)
            checks += std::stol(r.oracle_value);
    }
    out << "verify: " << checks << " checks, " << disagreements
        << " disagreement(s), suites=" << selected.size() << ", max-n=" << options.max_n
        << '\n';
    return disagreements == 0;
}

} // namespace bumpkit
