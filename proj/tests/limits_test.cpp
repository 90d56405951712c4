#include "krq/limits.hpp"

#include "krq/kr_polynomials.hpp"

#include <gtest/gtest.h>

namespace krq {
namespace {

std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

TEST(LimitCandidate, Examples)
{
    EXPECT_EQ(limit_candidate(1, 2), make_rational(1, 2));
    EXPECT_EQ(limit_candidate(-1, 2), make_rational(-1, 2));
    EXPECT_EQ(limit_candidate(3, 2), make_rational(7, 4));
    EXPECT_EQ(limit_candidate(-3, 3), make_rational(-52, 9));  // -(2)(26)/9
    EXPECT_EQ(limit_candidate(5, make_rational(5, 2)), make_rational(3, 2) * (pow(make_rational(5, 2), 5) - 1) /
                                                           pow(make_rational(5, 2), 3));
    EXPECT_THROW(limit_candidate(2, 2), std::invalid_argument);
    EXPECT_THROW(limit_candidate(0, 2), std::invalid_argument);
    EXPECT_THROW(limit_candidate(1, 1), std::invalid_argument);
    EXPECT_THROW(limit_candidate(1, make_rational(3, 2)), std::invalid_argument);
}

TEST(LimitCandidate, OddSymmetricAndStrictlyGrowing)
{
    for (const Rational q0 : {Rational(2), Rational(3), make_rational(7, 3)}) {
        Rational previous = 0;
        for (long k = 1; k <= 61; k += 2) {
            const Rational l = limit_candidate(k, q0);
            EXPECT_EQ(limit_candidate(-k, q0), -l);
            EXPECT_GT(l, previous);
            // Consecutive clusters are further apart than any residual (at most (q-1)/q^3).
            EXPECT_GT(l - previous, (q0 - 1) / pow(q0, 3) * 2);
            previous = l;
        }
    }
}

TEST(ClusterResidual, Values)
{
    EXPECT_EQ(cluster_residual(3, 2), make_rational(-1, 8));
    EXPECT_EQ(cluster_residual(6, 3), make_rational(-2, 729));
}

TEST(ClosedForm, MatchesDirectDeviation)
{
    for (long k : {-5, -3, -1, 1, 3, 5, 7, -7, 9}) {
        for (const auto& d : ek_members(k, 11)) {
            const std::int64_t n = to_int64(d.n);
            if (n > 3000) continue;
            for (const Rational q0 : {Rational(2), Rational(3), Rational(4), make_rational(9, 4)})
                EXPECT_EQ(deviation(n, q0), closed_form_deviation(d, q0)) << n;
        }
    }
}

TEST(NearestCluster, FindsOwnK)
{
    for (long k = -31; k <= 31; k += 2) {
        for (const Rational q0 : {Rational(2), Rational(5)}) {
            const Rational l = limit_candidate(k, q0);
            EXPECT_EQ(nearest_cluster(l, q0), k);
            EXPECT_EQ(nearest_cluster(l + cluster_residual(3, q0), q0), k);
            EXPECT_EQ(nearest_cluster(l - cluster_residual(3, q0), q0), k);
        }
    }
    EXPECT_EQ(nearest_cluster(make_rational(-1, 100), 2), -1);
}

TEST(ScanPhi, SmallBounds)
{
    EXPECT_TRUE(scan_phi(2, 2, 0).rows.empty());
    EXPECT_EQ(scan_phi(2, 2, 0).max_abs_residual(), 0);
    EXPECT_THROW(scan_phi(100, 2, 101), std::invalid_argument);
    EXPECT_THROW(scan_phi(100, 2, -1), std::invalid_argument);
    EXPECT_THROW(scan_phi(100, 1, 10), std::invalid_argument);

    const auto r = scan_phi(500, 2, 500);
    EXPECT_EQ(r.rows.size(), 211u);
    ASSERT_TRUE(r.group(1));
    EXPECT_EQ(r.group(1)->members, ints({6, 28, 496}));
    ASSERT_TRUE(r.group(-1));
    EXPECT_EQ(r.group(-1)->members, ints({3, 10, 136}));
    EXPECT_EQ(r.group(1)->limit, make_rational(1, 2));
    EXPECT_EQ(r.group(1)->max_residual_exponent, -6);
    EXPECT_EQ(r.max_abs_residual(), make_rational(1, 8));
    EXPECT_EQ(r.certainty.proved, 211u);
    EXPECT_EQ(r.certainty.probable, 0u);
    for (const auto& row : r.rows) {
        ASSERT_TRUE(row.deviation);
        EXPECT_EQ(*row.deviation - *row.limit, *row.residual);
        EXPECT_EQ(*row.residual, cluster_residual(row.n(), 2));
    }
}

TEST(ScanPhi, GroupsPartitionRows)
{
    const auto r = scan_phi(3000, 3, 200);
    std::size_t total = 0;
    for (std::size_t i = 0; i < r.groups.size(); ++i) {
        const auto& g = r.groups[i];
        total += g.members.size();
        EXPECT_EQ(g.max_residual_exponent, -g.members.front());
        for (const auto& n : g.members) EXPECT_EQ(phi_decompose(n)->k, g.k);
        if (i > 0) {
            const auto& prev = r.groups[i - 1].k;
            const int c = compare_abs(prev, g.k);
            EXPECT_TRUE(c < 0 || (c == 0 && prev < g.k));
        }
    }
    EXPECT_EQ(total, r.rows.size());
    for (const auto& row : r.rows) EXPECT_EQ(row.deviation.has_value(), row.n() <= 200);
}

TEST(ScanPhi, DeterministicAcrossThreadCounts)
{
    const auto a = scan_phi(20000, 2, 2000, 1);
    const auto b = scan_phi(20000, 2, 2000, 4);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        EXPECT_EQ(a.rows[i].n(), b.rows[i].n());
        EXPECT_EQ(a.rows[i].deviation, b.rows[i].deviation);
    }
    ASSERT_EQ(a.groups.size(), b.groups.size());
    for (std::size_t i = 0; i < a.groups.size(); ++i) EXPECT_EQ(a.groups[i].members, b.groups[i].members);
}

TEST(CriterionScan, FlagsExactlyTheUnitClusters)
{
    const auto r = criterion_scan(10000);
    EXPECT_EQ(r.flagged(), ints({3, 6, 10, 28, 136, 496, 8128}));
    for (const auto& row : r.rows) EXPECT_EQ(row.flagged, abs(row.decomposition.k) == 1) << row.decomposition.n;

    EXPECT_TRUE(criterion_scan(2).rows.empty());
    EXPECT_EQ(criterion_scan(10000, 3).flagged(), r.flagged());
    EXPECT_EQ(criterion_scan(10000, 4).flagged().front(), 6);
    EXPECT_THROW(criterion_scan(100, -1), std::invalid_argument);
}

TEST(CriterionScan, ExpandedValues)
{
    const auto r = criterion_scan(12, std::nullopt, 10);
    ASSERT_FALSE(r.rows.empty());
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.abs_deviation.has_value(), row.decomposition.n <= 10);
        if (row.abs_deviation) EXPECT_EQ(*row.abs_deviation, abs(deviation(to_int64(row.decomposition.n), 2)));
    }
}

TEST(EkSearchReport, ResidualsAreMinusTwoToTheMinusN)
{
    for (long k : {1, -1, 3, -3, 5}) {
        const auto rows = ek_search_report(k, 12, 2);
        EXPECT_EQ(rows.size(), ek_members(k, 12).size());
        for (const auto& row : rows) {
            EXPECT_EQ(row.limit, limit_candidate(k, 2));
            if (row.residual) EXPECT_EQ(*row.residual, -pow(Rational(2), -to_int64(row.n())));
        }
    }
    EXPECT_THROW(ek_search_report(2, 5, 2), std::invalid_argument);
}

TEST(EkSearchReport, DivergesWithK)
{
    Rational previous = 0;
    for (long k = 1; k <= 41; k += 2) {
        const auto rows = ek_search_report(k, 20, 2, 0);
        if (rows.empty()) continue;
        EXPECT_GT(*rows.front().limit, previous);
        previous = *rows.front().limit;
    }
    EXPECT_GT(previous, 1000000);
}

}  // namespace
}  // namespace krq
