#include "krq/limits.hpp"

#include "krq/kr_polynomials.hpp"
#include "krq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace krq {

namespace {

void require_base(const Rational& q0)
{
    if (q0 < 2) throw std::invalid_argument("q must be >= 2");
}

// |L_q(m)| for odd m >= 1.
Rational cluster_magnitude(std::uint64_t m, const Rational& q0)
{
    const Rational qm = pow(q0, static_cast<std::int64_t>(m));
    return (q0 - 1) * (qm - 1) / pow(q0, static_cast<std::int64_t>((m + 1) / 2));
}

double approx_log2(const Rational& positive)
{
    const auto num_bits = static_cast<double>(mpz_sizeinbase(positive.get_num_mpz_t(), 2));
    const auto den_bits = static_cast<double>(mpz_sizeinbase(positive.get_den_mpz_t(), 2));
    if (num_bits < 1000 && den_bits < 1000) return std::log2(positive.get_d());
    return num_bits - den_bits;
}

struct KeyOrder {
    bool operator()(const Integer& a, const Integer& b) const
    {
        const int c = compare_abs(a, b);
        if (c != 0) return c < 0;
        return a < b;
    }
};

}  // namespace

Rational limit_candidate(const Integer& k, const Rational& q0)
{
    if (mpz_even_p(k.get_mpz_t()))
        throw std::invalid_argument("k must be odd: p odd and p + k = 2^h force odd k");
    require_base(q0);
    const Integer magnitude_k = abs(k);
    if (!magnitude_k.fits_ulong_p()) throw std::overflow_error("|k| too large to expand");
    const Rational magnitude = cluster_magnitude(magnitude_k.get_ui(), q0);
    return k > 0 ? magnitude : Rational(-magnitude);
}

Rational cluster_residual(const Integer& n, const Rational& q0)
{
    require_base(q0);
    return -(q0 - 1) / pow(q0, to_int64(n));
}

Rational closed_form_deviation(const PhiDecomposition& d, const Rational& q0)
{
    return limit_candidate(d.k, q0) + cluster_residual(d.n, q0);
}

Integer nearest_cluster(const Rational& value, const Rational& q0)
{
    require_base(q0);
    const Rational target = abs(value);
    const int direction = value < 0 ? -1 : 1;

    std::uint64_t m = 1;
    if (target > 0) {
        const double log_q = std::log2(q0.get_d());
        const double log_scale = std::log2(Rational(q0 - 1).get_d());
        const double estimate = 2.0 * (approx_log2(target) - log_scale) / log_q + 1.0;
        if (estimate > 1.0) m = static_cast<std::uint64_t>(estimate) | 1u;
    }
    // Walk to the smallest odd m with |L(m)| >= target, then compare with m - 2.
    while (m > 1 && cluster_magnitude(m, q0) > target) m -= 2;
    while (cluster_magnitude(m, q0) < target) m += 2;
    std::uint64_t best = m;
    if (m > 1) {
        const Rational above = cluster_magnitude(m, q0) - target;
        const Rational below = target - cluster_magnitude(m - 2, q0);
        if (below < above) best = m - 2;
    }
    return Integer(static_cast<unsigned long>(best)) * direction;
}

const ClusterGroup* ClusterReport::group(const Integer& k) const
{
    for (const auto& g : groups)
        if (g.k == k) return &g;
    return nullptr;
}

Rational ClusterReport::max_abs_residual() const
{
    if (rows.empty()) return 0;
    return -cluster_residual(rows.front().n(), q);
}

ClusterReport scan_phi(std::int64_t bound, const Rational& q0, std::int64_t crosscheck_bound, unsigned threads)
{
    require_base(q0);
    if (crosscheck_bound < 0 || (bound >= 3 && crosscheck_bound > bound))
        throw std::invalid_argument("crosscheck bound must lie in [0, N]");

    ClusterReport report;
    report.q = q0;
    report.bound = bound;
    report.crosscheck_bound = crosscheck_bound;

    auto chunks = map_chunks<std::vector<DeviationRecord>>(
        3, bound, threads, [&](std::int64_t lo, std::int64_t hi) {
            std::vector<DeviationRecord> out;
            for (std::int64_t n = lo; n <= hi; ++n) {
                auto d = phi_decompose(Integer(static_cast<long>(n)));
                if (!d) continue;
                DeviationRecord rec{*d, {}, {}, {}, {}};
                if (n <= crosscheck_bound) {
                    Rational limit = limit_candidate(d->k, q0);
                    const Rational residual = cluster_residual(d->n, q0);
                    Rational direct = deviation(n, q0);
                    Rational closed = limit + residual;
                    if (direct != closed)
                        throw InconsistencyError(d->n, "direct deviation differs from the closed form");
                    if (nearest_cluster(direct, q0) != d->k)
                        throw InconsistencyError(d->n, "nearest cluster differs from the decomposition's k");
                    rec.residual = direct - limit;
                    rec.limit = std::move(limit);
                    rec.deviation = std::move(direct);
                    rec.closed_form = std::move(closed);
                } else if (compare_abs(d->k, Integer(static_cast<long>(crosscheck_bound))) <= 0) {
                    rec.limit = limit_candidate(d->k, q0);
                }
                out.push_back(std::move(rec));
            }
            return out;
        });

    std::map<Integer, ClusterGroup, KeyOrder> groups;
    for (auto& chunk : chunks) {
        for (auto& rec : chunk) {
            const Integer& k = rec.decomposition.k;
            auto [it, inserted] = groups.try_emplace(k);
            ClusterGroup& g = it->second;
            if (inserted) {
                g.k = k;
                g.max_residual_exponent = -rec.n();
                if (compare_abs(k, Integer(static_cast<long>(crosscheck_bound))) <= 0)
                    g.limit = rec.limit ? *rec.limit : limit_candidate(k, q0);
            }
            g.members.push_back(rec.n());
            if (!report.largest_k || k > *report.largest_k) report.largest_k = k;
            if (!report.smallest_k || k < *report.smallest_k) report.smallest_k = k;
            report.certainty.add(rec.decomposition.certainty);
            report.rows.push_back(std::move(rec));
        }
    }
    report.groups.reserve(groups.size());
    for (auto& [k, g] : groups) report.groups.push_back(std::move(g));
    return report;
}

std::vector<Integer> CriterionReport::flagged() const
{
    std::vector<Integer> out;
    for (const auto& row : rows)
        if (row.flagged) out.push_back(row.decomposition.n);
    return out;
}

CriterionReport criterion_scan(std::int64_t bound, std::optional<std::int64_t> epsilon_exponent,
                               std::int64_t expand_bound, unsigned threads)
{
    if (epsilon_exponent && *epsilon_exponent < 0)
        throw std::invalid_argument("epsilon exponent must be >= 0");
    CriterionReport report;
    report.bound = bound;
    report.epsilon_exponent = epsilon_exponent;
    report.expand_bound = expand_bound;

    const Rational two = 2;
    const Rational half(1, 2);
    auto chunks = map_chunks<std::vector<CriterionRow>>(3, bound, threads, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<CriterionRow> out;
        for (std::int64_t n = lo; n <= hi; ++n) {
            auto d = phi_decompose(Integer(static_cast<long>(n)));
            if (!d) continue;
            Rational magnitude = abs(deviation(n, two));
            const Rational threshold = half + pow(two, -epsilon_exponent.value_or(n));
            CriterionRow row{*d, magnitude <= threshold, std::nullopt};
            if (n <= expand_bound) row.abs_deviation = std::move(magnitude);
            out.push_back(std::move(row));
        }
        return out;
    });
    for (auto& chunk : chunks)
        for (auto& row : chunk) {
            report.certainty.add(row.decomposition.certainty);
            report.rows.push_back(std::move(row));
        }
    return report;
}

std::vector<DeviationRecord> ek_search_report(const Integer& k, std::int64_t limit_h, const Rational& q0,
                                              std::int64_t expand_bound)
{
    require_base(q0);
    const Rational limit = limit_candidate(k, q0);
    std::vector<DeviationRecord> out;
    for (auto& d : ek_members(k, limit_h)) {
        DeviationRecord rec{d, limit, {}, {}, {}};
        if (d.n <= expand_bound) {
            const std::int64_t n = to_int64(d.n);
            Rational direct = deviation(n, q0);
            Rational closed = limit + cluster_residual(d.n, q0);
            if (direct != closed) throw InconsistencyError(d.n, "direct deviation differs from the closed form");
            rec.residual = direct - limit;
            rec.deviation = std::move(direct);
            rec.closed_form = std::move(closed);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace krq
