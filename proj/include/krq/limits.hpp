#pragma once

// Deviations D_n(q) = C_n(q)/q^n - (1 - 1/q) q^n over n = 2^(h-1) p, their
// cluster values L_q(k) = sign(k) (q-1)(q^|k| - 1) / q^((|k|+1)/2), and the
// Fermat/Mersenne criterion scan at q = 2.
//
// For n in E_k the deviation splits exactly as D_n(q) = L_q(k) + residual with
// residual = -(q - 1) q^-n. Report rows keep that split and expand the exact
// rationals only below a bound, since for n near 10^5 each one has ~10^5 bits.

#include "krq/exact.hpp"
#include "krq/numtheory.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace krq {

/// Raised when two independent computations of the same exact quantity
/// disagree.
class InconsistencyError : public std::runtime_error {
public:
    InconsistencyError(Integer n, const std::string& what)
        : std::runtime_error(what + " (n = " + n.get_str() + ")"), n_(std::move(n)) {}

    const Integer& n() const { return n_; }

private:
    Integer n_;
};

/// L_q(k). Throws std::invalid_argument for even k or q0 < 2.
Rational limit_candidate(const Integer& k, const Rational& q0);

/// -(q0 - 1) / q0^n, the gap between D_n(q0) and its cluster value.
Rational cluster_residual(const Integer& n, const Rational& q0);

/// L_q(k) + cluster_residual(n, q): the closed form of D_n(q) on E_k.
Rational closed_form_deviation(const PhiDecomposition& d, const Rational& q0);

/// The odd k whose L_q(k) is nearest to value (ties cannot occur for
/// deviations, whose residual is far below the cluster spacing).
Integer nearest_cluster(const Rational& value, const Rational& q0);

struct DeviationRecord {
    PhiDecomposition decomposition;
    std::optional<Rational> limit;        // L_q(k)
    std::optional<Rational> deviation;    // direct evaluation of the polynomial
    std::optional<Rational> closed_form;  // L_q(k) - (q - 1) q^-n
    std::optional<Rational> residual;     // deviation - L_q(k)

    const Integer& n() const { return decomposition.n; }
    /// residual = -(q - 1) q^residual_exponent().
    Integer residual_exponent() const { return -decomposition.n; }
};

struct ClusterGroup {
    Integer k;
    std::vector<Integer> members;  // ascending
    std::optional<Rational> limit;
    /// max |residual| over the group is (q - 1) q^max_residual_exponent.
    Integer max_residual_exponent;
};

struct CertaintyTally {
    std::size_t proved = 0;
    std::size_t probable = 0;

    void add(Certainty c) { ++(c == Certainty::Proved ? proved : probable); }
};

struct ClusterReport {
    Rational q;
    std::int64_t bound = 0;
    std::int64_t crosscheck_bound = 0;
    std::vector<DeviationRecord> rows;  // ascending n
    std::vector<ClusterGroup> groups;   // by |k|, then negative before positive
    std::optional<Integer> largest_k;
    std::optional<Integer> smallest_k;
    CertaintyTally certainty;

    const ClusterGroup* group(const Integer& k) const;
    /// max |residual| over every row: (q - 1) q^-(least member), or 0 if empty.
    Rational max_abs_residual() const;
};

/// Every n in [3, bound] whose odd part is prime, grouped by k. Rows with
/// n <= crosscheck_bound are also evaluated directly from the divisor route
/// and must match the closed form and the nearest cluster exactly; any
/// mismatch raises InconsistencyError. Those rows carry expanded rationals,
/// as do group limits with |k| <= crosscheck_bound.
ClusterReport scan_phi(std::int64_t bound, const Rational& q0, std::int64_t crosscheck_bound,
                       unsigned threads = 1);

struct CriterionRow {
    PhiDecomposition decomposition;
    bool flagged;
    std::optional<Rational> abs_deviation;  // |D_n(2)|, expanded when n <= expand bound
};

struct CriterionReport {
    std::int64_t bound = 0;
    std::optional<std::int64_t> epsilon_exponent;
    std::int64_t expand_bound = 0;
    std::vector<CriterionRow> rows;  // ascending n
    CertaintyTally certainty;

    std::vector<Integer> flagged() const;
};

/// Flags n in [3, bound] (n with prime odd part) when |D_n(2)| <= 1/2 + eps,
/// with eps = 2^-n by default or 2^-epsilon_exponent when given. |D_n(2)| is
/// evaluated directly from the divisor route, independently of k.
CriterionReport criterion_scan(std::int64_t bound, std::optional<std::int64_t> epsilon_exponent = std::nullopt,
                               std::int64_t expand_bound = 64, unsigned threads = 1);

/// One record per member of ek_members(k, limit_h). Members with
/// n <= expand_bound are evaluated directly and checked against the closed
/// form (InconsistencyError on mismatch). Throws std::invalid_argument for
/// even k.
std::vector<DeviationRecord> ek_search_report(const Integer& k, std::int64_t limit_h, const Rational& q0,
                                              std::int64_t expand_bound = 10000);

}  // namespace krq
