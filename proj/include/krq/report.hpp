#pragma once

// Serialization of scan results. Exact values are always decimal strings
// ("num/den", or plain "num" for integers); nothing is ever printed as a
// float. Arbitrary-precision integers (n, p, k, exponents) are strings too;
// machine-sized fields (h, counts, bounds) are JSON numbers.

#include "krq/laurent.hpp"
#include "krq/limits.hpp"

#include <json.hpp>

#include <ostream>
#include <span>
#include <string_view>

namespace krq {

enum class Format { Json, Csv, Pretty };

/// "json", "csv" or "pretty"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// Header shared by the scan and ek CSV outputs.
inline constexpr std::string_view kDeviationCsvHeader =
    "n,h,p,k,deviation_num,deviation_den,limit_num,limit_den,residual_exp2,certainty";

inline constexpr std::string_view kCriterionCsvHeader =
    "n,h,p,k,abs_deviation_num,abs_deviation_den,residual_exp2,flagged,certainty";

nlohmann::json polynomial_json(const LaurentPoly& poly);
nlohmann::json decomposition_json(const PhiDecomposition& d);
nlohmann::json record_json(const DeviationRecord& rec);
nlohmann::json cluster_json(const ClusterReport& report);
nlohmann::json criterion_json(const CriterionReport& report);

void write_polynomial_csv(std::ostream& out, const LaurentPoly& poly);
void write_deviation_csv(std::ostream& out, std::span<const DeviationRecord> rows);
void write_criterion_csv(std::ostream& out, const CriterionReport& report);

/// Human-readable forms; no stability guarantee.
std::string pretty_polynomial(const LaurentPoly& poly, std::string_view variable = "q");
void write_cluster_pretty(std::ostream& out, const ClusterReport& report);
void write_criterion_pretty(std::ostream& out, const CriterionReport& report);
void write_deviation_pretty(std::ostream& out, std::span<const DeviationRecord> rows);

}  // namespace krq
