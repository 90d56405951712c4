#include "krq/report.hpp"

#include <iomanip>
#include <sstream>
#include <string>

namespace krq {

using nlohmann::json;

Format parse_format(std::string_view name)
{
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "pretty") return Format::Pretty;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

namespace {

json optional_rational(const std::optional<Rational>& value)
{
    return value ? json(to_string(*value)) : json(nullptr);
}

void write_fraction(std::ostream& out, const std::optional<Rational>& value)
{
    if (value) out << value->get_num().get_str() << ',' << value->get_den().get_str();
    else out << ',';
}

json integer_list(const std::vector<Integer>& values)
{
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

std::string abbreviated(const std::optional<Rational>& value, std::size_t width = 24)
{
    if (!value) return "-";
    std::string s = to_string(*value);
    if (s.size() > width) s = s.substr(0, width - 3) + "...";
    return s;
}

}  // namespace

json polynomial_json(const LaurentPoly& poly)
{
    json out = json::array();
    for (const auto& term : poly.terms()) {
        json coefficient = term.coefficient.fits_slong_p() ? json(term.coefficient.get_si())
                                                           : json(to_string(term.coefficient));
        out.push_back(json::array({term.exponent, coefficient}));
    }
    return out;
}

json decomposition_json(const PhiDecomposition& d)
{
    return {{"n", to_string(d.n)},
            {"h", d.h},
            {"p", to_string(d.p)},
            {"k", to_string(d.k)},
            {"certainty", std::string(to_string(d.certainty))}};
}

json record_json(const DeviationRecord& rec)
{
    json out = decomposition_json(rec.decomposition);
    out["limit"] = optional_rational(rec.limit);
    out["deviation"] = optional_rational(rec.deviation);
    out["closed_form"] = optional_rational(rec.closed_form);
    out["residual"] = optional_rational(rec.residual);
    out["residual_exp2"] = to_string(rec.residual_exponent());
    return out;
}

json cluster_json(const ClusterReport& report)
{
    json groups = json::array();
    for (const auto& g : report.groups) {
        groups.push_back({{"k", to_string(g.k)},
                          {"count", g.members.size()},
                          {"members", integer_list(g.members)},
                          {"limit", optional_rational(g.limit)},
                          {"max_abs_residual_exp", to_string(g.max_residual_exponent)}});
    }
    json out;
    out["q"] = to_string(report.q);
    out["bound"] = report.bound;
    out["crosscheck_bound"] = report.crosscheck_bound;
    out["member_count"] = report.rows.size();
    out["group_count"] = report.groups.size();
    out["largest_k"] = report.largest_k ? json(to_string(*report.largest_k)) : json(nullptr);
    out["smallest_k"] = report.smallest_k ? json(to_string(*report.smallest_k)) : json(nullptr);
    out["max_abs_residual"] = to_string(report.max_abs_residual());
    out["groups"] = std::move(groups);
    return out;
}

json criterion_json(const CriterionReport& report)
{
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r = decomposition_json(row.decomposition);
        r["flagged"] = row.flagged;
        r["abs_deviation"] = optional_rational(row.abs_deviation);
        r["residual_exp2"] = to_string(Integer(-row.decomposition.n));
        rows.push_back(std::move(r));
    }
    json out;
    out["bound"] = report.bound;
    out["expand_bound"] = report.expand_bound;
    out["threshold"] = report.epsilon_exponent ? "1/2 + 2^-" + std::to_string(*report.epsilon_exponent)
                                               : std::string("1/2 + 2^-n");
    out["flagged"] = integer_list(report.flagged());
    out["rows"] = std::move(rows);
    return out;
}

void write_polynomial_csv(std::ostream& out, const LaurentPoly& poly)
{
    out << "exponent,coefficient\n";
    for (const auto& term : poly.terms()) out << term.exponent << ',' << term.coefficient.get_str() << '\n';
}

void write_deviation_csv(std::ostream& out, std::span<const DeviationRecord> rows)
{
    out << kDeviationCsvHeader << '\n';
    for (const auto& rec : rows) {
        const auto& d = rec.decomposition;
        out << d.n.get_str() << ',' << d.h << ',' << d.p.get_str() << ',' << d.k.get_str() << ',';
        write_fraction(out, rec.deviation);
        out << ',';
        write_fraction(out, rec.limit);
        out << ',' << rec.residual_exponent().get_str() << ',' << to_string(d.certainty) << '\n';
    }
}

void write_criterion_csv(std::ostream& out, const CriterionReport& report)
{
    out << kCriterionCsvHeader << '\n';
    for (const auto& row : report.rows) {
        const auto& d = row.decomposition;
        out << d.n.get_str() << ',' << d.h << ',' << d.p.get_str() << ',' << d.k.get_str() << ',';
        write_fraction(out, row.abs_deviation);
        out << ',' << Integer(-d.n).get_str() << ',' << (row.flagged ? "true" : "false") << ','
            << to_string(d.certainty) << '\n';
    }
}

std::string pretty_polynomial(const LaurentPoly& poly, std::string_view variable)
{
    if (poly.is_zero()) return "0";
    std::ostringstream out;
    const auto terms = poly.terms();
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Integer magnitude = abs(it->coefficient);
        if (first) {
            if (it->coefficient < 0) out << '-';
        } else {
            out << (it->coefficient < 0 ? " - " : " + ");
        }
        first = false;
        if (it->exponent == 0) {
            out << magnitude.get_str();
            continue;
        }
        if (magnitude != 1) out << magnitude.get_str() << '*';
        out << variable;
        if (it->exponent != 1) out << '^' << it->exponent;
    }
    return out.str();
}

void write_cluster_pretty(std::ostream& out, const ClusterReport& report)
{
    out << "q = " << to_string(report.q) << ", n <= " << report.bound << ", crosscheck n <= "
        << report.crosscheck_bound << '\n'
        << report.rows.size() << " members in " << report.groups.size() << " groups";
    if (report.largest_k) out << ", k from " << report.smallest_k->get_str() << " to " << report.largest_k->get_str();
    out << "\nmax |residual| = " << to_string(report.max_abs_residual()) << "\n\n";
    out << std::setw(10) << "k" << std::setw(8) << "count" << "  " << std::left << std::setw(26) << "limit"
        << "members" << std::right << '\n';
    for (const auto& g : report.groups) {
        out << std::setw(10) << g.k.get_str() << std::setw(8) << g.members.size() << "  " << std::left
            << std::setw(26) << abbreviated(g.limit);
        for (std::size_t i = 0; i < g.members.size() && i < 6; ++i) out << (i ? " " : "") << g.members[i].get_str();
        if (g.members.size() > 6) out << " ...";
        out << std::right << '\n';
    }
}

void write_criterion_pretty(std::ostream& out, const CriterionReport& report)
{
    const auto flagged = report.flagged();
    out << "n <= " << report.bound << ", threshold |D_n(2)| <= "
        << (report.epsilon_exponent ? "1/2 + 2^-" + std::to_string(*report.epsilon_exponent) : "1/2 + 2^-n")
        << '\n'
        << report.rows.size() << " candidates, " << flagged.size() << " flagged:";
    for (const auto& n : flagged) out << ' ' << n.get_str();
    out << '\n';
}

void write_deviation_pretty(std::ostream& out, std::span<const DeviationRecord> rows)
{
    out << std::setw(12) << "n" << std::setw(6) << "h" << std::setw(12) << "p" << std::setw(8) << "k" << "  "
        << std::left << std::setw(26) << "deviation" << std::setw(26) << "limit" << "residual" << std::right
        << '\n';
    for (const auto& rec : rows) {
        const auto& d = rec.decomposition;
        out << std::setw(12) << d.n.get_str() << std::setw(6) << d.h << std::setw(12) << d.p.get_str()
            << std::setw(8) << d.k.get_str() << "  " << std::left << std::setw(26) << abbreviated(rec.deviation)
            << std::setw(26) << abbreviated(rec.limit) << "-(q-1)*q^" << rec.residual_exponent().get_str()
            << std::right << '\n';
    }
}

}  // namespace krq
