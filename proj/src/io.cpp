#include "beamplan/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace beamplan {

using nlohmann::json;

std::string format_double(double v, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
    return buf;
}

void write_sequence_csv(std::ostream& os, const RationalSeq& seq, SeqFormat format, int digits,
                        const RationalSeq* closed_form) {
    const bool with_delta = closed_form != nullptr;
    switch (format) {
        case SeqFormat::exact:
            os << "k,numerator,denominator" << (with_delta ? ",closed_minus_recursive" : "")
               << "\n";
            break;
        case SeqFormat::ratio:
        case SeqFormat::decimal:
            os << "k,value" << (with_delta ? ",closed_minus_recursive" : "") << "\n";
            break;
    }
    const PrecisionContext ctx(256);
    for (std::size_t k = 0; k < seq.entries.size(); ++k) {
        const Rational& v = seq.entries[k];
        os << k << ',';
        switch (format) {
            case SeqFormat::exact:
                os << v.get_num().get_str() << ',' << v.get_den().get_str();
                break;
            case SeqFormat::ratio:
                os << v.get_num().get_str() << '/' << v.get_den().get_str();
                break;
            case SeqFormat::decimal:
                os << BigFloat(v, ctx).str(digits);
                break;
        }
        if (with_delta) {
            const Rational delta = closed_form->entries.at(k) - v;
            os << ',' << delta.get_num().get_str() << '/' << delta.get_den().get_str();
        }
        os << "\n";
    }
}

namespace {

json rationals_to_json(const std::vector<Rational>& row) {
    json arr = json::array();
    for (const auto& r : row) arr.push_back(to_fraction_string(r));
    return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
    std::vector<Rational> row;
    for (const auto& item : arr) row.push_back(rational_from_string(item.get<std::string>()));
    return row;
}

}  // namespace

std::string table_to_json(const CoefficientTable& table, int indent) {
    json j;
    j["K"] = table.K;
    j["c"] = json::array();
    j["d"] = json::array();
    for (const auto& row : table.c) j["c"].push_back(rationals_to_json(row));
    for (const auto& row : table.d) j["d"].push_back(rationals_to_json(row));
    j["beta2"] = rationals_to_json(table.beta2);
    return j.dump(indent);
}

CoefficientTable table_from_json(const std::string& text) {
    const json j = json::parse(text);
    CoefficientTable t;
    t.K = j.at("K").get<std::size_t>();
    for (const auto& row : j.at("c")) t.c.push_back(rationals_from_json(row));
    for (const auto& row : j.at("d")) t.d.push_back(rationals_from_json(row));
    t.beta2 = rationals_from_json(j.at("beta2"));
    if (t.c.size() != t.K + 1 || t.d.size() != t.K + 1 || t.beta2.size() != t.K + 1)
        throw std::invalid_argument("table_from_json: inconsistent K");
    for (std::size_t k = 0; k <= t.K; ++k)
        if (t.c[k].size() != k + 1 || t.d[k].size() != k + 1)
            throw std::invalid_argument("table_from_json: ragged rows");
    return t;
}

std::string ck0_to_json(const Ck0Sequence& seq, int indent) {
    json j;
    j["ck0"] = rationals_to_json(seq.values);
    return j.dump(indent);
}

Ck0Sequence ck0_from_json(const std::string& text) {
    const json j = json::parse(text);
    Ck0Sequence s;
    s.values = rationals_from_json(j.at("ck0"));
    if (s.values.empty()) throw std::invalid_argument("ck0_from_json: empty sequence");
    return s;
}

void write_feedforward_csv(std::ostream& os, const FeedforwardResult& result, int digits) {
    os << "t,u,n_t,scan_exhausted\n";
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        os << format_double(result.times[i], digits) << ',' << result.u_values[i].str(digits)
           << ',' << result.n_t[i] << ',' << (result.scan_exhausted[i] ? 1 : 0) << "\n";
    }
}

std::vector<std::pair<double, double>> read_plan_csv(std::istream& is) {
    std::vector<std::pair<double, double>> series;
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("plan CSV: empty file");
    if (line.rfind("t,u", 0) != 0) throw std::invalid_argument("plan CSV: missing t,u header");
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string t_str, u_str;
        if (!std::getline(row, t_str, ',') || !std::getline(row, u_str, ','))
            throw std::invalid_argument("plan CSV: malformed line " + std::to_string(line_no));
        try {
            series.emplace_back(std::stod(t_str), std::stod(u_str));
        } catch (const std::exception&) {
            throw std::invalid_argument("plan CSV: non-numeric data at line " +
                                        std::to_string(line_no));
        }
    }
    if (series.empty()) throw std::invalid_argument("plan CSV: no samples");
    return series;
}

void write_term_log_csv(std::ostream& os, const FeedforwardResult& result, int digits) {
    os << "t,k,magnitude\n";
    for (std::size_t i = 0; i < result.times.size(); ++i)
        for (std::size_t k = 0; k < result.term_log[i].size(); ++k)
            os << format_double(result.times[i], digits) << ',' << k << ','
               << result.term_log[i][k].str(digits) << "\n";
}

void write_snapshot_csv(std::ostream& os, const SimOutput& output, int digits) {
    os << "t";
    for (double z : output.z_nodes) os << ',' << format_double(z, digits);
    os << "\n";
    for (const auto& [t, w] : output.snapshots) {
        os << format_double(t, digits);
        for (double v : w) os << ',' << format_double(v, digits);
        os << "\n";
    }
}

namespace {
double interp(const std::vector<std::pair<double, double>>& series, double t) {
    if (series.empty()) return 0.0;
    if (t <= series.front().first) return series.front().second;
    if (t >= series.back().first) return series.back().second;
    auto it = std::lower_bound(series.begin(), series.end(), t,
                               [](const auto& s, double value) { return s.first < value; });
    const auto& [t1, v1] = *it;
    const auto& [t0, v0] = *(it - 1);
    if (t1 == t0) return v1;
    return v0 + (t - t0) / (t1 - t0) * (v1 - v0);
}
}  // namespace

void write_moment_csv(std::ostream& os, const SimOutput& output,
                      const std::vector<std::pair<double, double>>& y_ref, int digits) {
    os << "t,y_sim,y_ref\n";
    for (const auto& [t, y_sim] : output.clamped_moment)
        os << format_double(t, digits) << ',' << format_double(y_sim, digits) << ','
           << format_double(interp(y_ref, t), digits) << "\n";
}

void write_derivative_csv(std::ostream& os, const std::vector<double>& times,
                          const std::vector<std::vector<BigFloat>>& derivative_rows, int digits) {
    os << "t,m,value\n";
    for (std::size_t i = 0; i < times.size(); ++i)
        for (std::size_t m = 0; m < derivative_rows[i].size(); ++m)
            os << format_double(times[i], digits) << ',' << m << ','
               << derivative_rows[i][m].str(digits) << "\n";
}

std::string metrics_to_json(const TransitionMetrics& metrics, int indent) {
    json j;
    j["final_profile_error_inf"] = metrics.final_profile_error_inf;
    j["moment_tracking_error_inf"] = metrics.moment_tracking_error_inf;
    return j.dump(indent);
}

}  // namespace beamplan
