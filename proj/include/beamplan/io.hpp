#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "beamplan/beamsim.hpp"
#include "beamplan/bigfloat.hpp"
#include "beamplan/feedforward.hpp"
#include "beamplan/paramgen.hpp"
#include "beamplan/sequences.hpp"

namespace beamplan {

// Fixed-notation %g with an explicit digit count; all data files use this
// so identical configs produce byte-identical output.
std::string format_double(double v, int significant_digits = 17);

enum class SeqFormat { exact, ratio, decimal };

// exact:   k,numerator,denominator
// ratio:   k,value        (value as "p/q")
// decimal: k,value        (value at the requested digit count)
// When a closed-form companion is given, a closed_minus_recursive column
// is appended (exact rational difference).
void write_sequence_csv(std::ostream& os, const RationalSeq& seq, SeqFormat format,
                        int digits = 17, const RationalSeq* closed_form = nullptr);

// {"K": .., "c": [["p/q",..],..], "d": [..], "beta2": [..]}
std::string table_to_json(const CoefficientTable& table, int indent = 2);
CoefficientTable table_from_json(const std::string& text);

// {"ck0": ["p/q", ...]}
std::string ck0_to_json(const Ck0Sequence& seq, int indent = 2);
Ck0Sequence ck0_from_json(const std::string& text);

// t, u, n_t  (plus a scan_exhausted flag column for least-term runs)
void write_feedforward_csv(std::ostream& os, const FeedforwardResult& result, int digits = 17);
std::vector<std::pair<double, double>> read_plan_csv(std::istream& is);

// t, k, magnitude
void write_term_log_csv(std::ostream& os, const FeedforwardResult& result, int digits = 17);

// First row: t, then the z nodes; each following row: t, w values.
void write_snapshot_csv(std::ostream& os, const SimOutput& output, int digits = 17);

// t, y_sim, y_ref
void write_moment_csv(std::ostream& os, const SimOutput& output,
                      const std::vector<std::pair<double, double>>& y_ref, int digits = 17);

// t, m, value
void write_derivative_csv(std::ostream& os, const std::vector<double>& times,
                          const std::vector<std::vector<BigFloat>>& derivative_rows,
                          int digits = 30);

std::string metrics_to_json(const TransitionMetrics& metrics, int indent = 2);

}  // namespace beamplan
