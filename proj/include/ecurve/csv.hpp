#pragma once

#include <iosfwd>
#include <string>

#include "ecurve/curves.hpp"

namespace ecurve {

/// Parse a waveform CSV with header `t,v1,v2,...,vn` (n >= 2): time in
/// seconds, phase values in volts, one sample per row. Returns the samples
/// plus a nominal rate derived from the median time step.
///
/// Throws FormatError for a missing/unopenable file, a malformed header, or
/// an unparsable field (messages carry the 1-based line number), and
/// DataError for ragged rows, non-monotone times, non-finite values, or an
/// empty body.
SampledSignal parse_waveform_csv(const std::string& path);

/// Stream variant; `name` labels error messages.
SampledSignal parse_waveform_csv(std::istream& in, const std::string& name);

/// Write the matching CSV: `t,v1,...,vn` header, one row per sample, 17
/// significant digits (so a read-back reproduces the doubles exactly), '.'
/// decimal separator, LF line endings.
void write_waveform_csv(std::ostream& out, const SampledSignal& signal);
void write_waveform_csv(const std::string& path, const SampledSignal& signal);

/// Shortest-exact formatting used across all CSV output: %.17g.
std::string format_double(double x);

} // namespace ecurve
