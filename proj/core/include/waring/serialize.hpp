#pragma once

#include <string>

#include "waring/arcs.hpp"
#include "waring/asymptotic.hpp"
#include "waring/ball.hpp"
#include "waring/counting.hpp"
#include "waring/expsums.hpp"
#include "waring/singular.hpp"

namespace waring {

// %.17g: round-trips any double exactly
std::string format_float(double v);

// JSON emitters. Big integers appear as decimal strings; floats carry 17
// significant digits. indent < 0 gives compact one-line output.
std::string to_json(const RepCountTable& table, bool all_rows = false, int indent = 2);
std::string to_json(const BallCount& ball, int indent = 2);
std::string to_json(const BoundCheckReport& report, int indent = 2);
std::string to_json(const ArcDecomposition& decomposition, int indent = 2);
std::string to_json(const SingularSeriesResult& series, int indent = 2);
std::string to_json(const VerificationRecord& record, int indent = 2);
std::string to_json(const std::vector<VerificationRecord>& records, int indent = 2);
std::string to_json(const HuaMoment& moment, int indent = 2);
std::string to_json(const MainTerm& term, int indent = 2);
std::string to_json(const Complex& value, int indent = 2);

// CSV row schemas (header + row emitters)
std::string bound_report_csv_header();
std::string bound_report_csv_row(const BoundCheckReport& report);

std::string singular_csv_header();
std::string singular_csv_row(const SingularSeriesResult& series);

std::string verification_csv_header();
std::string verification_csv_row(const VerificationRecord& record);

}  // namespace waring
