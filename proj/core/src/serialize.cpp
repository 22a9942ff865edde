#include "waring/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace waring {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// nlohmann emits shortest-round-trip doubles (non-finite becomes null, with
// the explicit overflow flags alongside); CSV uses format_float directly
ordered num(double v) { return ordered(v); }

std::string dump(const ordered& j, int indent) { return j.dump(indent); }

ordered coeffs_json(const CoeffVector& coeffs) {
  ordered arr = ordered::array();
  if (coeffs)
    for (const auto c : *coeffs) arr.push_back(c);
  return arr;
}

}  // namespace

std::string to_json(const RepCountTable& table, bool all_rows, int indent) {
  ordered j;
  j["k"] = table.k();
  j["d"] = table.d();
  j["N"] = table.N();
  if (table.instance().coeffs()) j["coeffs"] = coeffs_json(table.instance().coeffs());
  ordered rows = ordered::array();
  const int j_lo = all_rows ? 1 : table.d();
  for (int r = j_lo; r <= table.d(); ++r) {
    ordered row = ordered::array();
    for (const auto& v : table.row(r)) row.push_back(v.get_str());
    rows.push_back(std::move(row));
  }
  j["counts"] = std::move(rows);
  return dump(j, indent);
}

std::string to_json(const BallCount& ball, int indent) {
  ordered j;
  j["k"] = ball.k;
  j["d"] = ball.d;
  j["N"] = ball.N;
  j["latticeCount"] = ball.latticeCount.get_str();
  j["volume"] = num(ball.volume);
  j["ratio"] = num(ball.ratio);
  return dump(j, indent);
}

std::string to_json(const BoundCheckReport& report, int indent) {
  ordered j;
  j["boundName"] = bound_name_string(report.bound);
  j["gridSize"] = report.gridSize;
  j["worstRatio"] = num(report.worstRatio);
  ordered witness;
  for (const auto& [key, value] : report.worstWitness) witness[key] = num(value);
  j["worstWitness"] = std::move(witness);
  if (report.fittedExponent) j["fittedExponent"] = num(*report.fittedExponent);
  return dump(j, indent);
}

std::string to_json(const ArcDecomposition& dec, int indent) {
  ordered j;
  j["k"] = dec.k;
  j["X"] = dec.X;
  j["alpha"] = num(dec.alpha);
  j["halfWidth"] = num(dec.halfWidth);
  j["qMax"] = dec.qMax;
  j["totalMajorMeasure"] = num(dec.totalMajorMeasure);
  ordered arcs = ordered::array();
  for (const auto& arc : dec.arcs) {
    ordered a;
    a["center"] = std::to_string(arc.center.a) + "/" + std::to_string(arc.center.q);
    ordered pieces = ordered::array();
    for (const auto& p : arc.pieces) pieces.push_back({num(p.lo), num(p.hi)});
    a["intervals"] = std::move(pieces);
    arcs.push_back(std::move(a));
  }
  j["arcs"] = std::move(arcs);
  return dump(j, indent);
}

std::string to_json(const SingularSeriesResult& s, int indent) {
  ordered j;
  j["k"] = s.k;
  j["d"] = s.d;
  j["N"] = s.N;
  if (s.coeffs) j["coeffs"] = coeffs_json(s.coeffs);
  j["Q"] = s.Q;
  j["P"] = s.P;
  j["truncatedSum"] = num(s.truncatedSum);
  j["eulerProduct"] = num(s.eulerProduct);
  j["tailEstimate"] = num(s.tailEstimate);
  if (s.smallDimensionWarning) j["smallDimensionWarning"] = true;
  ordered factors = ordered::array();
  for (const auto& f : s.factors) {
    ordered fj;
    fj["p"] = f.p;
    fj["h"] = f.hUsed;
    fj["chi"] = num(f.value);
    fj["stabilized"] = f.stabilized;
    factors.push_back(std::move(fj));
  }
  j["localDensities"] = std::move(factors);
  return dump(j, indent);
}

namespace {

ordered record_json(const VerificationRecord& r) {
  ordered j;
  j["k"] = r.k;
  j["d"] = r.d;
  j["N"] = r.N;
  if (r.coeffs) j["coeffs"] = coeffs_json(r.coeffs);
  j["alpha"] = num(r.alpha);
  j["exactCount"] = r.exactCount.get_str();
  j["mainTerm"] = num(r.mainTerm.value);
  j["singularSeries"] = num(r.singularSeries);
  j["truncatedSeries"] = num(r.truncatedSeries);
  j["Mk"] = num(r.Mk);
  j["mk"] = num(r.mk);
  j["mkDirect"] = num(r.mkDirect);
  j["A1"] = num(r.A1);
  j["A2"] = num(r.A2);
  j["A3"] = num(r.A3);
  j["ratio"] = num(r.ratio);
  j["delta1"] = num(r.delta1);
  j["delta2"] = num(r.delta2);
  j["delta3"] = num(r.delta3);
  j["splitResidual"] = num(r.splitResidual);
  j["arcImagResidual"] = num(r.arcImagResidual);
  ordered flags = ordered::array();
  for (const auto& f : r.flags) flags.push_back(f);
  j["flags"] = std::move(flags);
  return j;
}

}  // namespace

std::string to_json(const VerificationRecord& record, int indent) {
  return dump(record_json(record), indent);
}

std::string to_json(const std::vector<VerificationRecord>& records, int indent) {
  ordered arr = ordered::array();
  for (const auto& r : records) arr.push_back(record_json(r));
  return dump(arr, indent);
}

std::string to_json(const HuaMoment& moment, int indent) {
  ordered j;
  j["value"] = num(moment.value);
  j["samples"] = moment.samples;
  j["threshold"] = moment.threshold;
  return dump(j, indent);
}

std::string to_json(const MainTerm& term, int indent) {
  ordered j;
  j["k"] = term.k;
  j["d"] = term.d;
  j["N"] = term.N;
  if (term.coeffs) j["coeffs"] = coeffs_json(term.coeffs);
  j["logValue"] = num(term.logValue);
  j["value"] = num(term.value);
  if (term.overflow) j["overflow"] = true;
  return dump(j, indent);
}

std::string to_json(const Complex& value, int indent) {
  ordered j;
  j["re"] = num(value.real());
  j["im"] = num(value.imag());
  j["abs"] = num(std::abs(value));
  return dump(j, indent);
}

std::string bound_report_csv_header() {
  return "boundName,gridSize,worstRatio,witness,fittedExponent";
}

std::string bound_report_csv_row(const BoundCheckReport& report) {
  std::ostringstream out;
  out << bound_name_string(report.bound) << ',' << report.gridSize << ','
      << format_float(report.worstRatio) << ',';
  out << '"';
  bool first = true;
  for (const auto& [key, value] : report.worstWitness) {
    if (!first) out << ';';
    out << key << '=' << format_float(value);
    first = false;
  }
  out << '"' << ',';
  if (report.fittedExponent) out << format_float(*report.fittedExponent);
  return out.str();
}

std::string singular_csv_header() {
  return "k,d,N,Q,P,truncatedSum,eulerProduct,tailEstimate";
}

std::string singular_csv_row(const SingularSeriesResult& s) {
  std::ostringstream out;
  out << s.k << ',' << s.d << ',' << s.N << ',' << s.Q << ',' << s.P << ','
      << format_float(s.truncatedSum) << ',' << format_float(s.eulerProduct) << ','
      << format_float(s.tailEstimate);
  return out.str();
}

std::string verification_csv_header() {
  return "k,d,N,alpha,exactCount,mainTerm,singularSeries,Mk,mk,A1,A2,A3,ratio,"
         "delta1,delta2,delta3,flags";
}

std::string verification_csv_row(const VerificationRecord& r) {
  std::ostringstream out;
  out << r.k << ',' << r.d << ',' << r.N << ',' << format_float(r.alpha) << ','
      << r.exactCount.get_str() << ',' << format_float(r.mainTerm.value) << ','
      << format_float(r.singularSeries) << ',' << format_float(r.Mk) << ','
      << format_float(r.mk) << ',' << format_float(r.A1) << ','
      << format_float(r.A2) << ',' << format_float(r.A3) << ','
      << format_float(r.ratio) << ',' << format_float(r.delta1) << ','
      << format_float(r.delta2) << ',' << format_float(r.delta3) << ',';
  out << '"';
  for (std::size_t i = 0; i < r.flags.size(); ++i) {
    if (i) out << ';';
    out << r.flags[i];
  }
  out << '"';
  return out.str();
}

}  // namespace waring
