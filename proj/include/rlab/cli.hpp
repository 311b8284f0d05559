#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rlab/cartwright_steger.hpp"
#include "rlab/io.hpp"

namespace rlab {

/// Exit codes of the command line.
enum ExitCode : int { kExitOk = 0, kExitChecksFailed = 1, kExitUsage = 2, kExitCap = 3 };

ReportDoc lps_report(std::uint32_t p, std::uint32_t q, GraphDoc* doc = nullptr);
ReportDoc spectrum_report(const GraphDoc& g, bool ramanujan);
ReportDoc ball_report(int d, std::uint64_t q, int r, ComplexDoc* doc = nullptr);
ReportDoc cs_report(int d, std::uint64_t q, const std::string& ideal, int max_dim, std::uint64_t seed,
                    ComplexDoc* doc = nullptr);
ReportDoc hecke_report(const ComplexDoc& doc, VerdictMode mode, double tol, std::uint64_t seed);
/// metric: cheeger | coboundary | filling | gap | mixing.
ReportDoc expand_report(const ComplexDoc& doc, const std::string& metric, int dim, std::uint64_t seed, int trials);
ReportDoc overlap_report(const ComplexDoc& doc, int trials, std::uint64_t seed);

/// Document for a CS complex: clique faces, vertex colors mod t, edge colors
/// from the Hecke operators, and the Hecke triplets.
ComplexDoc cs_complex_doc(const CsComplex& cx, std::uint64_t seed);
/// The fields of a CsComplex that the Hecke verdict needs, read back from a document.
CsComplex cs_from_doc(const ComplexDoc& doc);

/// Full command line (args exclude the program name). The report goes to
/// `out` as JSON, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlab
