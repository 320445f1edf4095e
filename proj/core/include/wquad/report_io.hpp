#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wquad/bounds.hpp"
#include "wquad/quadrature.hpp"
#include "wquad/verify.hpp"

namespace wquad {

enum class OutputFormat { Json, Csv };

/// "json" or "csv"; anything else throws std::invalid_argument.
OutputFormat parse_format(const std::string& name);

/// The one float format every emitter uses: printf "%.9g" (9 significant
/// digits), with negative zero normalized to "0".  Reports are rounded the
/// same way everywhere so equal inputs give byte-equal output.
std::string format_double(double v);

/// Minimal streaming JSON writer over format_double.  Compact output (no
/// whitespace), string escaping for the basic control set.  Non-finite
/// doubles are emitted as null to keep the document valid; upstream
/// contracts keep report values finite.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view k);
    JsonWriter& value(double v);
    JsonWriter& value(bool v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(std::string_view v);
    JsonWriter& null();

    const std::string& str() const { return out_; }

  private:
    void prefix();
    void escape(std::string_view v);

    std::string out_;
    std::vector<bool> first_;
    bool after_key_ = false;
};

// Every to_json returns a complete single-line document; every to_csv
// returns a header line plus data rows, all newline-terminated.

std::string to_json(const BoundReport& report);
std::string to_csv(const BoundReport& report);

/// Summary of one composite/adaptive run: estimate, bound, reference,
/// actual_error, tolerance_met and the cell count n.
std::string to_json(const QuadratureResult& result);
std::string to_csv(const QuadratureResult& result);

/// Convergence table: array of per-n rows.
std::string to_json(const std::vector<QuadratureResult>& rows);
std::string to_csv(const std::vector<QuadratureResult>& rows);

/// Proof-step audit: array of {step, exact, claimed, discrepancy}.
std::string to_json(const std::vector<ProofStepAudit>& steps);
std::string to_csv(const std::vector<ProofStepAudit>& steps);

/// Suite report: header fields, per-inequality tallies (with the worst
/// report embedded) and the full sample log.  The CSV form is one row per
/// (sample, inequality).
std::string to_json(const SuiteReport& report);
std::string to_csv(const SuiteReport& report);

/// The registry listing behind the CLI `list` command: functions, weights,
/// inequalities (with descriptions), suites and closed-form cases.
std::string registry_json();
std::string registry_csv();

}  // namespace wquad
