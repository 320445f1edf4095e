#include "wquad/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "wquad/means.hpp"

namespace wquad {

namespace {

std::string bool_field(bool b) { return b ? "true" : "false"; }

std::string opt_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

// Quotes a CSV field only when it needs it (commas, quotes, newlines).
std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string domain_string(const Domain& d) {
    const auto endpoint = [](double v) {
        if (std::isinf(v)) return std::string(v < 0 ? "-inf" : "inf");
        return format_double(v);
    };
    return "(" + endpoint(d.lo) + ", " + endpoint(d.hi) + ")";
}

void write_bound(JsonWriter& w, const BoundReport& r) {
    w.begin_object();
    w.key("inequality").value(inequality_name(r.inequality));
    w.key("lhs").value(r.lhs);
    w.key("rhs").value(r.rhs);
    w.key("margin").value(r.margin);
    w.key("holds").value(r.holds);
    w.key("ratio");
    if (r.ratio) {
        w.value(*r.ratio);
    } else {
        w.null();
    }
    w.key("function").value(r.function);
    w.key("weight").value(r.weight);
    w.key("a").value(r.a);
    w.key("b").value(r.b);
    w.key("x");
    if (r.x) {
        w.value(*r.x);
    } else {
        w.null();
    }
    w.key("mode").value(mode_name(r.mode));
    w.end_object();
}

constexpr const char* kBoundCsvHeader =
    "inequality,lhs,rhs,margin,holds,ratio,function,weight,a,b,x,mode";

std::string bound_csv_row(const BoundReport& r) {
    std::string row;
    row += inequality_name(r.inequality);
    row += ',' + format_double(r.lhs);
    row += ',' + format_double(r.rhs);
    row += ',' + format_double(r.margin);
    row += ',' + bool_field(r.holds);
    row += ',' + opt_field(r.ratio);
    row += ',' + r.function;
    row += ',' + r.weight;
    row += ',' + format_double(r.a);
    row += ',' + format_double(r.b);
    row += ',' + opt_field(r.x);
    row += ',' + mode_name(r.mode);
    return row;
}

void write_quadrature(JsonWriter& w, const QuadratureResult& r) {
    w.begin_object();
    w.key("n").value(static_cast<std::int64_t>(r.cells.size()));
    w.key("estimate").value(r.estimate);
    w.key("reference");
    if (r.reference) {
        w.value(*r.reference);
    } else {
        w.null();
    }
    w.key("actual_error");
    if (r.actual_error) {
        w.value(*r.actual_error);
    } else {
        w.null();
    }
    w.key("bound").value(r.bound);
    w.key("tolerance_met").value(r.tolerance_met);
    w.end_object();
}

constexpr const char* kQuadCsvHeader =
    "n,estimate,reference,actual_error,bound,tolerance_met";

std::string quadrature_csv_row(const QuadratureResult& r) {
    std::string row = std::to_string(r.cells.size());
    row += ',' + format_double(r.estimate);
    row += ',' + opt_field(r.reference);
    row += ',' + opt_field(r.actual_error);
    row += ',' + format_double(r.bound);
    row += ',' + bool_field(r.tolerance_met);
    return row;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("report_io: unknown output format '" + name +
                                "' (expected 'json' or 'csv')");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    std::string s = buf;
    if (s == "-0") s = "0";
    return s;
}

JsonWriter& JsonWriter::begin_object() {
    prefix();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    first_.pop_back();
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    prefix();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    first_.pop_back();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
    prefix();
    out_ += '"';
    escape(k);
    out_ += "\":";
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    prefix();
    if (!std::isfinite(v)) {
        out_ += "null";
    } else {
        out_ += format_double(v);
    }
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    prefix();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    prefix();
    out_ += '"';
    escape(v);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::null() {
    prefix();
    out_ += "null";
    return *this;
}

void JsonWriter::prefix() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (first_.empty()) return;
    if (first_.back()) {
        first_.back() = false;
    } else {
        out_ += ',';
    }
}

void JsonWriter::escape(std::string_view v) {
    for (char c : v) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\b': out_ += "\\b"; break;
            case '\f': out_ += "\\f"; break;
            case '\n': out_ += "\\n"; break;
            case '\r': out_ += "\\r"; break;
            case '\t': out_ += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out_ += buf;
                } else {
                    out_ += c;
                }
        }
    }
}

std::string to_json(const BoundReport& report) {
    JsonWriter w;
    write_bound(w, report);
    return w.str() + "\n";
}

std::string to_csv(const BoundReport& report) {
    return std::string(kBoundCsvHeader) + "\n" + bound_csv_row(report) + "\n";
}

std::string to_json(const QuadratureResult& result) {
    JsonWriter w;
    write_quadrature(w, result);
    return w.str() + "\n";
}

std::string to_csv(const QuadratureResult& result) {
    return std::string(kQuadCsvHeader) + "\n" + quadrature_csv_row(result) + "\n";
}

std::string to_json(const std::vector<QuadratureResult>& rows) {
    JsonWriter w;
    w.begin_array();
    for (const QuadratureResult& r : rows) write_quadrature(w, r);
    w.end_array();
    return w.str() + "\n";
}

std::string to_csv(const std::vector<QuadratureResult>& rows) {
    std::string out = std::string(kQuadCsvHeader) + "\n";
    for (const QuadratureResult& r : rows) out += quadrature_csv_row(r) + "\n";
    return out;
}

std::string to_json(const std::vector<ProofStepAudit>& steps) {
    JsonWriter w;
    w.begin_array();
    for (const ProofStepAudit& s : steps) {
        w.begin_object();
        w.key("step").value(step_name(s.step));
        w.key("exact").value(s.exact);
        w.key("claimed").value(s.claimed);
        w.key("discrepancy").value(s.discrepancy);
        w.end_object();
    }
    w.end_array();
    return w.str() + "\n";
}

std::string to_csv(const std::vector<ProofStepAudit>& steps) {
    std::string out = "step,exact,claimed,discrepancy\n";
    for (const ProofStepAudit& s : steps) {
        out += step_name(s.step);
        out += ',' + format_double(s.exact);
        out += ',' + format_double(s.claimed);
        out += ',' + format_double(s.discrepancy);
        out += '\n';
    }
    return out;
}

std::string to_json(const SuiteReport& report) {
    JsonWriter w;
    w.begin_object();
    w.key("suite").value(suite_name(report.suite));
    w.key("seed").value(static_cast<std::uint64_t>(report.seed));
    w.key("samples").value(static_cast<std::int64_t>(report.samples));
    w.key("violations").value(static_cast<std::int64_t>(report.violations()));
    w.key("inequalities");
    w.begin_object();
    for (const InequalityTally& t : report.tallies) {
        w.key(inequality_name(t.inequality));
        w.begin_object();
        w.key("checked").value(static_cast<std::int64_t>(t.checked));
        w.key("held").value(static_cast<std::int64_t>(t.held));
        w.key("violated").value(static_cast<std::int64_t>(t.violated));
        w.key("worst");
        if (t.worst) {
            write_bound(w, *t.worst);
        } else {
            w.null();
        }
        w.end_object();
    }
    w.end_object();
    w.key("log");
    w.begin_array();
    for (const SampleRecord& rec : report.log) {
        w.begin_object();
        w.key("index").value(static_cast<std::int64_t>(rec.index));
        w.key("function").value(rec.function);
        w.key("a").value(rec.a);
        w.key("b").value(rec.b);
        w.key("x").value(rec.x);
        w.key("reports");
        w.begin_array();
        for (const BoundReport& r : rec.reports) write_bound(w, r);
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str() + "\n";
}

std::string to_csv(const SuiteReport& report) {
    std::string out = "index,";
    out += kBoundCsvHeader;
    out += '\n';
    for (const SampleRecord& rec : report.log) {
        for (const BoundReport& r : rec.reports) {
            out += std::to_string(rec.index) + ',' + bound_csv_row(r) + '\n';
        }
    }
    return out;
}

std::string registry_json() {
    JsonWriter w;
    w.begin_object();
    w.key("functions");
    w.begin_array();
    for (const std::string& id : function_ids()) {
        const bool parameterized = id == "pow_p_half";
        // The parameterized family needs some admissible p just to report
        // its domain.
        const TestFunction fn =
            parameterized ? function(id, 2.0) : function(id);
        w.begin_object();
        w.key("id").value(id);
        w.key("domain").value(domain_string(fn.domain));
        w.key("parameterized").value(parameterized);
        w.end_object();
    }
    w.end_array();
    w.key("weights");
    w.begin_array();
    for (const std::string& id : weight_ids()) {
        const Weight& wt = weight(id);
        w.begin_object();
        w.key("id").value(id);
        w.key("domain").value(domain_string(wt.domain));
        w.end_object();
    }
    w.end_array();
    w.key("inequalities");
    w.begin_array();
    for (InequalityId id : all_inequalities()) {
        w.begin_object();
        w.key("id").value(inequality_name(id));
        w.key("requires_x").value(requires_x(id));
        w.key("unit_weight_only").value(requires_unit_weight(id));
        w.key("description").value(describe(id));
        w.end_object();
    }
    w.end_array();
    w.key("suites");
    w.begin_array();
    w.value(suite_name(SuiteKind::UnweightedDefault));
    w.value(suite_name(SuiteKind::WeightedInvsqrt));
    w.end_array();
    w.key("cases");
    w.begin_array();
    for (MeansCaseId id : all_cases()) w.value(case_name(id));
    w.end_array();
    w.end_object();
    return w.str() + "\n";
}

std::string registry_csv() {
    std::string out = "kind,id,detail\n";
    for (const std::string& id : function_ids()) {
        const TestFunction fn = id == "pow_p_half" ? function(id, 2.0) : function(id);
        out += "function," + id + ',' + csv_quote(domain_string(fn.domain)) + '\n';
    }
    for (const std::string& id : weight_ids()) {
        out += "weight," + id + ',' + csv_quote(domain_string(weight(id).domain)) + '\n';
    }
    for (InequalityId id : all_inequalities()) {
        out += "inequality," + inequality_name(id) + ',' + csv_quote(describe(id)) + '\n';
    }
    out += "suite," + suite_name(SuiteKind::UnweightedDefault) + ",\n";
    out += "suite," + suite_name(SuiteKind::WeightedInvsqrt) + ",\n";
    for (MeansCaseId id : all_cases()) {
        out += "case," + case_name(id) + ",\n";
    }
    return out;
}

}  // namespace wquad
