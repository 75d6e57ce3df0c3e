#include "pointpair/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace pointpair {

std::string fmt15(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt_point(const Point& p) {
    std::string s = "(";
    for (int i = 0; i < p.dim(); ++i) {
        if (i) s += ", ";
        s += fmt15(p[i]);
    }
    return s + ")";
}

ReportFormat parse_format(const std::string& s) {
    if (s == "report") return ReportFormat::Report;
    if (s == "table") return ReportFormat::Table;
    throw std::invalid_argument("unknown format: " + s + " (expected report or table)");
}

TableRow row_from(const ViolationReport& r) {
    TableRow t;
    t.bound_id = r.bound_id;
    t.alpha = r.alpha;
    t.lower_const = r.lower_const;
    t.upper_const = r.upper_const;
    t.worst_lower_margin = r.worst_lower_margin;
    t.worst_upper_margin = r.worst_upper_margin;
    t.max_quotient = r.max_quotient;
    t.pass = r.pass;
    return t;
}

void ReportEnvelope::add(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }
void ReportEnvelope::add(const std::string& k, double v) { kv.emplace_back(k, fmt15(v)); }
void ReportEnvelope::add_count(const std::string& k, uint64_t v) {
    kv.emplace_back(k, std::to_string(v));
}
void ReportEnvelope::add_witness(const std::string& prefix, const Witness& w) {
    add(prefix + "_x", fmt_point(w.x));
    add(prefix + "_y", fmt_point(w.y));
    add_count(prefix + "_index", w.index);
    add(prefix + "_value", w.value);
}
void ReportEnvelope::note(const std::string& n) { notes.push_back(n); }

namespace {

const char* kSchema = "pointpair-report/1";
const char* kHeader =
    "bound_id,alpha,lower_const,upper_const,worst_lower_margin,worst_upper_margin,"
    "empirical_max_quotient,pass";

std::string row_line(const TableRow& t) {
    std::string s = t.bound_id;
    s += ',';
    s += fmt15(t.alpha);
    s += ',';
    s += fmt15(t.lower_const);
    s += ',';
    s += fmt15(t.upper_const);
    s += ',';
    s += fmt15(t.worst_lower_margin);
    s += ',';
    s += fmt15(t.worst_upper_margin);
    s += ',';
    s += fmt15(t.max_quotient);
    s += ',';
    s += t.pass ? "true" : "false";
    return s;
}

}  // namespace

std::string render(const ReportEnvelope& e, ReportFormat f) {
    std::ostringstream out;
    if (f == ReportFormat::Report) {
        out << "# " << e.title << '\n';
        out << "schema: " << kSchema << '\n';
        for (const auto& [k, v] : e.kv) out << k << ": " << v << '\n';
        for (const auto& n : e.notes) out << "note: " << n << '\n';
        if (!e.rows.empty()) {
            out << kHeader << '\n';
            for (const TableRow& t : e.rows) out << row_line(t) << '\n';
        }
        out << "pass: " << (e.pass ? "true" : "false") << '\n';
    } else if (!e.rows.empty()) {
        // flat export for plotting: header plus one row per (bound, alpha)
        out << kHeader << '\n';
        for (const TableRow& t : e.rows) out << row_line(t) << '\n';
    } else {
        for (const auto& [k, v] : e.kv) out << k << ',' << v << '\n';
        out << "pass," << (e.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

void write_output(const ReportEnvelope& e, ReportFormat f, const std::string& out_path) {
    std::string text = render(e, f);
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text;
    if (!os) throw std::runtime_error("failed writing output file: " + out_path);
}

}  // namespace pointpair
