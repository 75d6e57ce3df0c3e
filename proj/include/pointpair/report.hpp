#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pointpair/bounds.hpp"

namespace pointpair {

// 15 significant digits; nan/inf spelled out. All numeric output funnels
// through this so reports are byte-identical across runs and thread counts.
std::string fmt15(double v);
std::string fmt_point(const Point& p);

enum class ReportFormat { Report, Table };
ReportFormat parse_format(const std::string& s);  // throws std::invalid_argument

struct TableRow {
    std::string bound_id;
    double alpha = 0;
    double lower_const = 0, upper_const = 0;
    double worst_lower_margin = 0, worst_upper_margin = 0;
    double max_quotient = 0;
    bool pass = false;
};

TableRow row_from(const ViolationReport& r);

struct ReportEnvelope {
    std::string title;
    std::vector<std::pair<std::string, std::string>> kv;  // rendered in insertion order
    std::vector<std::string> notes;
    std::vector<TableRow> rows;
    bool pass = true;

    void add(const std::string& k, const std::string& v);
    void add(const std::string& k, double v);
    void add_count(const std::string& k, uint64_t v);
    void add_witness(const std::string& prefix, const Witness& w);
    void note(const std::string& n);
};

std::string render(const ReportEnvelope& e, ReportFormat f);

// empty path writes to stdout
void write_output(const ReportEnvelope& e, ReportFormat f, const std::string& out_path);

}  // namespace pointpair
