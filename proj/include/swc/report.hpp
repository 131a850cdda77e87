#pragma once

#include <limits>
#include <string>
#include <vector>

#include "swc/io.hpp"

namespace swc {

enum class Status { pass, fail, skipped };
enum class Format { json, csv, text };

struct CheckRecord {
    std::string name;
    std::string anchor;  // the statement being checked
    Status status = Status::fail;
    double measured = std::numeric_limits<double>::quiet_NaN();
    double bound = std::numeric_limits<double>::quiet_NaN();
    double tolerance = std::numeric_limits<double>::quiet_NaN();
    std::string detail;
};

// measured <= bound + tolerance
CheckRecord check_le(std::string name, std::string anchor, double measured, double bound, double tolerance = 0);
// |measured - expected| <= tolerance
CheckRecord check_near(std::string name, std::string anchor, double measured, double expected, double tolerance);
CheckRecord check_true(std::string name, std::string anchor, bool ok, std::string detail = {});
CheckRecord skipped(std::string name, std::string anchor, std::string reason);

struct ReportBundle {
    json config = json::object();
    json result;  // command payload, omitted when null
    std::vector<CheckRecord> checks;
    double wall_seconds = -1;  // omitted from output when negative
    std::string version;

    void add(CheckRecord r) { checks.push_back(std::move(r)); }
    void add(const std::vector<CheckRecord>& rs) { checks.insert(checks.end(), rs.begin(), rs.end()); }
    long long count(Status s) const;
    bool all_passed() const { return count(Status::fail) == 0; }
    // Orders checks by name; names are unique within a profile.
    void normalize();
};

std::string status_name(Status s);
Status status_from_name(const std::string& s);
Format format_from_name(const std::string& s);

json to_json(const CheckRecord& r);
CheckRecord check_from_json(const json& j);
json to_json(const ReportBundle& b);
ReportBundle bundle_from_json(const json& j);

std::string emit(const ReportBundle& b, Format f);

std::string library_version();

}  // namespace swc
