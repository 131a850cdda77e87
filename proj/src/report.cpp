#include "swc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace swc {

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

std::string fmt_num(double v) {
    if (!std::isfinite(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

CheckRecord check_le(std::string name, std::string anchor, double measured, double bound, double tolerance) {
    CheckRecord r{std::move(name), std::move(anchor), Status::fail, measured, bound, tolerance, {}};
    r.status = std::isfinite(measured) && measured <= bound + tolerance ? Status::pass : Status::fail;
    return r;
}

CheckRecord check_near(std::string name, std::string anchor, double measured, double expected, double tolerance) {
    CheckRecord r{std::move(name), std::move(anchor), Status::fail, measured, expected, tolerance, {}};
    r.status = std::isfinite(measured) && std::abs(measured - expected) <= tolerance ? Status::pass : Status::fail;
    return r;
}

CheckRecord check_true(std::string name, std::string anchor, bool ok, std::string detail) {
    CheckRecord r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.status = ok ? Status::pass : Status::fail;
    r.measured = ok ? 1 : 0;
    r.bound = 1;
    r.detail = std::move(detail);
    return r;
}

CheckRecord skipped(std::string name, std::string anchor, std::string reason) {
    CheckRecord r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.status = Status::skipped;
    r.detail = std::move(reason);
    return r;
}

long long ReportBundle::count(Status s) const {
    return std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& r) { return r.status == s; });
}

void ReportBundle::normalize() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

Status status_from_name(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skipped") return Status::skipped;
    throw PreconditionError("unknown status: " + s);
}

Format format_from_name(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text" || s == "text-table") return Format::text;
    throw PreconditionError("unknown format: " + s);
}

json to_json(const CheckRecord& r) {
    return json{{"name", r.name},
                {"anchor", r.anchor},
                {"status", status_name(r.status)},
                {"measured", number_or_null(r.measured)},
                {"bound", number_or_null(r.bound)},
                {"tolerance", number_or_null(r.tolerance)},
                {"detail", r.detail}};
}

CheckRecord check_from_json(const json& j) {
    CheckRecord r;
    r.name = j.at("name").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    r.status = status_from_name(j.at("status").get<std::string>());
    r.measured = number_from(j.at("measured"));
    r.bound = number_from(j.at("bound"));
    r.tolerance = number_from(j.at("tolerance"));
    r.detail = j.value("detail", "");
    return r;
}

json to_json(const ReportBundle& b) {
    json checks = json::array();
    for (const auto& r : b.checks) checks.push_back(to_json(r));
    json out{{"config", b.config},
             {"version", b.version},
             {"summary",
              {{"total", b.checks.size()},
               {"passed", b.count(Status::pass)},
               {"failed", b.count(Status::fail)},
               {"skipped", b.count(Status::skipped)}}},
             {"checks", checks}};
    if (!b.result.is_null()) out["result"] = b.result;
    if (b.wall_seconds >= 0) out["wall_seconds"] = b.wall_seconds;
    return out;
}

ReportBundle bundle_from_json(const json& j) {
    ReportBundle b;
    b.config = j.value("config", json::object());
    b.version = j.value("version", "");
    if (j.contains("result")) b.result = j.at("result");
    for (const auto& c : j.at("checks")) b.checks.push_back(check_from_json(c));
    b.wall_seconds = j.value("wall_seconds", -1.0);
    return b;
}

std::string emit(const ReportBundle& b, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::json:
            os << to_json(b).dump(2) << '\n';
            break;
        case Format::csv:
            os << "name,anchor,status,measured,bound,tolerance,detail\n";
            for (const auto& r : b.checks)
                os << csv_field(r.name) << ',' << csv_field(r.anchor) << ',' << status_name(r.status) << ','
                   << fmt_num(r.measured) << ',' << fmt_num(r.bound) << ',' << fmt_num(r.tolerance) << ','
                   << csv_field(r.detail) << '\n';
            break;
        case Format::text: {
            size_t w = 4;
            for (const auto& r : b.checks) w = std::max(w, r.name.size());
            char buf[512];
            std::snprintf(buf, sizeof buf, "%-*s  %-7s  %-14s  %-14s  %s\n", static_cast<int>(w), "name", "status",
                          "measured", "bound", "detail");
            os << buf;
            for (const auto& r : b.checks) {
                std::snprintf(buf, sizeof buf, "%-*s  %-7s  %-14s  %-14s  %s\n", static_cast<int>(w), r.name.c_str(),
                              status_name(r.status).c_str(), fmt_num(r.measured).c_str(), fmt_num(r.bound).c_str(),
                              r.detail.c_str());
                os << buf;
            }
            os << b.count(Status::pass) << " passed, " << b.count(Status::fail) << " failed, "
               << b.count(Status::skipped) << " skipped\n";
            break;
        }
    }
    return os.str();
}

std::string library_version() { return "0.1.0"; }

}  // namespace swc
