#pragma once

#include <string>
#include <vector>

#include "swc/report.hpp"

namespace swc {

enum class Profile { quick, full };
Profile profile_from_name(const std::string& s);
std::string profile_name(Profile p);

struct Criterion {
    int id = 0;
    std::string key;
    std::string title;
};
const std::vector<Criterion>& acceptance_criteria();
std::vector<int> profile_criteria(Profile p);

// Check names are "cNN.<key>.<detail>". Resource and precondition failures
// inside a check become skipped records.
std::vector<CheckRecord> run_criterion(int id, Profile p, unsigned long long seed);
ReportBundle verify_all(Profile p, unsigned long long seed, const std::vector<int>& only = {});

// Max |V - R(anti-identity)| entrywise at six copies, V = 2^{-n} sum_x W_x^{(x)6}.
double anti_identity_weyl_gap(int n);

}  // namespace swc
