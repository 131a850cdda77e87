#include <doctest.h>

#include <cmath>
#include <sstream>

#include "swc/clifford.hpp"
#include "swc/io.hpp"
#include "swc/report.hpp"
#include "swc/stabilizer.hpp"
#include "swc/verify.hpp"

using namespace swc;

TEST_CASE("subspace round trip") {
    Subspace s = span_of({{1, 2, 0, 1}, {0, 1, 1, 1}}, 3, 4);
    CHECK(subspace_from_json(to_json(s)) == s);
    // non-canonical input is brought to RREF
    json j = {{"d", 3}, {"ambient", 2}, {"basis", {{2, 2}}}};
    CHECK(subspace_from_json(j).basis == IMat{{1, 1}});
}

TEST_CASE("vector, matrix and word round trips") {
    Rng rng(1);
    CVec v = haar_state(5, rng);
    CHECK((cvec_from_json(to_json(v)) - v).norm() == 0.0);
    CMat m = CMat::Random(3, 4);
    CHECK((cmat_from_json(to_json(m)) - m).norm() == 0.0);
    IMat im = {{1, 2}, {3, 4}};
    CHECK(imat_from_json(to_json(im)) == im);

    auto rc = random_clifford(2, 3, 12, rng);
    auto w = word_from_json(to_json(rc.word));
    CHECK((word_matrix(w) - rc.unitary).norm() < 1e-12);

    json st = to_json(enumerate_stabilizer_states(1, 2).states[2]);
    CHECK(st.contains("M"));
    CHECK(st.contains("z"));
    CHECK(st["amplitudes"].size() == 2);
}

TEST_CASE("jsonl") {
    std::vector<json> recs = {{{"a", 1}}, {{"b", {1, 2}}}};
    std::stringstream ss;
    write_jsonl(ss, recs);
    std::string text = ss.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(read_jsonl(ss) == recs);
}

TEST_CASE("check builders") {
    auto a = check_le("x", "s", 1.0, 1.0);
    CHECK(a.status == Status::pass);
    CHECK(check_le("x", "s", 1.1, 1.0, 0.05).status == Status::fail);
    CHECK(check_near("x", "s", 1.04, 1.0, 0.05).status == Status::pass);
    CHECK(check_le("x", "s", std::nan(""), 1.0).status == Status::fail);
    CHECK(check_true("x", "s", false).status == Status::fail);
    CHECK(skipped("x", "s", "cap").status == Status::skipped);
    for (auto s : {Status::pass, Status::fail, Status::skipped}) CHECK(status_from_name(status_name(s)) == s);
}

TEST_CASE("report serialization") {
    ReportBundle b;
    b.version = library_version();
    b.config = {{"seed", 1}};
    b.add(check_le("b.second", "s", 0.5, 1.0));
    b.add(skipped("a.first", "s", "too large"));
    b.normalize();
    CHECK(b.checks[0].name == "a.first");
    CHECK(b.count(Status::skipped) == 1);
    CHECK(b.all_passed());

    json j = to_json(b);
    CHECK_FALSE(j.contains("wall_seconds"));
    CHECK_FALSE(j.contains("result"));
    CHECK(j["checks"][0]["measured"].is_null());
    auto back = bundle_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(emit(b, Format::json) == emit(back, Format::json));

    std::string csv = emit(b, Format::csv);
    CHECK(csv.rfind("name,anchor,status,measured,bound,tolerance,detail\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    ReportBundle empty;
    json e = to_json(empty);
    CHECK(e["checks"].is_array());
    CHECK(e["checks"].empty());
    CHECK_FALSE(emit(empty, Format::text).empty());
}

TEST_CASE("verify-all quick profile") {
    CHECK(acceptance_criteria().size() == 13);
    CHECK(profile_criteria(Profile::quick) == std::vector<int>{1, 2, 3, 4, 5});
    auto b = verify_all(Profile::quick, 20170518);
    CHECK(b.all_passed());
    CHECK(b.count(Status::pass) > 0);
    auto again = verify_all(Profile::quick, 20170518);
    b.wall_seconds = again.wall_seconds = -1;
    CHECK(emit(b, Format::json) == emit(again, Format::json));
    for (const auto& c : b.checks) CHECK(c.name.rfind("c0", 0) == 0);
}
