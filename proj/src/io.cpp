#include "swc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace swc {

json to_json(const Subspace& s) {
    return json{{"d", s.d}, {"ambient", s.ambient}, {"basis", s.basis}};
}

Subspace subspace_from_json(const json& j) {
    int d = j.at("d").get<int>();
    int ambient = j.at("ambient").get<int>();
    IMat rows = j.at("basis").get<IMat>();
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != ambient) throw PreconditionError("subspace_from_json: row length mismatch");
    // Re-canonicalize so that hand-written inputs compare correctly.
    return rref(rows, d, ambient);
}

json to_json(const IMat& m) { return json(m); }
IMat imat_from_json(const json& j) { return j.get<IMat>(); }

json to_json(const CVec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
    return a;
}

CVec cvec_from_json(const json& j) {
    CVec v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        v(static_cast<Eigen::Index>(i)) = e.is_array() ? Cx(e.at(0).get<double>(), e.at(1).get<double>())
                                                       : Cx(e.get<double>(), 0.0);
    }
    return v;
}

json to_json(const CMat& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(to_json(CVec(m.row(r).transpose())));
    return rows;
}

CMat cmat_from_json(const json& j) {
    if (j.empty()) return CMat(0, 0);
    CMat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j[0].size()));
    for (size_t r = 0; r < j.size(); ++r) {
        CVec row = cvec_from_json(j[r]);
        if (row.size() != m.cols()) throw PreconditionError("cmat_from_json: ragged rows");
        m.row(static_cast<Eigen::Index>(r)) = row.transpose();
    }
    return m;
}

json to_json(const StabilizerState& s) {
    return json{{"M", to_json(s.M)}, {"z", s.z}, {"amplitudes", to_json(s.vector)}};
}

json to_json(const CliffordWord& w) {
    json letters = json::array();
    for (const auto& g : w.letters) letters.push_back({{"gate", gate_name(g.kind)}, {"args", g.args}});
    return json{{"n", w.n}, {"d", w.d}, {"letters", letters}};
}

CliffordWord word_from_json(const json& j) {
    CliffordWord w;
    w.n = j.at("n").get<int>();
    w.d = j.at("d").get<int>();
    for (const auto& l : j.at("letters"))
        w.letters.push_back(Gate{gate_from_name(l.at("gate").get<std::string>()), l.at("args").get<std::vector<int>>()});
    return w;
}

void write_jsonl(std::ostream& os, const std::vector<json>& records) {
    for (const auto& r : records) os << r.dump() << '\n';
}

std::vector<json> read_jsonl(std::istream& is) {
    std::vector<json> out;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

CVec read_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw PreconditionError("cannot open state file: " + path);
    json j = json::parse(f);
    if (j.is_object()) j = j.at("amplitudes");
    CVec v = cvec_from_json(j);
    double nrm = v.norm();
    if (nrm == 0) throw PreconditionError("state file holds the zero vector");
    return v / nrm;
}

}  // namespace swc
