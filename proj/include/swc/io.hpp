#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "swc/clifford.hpp"
#include "swc/common.hpp"
#include "swc/gf_linalg.hpp"
#include "swc/stabilizer.hpp"

namespace swc {

using json = nlohmann::ordered_json;

// {"d", "ambient", "basis"} with the basis in canonical RREF.
json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j);

json to_json(const IMat& m);
IMat imat_from_json(const json& j);

// [[re, im], ...] and row-major nested arrays for matrices.
json to_json(const CVec& v);
CVec cvec_from_json(const json& j);
json to_json(const CMat& m);
CMat cmat_from_json(const json& j);

// {"M", "z", "amplitudes"}
json to_json(const StabilizerState& s);

// {"n", "d", "letters": [{"gate", "args"}]}
json to_json(const CliffordWord& w);
CliffordWord word_from_json(const json& j);

void write_jsonl(std::ostream& os, const std::vector<json>& records);
std::vector<json> read_jsonl(std::istream& is);

// Reads a state vector from a JSON file holding [[re, im], ...].
CVec read_state_file(const std::string& path);

}  // namespace swc
