#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "trmod/classify.hpp"
#include "trmod/ext.hpp"
#include "trmod/filtration.hpp"
#include "trmod/totref.hpp"

namespace trmod::io {

using json = nlohmann::json;

AlgebraSpec ring_spec_from_json(const json& j);
json to_json(const AlgebraSpec& spec);

// A path to a ring file, or the built-in family "S:p".
Algebra load_ring(const std::string& source);

Matrix matrix_from_json(const Algebra& A, const json& j);
json to_json(const Algebra& A, const Matrix& M);
Matrix load_matrix(const Algebra& A, const std::filesystem::path& path);

json read_json_file(const std::filesystem::path& path);

json to_json(const RingReport& r);
json to_json(const Algebra& A, const std::vector<ExactZeroDivisorPair>& pairs);
json to_json(const Algebra& A, const TRCertificate& c);
json to_json(const Algebra& A, const ExtSpace& e);
json to_json(const Algebra& A, const Filtration& f);
json to_json(const Algebra& A, const UTSearch& s);
json to_json(const Algebra& A, const ClassTable& t);
json to_json(const Algebra& A, const SwapReport& r);
json to_json(const MbConditions& m);
json to_json(const Algebra& A, const EquivalenceWitness& w);

}  // namespace trmod::io
