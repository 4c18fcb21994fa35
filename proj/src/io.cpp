#include "trmod/io.hpp"

#include <charconv>
#include <fstream>

namespace trmod::io {

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("missing array '") + key + "'");
    std::vector<std::string> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_string()) throw ParseError(std::string("'") + key + "' must hold strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

json elements(const Algebra& A, const std::vector<RingElement>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(A.format(x));
    return out;
}

json matrices(const Algebra& A, const std::vector<Matrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(to_json(A, m));
    return out;
}

}  // namespace

AlgebraSpec ring_spec_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("ring file must be a JSON object");
    if (!j.contains("characteristic") || !j.at("characteristic").is_number_integer())
        throw ParseError("ring file needs an integer 'characteristic'");
    AlgebraSpec spec;
    spec.characteristic = j.at("characteristic").get<int>();
    spec.variables = string_list(j, "variables");
    spec.relations = string_list(j, "relations");
    return spec;
}

json to_json(const AlgebraSpec& spec) {
    return {{"characteristic", spec.characteristic}, {"variables", spec.variables}, {"relations", spec.relations}};
}

Algebra load_ring(const std::string& source) {
    if (source.starts_with("S:")) {
        int p = 0;
        auto tail = std::string_view(source).substr(2);
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
        if (ec != std::errc() || ptr != tail.data() + tail.size()) throw ParseError("bad ring name '" + source + "'");
        return Algebra::standard_s(p);
    }
    return Algebra::build(ring_spec_from_json(read_json_file(source)));
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Matrix matrix_from_json(const Algebra& A, const json& j) {
    if (!j.is_object() || !j.contains("entries") || !j.at("entries").is_array())
        throw ParseError("matrix file needs an 'entries' array");
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : j.at("entries")) {
        if (!r.is_array()) throw ParseError("matrix rows must be arrays");
        auto& row = rows.emplace_back();
        for (const auto& e : r) {
            if (e.is_string()) row.push_back(e.get<std::string>());
            else if (e.is_number_integer()) row.push_back(std::to_string(e.get<long long>()));
            else throw ParseError("matrix entries must be strings");
        }
    }
    Matrix M = parse_matrix(A, rows);
    if (j.contains("rows") && j.at("rows").get<int>() != M.rows)
        throw ValidationError("'rows' disagrees with the entries");
    if (j.contains("cols")) {
        const int c = j.at("cols").get<int>();
        if (M.rows == 0 && c >= 0) M.cols = c;
        else if (c != M.cols) throw ValidationError("'cols' disagrees with the entries");
    }
    return M;
}

json to_json(const Algebra& A, const Matrix& M) {
    return {{"rows", M.rows}, {"cols", M.cols}, {"entries", format_entries(A, M)}};
}

Matrix load_matrix(const Algebra& A, const std::filesystem::path& path) {
    return matrix_from_json(A, read_json_file(path));
}

json to_json(const RingReport& r) {
    return {{"hilbert_series", {r.hilbert.h0, r.hilbert.h1, r.hilbert.h2}},
            {"length", r.length},
            {"socle_dim", r.socle_dim},
            {"socle_equals_m2", r.socle_equals_m2},
            {"m2_dim_is_e_minus_1", r.m2_dim_is_e_minus_1},
            {"length_is_2e", r.length_is_2e},
            {"gorenstein", r.gorenstein},
            {"admits_nontrivial_tr", r.admits_nontrivial_tr},
            {"notes", r.notes}};
}

json to_json(const Algebra& A, const std::vector<ExactZeroDivisorPair>& pairs) {
    json out = json::array();
    for (const auto& p : pairs) out.push_back({{"a", A.format(p.a())}, {"partner", A.format(p.b())}});
    return out;
}

json to_json(const Algebra& A, const TRCertificate& c) {
    json log = json::array();
    for (const auto& s : c.log)
        log.push_back({{"spot", s.spot}, {"dual", s.dual}, {"image_dim", s.image_dim}, {"kernel_dim", s.kernel_dim},
                       {"ok", s.ok()}});
    json j = {{"verdict", to_string(c.verdict)},
              {"module", to_json(A, c.module)},
              {"free_rank", c.free_rank},
              {"gorenstein", c.gorenstein},
              {"depth", c.depth},
              {"betti", c.betti},
              {"length", c.length},
              {"log", log}};
    if (c.verdict == Verdict::Certified) {
        j["preperiod"] = c.preperiod;
        j["period"] = c.period;
        j["spliced"] = c.spliced;
        j["forward"] = matrices(A, c.forward);
        j["backward"] = matrices(A, c.backward);
        j["betti_constant"] = c.betti_constant;
        j["length_is_ne"] = c.length_is_ne;
    }
    if (c.refutation) {
        const auto& r = *c.refutation;
        json combo = json::array();
        for (Coeff q : r.combination) combo.push_back(A.field().to_signed(q));
        j["refutation"] = {{"kind", to_string(r.kind)},
                           {"step", r.step},
                           {"differential", to_json(A, r.differential)},
                           {"combination", combo},
                           {"detail", r.detail}};
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json to_json(const Algebra& A, const ExtSpace& e) {
    json basis = json::array();
    for (const auto& b : e.basis) basis.push_back(to_json(A, b.lift));
    return {{"n_presentation", to_json(A, e.n_presentation)},
            {"n_syzygy", to_json(A, e.n_syzygy)},
            {"m_presentation", to_json(A, e.m_presentation)},
            {"rank", e.rank},
            {"unit_part", e.unit_part},
            {"gamma", e.gamma()},
            {"basis", basis}};
}

json to_json(const Algebra& A, const Filtration& f) {
    return {{"chain", matrices(A, f.chain)},
            {"quotients", elements(A, f.quotients)},
            {"lengths", f.lengths},
            {"log", f.log}};
}

json to_json(const Algebra& A, const UTSearch& s) {
    json j = {{"found", s.found}, {"pairs_examined", s.pairs_examined}, {"pairs_total", s.pairs_total}};
    if (s.form) j["form"] = to_json(A, *s.form);
    if (s.witness) j["witness"] = to_json(A, *s.witness);
    return j;
}

json to_json(const Algebra& A, const ClassTable& t) {
    json classes = json::array();
    for (const auto& c : t.classes)
        classes.push_back({{"u", A.format(c.u)},
                           {"a", A.format(c.a)},
                           {"t", A.format(c.t)},
                           {"representative", to_json(A, c.representative)},
                           {"members", int(c.members.size())}});
    json cells = json::array();
    for (const auto& u : t.diagonal)
        for (const auto& v : t.diagonal)
            cells.push_back({{"u", A.format(u)}, {"t", A.format(v)}, {"a", elements(A, t.cell(u, v))}});
    return {{"characteristic", t.characteristic},
            {"diagonal", elements(A, t.diagonal)},
            {"class_count", int(t.classes.size())},
            {"enumerated", t.enumerated},
            {"indecomposable", t.indecomposable},
            {"classes", classes},
            {"cells", cells}};
}

json to_json(const Algebra& A, const SwapReport& r) {
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"u", A.format(c.u)}, {"a", A.format(c.a)}, {"t", A.format(c.t)}, {"isomorphic", c.isomorphic}});
    return {{"admissible", int(r.cases.size())},
            {"isomorphic", r.isomorphic},
            {"all_isomorphic", r.all_isomorphic()},
            {"none_isomorphic", r.none_isomorphic()},
            {"cases", cases}};
}

json to_json(const MbConditions& m) {
    return {{"exact_pair", m.exact_pair},   {"u_v_linear", m.u_v_linear},   {"uv_zero", m.uv_zero},
            {"condition_a", m.condition_a}, {"condition_b", m.condition_b}, {"satisfied", m.satisfied()},
            {"warnings", m.warnings}};
}

json to_json(const Algebra& A, const EquivalenceWitness& w) { return {{"P", to_json(A, w.P)}, {"Q", to_json(A, w.Q)}}; }

}  // namespace trmod::io
