#include "agcodes/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace agcodes {

Json curve_spec_to_json(const CurveSpec& spec) {
    Json j;
    j["p"] = spec.field->p();
    j["s"] = spec.field->s();
    j["q"] = spec.q;
    j["mu"] = spec.mu.enc();
    Json alphas = Json::array();
    for (const auto& a : spec.alphas) alphas.push_back(a.enc());
    j["alphas"] = std::move(alphas);
    return j;
}

CurveSpec curve_spec_from_json(const Json& j) {
    if (!j.contains("p") || !j.contains("s") || !j.contains("q") || !j.contains("mu") || !j.contains("alphas"))
        throw std::invalid_argument("curve file needs p, s, q, mu, alphas");
    auto field = Field::make(j.at("p").get<long>(), j.at("s").get<int>());
    CurveSpec spec;
    spec.q = j.at("q").get<long>();
    spec.mu = field->element(j.at("mu").get<Field::Enc>());
    for (const auto& a : j.at("alphas")) spec.alphas.push_back(field->element(a.get<Field::Enc>()));
    spec.field = std::move(field);
    return spec;
}

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open curve file: " + path);
    Json j;
    in >> j;
    return curve_spec_from_json(j);
}

Json curve_info_to_json(const Curve& curve) {
    Json j;
    j["p"] = curve.field().p();
    j["s"] = curve.field().s();
    j["modulus"] = curve.field().modulus();
    j["q"] = curve.q;
    j["m"] = curve.m;
    j["mu"] = curve.spec.mu.enc();
    j["genus"] = curve.genus;
    j["n"] = curve.n;
    Json betas = Json::array();
    for (const auto& b : curve.betas) betas.push_back(b.enc());
    j["betas"] = std::move(betas);
    Json points = Json::array();
    for (const auto& pt : curve.points) points.push_back(Json{{"alpha", pt.alpha.enc()}, {"beta", pt.beta.enc()}});
    j["points"] = std::move(points);
    j["weak_castle"] = weak_castle_check(curve);
    return j;
}

Json bound_to_json(const Bound& b) {
    return Json{{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}, {"source", b.source}};
}

Json report_to_json(const ParamReport& rep) {
    Json j;
    j["r"] = rep.r;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["d"] = bound_to_json(rep.d);
    Json g = Json::object();
    for (const auto& [l, b] : rep.ghw) g[std::to_string(l)] = bound_to_json(b);
    j["ghw"] = std::move(g);
    j["quasi_self_dual"] = rep.quasi_self_dual;
    j["mds"] = rep.mds;
    if (rep.oracle_d || !rep.oracle_ghw.empty()) {
        Json o = Json::object();
        if (rep.oracle_d) o["d"] = *rep.oracle_d;
        if (!rep.oracle_ghw.empty()) {
            Json og = Json::object();
            for (const auto& [l, v] : rep.oracle_ghw) og[std::to_string(l)] = v;
            o["ghw"] = std::move(og);
        }
        j["oracle"] = std::move(o);
    }
    return j;
}

Json semigroup_to_json(const NumericalSemigroup& s, long feng_rao_upto) {
    Json j;
    j["q"] = s.q();
    j["m"] = s.m();
    j["genus"] = s.genus();
    j["conductor"] = s.conductor();
    j["gaps"] = s.gaps();
    Json fr = Json::object();
    for (long x = 0; x <= feng_rao_upto && x <= s.table_bound(); ++x)
        if (s.member(x)) fr[std::to_string(x)] = s.feng_rao(x);
    j["feng_rao"] = std::move(fr);
    return j;
}

std::string matrix_to_csv(const Matrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ',';
            out << m(r, c);
        }
        out << '\n';
    }
    return out.str();
}

Matrix matrix_from_csv(const std::shared_ptr<const Field>& field, const std::string& csv) {
    std::vector<std::vector<Field::Enc>> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Field::Enc> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            const long v = std::stol(cell);
            if (v < 0 || v >= field->order()) throw std::invalid_argument("matrix entry out of field range");
            row.push_back(static_cast<Field::Enc>(v));
        }
        rows.push_back(std::move(row));
    }
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, 0, cols);
    for (const auto& row : rows) m.append_row(row);
    return m;
}

Json quantum_to_json(const QuantumParams& qp) {
    Json j;
    j["n"] = qp.n;
    j["k"] = qp.k;
    j["d_lower"] = qp.d_lower;
    j["defect"] = qp.defect;
    j["relative_defect"] = qp.relative_defect;
    return j;
}

Json convolutional_to_json(const ConvolutionalParams& cp) {
    Json j;
    j["n"] = cp.n;
    j["k"] = cp.k;
    j["gamma"] = cp.gamma;
    j["memory"] = cp.memory;
    j["df_lower"] = cp.df_lower;
    return j;
}

Json lrc_to_json(const LrcCode& lrc) {
    Json j;
    j["n"] = lrc.code.n();
    j["k_lower"] = lrc.k_lower;
    j["k_actual"] = lrc.code.k();
    j["r0"] = lrc.r0;
    j["d_lower"] = lrc.d_lower;
    j["optimal"] = lrc.optimal;
    j["rate_tight"] = lrc.rate_tight;
    return j;
}

} // namespace agcodes
