#include "agcodes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "agcodes/derived.hpp"
#include "agcodes/json_io.hpp"
#include "agcodes/oracle.hpp"
#include "agcodes/verify.hpp"

namespace agcodes {

namespace {

Curve resolve_curve(const RunConfig& cfg) {
    CurveSpec spec;
    if (!cfg.curve_path.empty()) {
        spec = load_curve_spec(cfg.curve_path);
    } else {
        if (!cfg.p || !cfg.s || !cfg.q || !cfg.mu || cfg.alphas.empty())
            throw std::invalid_argument("need --curve FILE or all of --p --s --q --mu --alphas");
        auto field = Field::make(*cfg.p, static_cast<int>(*cfg.s));
        spec.q = *cfg.q;
        spec.mu = field->element(static_cast<Field::Enc>(*cfg.mu));
        for (long a : cfg.alphas) spec.alphas.push_back(field->element(static_cast<Field::Enc>(a)));
        spec.field = std::move(field);
    }
    return validate_curve(spec);
}

std::string bound_cell(const Bound& b) {
    if (b.exact) return std::to_string(b.lower);
    return std::to_string(b.lower) + ".." + std::to_string(b.upper);
}

void fill_oracle(const Curve& cv, ParamReport& rep) {
    if (rep.k < 1) return;
    const LinearCode code = build_code(cv, rep.r).code;
    rep.oracle_d = oracle::exact_min_distance_auto(code);
    for (const auto& [l, bound] : rep.ghw) {
        (void)bound;
        rep.oracle_ghw[l] = oracle::exact_ghw(code, l);
    }
}

int cmd_field_info(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.p || !cfg.s) throw std::invalid_argument("field-info needs --p and --s");
    auto f = Field::make(*cfg.p, static_cast<int>(*cfg.s));
    Json j;
    j["p"] = f->p();
    j["s"] = f->s();
    j["order"] = f->order();
    j["modulus"] = f->modulus();
    j["primitive"] = f->primitive_element_enc();
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_curve_validate(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    out << curve_info_to_json(cv).dump(2) << '\n';
    return 0;
}

int cmd_scan_mu(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.p || !cfg.s || !cfg.q) throw std::invalid_argument("scan-mu needs --p, --s and --q");
    auto f = Field::make(*cfg.p, static_cast<int>(*cfg.s));
    Json mus = Json::array();
    for (const auto& mu : scan_mu(f, *cfg.q)) mus.push_back(mu.enc());
    Json j;
    j["p"] = f->p();
    j["s"] = f->s();
    j["q"] = *cfg.q;
    j["mu"] = std::move(mus);
    out << j.dump(2) << '\n';
    return 0;
}

std::vector<ParamReport> build_reports(const Curve& cv, long lo, long hi, const RunConfig& cfg) {
    std::vector<ParamReport> reps;
    for (long r = lo; r <= hi; ++r) {
        ParamReport rep = make_report(cv, r, cfg.ghw_ls);
        if (cfg.oracle) fill_oracle(cv, rep);
        reps.push_back(std::move(rep));
    }
    return reps;
}

void render_table(const std::vector<ParamReport>& reps, const RunConfig& cfg, std::ostream& out, char sep) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head = {"r", "N", "dim", "d"};
    for (long l : cfg.ghw_ls) head.push_back("d" + std::to_string(l));
    if (cfg.oracle) {
        head.push_back("d*");
        for (long l : cfg.ghw_ls) head.push_back("d" + std::to_string(l) + "*");
    }
    cells.push_back(head);
    for (const auto& rep : reps) {
        std::vector<std::string> row = {std::to_string(rep.r), std::to_string(rep.n), std::to_string(rep.k)};
        row.push_back(rep.k >= 1 ? bound_cell(rep.d) : "-");
        for (long l : cfg.ghw_ls) {
            const auto it = rep.ghw.find(l);
            row.push_back(it == rep.ghw.end() ? "-" : bound_cell(it->second));
        }
        if (cfg.oracle) {
            row.push_back(rep.oracle_d ? std::to_string(*rep.oracle_d) : "-");
            for (long l : cfg.ghw_ls) {
                const auto it = rep.oracle_ghw.find(l);
                row.push_back(it == rep.oracle_ghw.end() ? "-" : std::to_string(it->second));
            }
        }
        cells.push_back(std::move(row));
    }

    if (sep == ',') {
        for (const auto& row : cells) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
        out << '\n';
    }
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    if (!cfg.r_lo || !cfg.r_hi || *cfg.r_lo > *cfg.r_hi)
        throw std::invalid_argument("table needs a nonempty --r-range A..B");
    if (*cfg.r_lo < -1 || *cfg.r_hi > 2 * cv.n)
        throw std::invalid_argument("r-range must lie within [-1, 2qm]");
    const auto reps = build_reports(cv, *cfg.r_lo, *cfg.r_hi, cfg);
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const auto& rep : reps) arr.push_back(report_to_json(rep));
        out << arr.dump(2) << '\n';
    } else {
        render_table(reps, cfg, out, cfg.format == "csv" ? ',' : ' ');
    }
    return 0;
}

int cmd_params(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    if (!cfg.r) throw std::invalid_argument("params needs --r");
    if (*cfg.r < -1 || *cfg.r > 2 * cv.n) throw std::invalid_argument("r must lie within [-1, 2qm]");
    ParamReport rep = make_report(cv, *cfg.r, cfg.ghw_ls);
    if (cfg.oracle) fill_oracle(cv, rep);
    out << report_to_json(rep).dump(2) << '\n';
    return 0;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    if (!cfg.r) throw std::invalid_argument("export needs --r");
    if (cfg.out_path.empty()) throw std::invalid_argument("export needs --out PATH");
    const LinearCode code = build_code(cv, *cfg.r).code;
    const std::string gen_csv = matrix_to_csv(code.generator());
    const std::string chk_csv =
        code.k() == code.n() ? std::string() : matrix_to_csv(oracle::parity_check(code));

    Json sidecar;
    sidecar["p"] = cv.field().p();
    sidecar["s"] = cv.field().s();
    sidecar["modulus"] = cv.field().modulus();
    sidecar["q"] = cv.q;
    sidecar["mu"] = cv.spec.mu.enc();
    Json alphas = Json::array();
    for (const auto& a : cv.spec.alphas) alphas.push_back(a.enc());
    sidecar["alphas"] = std::move(alphas);
    sidecar["r"] = *cfg.r;
    sidecar["n"] = code.n();
    sidecar["k"] = code.k();

    const auto write_file = [](const std::string& path, const std::string& content) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << content;
    };

    if (cfg.format == "json") {
        Json j = sidecar;
        const auto matrix_rows = [](const Matrix& m) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
                rows.push_back(std::move(row));
            }
            return rows;
        };
        j["generator"] = matrix_rows(code.generator());
        j["parity_check"] = code.k() == code.n() ? Json::array() : matrix_rows(oracle::parity_check(code));
        write_file(cfg.out_path + ".json", j.dump(2) + "\n");
        out << cfg.out_path << ".json\n";
    } else {
        write_file(cfg.out_path + ".gen.csv", gen_csv);
        write_file(cfg.out_path + ".chk.csv", chk_csv);
        write_file(cfg.out_path + ".json", sidecar.dump(2) + "\n");
        out << cfg.out_path << ".gen.csv\n" << cfg.out_path << ".chk.csv\n" << cfg.out_path << ".json\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    const auto results = run_verification(cv, cfg.oracle, cfg.ghw_ls);
    Json j;
    Json checks = Json::array();
    for (const auto& c : results) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    const bool ok = all_passed(results);
    j["pass"] = ok;
    out << j.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_quantum(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    if (!cfg.a || !cfg.b) throw std::invalid_argument("quantum needs --a and --b");
    const QuantumParams qp = quantum_from_nested(cv, *cfg.a, *cfg.b);
    Json j = quantum_to_json(qp);
    if (cfg.oracle) {
        const LinearCode ca = build_code(cv, *cfg.a).code;
        const LinearCode cb = build_code(cv, *cfg.b).code;
        const long w1 = oracle::relative_min_weight(cb, ca);
        const long w2 = oracle::relative_min_weight(dual_code(cv, *cfg.a), dual_code(cv, *cfg.b));
        j["oracle_relative_d"] = std::min(w1, w2);
    }
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_convolutional(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    if (!cfg.match.empty()) {
        if (cfg.match.size() != 3) throw std::invalid_argument("--match needs k,gamma,df");
        Json arr = Json::array();
        for (const auto& [r, a] : find_convolutional_params(cv, cfg.match[0], cfg.match[1], cfg.match[2]))
            arr.push_back(Json{{"r", r}, {"a", a}});
        Json j;
        j["matches"] = std::move(arr);
        out << j.dump(2) << '\n';
        return 0;
    }
    if (!cfg.r || !cfg.a) throw std::invalid_argument("convolutional needs --r and --a (or --match)");
    out << convolutional_to_json(convolutional_params(cv, *cfg.r, *cfg.a)).dump(2) << '\n';
    return 0;
}

int cmd_lrc_build(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    if (!cfg.l) throw std::invalid_argument("lrc build needs --l");
    const LrcCode lrc = lrc_build(cv, *cfg.l);
    Json j = lrc_to_json(lrc);
    if (cfg.oracle) j["oracle_d"] = oracle::exact_min_distance_auto(lrc.code);
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_lrc_recover(const RunConfig& cfg, std::ostream& out) {
    const Curve cv = resolve_curve(cfg);
    if (!cfg.l || !cfg.erase) throw std::invalid_argument("lrc recover needs --l, --word and --erase");
    const LrcCode lrc = lrc_build(cv, *cfg.l);
    if (static_cast<long>(cfg.word.size()) != static_cast<long>(lrc.code.n()))
        throw std::invalid_argument("--word must have length qm");
    std::vector<Field::Enc> word;
    for (long v : cfg.word) {
        if (v < 0 || v >= cv.field().order()) throw std::invalid_argument("word symbol out of field range");
        word.push_back(static_cast<Field::Enc>(v));
    }
    const FieldElement rec = lrc_recover(lrc, word, *cfg.erase);
    Json j;
    j["erased"] = *cfg.erase;
    j["recovered"] = rec.enc();
    j["matches_input"] = rec.enc() == word[*cfg.erase];
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_semigroup(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.sg_q || !cfg.sg_m) throw std::invalid_argument("semigroup needs --q and --m");
    const NumericalSemigroup s(*cfg.sg_q, *cfg.sg_m);
    const long upto = cfg.sg_upto ? std::min(*cfg.sg_upto, s.table_bound()) : s.table_bound();
    out << semigroup_to_json(s, upto).dump(2) << '\n';
    return 0;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "field-info") return cmd_field_info(cfg, out);
        if (cfg.command == "curve-validate") return cmd_curve_validate(cfg, out);
        if (cfg.command == "curve-scan-mu") return cmd_scan_mu(cfg, out);
        if (cfg.command == "code-table") return cmd_table(cfg, out);
        if (cfg.command == "code-params") return cmd_params(cfg, out);
        if (cfg.command == "code-export") return cmd_export(cfg, out);
        if (cfg.command == "code-verify") return cmd_verify(cfg, out);
        if (cfg.command == "quantum") return cmd_quantum(cfg, out);
        if (cfg.command == "convolutional") return cmd_convolutional(cfg, out);
        if (cfg.command == "lrc-build") return cmd_lrc_build(cfg, out);
        if (cfg.command == "lrc-recover") return cmd_lrc_recover(cfg, out);
        if (cfg.command == "semigroup") return cmd_semigroup(cfg, out);
        err << "unknown command: " << cfg.command << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        err << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
}

} // namespace agcodes
