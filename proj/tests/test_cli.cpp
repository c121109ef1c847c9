#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "agcodes/cli.hpp"
#include "agcodes/json_io.hpp"
#include "agcodes/oracle.hpp"
#include "agcodes/verify.hpp"

using namespace agcodes;

namespace {

std::string data_file(const std::string& name) { return std::string(AGCODES_DATA_DIR) + "/" + name; }

std::pair<int, std::string> run_cfg(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str() + err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

Curve f4_curve() { return validate_curve(load_curve_spec(data_file("f4_q2m3.json"))); }

} // namespace

TEST_CASE("field-info") {
    RunConfig cfg;
    cfg.command = "field-info";
    cfg.p = 2;
    cfg.s = 2;
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    const Json j = Json::parse(text);
    CHECK(j.at("modulus") == Json::array({1, 1, 1}));
    CHECK(j.at("primitive") == 2);
    CHECK(j.at("order") == 4);
}

TEST_CASE("curve validate echoes the curve data") {
    RunConfig cfg;
    cfg.command = "curve-validate";
    cfg.curve_path = data_file("f4_q2m3.json");
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    const Json j = Json::parse(text);
    CHECK(j.at("genus") == 1);
    CHECK(j.at("n") == 6);
    CHECK(j.at("betas") == Json::array({0, 2}));
    CHECK(j.at("points").size() == 6);
    CHECK(j.at("weak_castle") == true);
}

TEST_CASE("scan-mu lists splitting mu values") {
    RunConfig cfg;
    cfg.command = "curve-scan-mu";
    cfg.p = 3;
    cfg.s = 2;
    cfg.q = 3;
    auto [code, text] = run_cfg(cfg);
    CHECK(code == 0);
    const Json j = Json::parse(text);
    REQUIRE(!j.at("mu").empty());
    CHECK(j.at("mu")[0] == 1);
    // Every listed mu validates; mu = 2 (the bundled choice) is present.
    bool has2 = false;
    for (const auto& m : j.at("mu"))
        if (m == 2) has2 = true;
    CHECK(has2);
}

TEST_CASE("table reproduces the benchmark values") {
    RunConfig cfg;
    cfg.command = "code-table";
    cfg.curve_path = data_file("f4_q2m3.json");
    cfg.r_lo = 1;
    cfg.r_hi = 6;
    cfg.oracle = true;
    cfg.format = "csv";
    auto [code, text] = run_cfg(cfg);
    REQUIRE(code == 0);
    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"r", "N", "dim", "d", "d2", "d*", "d2*"});

    const std::vector<std::string> dims{"1", "2", "3", "4", "5", "5"};
    const std::vector<std::string> d{"5..6", "4", "3", "2", "1..2", "2"};
    const std::vector<std::string> d2{"-", "6", "5..6", "4", "3", "3"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rows[i + 1][2] == dims[i]);
        CHECK(rows[i + 1][3] == d[i]);
        CHECK(rows[i + 1][4] == d2[i]);
    }

    // Oracle columns resolve the open rows within their bounds.
    const Curve cv = f4_curve();
    const long d5 = oracle::exact_min_distance(build_code(cv, 5).code);
    CHECK((d5 >= 1 && d5 <= 2));
    const long g23 = oracle::exact_ghw(build_code(cv, 3).code, 2);
    CHECK((g23 >= 5 && g23 <= 6));
    const std::vector<std::string> dstar{"6", "4", "3", "2", std::to_string(d5), "2"};
    const std::vector<std::string> d2star{"-", "6", std::to_string(g23), "4", "3", "3"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rows[i + 1][5] == dstar[i]);
        CHECK(rows[i + 1][6] == d2star[i]);
    }
}

TEST_CASE("table output is deterministic") {
    RunConfig cfg;
    cfg.command = "code-table";
    cfg.curve_path = data_file("f4_q2m3.json");
    cfg.r_lo = -1;
    cfg.r_hi = 8;
    cfg.oracle = true;
    auto [c1, t1] = run_cfg(cfg);
    auto [c2, t2] = run_cfg(cfg);
    CHECK(c1 == 0);
    CHECK(c1 == c2);
    CHECK(t1 == t2);

    cfg.format = "json";
    auto [c3, t3] = run_cfg(cfg);
    CHECK(c3 == 0);
    CHECK(t3 == run_cfg(cfg).second);
}

TEST_CASE("table range validation") {
    RunConfig cfg;
    cfg.command = "code-table";
    cfg.curve_path = data_file("f4_q2m3.json");
    cfg.r_lo = 3;
    cfg.r_hi = 2;
    CHECK(run_cfg(cfg).first == 2);
    cfg.r_lo = -2;
    cfg.r_hi = 2;
    CHECK(run_cfg(cfg).first == 2);
    cfg.r_lo = 0;
    cfg.r_hi = 13; // 2qm = 12
    CHECK(run_cfg(cfg).first == 2);
}

TEST_CASE("params report JSON") {
    RunConfig cfg;
    cfg.command = "code-params";
    cfg.curve_path = data_file("f4_q2m3.json");
    cfg.r = 4;
    cfg.oracle = true;
    auto [code, text] = run_cfg(cfg);
    REQUIRE(code == 0);
    const Json j = Json::parse(text);
    CHECK(j.at("n") == 6);
    CHECK(j.at("k") == 4);
    CHECK(j.at("d").at("exact") == true);
    CHECK(j.at("d").at("lower") == 2);
    CHECK(j.at("d").at("source") == "Thm 4.4(2)");
    CHECK(j.at("ghw").at("2").at("lower") == 4);
    CHECK(j.at("oracle").at("d") == 2);
    CHECK(j.at("oracle").at("ghw").at("2") == 4);
    CHECK(j.at("quasi_self_dual") == false);
    CHECK(j.at("mds") == false);
}

TEST_CASE("export and reload round-trip") {
    const auto dir = std::filesystem::temp_directory_path() / "agcodes_export_test";
    std::filesystem::create_directories(dir);
    const std::string prefix = (dir / "c4").string();

    RunConfig cfg;
    cfg.command = "code-export";
    cfg.curve_path = data_file("f4_q2m3.json");
    cfg.r = 4;
    cfg.out_path = prefix;
    cfg.format = "csv";
    REQUIRE(run_cfg(cfg).first == 0);

    std::ifstream gen(prefix + ".gen.csv");
    REQUIRE(gen.good());
    std::stringstream gen_text;
    gen_text << gen.rdbuf();

    const Curve cv = f4_curve();
    const LinearCode c4 = build_code(cv, 4).code;
    const Matrix reloaded = matrix_from_csv(cv.spec.field, gen_text.str());
    CHECK(reloaded == c4.generator());
    CHECK(LinearCode::from_rows(reloaded) == c4);

    std::ifstream chk(prefix + ".chk.csv");
    REQUIRE(chk.good());
    std::stringstream chk_text;
    chk_text << chk.rdbuf();
    const Matrix h = matrix_from_csv(cv.spec.field, chk_text.str());
    CHECK(h.rows() == 2);
    CHECK((c4.generator() * h.transposed()).is_zero());

    std::ifstream side(prefix + ".json");
    REQUIRE(side.good());
    Json sj;
    side >> sj;
    CHECK(sj.at("r") == 4);
    CHECK(sj.at("k") == 4);
    CHECK(sj.at("mu") == 2);

    // JSON mode embeds both matrices next to the metadata.
    cfg.format = "json";
    cfg.out_path = (dir / "c4j").string();
    REQUIRE(run_cfg(cfg).first == 0);
    std::ifstream jf(cfg.out_path + ".json");
    Json jj;
    jf >> jj;
    CHECK(jj.at("generator").size() == 4);
    CHECK(jj.at("parity_check").size() == 2);
    CHECK(jj.at("generator")[0].size() == 6);

    // r = -1: empty generator, k = 0 sidecar.
    cfg.format = "csv";
    cfg.r = -1;
    cfg.out_path = (dir / "zero").string();
    REQUIRE(run_cfg(cfg).first == 0);
    std::ifstream zgen(cfg.out_path + ".gen.csv");
    std::stringstream ztext;
    ztext << zgen.rdbuf();
    CHECK(ztext.str().empty());
    std::ifstream zside(cfg.out_path + ".json");
    Json zj;
    zside >> zj;
    CHECK(zj.at("k") == 0);

    std::filesystem::remove_all(dir);
}

TEST_CASE("verify passes on every bundled curve") {
    for (const char* name : {"f4_q2m3.json", "f4_q2m3_mu1.json", "f8_q2m5.json", "f9_q3m4.json"}) {
        RunConfig cfg;
        cfg.command = "code-verify";
        cfg.curve_path = data_file(name);
        cfg.oracle = true;
        auto [code, text] = run_cfg(cfg);
        CHECK(code == 0);
        CHECK(Json::parse(text).at("pass") == true);
    }
}

TEST_CASE("verify flags an injected fault") {
    Curve broken = f4_curve();
    broken.points[0].beta = broken.field().element(1); // not a root of T^2 + wT
    const auto results = run_verification(broken, false);
    CHECK_FALSE(all_passed(results));
    bool point_check_failed = false;
    for (const auto& c : results)
        if (c.name == "point-validity" && !c.pass) point_check_failed = true;
    CHECK(point_check_failed);
}

TEST_CASE("quantum / convolutional / lrc commands") {
    RunConfig cfg;
    cfg.command = "quantum";
    cfg.curve_path = data_file("f4_q2m3.json");
    cfg.a = 2;
    cfg.b = 4;
    cfg.oracle = true;
    auto [qc, qt] = run_cfg(cfg);
    REQUIRE(qc == 0);
    const Json qj = Json::parse(qt);
    CHECK(qj.at("n") == 6);
    CHECK(qj.at("k") == 2);
    CHECK(qj.at("d_lower") == 2);
    CHECK(qj.at("oracle_relative_d").get<long>() >= 2);

    RunConfig ccfg;
    ccfg.command = "convolutional";
    ccfg.curve_path = data_file("f4_q2m3.json");
    ccfg.r = 4;
    ccfg.a = 1;
    auto [cc, ct] = run_cfg(ccfg);
    REQUIRE(cc == 0);
    const Json cj = Json::parse(ct);
    CHECK(cj.at("k") == 3);
    CHECK(cj.at("gamma") == 1);
    CHECK(cj.at("df_lower") == 2);

    ccfg.r = 5; // no property (*): usage error
    CHECK(run_cfg(ccfg).first == 2);

    RunConfig mcfg;
    mcfg.command = "convolutional";
    mcfg.curve_path = data_file("f8_q2m5.json");
    mcfg.match = {3, 2, 4};
    auto [mc, mt] = run_cfg(mcfg);
    REQUIRE(mc == 0);
    const Json mj = Json::parse(mt);
    REQUIRE(mj.at("matches").size() == 1);
    CHECK(mj.at("matches")[0].at("r") == 6);
    CHECK(mj.at("matches")[0].at("a") == 2);

    RunConfig lcfg;
    lcfg.command = "lrc-build";
    lcfg.curve_path = data_file("f9_q3m4.json");
    lcfg.l = 2;
    lcfg.oracle = true;
    auto [lc, lt] = run_cfg(lcfg);
    REQUIRE(lc == 0);
    const Json lj = Json::parse(lt);
    CHECK(lj.at("n") == 12);
    CHECK(lj.at("k_actual") == 6);
    CHECK(lj.at("r0") == 2);
    CHECK(lj.at("oracle_d").get<long>() >= 2);

    // Recover coordinate 3 of a codeword (second basis row of the code).
    const Curve cv9 = validate_curve(load_curve_spec(data_file("f9_q3m4.json")));
    const LrcCode lrc = lrc_build(cv9, 2);
    std::vector<long> word;
    for (std::size_t c = 0; c < lrc.code.n(); ++c) word.push_back(lrc.code.generator()(1, c));
    RunConfig rcfg;
    rcfg.command = "lrc-recover";
    rcfg.curve_path = data_file("f9_q3m4.json");
    rcfg.l = 2;
    rcfg.word = word;
    rcfg.erase = 3;
    auto [rc, rt] = run_cfg(rcfg);
    REQUIRE(rc == 0);
    const Json rj = Json::parse(rt);
    CHECK(rj.at("matches_input") == true);
    CHECK(rj.at("recovered").get<long>() == word[3]);
}

TEST_CASE("semigroup command") {
    RunConfig cfg;
    cfg.command = "semigroup";
    cfg.sg_q = 2;
    cfg.sg_m = 3;
    auto [code, text] = run_cfg(cfg);
    REQUIRE(code == 0);
    const Json j = Json::parse(text);
    CHECK(j.at("genus") == 1);
    CHECK(j.at("conductor") == 2);
    CHECK(j.at("gaps") == Json::array({1}));
    CHECK(j.at("feng_rao").at("4") == 3);
}

TEST_CASE("exit codes") {
    RunConfig cfg;
    cfg.command = "no-such-command";
    CHECK(run_cfg(cfg).first == 2);

    cfg = RunConfig{};
    cfg.command = "code-params"; // missing --r and curve
    CHECK(run_cfg(cfg).first == 2);

    cfg = RunConfig{};
    cfg.command = "code-params";
    cfg.curve_path = data_file("no_such_file.json");
    cfg.r = 1;
    CHECK(run_cfg(cfg).first == 2);

    // Cap exceeded: length 26 > 24 blocks the subset search.
    cfg = RunConfig{};
    cfg.command = "code-params";
    cfg.p = 2;
    cfg.s = 4;
    cfg.q = 2;
    cfg.mu = 1;
    cfg.alphas = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    cfg.r = 5;
    cfg.oracle = true;
    CHECK(run_cfg(cfg).first == 3);
}
