#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "agcodes/cli.hpp"

namespace {

using agcodes::RunConfig;

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        if (!cell.empty()) out.push_back(std::stol(cell));
    }
    return out;
}

// "A..B" with either side possibly negative.
bool parse_range(const std::string& text, long& lo, long& hi) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        lo = std::stol(text.substr(0, pos));
        hi = std::stol(text.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return true;
}

void add_curve_opts(CLI::App* cmd, RunConfig& cfg, std::string& alphas_csv) {
    cmd->add_option("--curve", cfg.curve_path, "curve description JSON file");
    cmd->add_option("--p", cfg.p, "field characteristic (inline curve)");
    cmd->add_option("--s", cfg.s, "extension degree (inline curve)");
    cmd->add_option("--q", cfg.q, "degree of the additive polynomial");
    cmd->add_option("--mu", cfg.mu, "mu as an integer encoding");
    cmd->add_option("--alphas", alphas_csv, "comma-separated alpha encodings");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-point evaluation codes on y^q + mu*y = f(x): parameters, duals, oracles, derived codes"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string alphas_csv, ghw_csv, range_text, match_csv, word_csv;

    auto* field_info = app.add_subcommand("field-info", "canonical modulus and primitive element of GF(p^s)");
    field_info->add_option("--p", cfg.p)->required();
    field_info->add_option("--s", cfg.s)->required();

    auto* curve = app.add_subcommand("curve", "curve validation helpers");
    curve->require_subcommand(1);
    auto* validate = curve->add_subcommand("validate", "validate a curve and echo its data");
    add_curve_opts(validate, cfg, alphas_csv);
    auto* scan = curve->add_subcommand("scan-mu", "list mu values for which T^q + mu*T splits");
    scan->add_option("--p", cfg.p)->required();
    scan->add_option("--s", cfg.s)->required();
    scan->add_option("--q", cfg.q)->required();

    auto* code = app.add_subcommand("code", "one-point code computations");
    code->require_subcommand(1);
    auto* table = code->add_subcommand("table", "parameter table over a range of r");
    add_curve_opts(table, cfg, alphas_csv);
    table->add_option("--r-range", range_text, "A..B (inclusive)")->required();
    table->add_option("--ghw", ghw_csv, "comma-separated list of l for d_l columns");
    table->add_flag("--oracle", cfg.oracle, "append brute-force oracle columns");
    table->add_option("--format", cfg.format, "table | json | csv");

    auto* params = code->add_subcommand("params", "parameter report for one r");
    add_curve_opts(params, cfg, alphas_csv);
    params->add_option("--r", cfg.r)->required();
    params->add_option("--ghw", ghw_csv);
    params->add_flag("--oracle", cfg.oracle);

    auto* exp = code->add_subcommand("export", "write generator/parity-check matrices");
    add_curve_opts(exp, cfg, alphas_csv);
    exp->add_option("--r", cfg.r)->required();
    exp->add_option("--out", cfg.out_path, "output path prefix")->required();
    exp->add_option("--format", cfg.format, "csv | json");

    auto* verify = code->add_subcommand("verify", "run the cross-module invariant suite");
    add_curve_opts(verify, cfg, alphas_csv);
    verify->add_option("--ghw", ghw_csv);
    verify->add_flag("--oracle", cfg.oracle, "include oracle comparisons");

    auto* quantum = app.add_subcommand("quantum", "quantum code from the nested pair C_a in C_b");
    add_curve_opts(quantum, cfg, alphas_csv);
    quantum->add_option("--a", cfg.a)->required();
    quantum->add_option("--b", cfg.b)->required();
    quantum->add_flag("--oracle", cfg.oracle, "compute the true relative minimum weight");

    auto* conv = app.add_subcommand("convolutional", "unit-memory convolutional code parameters");
    add_curve_opts(conv, cfg, alphas_csv);
    conv->add_option("--r", cfg.r);
    conv->add_option("--a", cfg.a, "abundance");
    conv->add_option("--match", match_csv, "k,gamma,df: list all (r, a) producing these parameters");

    auto* lrc = app.add_subcommand("lrc", "locally recoverable codes");
    lrc->require_subcommand(1);
    auto* lrc_build = lrc->add_subcommand("build", "build the LRC for degree l");
    add_curve_opts(lrc_build, cfg, alphas_csv);
    lrc_build->add_option("--l", cfg.l)->required();
    lrc_build->add_flag("--oracle", cfg.oracle);
    auto* lrc_recover = lrc->add_subcommand("recover", "recover an erased coordinate from its fiber");
    add_curve_opts(lrc_recover, cfg, alphas_csv);
    lrc_recover->add_option("--l", cfg.l)->required();
    lrc_recover->add_option("--word", word_csv, "comma-separated codeword encodings")->required();
    lrc_recover->add_option("--erase", cfg.erase, "coordinate to recover")->required();

    auto* semigroup = app.add_subcommand("semigroup", "numerical semigroup <q, m> report");
    semigroup->add_option("--q", cfg.sg_q)->required();
    semigroup->add_option("--m", cfg.sg_m)->required();
    semigroup->add_option("--upto", cfg.sg_upto, "Feng-Rao range limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!alphas_csv.empty()) cfg.alphas = parse_long_list(alphas_csv);
        if (!ghw_csv.empty()) cfg.ghw_ls = parse_long_list(ghw_csv);
        if (!match_csv.empty()) cfg.match = parse_long_list(match_csv);
        if (!word_csv.empty()) cfg.word = parse_long_list(word_csv);
        if (!range_text.empty()) {
            long lo = 0, hi = 0;
            if (!parse_range(range_text, lo, hi)) {
                std::cerr << "bad --r-range, expected A..B\n";
                return 2;
            }
            cfg.r_lo = lo;
            cfg.r_hi = hi;
        }
    } catch (const std::exception& e) {
        std::cerr << "bad numeric argument: " << e.what() << '\n';
        return 2;
    }

    if (field_info->parsed()) cfg.command = "field-info";
    else if (validate->parsed()) cfg.command = "curve-validate";
    else if (scan->parsed()) cfg.command = "curve-scan-mu";
    else if (table->parsed()) cfg.command = "code-table";
    else if (params->parsed()) cfg.command = "code-params";
    else if (exp->parsed()) cfg.command = "code-export";
    else if (verify->parsed()) cfg.command = "code-verify";
    else if (quantum->parsed()) cfg.command = "quantum";
    else if (conv->parsed()) cfg.command = "convolutional";
    else if (lrc_build->parsed()) cfg.command = "lrc-build";
    else if (lrc_recover->parsed()) cfg.command = "lrc-recover";
    else if (semigroup->parsed()) cfg.command = "semigroup";
    else {
        std::cerr << "missing subcommand\n";
        return 2;
    }

    return agcodes::run(cfg, std::cout, std::cerr);
}
