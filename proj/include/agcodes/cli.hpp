#ifndef AGCODES_CLI_HPP
#define AGCODES_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace agcodes {

/// One resolved CLI invocation.  Exactly one command; curve commands
/// take either a JSON file path or the inline parameters.
struct RunConfig {
    std::string command;

    std::string curve_path;
    std::optional<long> p, s, q, mu;
    std::vector<long> alphas;

    std::optional<long> r;
    std::optional<long> r_lo, r_hi;
    std::vector<long> ghw_ls = {2};
    bool oracle = false;
    std::string format = "table"; // table | json | csv
    std::string out_path;

    std::optional<long> a, b; // quantum / convolutional abundance
    std::optional<long> l;    // lrc degree
    std::vector<long> match;  // convolutional search: k, gamma, df
    std::vector<long> word;   // lrc recover codeword
    std::optional<long> erase;

    std::optional<long> sg_q, sg_m, sg_upto;
};

/// Runs one command.  Exit codes: 0 success, 1 verification failure,
/// 2 usage or configuration error, 3 enumeration cap exceeded.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace agcodes

#endif
