#pragma once

// Command-line surface. Subcommands: hhl, piece, lw, nabla, qt1, verify,
// cache. All output is deterministic for a fixed input and engine version.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "qtsym/cli_util.hpp"
#include "qtsym/lw.hpp"
#include "qtsym/qt1.hpp"
#include "qtsym/serialize.hpp"
#include "qtsym/verify.hpp"
#include "qtsym/version.hpp"

namespace qtsym {

inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"exact computations with Macdonald piece polynomials"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // ---- hhl ----
    auto* hhl_cmd = app.add_subcommand("hhl", "modified Macdonald polynomial of a partition");
    std::string hhl_mu, hhl_basis = "s", hhl_json;
    hhl_cmd->add_option("--mu", hhl_mu, "partition, comma separated")->required();
    hhl_cmd->add_option("--basis", hhl_basis, "output basis: s, m or h");
    hhl_cmd->add_option("--json", hhl_json, "also write the JSON form to this file");

    // ---- piece ----
    auto* piece_cmd = app.add_subcommand("piece", "Macdonald piece polynomial");
    std::string pc_mu, pc_lam, pc_basis = "s", pc_json;
    int pc_k = 1;
    bool pc_qt1 = false;
    piece_cmd->add_option("--mu", pc_mu)->required();
    piece_cmd->add_option("--lambda", pc_lam, "partition inside R(n,k); empty for the empty shape");
    piece_cmd->add_option("--k", pc_k)->required();
    piece_cmd->add_option("--basis", pc_basis);
    piece_cmd->add_flag("--qt1", pc_qt1, "also print the q=t=1 h-expansion (both routes)");
    piece_cmd->add_option("--json", pc_json);

    // ---- lw ----
    auto* lw_cmd = app.add_subcommand("lw", "nested-path generating function");
    std::string lw_lam, lw_path = "both", lw_json, lw_csv;
    int lw_n = 0, lw_k = 0;
    lw_cmd->add_option("--lambda", lw_lam);
    lw_cmd->add_option("--n", lw_n)->required();
    lw_cmd->add_option("--k", lw_k)->required();
    lw_cmd->add_option("--path", lw_path, "direct, det or both");
    lw_cmd->add_option("--json", lw_json);
    lw_cmd->add_option("--csv", lw_csv, "dinv/area histogram CSV");

    // ---- nabla ----
    auto* nabla_cmd = app.add_subcommand("nabla", "nabla image of a Schur function");
    std::string nb_lam, nb_basis = "s";
    int nb_power = 1;
    nabla_cmd->add_option("--lambda", nb_lam)->required();
    nabla_cmd->add_option("--power", nb_power, "+1 or -1");
    nabla_cmd->add_option("--basis", nb_basis);

    // ---- qt1 ----
    auto* qt1_cmd = app.add_subcommand("qt1", "q = t = 1 specializations");
    auto* rd_cmd = qt1_cmd->add_subcommand("rd", "relative dimension table");
    int rd_max = 3;
    bool rd_obs = false;
    std::string rd_csv;
    rd_cmd->add_option("--max-size", rd_max);
    rd_cmd->add_flag("--check-observations", rd_obs);
    rd_cmd->add_option("--csv", rd_csv);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int vmax_cells = 7;
    bool vverbose = false;
    std::string vjson;
    verify_cmd
        ->add_option("suite", suite,
                     "main-theorem | orthogonality | lw | recursion | rectangle | skewing | "
                     "qt1 | rd | properties | dashboard | all")
        ->required();
    verify_cmd->add_option("--max-cells", vmax_cells);
    verify_cmd->add_flag("-v,--verbose", vverbose);
    verify_cmd->add_option("--json", vjson, "write the machine-readable report here");

    // ---- cache ----
    auto* cache_cmd = app.add_subcommand("cache", "cache administration");
    std::string cache_action;
    cache_cmd->add_option("action", cache_action, "list | clear | stamp")->required();

    std::vector<const char*> argv;
    argv.push_back("qtsym");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return e.get_exit_code();
    }

    try {
        if (*hhl_cmd) {
            SymF f = htilde(parse_partition(hhl_mu)).to_basis(parse_basis(hhl_basis));
            out << f.str() << "\n";
            if (!hhl_json.empty()) write_file(hhl_json, symf_to_json(f).dump(2));
            return 0;
        }
        if (*piece_cmd) {
            PieceInput in{parse_partition(pc_mu), parse_partition(pc_lam), pc_k};
            SymF f = piece_poly(in).to_basis(parse_basis(pc_basis));
            out << f.str() << "\n";
            if (pc_qt1) out << "qt1: " << piece_qt1(in).str() << "\n";
            if (!pc_json.empty()) write_file(pc_json, symf_to_json(f).dump(2));
            return 0;
        }
        if (*lw_cmd) {
            LWFrame f = lw_frame(parse_partition(lw_lam), lw_n, lw_k);
            SymF direct(Basis::s), det(Basis::s);
            if (lw_path == "direct" || lw_path == "both") {
                direct = lw_direct(f);
                out << "direct: " << direct.str() << "\n";
            }
            if (lw_path == "det" || lw_path == "both") {
                det = lw_via_det(f);
                out << "det:    " << det.str() << "\n";
            }
            if (lw_path == "both" && direct != det) {
                err << "route mismatch\n";
                return 1;
            }
            SymF result = lw_path == "det" ? det : direct;
            if (!lw_json.empty()) write_file(lw_json, symf_to_json(result).dump(2));
            if (!lw_csv.empty()) {
                std::ostringstream csv;
                csv << "dinv,area,count\n";
                std::map<std::pair<long, long>, long> hist;
                for (const auto& t :
                     enum_tableaux(f, default_a_cap(f), std::max(1, f.lam.size())))
                    ++hist[{t.dinv, t.area}];
                for (const auto& [key, count] : hist)
                    csv << key.first << "," << key.second << "," << count << "\n";
                write_file(lw_csv, csv.str());
            }
            return 0;
        }
        if (*nabla_cmd) {
            SymF f = nabla(SymF::basis_element(Basis::s, parse_partition(nb_lam)), nb_power);
            out << f.to_basis(parse_basis(nb_basis)).str() << "\n";
            return 0;
        }
        if (*rd_cmd) {
            std::ostringstream csv;
            csv << "lambda,rd\n";
            for (int sz = 1; sz <= rd_max; ++sz)
                for (const auto& lam : partitions_of(sz)) {
                    Rat v = rd(lam);
                    csv << lam.str() << "," << to_string(v) << "\n";
                }
            out << csv.str();
            if (!rd_csv.empty()) write_file(rd_csv, csv.str());
            if (rd_obs) {
                ObservationReport rep = observations_suite(rd_max);
                for (const auto& line : rep.lines)
                    out << (line.ok ? "ok   " : "FAIL ") << line.label
                        << (line.detail.empty() ? "" : "  [" + line.detail + "]") << "\n";
                return rep.all_ok ? 0 : 1;
            }
            return 0;
        }
        if (*verify_cmd) return run_verify(suite, vmax_cells, vverbose, vjson, out);
        if (*cache_cmd) {
            std::filesystem::path dir = cache_dir();
            if (cache_action == "stamp") {
                out << kEngineStamp << "\n";
                return 0;
            }
            if (cache_action == "list") {
                std::error_code ec;
                if (std::filesystem::exists(dir, ec))
                    for (const auto& entry : std::filesystem::directory_iterator(dir))
                        out << entry.path().filename().string() << "\n";
                return 0;
            }
            if (cache_action == "clear") {
                std::error_code ec;
                if (std::filesystem::exists(dir, ec)) {
                    for (const auto& entry : std::filesystem::directory_iterator(dir))
                        std::filesystem::remove(entry.path(), ec);
                    if (ec) {
                        err << "cache clear failed: " << ec.message() << "\n";
                        return 1;
                    }
                }
                out << "ok\n";
                return 0;
            }
            err << "unknown cache action: " << cache_action << "\n";
            return 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace qtsym
