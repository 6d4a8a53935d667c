#pragma once

// Shared verify-suite dispatch for the CLI.

#include <ostream>
#include <string>

#include "qtsym/serialize.hpp"
#include "qtsym/verify.hpp"

namespace qtsym {

inline Json report_to_json(const VerifyReport& rep) {
    Json cases = Json::array();
    for (const auto& c : rep.cases)
        cases.push_back(Json{{"input", c.input},
                             {"status", c.pass ? "pass" : "fail"},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"elapsed_ms", c.elapsed_ms}});
    return Json{{"suite", rep.suite},
                {"report_only", rep.report_only},
                {"pass", rep.all_pass()},
                {"cases", cases}};
}

inline int run_verify(const std::string& suite, int max_cells, bool verbose,
                      const std::string& json_path, std::ostream& out) {
    std::vector<VerifyReport> reports;
    auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
    if (want("main-theorem")) {
        reports.push_back(verify_vanishing_suite(max_cells));
        reports.push_back(verify_nabla_suite(max_cells));
    }
    if (want("orthogonality")) reports.push_back(verify_orthogonality());
    if (want("lw")) reports.push_back(verify_lw_suite());
    if (want("recursion")) reports.push_back(verify_w_recursion_suite());
    if (want("rectangle")) reports.push_back(verify_rectangle_orthogonality());
    if (want("skewing")) reports.push_back(verify_skewing_suite());
    if (want("qt1")) reports.push_back(verify_qt1_suite(std::min(max_cells, 7)));
    if (want("rd")) reports.push_back(verify_rd_suite());
    if (want("properties")) reports.push_back(verify_properties_suite());
    if (want("dashboard")) reports.push_back(verify_dashboard_suite());
    if (reports.empty()) {
        out << "unknown suite: " << suite << "\n";
        return 2;
    }
    bool hard_fail = false;
    Json all = Json::array();
    for (const auto& rep : reports) {
        out << render_report(rep, verbose);
        all.push_back(report_to_json(rep));
        if (!rep.report_only && !rep.all_pass()) hard_fail = true;
    }
    if (!json_path.empty()) write_file(json_path, all.dump(2));
    return hard_fail ? 1 : 0;
}

}  // namespace qtsym
