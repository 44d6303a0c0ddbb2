// Acceptance gate: one pass/fail line per criterion, computed from the full
// identity suite over the shipped corpus. Exits nonzero when any criterion
// fails.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "folkit/parser.hpp"
#include "folkit/vectorfield.hpp"
#include "folkit/verify.hpp"

using namespace folkit;
using Clock = std::chrono::steady_clock;

namespace {

bool starts_with(const std::string& s, const std::string& p) {
    return s.rfind(p, 0) == 0;
}

bool contains(const std::string& s, const std::string& p) {
    return s.find(p) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "cases";
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".fol") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());

    auto t0 = Clock::now();

    // Criterion 1 timing: definition-level invariants alone.
    std::vector<SourceCase> cases;
    auto d0 = Clock::now();
    bool defs_ok = true;
    for (const auto& f : files) {
        SourceCase sc = load_case_file(f);
        VectorField x(sc.variables, sc.parsed_components());
        x.algebraic_multiplicity();
        x.initial_part();
        x.spectrum_nonzero();
        x.is_saddle_node_linear();
        x.is_dicritical();
        x.milnor_number();
        cases.push_back(std::move(sc));
    }
    double defs_seconds = std::chrono::duration<double>(Clock::now() - d0).count();

    VerifyConfig cfg;
    std::vector<IdentityRecord> recs;
    for (const auto& sc : cases) {
        auto r = verify_case(sc, cfg);
        recs.insert(recs.end(), r.begin(), r.end());
    }
    double total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    auto all_pass = [&](auto pred, size_t* count = nullptr) {
        bool ok = true;
        size_t n = 0;
        for (const auto& r : recs)
            if (pred(r.identity)) {
                ++n;
                ok = ok && r.pass;
            }
        if (count) *count = n;
        return ok && n > 0;
    };

    size_t n_expect = 0, n_ineq = 0, n_fm = 0, n_oracle = 0;
    std::set<std::string> auto_cases;
    bool auto_ok = true;
    bool any_error = false;
    for (const auto& r : recs) {
        if (starts_with(r.identity, "auto:")) {
            auto_cases.insert(r.case_name);
            auto_ok = auto_ok && r.pass;
        }
        if (starts_with(r.lhs, "error:")) any_error = true;
        if (!r.pass) defs_ok = defs_ok; // failures surface per criterion below
    }

    bool c1 = all_pass([](const std::string& id) { return starts_with(id, "expect:"); },
                       &n_expect) &&
              cases.size() >= 15 && defs_seconds < 1.0 && defs_ok;
    bool c2 = all_pass([](const std::string& id) { return contains(id, ":ineq1"); },
                       &n_ineq) &&
              n_ineq >= 20;
    bool c3 = all_pass([](const std::string& id) {
        return contains(id, "tower_drop") || contains(id, "tower_telescope");
    });
    bool c4 = all_pass([](const std::string& id) {
        return contains(id, "tower_rindex") || contains(id, ":corollary1");
    });
    bool c5 = all_pass([](const std::string& id) { return contains(id, "formula_mult"); },
                       &n_fm) &&
              n_fm >= 20;
    bool c6 =
        all_pass([](const std::string& id) { return contains(id, "tower_endpoint"); });
    bool c7 = auto_ok && auto_cases.size() >= 5;
    bool c8 = all_pass([](const std::string& id) {
                  return id == "milnor_resultant_oracle";
              }, &n_oracle) &&
              n_oracle >= 6 &&
              all_pass([](const std::string& id) {
                  return id == "milnor_one_iff_nondegenerate";
              });
    bool c9 = all_pass([](const std::string& id) {
                  return contains(id, "newton_puiseux_certificate");
              }) &&
              all_pass([](const std::string& id) {
                  return id == "hamiltonian_separatrix_match";
              });
    bool c10 = total_seconds < 60.0 && !any_error;

    struct Line {
        const char* text;
        bool ok;
    };
    std::vector<Line> lines = {
        {"criterion 1 (definition conformance on corpus, < 1 s)", c1},
        {"criterion 2 (index inequality on all branch pairs, >= 20)", c2},
        {"criterion 3 (one-step index drop and telescoping identity)", c3},
        {"criterion 4 (R via index difference and the R/Gamma biconditional)", c4},
        {"criterion 5 (initial-part multiplicity biconditional)", c5},
        {"criterion 6 (tower endpoint index values)", c6},
        {"criterion 7 (automorphism invariance, >= 5 pairs)", c7},
        {"criterion 8 (Milnor number oracle and nondegeneracy equivalence)", c8},
        {"criterion 9 (branch back-substitution and Hamiltonian match)", c9},
        {"criterion 10 (full verify run < 60 s, no precision/depth failures)", c10},
    };

    bool all_ok = true;
    for (const auto& l : lines) {
        std::cout << l.text << ": " << (l.ok ? "pass" : "FAIL") << "\n";
        all_ok = all_ok && l.ok;
    }
    std::cout << "identities checked: " << recs.size() << " (" << n_expect
              << " expectations, " << n_ineq << " inequality pairs, " << n_oracle
              << " oracle comparisons) in " << total_seconds << " s\n";
    if (!all_ok)
        for (const auto& r : recs)
            if (!r.pass)
                std::cout << "  FAIL " << r.case_name << " " << r.identity << ": " << r.lhs
                          << " vs " << r.rhs << "\n";
    return all_ok ? 0 : 1;
}
