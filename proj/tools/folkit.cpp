// folkit: exact local invariants of plane foliation germs.
//
// Subcommands: invariants, resolve, separatrices, tower, verify.
// Exit codes: 0 success; 1 verify found failing identities; 2 parse or
// validation error; 3 computational failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>

#include "folkit/errors.hpp"
#include "folkit/invariants.hpp"
#include "folkit/parser.hpp"
#include "folkit/puiseux.hpp"
#include "folkit/rat.hpp"
#include "folkit/verify.hpp"

using namespace folkit;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    long order = 32;
    int max_depth = 12;
    int ext_bound = 24;
    std::string format = "json";
    int jobs = 1;
    std::vector<std::string> inputs;
    int curve_index = 0;
    int branch_index = 0;
};

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> files;
    for (const auto& in : inputs) {
        if (std::filesystem::is_directory(in)) {
            for (const auto& e : std::filesystem::directory_iterator(in))
                if (e.path().extension() == ".fol") files.push_back(e.path().string());
        } else {
            files.push_back(in);
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

// Retry a computation with doubled working order on precision exhaustion.
template <typename F>
auto adaptive(long order, F f) {
    for (;; order *= 2) {
        try {
            return f(order);
        } catch (const PrecisionExhausted&) {
            if (2 * order > 512) throw;
        }
    }
}

std::string series_str(const PuiseuxSeries& s) { return s.str("t"); }

Json branch_json(const PuiseuxBranch& b) {
    Json j;
    j["x"] = series_str(b.x);
    j["y"] = series_str(b.y);
    j["mult"] = b.mult;
    j["formal"] = b.formal;
    j["family_representative"] = b.family_rep;
    return j;
}

int cmd_invariants(const Options& opt) {
    Json out;
    out["schema"] = "folkit-report/1";
    out["cases"] = Json::array();
    std::vector<std::string> table;
    for (const auto& path : expand_inputs(opt.inputs)) {
        SourceCase sc = load_case_file(path);
        VectorField x(sc.variables, sc.parsed_components());
        Json c;
        c["name"] = sc.name;
        c["nu"] = x.algebraic_multiplicity();
        Json init = Json::array();
        for (const auto& p : x.initial_part()) init.push_back(p.str());
        c["initial_part"] = init;
        c["dicritical"] = x.is_dicritical();
        c["saddle_node"] = x.is_saddle_node_linear();
        c["spectrum_nonzero"] = x.spectrum_nonzero();
        auto mu = x.milnor_number();
        if (mu)
            c["milnor"] = *mu;
        else
            c["milnor"] = nullptr;
        out["cases"].push_back(c);
        table.push_back(sc.name + ": nu=" + std::to_string(x.algebraic_multiplicity()) +
                        " dicritical=" + (x.is_dicritical() ? "yes" : "no") +
                        " saddle_node=" + (x.is_saddle_node_linear() ? "yes" : "no") +
                        " milnor=" + (mu ? std::to_string(*mu) : "infinite"));
    }
    if (opt.format == "table")
        for (const auto& l : table) std::cout << l << "\n";
    else
        std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_resolve(const Options& opt) {
    for (const auto& path : expand_inputs(opt.inputs)) {
        SourceCase sc = load_case_file(path);
        VectorField x(sc.variables, sc.parsed_components());
        ResolutionTree t = resolve(x, opt.max_depth, opt.ext_bound);
        if (opt.format == "dot") {
            std::cout << t.to_dot();
            continue;
        }
        Json out;
        out["schema"] = "folkit-report/1";
        out["name"] = sc.name;
        out["complete"] = t.complete;
        out["second_type"] = t.second_type;
        out["strictly_nondicritical"] = t.strictly_nondicritical;
        out["nodes"] = Json::array();
        for (size_t i = 0; i < t.nodes.size(); ++i) {
            const auto& n = t.nodes[i];
            Json nj;
            nj["id"] = i;
            nj["parent"] = n.parent;
            nj["depth"] = n.depth;
            nj["nu"] = n.nu;
            nj["nu_tilde"] = n.nu_tilde;
            nj["dicritical"] = n.dicritical;
            nj["class"] = reduced_tag_name(n.cls.tag);
            if (n.cls.ratio)
                nj["eigenvalue_ratio"] = rat_str(*n.cls.ratio);
            out["nodes"].push_back(nj);
        }
        if (opt.format == "table") {
            std::cout << sc.name << ": " << t.nodes.size() << " nodes, complete="
                      << (t.complete ? "yes" : "no") << ", second_type="
                      << (t.second_type ? "yes" : "no") << "\n";
            for (const auto& nj : out["nodes"])
                std::cout << "  node " << nj["id"] << " depth " << nj["depth"] << " nu "
                          << nj["nu"] << " " << nj["class"].get<std::string>() << "\n";
        } else {
            std::cout << out.dump(2) << "\n";
        }
    }
    return 0;
}

int cmd_separatrices(const Options& opt) {
    for (const auto& path : expand_inputs(opt.inputs)) {
        SourceCase sc = load_case_file(path);
        VectorField x(sc.variables, sc.parsed_components());
        auto seps = adaptive(opt.order, [&](long order) {
            return solve_separatrices(x, order, opt.max_depth, opt.ext_bound);
        });
        if (opt.format == "table") {
            std::cout << sc.name << ": " << seps.size() << " separatrices\n";
            for (const auto& b : seps) std::cout << "  " << b.str() << "\n";
        } else {
            Json out;
            out["schema"] = "folkit-report/1";
            out["name"] = sc.name;
            out["separatrices"] = Json::array();
            for (const auto& b : seps) out["separatrices"].push_back(branch_json(b));
            std::cout << out.dump(2) << "\n";
        }
    }
    return 0;
}

int cmd_tower(const Options& opt) {
    for (const auto& path : expand_inputs(opt.inputs)) {
        SourceCase sc = load_case_file(path);
        VectorField x(sc.variables, sc.parsed_components());
        auto curves = sc.parsed_curves();
        if (opt.curve_index < 0 || static_cast<size_t>(opt.curve_index) >= curves.size())
            throw ValidationError({"case has no curve with index " +
                                   std::to_string(opt.curve_index)});
        auto branches = adaptive(opt.order, [&](long order) {
            return newton_puiseux(curves[static_cast<size_t>(opt.curve_index)], order,
                                  opt.ext_bound);
        });
        if (opt.branch_index < 0 ||
            static_cast<size_t>(opt.branch_index) >= branches.size())
            throw ValidationError({"curve has no branch with index " +
                                   std::to_string(opt.branch_index)});
        const PuiseuxBranch& v = branches[static_cast<size_t>(opt.branch_index)];
        TowerInvariants t = tower_invariants(x, v, opt.max_depth, opt.ext_bound);
        Json out;
        out["schema"] = "folkit-report/1";
        out["name"] = sc.name;
        out["branch"] = branch_json(v);
        out["delta"] = t.delta;
        out["endpoint"] = t.endpoint_kind == EndpointKind::dicritical_endpoint
                              ? "dicritical"
                              : "nondicritical";
        out["levels"] = Json::array();
        for (const auto& L : t.levels) {
            Json lj;
            lj["m"] = L.m;
            lj["nu"] = L.nu;
            lj["nu_tilde"] = L.nu_tilde;
            lj["ind"] = L.ind;
            lj["dicritical"] = L.dicritical;
            out["levels"].push_back(lj);
        }
        Json rj = Json::array(), gj = Json::array();
        for (const auto& r : t.R) rj.push_back(rat_str(r));
        for (const auto& g : t.Gamma) gj.push_back(rat_str(g));
        out["R"] = rj;
        out["Gamma"] = gj;
        if (opt.format == "table") {
            std::cout << sc.name << ": delta=" << t.delta << " endpoint="
                      << out["endpoint"].get<std::string>() << "\n";
            for (size_t j = 0; j < t.levels.size(); ++j)
                std::cout << "  level " << j << ": m=" << t.levels[j].m
                          << " nu=" << t.levels[j].nu << " nu~=" << t.levels[j].nu_tilde
                          << " ind=" << t.levels[j].ind << "\n";
        } else {
            std::cout << out.dump(2) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    auto files = expand_inputs(opt.inputs);
    VerifyConfig cfg;
    cfg.order = opt.order;
    cfg.max_depth = opt.max_depth;
    cfg.ext_bound = opt.ext_bound;

    std::vector<std::vector<IdentityRecord>> results(files.size());
    if (opt.jobs > 1) {
        std::vector<std::future<std::vector<IdentityRecord>>> futs;
        futs.reserve(files.size());
        for (const auto& f : files)
            futs.push_back(std::async(std::launch::async, [&cfg, f] {
                return verify_case(load_case_file(f), cfg);
            }));
        for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < files.size(); ++i)
            results[i] = verify_case(load_case_file(files[i]), cfg);
    }

    size_t total = 0, failed = 0;
    Json out;
    out["schema"] = "folkit-report/1";
    out["records"] = Json::array();
    for (const auto& recs : results)
        for (const auto& r : recs) {
            ++total;
            if (!r.pass) ++failed;
            Json rj;
            rj["case"] = r.case_name;
            rj["identity"] = r.identity;
            rj["lhs"] = r.lhs;
            rj["rhs"] = r.rhs;
            rj["pass"] = r.pass;
            out["records"].push_back(rj);
        }
    out["total"] = total;
    out["failed"] = failed;
    if (opt.format == "table") {
        for (const auto& recs : results)
            for (const auto& r : recs)
                if (!r.pass)
                    std::cout << "FAIL " << r.case_name << " " << r.identity << ": "
                              << r.lhs << " vs " << r.rhs << "\n";
        std::cout << total - failed << "/" << total << " identities hold\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local invariants of plane foliation germs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool takes_many) {
        sub->add_option("inputs", opt.inputs, "case files or directories")
            ->required()
            ->expected(takes_many ? -1 : 1);
        sub->add_option("--order", opt.order, "working series order in t units")
            ->envname("FOLKIT_ORDER");
        sub->add_option("--max-depth", opt.max_depth, "blow-up depth bound")
            ->envname("FOLKIT_MAX_DEPTH");
        sub->add_option("--ext-bound", opt.ext_bound, "field extension degree bound")
            ->envname("FOLKIT_EXT_BOUND");
        sub->add_option("--format", opt.format, "output format: json, table, or dot")
            ->envname("FOLKIT_FORMAT");
        sub->add_option("--jobs", opt.jobs, "parallel cases")->envname("FOLKIT_JOBS");
    };

    auto* inv = app.add_subcommand("invariants", "germ-level invariants of each case");
    add_common(inv, true);
    auto* res = app.add_subcommand("resolve", "blow-up resolution tree");
    add_common(res, true);
    auto* sep = app.add_subcommand("separatrices", "solve for separatrices");
    add_common(sep, true);
    auto* tow = app.add_subcommand("tower", "branch tower invariants");
    add_common(tow, true);
    tow->add_option("--curve", opt.curve_index, "curve entry index in the case file");
    tow->add_option("--branch", opt.branch_index, "branch index within the curve");
    auto* ver = app.add_subcommand("verify", "run the identity suite");
    add_common(ver, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return cmd_invariants(opt);
        if (res->parsed()) return cmd_resolve(opt);
        if (sep->parsed()) return cmd_separatrices(opt);
        if (tow->parsed()) return cmd_tower(opt);
        if (ver->parsed()) return cmd_verify(opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "computational failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
