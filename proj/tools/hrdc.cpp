#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hrdc/cache.hpp"
#include "hrdc/parallel.hpp"
#include "hrdc/report_json.hpp"

namespace {

using hrdc::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + out_path);
    os << text;
}

struct ConstructArgs {
    std::string family;
    int n = 0, d = 0;
    long q = 0;
    std::string out;
    bool census_only = false;
    long long matrix_cap = hrdc::kDefaultMatrixCap;

    hrdc::ConstructionSpec spec() const {
        hrdc::Family f = hrdc::family_from_name(family);
        hrdc::ConstructionSpec s{f, n, d, q};
        if (f == hrdc::Family::ZeroDiag) s.d = 2;
        if (f == hrdc::Family::SymmetricDn || f == hrdc::Family::Thm43) s.d = n;
        if ((f == hrdc::Family::Thm41 || f == hrdc::Family::Thm42) && d == 0)
            throw hrdc::UsageError(family + " requires --d");
        return s;
    }
};

void cmd_construct(const ConstructArgs& args) {
    hrdc::ConstructionSpec spec = args.spec();
    if (args.census_only) {
        emit(hrdc::census_to_json(spec, hrdc::construction_rank_census(spec, args.matrix_cap)), args.out);
        return;
    }
    hrdc::CodeSet y = hrdc::construct(spec, args.matrix_cap);
    if (args.out.empty()) {
        hrdc::write_code_jsonl(std::cout, y);
        return;
    }
    std::ofstream os(args.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + args.out);
    hrdc::write_code_jsonl(os, y);
}

int cmd_verify(const std::string& suite, const std::string& out) {
    std::vector<std::string> names;
    if (suite == "all")
        names = hrdc::verify_suite_names();
    else
        names = {suite};
    json suites = json::array();
    bool pass = true;
    for (const std::string& name : names) {
        hrdc::SuiteResult res = hrdc::run_verify_suite(name);  // throws UsageError on bad name
        pass = pass && res.pass();
        suites.push_back(hrdc::suite_result_to_json(res));
    }
    json j;
    j["suites"] = std::move(suites);
    j["pass"] = pass;
    emit(j, out);
    return pass ? kExitOk : kExitVerifyFailure;
}

int cmd_pipeline(const ConstructArgs& args, const std::string& out_dir, bool force) {
    namespace fs = std::filesystem;
    hrdc::ConstructionSpec spec = args.spec();
    fs::create_directories(out_dir);
    std::vector<std::string> targets = {"run.json", "code.jsonl", "analysis.json", "bounds.json"};
    for (const std::string& name : targets)
        if (!force && fs::exists(fs::path(out_dir) / name))
            throw hrdc::UsageError("refusing to overwrite " + (fs::path(out_dir) / name).string() +
                                   " without --force");

    hrdc::CodeSet y = hrdc::construct(spec, args.matrix_cap);
    {
        std::ofstream os(fs::path(out_dir) / "code.jsonl", std::ios::binary);
        hrdc::write_code_jsonl(os, y);
    }
    emit(hrdc::analysis_to_json(y), (fs::path(out_dir) / "analysis.json").string());
    emit(hrdc::bound_report_to_json(hrdc::full_bound_report(spec.n, hrdc::family_distance(spec), spec.q)),
         (fs::path(out_dir) / "bounds.json").string());
    json run;
    run["family"] = hrdc::family_name(spec.family);
    run["n"] = spec.n;
    run["d"] = hrdc::family_distance(spec);
    run["q"] = static_cast<long>(spec.q);
    run["matrix_cap"] = args.matrix_cap;
    emit(run, (fs::path(out_dir) / "run.json").string());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact d-code toolkit for the Hermitian matrix association scheme"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "cap the worker-thread count (0 = hardware)");

    if (const char* dir = std::getenv("HRDC_CACHE_DIR")) hrdc::cache::set_dir(dir);

    // eigen
    auto* eigen = app.add_subcommand("eigen", "eigenvalue table Q_k(i), rows k, columns i");
    int e_n = 0;
    long e_q = 0;
    std::string e_method = "explicit", e_format = "json", e_out;
    eigen->add_option("--n", e_n, "matrix dimension")->required();
    eigen->add_option("--q", e_q, "prime power q")->required();
    eigen->add_option("--method", e_method, "explicit | recurrence | direct")
        ->check(CLI::IsMember({"explicit", "recurrence", "direct"}));
    eigen->add_option("--format", e_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    eigen->add_option("--out", e_out, "output file (default stdout)");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a d-code construction");
    ConstructArgs c_args;
    construct->add_option("--family", c_args.family, "thm41 | thm42 | zero-diag | sym-dn | thm43")
        ->required();
    construct->add_option("--n", c_args.n, "matrix dimension")->required();
    construct->add_option("--d", c_args.d, "minimum distance (thm41/thm42)");
    construct->add_option("--q", c_args.q, "prime power q")->required();
    construct->add_option("--out", c_args.out, "output file (default stdout)");
    construct->add_flag("--census-only", c_args.census_only,
                        "stream the rank census without materializing the code");
    construct->add_option("--matrix-cap", c_args.matrix_cap, "materialization cap");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "distributions and bounds of a serialized code");
    std::string a_in, a_out;
    analyze->add_option("--in", a_in, "code.jsonl input")->required();
    analyze->add_option("--out", a_out, "output file (default stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "bound report at (n, d, q)");
    int b_n = 0, b_d = 0;
    long b_q = 0;
    std::string b_out;
    bounds->add_option("--n", b_n, "matrix dimension")->required();
    bounds->add_option("--d", b_d, "minimum distance")->required();
    bounds->add_option("--q", b_q, "prime power q")->required();
    bounds->add_option("--out", b_out, "output file (default stdout)");

    // search
    auto* search = app.add_subcommand("search", "exhaustive maximum d-code search");
    int s_n = 0, s_d = 0;
    long s_q = 0;
    std::string s_out;
    hrdc::SearchLimits s_limits;
    search->add_option("--n", s_n, "matrix dimension")->required();
    search->add_option("--d", s_d, "minimum distance")->required();
    search->add_option("--q", s_q, "prime power q")->required();
    search->add_option("--time-cap", s_limits.time_cap_seconds, "seconds before giving up");
    search->add_option("--node-cap", s_limits.node_cap, "search tree node cap");
    search->add_option("--vertex-cap", s_limits.vertex_cap, "max vertices q^(n^2)");
    search->add_option("--out", s_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a built-in verification suite");
    std::string v_suite, v_out;
    verify->add_option("suite", v_suite, "identities | constructions | distributions | all")
        ->required();
    verify->add_option("--out", v_out, "output file (default stdout)");

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "construct + serialize + analyze + bounds");
    ConstructArgs p_args;
    std::string p_out_dir;
    bool p_force = false;
    pipeline->add_option("--family", p_args.family, "construction family")->required();
    pipeline->add_option("--n", p_args.n, "matrix dimension")->required();
    pipeline->add_option("--d", p_args.d, "minimum distance (thm41/thm42)");
    pipeline->add_option("--q", p_args.q, "prime power q")->required();
    pipeline->add_option("--matrix-cap", p_args.matrix_cap, "materialization cap");
    pipeline->add_option("--out-dir", p_out_dir, "run directory")->required();
    pipeline->add_flag("--force", p_force, "overwrite existing artifacts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    hrdc::set_max_threads(threads);

    int rc = kExitOk;
    try {
        if (eigen->parsed()) {
            hrdc::QTable table = e_method == "explicit"     ? hrdc::q_explicit(e_n, e_q)
                                 : e_method == "recurrence" ? hrdc::q_recurrence(e_n, e_q)
                                                            : hrdc::q_direct(e_n, e_q);
            if (e_format == "json") {
                emit(hrdc::qtable_to_json(table), e_out);
            } else {
                std::string text;
                for (int k = 0; k <= table.n; ++k) {
                    for (int i = 0; i <= table.n; ++i) {
                        if (i) text += ",";
                        text += table.at(k, i).get_str();
                    }
                    text += "\n";
                }
                if (e_out.empty()) {
                    std::cout << text;
                } else {
                    std::ofstream os(e_out, std::ios::binary);
                    if (!os) throw std::runtime_error("cannot open output file: " + e_out);
                    os << text;
                }
            }
        } else if (construct->parsed()) {
            cmd_construct(c_args);
        } else if (analyze->parsed()) {
            std::ifstream is(a_in);
            if (!is) throw std::runtime_error("cannot open input file: " + a_in);
            hrdc::CodeSet y = hrdc::read_code_jsonl(is);
            emit(hrdc::analysis_to_json(y), a_out);
        } else if (bounds->parsed()) {
            emit(hrdc::bound_report_to_json(hrdc::full_bound_report(b_n, b_d, b_q)), b_out);
        } else if (search->parsed()) {
            emit(hrdc::search_result_to_json(hrdc::max_code_search(s_n, s_q, s_d, s_limits)), s_out);
        } else if (verify->parsed()) {
            rc = cmd_verify(v_suite, v_out);
        } else if (pipeline->parsed()) {
            rc = cmd_pipeline(p_args, p_out_dir, p_force);
        }
    } catch (const hrdc::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        rc = kExitCapExceeded;
    } catch (const hrdc::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        rc = kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        rc = kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitVerifyFailure;
    }
    hrdc::cache::flush();
    return rc;
}
