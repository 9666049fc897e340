#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>
#include <future>
#include <iostream>
#include <sstream>

#include "cedf/cedf.hpp"
#include "cedf/constructions.hpp"
#include "cedf/decomposition.hpp"
#include "cedf/json_io.hpp"
#include "cedf/search.hpp"

namespace {

using namespace cedf;
using nlohmann::json;

// Exit statuses: 0 success/valid, 1 invalid/not-found, 2 usage error,
// 3 inconclusive.
constexpr int kOk = 0;
constexpr int kNotFound = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_cedf(const Cedf& c, bool as_json) {
    if (as_json) {
        std::cout << cedf_to_json(c) << "\n";
        return;
    }
    std::cout << "(" << c.params.v << ", " << c.params.m << ", " << c.params.l << ", "
              << c.params.lambda << ")-CEDF over Z_" << c.params.v << "\n";
    for (size_t i = 0; i < c.blocks.size(); ++i) {
        std::cout << "  A_" << i << " = {";
        for (size_t j = 0; j < c.blocks[i].size(); ++j)
            std::cout << (j ? ", " : "") << c.blocks[i][j];
        std::cout << "}\n";
    }
}

json report_to_json(const VerifyReport& rep) {
    json j;
    j["is_valid"] = rep.is_valid;
    j["disjoint"] = rep.disjoint;
    j["sizes_ok"] = rep.sizes_ok;
    j["multiset_ok"] = rep.multiset_ok;
    j["deviation"] = json::array();
    for (const auto& d : rep.deviation)
        j["deviation"].push_back({{"residue", d.residue}, {"observed", d.observed}, {"expected", d.expected}});
    return j;
}

int cmd_construct(const std::string& kind, const std::vector<i64>& args, bool as_json) {
    Cedf c = [&] {
        if (kind == "l2") return construct_l2(static_cast<int>(args[0]));
        if (kind == "m3") return construct_m3(static_cast<int>(args[0]));
        auto result = construct_prime_field(args[0], static_cast<int>(args[1]), static_cast<int>(args[2]));
        if (!result) throw std::runtime_error("condition not met");
        return *result;
    }();
    print_cedf(c, as_json);
    return kOk;
}

int cmd_verify(const std::string& path, int offset, bool as_json) {
    Cedf c = cedf_from_json(read_input(path));
    VerifyReport rep = verify(c, offset);
    if (as_json)
        std::cout << report_to_json(rep).dump() << "\n";
    else {
        std::cout << (rep.is_valid ? "VALID" : "INVALID") << "\n";
        if (!rep.disjoint) std::cout << "  blocks are not pairwise disjoint\n";
        if (!rep.sizes_ok) std::cout << "  block count or sizes do not match parameters\n";
        for (const auto& d : rep.deviation)
            std::cout << "  residue " << d.residue << ": observed " << d.observed << ", expected "
                      << d.expected << "\n";
    }
    return rep.is_valid ? kOk : kNotFound;
}

int cmd_search(i64 v, int m, int l, int lambda, bool all, double budget, int threads, bool canonical,
               bool as_json) {
    SearchConfig cfg;
    cfg.params = {v, m, l, lambda};
    cfg.max_results = all ? 0 : 1;
    cfg.time_budget_s = budget;
    cfg.threads = threads;
    cfg.canonicalize_output = canonical;
    SearchOutcome out = search_cedf(cfg);

    const char* status = out.status == SearchStatus::found          ? "found"
                         : out.status == SearchStatus::exhausted_none ? "exhausted_none"
                                                                      : "inconclusive";
    if (as_json) {
        json j;
        j["status"] = status;
        j["nodes_explored"] = out.nodes_explored;
        j["results"] = json::array();
        for (const auto& c : out.results) j["results"].push_back(json::parse(cedf_to_json(c)));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << status << " (" << out.results.size() << " result(s), " << out.nodes_explored
                  << " nodes)\n";
        for (const auto& c : out.results) print_cedf(c, false);
    }
    switch (out.status) {
        case SearchStatus::found: return kOk;
        case SearchStatus::exhausted_none: return kNotFound;
        default: return kInconclusive;
    }
}

int cmd_exists(i64 v, int m, int l, int lambda, bool as_json) {
    ExistenceAnswer ans = existence_query(v, m, l, lambda);
    const char* status = ans.status == Existence::exists       ? "exists"
                         : ans.status == Existence::not_exists ? "not_exists"
                                                               : "unknown";
    if (as_json)
        std::cout << json{{"status", status}, {"reason", ans.reason}}.dump() << "\n";
    else
        std::cout << status << " (" << ans.reason << ")\n";
    switch (ans.status) {
        case Existence::exists: return kOk;
        case Existence::not_exists: return kNotFound;
        default: return kInconclusive;
    }
}

int cmd_lemma(int k, const std::string& which, bool as_json) {
    bool ok = true;
    json out = json::array();
    // The published closed form is compared after clipping to the box;
    // the pairs +-(4k, 2k-1) fall outside [2-4k, 4k-2] for every k.
    auto clip = [](CongruenceSolutionSet set, const CongruenceBox& box) {
        std::erase_if(set, [&](const std::pair<i64, i64>& p) {
            return p.first < box.x_lo || p.first > box.x_hi || p.second < box.y_lo ||
                   p.second > box.y_hi;
        });
        return set;
    };
    auto run = [&](const std::string& name, const CongruenceBox& box,
                   const CongruenceSolutionSet& closed_form) {
        CongruenceSolutionSet got = solve_congruence_box(k, box);
        bool match = got == clip(closed_form, box);
        ok = ok && match;
        if (as_json) {
            json pairs = json::array();
            for (const auto& [x, y] : got) pairs.push_back({x, y});
            out.push_back({{"box", name}, {"match", match}, {"solutions", pairs}});
        } else {
            std::cout << "box " << name << ": " << got.size() << " solutions, "
                      << (match ? "MATCH" : "MISMATCH") << "\n";
            for (const auto& [x, y] : got) std::cout << "  (" << x << ", " << y << ")\n";
        }
    };
    if (which.empty() || which == "Z")
        run("Z", CongruenceBox::standard(k), expected_standard_solutions(k));
    if (which.empty() || which == "Zprime")
        run("Zprime", CongruenceBox::shifted(k), expected_shifted_solutions(k));
    if (as_json) std::cout << out.dump() << "\n";
    return ok ? kOk : kNotFound;
}

int cmd_develop(const std::string& path, bool check, const std::string& export_path, bool as_json) {
    Cedf c = cedf_from_json(read_input(path));
    Decomposition dec = develop(c);
    bool valid = true;
    json j;
    j["copies"] = dec.offsets.size();
    if (check) {
        DecompositionReport rep = verify_decomposition(dec);
        valid = rep.valid;
        j["valid"] = rep.valid;
        j["arcs_total"] = rep.arcs_total;
        j["deviations"] = rep.deviations.size();
    }
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        if (!out) throw std::invalid_argument("cannot open export file: " + export_path);
        export_arcs(dec, out);
        j["exported_to"] = export_path;
    }
    if (as_json)
        std::cout << j.dump() << "\n";
    else {
        std::cout << dec.offsets.size() << " copies";
        if (check) std::cout << ", decomposition " << (valid ? "VALID" : "INVALID");
        std::cout << "\n";
    }
    return valid ? kOk : kNotFound;
}

int cmd_table(const std::string& kind, i64 lo, i64 hi, int threads, bool as_json) {
    struct Row {
        i64 param;
        i64 v;
        bool valid;
        double ms;
    };
    std::vector<i64> params;
    for (i64 p = lo; p <= hi; ++p) {
        if (kind == "l2" && (p % 2 == 1 && p > 1)) params.push_back(p);
        if (kind == "m3" && (p % 2 == 0 && p >= 2)) params.push_back(p);
    }
    auto run_one = [&](i64 p) -> Row {
        auto t0 = std::chrono::steady_clock::now();
        Cedf c = kind == "l2" ? construct_l2(static_cast<int>(p)) : construct_m3(static_cast<int>(p));
        bool valid = verify(c).is_valid;
        auto t1 = std::chrono::steady_clock::now();
        return {p, c.params.v, valid, std::chrono::duration<double, std::milli>(t1 - t0).count()};
    };
    std::vector<Row> rows(params.size());
    if (threads > 1) {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= params.size()) return;
                rows[i] = run_one(params[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        for (size_t i = 0; i < params.size(); ++i) rows[i] = run_one(params[i]);
    }
    bool all_valid = true;
    if (as_json) {
        json j = json::array();
        for (const auto& r : rows) {
            j.push_back({{kind == "l2" ? "m" : "l", r.param}, {"v", r.v}, {"valid", r.valid}, {"ms", r.ms}});
            all_valid = all_valid && r.valid;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (kind == "l2" ? "m" : "l") << "\tv\tvalid\tms\n";
        for (const auto& r : rows) {
            std::cout << r.param << "\t" << r.v << "\t" << (r.valid ? "Y" : "N") << "\t" << r.ms << "\n";
            all_valid = all_valid && r.valid;
        }
    }
    return all_valid ? kOk : kNotFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circular external difference families over cyclic groups"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on standard output");

    // construct
    auto* construct = app.add_subcommand("construct", "build a CEDF from one of the constructions");
    i64 l2_m = 0, m3_l = 0;
    std::vector<i64> pf;
    auto* opt_l2 = construct->add_option("--l2", l2_m, "odd m: (4m+1, m, 2, 1)-CEDF");
    auto* opt_m3 = construct->add_option("--m3", m3_l, "even l: (3l^2+1, 3, l, 1)-CEDF");
    auto* opt_pf =
        construct->add_option("--prime-field", pf, "q m l: prime-field CEDF when the coset condition holds")
            ->expected(3);
    opt_l2->excludes(opt_m3)->excludes(opt_pf);
    opt_m3->excludes(opt_pf);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a CEDF from a JSON file (or stdin)");
    std::string verify_file;
    int offset = 1;
    verify_cmd->add_option("file", verify_file, "CEDF JSON file, '-' for stdin");
    verify_cmd->add_option("--offset", offset, "pair A_i with A_{i+offset}");

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive backtracking search");
    i64 sv = 0;
    int sm = 0, sl = 0, slam = 1, threads = 1;
    bool all = false, canonical = false;
    double budget = 0.0;
    search_cmd->add_option("v", sv)->required();
    search_cmd->add_option("m", sm)->required();
    search_cmd->add_option("l", sl)->required();
    search_cmd->add_option("lambda", slam)->required();
    search_cmd->add_flag("--all", all, "enumerate every solution");
    search_cmd->add_flag("--canonical", canonical, "deduplicate results up to symmetry");
    search_cmd->add_option("--budget", budget, "wall-clock budget in seconds");
    search_cmd->add_option("--threads", threads, "worker threads (split on A_0)");

    // exists
    auto* exists_cmd = app.add_subcommand("exists", "existence query from the settled theorems");
    i64 ev = 0;
    int em = 0, el = 0, elam = 1;
    exists_cmd->add_option("v", ev)->required();
    exists_cmd->add_option("m", em)->required();
    exists_cmd->add_option("l", el)->required();
    exists_cmd->add_option("lambda", elam)->required();

    // lemma
    auto* lemma_cmd = app.add_subcommand("lemma", "congruence-box oracle (brute force vs closed form)");
    int lk = 0;
    std::string box;
    lemma_cmd->add_option("k", lk)->required()->check(CLI::Range(2, 1 << 20));
    lemma_cmd->add_option("--box", box, "Z or Zprime (default: both)")
        ->check(CLI::IsMember({"Z", "Zprime"}));

    // develop
    auto* develop_cmd = app.add_subcommand("develop", "develop a CEDF into a decomposition of lambda*K*_v");
    std::string develop_file, export_path;
    bool check = false;
    develop_cmd->add_option("file", develop_file, "CEDF JSON file, '-' for stdin");
    develop_cmd->add_flag("--check", check, "verify the decomposition exactly");
    develop_cmd->add_option("--export", export_path, "write the arc list to a file");

    // table
    auto* table_cmd = app.add_subcommand("table", "construct + verify over a parameter range");
    i64 t_lo = 0, t_hi = 0;
    std::vector<i64> t_l2, t_m3;
    int t_threads = 1;
    auto* t_opt_l2 = table_cmd->add_option("--l2", t_l2, "m_min m_max")->expected(2);
    auto* t_opt_m3 = table_cmd->add_option("--m3", t_m3, "l_min l_max")->expected(2);
    t_opt_l2->excludes(t_opt_m3);
    table_cmd->add_option("--threads", t_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*construct) {
            if (*opt_l2) return cmd_construct("l2", {l2_m}, as_json);
            if (*opt_m3) return cmd_construct("m3", {m3_l}, as_json);
            if (*opt_pf) return cmd_construct("prime-field", pf, as_json);
            std::cerr << "construct: one of --l2, --m3, --prime-field is required\n";
            return kUsage;
        }
        if (*verify_cmd) return cmd_verify(verify_file, offset, as_json);
        if (*search_cmd) return cmd_search(sv, sm, sl, slam, all, budget, threads, canonical, as_json);
        if (*exists_cmd) return cmd_exists(ev, em, el, elam, as_json);
        if (*lemma_cmd) return cmd_lemma(lk, box, as_json);
        if (*develop_cmd) return cmd_develop(develop_file, check, export_path, as_json);
        if (*table_cmd) {
            std::string kind = !t_l2.empty() ? "l2" : "m3";
            const auto& range = !t_l2.empty() ? t_l2 : t_m3;
            if (range.empty()) {
                std::cerr << "table: one of --l2, --m3 is required\n";
                return kUsage;
            }
            t_lo = range[0];
            t_hi = range[1];
            return cmd_table(kind, t_lo, t_hi, t_threads, as_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNotFound;
    }
    return kUsage;
}
