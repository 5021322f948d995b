// Command-line front end: characters, homology tables, Weyl-group data,
// Casimir eigenvalues, verification suites, and JSON-lines batch mode.
//
// Exit codes: 0 on success / all checks passing, 1 on a mathematical
// mismatch, 2 on a usage error.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "howe/json_io.hpp"
#include "howe/kostant.hpp"

using namespace howe;
using nlohmann::json;

namespace {

constexpr unsigned long kDefaultSeed = 20240613UL;

struct CommonFlags {
    std::string side = "classical";
    std::string type = "c";
    long d = 2;
    long p = 0, q = 0, m = 0, n = 0;
    long degree = 5;
    long N = 0;
    std::string lambda = "-";
    bool as_json = false;

    void attach(CLI::App* cmd, bool with_lambda = true) {
        cmd->add_option("--side", side, "classical | super | negative")
            ->check(CLI::IsMember({"classical", "super", "negative"}));
        cmd->add_option("--type", type, "a | b | c | d | b0")
            ->check(CLI::IsMember({"a", "b", "c", "d", "b0"}));
        cmd->add_option("--d", d, "rank of the dual group");
        cmd->add_option("--p", p);
        cmd->add_option("--q", q);
        cmd->add_option("--m", m);
        cmd->add_option("--n", n);
        cmd->add_option("--degree", degree, "truncation degree D (default 5)");
        cmd->add_option("--N", N, "module alphabet size (default: degree)");
        if (with_lambda)
            cmd->add_option("--lambda", lambda, "partition, e.g. 3,1 ('-' for the empty one)");
        cmd->add_flag("--json", as_json, "emit JSON");
    }

    DualPairSpec spec() const {
        DualPairSpec s;
        s.side = side_parse(side);
        s.x = tag_parse(type);
        s.d = d;
        s.p = p;
        s.q = q;
        s.m = m;
        s.n = n;
        s.D = degree;
        s.N = N;
        std::string why;
        require(admissible(s, &why), "inadmissible dual pair: " + why);
        return s;
    }
};

void print_series(const Series& s, bool as_json) {
    if (as_json)
        std::cout << series_to_json(s).dump() << "\n";
    else
        std::cout << s.str() << "\n";
}

int cmd_char(const CommonFlags& f, bool hatted) {
    DualPairSpec spec = f.spec();
    PairSetup ps = PairSetup::make(spec);
    Series ch(ps.ctx, spec.D);
    if (spec.x == Tag::a && spec.side != Side::negative) {
        GeneralizedPartition lam = GeneralizedPartition::parse(f.lambda, spec.d);
        ch = spec.side == Side::classical ? classical_module_char_a(ps, lam, spec.D)
                                          : super_module_char_a(ps, lam, spec.D, hatted);
    } else {
        Partition lam = Partition::parse(f.lambda);
        switch (spec.side) {
            case Side::classical: ch = classical_module_char(ps, lam, spec.D); break;
            case Side::super_side: ch = super_module_char(ps, lam, spec.D, hatted); break;
            case Side::negative: ch = negative_module_char(ps, lam, spec.D); break;
        }
    }
    print_series(ch, f.as_json);
    return 0;
}

int cmd_homology(const CommonFlags& f, long k, bool hatted) {
    DualPairSpec spec = f.spec();
    PairSetup ps = PairSetup::make(spec);
    bool type_a = (spec.x == Tag::a && spec.side != Side::negative);
    std::optional<HomologyChar> H;
    if (type_a) {
        GeneralizedPartition lam = GeneralizedPartition::parse(f.lambda, spec.d);
        H = spec.side == Side::classical ? classical_homology_char_a(ps, lam, k, spec.D)
                                         : super_homology_char_a(ps, lam, k, spec.D, hatted);
    } else {
        Partition lam = Partition::parse(f.lambda);
        switch (spec.side) {
            case Side::classical: H = classical_homology_char(ps, lam, k, spec.D); break;
            case Side::super_side: H = super_homology_char(ps, lam, k, spec.D, hatted); break;
            case Side::negative: H = negative_homology_char(ps, lam, k, spec.D); break;
        }
    }
    if (f.as_json) {
        json contributors = json::array();
        for (const Contributor& c : H->contributors)
            contributors.push_back(contributor_to_json(c, type_a, H->paired));
        json out = {{"k", k}, {"character", series_to_json(H->ch)}, {"contributors", contributors}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "H_" << k << " contributors:\n";
        for (const Contributor& c : H->contributors) {
            std::cout << "  w=" << c.w.one_line();
            if (type_a)
                std::cout << " lambda_w+=" << c.lw.str() << " lambda_w-=" << c.lw_minus.str();
            else
                std::cout << " lambda_w=" << c.lw.str();
            if (H->paired) std::cout << " lambda_w~=" << c.lw_minus.str();
            if (!c.kept) std::cout << " (filtered)";
            std::cout << "\n";
        }
        std::cout << "ch = " << H->ch.str() << "\n";
    }
    return 0;
}

int cmd_weyl(const std::string& type, int kmax, const std::string& lambda, long d, bool as_json) {
    Tag tag = tag_parse(type);
    auto reps = enumerate_coset_reps(tag, kmax);
    std::optional<WeightCoords> Lam;
    if (tag == Tag::a)
        Lam = lambda_classical_a(GeneralizedPartition::parse(lambda, d), d);
    else if (tag == Tag::b0)
        Lam = std::nullopt;  // b0 carries no positive-level dominant weights
    else
        Lam = lambda_classical(tag, Partition::parse(lambda), d);
    json layers = json::array();
    for (std::size_t k = 0; k < reps.size(); ++k) {
        for (const GroupElement& w : reps[k]) {
            json row = {{"k", k}, {"w", w.one_line()}, {"length", coxeter_length(w)}};
            if (Lam) {
                WeightCoords wL = dot_action(w, *Lam);
                if (tag == Tag::a) {
                    auto [lp, lm] = extract_lambda_w_a(wL);
                    row["lambda_w_plus"] = lp.str();
                    row["lambda_w_minus"] = lm.str();
                } else {
                    row["lambda_w"] = extract_lambda_w(wL).str();
                }
            }
            layers.push_back(row);
            if (!as_json) {
                std::cout << "k=" << k << " w=" << w.one_line();
                if (Lam) {
                    if (tag == Tag::a)
                        std::cout << " lambda_w+=" << row["lambda_w_plus"].get<std::string>()
                                  << " lambda_w-=" << row["lambda_w_minus"].get<std::string>();
                    else
                        std::cout << " lambda_w=" << row["lambda_w"].get<std::string>();
                }
                std::cout << "\n";
            }
        }
    }
    if (as_json) std::cout << layers.dump() << "\n";
    return 0;
}

int cmd_casimir(const CommonFlags& f, bool run_lemmas, unsigned long seed, bool& all_ok) {
    if (run_lemmas) {
        std::vector<CheckResult> results;
        for (Tag t : {Tag::a, Tag::b, Tag::c, Tag::d})
            results.push_back(verify_casimir_lemma(t, f.p, f.q, std::max(f.m, 1L), std::max(f.n, 1L),
                                                   f.d, seed));
        results.push_back(verify_casimir_lemma_negative(Tag::b, f.d, seed));
        results.push_back(verify_casimir_lemma_negative(Tag::c, f.d, seed));
        for (Tag t : {Tag::a, Tag::b, Tag::c, Tag::d, Tag::b0})
            results.push_back(verify_casimir_dot_invariance(t, 3, seed));
        for (const CheckResult& r : results) {
            all_ok = all_ok && r.ok;
            if (f.as_json)
                std::cout << check_result_to_json(r).dump() << "\n";
            else {
                std::cout << (r.ok ? "ok   " : "FAIL ") << r.check;
                for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
                std::cout << "\n";
            }
        }
        return 0;
    }
    Tag tag = tag_parse(f.type);
    json out;
    if (tag == Tag::a) {
        GeneralizedPartition lam = GeneralizedPartition::parse(f.lambda, f.d);
        WeightCoords L = lambda_classical_a(lam, f.d);
        out["classical"] = rat_str(casimir_c(L));
        SuperTag st{tag, f.p, f.q, f.m, f.n};
        SuperWeight sw = lambda_super_f_a(st, lam, f.d);
        out["super"] = rat_str(casimir_s(sw));
        out["weight"] = weight_to_json(L);
        out["super_weight"] = super_weight_to_json(sw);
    } else {
        Partition lam = Partition::parse(f.lambda);
        WeightCoords L = (f.side == "negative") ? lambda_negative(tag, lam, f.d)
                                                : lambda_classical(tag, lam, f.d);
        out["classical"] = rat_str(casimir_c(L));
        out["weight"] = weight_to_json(L);
        if (f.side != "negative" && (f.m > 0 || f.n > 0)) {
            SuperTag st{tag, 0, 0, f.m, f.n};
            SuperWeight sw = lambda_super_f(st, lam, f.d);
            out["super"] = rat_str(casimir_s(sw));
            out["super_weight"] = super_weight_to_json(sw);
        }
    }
    if (f.as_json)
        std::cout << out.dump() << "\n";
    else {
        std::cout << "casimir_c = " << out["classical"].get<std::string>() << "\n";
        if (out.contains("super")) std::cout << "casimir_s = " << out["super"].get<std::string>() << "\n";
    }
    return 0;
}

// One verify suite over the given parameters; returns the accumulated results.
std::vector<CheckResult> run_verify_suite(const std::string& suite, const DualPairSpec& spec,
                                          long max_lambda, long kmax, unsigned long seed) {
    std::vector<CheckResult> out;
    bool type_a = (spec.x == Tag::a && spec.side != Side::negative);
    auto lambda_grid_a = [&]() {
        std::vector<GeneralizedPartition> grid;
        for (const GeneralizedPartition& lam : generalized_partitions_up_to(max_lambda, spec.d)) {
            if (spec.side == Side::super_side) {
                if (spec.m + 1 <= spec.d && lam.part(static_cast<std::size_t>(spec.m + 1)) > spec.n)
                    continue;
                if (spec.d - spec.p >= 1 && lam.part(static_cast<std::size_t>(spec.d - spec.p)) < -spec.q)
                    continue;
            }
            grid.push_back(lam);
        }
        return grid;
    };
    auto lambda_grid = [&]() {
        std::vector<Partition> grid;
        DualGroup g = dual_group(spec);
        for (const Partition& lam : partitions_up_to(max_lambda)) {
            if (!in_parameter_set(g, lam)) continue;
            if (spec.side == Side::super_side && !is_hook(lam, spec.m, spec.n)) continue;
            grid.push_back(lam);
        }
        return grid;
    };
    if (suite == "duality") {
        out.push_back(verify_duality(spec));
    } else if (suite == "euler") {
        if (type_a)
            for (const auto& lam : lambda_grid_a()) out.push_back(verify_euler_poincare_a(spec, lam));
        else
            for (const auto& lam : lambda_grid()) out.push_back(verify_euler_poincare(spec, lam));
    } else if (suite == "omega") {
        require(spec.side == Side::super_side, "omega transport applies to the super side");
        if (type_a) {
            for (const auto& lam : lambda_grid_a())
                for (long k = 0; k <= kmax; ++k) out.push_back(verify_omega_transport_a(spec, lam, k));
        } else {
            for (const auto& lam : lambda_grid())
                for (long k = 0; k <= kmax; ++k) out.push_back(verify_omega_transport(spec, lam, k));
        }
    } else if (suite == "casimir") {
        for (Tag t : {Tag::a, Tag::b, Tag::c, Tag::d})
            out.push_back(verify_casimir_lemma(t, spec.p, spec.q, std::max(spec.m, 1L),
                                               std::max(spec.n, 1L), spec.d, seed));
        out.push_back(verify_casimir_lemma_negative(Tag::b, spec.d, seed));
        out.push_back(verify_casimir_lemma_negative(Tag::c, spec.d, seed));
        for (Tag t : {Tag::a, Tag::b, Tag::c, Tag::d, Tag::b0})
            out.push_back(verify_casimir_dot_invariance(t, static_cast<int>(kmax), seed));
    } else {
        fail("unknown verify suite: " + suite);
    }
    return out;
}

json job_to_result(const json& job, unsigned long default_seed);

int cmd_batch(const std::string& file, unsigned long seed) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open batch file: " << file << "\n";
        return 2;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);

    std::vector<json> results(lines.size());
    std::atomic<std::size_t> next{0};
    int nthreads = std::min<int>(thread_count(), std::max<int>(1, static_cast<int>(lines.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= lines.size()) break;
                json result;
                try {
                    json job = json::parse(lines[i]);
                    result = job_to_result(job, seed);
                } catch (const std::exception& e) {
                    result = {{"ok", false}, {"error", e.what()}};
                }
                result["line"] = i + 1;
                results[i] = result;
            }
        });
    for (auto& th : pool) th.join();

    std::size_t passed = 0;
    for (const json& r : results) {
        std::cout << r.dump() << "\n";
        if (r.value("ok", false)) ++passed;
    }
    std::cout << json({{"summary", {{"jobs", lines.size()}, {"ok", passed}}}}).dump() << "\n";
    return passed == lines.size() ? 0 : 1;
}

json job_to_result(const json& job, unsigned long default_seed) {
    std::string command = job.at("command").get<std::string>();
    DualPairSpec spec;
    spec.side = side_parse(job.value("side", std::string("classical")));
    spec.x = tag_parse(job.value("type", std::string("c")));
    spec.d = job.value("d", 2L);
    spec.p = job.value("p", 0L);
    spec.q = job.value("q", 0L);
    spec.m = job.value("m", 0L);
    spec.n = job.value("n", 0L);
    spec.D = job.value("degree", 5L);
    spec.N = job.value("N", 0L);
    std::string why;
    require(admissible(spec, &why), "inadmissible dual pair: " + why);
    unsigned long seed = job.value("seed", default_seed);
    if (command == "verify") {
        std::string suite = job.value("suite", std::string("duality"));
        auto results = run_verify_suite(suite, spec, job.value("max_lambda", 3L),
                                        job.value("kmax", 3L), seed);
        bool ok = true;
        json checks = json::array();
        for (const CheckResult& r : results) {
            ok = ok && r.ok;
            checks.push_back(check_result_to_json(r));
        }
        return {{"ok", ok}, {"checks", checks}};
    }
    if (command == "char" || command == "homology") {
        PairSetup ps = PairSetup::make(spec);
        std::string lam = job.value("lambda", std::string("-"));
        long k = job.value("k", 0L);
        bool type_a = (spec.x == Tag::a && spec.side != Side::negative);
        if (command == "char") {
            Series ch(ps.ctx, spec.D);
            if (type_a) {
                GeneralizedPartition gp = GeneralizedPartition::parse(lam, spec.d);
                ch = spec.side == Side::classical ? classical_module_char_a(ps, gp, spec.D)
                                                  : super_module_char_a(ps, gp, spec.D, false);
            } else {
                Partition p = Partition::parse(lam);
                switch (spec.side) {
                    case Side::classical: ch = classical_module_char(ps, p, spec.D); break;
                    case Side::super_side: ch = super_module_char(ps, p, spec.D, false); break;
                    case Side::negative: ch = negative_module_char(ps, p, spec.D); break;
                }
            }
            return {{"ok", true}, {"character", series_to_json(ch)}};
        }
        json contributors = json::array();
        std::optional<HomologyChar> H;
        if (type_a) {
            GeneralizedPartition gp = GeneralizedPartition::parse(lam, spec.d);
            H = spec.side == Side::classical ? classical_homology_char_a(ps, gp, k, spec.D)
                                             : super_homology_char_a(ps, gp, k, spec.D, false);
        } else {
            Partition p = Partition::parse(lam);
            switch (spec.side) {
                case Side::classical: H = classical_homology_char(ps, p, k, spec.D); break;
                case Side::super_side: H = super_homology_char(ps, p, k, spec.D, false); break;
                case Side::negative: H = negative_homology_char(ps, p, k, spec.D); break;
            }
        }
        for (const Contributor& c : H->contributors)
            contributors.push_back(contributor_to_json(c, type_a, H->paired));
        return {{"ok", true}, {"character", series_to_json(H->ch)}, {"contributors", contributors}};
    }
    fail("unknown batch command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters and Kostant u_- homology of oscillator modules via Howe duality"};
    app.require_subcommand(1);

    CommonFlags fchar, fhom, fcas, fver;
    bool hatted_char = false, hatted_hom = false;
    long hom_k = 0;

    CLI::App* c_char = app.add_subcommand("char", "module character ch L");
    fchar.attach(c_char);
    c_char->add_flag("--hatted", hatted_char, "suppress the super monomial prefactor");

    CLI::App* c_hom = app.add_subcommand("homology", "u_- homology character ch H_k");
    fhom.attach(c_hom);
    c_hom->add_option("--k", hom_k, "homological degree")->required();
    c_hom->add_flag("--hatted", hatted_hom, "suppress the super monomial prefactor");

    std::string w_type = "c", w_lambda = "-";
    int w_kmax = 2;
    long w_d = 2;
    bool w_json = false;
    CLI::App* c_weyl = app.add_subcommand("weyl", "minimal coset representatives W^0_k");
    c_weyl->add_option("--type", w_type)->check(CLI::IsMember({"a", "b", "c", "d", "b0"}));
    c_weyl->add_option("--kmax", w_kmax);
    c_weyl->add_option("--lambda", w_lambda);
    c_weyl->add_option("--d", w_d);
    c_weyl->add_flag("--json", w_json);

    bool cas_lemmas = false;
    unsigned long cas_seed = kDefaultSeed;
    CLI::App* c_cas = app.add_subcommand("casimir", "Casimir eigenvalues and lemma verdicts");
    fcas.attach(c_cas);
    c_cas->add_flag("--lemmas", cas_lemmas, "run the seeded lemma suite");
    c_cas->add_option("--seed", cas_seed);

    std::string v_suite = "duality";
    long v_max_lambda = 3, v_kmax = 3;
    unsigned long v_seed = kDefaultSeed;
    CLI::App* c_ver = app.add_subcommand("verify", "verify identities; exit 0 iff all pass");
    fver.attach(c_ver, false);
    c_ver->add_option("--suite", v_suite)->check(CLI::IsMember({"duality", "euler", "omega", "casimir"}));
    c_ver->add_option("--max-lambda", v_max_lambda);
    c_ver->add_option("--kmax", v_kmax);
    c_ver->add_option("--seed", v_seed);

    std::string b_file;
    unsigned long b_seed = kDefaultSeed;
    CLI::App* c_batch = app.add_subcommand("batch", "run JSON-lines jobs");
    c_batch->add_option("--file", b_file)->required();
    c_batch->add_option("--seed", b_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_char->parsed()) return cmd_char(fchar, hatted_char);
        if (c_hom->parsed()) return cmd_homology(fhom, hom_k, hatted_hom);
        if (c_weyl->parsed()) return cmd_weyl(w_type, w_kmax, w_lambda, w_d, w_json);
        if (c_cas->parsed()) {
            bool all_ok = true;
            int rc = cmd_casimir(fcas, cas_lemmas, cas_seed, all_ok);
            return rc != 0 ? rc : (all_ok ? 0 : 1);
        }
        if (c_ver->parsed()) {
            auto results = run_verify_suite(v_suite, fver.spec(), v_max_lambda, v_kmax, v_seed);
            bool ok = true;
            for (const CheckResult& r : results) {
                ok = ok && r.ok;
                if (fver.as_json)
                    std::cout << check_result_to_json(r).dump() << "\n";
                else {
                    std::cout << (r.ok ? "ok   " : "FAIL ") << r.check;
                    for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
                    if (r.mismatch)
                        std::cout << "  first mismatch at " << r.mismatch->monomial << ": "
                                  << r.mismatch->lhs << " vs " << r.mismatch->rhs;
                    std::cout << "\n";
                }
            }
            return ok ? 0 : 1;
        }
        if (c_batch->parsed()) return cmd_batch(b_file, b_seed);
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
