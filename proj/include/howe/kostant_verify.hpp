#pragma once

// Machine verification of the duality identities, Euler-Poincare relations,
// omega-transport statements and Casimir lemmas.

#include <atomic>
#include <random>
#include <set>

#include "howe/kostant.hpp"
#include "howe/kostant_negative.hpp"
#include "howe/kostant_super.hpp"

namespace howe {

struct MismatchInfo {
    std::string monomial;
    std::string lhs, rhs;
};

struct CheckResult {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    long degree = 0;
    bool ok = false;
    std::optional<MismatchInfo> mismatch;
    std::vector<std::string> contributors;
    std::string error;  // non-empty when the check aborted
};

inline int thread_count() {
    if (const char* env = std::getenv("HOWE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace detail {

// Evaluate jobs in parallel and fold the results in index order, so reports
// and sums are reproducible regardless of scheduling.
inline std::vector<Series> parallel_series(const std::vector<std::function<Series()>>& jobs) {
    int nthreads = std::min<int>(thread_count(), static_cast<int>(jobs.size()) > 0 ? static_cast<int>(jobs.size()) : 1);
    std::vector<std::optional<Series>> results(jobs.size());
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t]() {
                try {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= jobs.size()) break;
                        results[i] = jobs[i]();
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<Series> out;
    out.reserve(jobs.size());
    for (auto& r : results) out.push_back(std::move(*r));
    return out;
}

inline long min_module_degree2(const Series& s) {
    require(!s.is_zero(), "min degree of zero series");
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        long d = s.half_degree(e);
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

inline void finish_compare(CheckResult& res, const Series& lhs, const Series& rhs) {
    auto mm = Series::first_mismatch(lhs, rhs);
    res.ok = !mm.has_value();
    if (mm) {
        auto& [e, cl, cr] = *mm;
        std::string mono = lhs.monomial_str(e);
        res.mismatch = MismatchInfo{mono.empty() ? "1" : mono, rat_str(cl), rat_str(cr)};
    }
}

// Enumerations of the parameter sets, bounded by size.
inline std::vector<Partition> enum_group_partitions(const DualGroup& g, long maxsize) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_up_to(maxsize))
        if (in_parameter_set(g, p)) out.push_back(p);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Product sides of the duality identities.

inline Series duality_product_side(const PairSetup& ps) {
    const DualPairSpec& s = ps.spec;
    long D = s.D;
    std::vector<ProductFactor> fs;
    Series probe(ps.ctx, D);
    auto mono_zx = [&](int mvar, int zvar, int zexp, bool with_eps = false) {
        Expo e = probe.zero_expo();
        probe.set_exp(e, mvar, 1);
        if (zvar >= 0) probe.set_exp(e, zvar, zexp);
        if (with_eps) probe.set_exp(e, ps.epsvar, 1);
        return e;
    };
    bool odd_o = (dual_group(s).family == GroupFamily::O && s.d % 2 != 0);
    bool pin = (dual_group(s).family == GroupFamily::Pin);

    if (s.side == Side::classical) {
        if (s.x == Tag::a) {
            for (int z : ps.zvars)
                for (std::size_t n = 0; n < ps.xvars.size(); ++n) {
                    fs.push_back({mono_zx(ps.xvars[n], z, 1), +1, +1});
                    fs.push_back({mono_zx(ps.uvars[n], z, -1), +1, +1});
                }
        } else {
            for (int z : ps.zvars)
                for (int x : ps.xvars) {
                    fs.push_back({mono_zx(x, z, 1, odd_o), +1, +1});
                    fs.push_back({mono_zx(x, z, -1, odd_o), +1, +1});
                }
            if (odd_o)
                for (int x : ps.xvars) fs.push_back({mono_zx(x, -1, 0, true), +1, +1});
        }
    } else if (s.side == Side::super_side) {
        if (s.x == Tag::a) {
            for (int z : ps.zvars) {
                for (int eb : ps.ebvars) fs.push_back({mono_zx(eb, z, -1), +1, +1});
                for (int xi : ps.xivars) fs.push_back({mono_zx(xi, z, 1), +1, +1});
                for (int xb : ps.xbvars) fs.push_back({mono_zx(xb, z, -1), -1, -1});
                for (int y : ps.yvars) fs.push_back({mono_zx(y, z, 1), -1, -1});
            }
        } else {
            for (int z : ps.zvars)
                for (int o : ps.ovars) {
                    fs.push_back({mono_zx(o, z, 1, odd_o), +1, +1});
                    fs.push_back({mono_zx(o, z, -1, odd_o), +1, +1});
                }
            for (int z : ps.zvars)
                for (int e : ps.evars) {
                    fs.push_back({mono_zx(e, z, 1, odd_o), -1, -1});
                    fs.push_back({mono_zx(e, z, -1, odd_o), -1, -1});
                }
            if (odd_o) {
                for (int o : ps.ovars) fs.push_back({mono_zx(o, -1, 0, true), +1, +1});
                for (int e : ps.evars) fs.push_back({mono_zx(e, -1, 0, true), -1, -1});
            }
        }
    } else {  // negative
        for (int z : ps.zvars)
            for (int x : ps.xvars) {
                fs.push_back({mono_zx(x, z, 1, odd_o), -1, -1});
                fs.push_back({mono_zx(x, z, -1, odd_o), -1, -1});
            }
        if (odd_o)
            for (int x : ps.xvars) fs.push_back({mono_zx(x, -1, 0, true), -1, -1});
    }
    Series prod = expand_product(ps.ctx, D, fs);
    if (pin) {
        // One factor (z_i^{1/2} + z_i^{-1/2}) per z-variable.
        for (int z : ps.zvars) {
            Series f(ps.ctx, D);
            Expo e = f.zero_expo();
            f.set_exp(e, z, Rat(1, 2));
            f.add_term(e, 1);
            f.set_exp(e, z, Rat(-1, 2));
            f.add_term(e, 1);
            prod = prod * f;
        }
    }
    return prod;
}

// ---------------------------------------------------------------------------
// Sum sides and the duality verdict.

inline CheckResult verify_duality(const DualPairSpec& spec) {
    CheckResult res;
    res.check = "duality";
    res.degree = spec.D;
    res.params = {{"side", side_name(spec.side)}, {"type", tag_name(spec.x)},
                  {"d", std::to_string(spec.d)}};
    if (spec.side == Side::super_side)
        for (auto [k, v] : std::initializer_list<std::pair<const char*, long>>{
                 {"p", spec.p}, {"q", spec.q}, {"m", spec.m}, {"n", spec.n}})
            res.params.emplace_back(k, std::to_string(v));

    PairSetup ps = PairSetup::make(spec);
    long D = spec.D;
    Series lhs = duality_product_side(ps);

    std::vector<std::function<Series()>> jobs;
    auto check_lowest = [D](const Series& chL, long base) {
        if (!chL.is_zero()) {
            long lowest2 = detail::min_module_degree2(chL);
            require(lowest2 == 2 * base, "ch L must start exactly in degree |lambda|");
        } else {
            require(base > D, "ch L vanished below the truncation degree");
        }
    };

    DualGroup g = dual_group(spec);
    if (g.family == GroupFamily::GL) {
        for (const GeneralizedPartition& lam : generalized_partitions_up_to(D, spec.d)) {
            if (spec.side == Side::super_side) {
                if (spec.m + 1 <= spec.d &&
                    lam.part(static_cast<std::size_t>(spec.m + 1)) > spec.n)
                    continue;
                if (spec.d - spec.p >= 1 &&
                    lam.part(static_cast<std::size_t>(spec.d - spec.p)) < -spec.q)
                    continue;
            }
            jobs.push_back([&ps, lam, D, &check_lowest]() {
                long base = detail::base_size_a(lam);
                Series chL = ps.spec.side == Side::super_side
                                 ? super_module_char_a(ps, lam, D, /*hatted=*/true)
                                 : classical_module_char_a(ps, lam, D);
                check_lowest(chL, base);
                return chL * char_gl(ps.ctx, D, ps.zvars, lam);
            });
        }
    } else {
        bool paired = (spec.side == Side::super_side && spec.x == Tag::d && spec.d % 2 == 0) ||
                      (spec.side == Side::negative && spec.x == Tag::c && spec.d % 2 == 0);
        for (const Partition& lam : detail::enum_group_partitions(g, D)) {
            if (spec.side == Side::super_side && !is_hook(lam, spec.m, spec.n)) continue;
            if (paired) {
                // Enumerate unordered pairs {lambda, lambda-tilde} once, via the
                // member with the shorter first column. The hook condition is
                // pair-stable exactly when n >= 1, which the paired character
                // formulas rely on.
                if (2 * lam.conjugate().part(1) > spec.d) continue;
                if (spec.side == Side::super_side)
                    require(spec.n >= 1, "paired super verification needs n >= 1");
            }
            jobs.push_back([&ps, lam, D, &check_lowest]() {
                Series chL = ps.spec.side == Side::super_side
                                 ? super_module_char(ps, lam, D, /*hatted=*/true)
                                 : (ps.spec.side == Side::negative ? negative_module_char(ps, lam, D)
                                                                   : classical_module_char(ps, lam, D));
                check_lowest(chL, lam.size());
                return chL * ps.group_char(lam, D);
            });
        }
    }

    std::vector<Series> terms = detail::parallel_series(jobs);
    Series rhs(ps.ctx, D);
    for (const Series& t : terms) rhs += t;
    detail::finish_compare(res, lhs, rhs);
    return res;
}

// ---------------------------------------------------------------------------
// Euler-Poincare consistency for one lambda.

inline CheckResult verify_euler_poincare(const DualPairSpec& spec, const Partition& lam) {
    CheckResult res;
    res.check = "euler_poincare";
    res.degree = spec.D;
    res.params = {{"side", side_name(spec.side)},
                  {"type", tag_name(spec.x)},
                  {"d", std::to_string(spec.d)},
                  {"lambda", lam.str()}};
    PairSetup ps = PairSetup::make(spec);
    long D = spec.D;
    Series alt(ps.ctx, D);
    Series chL(ps.ctx, D);
    Series den(ps.ctx, D);
    for (long k = 0; lam.size() + k <= D; ++k) {
        HomologyChar H = spec.side == Side::classical
                             ? classical_homology_char(ps, lam, k, D)
                             : (spec.side == Side::super_side
                                    ? super_homology_char(ps, lam, k, D, /*hatted=*/true)
                                    : negative_homology_char(ps, lam, k, D));
        alt += (k % 2 == 0) ? H.ch : -H.ch;
        for (const Contributor& c : H.contributors)
            res.contributors.push_back("k=" + std::to_string(k) + " w=" + c.w.one_line() +
                                       " lw=" + c.lw.str());
    }
    switch (spec.side) {
        case Side::classical:
            chL = classical_module_char(ps, lam, D);
            den = classical_denominator(ps, D);
            break;
        case Side::super_side:
            chL = super_module_char(ps, lam, D, /*hatted=*/true);
            den = super_denominator(ps, D);
            break;
        case Side::negative:
            chL = negative_module_char(ps, lam, D);
            den = negative_denominator(ps, D);
            break;
    }
    detail::finish_compare(res, alt, chL * den);
    return res;
}

inline CheckResult verify_euler_poincare_a(const DualPairSpec& spec, const GeneralizedPartition& lam) {
    CheckResult res;
    res.check = "euler_poincare";
    res.degree = spec.D;
    res.params = {{"side", side_name(spec.side)},
                  {"type", "a"},
                  {"d", std::to_string(spec.d)},
                  {"lambda", lam.str()}};
    PairSetup ps = PairSetup::make(spec);
    long D = spec.D;
    long base = detail::base_size_a(lam);
    Series alt(ps.ctx, D);
    for (long k = 0; base + k <= D; ++k) {
        HomologyChar H = spec.side == Side::super_side
                             ? super_homology_char_a(ps, lam, k, D, /*hatted=*/true)
                             : classical_homology_char_a(ps, lam, k, D);
        alt += (k % 2 == 0) ? H.ch : -H.ch;
    }
    Series chL = spec.side == Side::super_side ? super_module_char_a(ps, lam, D, /*hatted=*/true)
                                               : classical_module_char_a(ps, lam, D);
    Series den = spec.side == Side::super_side ? super_denominator(ps, D) : classical_denominator(ps, D);
    detail::finish_compare(res, alt, chL * den);
    return res;
}

// ---------------------------------------------------------------------------
// Omega transport: ch H_k(ubar_-) = omega^x(ch H_k(u_-)), via the composite
// pipeline (Schur decomposition, conjugating partial twist, relabel, evaluate).

namespace detail {

// Joint Schur decomposition over two disjoint alphabets.
inline std::map<std::pair<Partition, Partition>, Int> schur_decompose2(const Series& p,
                                                                       const std::vector<int>& va,
                                                                       const std::vector<int>& vb) {
    std::map<std::pair<Partition, Partition>, Int> out;
    Series rem = p;
    while (!rem.is_zero()) {
        const auto& [e, c] = rem.leading();
        auto read = [&](const std::vector<int>& vars) {
            std::vector<long> parts;
            for (int v : vars) {
                int32_t x = e[static_cast<std::size_t>(v)];
                require(x >= 0 && x % 2 == 0, "decompose2: non-partition leading exponent");
                parts.push_back(x / 2);
            }
            for (std::size_t i = 0; i + 1 < parts.size(); ++i)
                require(parts[i] >= parts[i + 1], "decompose2: non-symmetric leading term");
            return Partition(std::move(parts));
        };
        Partition la = read(va), lb = read(vb);
        require(rat_is_int(c), "decompose2: non-integer coefficient");
        Int ci = c.get_num();
        out[{la, lb}] += ci;
        rem -= (schur_poly(rem.ctx(), rem.degree_bound(), va, la) *
                schur_poly(rem.ctx(), rem.degree_bound(), vb, lb)) *
               Rat(ci);
        if (out[{la, lb}] == 0) out.erase({la, lb});
    }
    return out;
}

}  // namespace detail

inline CheckResult verify_omega_transport(const DualPairSpec& spec, const Partition& lam, long k) {
    CheckResult res;
    res.check = "omega_transport";
    res.degree = spec.D;
    res.params = {{"type", tag_name(spec.x)},  {"d", std::to_string(spec.d)},
                  {"m", std::to_string(spec.m)}, {"n", std::to_string(spec.n)},
                  {"lambda", lam.str()},        {"k", std::to_string(k)}};
    require(spec.side == Side::super_side && spec.x != Tag::a,
            "omega transport for type a uses verify_omega_transport_a");
    PairSetup super_ps = PairSetup::make(spec);

    bool paired = (spec.x == Tag::d && spec.d % 2 == 0);
    Partition lam2 = paired ? tilde(lam, spec.d) : Partition();
    bool self_paired = paired && lam2 == lam;

    // Contributor data first, to size the scratch classical alphabet.
    WeightCoords Lam = lambda_classical(spec.x, lam, spec.d);
    auto reps = enumerate_coset_reps(spec.x, static_cast<int>(k));
    std::vector<Partition> lws;
    for (const GroupElement& w : reps[static_cast<std::size_t>(k)]) {
        lws.push_back(extract_lambda_w(dot_action(w, Lam)));
        if (paired && !self_paired)
            lws.push_back(extract_lambda_w(dot_action(w, lambda_classical(spec.x, lam2, spec.d))));
    }
    std::size_t N = 1;
    for (const Partition& p : lws) N = std::max(N, p.length());

    DualPairSpec cspec = spec;
    cspec.side = Side::classical;
    cspec.N = static_cast<long>(N);
    cspec.D = kNoTruncation / 4;
    PairSetup cps = PairSetup::make(cspec);
    long bound = kNoTruncation / 4;

    Series classicalH = classical_homology_char(cps, lam, k, bound).ch;
    if (paired && !self_paired) classicalH += classical_homology_char(cps, lam2, k, bound).ch;

    // omega^x: decompose in the Schur basis, then re-emit each s_kappa as the
    // hook Schur polynomial in the super alphabets.
    SchurVector sv = schur_decompose(classicalH, cps.xvars);
    Series image(super_ps.ctx, bound);
    for (const auto& [kappa, c] : sv.coeff)
        image += hook_schur(super_ps.ctx, bound, kappa, super_ps.ovars, super_ps.evars) * Rat(c);

    Series superH = super_homology_char(super_ps, lam, k, bound, /*hatted=*/true).ch;
    detail::finish_compare(res, image, superH);
    return res;
}

inline CheckResult verify_omega_transport_a(const DualPairSpec& spec, const GeneralizedPartition& lam,
                                            long k) {
    CheckResult res;
    res.check = "omega_transport";
    res.degree = spec.D;
    res.params = {{"type", "a"},
                  {"d", std::to_string(spec.d)},
                  {"p", std::to_string(spec.p)},
                  {"q", std::to_string(spec.q)},
                  {"m", std::to_string(spec.m)},
                  {"n", std::to_string(spec.n)},
                  {"lambda", lam.str()},
                  {"k", std::to_string(k)}};
    require(spec.side == Side::super_side && spec.x == Tag::a, "type a transport");
    PairSetup super_ps = PairSetup::make(spec);

    WeightCoords Lam = lambda_classical_a(lam, spec.d);
    auto reps = enumerate_coset_reps(Tag::a, static_cast<int>(k));
    std::size_t N = 1;
    for (const GroupElement& w : reps[static_cast<std::size_t>(k)]) {
        auto [lp, lm] = extract_lambda_w_a(dot_action(w, Lam));
        N = std::max({N, lp.length(), lm.length()});
    }

    DualPairSpec cspec = spec;
    cspec.side = Side::classical;
    cspec.N = static_cast<long>(N);
    cspec.D = kNoTruncation / 4;
    PairSetup cps = PairSetup::make(cspec);
    long bound = kNoTruncation / 4;

    Series classicalH = classical_homology_char_a(cps, lam, k, bound).ch;
    auto dec = detail::schur_decompose2(classicalH, cps.xvars, cps.uvars);
    Series image(super_ps.ctx, bound);
    for (const auto& [pp, c] : dec) {
        image += (hook_schur(super_ps.ctx, bound, pp.first, super_ps.xivars, super_ps.yvars) *
                  hook_schur(super_ps.ctx, bound, pp.second, super_ps.ebvars, super_ps.xbvars)) *
                 Rat(c);
    }
    Series superH = super_homology_char_a(super_ps, lam, k, bound, /*hatted=*/true).ch;
    detail::finish_compare(res, image, superH);
    return res;
}

// ---------------------------------------------------------------------------
// Casimir lemma suites (seeded).

// Lemma aux113 (type a) and aux113-cd (types b, c, d): the theta image shifts
// the Casimir eigenvalue by the constant bar-C, with a sign flip for b/c/d.
inline CheckResult verify_casimir_lemma(Tag x, long p, long q, long m, long n, long level,
                                        unsigned long seed, int samples = 100) {
    CheckResult res;
    res.check = "casimir_lemma";
    res.params = {{"type", tag_name(x)},   {"p", std::to_string(p)}, {"q", std::to_string(q)},
                  {"m", std::to_string(m)}, {"n", std::to_string(n)}, {"c", std::to_string(level)},
                  {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    SuperTag st{x, p, q, m, n};
    Rat cbar = Rat(level) * theta_level_factor(x);
    Rat Cbar = casimir_constant(st, cbar);
    for (int i = 0; i < samples; ++i) {
        WeightCoords mu = random_P_plusplus(rng, x, Rat(level), p, q, m, n);
        SuperWeight th = theta_positive(mu, st);
        require(th.level == cbar, "theta must land at level c * <Lambda_0, K>");
        auto back = theta_positive_inverse(th);
        if (!back || !(*back == mu)) {
            res.ok = false;
            res.error = "theta inverse failed on a sampled weight";
            return res;
        }
        Rat lhs = casimir_s(th);
        Rat rhs = (x == Tag::a ? casimir_c(mu) : -casimir_c(mu)) + Cbar;
        if (lhs != rhs) {
            res.ok = false;
            res.mismatch = MismatchInfo{"sample " + std::to_string(i), rat_str(lhs), rat_str(rhs)};
            return res;
        }
    }
    res.ok = true;
    return res;
}

// Lemma aux113-negative d: (mu+2rho|mu)_c = -(theta(mu)+2rho|theta(mu))_c
// for x in {b, c} at positive level.
inline CheckResult verify_casimir_lemma_negative(Tag x, long level, unsigned long seed,
                                                 int samples = 100) {
    CheckResult res;
    res.check = "casimir_lemma_negative";
    res.params = {{"type", tag_name(x)}, {"c", std::to_string(level)}, {"seed", std::to_string(seed)}};
    require(x == Tag::b || x == Tag::c, "lemma covers x in {b, c}");
    std::mt19937_64 rng(seed);
    NegDirection dir = (x == Tag::c) ? NegDirection::c_to_d : NegDirection::b_to_b0;
    for (int i = 0; i < samples; ++i) {
        // Any P+_l weight qualifies; sample with loose hook caps.
        WeightCoords mu = random_P_plusplus(rng, x, Rat(level), 0, 0, 8, 8);
        WeightCoords th = theta_negative(dir, mu);
        if (casimir_c(mu) != -casimir_c(th)) {
            res.ok = false;
            res.mismatch =
                MismatchInfo{"sample " + std::to_string(i), rat_str(casimir_c(mu)), rat_str(-casimir_c(th))};
            return res;
        }
    }
    res.ok = true;
    return res;
}

// Dot-action invariance of the Casimir eigenvalue along W^0_k.
inline CheckResult verify_casimir_dot_invariance(Tag tag, int kmax, unsigned long seed,
                                                 int samples = 20) {
    CheckResult res;
    res.check = "casimir_dot_invariance";
    res.params = {{"type", tag_name(tag)}, {"kmax", std::to_string(kmax)},
                  {"seed", std::to_string(seed)}};
    std::mt19937_64 rng(seed);
    auto reps = enumerate_coset_reps(tag, kmax);
    for (int i = 0; i < samples; ++i) {
        long level = static_cast<long>(rng() % 5);
        WeightCoords mu = random_P_plusplus(rng, tag, Rat(level), 2, 2, 8, 8);
        Rat base = casimir_c(mu);
        for (const auto& layer : reps)
            for (const GroupElement& w : layer)
                if (casimir_c(dot_action(w, mu)) != base) {
                    res.ok = false;
                    res.mismatch = MismatchInfo{"w=" + w.one_line(), rat_str(casimir_c(dot_action(w, mu))),
                                                rat_str(base)};
                    return res;
                }
    }
    res.ok = true;
    return res;
}

}  // namespace howe
