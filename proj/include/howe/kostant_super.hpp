#pragma once

// Super side: u_- homology and module characters of the oscillator modules,
// with the P++ hook filter, the Casimir consistency assertions, and the
// O(2l) pairing.

#include "howe/kostant.hpp"

namespace howe {

namespace detail {

inline SuperTag super_tag(const DualPairSpec& s) { return SuperTag{s.x, s.p, s.q, s.m, s.n}; }

// Hook Schur block of one contributor for types b, c, d: the fermionic
// delta-side alphabet sits in the plain slot, the bosonic eps-side alphabet in
// the omega-twisted slot.
inline Series contributor_hs(const PairSetup& ps, const Partition& lw, long bound) {
    return hook_schur(ps.ctx, bound, lw, ps.ovars, ps.evars);
}

inline Series contributor_hs_a(const PairSetup& ps, const Partition& lp, const Partition& lm,
                               long bound) {
    return hook_schur(ps.ctx, bound, lp, ps.xivars, ps.yvars) *
           hook_schur(ps.ctx, bound, lm, ps.ebvars, ps.xbvars);
}

}  // namespace detail

// Monomial prefactor relating hatted and non-extended characters:
// (eta_1..eta_m / x_1..x_n)^{d/2} for types b/c/d, (etab^{-1}.. / xb^{-1}..)^d
// written in the inverse generators for type a.
inline Series super_prefactor(const PairSetup& ps, long bound) {
    Series s(ps.ctx, bound);
    Expo e = s.zero_expo();
    if (ps.spec.x == Tag::a) {
        for (int v : ps.ebvars) s.set_exp(e, v, Rat(-ps.spec.d));
        for (int v : ps.xbvars) s.set_exp(e, v, Rat(ps.spec.d));
    } else {
        for (int v : ps.evars) s.set_exp(e, v, frac(ps.spec.d, 2));
        for (int v : ps.ovars) s.set_exp(e, v, frac(-ps.spec.d, 2));
    }
    s.add_term(e, 1);
    return s;
}

// ch H_k(ubar_-; L~(SG, hat-Lambda^x_f(lambda))) for x in {b, c, d}. For
// G = O(2l) the output is the lambda/lambda-tilde paired character. The
// `hatted` flag controls the monomial prefactor of the non-extended trace.
inline HomologyChar super_homology_char(const PairSetup& ps, const Partition& lam, long k, long bound,
                                        bool hatted = false) {
    const DualPairSpec& s = ps.spec;
    require(s.side == Side::super_side && s.x != Tag::a, "super_homology_char: types b, c, d");
    require(is_hook(lam, s.m, s.n), "lambda must satisfy lambda_{m+1} <= n");
    SuperTag st = detail::super_tag(s);
    bool paired = (s.x == Tag::d && s.d % 2 == 0);
    Partition lam2 = paired ? tilde(lam, s.d) : Partition();
    bool self_paired = paired && lam2 == lam;

    HomologyChar H{Series(ps.ctx, bound)};
    H.k = k;
    H.paired = paired && !self_paired;

    WeightCoords Lam = lambda_classical(s.x, lam, s.d);
    std::optional<WeightCoords> Lam2;
    if (paired && !self_paired) Lam2 = lambda_classical(s.x, lam2, s.d);
    Rat target = casimir_s(lambda_super_f(st, lam, s.d));
    std::optional<Rat> target2;
    if (Lam2 && is_hook(lam2, s.m, s.n)) target2 = casimir_s(lambda_super_f(st, lam2, s.d));

    auto reps = enumerate_coset_reps(s.x, static_cast<int>(k));
    std::set<SuperWeight> seen, seen2;
    for (const GroupElement& w : reps[static_cast<std::size_t>(k)]) {
        WeightCoords wL = dot_action(w, Lam);
        require(is_S_dominant_integral(wL), "w o Lambda must be S-dominant");
        Partition lw = extract_lambda_w(wL);
        require(lw.size() >= lam.size() + k, "enumeration cutoff violated");
        Contributor c;
        c.w = w;
        c.k = k;
        c.lw = lw;
        c.kept = in_P_plusplus_l(wL, s.p, s.q, s.m, s.n).member;
        Series block = detail::contributor_hs(ps, lw, bound);
        if (bound >= static_cast<long>(lw.size()))
            require(c.kept == !block.is_zero(), "hook filter must match hook Schur vanishing");
        if (c.kept) {
            SuperWeight th = theta_positive(wL, st);
            c.casimir = casimir_s(th);
            require(c.casimir == target, "contributor fails the Casimir filter");
            require(seen.insert(th).second, "contributor weights must be pairwise distinct");
        }
        H.ch += block;
        if (Lam2) {
            WeightCoords wL2 = dot_action(w, *Lam2);
            require(is_S_dominant_integral(wL2), "w o Lambda-tilde must be S-dominant");
            Partition lw2 = extract_lambda_w(wL2);
            c.lw_minus = lw2;
            bool kept2 = in_P_plusplus_l(wL2, s.p, s.q, s.m, s.n).member;
            Series block2 = detail::contributor_hs(ps, lw2, bound);
            if (bound >= static_cast<long>(lw2.size()))
                require(kept2 == !block2.is_zero(), "hook filter must match hook Schur vanishing");
            if (kept2 && target2) {
                SuperWeight th2 = theta_positive(wL2, st);
                require(casimir_s(th2) == *target2, "tilde contributor fails the Casimir filter");
                require(seen2.insert(th2).second, "tilde contributor weights must be distinct");
            }
            H.ch += block2;
        }
        H.contributors.push_back(c);
    }
    if (!hatted) H.ch = H.ch * super_prefactor(ps, bound);
    return H;
}

// Type a homology character of L(gl-hat(p+m|q+n), hat-Lambda^a_f(lambda)).
inline HomologyChar super_homology_char_a(const PairSetup& ps, const GeneralizedPartition& lam, long k,
                                          long bound, bool hatted = false) {
    const DualPairSpec& s = ps.spec;
    require(s.side == Side::super_side && s.x == Tag::a, "super_homology_char_a: type a");
    SuperTag st = detail::super_tag(s);
    HomologyChar H{Series(ps.ctx, bound)};
    H.k = k;
    WeightCoords Lam = lambda_classical_a(lam, s.d);
    Rat target = casimir_s(lambda_super_f_a(st, lam, s.d));
    long base = detail::base_size_a(lam);
    auto reps = enumerate_coset_reps(Tag::a, static_cast<int>(k));
    std::set<SuperWeight> seen;
    for (const GroupElement& w : reps[static_cast<std::size_t>(k)]) {
        WeightCoords wL = dot_action(w, Lam);
        require(is_S_dominant_integral(wL), "w o Lambda must be S-dominant");
        auto [lp, lm] = extract_lambda_w_a(wL);
        require(lp.size() + lm.size() >= base + k, "enumeration cutoff violated");
        Contributor c;
        c.w = w;
        c.k = k;
        c.lw = lp;
        c.lw_minus = lm;
        c.kept = in_P_plusplus_l(wL, s.p, s.q, s.m, s.n).member;
        Series block = detail::contributor_hs_a(ps, lp, lm, bound);
        if (bound >= static_cast<long>(lp.size() + lm.size()))
            require(c.kept == !block.is_zero(), "hook filter must match hook Schur vanishing");
        if (c.kept) {
            SuperWeight th = theta_positive(wL, st);
            c.casimir = casimir_s(th);
            require(c.casimir == target, "contributor fails the Casimir filter");
            require(seen.insert(th).second, "contributor weights must be pairwise distinct");
        }
        H.ch += block;
        H.contributors.push_back(c);
    }
    if (!hatted) H.ch = H.ch * super_prefactor(ps, bound);
    return H;
}

// 1/Dbar^x: the super denominator of the character theorems, inverted and
// truncated. `expo` = +1 builds Dbar^x itself for Euler-Poincare checks
// (inverse-type factors swap their exponent).
inline Series super_denominator_power(const PairSetup& ps, long D, int expo) {
    std::vector<ProductFactor> fs;
    Series probe(ps.ctx, D);
    const DualPairSpec& s = ps.spec;
    if (s.x == Tag::a) {
        for (int xb : ps.xbvars)
            for (int y : ps.yvars) fs.push_back({detail::mono2(probe, xb, y), -1, expo});
        for (int eb : ps.ebvars)
            for (int xi : ps.xivars) fs.push_back({detail::mono2(probe, eb, xi), -1, expo});
        for (int xb : ps.xbvars)
            for (int xi : ps.xivars) fs.push_back({detail::mono2(probe, xb, xi), +1, -expo});
        for (int eb : ps.ebvars)
            for (int y : ps.yvars) fs.push_back({detail::mono2(probe, eb, y), +1, -expo});
    } else {
        const auto& es = ps.evars;
        const auto& os = ps.ovars;
        bool e_diag = (s.x == Tag::b || s.x == Tag::d);  // sp(2m) eps side: include (1 - eta_i^2)
        bool o_diag = (s.x == Tag::c);                   // sp(2n) delta side: include (1 - x_s^2)
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = e_diag ? i : i + 1; j < es.size(); ++j)
                fs.push_back({detail::mono2(probe, es[i], es[j]), -1, expo});
        for (std::size_t i = 0; i < os.size(); ++i)
            for (std::size_t j = o_diag ? i : i + 1; j < os.size(); ++j)
                fs.push_back({detail::mono2(probe, os[i], os[j]), -1, expo});
        for (int e : es)
            for (int o : os) fs.push_back({detail::mono2(probe, e, o), +1, -expo});
        if (s.x == Tag::b) {
            for (int o : os) fs.push_back({detail::mono1(probe, o), -1, expo});
            for (int e : es) fs.push_back({detail::mono1(probe, e), +1, -expo});
        }
    }
    return expand_product(ps.ctx, D, fs);
}

inline Series super_denominator_inverse(const PairSetup& ps, long D) {
    return super_denominator_power(ps, D, -1);
}
inline Series super_denominator(const PairSetup& ps, long D) {
    return super_denominator_power(ps, D, +1);
}

// ch L(SG, hat-Lambda^x_f(lambda)) truncated to degree D; paired sum for
// G = O(2l) with lambda != lambda-tilde.
inline Series super_module_char(const PairSetup& ps, const Partition& lam, long D,
                                bool hatted = false) {
    Series acc(ps.ctx, D);
    for (long k = 0; lam.size() + k <= D; ++k) {
        HomologyChar H = super_homology_char(ps, lam, k, D, /*hatted=*/true);
        acc += (k % 2 == 0) ? H.ch : -H.ch;
    }
    Series out = acc * super_denominator_inverse(ps, D);
    if (!hatted) out = out * super_prefactor(ps, D);
    return out;
}

inline Series super_module_char_a(const PairSetup& ps, const GeneralizedPartition& lam, long D,
                                  bool hatted = false) {
    Series acc(ps.ctx, D);
    long base = detail::base_size_a(lam);
    for (long k = 0; base + k <= D; ++k) {
        HomologyChar H = super_homology_char_a(ps, lam, k, D, /*hatted=*/true);
        acc += (k % 2 == 0) ? H.ch : -H.ch;
    }
    Series out = acc * super_denominator_inverse(ps, D);
    if (!hatted) out = out * super_prefactor(ps, D);
    return out;
}

}  // namespace howe
