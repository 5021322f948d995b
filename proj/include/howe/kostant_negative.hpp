#pragma once

// Negative-level side: characters and u_- homology of the d_infty / c_infty /
// b0_infty modules dual to Sp(d), O(d), Pin(d) on the bosonic Fock spaces.
// Homology contributors run over W^0_k of the source type (c for d_infty,
// d for c_infty, b for b0_infty) with conjugated Schur blocks.

#include "howe/kostant.hpp"

namespace howe {

namespace detail {

inline Tag negative_source_tag(Tag x) {
    switch (x) {
        case Tag::d: return Tag::c;
        case Tag::c: return Tag::d;
        case Tag::b0: return Tag::b;
        default: fail("negative side admits d, c, b0 only");
    }
}

inline NegDirection negative_direction(Tag x) {
    switch (x) {
        case Tag::d: return NegDirection::c_to_d;
        case Tag::c: return NegDirection::d_to_c;
        case Tag::b0: return NegDirection::b_to_b0;
        default: fail("negative side admits d, c, b0 only");
    }
}

}  // namespace detail

// ch H_k(u_-; L~(x_infty, Lambda^x_-(lambda))). Paired for x = c with even d.
inline HomologyChar negative_homology_char(const PairSetup& ps, const Partition& lam, long k,
                                           long bound) {
    const DualPairSpec& s = ps.spec;
    require(s.side == Side::negative, "negative_homology_char: negative side only");
    Tag src = detail::negative_source_tag(s.x);
    NegDirection dir = detail::negative_direction(s.x);
    bool paired = (s.x == Tag::c && s.d % 2 == 0);
    Partition lam2 = paired ? tilde(lam, s.d) : Partition();
    bool self_paired = paired && lam2 == lam;

    HomologyChar H{Series(ps.ctx, bound)};
    H.k = k;
    H.paired = paired && !self_paired;

    WeightCoords Lam = lambda_classical(src, lam, s.d);
    WeightCoords target = lambda_negative(s.x, lam, s.d);
    std::optional<WeightCoords> Lam2;
    if (paired && !self_paired) Lam2 = lambda_classical(src, lam2, s.d);

    auto reps = enumerate_coset_reps(src, static_cast<int>(k));
    std::set<WeightCoords> seen, seen2;
    for (const GroupElement& w : reps[static_cast<std::size_t>(k)]) {
        WeightCoords wL = dot_action(w, Lam);
        require(is_S_dominant_integral(wL), "w o Lambda must be S-dominant");
        Partition lw = extract_lambda_w(wL);
        require(lw.size() >= lam.size() + k, "enumeration cutoff violated");
        Contributor c;
        c.w = w;
        c.k = k;
        c.lw = lw;
        // The negative-side Casimir filter: theta carries w o Lambda to a
        // weight with the Casimir eigenvalue of Lambda^x_-(lambda).
        WeightCoords th = theta_negative(dir, wL);
        c.casimir = casimir_c(th);
        require(c.casimir == casimir_c(target), "negative contributor fails the Casimir filter");
        require(seen.insert(th).second, "negative contributor weights must be distinct");
        H.contributors.push_back(c);
        H.ch += schur_poly(ps.ctx, bound, ps.xvars, lw.conjugate());
        if (Lam2) {
            WeightCoords wL2 = dot_action(w, *Lam2);
            require(is_S_dominant_integral(wL2), "w o Lambda-tilde must be S-dominant");
            Partition lw2 = extract_lambda_w(wL2);
            require(seen2.insert(theta_negative(dir, wL2)).second,
                    "tilde negative contributor weights must be distinct");
            H.contributors.back().lw_minus = lw2;
            H.ch += schur_poly(ps.ctx, bound, ps.xvars, lw2.conjugate());
        }
    }
    return H;
}

// Denominator of the negative-level character formulas, to the given power.
inline Series negative_denominator_power(const PairSetup& ps, long D, int expo) {
    std::vector<ProductFactor> fs;
    Series probe(ps.ctx, D);
    const auto& xs = ps.xvars;
    switch (ps.spec.x) {
        case Tag::d:
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j)
                    fs.push_back({detail::mono2(probe, xs[i], xs[j]), -1, expo});
            break;
        case Tag::c:
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i; j < xs.size(); ++j)
                    fs.push_back({detail::mono2(probe, xs[i], xs[j]), -1, expo});
            break;
        case Tag::b0:
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i; j < xs.size(); ++j)
                    fs.push_back({detail::mono2(probe, xs[i], xs[j]), -1, expo});
            for (int x : xs) fs.push_back({detail::mono1(probe, x), +1, -expo});
            break;
        default: fail("negative side admits d, c, b0 only");
    }
    return expand_product(ps.ctx, D, fs);
}

inline Series negative_denominator_inverse(const PairSetup& ps, long D) {
    return negative_denominator_power(ps, D, -1);
}
inline Series negative_denominator(const PairSetup& ps, long D) {
    return negative_denominator_power(ps, D, +1);
}

// ch L(x_infty, Lambda^x_-(lambda)); the lambda/lambda-tilde pair for
// x = c with even d.
inline Series negative_module_char(const PairSetup& ps, const Partition& lam, long D) {
    Series acc(ps.ctx, D);
    for (long k = 0; lam.size() + k <= D; ++k) {
        HomologyChar H = negative_homology_char(ps, lam, k, D);
        acc += (k % 2 == 0) ? H.ch : -H.ch;
    }
    return acc * negative_denominator_inverse(ps, D);
}

}  // namespace howe
