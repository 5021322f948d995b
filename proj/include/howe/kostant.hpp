#pragma once

// Module characters, Kostant u_- homology characters, and machine verification
// of the duality identities, Euler-Poincare relations, and omega-transport
// statements, for all three sides of the dual-pair table.

#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>
#include <vector>

#include "howe/finite_chars.hpp"
#include "howe/schur.hpp"
#include "howe/series.hpp"
#include "howe/weights.hpp"
#include "howe/weyl.hpp"

namespace howe {

enum class Side { classical, super_side, negative };

inline const char* side_name(Side s) {
    switch (s) {
        case Side::classical: return "classical";
        case Side::super_side: return "super";
        case Side::negative: return "negative";
    }
    return "?";
}

inline Side side_parse(const std::string& s) {
    if (s == "classical") return Side::classical;
    if (s == "super") return Side::super_side;
    if (s == "negative") return Side::negative;
    fail("unknown side: " + s);
}

struct DualPairSpec {
    Side side = Side::classical;
    Tag x = Tag::c;
    long d = 2;
    long p = 0, q = 0, m = 0, n = 0;  // super sizes
    long D = 5;                       // truncation degree
    long N = 0;                       // classical module alphabet size; 0 means D
};

inline long module_alphabet_size(const DualPairSpec& s) { return s.N > 0 ? s.N : s.D; }

// The finite dual group paired with the algebra on the given side.
inline DualGroup dual_group(const DualPairSpec& s) {
    if (s.side == Side::negative) {
        switch (s.x) {
            case Tag::d: return {GroupFamily::Sp, s.d};
            case Tag::c: return {GroupFamily::O, s.d};
            case Tag::b0: return {GroupFamily::Pin, s.d};
            default: fail("negative side admits types d, c, b0 only");
        }
    }
    switch (s.x) {
        case Tag::a: return {GroupFamily::GL, s.d};
        case Tag::b: return {GroupFamily::Pin, s.d};
        case Tag::c: return {GroupFamily::Sp, s.d};
        case Tag::d: return {GroupFamily::O, s.d};
        default: fail("b0 appears only at negative level");
    }
}

inline bool admissible(const DualPairSpec& s, std::string* why = nullptr) {
    auto reject = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (s.d < 1) return reject("d must be positive");
    if (s.D < 0) return reject("degree must be non-negative");
    if (s.side == Side::negative) {
        if (s.x != Tag::d && s.x != Tag::c && s.x != Tag::b0)
            return reject("negative side pairs: (d,Sp), (c,O), (b0,Pin)");
        if ((s.x == Tag::d || s.x == Tag::b0) && s.d % 2 != 0) return reject("this pair needs even d");
        return true;
    }
    if (s.x == Tag::b0) return reject("b0 appears only at negative level");
    if ((s.x == Tag::b || s.x == Tag::c) && s.d % 2 != 0) return reject("this pair needs even d");
    if (s.side == Side::super_side) {
        if (s.p < 0 || s.q < 0 || s.m < 0 || s.n < 0) return reject("sizes must be non-negative");
        if (s.x != Tag::a && (s.p != 0 || s.q != 0)) return reject("p, q are type-a parameters");
    }
    return true;
}

// Variable layout for one dual-pair computation.
struct PairSetup {
    DualPairSpec spec;
    CtxPtr ctx;
    std::vector<int> xvars;   // classical/negative module variables x_1..x_N
    std::vector<int> uvars;   // type a: u_j = x_{1-j}^{-1}
    std::vector<int> yvars;   // super a: y_s (bosonic, eps+)
    std::vector<int> xivars;  // super a: xi_t (fermionic, delta+)
    std::vector<int> xbvars;  // super a: xb_i = x_{-i}^{-1} (bosonic, eps-)
    std::vector<int> ebvars;  // super a: etab_j = eta_{-j}^{-1} (fermionic, delta-)
    std::vector<int> evars;   // super b/c/d: eta_i (bosonic, eps side)
    std::vector<int> ovars;   // super b/c/d: x_j (fermionic, delta side)
    std::vector<int> zvars;
    int epsvar = -1;

    static PairSetup make(const DualPairSpec& s) {
        std::string why;
        require(admissible(s, &why), "inadmissible dual pair: " + why);
        PairSetup ps;
        ps.spec = s;
        auto ctx = std::make_shared<Context>();
        DualGroup g = dual_group(s);
        if (s.side == Side::super_side) {
            if (s.x == Tag::a) {
                ps.yvars = ctx->add_family("y", static_cast<int>(s.m), VarKind::module_var);
                ps.xivars = ctx->add_family("xi", static_cast<int>(s.n), VarKind::module_var);
                ps.xbvars = ctx->add_family("xb", static_cast<int>(s.p), VarKind::module_var);
                ps.ebvars = ctx->add_family("etab", static_cast<int>(s.q), VarKind::module_var);
            } else {
                // The monomial prefactor carries half-integral powers when d is odd.
                bool half = (s.d % 2 != 0);
                ps.evars = ctx->add_family("eta", static_cast<int>(s.m), VarKind::module_var, half);
                ps.ovars = ctx->add_family("x", static_cast<int>(s.n), VarKind::module_var, half);
            }
        } else {
            long N = module_alphabet_size(s);
            ps.xvars = ctx->add_family("x", static_cast<int>(N), VarKind::module_var);
            if (s.side == Side::classical && s.x == Tag::a)
                ps.uvars = ctx->add_family("u", static_cast<int>(N), VarKind::module_var);
        }
        long zcount = 0;
        bool zhalf = false;
        switch (g.family) {
            case GroupFamily::GL: zcount = g.d; break;
            case GroupFamily::Sp: zcount = g.d / 2; break;
            case GroupFamily::O:
                zcount = g.d / 2;
                // so(2l+1) alternants pass through half-integral exponents.
                zhalf = (g.d % 2 != 0);
                break;
            case GroupFamily::Pin:
                zcount = g.d / 2;
                zhalf = true;
                break;
        }
        ps.zvars = ctx->add_family("z", static_cast<int>(zcount), VarKind::group_var, zhalf);
        if (g.family == GroupFamily::O && g.d % 2 != 0)
            ps.epsvar = ctx->add_var("eps", VarKind::sign_var);
        ps.ctx = ctx;
        return ps;
    }

    Series group_char(const Partition& lam, long D) const {
        DualGroup g = dual_group(spec);
        switch (g.family) {
            case GroupFamily::Sp: return char_sp(ctx, D, zvars, lam, g.d);
            case GroupFamily::O: return char_o(ctx, D, zvars, lam, g.d, epsvar);
            case GroupFamily::Pin: return char_pin(ctx, D, zvars, lam, g.d);
            default: fail("group_char: GL takes a generalized partition");
        }
    }
};

// ---------------------------------------------------------------------------
// Homology characters.

struct Contributor {
    GroupElement w;
    long k = 0;
    Partition lw;         // lambda_w (types b,c,d,b0); lambda^+_w for type a
    Partition lw_minus;   // lambda^-_w (type a) or tilde-chain lambda_w (paired d)
    bool kept = true;     // survived the P++ hook filter (super side)
    Rat casimir = 0;
};

struct HomologyChar {
    long k = 0;
    Series ch;
    std::vector<Contributor> contributors;
    bool paired = false;
    explicit HomologyChar(Series s) : ch(std::move(s)) {}
};

namespace detail {

inline long base_size_a(const GeneralizedPartition& lam) {
    return lam.plus().size() + lam.minus_decreasing().size();
}

}  // namespace detail

// ch H_k(u_-; L(x_infty, Lambda^x(lambda))) for x in {b, c, d}.
inline HomologyChar classical_homology_char(const PairSetup& ps, const Partition& lam, long k,
                                            long bound) {
    HomologyChar H{Series(ps.ctx, bound)};
    H.k = k;
    WeightCoords Lam = lambda_classical(ps.spec.x, lam, ps.spec.d);
    auto reps = enumerate_coset_reps(ps.spec.x, static_cast<int>(k));
    for (const GroupElement& w : reps[static_cast<std::size_t>(k)]) {
        WeightCoords wL = dot_action(w, Lam);
        require(is_S_dominant_integral(wL), "w o Lambda must be S-dominant");
        Partition lw = extract_lambda_w(wL);
        require(lw.size() >= lam.size() + k, "enumeration cutoff violated: |lambda_w| < |lambda| + k");
        Contributor c;
        c.w = w;
        c.k = k;
        c.lw = lw;
        c.casimir = casimir_c(wL);
        require(c.casimir == casimir_c(Lam), "dot action must preserve the Casimir eigenvalue");
        H.contributors.push_back(c);
        H.ch += schur_poly(ps.ctx, bound, ps.xvars, lw);
    }
    return H;
}

// Type a version: contributors carry (lambda^+_w, lambda^-_w).
inline HomologyChar classical_homology_char_a(const PairSetup& ps, const GeneralizedPartition& lam,
                                              long k, long bound) {
    HomologyChar H{Series(ps.ctx, bound)};
    H.k = k;
    WeightCoords Lam = lambda_classical_a(lam, ps.spec.d);
    long base = detail::base_size_a(lam);
    auto reps = enumerate_coset_reps(Tag::a, static_cast<int>(k));
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
        c.casimir = casimir_c(wL);
        require(c.casimir == casimir_c(Lam), "dot action must preserve the Casimir eigenvalue");
        H.contributors.push_back(c);
        H.ch += schur_poly(ps.ctx, bound, ps.xvars, lp) * schur_poly(ps.ctx, bound, ps.uvars, lm);
    }
    return H;
}

namespace detail {

// Monomial in one or two module variables (v == w gives the square).
inline Expo mono1(const Series& probe, int v) {
    Expo e = probe.zero_expo();
    probe.set_exp(e, v, 1);
    return e;
}
inline Expo mono2(const Series& probe, int v, int w) {
    Expo e = probe.zero_expo();
    if (v == w) {
        probe.set_exp(e, v, 2);
    } else {
        probe.set_exp(e, v, 1);
        probe.set_exp(e, w, 1);
    }
    return e;
}

// Factors of D^x = prod (1 - monomial) over the classical module alphabet.
inline std::vector<ProductFactor> classical_denominator_factors(const PairSetup& ps, long D, int expo) {
    std::vector<ProductFactor> fs;
    Series probe(ps.ctx, D);
    const auto& xs = ps.xvars;
    switch (ps.spec.x) {
        case Tag::a:
            for (int u : ps.uvars)
                for (int x : xs) fs.push_back({mono2(probe, u, x), -1, expo});
            break;
        case Tag::b:
            for (int x : xs) fs.push_back({mono1(probe, x), -1, expo});
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j)
                    fs.push_back({mono2(probe, xs[i], xs[j]), -1, expo});
            break;
        case Tag::c:
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i; j < xs.size(); ++j)
                    fs.push_back({mono2(probe, xs[i], xs[j]), -1, expo});
            break;
        case Tag::d:
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j)
                    fs.push_back({mono2(probe, xs[i], xs[j]), -1, expo});
            break;
        default: fail("classical denominator: type b0 has no positive-level module");
    }
    return fs;
}

}  // namespace detail

// 1/D^x as a truncated expansion over the classical module alphabet.
inline Series classical_denominator_inverse(const PairSetup& ps, long D) {
    return expand_product(ps.ctx, D, detail::classical_denominator_factors(ps, D, -1));
}

// D^x itself (finite product), for Euler-Poincare checks.
inline Series classical_denominator(const PairSetup& ps, long D) {
    return expand_product(ps.ctx, D, detail::classical_denominator_factors(ps, D, +1));
}

// ch L(x_infty, Lambda^x(lambda)) truncated to degree D.
inline Series classical_module_char(const PairSetup& ps, const Partition& lam, long D) {
    Series acc(ps.ctx, D);
    for (long k = 0; lam.size() + k <= D; ++k) {
        HomologyChar H = classical_homology_char(ps, lam, k, D);
        acc += (k % 2 == 0) ? H.ch : -H.ch;
    }
    return acc * classical_denominator_inverse(ps, D);
}

inline Series classical_module_char_a(const PairSetup& ps, const GeneralizedPartition& lam, long D) {
    Series acc(ps.ctx, D);
    long base = detail::base_size_a(lam);
    for (long k = 0; base + k <= D; ++k) {
        HomologyChar H = classical_homology_char_a(ps, lam, k, D);
        acc += (k % 2 == 0) ? H.ch : -H.ch;
    }
    return acc * classical_denominator_inverse(ps, D);
}

}  // namespace howe

#include "howe/kostant_super.hpp"
#include "howe/kostant_negative.hpp"
#include "howe/kostant_verify.hpp"
