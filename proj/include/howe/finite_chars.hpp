#pragma once

// Irreducible characters of GL(d), Sp(d), O(d) and Pin(d) as Laurent
// polynomials in z (and the order-2 variable for odd orthogonal groups),
// computed by brute-force Weyl alternants over the finite Weyl group with
// exact polynomial division.

#include <vector>

#include "howe/partition.hpp"
#include "howe/schur.hpp"
#include "howe/series.hpp"

namespace howe {

enum class GroupFamily { GL, Sp, O, Pin };

struct DualGroup {
    GroupFamily family;
    long d = 0;
};

inline bool in_parameter_set(const DualGroup& g, const Partition& lam) {
    switch (g.family) {
        case GroupFamily::Sp:
        case GroupFamily::Pin: return g.d % 2 == 0 && 2 * static_cast<long>(lam.length()) <= g.d;
        case GroupFamily::O: {
            Partition c = lam.conjugate();
            return c.part(1) + c.part(2) <= g.d;
        }
        case GroupFamily::GL: return false;  // GL is indexed by generalized partitions
    }
    return false;
}

namespace detail {

// Element of a finite hyperoctahedral Weyl group acting on rank coordinates:
// slot i receives sign[i] * v[perm[i]]; det is the representation sign.
struct FiniteWeyl {
    std::vector<int> perm;
    std::vector<int> sign;
    int det = 1;
};

enum class FiniteType { B, D };  // B covers sp as well (same signed-permutation group)

inline std::vector<FiniteWeyl> finite_weyl_group(FiniteType type, std::size_t rank) {
    std::vector<FiniteWeyl> out;
    std::vector<int> perm(rank);
    for (std::size_t i = 0; i < rank; ++i) perm[i] = static_cast<int>(i);
    do {
        int psign = 1;
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i + 1; j < rank; ++j)
                if (perm[i] > perm[j]) psign = -psign;
        for (std::size_t mask = 0; mask < (1u << rank); ++mask) {
            int nneg = __builtin_popcount(static_cast<unsigned>(mask));
            if (type == FiniteType::D && nneg % 2 != 0) continue;
            FiniteWeyl w;
            w.perm = perm;
            w.sign.assign(rank, 1);
            for (std::size_t i = 0; i < rank; ++i)
                if (mask & (1u << i)) w.sign[i] = -1;
            w.det = psign * (nneg % 2 == 0 ? 1 : -1);
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline Series alternant(const CtxPtr& ctx, long D, const std::vector<int>& zvars,
                        const std::vector<Rat>& v, const std::vector<FiniteWeyl>& group) {
    Series s(ctx, D);
    Expo e = s.zero_expo();
    for (const FiniteWeyl& w : group) {
        for (std::size_t i = 0; i < zvars.size(); ++i)
            s.set_exp(e, zvars[i], Rat(w.sign[i]) * v[static_cast<std::size_t>(w.perm[i])]);
        s.add_term(e, w.det);
    }
    return s;
}

// Weyl character via numerator/denominator alternants; division must be exact.
inline Series weyl_character(const CtxPtr& ctx, long D, const std::vector<int>& zvars,
                             const std::vector<Rat>& hw, FiniteType type, const std::vector<Rat>& rho) {
    std::size_t rank = zvars.size();
    require(hw.size() == rank && rho.size() == rank, "weight rank mismatch");
    std::vector<FiniteWeyl> group = finite_weyl_group(type, rank);
    std::vector<Rat> shifted(rank);
    for (std::size_t i = 0; i < rank; ++i) shifted[i] = hw[i] + rho[i];
    Series num = alternant(ctx, D, zvars, shifted, group);
    Series den = alternant(ctx, D, zvars, rho, group);
    return num.exact_div(den);
}

inline std::vector<Rat> rho_B(std::size_t rank) {
    std::vector<Rat> r(rank);
    for (std::size_t i = 0; i < rank; ++i) r[i] = Rat(static_cast<long>(rank - i)) - Rat(1, 2);
    return r;
}
inline std::vector<Rat> rho_C(std::size_t rank) {
    std::vector<Rat> r(rank);
    for (std::size_t i = 0; i < rank; ++i) r[i] = Rat(static_cast<long>(rank - i));
    return r;
}
inline std::vector<Rat> rho_D(std::size_t rank) {
    std::vector<Rat> r(rank);
    for (std::size_t i = 0; i < rank; ++i) r[i] = Rat(static_cast<long>(rank - i)) - 1;
    return r;
}

}  // namespace detail

// ch V^lambda_{GL(d)}: the Laurent Schur polynomial in z_1..z_d.
inline Series char_gl(const CtxPtr& ctx, long D, const std::vector<int>& zvars,
                      const GeneralizedPartition& lam) {
    return schur_laurent(ctx, D, zvars, lam);
}

// ch V^lambda_{Sp(d)}, d even, l(lambda) <= d/2.
inline Series char_sp(const CtxPtr& ctx, long D, const std::vector<int>& zvars, const Partition& lam,
                      long d) {
    require(d % 2 == 0, "Sp(d) needs even d");
    std::size_t rank = static_cast<std::size_t>(d / 2);
    require(zvars.size() == rank, "char_sp: need d/2 z-variables");
    require(lam.length() <= rank, "lambda not in P(Sp(d))");
    std::vector<Rat> hw(rank, 0);
    for (std::size_t i = 1; i <= lam.length(); ++i) hw[i - 1] = lam.part(i);
    return detail::weyl_character(ctx, D, zvars, hw, detail::FiniteType::B, detail::rho_C(rank));
}

// so(2l) irreducible character; the last entry of hw may be negative or half-integral.
inline Series char_so_even(const CtxPtr& ctx, long D, const std::vector<int>& zvars,
                           const std::vector<Rat>& hw) {
    return detail::weyl_character(ctx, D, zvars, hw, detail::FiniteType::D,
                                  detail::rho_D(zvars.size()));
}

// so(2l+1) irreducible character.
inline Series char_so_odd(const CtxPtr& ctx, long D, const std::vector<int>& zvars,
                          const std::vector<Rat>& hw) {
    return detail::weyl_character(ctx, D, zvars, hw, detail::FiniteType::B,
                                  detail::rho_B(zvars.size()));
}

// ch V^lambda_{O(d)}. For odd d the character is graded by the order-2
// variable epsvar (the eigenvalue of -I_d); pass epsvar = -1 for even d.
inline Series char_o(const CtxPtr& ctx, long D, const std::vector<int>& zvars, const Partition& lam,
                     long d, int epsvar) {
    require(in_parameter_set(DualGroup{GroupFamily::O, d}, lam), "lambda not in P(O(d))");
    long ell = d / 2;
    std::size_t rank = static_cast<std::size_t>(ell);
    require(zvars.size() == rank, "char_o: need floor(d/2) z-variables");
    if (d % 2 == 0) {
        if (static_cast<long>(lam.length()) > ell) return char_o(ctx, D, zvars, tilde(lam, d), d, epsvar);
        std::vector<Rat> hw(rank, 0);
        for (std::size_t i = 1; i <= lam.length(); ++i) hw[i - 1] = lam.part(i);
        if (ell >= 1 && lam.part(rank) > 0) {
            Series plus = char_so_even(ctx, D, zvars, hw);
            hw[rank - 1] = -hw[rank - 1];
            return plus + char_so_even(ctx, D, zvars, hw);
        }
        return char_so_even(ctx, D, zvars, hw);
    }
    require(epsvar >= 0, "odd orthogonal characters need the sign variable");
    if (static_cast<long>(lam.length()) > ell) {
        // ch V^lambda = eps ch V^{lambda-tilde}; |lambda| and |lambda-tilde|
        // have opposite parity for odd d, so the grading below is consistent.
        Series tw = char_o(ctx, D, zvars, tilde(lam, d), d, epsvar);
        Series eps(ctx, D);
        Expo e = eps.zero_expo();
        eps.set_exp(e, epsvar, 1);
        eps.add_term(e, 1);
        return tw * eps;
    }
    std::vector<Rat> hw(rank, 0);
    for (std::size_t i = 1; i <= lam.length(); ++i) hw[i - 1] = lam.part(i);
    Series chi = char_so_odd(ctx, D, zvars, hw);
    if (lam.size() % 2 != 0) {
        // -I_d acts on the lambda-labeled module of the dualities by (-1)^{|lambda|}:
        // every Fock excitation carries one factor of the sign variable.
        Series eps(ctx, D);
        Expo e = eps.zero_expo();
        eps.set_exp(e, epsvar, 1);
        eps.add_term(e, 1);
        chi = chi * eps;
    }
    return chi;
}

// ch V^lambda_{Pin(d)}, d even: the two spin-shifted so(d) characters.
inline Series char_pin(const CtxPtr& ctx, long D, const std::vector<int>& zvars, const Partition& lam,
                       long d) {
    require(d % 2 == 0, "Pin(d) needs even d");
    std::size_t rank = static_cast<std::size_t>(d / 2);
    require(zvars.size() == rank, "char_pin: need d/2 z-variables");
    require(lam.length() <= rank, "lambda not in P(Pin(d))");
    std::vector<Rat> hw(rank);
    for (std::size_t i = 0; i < rank; ++i) hw[i] = Rat(lam.part(i + 1)) + Rat(1, 2);
    Series plus = char_so_even(ctx, D, zvars, hw);
    hw[rank - 1] = -hw[rank - 1];
    return plus + char_so_even(ctx, D, zvars, hw);
}

// ---------------------------------------------------------------------------
// Weyl dimension formula values, for the z = 1 cross-check.

namespace detail {

inline Rat dim_from_roots(const std::vector<Rat>& hw, const std::vector<std::vector<Rat>>& pos_roots,
                          const std::vector<Rat>& rho) {
    Rat dim = 1;
    for (const auto& alpha : pos_roots) {
        Rat num = 0, den = 0;
        for (std::size_t i = 0; i < hw.size(); ++i) {
            num += (hw[i] + rho[i]) * alpha[i];
            den += rho[i] * alpha[i];
        }
        dim *= num / den;
    }
    return dim;
}

inline std::vector<std::vector<Rat>> pos_roots_B(std::size_t r) {
    std::vector<std::vector<Rat>> roots;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rat> e(r, 0);
        e[i] = 1;
        roots.push_back(e);
        for (std::size_t j = i + 1; j < r; ++j) {
            std::vector<Rat> a(r, 0), b(r, 0);
            a[i] = 1;
            a[j] = 1;
            b[i] = 1;
            b[j] = -1;
            roots.push_back(a);
            roots.push_back(b);
        }
    }
    return roots;
}
inline std::vector<std::vector<Rat>> pos_roots_C(std::size_t r) {
    std::vector<std::vector<Rat>> roots;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rat> e(r, 0);
        e[i] = 2;
        roots.push_back(e);
        for (std::size_t j = i + 1; j < r; ++j) {
            std::vector<Rat> a(r, 0), b(r, 0);
            a[i] = 1;
            a[j] = 1;
            b[i] = 1;
            b[j] = -1;
            roots.push_back(a);
            roots.push_back(b);
        }
    }
    return roots;
}
inline std::vector<std::vector<Rat>> pos_roots_D(std::size_t r) {
    std::vector<std::vector<Rat>> roots;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            std::vector<Rat> a(r, 0), b(r, 0);
            a[i] = 1;
            a[j] = 1;
            b[i] = 1;
            b[j] = -1;
            roots.push_back(a);
            roots.push_back(b);
        }
    return roots;
}

}  // namespace detail

inline Rat weyl_dim_sp(const Partition& lam, long d) {
    std::size_t r = static_cast<std::size_t>(d / 2);
    std::vector<Rat> hw(r, 0);
    for (std::size_t i = 1; i <= lam.length(); ++i) hw[i - 1] = lam.part(i);
    return detail::dim_from_roots(hw, detail::pos_roots_C(r), detail::rho_C(r));
}

inline Rat weyl_dim_so(const std::vector<Rat>& hw, long d) {
    std::size_t r = hw.size();
    if (d % 2 == 0)
        return detail::dim_from_roots(hw, detail::pos_roots_D(r), detail::rho_D(r));
    return detail::dim_from_roots(hw, detail::pos_roots_B(r), detail::rho_B(r));
}

inline Rat weyl_dim_gl(const GeneralizedPartition& lam) {
    long d = lam.depth();
    Rat dim = 1;
    for (long i = 1; i <= d; ++i)
        for (long j = i + 1; j <= d; ++j)
            dim *= frac(lam.part(static_cast<std::size_t>(i)) - lam.part(static_cast<std::size_t>(j)) + j - i, j - i);
    return dim;
}

// Dimension of V^lambda_{O(d)} / V^lambda_{Pin(d)} via the component so-weights.
inline Rat weyl_dim_o(const Partition& lam, long d) {
    long ell = d / 2;
    if (static_cast<long>(lam.length()) > ell) return weyl_dim_o(tilde(lam, d), d);
    std::vector<Rat> hw(static_cast<std::size_t>(ell), 0);
    for (std::size_t i = 1; i <= lam.length(); ++i) hw[i - 1] = lam.part(i);
    Rat dim = weyl_dim_so(hw, d);
    if (d % 2 == 0 && ell >= 1 && lam.part(static_cast<std::size_t>(ell)) > 0) dim *= 2;
    return dim;
}

inline Rat weyl_dim_pin(const Partition& lam, long d) {
    std::size_t r = static_cast<std::size_t>(d / 2);
    std::vector<Rat> hw(r);
    for (std::size_t i = 0; i < r; ++i) hw[i] = Rat(lam.part(i + 1)) + Rat(1, 2);
    return 2 * weyl_dim_so(hw, d);
}

}  // namespace howe
