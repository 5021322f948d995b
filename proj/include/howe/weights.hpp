#pragma once

// Weight constructors for classical, super and negative-level modules, the
// dominance sets P+_l / P++_l / P++_lbar, the bijections theta between them,
// and Casimir eigenvalues on both sides.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "howe/common.hpp"
#include "howe/partition.hpp"
#include "howe/weyl.hpp"

namespace howe {

// ---------------------------------------------------------------------------
// Classical highest weights Lambda^x(lambda).

// Lambda^a(lambda) = d L0 + sum (lambda^+)'_j eps_j - sum (lambda^-)'_{j+1} eps_{-j}.
inline WeightCoords lambda_classical_a(const GeneralizedPartition& lam, long d) {
    require(lam.depth() == d, "lambda_classical_a: depth must equal d");
    WeightCoords w;
    w.tag = Tag::a;
    w.level = d;
    Partition plus_c = lam.plus().conjugate();
    Partition minus_c = lam.minus_decreasing().conjugate();
    for (std::size_t j = 1; j <= plus_c.length(); ++j) w.set(static_cast<int>(j), plus_c.part(j));
    for (std::size_t j = 1; j <= minus_c.length(); ++j)
        w.set(-static_cast<int>(j - 1), -Rat(minus_c.part(j)));
    return w;
}

// Lambda^x(lambda) for x in {b, c, d}: level d (b, d) or d/2 (c), coordinates lambda'.
inline WeightCoords lambda_classical(Tag tag, const Partition& lam, long d) {
    WeightCoords w;
    w.tag = tag;
    Partition conj = lam.conjugate();
    switch (tag) {
        case Tag::b:
            require(d % 2 == 0, "Pin duality needs even d");
            require(2 * static_cast<long>(lam.length()) <= d, "lambda not in P(Pin(d))");
            w.level = d;
            break;
        case Tag::c:
            require(d % 2 == 0, "Sp duality needs even d");
            require(2 * static_cast<long>(lam.length()) <= d, "lambda not in P(Sp(d))");
            w.level = frac(d, 2);
            break;
        case Tag::d:
            require(conj.part(1) + conj.part(2) <= d, "lambda not in P(O(d))");
            w.level = d;
            break;
        default: fail("lambda_classical: use lambda_classical_a for type a");
    }
    for (std::size_t k = 1; k <= conj.length(); ++k) w.set(static_cast<int>(k), conj.part(k));
    return w;
}

// Negative-level weights: coordinates are lambda itself, not its conjugate.
inline WeightCoords lambda_negative(Tag tag, const Partition& lam, long d) {
    WeightCoords w;
    w.tag = tag;
    switch (tag) {
        case Tag::d:
            require(d % 2 == 0 && 2 * static_cast<long>(lam.length()) <= d, "lambda not in P(Sp(d))");
            w.level = -d;
            break;
        case Tag::c: {
            Partition conj = lam.conjugate();
            require(conj.part(1) + conj.part(2) <= d, "lambda not in P(O(d))");
            w.level = -frac(d, 2);
            break;
        }
        case Tag::b0:
            require(d % 2 == 0 && 2 * static_cast<long>(lam.length()) <= d, "lambda not in P(Pin(d))");
            w.level = -frac(d, 2);
            break;
        default: fail("lambda_negative: only d, c, b0 carry negative-level modules");
    }
    for (std::size_t k = 1; k <= lam.length(); ++k) w.set(static_cast<int>(k), lam.part(k));
    return w;
}

// ---------------------------------------------------------------------------
// Super side.

struct SuperTag {
    Tag x = Tag::c;  // a: gl(p+m|q+n); b: spo(2m|2n+1); c: osp(2m|2n); d: spo(2m|2n)
    long p = 0, q = 0, m = 0, n = 0;
};

// Weight of the centrally extended superalgebra in the hatted basis
// {eps_i, delta_j, tilde-Lambda_0}.
struct SuperWeight {
    SuperTag tag;
    Rat level = 0;                // coefficient of tilde-Lambda_0
    std::map<int, Rat> eps;       // keys -p..-1, 1..m
    std::map<int, Rat> del;       // keys -q..-1, 1..n

    Rat eps_at(int i) const {
        auto it = eps.find(i);
        return it == eps.end() ? Rat(0) : it->second;
    }
    Rat del_at(int j) const {
        auto it = del.find(j);
        return it == del.end() ? Rat(0) : it->second;
    }
    void set_eps(int i, const Rat& v) {
        if (v == 0)
            eps.erase(i);
        else
            eps[i] = v;
    }
    void set_del(int j, const Rat& v) {
        if (v == 0)
            del.erase(j);
        else
            del[j] = v;
    }
    bool operator==(const SuperWeight& o) const {
        return level == o.level && eps == o.eps && del == o.del;
    }
    bool operator<(const SuperWeight& o) const {
        if (level != o.level) return level < o.level;
        if (eps != o.eps) return eps < o.eps;
        return del < o.del;
    }

    // Coordinates of the non-extended weight (the hatted ones differ by the
    // multiple of tilde-Lambda_0's epsilon/delta tail).
    Rat unhatted_eps(int i) const { return eps_at(i) + ((tag.x == Tag::a) ? (i < 0 ? -level : Rat(0)) : level); }
    Rat unhatted_del(int j) const { return del_at(j) + ((tag.x == Tag::a) ? (j < 0 ? level : Rat(0)) : -level); }
};

// hat-Lambda^x_f(lambda) for x in {b, c, d}; level d/2.
inline SuperWeight lambda_super_f(const SuperTag& st, const Partition& lam, long d) {
    require(st.x != Tag::a, "type a takes a generalized partition");
    require(is_hook(lam, st.m, st.n), "lambda_{m+1} must be <= n");
    switch (st.x) {
        case Tag::b:
        case Tag::c: require(d % 2 == 0 && 2 * static_cast<long>(lam.length()) <= d, "lambda outside P(G)"); break;
        case Tag::d: {
            Partition conj = lam.conjugate();
            require(conj.part(1) + conj.part(2) <= d, "lambda outside P(O(d))");
            break;
        }
        default: break;
    }
    SuperWeight w;
    w.tag = st;
    w.level = frac(d, 2);
    Partition conj = lam.conjugate();
    for (long i = 1; i <= st.m; ++i) w.set_eps(static_cast<int>(i), lam.part(static_cast<std::size_t>(i)));
    for (long j = 1; j <= st.n; ++j)
        w.set_del(static_cast<int>(j), std::max(conj.part(static_cast<std::size_t>(j)) - st.m, 0L));
    return w;
}

// hat-Lambda^a_f(lambda) for gl(p+m|q+n); level d.
inline SuperWeight lambda_super_f_a(const SuperTag& st, const GeneralizedPartition& lam, long d) {
    require(st.x == Tag::a, "lambda_super_f_a is for gl(p+m|q+n)");
    require(lam.depth() == d, "depth must equal d");
    if (st.m + 1 <= d) require(lam.part(static_cast<std::size_t>(st.m + 1)) <= st.n, "lambda_{m+1} <= n fails");
    if (d - st.p >= 1) require(lam.part(static_cast<std::size_t>(d - st.p)) >= -st.q, "lambda_{d-p} >= -q fails");
    SuperWeight w;
    w.tag = st;
    w.level = d;
    Partition plus = lam.plus();
    Partition plus_c = plus.conjugate();
    std::vector<long> minus = lam.minus();  // non-decreasing
    Partition minus_dec = lam.minus_decreasing();
    Partition minus_c = minus_dec.conjugate();
    for (long i = 1; i <= st.m; ++i) w.set_eps(static_cast<int>(i), plus.part(static_cast<std::size_t>(i)));
    for (long j = 1; j <= st.n; ++j)
        w.set_del(static_cast<int>(j), std::max(plus_c.part(static_cast<std::size_t>(j)) - st.m, 0L));
    for (long i = 1; i <= st.p; ++i) {
        // lambda^-_{d+(-i)+1} is the i-th largest entry of lambda^-.
        long entry = (d - i >= 0 && d - i < static_cast<long>(minus.size()))
                         ? minus[static_cast<std::size_t>(d - i)]
                         : 0;
        w.set_eps(-static_cast<int>(i), -Rat(std::max(entry - st.q, 0L)));
    }
    for (long j = 1; j <= st.q; ++j)
        w.set_del(-static_cast<int>(j), -Rat(minus_c.part(static_cast<std::size_t>(j))));
    return w;
}

// ---------------------------------------------------------------------------
// Dominance sets.

struct MembershipResult {
    bool member = false;
    Partition eta, zeta;  // witnesses: eta/zeta for type a; eta = mu^o otherwise
};

// P+_{l,c}: mu = c L0 + sum_{i>=1} eta_i eps_i (- sum_{j>=0} zeta_j eps_{-j} for type a).
inline MembershipResult in_P_plus_l(const WeightCoords& mu) {
    MembershipResult res;
    int lo = 0, hi = 0;
    for (const auto& [i, v] : mu.coords) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }
    std::vector<long> eta;
    for (int i = 1; i <= hi; ++i) {
        Rat v = mu.coord(i);
        if (!rat_is_int(v) || v < 0) return res;
        eta.push_back(rat_to_long(v));
    }
    if (!std::is_sorted(eta.rbegin(), eta.rend())) return res;
    if (mu.tag == Tag::a) {
        std::vector<long> zeta;
        for (int j = 0; -j >= lo; ++j) {
            Rat v = -mu.coord(-j);
            if (!rat_is_int(v) || v < 0) return res;
            zeta.push_back(rat_to_long(v));
        }
        if (!std::is_sorted(zeta.rbegin(), zeta.rend())) return res;
        res.zeta = Partition(std::move(zeta));
    } else {
        for (const auto& [i, v] : mu.coords)
            if (i <= 0) return res;
    }
    res.eta = Partition(std::move(eta));
    res.member = true;
    return res;
}

// P++_{l,c}: additionally eta is (n|m)-hook (and zeta is (q|p)-hook for type a).
inline MembershipResult in_P_plusplus_l(const WeightCoords& mu, long p, long q, long m, long n) {
    MembershipResult res = in_P_plus_l(mu);
    if (!res.member) return res;
    if (!is_hook(res.eta, n, m)) {
        res.member = false;
        return res;
    }
    if (mu.tag == Tag::a && !is_hook(res.zeta, q, p)) res.member = false;
    return res;
}

// <Lambda^x_0, K>: the factor relating the levels on the two sides of theta.
inline Rat theta_level_factor(Tag x) {
    switch (x) {
        case Tag::a:
        case Tag::c: return Rat(1);
        case Tag::b:
        case Tag::d: return Rat(1, 2);
        default: fail("no oscillator duality for this tag");
    }
}

// theta: P++_{l,c} -> P++_{lbar,cbar} (types b, c, d).
inline SuperWeight theta_positive(const WeightCoords& mu, const SuperTag& st) {
    require(mu.tag == st.x, "theta_positive: tag mismatch");
    MembershipResult mem = in_P_plusplus_l(mu, st.p, st.q, st.m, st.n);
    require(mem.member, "theta_positive: weight not in P++_l");
    SuperWeight out;
    out.tag = st;
    out.level = mu.level * theta_level_factor(st.x);
    if (st.x != Tag::a) {
        Partition nu = mem.eta.conjugate();
        std::vector<long> tau_parts;
        for (std::size_t i = static_cast<std::size_t>(st.m) + 1; i <= nu.length(); ++i)
            tau_parts.push_back(nu.part(i));
        Partition tau_c = Partition(std::move(tau_parts)).conjugate();
        for (long i = 1; i <= st.m; ++i) out.set_eps(static_cast<int>(i), nu.part(static_cast<std::size_t>(i)));
        for (long j = 1; j <= st.n; ++j) out.set_del(static_cast<int>(j), tau_c.part(static_cast<std::size_t>(j)));
        return out;
    }
    // Type a: tau = eta', nu = (tau_{m+1},...), chi = (zeta_q, zeta_{q+1}, ...).
    Partition tau = mem.eta.conjugate();
    std::vector<long> nu_parts;
    for (std::size_t i = static_cast<std::size_t>(st.m) + 1; i <= tau.length(); ++i) nu_parts.push_back(tau.part(i));
    Partition nu_c = Partition(std::move(nu_parts)).conjugate();
    std::vector<long> chi_parts;
    for (std::size_t j = static_cast<std::size_t>(st.q) + 1; j <= mem.zeta.length(); ++j)
        chi_parts.push_back(mem.zeta.part(j));
    Partition chi_c = Partition(std::move(chi_parts)).conjugate();
    for (long i = 1; i <= st.m; ++i) out.set_eps(static_cast<int>(i), tau.part(static_cast<std::size_t>(i)));
    for (long j = 1; j <= st.n; ++j) out.set_del(static_cast<int>(j), nu_c.part(static_cast<std::size_t>(j)));
    // zeta is 0-indexed in the paper; delta_{-j} picks up zeta_{j-1}.
    for (long j = 1; j <= st.q; ++j) out.set_del(-static_cast<int>(j), -Rat(mem.zeta.part(static_cast<std::size_t>(j))));
    for (long i = 1; i <= st.p; ++i) out.set_eps(-static_cast<int>(i), -Rat(chi_c.part(static_cast<std::size_t>(i))));
    return out;
}

// Membership in P++_{lbar} with witness reconstruction; inverse of theta_positive.
inline std::optional<WeightCoords> theta_positive_inverse(const SuperWeight& sw) {
    const SuperTag& st = sw.tag;
    WeightCoords mu;
    mu.tag = st.x;
    require(theta_level_factor(st.x) != 0, "bad tag");
    mu.level = sw.level / theta_level_factor(st.x);
    auto positive_delta_tail = [&]() -> std::optional<Partition> {
        std::vector<long> vals;
        for (long j = 1; j <= st.n; ++j) {
            Rat v = sw.del_at(static_cast<int>(j));
            if (!rat_is_int(v) || v < 0) return std::nullopt;
            vals.push_back(rat_to_long(v));
        }
        if (!std::is_sorted(vals.rbegin(), vals.rend())) return std::nullopt;
        return Partition(std::move(vals));
    };
    if (st.x != Tag::a) {
        std::vector<long> nu_head;
        for (long i = 1; i <= st.m; ++i) {
            Rat v = sw.eps_at(static_cast<int>(i));
            if (!rat_is_int(v) || v < 0) return std::nullopt;
            nu_head.push_back(rat_to_long(v));
        }
        if (!std::is_sorted(nu_head.rbegin(), nu_head.rend())) return std::nullopt;
        auto tau_c = positive_delta_tail();
        if (!tau_c) return std::nullopt;
        Partition tau = tau_c->conjugate();
        std::vector<long> nu = nu_head;
        for (std::size_t i = 1; i <= tau.length(); ++i) nu.push_back(tau.part(i));
        if (!std::is_sorted(nu.rbegin(), nu.rend())) return std::nullopt;
        Partition mu0 = Partition(std::move(nu)).conjugate();
        for (std::size_t i = 1; i <= mu0.length(); ++i) mu.set(static_cast<int>(i), mu0.part(i));
        return mu;
    }
    // Type a.
    std::vector<long> tau_head;
    for (long i = 1; i <= st.m; ++i) {
        Rat v = sw.eps_at(static_cast<int>(i));
        if (!rat_is_int(v) || v < 0) return std::nullopt;
        tau_head.push_back(rat_to_long(v));
    }
    if (!std::is_sorted(tau_head.rbegin(), tau_head.rend())) return std::nullopt;
    std::vector<long> nuc;
    for (long j = 1; j <= st.n; ++j) {
        Rat v = sw.del_at(static_cast<int>(j));
        if (!rat_is_int(v) || v < 0) return std::nullopt;
        nuc.push_back(rat_to_long(v));
    }
    if (!std::is_sorted(nuc.rbegin(), nuc.rend())) return std::nullopt;
    Partition nu = Partition(std::move(nuc)).conjugate();
    std::vector<long> tau = tau_head;
    for (std::size_t i = 1; i <= nu.length(); ++i) tau.push_back(nu.part(i));
    if (!std::is_sorted(tau.rbegin(), tau.rend())) return std::nullopt;
    Partition eta = Partition(std::move(tau)).conjugate();
    // zeta: first q entries from the negative delta coordinates, tail from chi.
    std::vector<long> zeta;
    for (long j = 1; j <= st.q; ++j) {
        Rat v = -sw.del_at(-static_cast<int>(j));
        if (!rat_is_int(v) || v < 0) return std::nullopt;
        zeta.push_back(rat_to_long(v));
    }
    std::vector<long> chic;
    for (long i = 1; i <= st.p; ++i) {
        Rat v = -sw.eps_at(-static_cast<int>(i));
        if (!rat_is_int(v) || v < 0) return std::nullopt;
        chic.push_back(rat_to_long(v));
    }
    if (!std::is_sorted(chic.rbegin(), chic.rend())) return std::nullopt;
    Partition chi = Partition(std::move(chic)).conjugate();
    for (std::size_t i = 1; i <= chi.length(); ++i) zeta.push_back(chi.part(i));
    if (!std::is_sorted(zeta.rbegin(), zeta.rend())) return std::nullopt;
    for (std::size_t i = 1; i <= eta.length(); ++i) mu.set(static_cast<int>(i), eta.part(i));
    for (std::size_t j = 0; j < zeta.size(); ++j)
        if (zeta[j] != 0) mu.set(-static_cast<int>(j), -Rat(zeta[j]));
    return mu;
}

// theta between positive and negative levels: conjugate the coordinates and
// rescale the level (c <-> d and b <-> b0 pairs).
enum class NegDirection { c_to_d, d_to_c, b_to_b0, b0_to_b };

inline WeightCoords theta_negative(NegDirection dir, const WeightCoords& mu) {
    MembershipResult mem = in_P_plus_l(mu);
    require(mem.member && mu.tag != Tag::a, "theta_negative: weight not of P+_l shape");
    WeightCoords out;
    Partition conj = mem.eta.conjugate();
    switch (dir) {
        case NegDirection::c_to_d:
            require(mu.tag == Tag::c, "source must be c-infinity");
            out.tag = Tag::d;
            out.level = -2 * mu.level;
            break;
        case NegDirection::d_to_c:
            require(mu.tag == Tag::d, "source must be d-infinity");
            out.tag = Tag::c;
            out.level = -mu.level / 2;
            break;
        case NegDirection::b_to_b0:
            require(mu.tag == Tag::b, "source must be b-infinity");
            out.tag = Tag::b0;
            out.level = -mu.level / 2;
            break;
        case NegDirection::b0_to_b:
            require(mu.tag == Tag::b0, "source must be b0-infinity");
            out.tag = Tag::b;
            out.level = -2 * mu.level;
            break;
    }
    for (std::size_t i = 1; i <= conj.length(); ++i) out.set(static_cast<int>(i), conj.part(i));
    return out;
}

// ---------------------------------------------------------------------------
// Casimir eigenvalues.

// (mu + 2 rho_c | mu)_c as a closed quadratic form in the coordinates; agrees
// with the per-type formulas on P+_l shapes and is invariant under the dot
// action for arbitrary finitely supported coordinates.
inline Rat casimir_c(const WeightCoords& mu) {
    Rat total = 0;
    for (const auto& [i, v] : mu.coords) {
        total += v * (v + 2 * rho_coord(mu.tag, i));
        Rat g;
        switch (mu.tag) {
            case Tag::a: g = (i >= 1) ? Rat(-1, 2) : Rat(1, 2); break;
            case Tag::b:
            case Tag::d: g = Rat(-1, 2); break;
            case Tag::c:
            case Tag::b0: g = Rat(-1); break;
        }
        total += 2 * mu.level * g * v;
    }
    return total;
}

// rho_s coordinates per super type.
inline Rat rho_s_eps(const SuperTag& st, int i) {
    if (st.x == Tag::a) return (i < 0) ? Rat(-i - st.q) : Rat(1 - i);
    switch (st.x) {
        case Tag::b: return Rat(-i) + Rat(1, 2);
        case Tag::c: return Rat(1 - i);
        case Tag::d: return Rat(-i);
        default: return 0;
    }
}

inline Rat rho_s_del(const SuperTag& st, int j) {
    if (st.x == Tag::a) return (j < 0) ? Rat(-j - 1) : Rat(st.m - j);
    switch (st.x) {
        case Tag::b: return Rat(st.m - j) + Rat(1, 2);
        case Tag::c: return Rat(st.m - j);
        case Tag::d: return Rat(st.m - j + 1);
        default: return 0;
    }
}

// (tilde-Lambda_0 | eps_i)_s and (tilde-Lambda_0 | delta_j)_s.
inline Rat pairing_L0_eps(const SuperTag& st, int i) {
    if (st.x == Tag::a) return (i < 0) ? Rat(1, 2) : Rat(-1, 2);
    return 1;
}
inline Rat pairing_L0_del(const SuperTag& st, int j) {
    if (st.x == Tag::a) return (j < 0) ? Rat(1, 2) : Rat(-1, 2);
    return 1;
}

// Signature of the basis vectors: (eps|eps) and (del|del).
inline int pairing_eps_sign(const SuperTag& st) { return st.x == Tag::a ? -1 : 1; }
inline int pairing_del_sign(const SuperTag& st) { return st.x == Tag::a ? 1 : -1; }

// (mubar + 2 rho_s | mubar)_s, with the convention (L0|L0)_s = 0.
inline Rat casimir_s(const SuperWeight& sw) {
    const SuperTag& st = sw.tag;
    int se = pairing_eps_sign(st), sd = pairing_del_sign(st);
    Rat total = 0;
    for (const auto& [i, a] : sw.eps)
        total += se * a * (a + 2 * rho_s_eps(st, i)) + 2 * sw.level * pairing_L0_eps(st, i) * a;
    for (const auto& [j, b] : sw.del)
        total += sd * b * (b + 2 * rho_s_del(st, j)) + 2 * sw.level * pairing_L0_del(st, j) * b;
    // 2 level (rho_s | L0)_s, summed over the full finite index ranges.
    Rat rl = 0;
    for (long i = 1; i <= st.m; ++i) rl += rho_s_eps(st, static_cast<int>(i)) * pairing_L0_eps(st, static_cast<int>(i));
    for (long j = 1; j <= st.n; ++j) rl += rho_s_del(st, static_cast<int>(j)) * pairing_L0_del(st, static_cast<int>(j));
    if (st.x == Tag::a) {
        for (long i = 1; i <= st.p; ++i)
            rl += rho_s_eps(st, -static_cast<int>(i)) * pairing_L0_eps(st, -static_cast<int>(i));
        for (long j = 1; j <= st.q; ++j)
            rl += rho_s_del(st, -static_cast<int>(j)) * pairing_L0_del(st, -static_cast<int>(j));
    }
    total += 2 * sw.level * rl;
    return total;
}

// The constant bar-C of the Casimir comparison lemmas: cbar^2 (L0|L0)_s
// + 2 cbar (rho_s|L0)_s with (L0|L0)_s = 0.
inline Rat casimir_constant(const SuperTag& st, const Rat& cbar) {
    SuperWeight empty;
    empty.tag = st;
    empty.level = cbar;
    return casimir_s(empty);
}

// ---------------------------------------------------------------------------
// Seeded sampling of P++ weights for the lemma suites.

inline Partition random_hook_partition(std::mt19937_64& rng, long hook_a, long hook_b, long cap) {
    std::vector<long> parts;
    long prev = cap;
    for (long i = 0; i < hook_a; ++i) {
        long v = static_cast<long>(rng() % static_cast<unsigned long>(prev + 1));
        parts.push_back(v);
        prev = v;
    }
    prev = std::min(prev, hook_b);
    long extra = static_cast<long>(rng() % static_cast<unsigned long>(cap + 1));
    for (long i = 0; i < extra; ++i) {
        long v = static_cast<long>(rng() % static_cast<unsigned long>(prev + 1));
        parts.push_back(v);
        prev = v;
    }
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return Partition(std::move(parts));
}

// Random element of P++_{l,c} for the given tag and hook sizes.
inline WeightCoords random_P_plusplus(std::mt19937_64& rng, Tag tag, const Rat& level, long p, long q,
                                      long m, long n, long cap = 6) {
    WeightCoords mu;
    mu.tag = tag;
    mu.level = level;
    Partition eta = random_hook_partition(rng, n, m, cap);
    for (std::size_t i = 1; i <= eta.length(); ++i) mu.set(static_cast<int>(i), eta.part(i));
    if (tag == Tag::a) {
        Partition zeta = random_hook_partition(rng, q, p, cap);
        for (std::size_t j = 1; j <= zeta.length(); ++j)
            mu.set(-static_cast<int>(j - 1), -Rat(zeta.part(j)));
    }
    return mu;
}

}  // namespace howe
