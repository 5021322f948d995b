#pragma once

// Schur, skew Schur and hook Schur polynomials over a chosen sub-alphabet of a
// series context, plus decomposition into the Schur basis and the omega
// involution on that basis.

#include <functional>
#include <map>
#include <vector>

#include "howe/partition.hpp"
#include "howe/series.hpp"

namespace howe {

// Complete homogeneous symmetric polynomial h_k in the given variables.
inline Series complete_h(const CtxPtr& ctx, long D, const std::vector<int>& vars, long k) {
    Series s(ctx, D);
    if (k < 0) return s;
    if (2 * k > s.degree_bound2() && !vars.empty() && ctx->var(vars[0]).kind == VarKind::module_var)
        return s;  // every term would be truncated anyway
    Expo e = s.zero_expo();
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (left == 0) {
            s.add_term(e, 1);
            return;
        }
        if (i >= vars.size()) return;
        for (long take = left; take >= 0; --take) {
            e[static_cast<std::size_t>(vars[i])] = static_cast<int32_t>(2 * take);
            rec(i + 1, left - take);
        }
        e[static_cast<std::size_t>(vars[i])] = 0;
    };
    rec(0, k);
    return s;
}

namespace detail {

// Determinant of the r x r matrix entry(i, j) of series, Laplace expansion
// along rows with minors memoized on the column subset.
inline Series jacobi_trudi_det(const CtxPtr& ctx, long D, std::size_t r,
                               const std::function<Series(std::size_t, std::size_t)>& entry) {
    if (r == 0) return Series::one(ctx, D);
    require(r <= 20, "Jacobi-Trudi determinant too large");
    std::map<uint32_t, Series> memo;
    memo.emplace(0u, Series::one(ctx, D));
    // minor(S) = det of the submatrix with rows 1..|S| and columns S,
    // expanded along its last row.
    std::function<const Series&(uint32_t)> minor = [&](uint32_t cols) -> const Series& {
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        std::size_t k = static_cast<std::size_t>(__builtin_popcount(cols));
        Series det(ctx, D);
        std::size_t t = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (!(cols & (1u << j))) continue;
            Series e = entry(k - 1, j + 1);
            if (!e.is_zero()) {
                Series sub = minor(cols & ~(1u << j));
                det += ((k - 1 + t) % 2 == 0) ? e * sub : -(e * sub);
            }
            ++t;
        }
        return memo.emplace(cols, std::move(det)).first->second;
    };
    return minor((1u << r) - 1u);
}

}  // namespace detail

// Schur polynomial s_lambda in the given variables, det(h_{lambda_i - i + j}).
inline Series schur_poly(const CtxPtr& ctx, long D, const std::vector<int>& vars, const Partition& lam) {
    if (lam.length() > vars.size()) return Series(ctx, D);
    std::size_t r = lam.length();
    return detail::jacobi_trudi_det(ctx, D, r, [&](std::size_t i, std::size_t j) {
        return complete_h(ctx, D, vars, lam.part(i + 1) - static_cast<long>(i + 1) + static_cast<long>(j));
    });
}

// Laurent Schur polynomial for a generalized partition: shift by the last part.
inline Series schur_laurent(const CtxPtr& ctx, long D, const std::vector<int>& vars,
                            const GeneralizedPartition& lam) {
    require(lam.depth() == static_cast<long>(vars.size()),
            "Laurent Schur needs as many variables as the depth");
    long shift = lam.parts().back();
    std::vector<long> shifted;
    for (long v : lam.parts()) shifted.push_back(v - shift);
    Series s = schur_poly(ctx, D, vars, Partition(std::move(shifted)));
    Series m(ctx, D);
    Expo e = m.zero_expo();
    for (int v : vars) m.set_exp(e, v, Rat(shift));
    return s.mul_monomial(e, 1);
}

// Skew Schur polynomial s_{lambda/mu}, det(h_{lambda_i - mu_j - i + j}).
inline Series skew_schur_poly(const CtxPtr& ctx, long D, const std::vector<int>& vars,
                              const Partition& lam, const Partition& mu) {
    require(contains(mu, lam), "skew shape requires mu inside lambda");
    std::size_t r = lam.length();
    return detail::jacobi_trudi_det(ctx, D, r, [&](std::size_t i, std::size_t j) {
        return complete_h(ctx, D, vars,
                          lam.part(i + 1) - mu.part(j) - static_cast<long>(i + 1) + static_cast<long>(j));
    });
}

// Finitely supported integer vector in the Schur basis.
struct SchurVector {
    std::string alphabet;
    std::map<Partition, Int> coeff;

    void add(const Partition& p, const Int& c) {
        if (c == 0) return;
        auto it = coeff.find(p);
        if (it == coeff.end())
            coeff.emplace(p, c);
        else {
            it->second += c;
            if (it->second == 0) coeff.erase(it);
        }
    }
};

// omega sends s_lambda to s_{lambda'}.
inline SchurVector omega(const SchurVector& v) {
    SchurVector out;
    out.alphabet = v.alphabet;
    for (const auto& [p, c] : v.coeff) out.add(p.conjugate(), c);
    return out;
}

// Decompose a symmetric polynomial supported on `vars` into the Schur basis by
// peeling the lex-greatest exponent vector. Faithful as a symmetric-function
// statement when the alphabet is at least as large as every occurring length
// (callers embed into a scratch alphabet of size >= deg for general inputs).
// The optional cache must be dedicated to this (context, vars, bound) triple.
inline SchurVector schur_decompose(const Series& p, const std::vector<int>& vars,
                                   const std::string& alphabet_tag = "",
                                   std::map<Partition, Series>* cache = nullptr) {
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < p.ctx()->nvars(); ++i)
            if (e[static_cast<std::size_t>(i)] != 0 &&
                std::find(vars.begin(), vars.end(), i) == vars.end())
                fail("schur_decompose: series involves a variable outside the alphabet");
    SchurVector out;
    out.alphabet = alphabet_tag;
    Series rem = p;
    while (!rem.is_zero()) {
        const auto& [e, c] = rem.leading();
        std::vector<long> parts;
        for (int v : vars) {
            int32_t x = e[static_cast<std::size_t>(v)];
            require(x >= 0 && x % 2 == 0, "schur_decompose: non-partition leading exponent");
            parts.push_back(x / 2);
        }
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            require(parts[i] >= parts[i + 1], "schur_decompose: non-symmetric input (leading term)");
        require(rat_is_int(c), "schur_decompose: non-integer coefficient");
        Partition lam(std::move(parts));
        Int ci = c.get_num();
        out.add(lam, ci);
        if (cache) {
            auto it = cache->find(lam);
            if (it == cache->end())
                it = cache->emplace(lam, schur_poly(rem.ctx(), rem.degree_bound(), vars, lam)).first;
            rem -= it->second * Rat(ci);
        } else {
            rem -= schur_poly(rem.ctx(), rem.degree_bound(), vars, lam) * Rat(ci);
        }
    }
    return out;
}

// All mu inside lam with at most max_len rows.
inline void subpartitions(const Partition& lam, long max_len,
                          const std::function<void(const Partition&)>& emit) {
    std::vector<long> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t row) {
        if (static_cast<long>(row) > max_len || row > lam.length()) {
            std::vector<long> c = cur;
            emit(Partition(std::move(c)));
            return;
        }
        long hi = lam.part(row);
        if (row > 1) hi = std::min(hi, cur[row - 2]);
        for (long v = hi; v >= 0; --v) {
            if (v == 0) {
                std::vector<long> c = cur;
                emit(Partition(std::move(c)));
                return;
            }
            cur.push_back(v);
            rec(row + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

// Hook Schur polynomial hs_lambda(A, B) = sum_{mu in lambda} s_mu(A) s_{lambda'/mu'}(B).
// Nonzero exactly when lambda is an (|A| | |B|)-hook partition.
inline Series hook_schur(const CtxPtr& ctx, long D, const Partition& lam,
                         const std::vector<int>& plain_vars, const std::vector<int>& twist_vars) {
    Series out(ctx, D);
    Partition lamc = lam.conjugate();
    subpartitions(lam, static_cast<long>(plain_vars.size()), [&](const Partition& mu) {
        Series a = schur_poly(ctx, D, plain_vars, mu);
        if (a.is_zero()) return;
        Series b = skew_schur_poly(ctx, D, twist_vars, lamc, mu.conjugate());
        if (b.is_zero()) return;
        out += a * b;
    });
    return out;
}

}  // namespace howe
