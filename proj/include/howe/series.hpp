#pragma once

// Exact sparse Laurent series over named variables, graded and truncated by
// module-side degree. Carrier of every character in the library.
//
// Exponents are stored doubled (units of 1/2) so that half-exponent variables
// (z^{1/2} in Pin/spin characters, half-integral monomial prefactors) share one
// representation with ordinary ones. A variable of the sign kind keeps its
// exponent reduced mod 2.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "howe/common.hpp"

namespace howe {

enum class VarKind {
    module_var,  // counts toward the truncation degree
    group_var,   // z-variables: Laurent, degree 0
    sign_var,    // order-2 variable (the -I eigenvalue), exponent mod 2
};

struct VarInfo {
    std::string name;
    VarKind kind = VarKind::module_var;
    bool half = false;  // exponent unit 1/2
};

class Context {
public:
    int add_var(const std::string& name, VarKind kind, bool half = false) {
        require(byname_.find(name) == byname_.end(), "duplicate variable name: " + name);
        require(!(kind == VarKind::sign_var && half), "sign variables have integer exponents");
        vars_.push_back(VarInfo{name, kind, half});
        byname_[name] = static_cast<int>(vars_.size()) - 1;
        return static_cast<int>(vars_.size()) - 1;
    }

    std::vector<int> add_family(const std::string& prefix, int count, VarKind kind, bool half = false) {
        std::vector<int> ids;
        for (int i = 1; i <= count; ++i) ids.push_back(add_var(prefix + std::to_string(i), kind, half));
        return ids;
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    const VarInfo& var(int id) const { return vars_.at(static_cast<std::size_t>(id)); }
    int find(const std::string& name) const {
        auto it = byname_.find(name);
        return it == byname_.end() ? -1 : it->second;
    }

    bool same_table(const Context& o) const {
        if (vars_.size() != o.vars_.size()) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name != o.vars_[i].name || vars_[i].kind != o.vars_[i].kind ||
                vars_[i].half != o.vars_[i].half)
                return false;
        return true;
    }

private:
    std::vector<VarInfo> vars_;
    std::unordered_map<std::string, int> byname_;
};

using CtxPtr = std::shared_ptr<const Context>;

// Exponent vector, one (doubled) entry per context variable.
using Expo = std::vector<int32_t>;

struct LexDesc {
    bool operator()(const Expo& a, const Expo& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Effectively untruncated; large enough that no honest degree reaches it.
inline constexpr long kNoTruncation = 1L << 40;

class Series {
public:
    using TermMap = std::map<Expo, Rat, LexDesc>;

    Series(CtxPtr ctx, long degree_bound) : ctx_(std::move(ctx)), bound2_(2 * degree_bound) {
        require(static_cast<bool>(ctx_), "series needs a context");
    }

    static Series zero(CtxPtr ctx, long degree_bound) { return Series(std::move(ctx), degree_bound); }

    static Series constant(CtxPtr ctx, long degree_bound, const Rat& c) {
        Series s(std::move(ctx), degree_bound);
        if (c != 0) s.terms_.emplace(Expo(static_cast<std::size_t>(s.ctx_->nvars()), 0), c);
        return s;
    }

    static Series one(CtxPtr ctx, long degree_bound) { return constant(std::move(ctx), degree_bound, 1); }

    const CtxPtr& ctx() const { return ctx_; }
    long degree_bound() const { return bound2_ / 2; }
    long degree_bound2() const { return bound2_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    Expo zero_expo() const { return Expo(static_cast<std::size_t>(ctx_->nvars()), 0); }

    // Exact exponent assignment; v is the actual exponent (possibly half-integral).
    void set_exp(Expo& e, int var, const Rat& v) const {
        Rat doubled = v * 2;
        long d = rat_to_long(doubled);
        if (!ctx_->var(var).half) require(d % 2 == 0, "half exponent on an integer-unit variable");
        e[static_cast<std::size_t>(var)] = static_cast<int32_t>(d);
    }

    Rat exp_of(const Expo& e, int var) const {
        return frac(e[static_cast<std::size_t>(var)], 2);
    }

    // Module-side degree of a term, in half-units.
    long half_degree(const Expo& e) const {
        long d = 0;
        for (int i = 0; i < ctx_->nvars(); ++i)
            if (ctx_->var(i).kind == VarKind::module_var) d += e[static_cast<std::size_t>(i)];
        return d;
    }

    void add_term(Expo e, const Rat& c) {
        if (c == 0) return;
        normalize_signs(e);
        if (half_degree(e) > bound2_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Leading term in the descending lex order.
    const std::pair<const Expo, Rat>& leading() const {
        require(!terms_.empty(), "leading term of zero series");
        return *terms_.begin();
    }

    Series& operator+=(const Series& o) {
        check_compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series r(ctx_, degree_bound());
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Series& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [e, v] : terms_) v *= c;
        }
        return *this;
    }
    friend Series operator*(Series a, const Rat& c) { return a *= c; }
    friend Series operator*(const Rat& c, Series a) { return a *= c; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_compat(b);
        Series r(a.ctx_, a.degree_bound());
        if (a.terms_.empty() || b.terms_.empty()) return r;
        // Bucket the right factor by half-degree so truncation can skip work.
        long glo = 0, ghi = 0;
        bool first = true;
        for (const auto& [e, c] : b.terms_) {
            long g = b.half_degree(e);
            if (first) {
                glo = ghi = g;
                first = false;
            } else {
                glo = std::min(glo, g);
                ghi = std::max(ghi, g);
            }
        }
        std::vector<std::vector<const std::pair<const Expo, Rat>*>> bydeg(
            static_cast<std::size_t>(ghi - glo + 1));
        for (const auto& term : b.terms_) bydeg[static_cast<std::size_t>(b.half_degree(term.first) - glo)].push_back(&term);
        const std::size_t nv = static_cast<std::size_t>(a.ctx_->nvars());
        Expo sum(nv, 0);
        for (const auto& [ea, ca] : a.terms_) {
            long limit = a.bound2_ - a.half_degree(ea);
            if (limit < glo) continue;
            long top = std::min(ghi, limit);
            for (long g = glo; g <= top; ++g) {
                for (const auto* tb : bydeg[static_cast<std::size_t>(g - glo)]) {
                    for (std::size_t i = 0; i < nv; ++i) sum[i] = ea[i] + tb->first[i];
                    r.add_term(sum, ca * tb->second);
                }
            }
        }
        return r;
    }

    Series& operator*=(const Series& o) { return *this = *this * o; }

    // Multiply by a single monomial.
    Series mul_monomial(const Expo& m, const Rat& c) const {
        Series r(ctx_, degree_bound());
        const std::size_t nv = static_cast<std::size_t>(ctx_->nvars());
        Expo sum(nv, 0);
        for (const auto& [e, v] : terms_) {
            for (std::size_t i = 0; i < nv; ++i) sum[i] = e[i] + m[i];
            r.add_term(sum, v * c);
        }
        return r;
    }

    bool operator==(const Series& o) const {
        check_compat(o);
        return terms_ == o.terms_;
    }
    bool operator!=(const Series& o) const { return !(*this == o); }

    // First differing exponent vector in descending lex order, with both coefficients.
    static std::optional<std::tuple<Expo, Rat, Rat>> first_mismatch(const Series& a, const Series& b) {
        a.check_compat(b);
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        LexDesc before;
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && before(ia->first, ib->first)))
                return std::make_tuple(ia->first, ia->second, Rat(0));
            if (ia == a.terms_.end() || before(ib->first, ia->first))
                return std::make_tuple(ib->first, Rat(0), ib->second);
            if (ia->second != ib->second) return std::make_tuple(ia->first, ia->second, ib->second);
            ++ia;
            ++ib;
        }
        return std::nullopt;
    }

    Series truncated(long new_bound) const {
        Series r(ctx_, new_bound);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    Series subst_zero(int var) const {
        Series r(ctx_, degree_bound());
        for (const auto& [e, c] : terms_) {
            int32_t x = e[static_cast<std::size_t>(var)];
            if (x == 0) r.add_term(e, c);
            else if (x < 0)
                fail("substituting 0 into a negative power of " + ctx_->var(var).name);
        }
        return r;
    }

    Series subst_one(int var) const {
        Series r(ctx_, degree_bound());
        for (const auto& [e, c] : terms_) {
            Expo e2 = e;
            e2[static_cast<std::size_t>(var)] = 0;
            r.add_term(std::move(e2), c);
        }
        return r;
    }

    Rat eval_ones() const {
        Rat s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // Map this series into another context; varmap[i] is the target id of
    // variable i (or -1, in which case the variable must not occur).
    Series rename_vars(CtxPtr target, const std::vector<int>& varmap) const {
        require(varmap.size() == static_cast<std::size_t>(ctx_->nvars()), "rename map size mismatch");
        Series r(std::move(target), degree_bound());
        for (const auto& [e, c] : terms_) {
            Expo e2 = r.zero_expo();
            for (std::size_t i = 0; i < varmap.size(); ++i) {
                if (e[i] == 0) continue;
                require(varmap[i] >= 0, "renaming drops a live variable: " + ctx_->var(static_cast<int>(i)).name);
                e2[static_cast<std::size_t>(varmap[i])] += e[i];
            }
            r.add_term(std::move(e2), c);
        }
        return r;
    }

    // Exact quotient; requires the division to terminate with zero remainder.
    // Terminates in exactly as many steps as the quotient has terms whenever
    // the divisor divides exactly (each step emits one quotient term).
    Series exact_div(const Series& den, std::size_t step_cap = 2000000) const {
        check_compat(den);
        require(!den.terms_.empty(), "division by zero series");
        Series q(ctx_, degree_bound());
        Series rem = *this;
        const auto& dl = den.leading();
        const std::size_t nv = static_cast<std::size_t>(ctx_->nvars());
        std::size_t steps = 0;
        Expo qe(nv, 0), sum(nv, 0);
        while (!rem.terms_.empty()) {
            require(++steps <= step_cap, "exact_div: divisor does not divide (step cap hit)");
            const auto& rl = rem.leading();
            for (std::size_t i = 0; i < nv; ++i) qe[i] = rl.first[i] - dl.first[i];
            Rat qc = rl.second / dl.second;
            q.add_term(qe, qc);
            for (const auto& [e, c] : den.terms_) {
                for (std::size_t i = 0; i < nv; ++i) sum[i] = qe[i] + e[i];
                rem.add_term(sum, -qc * c);
            }
        }
        return q;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
            bool neg = a < 0;
            if (neg) a = -a;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            std::string mono = monomial_str(e);
            if (mono.empty()) {
                out += rat_str(a);
            } else {
                if (a != 1) out += rat_str(a) + "*";
                out += mono;
            }
        }
        return out;
    }

    std::string monomial_str(const Expo& e) const {
        std::string out;
        for (int i = 0; i < ctx_->nvars(); ++i) {
            int32_t x = e[static_cast<std::size_t>(i)];
            if (x == 0) continue;
            if (!out.empty()) out += "*";
            out += ctx_->var(i).name;
            if (x != 2) {
                out += "^";
                if (x % 2 == 0)
                    out += std::to_string(x / 2);
                else
                    out += std::to_string(x) + "/2";
            }
        }
        return out;
    }

private:
    void normalize_signs(Expo& e) const {
        for (int i = 0; i < ctx_->nvars(); ++i) {
            if (ctx_->var(i).kind != VarKind::sign_var) continue;
            auto& x = e[static_cast<std::size_t>(i)];
            x = static_cast<int32_t>(((x / 2) % 2 + 2) % 2) * 2;
        }
    }

    void check_compat(const Series& o) const {
        require(ctx_ == o.ctx_ || ctx_->same_table(*o.ctx_), "series from different alphabets");
        require(bound2_ == o.bound2_, "series with different degree bounds");
    }

    CtxPtr ctx_;
    long bound2_;  // truncation bound, in half-units
    TermMap terms_;
};

// One factor (1 + sign*monomial)^exponent of a product expansion.
struct ProductFactor {
    Expo mono;
    int sign = 1;      // +1 or -1
    int exponent = 1;  // +1 or -1
};

inline Series expand_factor(const CtxPtr& ctx, long D, const ProductFactor& f) {
    Series t(ctx, D);
    t.add_term(f.mono, Rat(f.sign));
    if (f.exponent == 1) return Series::one(ctx, D) + t;
    long hd = t.half_degree(f.mono);
    require(hd >= 1, "non-convergent factor: inverse of a degree-0 monomial");
    // (1 + t)^{-1} = sum_k (-t)^k, truncated.
    Series acc = Series::one(ctx, D);
    Series power = Series::one(ctx, D);
    Series neg_t = -t;
    for (long k = 1; k * hd <= 2 * D; ++k) {
        power = power * neg_t;
        acc += power;
    }
    return acc;
}

inline Series expand_product(const CtxPtr& ctx, long D, const std::vector<ProductFactor>& factors) {
    Series acc = Series::one(ctx, D);
    for (const auto& f : factors) acc = acc * expand_factor(ctx, D, f);
    return acc;
}

inline Series product(std::vector<Series> factors, const CtxPtr& ctx, long D) {
    Series acc = Series::one(ctx, D);
    for (auto& f : factors) acc = acc * f;
    return acc;
}

}  // namespace howe
