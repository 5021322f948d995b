#include <catch2/catch_amalgamated.hpp>

#include "howe/partition.hpp"
#include "howe/schur.hpp"

using namespace howe;

namespace {

struct Vars {
    CtxPtr ctx;
    std::vector<int> xs, ys;
    explicit Vars(int nx, int ny = 0) {
        auto c = std::make_shared<Context>();
        xs = c->add_family("x", nx, VarKind::module_var);
        if (ny) ys = c->add_family("y", ny, VarKind::module_var);
        ctx = c;
    }
};

// Independent oracle: sum of monomials over semistandard tableaux of shape
// lambda with entries in 1..N (rows weakly increase, columns strictly).
Series schur_by_tableaux(const CtxPtr& ctx, long D, const std::vector<int>& vars, const Partition& lam) {
    Series out(ctx, D);
    std::size_t rows = lam.length();
    if (rows == 0) return Series::one(ctx, D);
    std::vector<std::vector<int>> T(rows);
    for (std::size_t r = 0; r < rows; ++r) T[r].assign(static_cast<std::size_t>(lam.part(r + 1)), 0);
    int N = static_cast<int>(vars.size());
    std::function<bool(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) -> bool {
        if (r == rows) {
            Expo e = out.zero_expo();
            for (const auto& row : T)
                for (int v : row) e[static_cast<std::size_t>(vars[static_cast<std::size_t>(v - 1)])] += 2;
            out.add_term(e, 1);
            return true;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc >= T[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, T[r][c - 1]);
        if (r > 0 && c < T[r - 1].size()) lo = std::max(lo, T[r - 1][c] + 1);
        for (int v = lo; v <= N; ++v) {
            T[r][c] = v;
            fill(nr, nc);
        }
        return true;
    };
    fill(0, 0);
    return out;
}

}  // namespace

TEST_CASE("schur polynomial basics") {
    Vars v(2);
    CHECK(schur_poly(v.ctx, 8, v.xs, Partition()) == Series::one(v.ctx, 8));
    CHECK(schur_poly(v.ctx, 8, v.xs, Partition({2, 1})).str() == "x1^2*x2 + x1*x2^2");
    CHECK(schur_poly(v.ctx, 8, v.xs, Partition({1, 1, 1})).is_zero());  // length > variables
}

TEST_CASE("Laurent Schur polynomials") {
    auto c = std::make_shared<Context>();
    auto zs = c->add_family("z", 2, VarKind::group_var, true);
    CtxPtr ctx = c;
    CHECK(schur_laurent(ctx, 4, zs, GeneralizedPartition(2, {0, -1})).str() == "z1^-1 + z2^-1");
    CHECK(schur_laurent(ctx, 4, zs, GeneralizedPartition(2, {1, 0})).str() == "z1 + z2");
    CHECK(schur_laurent(ctx, 4, zs, GeneralizedPartition(2, {1, 1})).str() == "z1*z2");
}

TEST_CASE("skew Schur polynomials") {
    Vars v(2);
    Partition mu({1});
    CHECK(skew_schur_poly(v.ctx, 8, v.xs, mu, mu) == Series::one(v.ctx, 8));
    CHECK(skew_schur_poly(v.ctx, 8, v.xs, Partition({2}), mu) ==
          schur_poly(v.ctx, 8, v.xs, Partition({1})));
    CHECK(skew_schur_poly(v.ctx, 8, v.xs, Partition({2, 1}), mu).str() ==
          "x1^2 + 2*x1*x2 + x2^2");
    CHECK_THROWS_AS(skew_schur_poly(v.ctx, 8, v.xs, Partition({1}), Partition({2})), math_error);
}

TEST_CASE("Jacobi-Trudi agrees with tableau enumeration") {
    for (int N = 1; N <= 4; ++N) {
        Vars v(N);
        for (const Partition& lam : partitions_up_to(5))
            CHECK(schur_poly(v.ctx, 6, v.xs, lam) == schur_by_tableaux(v.ctx, 6, v.xs, lam));
    }
}

TEST_CASE("stability under dropping the last variable") {
    Vars big(4);
    Vars small(3);
    std::vector<int> map = {small.xs[0], small.xs[1], small.xs[2], -1};
    for (const Partition& lam : partitions_up_to(4)) {
        Series dropped = schur_poly(big.ctx, 6, big.xs, lam).subst_zero(big.xs[3]);
        // After zeroing x4 the series lives in the first three variables.
        std::vector<int> full_map = map;
        Series moved = dropped.rename_vars(small.ctx, full_map);
        CHECK(moved == schur_poly(small.ctx, 6, small.xs, lam));
    }
}

TEST_CASE("schur decomposition and Pieri-rule products") {
    Vars v(4);
    Series s1 = schur_poly(v.ctx, 10, v.xs, Partition({1}));
    Series s2 = schur_poly(v.ctx, 10, v.xs, Partition({2}));
    SchurVector d1 = schur_decompose(s1 * s1, v.xs);
    CHECK(d1.coeff.size() == 2);
    CHECK(d1.coeff.at(Partition({2})) == 1);
    CHECK(d1.coeff.at(Partition({1, 1})) == 1);
    SchurVector d2 = schur_decompose(s2 * s1, v.xs);
    CHECK(d2.coeff.at(Partition({3})) == 1);
    CHECK(d2.coeff.at(Partition({2, 1})) == 1);
    for (const Partition& lam : partitions_up_to(4)) {
        SchurVector rt = schur_decompose(schur_poly(v.ctx, 10, v.xs, lam), v.xs);
        CHECK(rt.coeff.size() == 1);
        CHECK(rt.coeff.at(lam) == 1);
    }
    CHECK_THROWS_AS(schur_decompose(s1 * s1 + s1.mul_monomial(s1.leading().first, 1), v.xs),
                    math_error);  // non-symmetric input
}

TEST_CASE("Littlewood-Richardson positivity and symmetry") {
    Vars v(8);
    std::map<Partition, Series> cache;
    std::vector<Partition> all = partitions_up_to(8);
    std::size_t failures = 0;
    for (const Partition& lam : all) {
        for (const Partition& mu : all) {
            if (lam.size() + mu.size() > 8 || lam < mu) continue;
            if (cache.find(lam) == cache.end()) cache.emplace(lam, schur_poly(v.ctx, 8, v.xs, lam));
            if (cache.find(mu) == cache.end()) cache.emplace(mu, schur_poly(v.ctx, 8, v.xs, mu));
            SchurVector dec = schur_decompose(cache.at(lam) * cache.at(mu), v.xs, "", &cache);
            SchurVector swapped = schur_decompose(cache.at(mu) * cache.at(lam), v.xs, "", &cache);
            for (const auto& [nu, c] : dec.coeff)
                if (c <= 0) ++failures;
            if (!(dec.coeff == swapped.coeff)) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("omega conjugates the Schur basis") {
    SchurVector h;
    h.add(Partition({4}), 1);
    SchurVector e = omega(h);
    CHECK(e.coeff.at(Partition({1, 1, 1, 1})) == 1);
    SchurVector id;
    id.add(Partition(), 1);
    CHECK(omega(id).coeff.at(Partition()) == 1);
    SchurVector sc;
    sc.add(Partition({2, 1}), 3);
    CHECK(omega(sc).coeff.at(Partition({2, 1})) == 3);
    CHECK(omega(omega(sc)).coeff == sc.coeff);
}

TEST_CASE("hook Schur polynomials") {
    Vars v(1, 1);  // plain slot y = x-family alias, twist slot = y-family
    CHECK(hook_schur(v.ctx, 12, Partition(), v.xs, v.ys) == Series::one(v.ctx, 12));
    // hs_(4)(a; b) = a^4 + a^3 b with one variable in each slot.
    Series hs4 = hook_schur(v.ctx, 12, Partition({4}), v.xs, v.ys);
    CHECK(hs4.str() == "x1^4 + x1^3*y1");

    Vars w(2, 3);
    Series hs1 = hook_schur(w.ctx, 12, Partition({1}), w.xs, w.ys);
    Series expect = schur_poly(w.ctx, 12, w.xs, Partition({1})) +
                    schur_poly(w.ctx, 12, w.ys, Partition({1}));
    CHECK(hs1 == expect);
}

TEST_CASE("hook Schur symmetry under conjugation") {
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            if (m + n == 0) continue;
            Vars v(std::max(m, 1), std::max(n, 1));
            std::vector<int> a(v.xs.begin(), v.xs.begin() + m);
            std::vector<int> b(v.ys.begin(), v.ys.begin() + n);
            for (const Partition& lam : partitions_up_to(6))
                CHECK(hook_schur(v.ctx, 12, lam, a, b) ==
                      hook_schur(v.ctx, 12, lam.conjugate(), b, a));
        }
    }
}

TEST_CASE("hook Schur vanishing characterizes hook partitions") {
    for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) {
            Vars v(std::max(m, 1), std::max(n, 1));
            std::vector<int> a(v.xs.begin(), v.xs.begin() + m);
            std::vector<int> b(v.ys.begin(), v.ys.begin() + n);
            for (const Partition& lam : partitions_up_to(6))
                CHECK(hook_schur(v.ctx, 12, lam, a, b).is_zero() != is_hook(lam, m, n));
        }
    }
}
