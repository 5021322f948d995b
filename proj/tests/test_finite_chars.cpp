#include <catch2/catch_amalgamated.hpp>

#include "howe/finite_chars.hpp"

using namespace howe;

namespace {

struct ZVars {
    CtxPtr ctx;
    std::vector<int> zs;
    int eps = -1;
    ZVars(int count, bool with_eps = false) {
        auto c = std::make_shared<Context>();
        zs = c->add_family("z", count, VarKind::group_var, true);
        if (with_eps) eps = c->add_var("eps", VarKind::sign_var);
        ctx = c;
    }
};

// Apply a signed permutation to the z-exponents and compare with the original.
Series z_transform(const Series& s, const std::vector<int>& zs, const std::vector<int>& perm,
                   const std::vector<int>& sign) {
    Series out(s.ctx(), s.degree_bound());
    for (const auto& [e, c] : s.terms()) {
        Expo e2 = e;
        for (std::size_t i = 0; i < zs.size(); ++i) {
            int32_t v = e[static_cast<std::size_t>(zs[static_cast<std::size_t>(perm[i])])];
            e2[static_cast<std::size_t>(zs[i])] = static_cast<int32_t>(sign[i] * v);
        }
        out.add_term(e2, c);
    }
    return out;
}

}  // namespace

TEST_CASE("GL characters") {
    ZVars v(2);
    CHECK(char_gl(v.ctx, 8, v.zs, GeneralizedPartition(2, {1, 0})).str() == "z1 + z2");
    CHECK(char_gl(v.ctx, 8, v.zs, GeneralizedPartition(2, {1, 1})).str() == "z1*z2");
    CHECK(char_gl(v.ctx, 8, v.zs, GeneralizedPartition(2, {0, -1})).str() == "z1^-1 + z2^-1");
}

TEST_CASE("Sp characters") {
    ZVars v1(1);
    CHECK(char_sp(v1.ctx, 8, v1.zs, Partition(), 2) == Series::one(v1.ctx, 8));
    CHECK(char_sp(v1.ctx, 8, v1.zs, Partition({1}), 2).str() == "z1 + z1^-1");
    ZVars v2(2);
    Series c11 = char_sp(v2.ctx, 8, v2.zs, Partition({1, 1}), 4);
    CHECK(c11.nterms() == 5);
    CHECK(c11.eval_ones() == 5);
    CHECK_THROWS_AS(char_sp(v2.ctx, 8, v2.zs, Partition({1, 1, 1}), 4), math_error);
}

TEST_CASE("O characters, even d") {
    ZVars v1(1);
    CHECK(char_o(v1.ctx, 8, v1.zs, Partition(), 2, -1) == Series::one(v1.ctx, 8));
    for (long k = 1; k <= 3; ++k) {
        Series c = char_o(v1.ctx, 8, v1.zs, Partition({k}), 2, -1);
        Series expect(v1.ctx, 8);
        Expo e = expect.zero_expo();
        expect.set_exp(e, v1.zs[0], Rat(k));
        expect.add_term(e, 1);
        expect.set_exp(e, v1.zs[0], Rat(-k));
        expect.add_term(e, 1);
        CHECK(c == expect);
    }
}

TEST_CASE("O characters, odd d, sign grading") {
    ZVars v(1, true);
    // V^lambda and V^{lambda-tilde} differ by the determinant twist, and the
    // sign grading follows |lambda| mod 2 (the Fock-trace normalization).
    Series c1 = char_o(v.ctx, 8, v.zs, Partition({1}), 3, v.eps);
    Series so1 = char_so_odd(v.ctx, 8, v.zs, {Rat(1)});
    Series epschar(v.ctx, 8);
    Expo e = epschar.zero_expo();
    epschar.set_exp(e, v.eps, 1);
    epschar.add_term(e, 1);
    CHECK(so1.str() == "z1 + 1 + z1^-1");
    CHECK(c1 == so1 * epschar);
    Series c11 = char_o(v.ctx, 8, v.zs, Partition({1, 1}), 3, v.eps);
    CHECK(c11 == so1);  // |(1,1)| is even: trivial sign grading
    // ch V^lambda = eps ch V^{lambda-tilde} for every lambda in P(O(d)).
    for (long d : {1L, 3L, 5L}) {
        ZVars vv(static_cast<int>(d / 2), true);
        for (const Partition& lam : partitions_up_to(4)) {
            Partition cj = lam.conjugate();
            if (cj.part(1) + cj.part(2) > d) continue;
            Series lhs = char_o(vv.ctx, 8, vv.zs, lam, d, vv.eps);
            Series rhs = char_o(vv.ctx, 8, vv.zs, tilde(lam, d), d, vv.eps);
            Series ee(vv.ctx, 8);
            Expo x = ee.zero_expo();
            ee.set_exp(x, vv.eps, 1);
            ee.add_term(x, 1);
            CHECK(lhs == rhs * ee);
        }
    }
    for (long d : {2L, 4L, 6L}) {
        ZVars vv(static_cast<int>(d / 2));
        for (const Partition& lam : partitions_up_to(4)) {
            Partition cj = lam.conjugate();
            if (cj.part(1) + cj.part(2) > d) continue;
            CHECK(char_o(vv.ctx, 8, vv.zs, lam, d, -1) ==
                  char_o(vv.ctx, 8, vv.zs, tilde(lam, d), d, -1));
        }
    }
}

TEST_CASE("Pin characters") {
    ZVars v1(1);
    CHECK(char_pin(v1.ctx, 8, v1.zs, Partition(), 2).str() == "z1^1/2 + z1^-1/2");
    CHECK(char_pin(v1.ctx, 8, v1.zs, Partition({2}), 2).str() == "z1^5/2 + z1^-5/2");
    ZVars v2(2);
    Series p0 = char_pin(v2.ctx, 8, v2.zs, Partition(), 4);
    CHECK(p0.nterms() == 4);
    CHECK(p0.eval_ones() == 4);
}

TEST_CASE("characters are Weyl-group symmetric") {
    ZVars v(2);
    Series c = char_sp(v.ctx, 8, v.zs, Partition({2, 1}), 4);
    CHECK(z_transform(c, v.zs, {1, 0}, {1, 1}) == c);
    CHECK(z_transform(c, v.zs, {0, 1}, {-1, 1}) == c);
    Series o = char_o(v.ctx, 8, v.zs, Partition({2}), 4, -1);
    CHECK(z_transform(o, v.zs, {1, 0}, {1, -1}) == o);
    Series pin = char_pin(v.ctx, 8, v.zs, Partition({1}), 4);
    CHECK(z_transform(pin, v.zs, {1, 0}, {1, 1}) == pin);
    CHECK(z_transform(pin, v.zs, {0, 1}, {-1, -1}) == pin);
}

TEST_CASE("evaluation at z = 1 matches the Weyl dimension formula") {
    for (long d = 1; d <= 6; ++d) {
        for (const Partition& lam : partitions_up_to(4)) {
            if (d % 2 == 0 && 2 * static_cast<long>(lam.length()) <= d) {
                ZVars v(static_cast<int>(d / 2));
                CHECK(char_sp(v.ctx, 10, v.zs, lam, d).eval_ones() == weyl_dim_sp(lam, d));
                CHECK(char_pin(v.ctx, 10, v.zs, lam, d).eval_ones() == weyl_dim_pin(lam, d));
            }
            Partition cj = lam.conjugate();
            if (cj.part(1) + cj.part(2) <= d) {
                ZVars v(static_cast<int>(d / 2), d % 2 != 0);
                CHECK(char_o(v.ctx, 10, v.zs, lam, d, v.eps).eval_ones() == weyl_dim_o(lam, d));
            }
        }
    }
    for (const GeneralizedPartition& lam : generalized_partitions_up_to(4, 3)) {
        ZVars v(3);
        CHECK(char_gl(v.ctx, 10, v.zs, lam).eval_ones() == weyl_dim_gl(lam));
    }
}

TEST_CASE("alternant division failures are detected") {
    // A numerator that is not divisible by the denominator trips the cap.
    ZVars v(1);
    Series num(v.ctx, 8);
    Expo e = num.zero_expo();
    num.set_exp(e, v.zs[0], Rat(2));
    num.add_term(e, 1);
    Expo e0 = num.zero_expo();
    num.add_term(e0, 1);  // z^2 + 1
    Series den(v.ctx, 8);
    Expo f = den.zero_expo();
    den.set_exp(f, v.zs[0], Rat(1));
    den.add_term(f, 1);
    den.set_exp(f, v.zs[0], Rat(-1));
    den.add_term(f, -1);  // z - z^-1
    CHECK_THROWS_AS(num.exact_div(den, 64), math_error);
    // And the honest quotient divides cleanly: (z^2 - 1)/(z - z^-1) = z.
    Series num2(v.ctx, 8);
    Expo g = num2.zero_expo();
    num2.set_exp(g, v.zs[0], Rat(2));
    num2.add_term(g, 1);
    num2.add_term(num2.zero_expo(), -1);
    CHECK(num2.exact_div(den).str() == "z1");
}
