#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "howe/weights.hpp"
#include "howe/weyl.hpp"

using namespace howe;

TEST_CASE("simple reflections and lengths") {
    for (Tag t : {Tag::a, Tag::b, Tag::c, Tag::d, Tag::b0}) {
        GroupElement id = GroupElement::identity(t);
        GroupElement s0 = GroupElement::simple(t, 0);
        CHECK(coxeter_length(id) == 0);
        CHECK(coxeter_length(s0) == 1);
        CHECK(compose(s0, s0) == id);
    }
    GroupElement s0 = GroupElement::simple(Tag::c, 0);
    GroupElement s1 = GroupElement::simple(Tag::c, 1);
    CHECK(coxeter_length(compose(s0, s1)) == 2);
    CHECK(coxeter_length(compose(s1, s0)) == 2);
    CHECK(coxeter_length(compose(s0, compose(s1, s0))) == 3);
    CHECK(compose(s0, s1).one_line() == "[2,-1]");
    CHECK(GroupElement::simple(Tag::d, 0).one_line() == "[-2,-1]");
}

TEST_CASE("coset representative layers") {
    // Sizes frozen from the BFS oracle (left-descent filter over dedup'd words);
    // the k <= 2 layers are checkable by hand.
    auto counts = [](Tag t, int kmax) {
        std::vector<std::size_t> out;
        for (const auto& layer : enumerate_coset_reps(t, kmax)) out.push_back(layer.size());
        return out;
    };
    CHECK(counts(Tag::a, 4) == std::vector<std::size_t>({1, 1, 2, 3, 5}));
    CHECK(counts(Tag::b, 4) == std::vector<std::size_t>({1, 1, 1, 2, 2}));
    CHECK(counts(Tag::c, 4) == std::vector<std::size_t>({1, 1, 1, 2, 2}));
    CHECK(counts(Tag::b0, 4) == std::vector<std::size_t>({1, 1, 1, 2, 2}));
    CHECK(counts(Tag::d, 4) == std::vector<std::size_t>({1, 1, 1, 2, 2}));

    for (Tag t : {Tag::a, Tag::b, Tag::c, Tag::d, Tag::b0}) {
        auto reps = enumerate_coset_reps(t, 3);
        CHECK(reps[0] == std::vector<GroupElement>{GroupElement::identity(t)});
        CHECK(reps[1] == std::vector<GroupElement>{GroupElement::simple(t, 0)});
        for (std::size_t k = 0; k < reps.size(); ++k)
            for (const GroupElement& w : reps[k]) CHECK(coxeter_length(w) == static_cast<long>(k));
    }
}

TEST_CASE("layers are stable under a larger generator window") {
    for (Tag t : {Tag::a, Tag::b, Tag::c, Tag::d, Tag::b0}) {
        auto narrow = enumerate_coset_reps(t, 4, 2);
        auto wide = enumerate_coset_reps(t, 4, 4);
        CHECK(narrow == wide);
    }
}

TEST_CASE("dot action basics") {
    WeightCoords mu;
    mu.tag = Tag::c;
    mu.level = 3;
    mu.set(1, 2);
    CHECK(dot_action(GroupElement::identity(Tag::c), mu) == mu);
}

TEST_CASE("first syzygy weights at k = 1") {
    for (long d = 1; d <= 4; ++d) {
        // type a: lambda^+ = lambda^- = (d+1)
        WeightCoords La = lambda_classical_a(GeneralizedPartition(d, std::vector<long>(d, 0)), d);
        auto [lp, lm] = extract_lambda_w_a(dot_action(GroupElement::simple(Tag::a, 0), La));
        CHECK(lp == Partition({d + 1}));
        CHECK(lm == Partition({d + 1}));
        // type d: (d+1, d+1)
        WeightCoords Ld = lambda_classical(Tag::d, Partition(), d);
        CHECK(extract_lambda_w(dot_action(GroupElement::simple(Tag::d, 0), Ld)) ==
              Partition({d + 1, d + 1}));
        if (d % 2 == 0) {
            // type c: (d+2); type b: (d+1)
            WeightCoords Lc = lambda_classical(Tag::c, Partition(), d);
            CHECK(extract_lambda_w(dot_action(GroupElement::simple(Tag::c, 0), Lc)) ==
                  Partition({d + 2}));
            WeightCoords Lb = lambda_classical(Tag::b, Partition(), d);
            CHECK(extract_lambda_w(dot_action(GroupElement::simple(Tag::b, 0), Lb)) ==
                  Partition({d + 1}));
        }
    }
}

TEST_CASE("extract at the identity returns the conjugate") {
    Partition lam({2, 1});
    WeightCoords L = lambda_classical(Tag::c, lam, 4);
    CHECK(extract_lambda_w(L) == lam.conjugate());
}

TEST_CASE("dot action respects composition") {
    std::mt19937_64 rng(7);
    for (Tag t : {Tag::a, Tag::b, Tag::c, Tag::d, Tag::b0}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto word = [&](int len) {
                GroupElement w = GroupElement::identity(t);
                for (int i = 0; i < len; ++i) {
                    int j = static_cast<int>(rng() % 4);
                    if (t == Tag::a && rng() % 2) j = -j;
                    w = compose(w, GroupElement::simple(t, j));
                }
                return w;
            };
            GroupElement u = word(static_cast<int>(rng() % 4));
            GroupElement v = word(static_cast<int>(rng() % 4));
            WeightCoords mu = random_P_plusplus(rng, t, Rat(static_cast<long>(rng() % 5)), 2, 2, 6, 6);
            CHECK(dot_action(compose(u, v), mu) == dot_action(u, dot_action(v, mu)));
        }
    }
}

TEST_CASE("S-dominance along the layers") {
    // Every w o Lambda^x(lambda) stays S-dominant integral for k <= 4.
    for (long d : {2L, 4L}) {
        for (const Partition& lam : partitions_up_to(3)) {
            if (2 * static_cast<long>(lam.length()) > d) continue;
            for (Tag t : {Tag::b, Tag::c}) {
                WeightCoords L = lambda_classical(t, lam, d);
                for (const auto& layer : enumerate_coset_reps(t, 4))
                    for (const GroupElement& w : layer)
                        CHECK(is_S_dominant_integral(dot_action(w, L)));
            }
        }
        for (const Partition& lam : partitions_up_to(3)) {
            Partition c = lam.conjugate();
            if (c.part(1) + c.part(2) > d) continue;
            WeightCoords L = lambda_classical(Tag::d, lam, d);
            for (const auto& layer : enumerate_coset_reps(Tag::d, 4))
                for (const GroupElement& w : layer)
                    CHECK(is_S_dominant_integral(dot_action(w, L)));
        }
    }
    for (const GeneralizedPartition& lam : generalized_partitions_up_to(3, 2)) {
        WeightCoords L = lambda_classical_a(lam, 2);
        for (const auto& layer : enumerate_coset_reps(Tag::a, 4))
            for (const GroupElement& w : layer) CHECK(is_S_dominant_integral(dot_action(w, L)));
    }
}

TEST_CASE("distinct dot-images within a layer") {
    for (Tag t : {Tag::b, Tag::c, Tag::d}) {
        WeightCoords L = lambda_classical(t, Partition({1}), 4);
        auto reps = enumerate_coset_reps(t, 4);
        for (const auto& layer : reps) {
            std::set<WeightCoords> seen;
            for (const GroupElement& w : layer) CHECK(seen.insert(dot_action(w, L)).second);
        }
    }
}

TEST_CASE("inverse and one-line serialization") {
    GroupElement w = compose(GroupElement::simple(Tag::c, 0), GroupElement::simple(Tag::c, 1));
    CHECK(compose(w, w.inverse()) == GroupElement::identity(Tag::c));
    CHECK(w.inverse().one_line() == "[-2,1]");  // 1 -> -2, 2 -> 1
    GroupElement a = compose(GroupElement::simple(Tag::a, 0), GroupElement::simple(Tag::a, -1));
    CHECK(compose(a.inverse(), a) == GroupElement::identity(Tag::a));
}
