#pragma once

// Finitary (signed) permutation realizations of the Weyl groups of the
// infinite-rank algebras, Coxeter lengths, minimal-length coset representatives
// W^0_k of W_0\W, and the rho-shifted dot action on weights.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "howe/common.hpp"
#include "howe/partition.hpp"

namespace howe {

enum class Tag { a, b, c, d, b0 };

inline const char* tag_name(Tag t) {
    switch (t) {
        case Tag::a: return "a";
        case Tag::b: return "b";
        case Tag::c: return "c";
        case Tag::d: return "d";
        case Tag::b0: return "b0";
    }
    return "?";
}

inline Tag tag_parse(const std::string& s) {
    if (s == "a") return Tag::a;
    if (s == "b") return Tag::b;
    if (s == "c") return Tag::c;
    if (s == "d") return Tag::d;
    if (s == "b0") return Tag::b0;
    fail("unknown algebra tag: " + s);
}

// Index set is Z for type a, N = {1,2,...} otherwise (signed permutations).
inline bool tag_signed(Tag t) { return t != Tag::a; }

class GroupElement {
public:
    Tag tag;
    // Non-fixed points only: position -> image. For signed tags keys are >= 1
    // and the map extends by w(-i) = -w(i).
    std::map<int, int> fwd;

    static GroupElement identity(Tag t) { return GroupElement{t, {}}; }

    // Simple reflection s_j. Type a: j in Z swaps j, j+1. Types b/c/b0: s_0 is
    // the sign change at position 1. Type d: s_0 maps 1 -> -2, 2 -> -1.
    static GroupElement simple(Tag t, int j) {
        GroupElement w{t, {}};
        if (t == Tag::a) {
            w.set(j, j + 1);
            w.set(j + 1, j);
        } else if (j == 0) {
            if (t == Tag::d) {
                w.set(1, -2);
                w.set(2, -1);
            } else {
                w.set(1, -1);
            }
        } else {
            require(j >= 1, "simple reflection index must be >= 0 for signed types");
            w.set(j, j + 1);
            w.set(j + 1, j);
        }
        return w;
    }

    int apply(int i) const {
        if (tag_signed(tag) && i < 0) return -apply(-i);
        auto it = fwd.find(i);
        return it == fwd.end() ? i : it->second;
    }

    void set(int i, int image) {
        if (image == i)
            fwd.erase(i);
        else
            fwd[i] = image;
    }

    bool is_identity() const { return fwd.empty(); }

    GroupElement inverse() const {
        GroupElement w{tag, {}};
        for (const auto& [i, j] : fwd) {
            if (tag_signed(tag)) {
                if (j > 0)
                    w.set(j, i);
                else
                    w.set(-j, -i);
            } else {
                w.set(j, i);
            }
        }
        return w;
    }

    bool operator==(const GroupElement& o) const { return tag == o.tag && fwd == o.fwd; }
    bool operator<(const GroupElement& o) const { return fwd < o.fwd; }

    // One-line notation over the support hull, e.g. "[-2,1]" for 1 -> -2, 2 -> 1.
    std::string one_line() const {
        int lo = tag_signed(tag) ? 1 : 0, hi = 0;
        if (!fwd.empty()) {
            lo = std::min(lo, fwd.begin()->first);
            hi = std::max(hi, fwd.rbegin()->first);
            for (const auto& [i, j] : fwd) {
                lo = std::min(lo, tag_signed(tag) ? 1 : std::min(i, j));
                hi = std::max(hi, std::max(i, std::abs(j)));
            }
        }
        if (tag_signed(tag)) lo = 1;
        std::string out = "[";
        for (int i = lo; i <= hi; ++i) {
            if (i > lo) out += ",";
            out += std::to_string(apply(i));
        }
        out += "]";
        return out;
    }
};

inline GroupElement compose(const GroupElement& u, const GroupElement& v) {
    require(u.tag == v.tag, "composing elements of different Weyl groups");
    GroupElement w{u.tag, {}};
    std::set<int> positions;
    for (const auto& [i, j] : u.fwd) positions.insert(tag_signed(u.tag) ? std::abs(i) : i);
    for (const auto& [i, j] : v.fwd) positions.insert(tag_signed(u.tag) ? std::abs(i) : i);
    if (!tag_signed(u.tag)) {
        for (const auto& [i, j] : u.fwd) positions.insert(j);
        for (const auto& [i, j] : v.fwd) positions.insert(j);
    }
    for (int i : positions) w.set(i, u.apply(v.apply(i)));
    return w;
}

namespace detail {

// Inversion and negative-entry statistics over the support hull.
struct PermStats {
    long inversions = 0;
    long neg_abs_sum = 0;  // sum of |w(i)| over positions with w(i) < 0
    long neg_count = 0;
};

inline PermStats perm_stats(const GroupElement& w) {
    PermStats st;
    int lo = 1, hi = 0;
    if (w.tag == Tag::a) {
        lo = 0;
        for (const auto& [i, j] : w.fwd) {
            lo = std::min({lo, i, j});
            hi = std::max({hi, i, j});
        }
    } else {
        for (const auto& [i, j] : w.fwd) hi = std::max({hi, i, std::abs(j)});
    }
    std::vector<int> img;
    for (int i = lo; i <= hi; ++i) img.push_back(w.apply(i));
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (img[i] < 0) {
            st.neg_abs_sum += -img[i];
            ++st.neg_count;
        }
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++st.inversions;
    }
    return st;
}

}  // namespace detail

// Coxeter length: type A inversions; hyperoctahedral length for b/c/b0;
// type D length for d (even sign changes).
inline long coxeter_length(const GroupElement& w) {
    detail::PermStats st = detail::perm_stats(w);
    switch (w.tag) {
        case Tag::a: return st.inversions;
        case Tag::b:
        case Tag::c:
        case Tag::b0: return st.inversions + st.neg_abs_sum;
        case Tag::d: return st.inversions + st.neg_abs_sum - st.neg_count;
    }
    return 0;
}

inline long sign_change_parity(const GroupElement& w) {
    long neg = 0;
    for (const auto& [i, j] : w.fwd)
        if (j < 0) ++neg;
    return neg % 2;
}

// Left descent at j in S: l(s_j w) < l(w).
inline bool has_left_descent(const GroupElement& w, int j) {
    GroupElement sj = GroupElement::simple(w.tag, j);
    return coxeter_length(compose(sj, w)) < coxeter_length(w);
}

// Minimal-length representatives of W_0\W of each length k <= k_max: BFS over
// words in the simple reflections, deduplicated by the group element, filtered
// by "no left descent in S". Layers come back sorted by one-line notation.
inline std::vector<std::vector<GroupElement>> enumerate_coset_reps(Tag tag, int k_max,
                                                                   int window_pad = 2) {
    std::vector<GroupElement> gens;
    if (tag == Tag::a) {
        for (int j = -(k_max + window_pad); j <= k_max + window_pad; ++j)
            gens.push_back(GroupElement::simple(tag, j));
    } else {
        for (int j = 0; j <= k_max + window_pad; ++j) gens.push_back(GroupElement::simple(tag, j));
    }

    std::set<std::map<int, int>> seen;
    std::vector<GroupElement> frontier{GroupElement::identity(tag)};
    seen.insert(frontier[0].fwd);
    std::vector<std::vector<GroupElement>> reps(static_cast<std::size_t>(k_max) + 1);

    auto no_S_descent = [&](const GroupElement& w) {
        int lo = 1, hi = 1;
        if (!w.fwd.empty()) {
            for (const auto& [i, j] : w.fwd) {
                lo = std::min({lo, i, j});
                hi = std::max({hi, i, std::abs(j)});
            }
        }
        if (tag == Tag::a) {
            for (int j = lo - 1; j <= hi; ++j)
                if (j != 0 && has_left_descent(w, j)) return false;
        } else {
            for (int j = 1; j <= hi; ++j)
                if (has_left_descent(w, j)) return false;
        }
        return true;
    };

    for (int k = 0; k <= k_max; ++k) {
        std::vector<GroupElement> layer;
        for (const GroupElement& w : frontier) {
            require(coxeter_length(w) == k, "BFS depth must equal Coxeter length");
            if (no_S_descent(w)) layer.push_back(w);
        }
        std::sort(layer.begin(), layer.end(),
                  [](const GroupElement& u, const GroupElement& v) { return u.one_line() < v.one_line(); });
        reps[static_cast<std::size_t>(k)] = layer;
        if (k == k_max) break;
        std::vector<GroupElement> next;
        for (const GroupElement& w : frontier) {
            for (const GroupElement& s : gens) {
                GroupElement ws = compose(w, s);
                if (coxeter_length(ws) != k + 1) continue;
                if (seen.insert(ws.fwd).second) next.push_back(ws);
            }
        }
        frontier = std::move(next);
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Weights and the dot action.

struct WeightCoords {
    Tag tag = Tag::c;
    Rat level = 0;
    std::map<int, Rat> coords;  // finitely supported epsilon-coordinates

    Rat coord(int i) const {
        auto it = coords.find(i);
        return it == coords.end() ? Rat(0) : it->second;
    }
    void set(int i, const Rat& v) {
        if (v == 0)
            coords.erase(i);
        else
            coords[i] = v;
    }
    bool operator==(const WeightCoords& o) const {
        return tag == o.tag && level == o.level && coords == o.coords;
    }
    bool operator<(const WeightCoords& o) const {
        if (level != o.level) return level < o.level;
        return coords < o.coords;
    }
};

// rho_c coordinate at index i.
inline Rat rho_coord(Tag tag, int i) {
    switch (tag) {
        case Tag::a: return Rat(-i);
        case Tag::b: return Rat(1, 2) - i;
        case Tag::c: return Rat(-i);
        case Tag::d: return Rat(1) - i;
        case Tag::b0: return Rat(1, 2) - i;
    }
    return 0;
}

// Additive level shift turning the dot action into a plain (signed)
// permutation action: nu*_i = nu_i + shift(tag, i) * level.
inline Rat level_shift(Tag tag, int i) {
    switch (tag) {
        case Tag::a: return i <= 0 ? Rat(1) : Rat(0);
        case Tag::b:
        case Tag::d: return Rat(-1, 2);
        case Tag::c:
        case Tag::b0: return Rat(-1);
    }
    return 0;
}

// w o mu = w(mu + rho_c) - rho_c, with the level untouched.
inline WeightCoords dot_action(const GroupElement& w, const WeightCoords& mu) {
    require(w.tag == mu.tag, "dot action across different algebras");
    std::set<int> idx;
    for (const auto& [i, v] : mu.coords) idx.insert(i);
    for (const auto& [i, j] : w.fwd) {
        idx.insert(i);
        idx.insert(tag_signed(w.tag) ? std::abs(j) : j);
    }
    WeightCoords out;
    out.tag = mu.tag;
    out.level = mu.level;
    for (int i : idx) {
        Rat star = mu.coord(i) + rho_coord(mu.tag, i) + level_shift(mu.tag, i) * mu.level;
        int j = w.apply(i);
        int target = tag_signed(w.tag) ? std::abs(j) : j;
        Rat val = (tag_signed(w.tag) && j < 0) ? -star : star;
        out.set(target, val - rho_coord(mu.tag, target) - level_shift(mu.tag, target) * mu.level);
    }
    return out;
}

// <mu, alpha_j^vee> integral and non-negative for all j in S.
inline bool is_S_dominant_integral(const WeightCoords& mu) {
    int lo = 1, hi = 0;
    for (const auto& [i, v] : mu.coords) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }
    if (tag_signed(mu.tag)) {
        for (int i = 1; i <= hi + 1; ++i) {
            Rat diff = mu.coord(i) - mu.coord(i + 1);
            if (!rat_is_int(diff) || diff < 0) return false;
        }
        return rat_is_int(mu.coord(1));
    }
    for (int i = lo - 1; i <= hi; ++i) {
        if (i == 0) continue;
        Rat diff = mu.coord(i) - mu.coord(i + 1);
        if (!rat_is_int(diff) || diff < 0) return false;
    }
    return rat_is_int(mu.coord(1));
}

// Coordinate readout lambda_w for types b, c, d, b0.
inline Partition extract_lambda_w(const WeightCoords& mu) {
    require(tag_signed(mu.tag), "extract_lambda_w: signed types only");
    int hi = 0;
    for (const auto& [i, v] : mu.coords) hi = std::max(hi, i);
    std::vector<long> parts;
    for (int i = 1; i <= hi; ++i) parts.push_back(rat_to_long(mu.coord(i)));
    require(std::is_sorted(parts.rbegin(), parts.rend()) && (parts.empty() || parts.back() >= 0),
            "extract_lambda_w: coordinates are not a partition");
    return Partition(std::move(parts));
}

// Type a readout: (lambda^+_w)_j = coord(j) for j >= 1, (lambda^-_w)_{j+1} = -coord(-j).
inline std::pair<Partition, Partition> extract_lambda_w_a(const WeightCoords& mu) {
    require(mu.tag == Tag::a, "extract_lambda_w_a: type a only");
    int lo = 0, hi = 0;
    for (const auto& [i, v] : mu.coords) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }
    std::vector<long> plus, minus;
    for (int i = 1; i <= hi; ++i) plus.push_back(rat_to_long(mu.coord(i)));
    for (int j = 0; -j >= lo; ++j) minus.push_back(rat_to_long(-mu.coord(-j)));
    require(std::is_sorted(plus.rbegin(), plus.rend()) && (plus.empty() || plus.back() >= 0),
            "extract_lambda_w_a: positive side is not a partition");
    require(std::is_sorted(minus.rbegin(), minus.rend()) && (minus.empty() || minus.back() >= 0),
            "extract_lambda_w_a: negative side is not a partition");
    return {Partition(std::move(plus)), Partition(std::move(minus))};
}

}  // namespace howe
