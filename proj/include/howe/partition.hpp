#pragma once

// Partitions and generalized partitions: the index set for every module,
// weight and character in the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "howe/common.hpp"

namespace howe {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] > 0, "partition parts must be positive after normalization");
            if (i + 1 < parts_.size())
                require(parts_[i] >= parts_[i + 1], "partition parts must be weakly decreasing");
        }
    }

    // 1-based part access; parts beyond the length read as 0.
    long part(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }

    std::size_t length() const { return parts_.size(); }

    long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    bool empty() const { return parts_.empty(); }

    const std::vector<long>& parts() const { return parts_; }

    Partition conjugate() const {
        std::vector<long> cols;
        if (!parts_.empty()) {
            cols.resize(static_cast<std::size_t>(parts_[0]));
            for (long j = 1; j <= parts_[0]; ++j) {
                long count = 0;
                for (long p : parts_)
                    if (p >= j) ++count;
                cols[static_cast<std::size_t>(j - 1)] = count;
            }
        }
        return Partition(std::move(cols));
    }

    // True iff this ⊆ λ entrywise.
    bool contained_in(const Partition& lam) const {
        for (std::size_t i = 1; i <= length(); ++i)
            if (part(i) > lam.part(i)) return false;
        return true;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    // Text form "3,1"; "-" denotes the empty partition.
    static Partition parse(const std::string& s) {
        if (s.empty() || s == "-") return Partition();
        std::vector<long> parts;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            parts.push_back(std::stol(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return Partition(std::move(parts));
    }

    std::string str() const {
        if (parts_.empty()) return "-";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

private:
    std::vector<long> parts_;
};

inline bool contains(const Partition& mu, const Partition& lam) { return mu.contained_in(lam); }

// λ_{m+1} <= n, 1-based indexing with λ_k = 0 beyond the length.
inline bool is_hook(const Partition& lam, long m, long n) {
    require(m >= 0 && n >= 0, "hook parameters must be non-negative");
    return lam.part(static_cast<std::size_t>(m + 1)) <= n;
}

// λ with its first column replaced by d − λ'_1. Defined on P(O(d)) = {λ : λ'_1 + λ'_2 <= d}.
inline Partition tilde(const Partition& lam, long d) {
    Partition conj = lam.conjugate();
    long c1 = conj.part(1), c2 = conj.part(2);
    require(c1 + c2 <= d, "tilde: partition not in P(O(d)): first two columns exceed d");
    std::vector<long> cols(conj.parts());
    if (cols.empty())
        cols.push_back(d);
    else
        cols[0] = d - c1;
    std::sort(cols.begin(), cols.end(), std::greater<long>());
    return Partition(std::move(cols)).conjugate();
}

class GeneralizedPartition {
public:
    GeneralizedPartition(long depth, std::vector<long> parts) : parts_(std::move(parts)) {
        require(depth >= 1, "generalized partition depth must be positive");
        require(static_cast<long>(parts_.size()) == depth, "generalized partition needs exactly d parts");
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            require(parts_[i] >= parts_[i + 1], "generalized partition parts must be weakly decreasing");
    }

    long depth() const { return static_cast<long>(parts_.size()); }
    long part(std::size_t i) const { return parts_.at(i - 1); }  // 1-based, within depth
    const std::vector<long>& parts() const { return parts_; }

    // λ⁺ = (⟨λ_1⟩,…,⟨λ_d⟩) as a partition; λ⁻ = (⟨−λ_1⟩,…,⟨−λ_d⟩), non-decreasing.
    Partition plus() const {
        std::vector<long> p;
        for (long v : parts_) p.push_back(std::max(v, 0L));
        return Partition(std::move(p));
    }
    std::vector<long> minus() const {
        std::vector<long> p;
        for (long v : parts_) p.push_back(std::max(-v, 0L));
        return p;
    }
    // λ⁻ rearranged decreasing, for consumers that index its conjugate.
    Partition minus_decreasing() const {
        std::vector<long> p = minus();
        std::sort(p.begin(), p.end(), std::greater<long>());
        return Partition(std::move(p));
    }

    bool all_nonnegative() const { return parts_.empty() || parts_.back() >= 0; }

    bool operator==(const GeneralizedPartition& o) const { return parts_ == o.parts_; }
    bool operator<(const GeneralizedPartition& o) const { return parts_ < o.parts_; }

    static GeneralizedPartition parse(const std::string& s, long depth) {
        if (s == "-") return GeneralizedPartition(depth, std::vector<long>(depth, 0));
        std::vector<long> parts;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            parts.push_back(std::stol(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        while (static_cast<long>(parts.size()) < depth) parts.push_back(0);
        return GeneralizedPartition(depth, std::move(parts));
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

private:
    std::vector<long> parts_;  // exactly d entries, weakly decreasing, possibly negative
};

// All partitions of size exactly n, then of size <= n.
inline void partitions_of(long n, long maxpart, const std::function<void(const Partition&)>& emit,
                          std::vector<long>& stack) {
    if (n == 0) {
        emit(Partition(std::vector<long>(stack)));
        return;
    }
    for (long p = std::min(n, maxpart); p >= 1; --p) {
        stack.push_back(p);
        partitions_of(n - p, p, emit, stack);
        stack.pop_back();
    }
}

inline std::vector<Partition> partitions_up_to(long maxsize) {
    std::vector<Partition> out;
    std::vector<long> stack;
    for (long n = 0; n <= maxsize; ++n)
        partitions_of(n, n, [&](const Partition& p) { out.push_back(p); }, stack);
    return out;
}

inline std::vector<Partition> hook_partitions_up_to(long maxsize, long m, long n) {
    std::vector<Partition> out;
    for (const Partition& p : partitions_up_to(maxsize))
        if (is_hook(p, m, n)) out.push_back(p);
    return out;
}

// Generalized partitions of the given depth with |λ⁺| + |λ⁻| <= maxsize.
inline std::vector<GeneralizedPartition> generalized_partitions_up_to(long maxsize, long depth) {
    std::vector<GeneralizedPartition> out;
    std::vector<Partition> all = partitions_up_to(maxsize);
    for (const Partition& pos : all) {
        if (static_cast<long>(pos.length()) > depth) continue;
        for (const Partition& neg : all) {
            if (pos.size() + neg.size() > maxsize) continue;
            if (static_cast<long>(pos.length() + neg.length()) > depth) continue;
            std::vector<long> parts;
            for (long v : pos.parts()) parts.push_back(v);
            for (long i = static_cast<long>(pos.length() + neg.length()); i < depth; ++i) parts.push_back(0);
            for (std::size_t i = neg.length(); i >= 1; --i) parts.push_back(-neg.part(i));
            out.emplace_back(depth, std::move(parts));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace howe
