#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace locdense {

// Subset of {0,...,n-1}, packed into 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), w_((static_cast<size_t>(universe) + 63) / 64, 0) {}

    static VertexSet from_mask(int universe, std::uint64_t mask) {
        assert(universe <= 64);
        VertexSet s(universe);
        if (!s.w_.empty()) s.w_[0] = mask;
        return s;
    }
    static VertexSet from_vertices(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    // First word; valid as a full mask only when the universe fits in 64 bits.
    std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    int intersection_count(const VertexSet& other) const {
        size_t k = std::min(w_.size(), other.w_.size());
        int c = 0;
        for (size_t i = 0; i < k; ++i) c += std::popcount(w_[i] & other.w_[i]);
        return c;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Ascending vertex indices, space separated; empty string for the empty set.
    std::string str() const {
        std::string out;
        for_each([&](int v) {
            if (!out.empty()) out += ' ';
            out += std::to_string(v);
        });
        return out;
    }

    bool operator==(const VertexSet&) const = default;

    // Total order used for every deterministic tie-break: smaller size first,
    // then lexicographic on the increasing vertex sequence. For equal sizes
    // the sequence-lexicographic order is decided by the lowest vertex in the
    // symmetric difference: the set containing it comes first.
    static bool size_lex_less(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t diff = a.w_[i] ^ b.w_[i];
            if (diff) return a.w_[i] & (diff & -diff);
        }
        return false;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(i * 64) + bit);
                w &= w - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace locdense
