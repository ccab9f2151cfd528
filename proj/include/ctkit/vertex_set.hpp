#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ctkit {

inline constexpr int kMaxVertices = 256;

// Fixed 256-bit vertex set.
class VertexSet {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> xs) {
        for (int x : xs) set(x);
    }
    explicit VertexSet(const std::vector<int>& xs) {
        for (int x : xs) set(x);
    }

    // {0, ..., n-1}
    static VertexSet prefix(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.w_[w] = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
        return s;
    }
    static VertexSet single(int x) {
        VertexSet s;
        s.set(x);
        return s;
    }

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    bool contains(int i) const { return test(i); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }
    bool any() const { return !empty(); }

    // smallest member, or -1
    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w]) return w * 64 + std::countr_zero(w_[w]);
        return -1;
    }
    // smallest member strictly greater than i, or -1
    int next(int i) const {
        ++i;
        if (i >= kMaxVertices) return -1;
        int w = i >> 6;
        std::uint64_t cur = w_[w] & (~0ULL << (i & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w >= kWords) return -1;
            cur = w_[w];
        }
    }
    int last() const {
        for (int w = kWords - 1; w >= 0; --w)
            if (w_[w]) return w * 64 + 63 - std::countl_zero(w_[w]);
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & o.w_[w]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & ~o.w_[w]) return false;
        return true;
    }
    int intersect_count(const VertexSet& o) const {
        int c = 0;
        for (int w = 0; w < kWords; ++w) c += std::popcount(w_[w] & o.w_[w]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] |= o.w_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= o.w_[w];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= ~o.w_[w];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w_ == b.w_; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    // Lexicographic order on the sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b) {
        int x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y;
            x = a.next(x);
            y = b.next(y);
        }
        return x < 0 && y >= 0;
    }

    // Remove slot i and shift every higher member down by one.
    VertexSet erase_shift(int i) const {
        VertexSet r;
        for (int v = first(); v >= 0; v = next(v)) {
            if (v < i) r.set(v);
            else if (v > i) r.set(v - 1);
        }
        return r;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t cur = w_[w];
            while (cur) {
                int b = std::countr_zero(cur);
                f(w * 64 + b);
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first_item = true;
        for_each([&](int v) {
            if (!first_item) s += ",";
            s += std::to_string(v);
            first_item = false;
        });
        return s + "}";
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    const std::array<std::uint64_t, kWords>& words() const { return w_; }

private:
    std::array<std::uint64_t, kWords> w_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace ctkit
