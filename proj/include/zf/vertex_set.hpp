#ifndef ZF_VERTEX_SET_HPP
#define ZF_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zf {

// Subset of the vertex ids 0..n-1 of a fixed graph, stored as a bit array.
// Two sets may only be combined when they share the same universe size n.
class VertexSet {
public:
    VertexSet() : n_(0) {}

    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> ids) {
        VertexSet s(universe);
        for (int v : ids) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check_id(v);
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    void set(int v) {
        check_id(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void reset(int v) {
        check_id(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool subset_of(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                out.push_back(int(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

private:
    void check_id(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex id out of range");
    }
    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe size mismatch");
    }
    void trim() {
        if (int tail = n_ & 63; tail != 0 && !words_.empty())
            words_.back() &= (1ULL << tail) - 1;
    }

    int n_;
    std::vector<uint64_t> words_;
};

} // namespace zf

#endif
