#ifndef GRIDBOND_BITSET_HPP
#define GRIDBOND_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace gridbond {

// Fixed-width bit set, sized once at construction. Binary operations assume
// both operands have the same width; bits past size() are always zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_(static_cast<std::size_t>((nbits + 63) / 64), 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= bit(i); }
    void reset(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~bit(i); }
    bool test(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] & bit(i)) != 0; }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool all() const { return count() == nbits_; }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // this = this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    // |this \ o|
    int difference_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~o.words_[i]);
        return c;
    }

    int find_first() const { return find_next(-1); }

    // Smallest set index greater than i, or -1.
    int find_next(int i) const {
        int w = (i + 1) >> 6;
        if (w >= static_cast<int>(words_.size())) return -1;
        std::uint64_t cur = words_[static_cast<std::size_t>(w)] >> ((i + 1) & 63);
        if (cur) return (i + 1) + std::countr_zero(cur);
        for (++w; w < static_cast<int>(words_.size()); ++w)
            if (words_[static_cast<std::size_t>(w)])
                return (w << 6) + std::countr_zero(words_[static_cast<std::size_t>(w)]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = find_first(); v >= 0; v = find_next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

    void trim() {
        if (nbits_ & 63)
            words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gridbond

#endif
