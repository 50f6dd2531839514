#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdom {

// Subset of {0..universe-1} backed by a word array. Value type; all set
// operations require equal universes.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(check_universe(universe)), words_((universe + 63) / 64, 0) {}

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check_member(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_member(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_member(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.mask_tail();
        return r;
    }

    VertexSet operator&(const VertexSet& o) const {
        check_same(o);
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    VertexSet operator|(const VertexSet& o) const {
        check_same(o);
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    // Set difference: members of this not in o.
    VertexSet minus(const VertexSet& o) const {
        check_same(o);
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    // Smallest member, -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                fn(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Strict order on sets viewed as sorted vertex sequences. The first
    // position where the sequences differ decides; a proper prefix sorts
    // before its extension.
    bool lex_less(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t d = words_[i] ^ o.words_[i];
            if (!d) continue;
            std::uint64_t low = d & (~d + 1);
            if (words_[i] & low) {
                // This set owns the smallest differing vertex v: it is
                // smaller unless o has nothing at or beyond v (prefix case).
                return other_has_tail(o, i, low);
            }
            return !other_has_tail(*this, i, low);
        }
        return false;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool sep = false;
        for_each([&](int v) {
            if (sep) os << ',';
            os << v;
            sep = true;
        });
        os << '}';
        return os.str();
    }

private:
    static int check_universe(int universe) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
        return universe;
    }

    void check_member(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside universe of size " + std::to_string(universe_));
    }

    void check_same(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::invalid_argument("VertexSet: universe mismatch");
    }

    void mask_tail() {
        int tail = universe_ & 63;
        if (tail && !words_.empty())
            words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    // True iff s has any member at bit `low` of word `wi` or later.
    static bool other_has_tail(const VertexSet& s, std::size_t wi, std::uint64_t low) {
        if (s.words_[wi] & ~(low - 1)) return true;
        for (std::size_t j = wi + 1; j < s.words_.size(); ++j)
            if (s.words_[j]) return true;
        return false;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace superdom
