#pragma once

#include <cstdint>
#include <vector>

namespace moncurve {

// Dense bit vector over [0, size).  The only non-trivial operation is
// or_shifted, which is the inner step of iterated sumset convolution:
// dst |= (src << shift), clipped to dst's size.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(long long i) const {
        if (i < 0 || i >= size_) return false;
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }

    void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }

    void or_shifted(const BitVec& src, int shift) {
        const int word_shift = shift >> 6;
        const int bit_shift = shift & 63;
        const std::size_t n = words_.size();
        for (std::size_t i = 0; i < src.words_.size(); ++i) {
            const std::uint64_t w = src.words_[i];
            if (!w) continue;
            const std::size_t j = i + static_cast<std::size_t>(word_shift);
            if (j < n) words_[j] |= w << bit_shift;
            if (bit_shift && j + 1 < n) words_[j + 1] |= w >> (64 - bit_shift);
        }
        mask_tail();
    }

    // this &= ~other (sizes may differ; treated as zero-extended)
    void and_not(const BitVec& other) {
        const std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // Smallest set index, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + __builtin_ctzll(words_[i]);
        return -1;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        if (a.size_ != b.size_) return false;
        return a.words_ == b.words_;
    }

private:
    void mask_tail() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace moncurve
