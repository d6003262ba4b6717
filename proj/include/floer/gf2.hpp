#pragma once

// Dense bit-packed linear algebra over GF(2). Rows are arrays of 64-bit
// words; padding bits past the logical width are kept zero so whole-word
// XOR and popcount need no masking.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "floer/errors.hpp"

namespace floer {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        if (value)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void toggle(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const;
    std::size_t popcount() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    // Calls fn(index) for every set bit, in increasing order.
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                fn(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major packed GF(2) matrix. Immutable from the caller's point of view
// once built: rank/kernel routines work on internal copies.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value = true);
    void toggle(std::size_t r, std::size_t c) {
        data_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    std::span<const std::uint64_t> row(std::size_t r) const {
        return {data_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row(std::size_t r) {
        return {data_.data() + r * wpr_, wpr_};
    }

    BitVector row_vector(std::size_t r) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

BitMatrix identity_matrix(std::size_t n);
bool is_zero(const BitMatrix& m);
BitMatrix transpose(const BitMatrix& m);

/// Rank over GF(2) by in-place word-level elimination on a working copy.
std::size_t rank(const BitMatrix& m);

struct RankNullity {
    std::size_t rank;
    std::size_t kernel_dim;  // cols - rank
};
RankNullity compose_rank_checks(const BitMatrix& m);

/// Matrix-vector product; v.size() must equal cols().
BitVector apply(const BitMatrix& m, const BitVector& v);

/// Matrix product; cost is proportional to the weight of `a`.
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// Basis of the right kernel {v : m v = 0}; size is cols - rank.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// Text dump format: header line "gf2 <rows> <cols>", then one lowercase-hex
// string per row. Hex digit j of a row holds columns 4j..4j+3, with column
// 4j in the least significant bit of the digit.
void dump_matrix(const BitMatrix& m, std::ostream& out);
std::string dump_matrix(const BitMatrix& m);
BitMatrix parse_matrix(std::istream& in);
BitMatrix parse_matrix(const std::string& text);

// A GF(2) chain in the complex of dimension k: bit p is the coefficient of
// the generator with tail mask p, so the vector has length 2^k.
struct Chain {
    int k = 0;
    BitVector bits;

    Chain() = default;
    explicit Chain(int k);

    bool test(std::uint32_t mask) const { return bits.test(mask); }
    void toggle(std::uint32_t mask) { bits.toggle(mask); }
    bool empty() const { return !bits.any(); }

    Chain& operator^=(const Chain& other);
    friend Chain operator^(Chain a, const Chain& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const Chain&, const Chain&) = default;
};

}  // namespace floer
