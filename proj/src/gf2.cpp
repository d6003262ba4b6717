#include "floer/gf2.hpp"

#include "floer/signvec.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace floer {

namespace {

constexpr std::size_t kNoPivot = std::numeric_limits<std::size_t>::max();

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

// Index of the first set bit at or after `from`, or kNoPivot.
std::size_t first_set(std::span<const std::uint64_t> words, std::size_t from) {
    std::size_t w = from >> 6;
    if (w >= words.size()) return kNoPivot;
    std::uint64_t bits = words[w] & ~((std::uint64_t{1} << (from & 63)) - 1);
    while (true) {
        if (bits) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words.size()) return kNoPivot;
        bits = words[w];
    }
}

}  // namespace

bool BitVector::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (size_ != other.size_) {
        throw DimensionMismatchError("bit vector length mismatch: " +
                                     std::to_string(size_) + " vs " +
                                     std::to_string(other.size_));
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) {
        throw IndexError("matrix index (" + std::to_string(r) + ", " +
                         std::to_string(c) + ") out of range");
    }
    if (value)
        data_[r * wpr_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
    else
        data_[r * wpr_ + (c >> 6)] &= ~(std::uint64_t{1} << (c & 63));
}

BitVector BitMatrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.data() + r * wpr_, wpr_, v.words().data());
    return v;
}

BitMatrix identity_matrix(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

bool is_zero(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::uint64_t w : m.row(r))
            if (w) return false;
    }
    return true;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                const std::size_t c = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                t.toggle(c, r);
            }
        }
    }
    return t;
}

std::size_t rank(const BitMatrix& m) {
    // Incremental elimination: reduce each row against the pivots found so
    // far; a row that survives nonzero contributes its leading column as a
    // new pivot. The leading bit only moves right, so the scan resumes from
    // the previous position.
    BitMatrix work = m;
    std::vector<std::size_t> pivot_row_of_col(work.cols(), kNoPivot);
    std::size_t rk = 0;
    for (std::size_t r = 0; r < work.rows(); ++r) {
        auto row = work.row(r);
        std::size_t lead = first_set(row, 0);
        while (lead != kNoPivot) {
            const std::size_t p = pivot_row_of_col[lead];
            if (p == kNoPivot) {
                pivot_row_of_col[lead] = r;
                ++rk;
                break;
            }
            xor_words(row, work.row(p));
            lead = first_set(row, lead + 1);
        }
    }
    return rk;
}

RankNullity compose_rank_checks(const BitMatrix& m) {
    const std::size_t r = rank(m);
    return RankNullity{r, m.cols() - r};
}

BitVector apply(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) {
        throw DimensionMismatchError("apply: vector length " +
                                     std::to_string(v.size()) +
                                     " != cols " + std::to_string(m.cols()));
    }
    BitVector out(m.rows());
    const auto vw = v.words();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < row.size(); ++i) acc ^= row[i] & vw[i];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatchError("multiply: inner dimensions disagree");
    }
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto out = c.row(r);
        const auto arow = a.row(r);
        for (std::size_t w = 0; w < arow.size(); ++w) {
            std::uint64_t bits = arow[w];
            while (bits) {
                const std::size_t j = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                xor_words(out, b.row(j));
            }
        }
    }
    return c;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    // Row-reduce a copy to reduced echelon form, then back-substitute one
    // kernel vector per free column.
    BitMatrix work = m;
    const std::size_t cols = work.cols();
    std::vector<std::size_t> pivot_row_of_col(cols, kNoPivot);
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < work.rows(); ++c) {
        std::size_t sel = kNoPivot;
        for (std::size_t r = next_row; r < work.rows(); ++r) {
            if (work.get(r, c)) {
                sel = r;
                break;
            }
        }
        if (sel == kNoPivot) continue;
        if (sel != next_row) {
            for (std::size_t w = 0; w < work.words_per_row(); ++w)
                std::swap(work.row(sel)[w], work.row(next_row)[w]);
        }
        for (std::size_t r = 0; r < work.rows(); ++r) {
            if (r != next_row && work.get(r, c)) {
                xor_words(work.row(r), work.row(next_row));
            }
        }
        pivot_row_of_col[c] = next_row;
        ++next_row;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_row_of_col[f] != kNoPivot) continue;
        BitVector v(cols);
        v.set(f);
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t pr = pivot_row_of_col[c];
            if (pr != kNoPivot && work.get(pr, f)) v.set(c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void dump_matrix(const BitMatrix& m, std::ostream& out) {
    out << "gf2 " << m.rows() << ' ' << m.cols() << '\n';
    static const char* digits = "0123456789abcdef";
    const std::size_t ndigits = (m.cols() + 3) / 4;
    std::string line(ndigits, '0');
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t d = 0; d < ndigits; ++d) {
            const std::size_t bit = d * 4;
            const unsigned nib = (row[bit >> 6] >> (bit & 63)) & 0xF;
            line[d] = digits[nib];
        }
        out << line << '\n';
    }
}

std::string dump_matrix(const BitMatrix& m) {
    std::ostringstream oss;
    dump_matrix(m, oss);
    return oss.str();
}

BitMatrix parse_matrix(std::istream& in) {
    std::string tag;
    std::size_t rows = 0, cols = 0;
    if (!(in >> tag) || tag != "gf2" || !(in >> rows >> cols)) {
        throw DimensionMismatchError("matrix dump: bad header (want 'gf2 rows cols')");
    }
    BitMatrix m(rows, cols);
    const std::size_t ndigits = (cols + 3) / 4;
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!(in >> line) || line.size() != ndigits) {
            throw DimensionMismatchError("matrix dump: row " + std::to_string(r) +
                                         " malformed");
        }
        for (std::size_t d = 0; d < ndigits; ++d) {
            const char ch = line[d];
            unsigned nib;
            if (ch >= '0' && ch <= '9')
                nib = static_cast<unsigned>(ch - '0');
            else if (ch >= 'a' && ch <= 'f')
                nib = static_cast<unsigned>(ch - 'a') + 10;
            else
                throw DimensionMismatchError("matrix dump: non-hex digit");
            for (unsigned b = 0; b < 4; ++b) {
                if (nib & (1u << b)) {
                    const std::size_t c = d * 4 + b;
                    if (c >= cols) {
                        throw DimensionMismatchError(
                            "matrix dump: set bit past the declared width");
                    }
                    m.set(r, c);
                }
            }
        }
    }
    return m;
}

BitMatrix parse_matrix(const std::string& text) {
    std::istringstream iss(text);
    return parse_matrix(iss);
}

Chain::Chain(int k_) : k(k_) {
    if (k < 1 || k > kMaxPointDim) {
        throw CapacityError("chain dimension k must be in [1, " +
                            std::to_string(kMaxPointDim) + "], got " +
                            std::to_string(k));
    }
    bits = BitVector(std::size_t{1} << k);
}

Chain& Chain::operator^=(const Chain& other) {
    if (k != other.k) {
        throw DimensionMismatchError("chain dimension mismatch: " +
                                     std::to_string(k) + " vs " +
                                     std::to_string(other.k));
    }
    bits ^= other.bits;
    return *this;
}

}  // namespace floer
