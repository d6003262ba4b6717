#include "floer/signvec.hpp"

#include <bit>

namespace floer {

namespace {

std::uint32_t tail_mask(int k) {
    return (k == 32) ? ~0u : ((1u << k) - 1u);
}

void check_dim(int k) {
    if (k < 1 || k > kMaxPointDim) {
        throw CapacityError("point dimension k must be in [1, " +
                            std::to_string(kMaxPointDim) + "], got " +
                            std::to_string(k));
    }
}

}  // namespace

PointCode point_code(int k, std::uint32_t mask) {
    check_dim(k);
    if (mask > tail_mask(k)) {
        throw IndexError("mask " + std::to_string(mask) +
                         " out of range for k=" + std::to_string(k));
    }
    return PointCode{k, mask};
}

PointCode canonicalize(std::span<const int> signs, int k) {
    check_dim(k);
    if (static_cast<int>(signs.size()) != k + 1) {
        throw DimensionMismatchError(
            "expected " + std::to_string(k + 1) + " signs, got " +
            std::to_string(signs.size()));
    }
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw DimensionMismatchError("sign entries must be +1 or -1");
        }
    }
    const int lead = signs[0];
    std::uint32_t mask = 0;
    for (int i = 1; i <= k; ++i) {
        if (signs[i] * lead < 0) mask |= 1u << (i - 1);
    }
    return PointCode{k, mask};
}

PointCode flip(PointCode p, int i) {
    check_dim(p.k);
    if (i < 0 || i > p.k) {
        throw IndexError("flip index " + std::to_string(i) +
                         " out of range for k=" + std::to_string(p.k));
    }
    if (i == 0) {
        return PointCode{p.k, ~p.mask & tail_mask(p.k)};
    }
    return PointCode{p.k, p.mask ^ (1u << (i - 1))};
}

Parity plus_one_count_parity(PointCode p) {
    check_dim(p.k);
    if (p.k % 2 == 0) {
        throw UnsupportedDimensionError(
            "+1-count parity is representative-dependent for even k=" +
            std::to_string(p.k));
    }
    const int plus_ones = p.k + 1 - std::popcount(p.mask);
    return (plus_ones % 2 == 0) ? Parity::Even : Parity::Odd;
}

std::vector<int> to_signs(PointCode p) {
    check_dim(p.k);
    std::vector<int> signs(p.k + 1, 1);
    for (int i = 1; i <= p.k; ++i) {
        if (p.mask & (1u << (i - 1))) signs[i] = -1;
    }
    return signs;
}

std::string to_sign_string(PointCode p) {
    check_dim(p.k);
    std::string s(p.k, '+');
    for (int i = 0; i < p.k; ++i) {
        if (p.mask & (1u << i)) s[i] = '-';
    }
    return s;
}

PointCode from_sign_string(const std::string& s) {
    const int k = static_cast<int>(s.size());
    check_dim(k);
    std::uint32_t mask = 0;
    for (int i = 0; i < k; ++i) {
        if (s[i] == '-') {
            mask |= 1u << i;
        } else if (s[i] != '+') {
            throw DimensionMismatchError("sign string must contain only '+'/'-'");
        }
    }
    return PointCode{k, mask};
}

}  // namespace floer
