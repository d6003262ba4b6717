#include <doctest.h>

#include <array>
#include <set>

#include "floer/signvec.hpp"

using namespace floer;

TEST_SUITE_BEGIN("signvec");

TEST_CASE("canonicalize reads off tail signs") {
    const std::array<int, 4> all_plus{1, 1, 1, 1};
    CHECK(canonicalize(all_plus, 3).mask == 0b000);

    const std::array<int, 4> alternating{1, -1, 1, -1};
    CHECK(canonicalize(alternating, 3).mask == 0b101);
}

TEST_CASE("canonicalize negates a leading -1 first") {
    const std::array<int, 4> signs{-1, 1, 1, 1};
    CHECK(canonicalize(signs, 3).mask == 0b111);

    // both representatives of a projective point get the same code
    const std::array<int, 4> negated{1, -1, -1, -1};
    CHECK(canonicalize(negated, 3) == canonicalize(signs, 3));
}

TEST_CASE("canonicalize rejects bad input") {
    const std::array<int, 3> short_vec{1, 1, 1};
    CHECK_THROWS_AS(canonicalize(short_vec, 3), DimensionMismatchError);
    const std::array<int, 4> bad_entry{1, 2, 1, 1};
    CHECK_THROWS_AS(canonicalize(bad_entry, 3), DimensionMismatchError);
}

TEST_CASE("flip toggles a tail bit or complements the mask") {
    const PointCode p{3, 0b000};
    CHECK(flip(p, 2).mask == 0b010);
    CHECK(flip(p, 0).mask == 0b111);
    CHECK_THROWS_AS(flip(p, 4), IndexError);
}

TEST_CASE("flip is an involution and flips are pairwise distinct") {
    for (int k = 2; k <= 7; ++k) {
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            const PointCode p{k, mask};
            std::set<std::uint32_t> images;
            for (int i = 0; i <= k; ++i) {
                CHECK(flip(flip(p, i), i) == p);
                images.insert(flip(p, i).mask);
            }
            CHECK(images.size() == static_cast<std::size_t>(k + 1));
        }
    }
}

TEST_CASE("plus-one parity counts +1 homogeneous coordinates") {
    CHECK(plus_one_count_parity(PointCode{3, 0b000}) == Parity::Even);
    CHECK(plus_one_count_parity(PointCode{3, 0b001}) == Parity::Odd);
    CHECK_THROWS_AS(plus_one_count_parity(PointCode{4, 0}), UnsupportedDimensionError);
}

TEST_CASE("parity agrees with a direct count and alternates under flips") {
    for (int k : {3, 5}) {
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            const PointCode p{k, mask};
            // independent count from the expanded sign vector
            int plus = 0;
            for (int s : to_signs(p)) plus += (s > 0);
            const Parity direct = (plus % 2 == 0) ? Parity::Even : Parity::Odd;
            CHECK(plus_one_count_parity(p) == direct);
            for (int i = 0; i <= k; ++i) {
                CHECK(plus_one_count_parity(flip(p, i)) != direct);
            }
        }
    }
}

TEST_CASE("sign string round trip") {
    for (int k : {1, 3, 6}) {
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            const PointCode p{k, mask};
            const std::string s = to_sign_string(p);
            CHECK(s.size() == static_cast<std::size_t>(k));
            CHECK(from_sign_string(s) == p);
        }
    }
    CHECK(to_sign_string(PointCode{3, 0b101}) == "-+-");
    CHECK_THROWS_AS(from_sign_string("+?+"), DimensionMismatchError);
}

TEST_CASE("point_code validates its arguments") {
    CHECK_THROWS_AS(point_code(3, 8), IndexError);
    CHECK_THROWS_AS(point_code(0, 0), CapacityError);
    CHECK(point_code(3, 5).mask == 5);
}

TEST_SUITE_END();
