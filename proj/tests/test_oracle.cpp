#include <doctest.h>

#include "charcodes/oracle.hpp"
#include "charcodes/rng.hpp"

using namespace charcodes;

TEST_CASE("brute force recovers clean and lightly corrupted qr words") {
    auto f = make_field(5, 2);
    Rng rng(91);
    for (int t = 0; t < 10; ++t) {
        Poly g = random_message(f, CodeSpec{Family::qr, 2, 1}, rng);
        auto clean = brute_force_decode_qr(f, encode_qr(f, g), 1);
        CHECK(clean.g == g);
        CHECK(clean.dist == 0);
        CHECK(clean.unique);

        auto noisy = brute_force_decode_qr(f, corrupt(encode_qr(f, g), 1, 91 + t), 1);
        if (noisy.unique) {
            CHECK(noisy.g == g);
            CHECK(noisy.dist == 1);
        }
    }
}

TEST_CASE("ties are reported as non-unique") {
    // a word equidistant from two codewords: search a small space for one
    auto f = make_field(5, 1);
    bool found_tie = false;
    for (uint64_t seed = 0; seed < 40 && !found_tie; ++seed) {
        Rng rng(seed);
        std::vector<Fq> vals(5);
        for (Fq& v : vals) {
            uint64_t r = rng.below(3);
            v = r == 0 ? Fq(0) : r == 1 ? Fq(1) : Fq(4);
        }
        auto res = brute_force_decode(f, CodeSpec{Family::qr, 2, 1}, {f, Alphabet::qr, vals});
        if (!res.unique) found_tie = true;
    }
    CHECK(found_tie);
}

TEST_CASE("search space guard") {
    auto f = make_field(101, 1);
    ReceivedWord w{f, Alphabet::qr, std::vector<Fq>(101, Fq(1))};
    CHECK_THROWS_AS(brute_force_decode_qr(f, w, 5), SearchSpaceTooLarge);
}

TEST_CASE("zero-error dual-BCH solve inverts the encoding map") {
    auto f = make_field(2, 6);
    Rng rng(92);
    for (int t = 0; t < 10; ++t) {
        Poly g = random_message(f, CodeSpec{Family::dbch, 2, 3}, rng);
        auto solved = dbch_zero_error_solve(f, encode_dbch(f, g), 3);
        REQUIRE(solved);
        CHECK(*solved == g);
        // flip one position: no longer a codeword
        auto noisy = corrupt(encode_dbch(f, g), 1, 92 + t);
        CHECK(!dbch_zero_error_solve(f, noisy, 3));
    }
}

TEST_CASE("brute force dual-BCH decodes within the guaranteed radius") {
    auto f = make_field(2, 6);
    Rng rng(93);
    for (int t = 0; t < 5; ++t) {
        Poly g = random_message(f, CodeSpec{Family::dbch, 2, 3}, rng);
        uint64_t e = rng.below(8);  // min weight 16 gives unique decoding to 7
        if (e > 7) e = 7;
        auto res = brute_force_decode_dbch(f, corrupt(encode_dbch(f, g), e, 93 + t), 3);
        CHECK(res.g == g);
        CHECK(res.dist == e);
        CHECK(res.unique);
    }
}

TEST_CASE("multiplicative character sums stay within the Weil bound") {
    auto f5 = make_field(5, 1);
    auto line = weil_sum_mult(f5, Poly::x(f5));
    CHECK(line.sum == 0);
    CHECK(line.applicable);
    CHECK(line.within_bound());

    auto square = weil_sum_mult(f5, Poly::monomial(f5, Fq(1), 2));
    CHECK(square.sum == int64_t(f5->q() - 1));
    CHECK(!square.applicable);

    auto f101 = make_field(101, 1);
    Rng rng(94);
    for (int t = 0; t < 50; ++t) {
        std::vector<Fq> c(4);
        for (Fq& x : c) x = Fq(static_cast<uint32_t>(rng.below(101)));
        c[3] = Fq(static_cast<uint32_t>(1 + rng.below(100)));
        Poly cubic = Poly::from_coeffs(f101, c);
        auto ws = weil_sum_mult(f101, cubic);
        if (ws.applicable) {
            CHECK(ws.within_bound());
            CHECK(ws.magnitude <= 60);  // 2*3*sqrt(101) rounded down
        }
    }
    CHECK_THROWS_AS(weil_sum_mult(make_field(2, 2), Poly::x(make_field(2, 2))),
                    EvenCharacteristic);
}

TEST_CASE("additive character sums stay within the Weil bound") {
    auto f4 = make_field(2, 2);
    auto line = weil_sum_add(f4, Poly::x(f4));
    CHECK(line.sum == 0);

    // x + x^2 is trace-invisible: inapplicable, sum is the whole field
    Poly xx2 = Poly::from_coeffs(f4, {Fq(0), Fq(1), Fq(1)});
    auto blind = weil_sum_add(f4, xx2);
    CHECK(!blind.applicable);
    CHECK(blind.magnitude == f4->q());

    auto f64 = make_field(2, 6);
    Rng rng(95);
    for (int t = 0; t < 50; ++t) {
        Poly g = random_message(f64, CodeSpec{Family::dbch, 2, 3}, rng);
        auto ws = weil_sum_add(f64, g);
        if (ws.applicable) {
            CHECK(ws.within_bound());
            CHECK(ws.magnitude <= 16);  // (3-1)*8
        }
    }
}

TEST_CASE("minimum dual-BCH weight examples") {
    auto f64 = make_field(2, 6);
    CHECK(min_weight_dbch(f64, 1) == 32);
    CHECK(min_weight_dbch(f64, 3) >= 16);
    auto f16 = make_field(2, 4);
    CHECK(min_weight_dbch(f16, 1) == 8);
}
