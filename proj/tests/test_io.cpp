#include <doctest.h>

#include "charcodes/io.hpp"

using namespace charcodes;

TEST_CASE("field spec round trip") {
    auto f = make_field(5, 2);
    std::string spec = format_field_spec(*f);
    CHECK(spec == "p=5 b=2 mod=1,1,1");
    auto g = parse_field_spec(spec);
    CHECK(g->same(*f));
    CHECK(parse_field_spec("p=7 b=1")->q() == 7);
    CHECK_THROWS_AS(parse_field_spec("b=2"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("p=5 b=1 junk=2"), ParseError);
}

TEST_CASE("poly text format") {
    auto f = make_field(5, 1);
    CHECK(format_poly(Poly::x(f)) == "0,1");
    CHECK(format_poly(Poly::zero(f)) == "0");
    CHECK(parse_poly(f, "0,1") == Poly::x(f));
    CHECK(parse_poly(f, "0") == Poly::zero(f));
    CHECK(parse_poly(f, "3,0,0") == Poly::constant(f, Fq(3)));
    CHECK_THROWS_AS(parse_poly(f, "9"), ParseError);
    CHECK_THROWS_AS(parse_poly(f, "1,x"), ParseError);
}

TEST_CASE("word file format") {
    auto f = make_field(5, 1);
    ReceivedWord w{f, Alphabet::qr, {Fq(0), Fq(1), Fq(4), Fq(4), Fq(1)}};
    std::string text = format_word(w);
    CHECK(text == "field: p=5 b=1 mod=0,1\nalphabet: qr\n0 1 4 4 1\n");
    ReceivedWord back = parse_word(text);
    CHECK(back.ctx->same(*f));
    CHECK(back.alphabet == Alphabet::qr);
    CHECK(back.values == w.values);
    CHECK_THROWS_AS(parse_word("alphabet: qr\n"), ParseError);
    CHECK_THROWS_AS(parse_word("field: p=5 b=1\nalphabet: qr\n0 1\n"), ParseError);
}

TEST_CASE("pseudopolynomial format") {
    auto f = make_field(5, 1);
    PseudoPoly p(f, {Poly::x(f), Poly::constant(f, Fq(2))});
    std::string text = format_pseudopoly(p);
    CHECK(text == "0,1\n2\n\n");
    CHECK(parse_pseudopoly(f, text) == p);
}
