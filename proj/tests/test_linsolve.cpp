#include <doctest.h>

#include "charcodes/linsolve.hpp"
#include "charcodes/rng.hpp"

using namespace charcodes;

TEST_CASE("nullspace examples") {
    auto f2 = make_field(2, 1);
    MatrixFq m(f2, 1, 2);
    m.at(0, 0) = Fq(1);
    m.at(0, 1) = Fq(1);
    auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Fq>{Fq(1), Fq(1)});

    auto f5 = make_field(5, 1);
    MatrixFq id(f5, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = Fq(1);
    CHECK(nullspace_basis(id).empty());
    CHECK(nullspace_sample(id, 5, 1).empty());

    auto f3 = make_field(3, 1);
    MatrixFq z(f3, 1, 2);
    auto zb = nullspace_sample(z, 2, 1);
    REQUIRE(zb.size() == 2);
    CHECK(zb[0] == std::vector<Fq>{Fq(1), Fq(0)});
    CHECK(zb[1] == std::vector<Fq>{Fq(0), Fq(1)});
}

TEST_CASE("affine solve examples") {
    auto f5 = make_field(5, 1);
    MatrixFq m(f5, 1, 1);
    m.at(0, 0) = Fq(1);
    auto s = solve_affine(m, std::vector<Fq>{Fq(3)});
    REQUIRE(s);
    CHECK((*s)[0] == Fq(3));

    auto f3 = make_field(3, 1);
    MatrixFq inc(f3, 2, 1);
    inc.at(0, 0) = Fq(1);
    inc.at(1, 0) = Fq(1);
    CHECK(!solve_affine(inc, std::vector<Fq>{Fq(1), Fq(2)}));

    auto f2 = make_field(2, 1);
    MatrixFq free2(f2, 1, 2);
    free2.at(0, 0) = Fq(1);
    free2.at(0, 1) = Fq(1);
    auto t = solve_affine(free2, std::vector<Fq>{Fq(1)});
    REQUIRE(t);
    CHECK(*t == std::vector<Fq>{Fq(1), Fq(0)});

    CHECK_THROWS_AS(solve_affine(free2, std::vector<Fq>{Fq(1), Fq(0)}), DimensionMismatch);
}

TEST_CASE("solutions verify and rank-nullity holds on random matrices") {
    Rng rng(41);
    for (auto [p, b] : {std::pair<uint64_t, uint64_t>{2, 1}, {5, 1}, {2, 4}, {101, 1}}) {
        auto f = make_field(p, b);
        for (int t = 0; t < 25; ++t) {
            size_t rows = 1 + rng.below(12), cols = 1 + rng.below(12);
            MatrixFq m(f, rows, cols);
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j)
                    m.at(i, j) = Fq(static_cast<uint32_t>(rng.below(f->q())));

            auto samples = nullspace_sample(m, 8, t);
            CHECK(rank(m) + nullspace_basis(m).size() == cols);
            for (const auto& v : samples) {
                bool nonzero = false;
                for (Fq x : v) nonzero |= (x != Fq(0));
                CHECK(nonzero);
                for (size_t i = 0; i < rows; ++i) {
                    Fq acc(0);
                    for (size_t j = 0; j < cols; ++j) acc = f->add(acc, f->mul(m.at(i, j), v[j]));
                    CHECK(acc == Fq(0));
                }
            }

            std::vector<Fq> rhs(rows);
            for (Fq& x : rhs) x = Fq(static_cast<uint32_t>(rng.below(f->q())));
            if (auto sol = solve_affine(m, rhs)) {
                for (size_t i = 0; i < rows; ++i) {
                    Fq acc(0);
                    for (size_t j = 0; j < cols; ++j)
                        acc = f->add(acc, f->mul(m.at(i, j), (*sol)[j]));
                    CHECK(acc == rhs[i]);
                }
            }
        }
    }
}
