#include <doctest.h>

#include <random>

#include "flipchow/formal.hpp"
#include "reference_expander.hpp"

using namespace flipchow;

namespace {

Atom sym_atom(int k, int j) { return {SpaceId::SymX(k), j}; }

}  // namespace

TEST_CASE("decomposition prunes out-of-range atoms") {
    const ModuliParams p = validate_params(2, 5);
    FormalDecomposition d;
    d.add(p, sym_atom(2, -1));
    d.add(p, sym_atom(2, 3));  // dim S^2X = 2
    CHECK(d.empty());
    d.add(p, sym_atom(2, 0), 2);
    d.add(p, sym_atom(2, 0));
    CHECK(d.count(sym_atom(2, 0)) == 3);
    CHECK(d.total() == 3);
}

TEST_CASE("star_sequence at (g=2,d=5)") {
    const ModuliParams p = validate_params(2, 5);

    SUBCASE("k=1, l=1: empty kernel, one surviving middle extra") {
        const ExactSequenceSpec seq = star_sequence(p, 1, 1);
        CHECK(seq.kernel.empty());
        CHECK(seq.middle.count(sym_atom(1, 0)) == 1);
        CHECK(seq.middle.count({SpaceId::M(0), 1}) == 1);
        CHECK(seq.middle.total() == 2);
        CHECK(seq.quotient.count({SpaceId::M(1), 1}) == 1);
        CHECK(seq.quotient.total() == 1);
    }

    SUBCASE("k=2, l=2") {
        const ExactSequenceSpec seq = star_sequence(p, 2, 2);
        CHECK(seq.kernel.count(sym_atom(2, 0)) == 1);
        CHECK(seq.kernel.total() == 1);
        CHECK(seq.middle.count(sym_atom(2, 0)) == 1);
        CHECK(seq.middle.count({SpaceId::M(1), 2}) == 1);
        CHECK(seq.middle.total() == 2);
    }

    SUBCASE("k=1 kernel always empty") {
        for (int l = -3; l <= 8; ++l) CHECK(star_sequence(p, 1, l).kernel.empty());
    }

    CHECK_THROWS_AS(star_sequence(p, 0, 1), IndexOutOfRange);
    CHECK_THROWS_AS(star_sequence(p, 3, 1), IndexOutOfRange);
}

TEST_CASE("theorem_sequence at (g=2,d=5)") {
    const ModuliParams p = validate_params(2, 5);

    SUBCASE("l=0") {
        const ExactSequenceSpec seq = theorem_sequence(p, 0);
        CHECK(seq.kernel.count({SpaceId::moduli_N(), 1}) == 1);
        CHECK(seq.kernel.count({SpaceId::moduli_N(), 2}) == 1);
        CHECK(seq.kernel.count(sym_atom(2, 0)) == 1);
        CHECK(seq.kernel.total() == 3);
        CHECK(seq.middle.count({SpaceId::M(0), 2}) == 1);
        CHECK(seq.middle.count(sym_atom(1, 1)) == 1);
        CHECK(seq.middle.count(sym_atom(1, 0)) == 1);
        CHECK(seq.middle.count(sym_atom(2, 0)) == 1);
        CHECK(seq.middle.total() == 4);
        CHECK(seq.quotient.count({SpaceId::moduli_N(), 0}) == 1);
    }

    SUBCASE("l=4: everything N-flavored prunes away") {
        const ExactSequenceSpec seq = theorem_sequence(p, 4);
        CHECK(seq.quotient.empty());
        for (const auto& [a, c] : seq.kernel.counts())
            CHECK(a.space.kind != SpaceId::Kind::N);
    }
}

TEST_CASE("final_sequence at (g=2,d=5)") {
    const ModuliParams p = validate_params(2, 5);

    const ExactSequenceSpec seq0 = final_sequence(p, 0);
    CHECK(seq0.kernel.count({SpaceId::moduli_N(), 1}) == 1);
    CHECK(seq0.kernel.count({SpaceId::moduli_N(), 2}) == 1);
    CHECK(seq0.kernel.total() == 2);
    CHECK(seq0.middle.count({SpaceId::M(2), 2}) == 1);
    CHECK(seq0.quotient.count({SpaceId::moduli_N(), 0}) == 1);

    const ExactSequenceSpec seq_top = final_sequence(p, p.dim_N());
    CHECK(seq_top.quotient.count({SpaceId::moduli_N(), 3}) == 1);
    CHECK(seq_top.kernel.empty());

    CHECK(final_sequence(p, 5).quotient.empty());
}

TEST_CASE("resolution basics at (g=2,d=5)") {
    const ModuliParams p = validate_params(2, 5);

    SUBCASE("l=0 starts with the theorem middle") {
        const auto omegas = resolution(p, 0);
        REQUIRE(!omegas.empty());
        CHECK(omegas[0] == theorem_sequence(p, 0).middle);
    }

    SUBCASE("top degree terminates at depth <= 1") {
        const auto omegas = resolution(p, p.dim_N());
        const ExactSequenceSpec seq = theorem_sequence(p, p.dim_N());
        FormalDecomposition sym_kernel;
        for (const auto& [a, c] : seq.kernel.counts()) {
            CHECK(a.space.kind == SpaceId::Kind::SymX);  // N-part fully pruned at top degree
            sym_kernel.add(p, a, c);
        }
        REQUIRE(omegas.size() == (sym_kernel.empty() ? 1u : 2u));
        CHECK(omegas[0] == seq.middle);
        if (!sym_kernel.empty()) CHECK(omegas[1] == sym_kernel);
    }

    CHECK_THROWS_AS(resolution(p, -1), IndexOutOfRange);
    CHECK_THROWS_AS(resolution(p, 4), IndexOutOfRange);
}

TEST_CASE("resolution matches the straight-line reference expander") {
    for (int d : {5, 7, 9}) {
        const ModuliParams p = validate_params(2, d);
        for (int l = 0; l <= 3; ++l) {
            const auto omegas = resolution(p, l);
            const auto reference = testing::reference_resolution(p, l);
            CHECK(omegas == reference);
            CHECK((int)omegas.size() - 1 <= p.dim_N() - l + 1);
            for (const auto& omega : omegas)
                for (const auto& [a, c] : omega.counts()) {
                    const bool allowed = (a.space.kind == SpaceId::Kind::M && a.space.k == 0) ||
                                         a.space.kind == SpaceId::Kind::SymX;
                    CHECK(allowed);
                }
        }
    }
}

TEST_CASE("pruning soundness across sequences") {
    for (int g : {2, 3}) {
        const ModuliParams p = validate_params(g, 4 * g - 3);
        auto check_decomp = [&](const FormalDecomposition& d) {
            for (const auto& [a, c] : d.counts()) {
                CHECK(a.codim >= 0);
                CHECK(a.codim <= dim_of(p, a.space));
                CHECK(c > 0);
            }
        };
        for (int l = -2; l <= p.m + 1; ++l) {
            for (int k = 1; k <= p.w; ++k) {
                const auto seq = star_sequence(p, k, l);
                check_decomp(seq.kernel);
                check_decomp(seq.middle);
                check_decomp(seq.quotient);
            }
            const auto seq = theorem_sequence(p, l);
            check_decomp(seq.kernel);
            check_decomp(seq.middle);
            check_decomp(seq.quotient);
        }
    }
}
