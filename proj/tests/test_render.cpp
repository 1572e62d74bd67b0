#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "flipchow/render.hpp"

using namespace flipchow;

namespace {

// Test-only parser for both the text and latex polynomial renderings.
IntPolynomial parse_poly(const std::string& s) {
    IntPolynomial out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else {
            REQUIRE(first);
        }
        first = false;
        BigInt coeff = 1;
        bool saw_digits = false;
        std::string digits;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
        if (!digits.empty()) {
            coeff = BigInt(digits);
            saw_digits = true;
        }
        int deg = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool braced = i < s.size() && s[i] == '{';
                if (braced) ++i;
                std::string e;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) e += s[i++];
                REQUIRE(!e.empty());
                deg = std::stoi(e);
                if (braced) {
                    REQUIRE(s[i] == '}');
                    ++i;
                }
            }
        } else {
            REQUIRE(saw_digits);
        }
        out.set_coeff(deg, out.coeff(deg) + sign * coeff);
    }
    return out;
}

}  // namespace

TEST_CASE("text and latex renderings parse back to the same polynomial") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-20, 20), deg(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        IntPolynomial p;
        for (int terms = deg(rng); terms >= 0; --terms) p.set_coeff(deg(rng), coeff(rng));
        if (p.is_zero()) continue;
        CHECK(parse_poly(to_text(p)) == p);
        CHECK(parse_poly(to_latex(p)) == p);
    }
}

TEST_CASE("json polynomial encoding round-trips") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-50, 50), deg(0, 15);
    for (int trial = 0; trial < 100; ++trial) {
        IntPolynomial p;
        for (int terms = deg(rng); terms >= 0; --terms) p.set_coeff(deg(rng), coeff(rng));
        const nlohmann::json j = poly_to_json(p);
        CHECK(poly_from_json(nlohmann::json::parse(j.dump())) == p);
    }
    // huge coefficients fall back to decimal strings
    IntPolynomial big;
    big.set_coeff(3, BigInt("123456789012345678901234567890"));
    CHECK(poly_from_json(poly_to_json(big)) == big);
}

TEST_CASE("document schema is stable") {
    const ModuliParams p = validate_params(2, 5);
    const nlohmann::json doc = make_document(p, "poincare", {{"space", "N"}}, {});
    CHECK(doc.contains("params"));
    CHECK(doc.contains("command"));
    CHECK(doc.contains("result"));
    CHECK(doc.contains("checks"));
    CHECK(doc["params"] == nlohmann::json({{"g", 2}, {"d", 5}, {"w", 2}, {"m", 6}, {"n", 3}}));
}

TEST_CASE("decomposition text") {
    const ModuliParams p = validate_params(2, 5);
    FormalDecomposition d;
    d.add(p, {SpaceId::M(0), 2});
    d.add(p, {SpaceId::SymX(1), 0}, 2);
    CHECK(decomposition_to_text(d) == "A^2(M0) + 2*A^0(S1)");
    CHECK(decomposition_to_text(d, true) == "A^{2}(M0) \\oplus 2\\,A^{0}(S1)");
    CHECK(decomposition_to_text(FormalDecomposition{}) == "0");
}
