#pragma once

#include <compare>
#include <string>

#include "flipchow/errors.hpp"

namespace flipchow {

/// Validated input parameters (g, d) together with the derived constants
/// used throughout the flip tower:
///   w = (d-1)/2   number of flips,
///   m = d+g-1     so that M_0 = P^{m-1},
///   n = d-2g+2    rank of the projective bundle M_w -> N.
struct ModuliParams {
    int g = 0;
    int d = 0;
    int w = 0;
    int m = 0;
    int n = 0;

    int dim_N() const { return 3 * g - 3; }

    friend bool operator==(const ModuliParams&, const ModuliParams&) = default;
};

/// Checks g >= 2, d odd, w >= 2g-2 and fills in the derived fields.
ModuliParams validate_params(int g, int d);

/// Spaces of the tower, identified by tag and step index.
/// M(0) = P^{m-1}; M(k) for 1 <= k <= w are the flipped models; SymX(k) = S^kX;
/// ZMinus/ZPlus are the flip centers (dimension queries only).
struct SpaceId {
    enum class Kind { M, SymX, N, ZMinus, ZPlus };

    Kind kind = Kind::N;
    int k = 0;  // unused for N

    static SpaceId M(int k) { return {Kind::M, k}; }
    static SpaceId SymX(int k) { return {Kind::SymX, k}; }
    static SpaceId moduli_N() { return {Kind::N, 0}; }
    static SpaceId ZMinus(int k) { return {Kind::ZMinus, k}; }
    static SpaceId ZPlus(int k) { return {Kind::ZPlus, k}; }

    friend bool operator==(const SpaceId&, const SpaceId&) = default;
    friend auto operator<=>(const SpaceId&, const SpaceId&) = default;
};

/// Dimension of the named space; throws IndexOutOfRange for step indices
/// outside the tower.
int dim_of(const ModuliParams& p, const SpaceId& s);

/// "M0", "S3", "N", "Z2-", "Z2+".
std::string space_name(const SpaceId& s);

}  // namespace flipchow
