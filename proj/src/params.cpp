#include "flipchow/params.hpp"

#include <cassert>

namespace flipchow {

ModuliParams validate_params(int g, int d) {
    if (g < 2) throw GenusTooSmall(g);
    if (d % 2 == 0) throw EvenDegree(d);
    const int w = (d - 1) / 2;
    if (w < 2 * g - 2) throw DegreeTooSmall(w, 2 * g - 2);

    ModuliParams p{g, d, w, d + g - 1, d - 2 * g + 2};
    assert(p.m - p.n == 3 * g - 3);
    // middle-term index range of sequence (*) never has negative length
    for (int k = 1; k <= p.w; ++k) assert(p.m - 2 * k - 2 >= 0);
    return p;
}

int dim_of(const ModuliParams& p, const SpaceId& s) {
    auto check_step = [&](int lo) {
        if (s.k < lo || s.k > p.w)
            throw IndexOutOfRange("IndexOutOfRange: step k = " + std::to_string(s.k) +
                                  " outside " + std::to_string(lo) + ".." + std::to_string(p.w));
    };
    switch (s.kind) {
        case SpaceId::Kind::M:
            check_step(0);
            return p.m - 1;
        case SpaceId::Kind::SymX:
            if (s.k < 0) throw IndexOutOfRange("IndexOutOfRange: S^kX needs k >= 0");
            return s.k;
        case SpaceId::Kind::N:
            return p.dim_N();
        case SpaceId::Kind::ZMinus:
            check_step(1);
            return 2 * s.k - 1;
        case SpaceId::Kind::ZPlus:
            check_step(1);
            return p.m - s.k - 1;
    }
    throw IndexOutOfRange("IndexOutOfRange: unknown space");
}

std::string space_name(const SpaceId& s) {
    switch (s.kind) {
        case SpaceId::Kind::M: return "M" + std::to_string(s.k);
        case SpaceId::Kind::SymX: return "S" + std::to_string(s.k);
        case SpaceId::Kind::N: return "N";
        case SpaceId::Kind::ZMinus: return "Z" + std::to_string(s.k) + "-";
        case SpaceId::Kind::ZPlus: return "Z" + std::to_string(s.k) + "+";
    }
    return "?";
}

}  // namespace flipchow
