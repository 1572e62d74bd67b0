#include "flipchow/formal.hpp"

namespace flipchow {

std::string atom_name(const Atom& a) {
    return "A^" + std::to_string(a.codim) + "(" + space_name(a.space) + ")";
}

void FormalDecomposition::add(const ModuliParams& p, const Atom& a, int multiplicity) {
    if (multiplicity == 0) return;
    if (a.codim < 0 || a.codim > dim_of(p, a.space)) return;  // zero group
    auto [it, inserted] = counts_.try_emplace(a, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) counts_.erase(it);
    }
}

int FormalDecomposition::total() const {
    int n = 0;
    for (const auto& [a, c] : counts_) n += c;
    return n;
}

int FormalDecomposition::count(const Atom& a) const {
    auto it = counts_.find(a);
    return it == counts_.end() ? 0 : it->second;
}

FormalDecomposition& FormalDecomposition::merge(const FormalDecomposition& o) {
    for (const auto& [a, c] : o.counts_) {
        auto [it, inserted] = counts_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) counts_.erase(it);
        }
    }
    return *this;
}

ExactSequenceSpec star_sequence(const ModuliParams& p, int k, int l) {
    if (k < 1 || k > p.w)
        throw IndexOutOfRange("IndexOutOfRange: star_sequence needs 1 <= k <= w = " +
                              std::to_string(p.w));
    ExactSequenceSpec seq;
    seq.label = {SequenceLabel::Kind::Star, k, l};
    for (int r = 0; r <= k - 2; ++r)
        seq.kernel.add(p, {SpaceId::SymX(k), l - p.m + 2 * k - r});
    seq.middle.add(p, {SpaceId::M(k - 1), l});
    for (int s = 0; s <= p.m - 2 * k - 2; ++s)
        seq.middle.add(p, {SpaceId::SymX(k), l - k - s});
    seq.quotient.add(p, {SpaceId::M(k), l});
    return seq;
}

ExactSequenceSpec theorem_sequence(const ModuliParams& p, int l) {
    ExactSequenceSpec seq;
    seq.label = {SequenceLabel::Kind::Theorem, 0, l};
    for (int i = 0; i <= p.n - 2; ++i)
        seq.kernel.add(p, {SpaceId::moduli_N(), l + 1 + i});
    for (int k = 1; k <= p.w; ++k)
        for (int r = 0; r <= k - 2; ++r)
            seq.kernel.add(p, {SpaceId::SymX(k), p.n - 1 + l - p.m + 2 * k - r});
    seq.middle.add(p, {SpaceId::M(0), p.n - 1 + l});
    for (int k = 1; k <= p.w; ++k)
        for (int s = 0; s <= p.m - 2 * k - 2; ++s)
            seq.middle.add(p, {SpaceId::SymX(k), p.n - 1 + l - k - s});
    seq.quotient.add(p, {SpaceId::moduli_N(), l});
    return seq;
}

ExactSequenceSpec final_sequence(const ModuliParams& p, int l) {
    ExactSequenceSpec seq;
    seq.label = {SequenceLabel::Kind::Final, 0, l};
    for (int i = 0; i <= p.n - 2; ++i)
        seq.kernel.add(p, {SpaceId::moduli_N(), l + 1 + i});
    seq.middle.add(p, {SpaceId::M(p.w), p.n - 1 + l});
    seq.quotient.add(p, {SpaceId::moduli_N(), l});
    return seq;
}

namespace {

// Splits the Theorem kernel at level l into its SymX part and the list of
// N-codimensions to expand (with multiplicity).
struct KernelParts {
    FormalDecomposition sym;
    std::vector<std::pair<int, int>> n_codims;  // (codim, multiplicity)
};

KernelParts split_kernel(const ModuliParams& p, const FormalDecomposition& kernel) {
    KernelParts out;
    for (const auto& [a, c] : kernel.counts()) {
        if (a.space.kind == SpaceId::Kind::N)
            out.n_codims.emplace_back(a.codim, c);
        else
            out.sym.add(p, a, c);
    }
    return out;
}

// Omega_i of the resolution of A^l(N); memoized per l.
std::vector<FormalDecomposition> resolve(const ModuliParams& p, int l,
                                         std::map<int, std::vector<FormalDecomposition>>& memo) {
    if (auto it = memo.find(l); it != memo.end()) return it->second;

    const ExactSequenceSpec seq = theorem_sequence(p, l);
    const KernelParts kernel = split_kernel(p, seq.kernel);

    std::vector<FormalDecomposition> omega{seq.middle};
    if (!kernel.sym.empty()) {
        omega.emplace_back();
        omega[1].merge(kernel.sym);
    }
    for (const auto& [codim, mult] : kernel.n_codims) {
        const auto sub = resolve(p, codim, memo);
        for (size_t i = 0; i < sub.size(); ++i) {
            while (omega.size() <= i + 1) omega.emplace_back();
            for (int rep = 0; rep < mult; ++rep) omega[i + 1].merge(sub[i]);
        }
    }
    while (!omega.empty() && omega.back().empty()) omega.pop_back();
    memo[l] = omega;
    return omega;
}

}  // namespace

std::vector<FormalDecomposition> resolution(const ModuliParams& p, int l) {
    if (l < 0 || l > p.dim_N())
        throw IndexOutOfRange("IndexOutOfRange: codim l = " + std::to_string(l) +
                              " outside 0.." + std::to_string(p.dim_N()));
    std::map<int, std::vector<FormalDecomposition>> memo;
    return resolve(p, l, memo);
}

}  // namespace flipchow
