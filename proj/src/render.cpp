#include "flipchow/render.hpp"

#include <nlohmann/json.hpp>

namespace flipchow {

namespace {

nlohmann::json bigint_to_json(const BigInt& v) {
    // Coefficients in practice fit in 64 bits; fall back to a decimal string.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

}  // namespace

nlohmann::json poly_to_json(const IntPolynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [d, c] : p.terms()) out.push_back({d, bigint_to_json(c)});
    return out;
}

IntPolynomial poly_from_json(const nlohmann::json& j) {
    IntPolynomial p;
    for (const auto& pair : j) {
        const auto& cj = pair.at(1);
        BigInt c = cj.is_string() ? BigInt(cj.get<std::string>()) : BigInt(cj.get<long long>());
        p.set_coeff(pair.at(0).get<int>(), std::move(c));
    }
    return p;
}

nlohmann::json params_to_json(const ModuliParams& p) {
    return {{"g", p.g}, {"d", p.d}, {"w", p.w}, {"m", p.m}, {"n", p.n}};
}

nlohmann::json decomposition_to_json(const FormalDecomposition& d) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [a, c] : d.counts())
        out.push_back({{"space", space_name(a.space)}, {"codim", a.codim}, {"mult", c}});
    return out;
}

nlohmann::json sequence_to_json(const ExactSequenceSpec& seq) {
    return {{"kernel", decomposition_to_json(seq.kernel)},
            {"middle", decomposition_to_json(seq.middle)},
            {"quotient", decomposition_to_json(seq.quotient)},
            {"split", seq.split}};
}

nlohmann::json coeff_to_json(const CoeffExpression& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : e.terms)
        terms.push_back(
            {{"segre", m.segre_index}, {"chern", m.chern_index}, {"coeff", bigint_to_json(c)}});
    return {{"step", e.step}, {"terms", terms}};
}

nlohmann::json trace_to_json(const FlipTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.per_step)
        steps.push_back({{"k", s.k},
                         {"poincare", poly_to_json(s.poincare)},
                         {"delta", poly_to_json(s.delta)}});
    return {{"steps", steps}, {"poincare_N", poly_to_json(t.poincare_N)}};
}

std::string decomposition_to_text(const FormalDecomposition& d, bool latex) {
    if (d.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : d.counts()) {
        if (!first) out += latex ? " \\oplus " : " + ";
        first = false;
        if (c != 1) out += std::to_string(c) + (latex ? "\\," : "*");
        if (latex)
            out += "A^{" + std::to_string(a.codim) + "}(" + space_name(a.space) + ")";
        else
            out += atom_name(a);
    }
    return out;
}

nlohmann::json make_document(const ModuliParams& p, const std::string& command,
                             nlohmann::json result, const std::vector<CheckResult>& checks) {
    nlohmann::json jchecks = nlohmann::json::array();
    for (const auto& c : checks)
        jchecks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"params", params_to_json(p)},
            {"command", command},
            {"result", std::move(result)},
            {"checks", jchecks}};
}

}  // namespace flipchow
