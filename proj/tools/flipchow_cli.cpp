#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "flipchow/coeffs.hpp"
#include "flipchow/engine.hpp"
#include "flipchow/formal.hpp"
#include "flipchow/poincare.hpp"
#include "flipchow/render.hpp"

namespace {

using namespace flipchow;

OutputFormat parse_format(const std::string& f) {
    if (f == "json") return OutputFormat::Json;
    if (f == "latex") return OutputFormat::Latex;
    return OutputFormat::Text;
}

// Parses "N", "M0".."Mw", "S1".."Sw".
SpaceId parse_space(const ModuliParams& p, const std::string& name) {
    if (name == "N") return SpaceId::moduli_N();
    if (name.size() >= 2 && (name[0] == 'M' || name[0] == 'S')) {
        int k = std::stoi(name.substr(1));
        SpaceId s = name[0] == 'M' ? SpaceId::M(k) : SpaceId::SymX(k);
        if (name[0] == 'M' && (k < 0 || k > p.w))
            throw IndexOutOfRange("IndexOutOfRange: " + name + " outside M0..M" +
                                  std::to_string(p.w));
        if (name[0] == 'S' && (k < 1 || k > p.w))
            throw IndexOutOfRange("IndexOutOfRange: " + name + " outside S1..S" +
                                  std::to_string(p.w));
        return s;
    }
    throw CLI::ValidationError("--space", "expected N, M0..Mw or S1..Sw");
}

void emit(const nlohmann::json& doc, const std::string& text_payload, OutputFormat fmt) {
    if (fmt == OutputFormat::Json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text_payload << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Flip-tower computation of Chow-group decompositions and Poincare polynomials "
                 "for the moduli space of rank-2 bundles with fixed odd determinant"};
    app.require_subcommand(1);

    int genus = 0, degree = 0;
    std::string format = "text";
    app.add_option("--genus", genus, "curve genus g >= 2")->required();
    app.add_option("--degree", degree, "determinant degree d (odd, d >= 4g-3)")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "latex", "text"}));

    auto* cmd_poincare = app.add_subcommand("poincare", "Poincare polynomial of a tower space");
    std::string space_name_arg = "N";
    cmd_poincare->add_option("--space", space_name_arg, "N, M0..Mw or S1..Sw");

    auto* cmd_resolution =
        app.add_subcommand("resolution", "resolution of A^l(N) by M0 and symmetric powers");
    int res_codim = 0;
    cmd_resolution->add_option("--codim", res_codim, "Chow codimension l")->required();

    auto* cmd_sequence = app.add_subcommand("sequence", "terms of a split exact sequence");
    std::string seq_type = "theorem";
    int seq_step = 1, seq_codim = 0;
    cmd_sequence->add_option("--type", seq_type, "star | theorem | final")
        ->check(CLI::IsMember({"star", "theorem", "final"}));
    cmd_sequence->add_option("--step", seq_step, "flip step k (star only)");
    cmd_sequence->add_option("--codim", seq_codim, "Chow codimension l")->required();

    auto* cmd_coeffs = app.add_subcommand("coeffs", "coefficient expression C_r^s");
    int co_step = 0, co_r = 0, co_s = 0;
    cmd_coeffs->add_option("--step", co_step, "flip step k")->required();
    cmd_coeffs->add_option("--r", co_r, "kernel index r")->required();
    cmd_coeffs->add_option("--s", co_s, "middle index s")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    int also_degree = -1;
    cmd_verify->add_option("--also-degree", also_degree, "sibling degree for d-independence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const OutputFormat fmt = parse_format(format);
    const bool latex = fmt == OutputFormat::Latex;

    try {
        const ModuliParams p = validate_params(genus, degree);

        if (*cmd_poincare) {
            const SpaceId space = parse_space(p, space_name_arg);
            IntPolynomial poly;
            switch (space.kind) {
                case SpaceId::Kind::N: poly = poincare_N(p); break;
                case SpaceId::Kind::M: poly = poincare_M(p, space.k); break;
                case SpaceId::Kind::SymX: poly = sym_power_betti(p.g, space.k); break;
                default: throw IndexOutOfRange("IndexOutOfRange: unsupported space");
            }
            nlohmann::json result = {{"space", flipchow::space_name(space)},
                                     {"polynomial", poly_to_json(poly)}};
            emit(make_document(p, "poincare", result, {}), latex ? to_latex(poly) : to_text(poly),
                 fmt);
            return 0;
        }

        if (*cmd_resolution) {
            const auto omegas = resolution(p, res_codim);
            nlohmann::json jomegas = nlohmann::json::array();
            std::string text;
            for (size_t i = 0; i < omegas.size(); ++i) {
                jomegas.push_back(decomposition_to_json(omegas[i]));
                if (latex)
                    text += "\\Omega_{" + std::to_string(i) +
                            "} = " + decomposition_to_text(omegas[i], true) + "\n";
                else
                    text += "Omega_" + std::to_string(i) + ": " +
                            decomposition_to_text(omegas[i]) + "\n";
            }
            if (!text.empty()) text.pop_back();
            nlohmann::json result = {{"codim", res_codim},
                                     {"depth", omegas.empty() ? 0 : (int)omegas.size() - 1},
                                     {"omegas", jomegas}};
            emit(make_document(p, "resolution", result, {}), text, fmt);
            return 0;
        }

        if (*cmd_sequence) {
            ExactSequenceSpec seq;
            if (seq_type == "star")
                seq = star_sequence(p, seq_step, seq_codim);
            else if (seq_type == "final")
                seq = final_sequence(p, seq_codim);
            else
                seq = theorem_sequence(p, seq_codim);
            nlohmann::json result = sequence_to_json(seq);
            result["type"] = seq_type;
            result["codim"] = seq_codim;
            std::string text = "kernel: " + decomposition_to_text(seq.kernel, latex) +
                               "\nmiddle: " + decomposition_to_text(seq.middle, latex) +
                               "\nquotient: " + decomposition_to_text(seq.quotient, latex);
            emit(make_document(p, "sequence", result, {}), text, fmt);
            return 0;
        }

        if (*cmd_coeffs) {
            const CoeffExpression e = coeff_C(p, co_step, co_r, co_s);
            nlohmann::json result = coeff_to_json(e);
            result["r"] = co_r;
            result["s"] = co_s;
            emit(make_document(p, "coeffs", result, {}), latex ? to_latex(e) : to_text(e), fmt);
            return 0;
        }

        if (*cmd_verify) {
            const FlipTrace trace = verify(p, also_degree);
            std::string text;
            for (const auto& c : trace.checks) {
                text += c.name + ": " + (c.passed ? "pass" : "FAIL");
                if (!c.passed && !c.detail.empty()) text += " (" + c.detail + ")";
                text += "\n";
            }
            text += "P(N) = " + (latex ? to_latex(trace.poincare_N) : to_text(trace.poincare_N));
            emit(make_document(p, "verify", trace_to_json(trace), trace.checks), text, fmt);
            return trace.all_passed() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
