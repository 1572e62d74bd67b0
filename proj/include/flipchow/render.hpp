#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "flipchow/coeffs.hpp"
#include "flipchow/engine.hpp"
#include "flipchow/formal.hpp"
#include "flipchow/polynomial.hpp"

namespace flipchow {

enum class OutputFormat { Text, Latex, Json };

/// Sparse encoding: array of [degree, coefficient] pairs, ascending, no zeros.
nlohmann::json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const ModuliParams& p);
nlohmann::json decomposition_to_json(const FormalDecomposition& d);
nlohmann::json sequence_to_json(const ExactSequenceSpec& seq);
nlohmann::json coeff_to_json(const CoeffExpression& e);
nlohmann::json trace_to_json(const FlipTrace& t);

std::string decomposition_to_text(const FormalDecomposition& d, bool latex = false);

/// Assembles the stable top-level document {params, command, result, checks}.
nlohmann::json make_document(const ModuliParams& p, const std::string& command,
                             nlohmann::json result, const std::vector<CheckResult>& checks);

}  // namespace flipchow
