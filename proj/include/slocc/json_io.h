#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "slocc/classify.h"
#include "slocc/criteria.h"
#include "slocc/invariant.h"
#include "slocc/local_ops.h"
#include "slocc/statevec.h"

namespace slocc::io {

using Json = nlohmann::ordered_json;

/// Complex numbers are written as [re, im].
Json complex_to_json(Complex value);
Complex complex_from_json(const Json &value);

/// {"n": n, "amplitudes": [[re, im], ...]}. Parsing throws ParseError on a
/// malformed document or non-finite number and LengthMismatch when the count
/// is not 2^n.
Json state_to_json(const StateVector &state);
StateVector state_from_json(const Json &doc);

/// {"ops": [[[re,im],[re,im],[re,im],[re,im]], ...]}, each operator row-major.
Json chain_to_json(const LocalOperatorChain &chain);
LocalOperatorChain chain_from_json(const Json &doc);

Json report_to_json(const InvariantReport &report, double tol);
Json subscripts_to_json(const FSubscripts &t);
Json d_criteria_to_json(const CriteriaSignature &sig);
Json f_criteria_to_json(const CriteriaSignature &sig);
Json signature_to_json(const CriteriaSignature &sig);
Json verdict_to_json(const Verdict &verdict);
Json theorem_check_to_json(const TheoremCheck &check, double tolerance);

Json read_json_file(const std::filesystem::path &path);
/// Parses text, mapping parser failures (including number overflow) to ParseError.
Json parse_json(std::string_view text);
void write_json_file(const std::filesystem::path &path, const Json &doc);

}  // namespace slocc::io
