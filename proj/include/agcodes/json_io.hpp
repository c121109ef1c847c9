#ifndef AGCODES_JSON_IO_HPP
#define AGCODES_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "agcodes/curve.hpp"
#include "agcodes/derived.hpp"
#include "agcodes/goppa.hpp"
#include "agcodes/linear_code.hpp"
#include "agcodes/semigroup.hpp"

namespace agcodes {

using Json = nlohmann::ordered_json;

/// Curve description files: {p, s, q, mu, alphas} with elements as
/// canonical integer encodings.
Json curve_spec_to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const Json& j);
CurveSpec load_curve_spec(const std::string& path);

Json curve_info_to_json(const Curve& curve);

Json bound_to_json(const Bound& b);
Json report_to_json(const ParamReport& rep);

Json semigroup_to_json(const NumericalSemigroup& s, long feng_rao_upto);

/// Row-major CSV of encodings, one row per line.
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(const std::shared_ptr<const Field>& field, const std::string& csv);

Json quantum_to_json(const QuantumParams& qp);
Json convolutional_to_json(const ConvolutionalParams& cp);
Json lrc_to_json(const LrcCode& lrc);

} // namespace agcodes

#endif
