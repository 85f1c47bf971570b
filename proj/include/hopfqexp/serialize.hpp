#pragma once

#include <functional>
#include <string>

#include "json.hpp"

#include "hopfqexp/drinfeld_double.hpp"
#include "hopfqexp/hopf_algebra.hpp"
#include "hopfqexp/quasi_exponent.hpp"
#include "hopfqexp/twist.hpp"

namespace hopfqexp {

using Json = nlohmann::ordered_json;

/// A scalar of Q(zeta_m) as its power-basis coordinates, e.g. ["1/2", "0"].
Json scalar_to_json(const Cyclotomic& x, int conductor);
Cyclotomic scalar_from_json(const Json& j, int conductor, const std::string& field);

Json algebra_to_json(const HopfAlgebra& h);
/// Throws SchemaError for malformed documents and AxiomError when validate() fails.
HopfAlgebra algebra_from_json(const Json& j);

std::string serialize(const HopfAlgebra& h);
HopfAlgebra deserialize(const std::string& text);

/// The algebra document of D(H) with "base_dim" and a dense "r_matrix".
Json double_to_json(const QuasitriangularData& d);

/// {"algebra": <inline algebra>, "J": [[...]], "J_inv": [[...]]}
Json twist_to_json(const TwistData& t);
/// "algebra" may be inline or a name handed to `resolve` (typically a preset name).
/// J_inv is solved for when absent. Throws SchemaError or AxiomError.
TwistData twist_from_json(const Json& j, const std::function<HopfAlgebra(const std::string&)>& resolve);

Json report_to_json(const QexpReport& r, int conductor);
std::string report_to_text(const QexpReport& r);

/// Parses JSON text, turning parse errors into SchemaError with the byte position.
Json parse_json(const std::string& text, const std::string& what);
std::string read_text_file(const std::string& path);

}  // namespace hopfqexp
