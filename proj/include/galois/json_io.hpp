#pragma once

#include <string>

#include "json.hpp"

#include "galois/families.hpp"
#include "galois/galois_space.hpp"
#include "galois/moebius.hpp"
#include "galois/oracle.hpp"

/// JSON interchange. Rationals travel as "p/q" strings in lowest terms,
/// cyclotomic elements as {"n": n, "coords": ["p/q", ...]} in the power basis
/// of Q(zeta_n). Every parser throws InputError on malformed input.
namespace galois::io {

using Json = nlohmann::json;

Json to_json(const Number& x);
Number number_from_json(const Json& j);

Json to_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"kind": "cyclic|dihedral|tetrahedral|octahedral|icosahedral", "m": int?, "theta": [[..],[..]]?}
Json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);

/// {"degree": d, "basis": [form, ...]}
Json to_json(const LinearSystem& v);
LinearSystem linear_system_from_json(const Json& j);

/// {"d": d, "pencil": [[...], [...]]}
Json to_json(const ProjectionCenter& c);
ProjectionCenter center_from_json(const Json& j);

/// {"indices": [[i, j], ...], "minors": [...]}, pairs i < j in lexicographic order.
Json to_json(const PluckerPoint& p);

Json to_json(const InvariantPair& pair);
Json to_json(const OracleReport& r);
Json to_json(const FamilyRecord& r);
Json to_json(const IntermediateReport& r);

/// Parses `text` as JSON; if that fails and it names a readable file, parses
/// the file instead.
Json parse_inline_or_file(const std::string& text);

}  // namespace galois::io
