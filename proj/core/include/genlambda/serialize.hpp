#ifndef GENLAMBDA_SERIALIZE_HPP
#define GENLAMBDA_SERIALIZE_HPP

#include <json.hpp>

#include "genlambda/cm.hpp"

namespace genlambda {

// Key order is fixed everywhere so identical inputs produce byte-identical
// files.
using Json = nlohmann::ordered_json;

// CycNum <-> array of phi(N) "num/den" strings, lowest terms, den > 0;
// the level travels with the enclosing object.
Json cyc_to_json(const CycNum& a);
CycNum cyc_from_json(int level, const Json& j);

// {"level": N, "order": o, "precision": P, "coeffs": [[...], ...]}
Json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// {"level","k","degree","coeffs":[{"x_power","j_power","value"}...],"checks":{...}}
Json psi_to_json(const PsiPoly& psi);
PsiPoly psi_from_json(const Json& j);

Json integrality_to_json(const IntegralityReport& rep);
Json remark34_to_json(const Remark34Report& rep);
Json cm_certificate_to_json(const CMCertificate& cert);
Json hpcomplex_to_json(const HPComplex& z, int digits);

std::string dump_json(const Json& j);  // canonical dump: 2-space indent + newline
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace genlambda

#endif
