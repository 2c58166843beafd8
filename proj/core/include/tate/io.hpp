#pragma once

/**
 * @file io.hpp
 * @brief JSON forms of modules, complexes and tables.
 *
 * Every top-level document carries a "schema" string.  Coefficients are
 * written in [0, p) and read as arbitrary integers reduced mod p.  Exterior
 * monomials are lists of global variable indices, polynomial monomials are
 * exponent vectors in the same numbering.
 */

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "tate/beilinson.hpp"
#include "tate/cohomology.hpp"

namespace tate {

using Json = nlohmann::json;

inline constexpr const char* kModuleSchema = "tate.module/1";
inline constexpr const char* kComplexSchema = "tate.complex/1";
inline constexpr const char* kCohomologySchema = "tate.cohomology/1";
inline constexpr const char* kBettiSchema = "tate.betti/1";
inline constexpr const char* kSModuleComplexSchema = "tate.smodule-complex/1";

/// Malformed or inconsistent input document.
class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Json multidegreeToJson(const Multidegree& d);
Multidegree multidegreeFromJson(const Json& j);

Json polynomialToJson(const SPolynomial& p);
SPolynomial polynomialFromJson(const Json& j, const ProductSpace& space);

Json exteriorToJson(const ExteriorElement& e, const ProductSpace& space);
ExteriorElement exteriorFromJson(const Json& j, const ProductSpace& space);

/**
 * {"schema", "dims", "prime"?, "generators": [degree...],
 *  "relations": [{"degree", "entries": [{"row", "poly"}]}]}
 *
 * The prime comes from primeOverride, else the document, else the default.
 */
Json moduleToJson(const PresentedModule& m);
PresentedModule moduleFromJson(const Json& j, std::optional<std::uint32_t> primeOverride = {});

Json complexToJson(const LabeledFreeComplex& c);
LabeledFreeComplex complexFromJson(const Json& j);

Json bettiToJson(const BettiTable& b);

Json cohomologyToJson(const CohomologyTable& t);
CohomologyTable cohomologyFromJson(const Json& j);

Json smoduleComplexToJson(const SModuleComplex& c);
SModuleComplex smoduleComplexFromJson(const Json& j);

/// Parses text, turning parse failures into FormatError.
Json parseJson(const std::string& text);

} // namespace tate
