#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "permfam/families.hpp"
#include "permfam/field.hpp"
#include "permfam/mobius.hpp"
#include "permfam/poly.hpp"

namespace permfam {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "p^k" -> (p, k).
std::pair<std::uint32_t, unsigned> parse_field_spec(std::string_view s);
std::string format_field_spec(const Field& f);

/// Decimal integer encoding, "0", or "g^j" for generator^j (j may be
/// negative).
Elem parse_elem(const Field& f, std::string_view s);
std::string format_elem(Elem x);
/// "g^j" with 0 <= j < q^2-1, or "0". Falls back to the decimal encoding
/// when the field has no log table.
std::string pretty_elem(const Field& f, Elem x);

/// Comma-separated little-endian coefficients, e.g. "v,1" for X+v. An empty
/// string is the zero polynomial.
Poly parse_poly(const Field& f, std::string_view s);
std::string format_poly(const Poly& b);

/// "alpha,beta;gamma,delta".
Mobius parse_mobius(const Field& f, std::string_view s);
std::string format_mobius(const Mobius& m);

/// "family=thm1 p=2 k=5 r=44 n=11 u=<enc> v=<enc> a=<enc> b=<enc>". For
/// thm2 the u field is omitted. Parsing builds the named field, so element
/// fields may also use the "g^j" form.
std::string format_params(const Field& f, const FamilyParams& params);
struct ParsedParams {
  Field field;
  FamilyParams params;
};
ParsedParams parse_params(std::string_view s,
                          std::uint64_t max_elems = kDefaultMaxElems);

}  // namespace permfam
