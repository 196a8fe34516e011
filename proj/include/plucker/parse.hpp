#ifndef PLUCKER_PARSE_HPP
#define PLUCKER_PARSE_HPP

#include "plucker/poly.hpp"

#include <string_view>

namespace plucker {

/// Parses ASCII polynomial text over the ring's variables.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT ['/' INT] | VAR ['^' UINT] | '(' expr ')' ['^' UINT] | '-' factor
///
/// Whitespace is ignored; implicit multiplication is rejected. The printer
/// (Poly::str) emits this grammar, so parse(print(p)) == p.
Poly parse_polynomial(std::string_view text, const RingPtr& ring);

/// Convenience overload building a GrevLex ring over `vars`.
Poly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

} // namespace plucker

#endif
