#pragma once

#include <string>

#include "grhopf/presentation.hpp"

namespace grhopf {

/// Parse the line-oriented presentation grammar:
///
///   algebra <ident> over GF(<p>[,<n>]) | QQ
///   truncate <D>
///   gen <ident> deg <nonneg-int>
///   rel <ident>^<int> = <polynomial in the same ident>
///   counit <ident> = <scalar>
///   comul <ident> = <term> (+ <term>)*    term = <monomial> (x) <monomial>
///   antipode <ident> = <polynomial>
///
/// '#' starts a comment. Scalars are integers (reduced mod p) or fractions
/// a/b over QQ. Errors carry line and column positions.
Presentation parse_presentation(const std::string& text);

/// Canonical printout; print-then-parse is stable.
std::string print_presentation(const Presentation& p);

}  // namespace grhopf
