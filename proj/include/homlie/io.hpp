#pragma once

#include <string>

#include "homlie/ado.hpp"
#include "homlie/hom_algebra.hpp"
#include "homlie/representation.hpp"

namespace homlie {

/// Line-oriented algebra file. `#` starts a comment, blank lines are
/// skipped, declarations are
///   dim <d>
///   basis <name>+              (defaults to e1..ed)
///   flavor lie|assoc           (defaults to lie; must precede brackets)
///   bracket <bi> <bj> = <coeff> <bk> [+ <coeff> <bk>]*
///   twist <bi> = <coeff> <bj> [+ ...]*
/// with coefficients integers or p/q. Undeclared products and twist
/// columns are zero. Lie flavor completes brackets antisymmetrically;
/// redeclaring a pair is rejected, inconsistently so with
/// Err::AntisymmetryConflict.
HomAlgebra parse_algebra(const std::string& text);
std::string serialize(const HomAlgebra& a);

/// Representation file: an algebra block, either
///   algebra inline ... end algebra      (algebra declarations between)
///   algebra <path>                      (resolved against base_dir)
/// then `module_dim <m>` followed by matrix rows (0-based, zero rows may
/// be omitted, each row lists all m coefficients)
///   action <bi> row <r> = <coeff>*
///   beta row <r> = <coeff>*
HomRepresentation parse_representation(const std::string& text,
                                       const std::string& base_dir = "");
std::string serialize(const HomRepresentation& rho);

/// Certificate file: the representation payload plus
///   verdict faithful|nilpotent|multiplicative|nondegenerate = true|false
///   nilindex <n>
///   trace <free text, kept verbatim>
/// All four verdicts and the nilindex are required.
AdoCertificate parse_certificate(const std::string& text,
                                 const std::string& base_dir = "");
std::string serialize(const AdoCertificate& cert);

/// Plain matrix file: one row per line of whitespace-separated rationals,
/// `#` comments allowed, all rows equally long.
Mat parse_matrix(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace homlie
