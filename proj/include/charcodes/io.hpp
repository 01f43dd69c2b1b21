#pragma once

#include <string>
#include <string_view>

#include "charcodes/codes.hpp"
#include "charcodes/pseudo.hpp"

namespace charcodes {

/// `p=<int> b=<int> mod=<c_0,c_1,...,c_b>`, coefficients low-to-high.
std::string format_field_spec(const FieldCtx& f);
FieldRef parse_field_spec(std::string_view text);

/// Comma-separated canonical element indices, low-degree first; `0` for zero.
std::string format_poly(const Poly& a);
Poly parse_poly(const FieldRef& f, std::string_view text);

std::string to_string(Alphabet a);
Alphabet parse_alphabet(std::string_view text);

/// Three lines: `field: <spec>`, `alphabet: qr|f2|fq`, then q space-separated
/// canonical element indices.
std::string format_word(const ReceivedWord& w);
ReceivedWord parse_word(std::string_view text);

/// One poly line per base-Lambda digit, low digit first, blank-line terminated.
std::string format_pseudopoly(const PseudoPoly& p);
PseudoPoly parse_pseudopoly(const FieldRef& f, std::string_view text);

}  // namespace charcodes
