#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "usteen/algebra.hpp"

namespace usteen {

/* Text grammar (whitespace-insensitive):
     poly   := term (('+'|'-') term)* | '0'
     term   := [coef '*'] factor ('*' factor)* | coef
     factor := 'z' '(' eps ',' int ')' | '1'
     coef   := decimal integer (reduced mod p)
   '-' negates the following term; coefficients may be written negative but
   are normalized on input and never printed negative. */
Poly parse_poly(std::string_view src, const PrimeContext& ctx);

/* Canonical printer: terms in canonical word order, unit coefficients
   omitted, the zero polynomial prints "0".  parse_poly inverts it. */
std::string print_poly(const Poly& x, const PrimeContext& ctx);

/* A single word as a factor list; the empty word prints "1". */
std::string print_word(const Word& w);

/* Stable JSON forms.  A polynomial encodes as
   {"p": int, "terms": [{"coef": int, "word": [[eps,k], ...]}, ...]}
   with terms in canonical order. */
std::string encode_json(const Poly& x, const PrimeContext& ctx);
std::string encode_json(const RelationId& id);
std::string encode_json(const std::vector<RelationId>& ids);
std::string encode_json(const std::vector<Word>& words, const PrimeContext& ctx);

Poly decode_poly_json(std::string_view text, const PrimeContext& ctx);

}  // namespace usteen
