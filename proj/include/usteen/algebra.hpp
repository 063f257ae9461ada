#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "usteen/modp.hpp"

namespace usteen {

/* One generator z_{eps,k}. */
struct Letter {
    int eps;
    std::int64_t k;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/* Checks eps in {0,1} (BadEpsilon) and |k| <= ctx.index_bound (IndexOverflow). */
Letter make_letter(std::int64_t eps, std::int64_t k, const PrimeContext& ctx);

/* A monic monomial; the empty word is the unit. */
using Word = std::vector<Letter>;

/* Total order used for printing, serialization and term storage: shorter
   words first; equal lengths compare letterwise by (eps, k), both
   ascending, weighted from the rightmost letter. */
std::strong_ordering canonical_compare(const Word& a, const Word& b);

inline bool word_less(const Word& a, const Word& b) {
    return canonical_compare(a, b) == std::strong_ordering::less;
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

/* i_j >= p * i_{j+1} + eps_{j+1} at every adjacent position; empty and
   single-letter words are admissible. */
bool is_admissible(const Word& w, const PrimeContext& ctx);

inline std::int64_t length(const Word& w) {
    return static_cast<std::int64_t>(w.size());
}

/* Sum over letters of 2 * k * (p-1) + eps. */
std::int64_t internal_degree(const Word& w, const PrimeContext& ctx);

/* Element of the free algebra (or of the quotient, depending on use):
   terms sorted canonically, coefficients normalized to {1, ..., p-1},
   the zero polynomial stores no terms. */
struct Poly {
    std::vector<std::pair<Word, std::int64_t>> terms;

    friend bool operator==(const Poly&, const Poly&) = default;
    bool is_zero() const { return terms.empty(); }
};

Poly poly_zero();
Poly poly_one(const PrimeContext& ctx);
Poly monomial(Word w, std::int64_t coef, const PrimeContext& ctx);

/* Sorts, combines like words mod p and drops zeros. */
Poly poly_from_terms(std::vector<std::pair<Word, std::int64_t>> raw, const PrimeContext& ctx);

Poly add(const Poly& a, const Poly& b, const PrimeContext& ctx);
Poly sub(const Poly& a, const Poly& b, const PrimeContext& ctx);
Poly scale(std::int64_t c, const Poly& a, const PrimeContext& ctx);
/* Word-by-word concatenation, distributed; no rewriting. */
Poly mul(const Poly& a, const Poly& b, const PrimeContext& ctx);

std::int64_t coefficient(const Poly& a, const Word& w);

/* Common length of all terms; 0 for the zero polynomial and scalars.
   Throws Inhomogeneous when term lengths disagree. */
std::int64_t length(const Poly& a);

enum class RelFamily : int { R, S };

struct RelationId {
    RelFamily family;
    int eps;
    std::int64_t k;
    std::int64_t n;
    friend auto operator<=>(const RelationId&, const RelationId&) = default;
};

std::string to_string(const RelationId& id);

/* The two generating families of relations.  The summation index runs over
   the exact support of the binomial coefficients, which is finite because
   the top argument decreases while the bottom grows. */
Poly relation_R(std::int64_t eps, std::int64_t k, std::int64_t n, const PrimeContext& ctx);
Poly relation_S(std::int64_t eps, std::int64_t k, std::int64_t n, const PrimeContext& ctx);
Poly relation(const RelationId& id, const PrimeContext& ctx);

/* All relations in which the given 2-letter word occurs with nonzero
   coefficient, found by solving the index equations of both families.
   Throws WrongLength unless w has exactly two letters. */
std::vector<RelationId> relations_containing(const Word& w, const PrimeContext& ctx);

}  // namespace usteen
