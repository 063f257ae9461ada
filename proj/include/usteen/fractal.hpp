#pragma once

#include <cstdint>
#include <vector>

#include "usteen/straighten.hpp"

namespace usteen {

/* Letterwise index-scaling endomorphisms of the free algebra.
   Phi:    k -> pk - 1 on eps = 0 letters only.
   Psi:    k -> pk     on eps = 1 letters only.
   Lambda: k -> pk - 1 on every letter.
   Theta:  k -> pk     on every letter. */
enum class MapName { Phi, Psi, Lambda, Theta };

struct SubspaceId {
    enum class Kind { Q0, Q1, V };
    Kind kind;
    std::int64_t s;
};

/* Applies the named map `power` times (power >= 1), multiplicatively over
   words and linearly over terms.  Throws DomainViolation when a letter
   falls outside the map's domain. */
Word map_word(MapName name, const Word& w, std::int64_t power, const PrimeContext& ctx);
Poly apply_map(MapName name, const Poly& x, std::int64_t power, const PrimeContext& ctx);

/* Label-shape membership tests.
   Q0(s): every letter has eps = 0 and k = -alpha(s) mod p^s.
   Q1(s): every letter has eps = 1 and k = 0 mod p^s.
   V(s):  length >= 2, first letter eps = 1, the rest eps = 0, all indices
          = -alpha(s) mod p^s. */
bool in_subspace(const Word& w, const SubspaceId& id, const PrimeContext& ctx);

/* The claimed scaled forms of R(eps, p^s k - alpha_s, p^s n) and
   S(1, p^s k, p^s n), built directly with A(n, j) coefficients. */
Poly reduced_relation_R(std::int64_t eps, std::int64_t k, std::int64_t n, std::int64_t s,
                        const PrimeContext& ctx);
Poly reduced_relation_S(std::int64_t k, std::int64_t n, std::int64_t s, const PrimeContext& ctx);

/* Term-by-term equality of the scaled relation with its claimed reduced
   form (free-algebra identity, no rewriting involved). */
bool verify_reduction_R(std::int64_t eps, std::int64_t k, std::int64_t n, std::int64_t s,
                        const PrimeContext& ctx);
bool verify_reduction_S(std::int64_t k, std::int64_t n, std::int64_t s, const PrimeContext& ctx);

/* Phi^s(R(0,k,n)) == R(0, p^s k - alpha_s, p^s n) and
   Psi^s(S(1,k,n)) == S(1, p^s k, p^s n), exactly. */
bool verify_map_relation(MapName name, std::int64_t k, std::int64_t n, std::int64_t s,
                         const PrimeContext& ctx);

/* normal_form(v * q) with precondition checks (v in V(s), q in Q0(s)) and
   an eager closure check on the result; a result word escaping V(s) would
   falsify the module structure and raises ClosureViolation. */
Poly right_action(const Poly& v, const Poly& q, std::int64_t s, const PrimeContext& ctx,
                  RewriteCache* cache = nullptr);

/* Morphism law: Lambda(v.q) == Lambda(v).Phi(q) in the quotient, where the
   left action lives at stage s and the right at stage s + 1. */
bool verify_K_morphism(const Poly& v, const Poly& q, std::int64_t s, const PrimeContext& ctx,
                       RewriteCache* cache = nullptr);

/* Theta(R(0,0,0)) is a single word; every relation containing that word is
   enumerated and compared, establishing that the image is not a relation. */
struct ThetaReport {
    Poly image;
    std::vector<RelationId> witnesses;
    bool member;
};
ThetaReport check_theta_obstruction(const PrimeContext& ctx);

/* Lambda(S(1,0,0)) is a single admissible word; relations over the scan
   window all contain a non-admissible summand, so the image cannot be one
   of them. */
struct LambdaReport {
    Poly image;
    bool single_admissible;
    bool scan_all_nonadmissible;
    std::int64_t scan_kmax;
    std::int64_t scan_nmax;
    bool member;
};
LambdaReport check_lambda_S00(const PrimeContext& ctx, std::int64_t scan_kmax = 6,
                              std::int64_t scan_nmax = 12);

}  // namespace usteen
