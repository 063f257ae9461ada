#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <random>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "usteen/algebra.hpp"

namespace usteen {

enum class StrategyKind { Leftmost, Rightmost, SeededRandom };

/* Picks which violating pair to rewrite.  The choice never changes the
   final normal form (the admissible basis makes the procedure confluent);
   it exists so that confluence can be tested. */
struct Strategy {
    StrategyKind kind = StrategyKind::Leftmost;
    std::uint64_t seed = 0;

    static Strategy leftmost() { return {StrategyKind::Leftmost, 0}; }
    static Strategy rightmost() { return {StrategyKind::Rightmost, 0}; }
    static Strategy seeded_random(std::uint64_t seed) { return {StrategyKind::SeededRandom, seed}; }
};

struct ReductionStats {
    std::int64_t steps = 0;
    std::int64_t peak_terms = 0;
    std::int64_t cache_hits = 0;
    std::int64_t fuel_left = 0;
};

/* Raised when the rewrite budget runs out before an admissible form is
   reached; carries the accounting so the failure is observable. */
struct FuelExhausted : Error {
    ReductionStats stats;
    explicit FuelExhausted(ReductionStats s)
        : Error("rewrite fuel exhausted after " + std::to_string(s.steps) + " steps"), stats(s) {}
};

/* Memoizes rewrite_pair results keyed by the two letters.  Reads take a
   shared lock; a concurrent-miss may recompute the same value, which is
   harmless because entries are immutable once stored.  capacity 0 means
   unbounded, otherwise least-recently-inserted entries are evicted. */
class RewriteCache {
public:
    explicit RewriteCache(std::size_t capacity = 0) : capacity_(capacity) {}

    std::optional<Poly> lookup(const Letter& a, const Letter& b) const;
    void store(const Letter& a, const Letter& b, const Poly& value);
    std::size_t size() const;

private:
    struct Key {
        int a_eps;
        std::int64_t a_k;
        int b_eps;
        std::int64_t b_k;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    std::size_t capacity_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Poly, KeyHash> map_;
    std::list<Key> order_;  // insertion order, used only when capped
};

/* Position of a violating adjacent pair chosen per strategy, or nullopt
   when the word is admissible.  The random strategy draws from a fresh
   generator seeded with strategy.seed. */
std::optional<std::size_t> first_violation(const Word& w, const Strategy& strategy,
                                           const PrimeContext& ctx);
std::optional<std::size_t> pick_violation(const Word& w, const Strategy& strategy,
                                          std::mt19937_64& rng, const PrimeContext& ctx);

/* Expresses the non-admissible pair a*b through the matching relation:
   family R when b.eps = 0, family S when b.eps = 1, solved for the leading
   term.  The result never contains a*b itself.  Throws AlreadyAdmissible
   when there is nothing to rewrite. */
Poly rewrite_pair(const Letter& a, const Letter& b, const PrimeContext& ctx);

struct NormalForm {
    Poly poly;
    ReductionStats stats;
};

/* Rewrites one violating pair at a time (the canonically first offending
   term, position per strategy) until every word is admissible, combining
   like terms mod p after each step.  Spends one unit of fuel per rewrite;
   throws FuelExhausted when the budget (fuel override or ctx.fuel) runs
   out. */
NormalForm normal_form(const Poly& x, const PrimeContext& ctx, const Strategy& strategy = {},
                       std::optional<std::int64_t> fuel = std::nullopt,
                       RewriteCache* cache = nullptr);

/* Equality in the quotient algebra: normal_form(x - y) == 0. */
bool equal_in_Q(const Poly& x, const Poly& y, const PrimeContext& ctx,
                RewriteCache* cache = nullptr);

/* All admissible words of the given length with letter indices inside
   [lo, hi], optionally with a fixed epsilon pattern (leftmost letter
   first), in canonical order. */
std::vector<Word> enumerate_admissible(std::int64_t len, std::int64_t lo, std::int64_t hi,
                                       const std::optional<std::vector<int>>& eps_pattern,
                                       const PrimeContext& ctx);

}  // namespace usteen
