#include "usteen/straighten.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "usteen/checked.hpp"

namespace usteen {

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

bool pair_violates(const Letter& a, const Letter& b, const PrimeContext& ctx) {
    return a.k < checked_add(checked_mul(ctx.p, b.k), b.eps);
}

}  // namespace

std::size_t RewriteCache::KeyHash::operator()(const Key& k) const {
    std::size_t h = std::hash<std::int64_t>{}(k.a_k);
    hash_combine(h, std::hash<std::int64_t>{}(k.b_k));
    hash_combine(h, static_cast<std::size_t>(k.a_eps * 2 + k.b_eps));
    return h;
}

std::optional<Poly> RewriteCache::lookup(const Letter& a, const Letter& b) const {
    Key key{a.eps, a.k, b.eps, b.k};
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end())
        return std::nullopt;
    return it->second;
}

void RewriteCache::store(const Letter& a, const Letter& b, const Poly& value) {
    Key key{a.eps, a.k, b.eps, b.k};
    std::unique_lock lock(mutex_);
    if (map_.emplace(key, value).second && capacity_ > 0) {
        order_.push_back(key);
        while (map_.size() > capacity_) {
            map_.erase(order_.front());
            order_.pop_front();
        }
    }
}

std::size_t RewriteCache::size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
}

std::optional<std::size_t> pick_violation(const Word& w, const Strategy& strategy,
                                          std::mt19937_64& rng, const PrimeContext& ctx) {
    std::vector<std::size_t> violations;
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (pair_violates(w[j], w[j + 1], ctx))
            violations.push_back(j);
    if (violations.empty())
        return std::nullopt;
    switch (strategy.kind) {
        case StrategyKind::Leftmost:
            return violations.front();
        case StrategyKind::Rightmost:
            return violations.back();
        case StrategyKind::SeededRandom:
            return violations[rng() % violations.size()];
    }
    return std::nullopt;
}

std::optional<std::size_t> first_violation(const Word& w, const Strategy& strategy,
                                           const PrimeContext& ctx) {
    std::mt19937_64 rng(strategy.seed);
    return pick_violation(w, strategy, rng, ctx);
}

Poly rewrite_pair(const Letter& a, const Letter& b, const PrimeContext& ctx) {
    if (!pair_violates(a, b, ctx))
        throw AlreadyAdmissible();
    Poly rel;
    if (b.eps == 0) {
        std::int64_t n = checked_sub(checked_sub(checked_mul(ctx.p, b.k), 1), a.k);
        rel = relation_R(a.eps, b.k, n, ctx);
    } else {
        std::int64_t n = checked_sub(checked_mul(ctx.p, b.k), a.k);
        rel = relation_S(a.eps, b.k, n, ctx);
    }
    /* rel = a*b + rest, so a*b = -rest. */
    Poly lead = monomial(Word{a, b}, 1, ctx);
    return scale(ctx.p - 1, sub(rel, lead, ctx), ctx);
}

NormalForm normal_form(const Poly& x, const PrimeContext& ctx, const Strategy& strategy,
                       std::optional<std::int64_t> fuel, RewriteCache* cache) {
    const std::int64_t budget = fuel.value_or(ctx.fuel);
    std::mt19937_64 rng(strategy.seed);

    std::map<Word, std::int64_t, WordLess> work;
    std::set<Word, WordLess> pending;  // words with at least one violation
    for (const auto& [w, c] : x.terms) {
        work[w] = c;
        if (!is_admissible(w, ctx))
            pending.insert(w);
    }

    ReductionStats stats;
    stats.fuel_left = budget;
    stats.peak_terms = static_cast<std::int64_t>(work.size());

    while (!pending.empty()) {
        if (stats.fuel_left == 0)
            throw FuelExhausted(stats);
        Word word = *pending.begin();
        pending.erase(pending.begin());
        auto it = work.find(word);
        std::int64_t coef = it->second;
        work.erase(it);

        std::size_t pos = *pick_violation(word, strategy, rng, ctx);
        const Letter a = word[pos], b = word[pos + 1];

        Poly repl;
        if (cache) {
            if (auto hit = cache->lookup(a, b)) {
                repl = std::move(*hit);
                ++stats.cache_hits;
            } else {
                repl = rewrite_pair(a, b, ctx);
                cache->store(a, b, repl);
            }
        } else {
            repl = rewrite_pair(a, b, ctx);
        }

        for (const auto& [rw, rc] : repl.terms) {
            Word nw;
            nw.reserve(word.size());
            nw.insert(nw.end(), word.begin(), word.begin() + pos);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), word.begin() + pos + 2, word.end());
            std::int64_t nc = mod_p(work[nw] + coef * rc, ctx);
            if (nc == 0) {
                work.erase(nw);
                pending.erase(nw);
            } else {
                work[nw] = nc;
                if (!is_admissible(nw, ctx))
                    pending.insert(nw);
            }
        }

        ++stats.steps;
        --stats.fuel_left;
        stats.peak_terms = std::max(stats.peak_terms, static_cast<std::int64_t>(work.size()));
    }

    NormalForm result;
    result.poly.terms.assign(work.begin(), work.end());
    result.stats = stats;
    return result;
}

bool equal_in_Q(const Poly& x, const Poly& y, const PrimeContext& ctx, RewriteCache* cache) {
    return normal_form(sub(x, y, ctx), ctx, Strategy{}, std::nullopt, cache).poly.is_zero();
}

namespace {

void extend_left(std::vector<Word>& out, Word& acc, std::int64_t remaining, std::int64_t lo,
                 std::int64_t hi, const std::optional<std::vector<int>>& pattern,
                 const PrimeContext& ctx) {
    if (remaining == 0) {
        out.emplace_back(acc.rbegin(), acc.rend());
        return;
    }
    /* acc holds the suffix in reverse; the next letter sits directly left
       of acc.back() and must dominate it. */
    std::int64_t klo = lo;
    if (!acc.empty())
        klo = std::max(lo, checked_add(checked_mul(ctx.p, acc.back().k), acc.back().eps));
    std::size_t position = static_cast<std::size_t>(remaining) - 1;
    for (std::int64_t k = klo; k <= hi; ++k) {
        for (int eps = 0; eps <= 1; ++eps) {
            if (pattern && (*pattern)[position] != eps)
                continue;
            acc.push_back(make_letter(eps, k, ctx));
            extend_left(out, acc, remaining - 1, lo, hi, pattern, ctx);
            acc.pop_back();
        }
    }
}

}  // namespace

std::vector<Word> enumerate_admissible(std::int64_t len, std::int64_t lo, std::int64_t hi,
                                       const std::optional<std::vector<int>>& eps_pattern,
                                       const PrimeContext& ctx) {
    if (len < 0)
        throw NegativeInput(len);
    if (lo > hi)
        throw WrongLength("empty index window");
    if (eps_pattern && static_cast<std::int64_t>(eps_pattern->size()) != len)
        throw WrongLength("epsilon pattern length does not match word length");
    std::vector<Word> out;
    Word acc;
    extend_left(out, acc, len, lo, hi, eps_pattern, ctx);
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

}  // namespace usteen
