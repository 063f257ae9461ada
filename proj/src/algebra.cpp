#include "usteen/algebra.hpp"

#include <algorithm>

#include "usteen/checked.hpp"

namespace usteen {

Letter make_letter(std::int64_t eps, std::int64_t k, const PrimeContext& ctx) {
    if (eps != 0 && eps != 1)
        throw BadEpsilon(eps);
    if (k > ctx.index_bound || k < -ctx.index_bound)
        throw IndexOverflow("letter index " + std::to_string(k) + " exceeds bound");
    return Letter{static_cast<int>(eps), k};
}

std::strong_ordering canonical_compare(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() <=> b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (auto c = a[i] <=> b[i]; c != std::strong_ordering::equal)
            return c;
    }
    return std::strong_ordering::equal;
}

bool is_admissible(const Word& w, const PrimeContext& ctx) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        std::int64_t bound = checked_add(checked_mul(ctx.p, w[j + 1].k), w[j + 1].eps);
        if (w[j].k < bound)
            return false;
    }
    return true;
}

std::int64_t internal_degree(const Word& w, const PrimeContext& ctx) {
    std::int64_t deg = 0;
    for (const Letter& l : w)
        deg = checked_add(deg, checked_add(checked_mul(2 * l.k, ctx.p - 1), l.eps));
    return deg;
}

Poly poly_zero() {
    return Poly{};
}

Poly poly_one(const PrimeContext& ctx) {
    return monomial(Word{}, 1, ctx);
}

Poly monomial(Word w, std::int64_t coef, const PrimeContext& ctx) {
    Poly r;
    coef = mod_p(coef, ctx);
    if (coef != 0)
        r.terms.emplace_back(std::move(w), coef);
    return r;
}

Poly poly_from_terms(std::vector<std::pair<Word, std::int64_t>> raw, const PrimeContext& ctx) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& x, const auto& y) { return word_less(x.first, y.first); });
    Poly r;
    for (auto& [w, c] : raw) {
        if (!r.terms.empty() && r.terms.back().first == w) {
            r.terms.back().second = mod_p(r.terms.back().second + mod_p(c, ctx), ctx);
            if (r.terms.back().second == 0)
                r.terms.pop_back();
        } else {
            std::int64_t cc = mod_p(c, ctx);
            if (cc != 0)
                r.terms.emplace_back(std::move(w), cc);
        }
    }
    return r;
}

Poly add(const Poly& a, const Poly& b, const PrimeContext& ctx) {
    Poly r;
    auto i = a.terms.begin(), j = b.terms.begin();
    while (i != a.terms.end() && j != b.terms.end()) {
        auto c = canonical_compare(i->first, j->first);
        if (c == std::strong_ordering::less) {
            r.terms.push_back(*i++);
        } else if (c == std::strong_ordering::greater) {
            r.terms.push_back(*j++);
        } else {
            std::int64_t s = mod_p(i->second + j->second, ctx);
            if (s != 0)
                r.terms.emplace_back(i->first, s);
            ++i;
            ++j;
        }
    }
    r.terms.insert(r.terms.end(), i, a.terms.end());
    r.terms.insert(r.terms.end(), j, b.terms.end());
    return r;
}

Poly scale(std::int64_t c, const Poly& a, const PrimeContext& ctx) {
    c = mod_p(c, ctx);
    Poly r;
    if (c == 0)
        return r;
    for (const auto& [w, tc] : a.terms) {
        std::int64_t s = mod_p(tc * c, ctx);
        if (s != 0)
            r.terms.emplace_back(w, s);
    }
    return r;
}

Poly sub(const Poly& a, const Poly& b, const PrimeContext& ctx) {
    return add(a, scale(ctx.p - 1, b, ctx), ctx);
}

Poly mul(const Poly& a, const Poly& b, const PrimeContext& ctx) {
    std::vector<std::pair<Word, std::int64_t>> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& [wa, ca] : a.terms) {
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            raw.emplace_back(std::move(w), mod_p(ca * cb, ctx));
        }
    }
    return poly_from_terms(std::move(raw), ctx);
}

std::int64_t coefficient(const Poly& a, const Word& w) {
    auto it = std::lower_bound(a.terms.begin(), a.terms.end(), w,
                               [](const auto& t, const Word& key) { return word_less(t.first, key); });
    if (it != a.terms.end() && it->first == w)
        return it->second;
    return 0;
}

std::int64_t length(const Poly& a) {
    if (a.terms.empty())
        return 0;
    std::int64_t len = length(a.terms.front().first);
    for (const auto& [w, c] : a.terms)
        if (length(w) != len)
            throw Inhomogeneous();
    return len;
}

std::string to_string(const RelationId& id) {
    return std::string(id.family == RelFamily::R ? "R" : "S") + "(" + std::to_string(id.eps) +
           "," + std::to_string(id.k) + "," + std::to_string(id.n) + ")";
}

Poly relation_R(std::int64_t eps, std::int64_t k, std::int64_t n, const PrimeContext& ctx) {
    if (n < 0)
        throw NegativeN(n);
    std::vector<std::pair<Word, std::int64_t>> raw;
    std::int64_t lead = checked_sub(checked_sub(checked_mul(ctx.p, k), 1), n);
    raw.emplace_back(Word{make_letter(eps, lead, ctx), make_letter(0, k, ctx)}, 1);
    for (std::int64_t j = 0;; ++j) {
        std::int64_t top = checked_sub(checked_mul(ctx.p - 1, checked_sub(n, j)), 1);
        if (top < j)
            break;
        std::int64_t c = binom_ext(top, j, ctx);
        if (c == 0)
            continue;
        std::int64_t sign = (j % 2 == 0) ? 1 : -1;
        raw.emplace_back(Word{make_letter(eps, checked_sub(checked_sub(checked_mul(ctx.p, k), 1), j), ctx),
                              make_letter(0, checked_add(checked_sub(k, n), j), ctx)},
                         sign * c);
    }
    return poly_from_terms(std::move(raw), ctx);
}

Poly relation_S(std::int64_t eps, std::int64_t k, std::int64_t n, const PrimeContext& ctx) {
    if (n < 0)
        throw NegativeN(n);
    std::vector<std::pair<Word, std::int64_t>> raw;
    std::int64_t lead = checked_sub(checked_mul(ctx.p, k), n);
    raw.emplace_back(Word{make_letter(eps, lead, ctx), make_letter(1, k, ctx)}, 1);
    for (std::int64_t j = 0;; ++j) {
        std::int64_t top = checked_sub(checked_mul(ctx.p - 1, checked_sub(n, j)), 1);
        if (top < j)
            break;
        std::int64_t c = binom_ext(top, j, ctx);
        if (c == 0)
            continue;
        std::int64_t sign = (j % 2 == 0) ? -1 : 1;
        raw.emplace_back(Word{make_letter(eps, checked_sub(checked_mul(ctx.p, k), j), ctx),
                              make_letter(1, checked_add(checked_sub(k, n), j), ctx)},
                         sign * c);
    }
    if (eps == 0) {
        for (std::int64_t j = 0;; ++j) {
            std::int64_t top = checked_mul(ctx.p - 1, checked_sub(n, j));
            if (top < j)
                break;
            std::int64_t c = binom_ext(top, j, ctx);
            if (c == 0)
                continue;
            std::int64_t sign = (j % 2 == 0) ? -1 : 1;
            raw.emplace_back(Word{make_letter(1, checked_sub(checked_mul(ctx.p, k), j), ctx),
                                  make_letter(0, checked_add(checked_sub(k, n), j), ctx)},
                             sign * c);
        }
    }
    return poly_from_terms(std::move(raw), ctx);
}

Poly relation(const RelationId& id, const PrimeContext& ctx) {
    return id.family == RelFamily::R ? relation_R(id.eps, id.k, id.n, ctx)
                                     : relation_S(id.eps, id.k, id.n, ctx);
}

std::vector<RelationId> relations_containing(const Word& w, const PrimeContext& ctx) {
    if (w.size() != 2)
        throw WrongLength("relations_containing needs a word of length 2, got length " +
                          std::to_string(w.size()));
    const std::int64_t p = ctx.p;
    const std::int64_t a = w[0].k, c = w[1].k;
    const int e1 = w[0].eps, e2 = w[1].eps;
    std::vector<RelationId> out;

    if (e2 == 0) {
        /* Leading term of R(e1, k, n): k = c and n = pc - 1 - a. */
        std::int64_t n = checked_sub(checked_sub(checked_mul(p, c), 1), a);
        if (n >= 0)
            out.push_back({RelFamily::R, e1, c, n});
        /* Summand of R(e1, k, n): j = pk - 1 - a, n = (p+1)k - a - c - 1.
           The binomial support bounds k to a finite window. */
        std::int64_t klo = ceil_div(a + 1, p);
        std::int64_t khi = checked_sub(a, checked_mul(p - 1, c));
        for (std::int64_t k = klo; k <= khi; ++k) {
            std::int64_t j = checked_sub(checked_sub(checked_mul(p, k), 1), a);
            std::int64_t nn = checked_sub(checked_sub(checked_mul(p + 1, k), checked_add(a, c)), 1);
            if (j < 0 || nn < 0)
                continue;
            std::int64_t top = checked_sub(checked_mul(p - 1, checked_sub(k, c)), 1);
            if (binom_ext(top, j, ctx) != 0)
                out.push_back({RelFamily::R, e1, k, nn});
        }
        /* Second sum of S(0, k, n): j = pk - a, n = (p+1)k - a - c. */
        if (e1 == 1) {
            klo = ceil_div(a, p);
            khi = checked_sub(a, checked_mul(p - 1, c));
            for (std::int64_t k = klo; k <= khi; ++k) {
                std::int64_t j = checked_sub(checked_mul(p, k), a);
                std::int64_t nn = checked_sub(checked_mul(p + 1, k), checked_add(a, c));
                if (j < 0 || nn < 0)
                    continue;
                std::int64_t top = checked_mul(p - 1, checked_sub(k, c));
                if (binom_ext(top, j, ctx) != 0)
                    out.push_back({RelFamily::S, 0, k, nn});
            }
        }
    } else {
        /* Leading term of S(e1, k, n): k = c and n = pc - a. */
        std::int64_t n = checked_sub(checked_mul(p, c), a);
        if (n >= 0)
            out.push_back({RelFamily::S, e1, c, n});
        /* First sum of S(e1, k, n): j = pk - a, n = (p+1)k - a - c. */
        std::int64_t klo = ceil_div(a, p);
        std::int64_t khi = checked_sub(checked_sub(a, checked_mul(p - 1, c)), 1);
        for (std::int64_t k = klo; k <= khi; ++k) {
            std::int64_t j = checked_sub(checked_mul(p, k), a);
            std::int64_t nn = checked_sub(checked_mul(p + 1, k), checked_add(a, c));
            if (j < 0 || nn < 0)
                continue;
            std::int64_t top = checked_sub(checked_mul(p - 1, checked_sub(k, c)), 1);
            if (binom_ext(top, j, ctx) != 0)
                out.push_back({RelFamily::S, e1, k, nn});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace usteen
