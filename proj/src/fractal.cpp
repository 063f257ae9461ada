#include "usteen/fractal.hpp"

#include <algorithm>

#include "usteen/checked.hpp"

namespace usteen {

namespace {

Letter map_letter(MapName name, const Letter& l, const PrimeContext& ctx) {
    switch (name) {
        case MapName::Phi:
            if (l.eps != 0)
                throw DomainViolation("Phi is defined on eps=0 letters only");
            return make_letter(0, checked_sub(checked_mul(ctx.p, l.k), 1), ctx);
        case MapName::Psi:
            if (l.eps != 1)
                throw DomainViolation("Psi is defined on eps=1 letters only");
            return make_letter(1, checked_mul(ctx.p, l.k), ctx);
        case MapName::Lambda:
            return make_letter(l.eps, checked_sub(checked_mul(ctx.p, l.k), 1), ctx);
        case MapName::Theta:
            return make_letter(l.eps, checked_mul(ctx.p, l.k), ctx);
    }
    throw DomainViolation("unknown map");
}

std::int64_t mod_pos(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Word map_word(MapName name, const Word& w, std::int64_t power, const PrimeContext& ctx) {
    if (power < 1)
        throw NegativeInput(power);
    Word out = w;
    for (std::int64_t i = 0; i < power; ++i)
        for (Letter& l : out)
            l = map_letter(name, l, ctx);
    return out;
}

Poly apply_map(MapName name, const Poly& x, std::int64_t power, const PrimeContext& ctx) {
    std::vector<std::pair<Word, std::int64_t>> raw;
    raw.reserve(x.terms.size());
    for (const auto& [w, c] : x.terms)
        raw.emplace_back(map_word(name, w, power, ctx), c);
    return poly_from_terms(std::move(raw), ctx);
}

bool in_subspace(const Word& w, const SubspaceId& id, const PrimeContext& ctx) {
    const std::int64_t ps = checked_pow(ctx.p, id.s);
    const std::int64_t target = mod_pos(-alpha(id.s, ctx), ps);
    switch (id.kind) {
        case SubspaceId::Kind::Q0:
            return std::all_of(w.begin(), w.end(), [&](const Letter& l) {
                return l.eps == 0 && mod_pos(l.k, ps) == target;
            });
        case SubspaceId::Kind::Q1:
            return std::all_of(w.begin(), w.end(), [&](const Letter& l) {
                return l.eps == 1 && mod_pos(l.k, ps) == 0;
            });
        case SubspaceId::Kind::V:
            if (w.size() < 2 || w.front().eps != 1)
                return false;
            for (std::size_t i = 1; i < w.size(); ++i)
                if (w[i].eps != 0)
                    return false;
            return std::all_of(w.begin(), w.end(),
                               [&](const Letter& l) { return mod_pos(l.k, ps) == target; });
    }
    return false;
}

Poly reduced_relation_R(std::int64_t eps, std::int64_t k, std::int64_t n, std::int64_t s,
                        const PrimeContext& ctx) {
    if (n < 0)
        throw NegativeN(n);
    const std::int64_t ps = checked_pow(ctx.p, s);
    const std::int64_t al = alpha(s, ctx);
    auto scaled = [&](std::int64_t h) { return checked_sub(checked_mul(ps, h), al); };

    std::vector<std::pair<Word, std::int64_t>> raw;
    std::int64_t lead = checked_sub(checked_sub(checked_mul(ctx.p, k), 1), n);
    raw.emplace_back(Word{make_letter(eps, scaled(lead), ctx), make_letter(0, scaled(k), ctx)}, 1);
    for (std::int64_t j = 0;; ++j) {
        std::int64_t top = checked_sub(checked_mul(ctx.p - 1, checked_sub(n, j)), 1);
        if (top < j)
            break;
        std::int64_t c = a_coeff(n, j, ctx);
        if (c == 0)
            continue;
        std::int64_t sign = (j % 2 == 0) ? 1 : -1;
        std::int64_t left = checked_sub(checked_sub(checked_mul(ctx.p, k), 1), j);
        std::int64_t right = checked_add(checked_sub(k, n), j);
        raw.emplace_back(
            Word{make_letter(eps, scaled(left), ctx), make_letter(0, scaled(right), ctx)},
            sign * c);
    }
    return poly_from_terms(std::move(raw), ctx);
}

Poly reduced_relation_S(std::int64_t k, std::int64_t n, std::int64_t s, const PrimeContext& ctx) {
    if (n < 0)
        throw NegativeN(n);
    const std::int64_t ps = checked_pow(ctx.p, s);
    auto scaled = [&](std::int64_t h) { return checked_mul(ps, h); };

    std::vector<std::pair<Word, std::int64_t>> raw;
    std::int64_t lead = checked_sub(checked_mul(ctx.p, k), n);
    raw.emplace_back(Word{make_letter(1, scaled(lead), ctx), make_letter(1, scaled(k), ctx)}, 1);
    for (std::int64_t j = 0;; ++j) {
        std::int64_t top = checked_sub(checked_mul(ctx.p - 1, checked_sub(n, j)), 1);
        if (top < j)
            break;
        std::int64_t c = a_coeff(n, j, ctx);
        if (c == 0)
            continue;
        std::int64_t sign = (j % 2 == 0) ? -1 : 1;
        std::int64_t left = checked_sub(checked_mul(ctx.p, k), j);
        std::int64_t right = checked_add(checked_sub(k, n), j);
        raw.emplace_back(
            Word{make_letter(1, scaled(left), ctx), make_letter(1, scaled(right), ctx)},
            sign * c);
    }
    return poly_from_terms(std::move(raw), ctx);
}

bool verify_reduction_R(std::int64_t eps, std::int64_t k, std::int64_t n, std::int64_t s,
                        const PrimeContext& ctx) {
    const std::int64_t ps = checked_pow(ctx.p, s);
    const std::int64_t al = alpha(s, ctx);
    Poly direct = relation_R(eps, checked_sub(checked_mul(ps, k), al), checked_mul(ps, n), ctx);
    return direct == reduced_relation_R(eps, k, n, s, ctx);
}

bool verify_reduction_S(std::int64_t k, std::int64_t n, std::int64_t s, const PrimeContext& ctx) {
    const std::int64_t ps = checked_pow(ctx.p, s);
    Poly direct = relation_S(1, checked_mul(ps, k), checked_mul(ps, n), ctx);
    return direct == reduced_relation_S(k, n, s, ctx);
}

bool verify_map_relation(MapName name, std::int64_t k, std::int64_t n, std::int64_t s,
                         const PrimeContext& ctx) {
    const std::int64_t ps = checked_pow(ctx.p, s);
    if (name == MapName::Phi) {
        Poly image = apply_map(MapName::Phi, relation_R(0, k, n, ctx), s, ctx);
        Poly target =
            relation_R(0, checked_sub(checked_mul(ps, k), alpha(s, ctx)), checked_mul(ps, n), ctx);
        return image == target;
    }
    if (name == MapName::Psi) {
        Poly image = apply_map(MapName::Psi, relation_S(1, k, n, ctx), s, ctx);
        Poly target = relation_S(1, checked_mul(ps, k), checked_mul(ps, n), ctx);
        return image == target;
    }
    throw DomainViolation("verify_map_relation takes Phi or Psi");
}

Poly right_action(const Poly& v, const Poly& q, std::int64_t s, const PrimeContext& ctx,
                  RewriteCache* cache) {
    const SubspaceId vs{SubspaceId::Kind::V, s};
    const SubspaceId qs{SubspaceId::Kind::Q0, s};
    for (const auto& [w, c] : v.terms)
        if (!in_subspace(w, vs, ctx))
            throw NotInSubspace("left operand has a word outside V(" + std::to_string(s) + ")");
    for (const auto& [w, c] : q.terms)
        if (!in_subspace(w, qs, ctx))
            throw NotInSubspace("right operand has a word outside Q0(" + std::to_string(s) + ")");

    Poly result = normal_form(mul(v, q, ctx), ctx, Strategy{}, std::nullopt, cache).poly;
    for (const auto& [w, c] : result.terms)
        if (!in_subspace(w, vs, ctx))
            throw ClosureViolation("action left V(" + std::to_string(s) + ")");
    return result;
}

bool verify_K_morphism(const Poly& v, const Poly& q, std::int64_t s, const PrimeContext& ctx,
                       RewriteCache* cache) {
    Poly lhs = apply_map(MapName::Lambda, right_action(v, q, s, ctx, cache), 1, ctx);
    Poly rhs = right_action(apply_map(MapName::Lambda, v, 1, ctx),
                            apply_map(MapName::Phi, q, 1, ctx), s + 1, ctx, cache);
    return normal_form(lhs, ctx, Strategy{}, std::nullopt, cache).poly ==
           normal_form(rhs, ctx, Strategy{}, std::nullopt, cache).poly;
}

ThetaReport check_theta_obstruction(const PrimeContext& ctx) {
    ThetaReport report;
    report.image = apply_map(MapName::Theta, relation_R(0, 0, 0, ctx), 1, ctx);
    std::vector<RelationId> ids;
    for (const auto& [w, c] : report.image.terms) {
        auto found = relations_containing(w, ctx);
        ids.insert(ids.end(), found.begin(), found.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    report.witnesses = std::move(ids);
    report.member = std::any_of(report.witnesses.begin(), report.witnesses.end(),
                                [&](const RelationId& id) { return relation(id, ctx) == report.image; });
    return report;
}

LambdaReport check_lambda_S00(const PrimeContext& ctx, std::int64_t scan_kmax,
                              std::int64_t scan_nmax) {
    LambdaReport report;
    report.scan_kmax = scan_kmax;
    report.scan_nmax = scan_nmax;
    report.image = apply_map(MapName::Lambda, relation_S(1, 0, 0, ctx), 1, ctx);
    report.single_admissible = report.image.terms.size() == 1 &&
                               report.image.terms.front().second == 1 &&
                               is_admissible(report.image.terms.front().first, ctx);

    report.scan_all_nonadmissible = true;
    for (int fam = 0; fam <= 1 && report.scan_all_nonadmissible; ++fam) {
        for (int eps = 0; eps <= 1 && report.scan_all_nonadmissible; ++eps) {
            for (std::int64_t k = -scan_kmax; k <= scan_kmax; ++k) {
                for (std::int64_t n = 0; n <= scan_nmax; ++n) {
                    Poly rel = fam == 0 ? relation_R(eps, k, n, ctx) : relation_S(eps, k, n, ctx);
                    bool has_nonadmissible =
                        std::any_of(rel.terms.begin(), rel.terms.end(),
                                    [&](const auto& t) { return !is_admissible(t.first, ctx); });
                    if (!has_nonadmissible) {
                        report.scan_all_nonadmissible = false;
                        break;
                    }
                }
            }
        }
    }
    report.member = !(report.single_admissible && report.scan_all_nonadmissible);
    return report;
}

}  // namespace usteen
