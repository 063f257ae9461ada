#include "usteen/verify.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "usteen/checked.hpp"
#include "usteen/expr_io.hpp"

namespace usteen {

void SuiteReport::add(std::string key, bool pass, std::string detail) {
    passed = passed && pass;
    cases.push_back({std::move(key), pass, std::move(detail)});
}

namespace {

std::int64_t rand_range(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/* Iterates all tuples in [lo, hi]^len. */
template <typename F>
void for_each_tuple(std::size_t len, std::int64_t lo, std::int64_t hi, F&& visit) {
    std::vector<std::int64_t> h(len, lo);
    for (;;) {
        visit(h);
        std::size_t i = len;
        while (i > 0 && h[i - 1] == hi)
            h[--i] = lo;
        if (i == 0)
            break;
        ++h[i - 1];
    }
}

}  // namespace

SuiteReport verify_lucas_oracle(const PrimeContext& ctx, std::int64_t amax) {
    SuiteReport report;
    report.suite = "lucas";
    for (std::int64_t a = 0; a <= amax; ++a) {
        bool ok = true;
        std::string detail;
        for (std::int64_t b = 0; b <= a; ++b) {
            mpz_class exact = binom_exact(a, b) % ctx.p;
            if (exact.get_si() != binom_ext(a, b, ctx)) {
                ok = false;
                detail = "mismatch at b=" + std::to_string(b);
                break;
            }
        }
        report.add("p=" + std::to_string(ctx.p) + " oracle a=" + std::to_string(a), ok, detail);
    }
    return report;
}

SuiteReport verify_cor12(const PrimeContext& ctx, std::int64_t lmax) {
    SuiteReport report;
    report.suite = "lucas";
    for (std::int64_t l = 0; l <= lmax; ++l) {
        bool ok = true;
        std::string detail;
        for (std::int64_t t = 0; t <= lmax && ok; ++t) {
            for (std::int64_t h = 1; h <= ctx.p; ++h) {
                if (binom_ext(ctx.p * l - h, ctx.p * t, ctx) != binom_ext(l - 1, t, ctx)) {
                    ok = false;
                    detail = "mismatch at t=" + std::to_string(t) + " h=" + std::to_string(h);
                    break;
                }
            }
        }
        report.add("p=" + std::to_string(ctx.p) + " pl-h identity l=" + std::to_string(l), ok,
                   detail);
    }
    return report;
}

SuiteReport verify_lucas(const PrimeContext& ctx, const VerifyOptions& opt) {
    SuiteReport report = verify_lucas_oracle(ctx, opt.amax);
    for (std::int64_t r = 0; r <= 2; ++r) {
        std::int64_t pr = checked_pow(ctx.p, r);
        for (std::int64_t a = 0; a <= 30; ++a) {
            bool ok = true;
            std::string detail;
            for (std::int64_t b = 0; b <= 30; ++b) {
                if (binom_ext(pr * a, pr * b, ctx) != binom_ext(a, b, ctx)) {
                    ok = false;
                    detail = "mismatch at b=" + std::to_string(b);
                    break;
                }
            }
            report.add("p=" + std::to_string(ctx.p) + " scaling r=" + std::to_string(r) +
                           " a=" + std::to_string(a),
                       ok, detail);
        }
    }
    SuiteReport cor = verify_cor12(ctx, 40);
    for (auto& c : cor.cases)
        report.add(std::move(c.key), c.pass, std::move(c.detail));
    return report;
}

SuiteReport verify_divisibility(const PrimeContext& ctx, const VerifyOptions& opt) {
    SuiteReport report;
    report.suite = "divisibility";
    const std::int64_t smax = opt.smax.value_or(3);
    const std::int64_t nmax = opt.nmax.value_or(8);
    for (std::int64_t s = 1; s <= smax; ++s) {
        const std::int64_t ps = checked_pow(ctx.p, s);
        for (std::int64_t n = 1; n <= nmax; ++n) {
            bool ok = true;
            std::string detail;
            const std::int64_t jmax = (ctx.p - 1) * ps * n;
            for (std::int64_t j = 1; j <= jmax; ++j) {
                if (j % ps == 0)
                    continue;
                if (a_coeff(ps * n, j, ctx) != 0) {
                    ok = false;
                    detail = "nonzero at j=" + std::to_string(j);
                    break;
                }
            }
            report.add("p=" + std::to_string(ctx.p) + " s=" + std::to_string(s) +
                           " n=" + std::to_string(n),
                       ok, detail);
        }
    }
    return report;
}

SuiteReport verify_reduction(const PrimeContext& ctx, const VerifyOptions& opt) {
    SuiteReport report;
    report.suite = "reduction";
    const std::string pfx = "p=" + std::to_string(ctx.p) + " ";

    Poly r000 = relation_R(0, 0, 0, ctx);
    Poly r_expect = monomial(Word{make_letter(0, -1, ctx), make_letter(0, 0, ctx)}, 1, ctx);
    report.add(pfx + "anchor R(0,0,0)", r000 == r_expect, print_poly(r000, ctx));

    Poly s100 = relation_S(1, 0, 0, ctx);
    Poly s_expect = monomial(Word{make_letter(1, 0, ctx), make_letter(1, 0, ctx)}, 1, ctx);
    report.add(pfx + "anchor S(1,0,0)", s100 == s_expect, print_poly(s100, ctx));

    const std::int64_t kmax = opt.kmax.value_or(3);
    const std::int64_t nmax = opt.nmax.value_or(6);
    const std::int64_t smax = opt.smax.value_or(2);
    for (std::int64_t s = 1; s <= smax; ++s) {
        for (int eps = 0; eps <= 1; ++eps) {
            for (std::int64_t k = -kmax; k <= kmax; ++k) {
                for (std::int64_t n = 0; n <= nmax; ++n) {
                    report.add(pfx + "R eps=" + std::to_string(eps) + " k=" + std::to_string(k) +
                                   " n=" + std::to_string(n) + " s=" + std::to_string(s),
                               verify_reduction_R(eps, k, n, s, ctx));
                }
            }
        }
        for (std::int64_t k = -kmax; k <= kmax; ++k) {
            for (std::int64_t n = 0; n <= nmax; ++n) {
                report.add(pfx + "S k=" + std::to_string(k) + " n=" + std::to_string(n) +
                               " s=" + std::to_string(s),
                           verify_reduction_S(k, n, s, ctx));
            }
        }
    }
    return report;
}

namespace {

SuiteReport verify_map_suite(const PrimeContext& ctx, const VerifyOptions& opt, MapName name) {
    SuiteReport report;
    report.suite = name == MapName::Phi ? "phi-rel" : "psi-rel";
    const std::string pfx = "p=" + std::to_string(ctx.p) + " ";
    const std::int64_t kmax = opt.kmax.value_or(3);
    const std::int64_t nmax = opt.nmax.value_or(6);
    const std::int64_t smax = opt.smax.value_or(2);
    const int eps = name == MapName::Phi ? 0 : 1;

    for (std::int64_t s = 1; s <= smax; ++s)
        for (std::int64_t k = -kmax; k <= kmax; ++k)
            for (std::int64_t n = 0; n <= nmax; ++n)
                report.add(pfx + "relation k=" + std::to_string(k) + " n=" + std::to_string(n) +
                               " s=" + std::to_string(s),
                           verify_map_relation(name, k, n, s, ctx));

    /* Admissibility of the s-th image must match the h-criterion, in both
       directions, which for these shapes is the same as admissibility of
       the original word. */
    const std::int64_t shift = name == MapName::Phi ? 0 : 1;
    for (std::int64_t s = 1; s <= smax; ++s) {
        for (std::size_t len = 2; len <= 3; ++len) {
            bool ok = true;
            std::string detail;
            for_each_tuple(len, -opt.hmax, opt.hmax, [&](const std::vector<std::int64_t>& h) {
                if (!ok)
                    return;
                Word w;
                for (std::int64_t hi : h)
                    w.push_back(make_letter(eps, hi, ctx));
                bool crit = true;
                for (std::size_t i = 0; i + 1 < h.size(); ++i)
                    crit = crit && h[i] >= ctx.p * h[i + 1] + shift;
                bool image_adm = is_admissible(map_word(name, w, s, ctx), ctx);
                if (image_adm != crit || crit != is_admissible(w, ctx)) {
                    ok = false;
                    detail = "mismatch at " + print_word(w);
                }
            });
            report.add(pfx + "admissibility scaling s=" + std::to_string(s) +
                           " len=" + std::to_string(len),
                       ok, detail);
        }
    }
    return report;
}

}  // namespace

SuiteReport verify_phi_rel(const PrimeContext& ctx, const VerifyOptions& opt) {
    return verify_map_suite(ctx, opt, MapName::Phi);
}

SuiteReport verify_psi_rel(const PrimeContext& ctx, const VerifyOptions& opt) {
    return verify_map_suite(ctx, opt, MapName::Psi);
}

SuiteReport verify_kmodule(const PrimeContext& ctx, const VerifyOptions& opt) {
    SuiteReport report;
    report.suite = "kmodule";
    report.randomized = true;
    report.seed = opt.seed;
    std::mt19937_64 rng(opt.seed);
    RewriteCache cache;
    const std::int64_t base_samples = opt.samples.value_or(200);

    for (std::int64_t s = 0; s <= 1; ++s) {
        const std::int64_t count = s == 0 ? base_samples : std::max<std::int64_t>(base_samples / 4, 1);
        const std::int64_t ps = checked_pow(ctx.p, s);
        const std::int64_t al = alpha(s, ctx);
        auto scaled = [&](std::int64_t h) { return ps * h - al; };

        for (std::int64_t i = 0; i < count; ++i) {
            Word v;
            std::int64_t m = rand_range(rng, 2, 3);
            v.push_back(make_letter(1, scaled(rand_range(rng, -4, 4)), ctx));
            for (std::int64_t j = 1; j < m; ++j)
                v.push_back(make_letter(0, scaled(rand_range(rng, -4, 4)), ctx));
            Word q;
            std::int64_t lq = rand_range(rng, 0, 2);
            for (std::int64_t j = 0; j < lq; ++j)
                q.push_back(make_letter(0, scaled(rand_range(rng, -4, 4)), ctx));

            std::string key = "p=" + std::to_string(ctx.p) + " s=" + std::to_string(s) +
                              " sample=" + std::to_string(i);
            std::string detail = "v=" + print_word(v) + " q=" + print_word(q);
            try {
                bool ok = verify_K_morphism(monomial(v, 1, ctx), monomial(q, 1, ctx), s, ctx, &cache);
                report.add(std::move(key), ok, std::move(detail));
            } catch (const Error& e) {
                report.add(std::move(key), false, detail + " error: " + e.what());
            }
        }
    }
    return report;
}

SuiteReport verify_theta(const PrimeContext& ctx) {
    SuiteReport report;
    report.suite = "theta";
    const std::string pfx = "p=" + std::to_string(ctx.p) + " ";
    ThetaReport theta = check_theta_obstruction(ctx);

    Poly expect = monomial(Word{make_letter(0, -ctx.p, ctx), make_letter(0, 0, ctx)}, 1, ctx);
    report.add(pfx + "image", theta.image == expect, print_poly(theta.image, ctx));

    std::vector<RelationId> expect_ids = {{RelFamily::R, 0, 0, ctx.p - 1}};
    std::string listed;
    for (const auto& id : theta.witnesses)
        listed += (listed.empty() ? "" : " ") + to_string(id);
    report.add(pfx + "witnesses", theta.witnesses == expect_ids, listed);
    report.add(pfx + "not_member", !theta.member);
    return report;
}

SuiteReport verify_lambda_s(const PrimeContext& ctx, const VerifyOptions& opt) {
    SuiteReport report;
    report.suite = "lambda-s";
    const std::string pfx = "p=" + std::to_string(ctx.p) + " ";
    LambdaReport lam = check_lambda_S00(ctx, opt.kmax.value_or(6), opt.nmax.value_or(12));

    Poly expect = monomial(Word{make_letter(1, -1, ctx), make_letter(1, -1, ctx)}, 1, ctx);
    report.add(pfx + "single_admissible", lam.single_admissible && lam.image == expect,
               print_poly(lam.image, ctx));
    report.add(pfx + "scan_nonadmissible", lam.scan_all_nonadmissible,
               "window |k|<=" + std::to_string(lam.scan_kmax) +
                   " n<=" + std::to_string(lam.scan_nmax));
    report.add(pfx + "not_member", !lam.member);
    return report;
}

SuiteReport verify_confluence(const PrimeContext& ctx, const VerifyOptions& opt) {
    SuiteReport report;
    report.suite = "confluence";
    report.randomized = true;
    report.seed = opt.seed;
    std::mt19937_64 rng(opt.seed);
    RewriteCache cache;
    const std::int64_t samples = opt.samples.value_or(1000);

    for (std::int64_t i = 0; i < samples; ++i) {
        Word w;
        std::int64_t len = rand_range(rng, 1, 3);
        for (std::int64_t j = 0; j < len; ++j)
            w.push_back(make_letter(rand_range(rng, 0, 1), rand_range(rng, -6, 6), ctx));
        std::uint64_t seed1 = rng(), seed2 = rng();

        std::string key = "sample=" + std::to_string(i);
        std::string detail = "w=" + print_word(w);
        Poly x = monomial(w, 1, ctx);
        try {
            NormalForm left = normal_form(x, ctx, Strategy::leftmost(), std::nullopt, &cache);
            Poly right = normal_form(x, ctx, Strategy::rightmost(), std::nullopt, &cache).poly;
            Poly rnd1 = normal_form(x, ctx, Strategy::seeded_random(seed1), std::nullopt, &cache).poly;
            Poly rnd2 = normal_form(x, ctx, Strategy::seeded_random(seed2), std::nullopt, &cache).poly;

            bool agree = left.poly == right && left.poly == rnd1 && left.poly == rnd2;
            bool sound = std::all_of(left.poly.terms.begin(), left.poly.terms.end(),
                                     [&](const auto& t) { return is_admissible(t.first, ctx); });
            bool idempotent =
                normal_form(left.poly, ctx, Strategy::leftmost(), std::nullopt, &cache).poly ==
                left.poly;
            bool graded = true;
            if (!left.poly.is_zero()) {
                graded = length(left.poly) == length(w);
                std::int64_t deg = internal_degree(w, ctx);
                for (const auto& [nw, nc] : left.poly.terms)
                    graded = graded && internal_degree(nw, ctx) == deg;
            }
            bool ok = agree && sound && idempotent && graded;
            if (!ok)
                detail += std::string(agree ? "" : " strategies-differ") +
                          (sound ? "" : " non-admissible-term") +
                          (idempotent ? "" : " not-idempotent") + (graded ? "" : " grading-broken");
            report.add(std::move(key), ok, std::move(detail));
        } catch (const Error& e) {
            report.add(std::move(key), false, detail + " error: " + e.what());
        }
    }

    const std::int64_t kmax = opt.kmax.value_or(4);
    const std::int64_t nmax = opt.nmax.value_or(8);
    for (int fam = 0; fam <= 1; ++fam) {
        for (int eps = 0; eps <= 1; ++eps) {
            for (std::int64_t k = -kmax; k <= kmax; ++k) {
                for (std::int64_t n = 0; n <= nmax; ++n) {
                    RelationId id{fam == 0 ? RelFamily::R : RelFamily::S, eps, k, n};
                    std::string key = "vanish " + to_string(id);
                    try {
                        bool ok = normal_form(relation(id, ctx), ctx, Strategy::leftmost(),
                                              std::nullopt, &cache)
                                      .poly.is_zero();
                        report.add(std::move(key), ok);
                    } catch (const Error& e) {
                        report.add(std::move(key), false, e.what());
                    }
                }
            }
        }
    }
    return report;
}

SuiteReport verify_roundtrip(const PrimeContext& ctx, const VerifyOptions& opt) {
    SuiteReport report;
    report.suite = "roundtrip";
    report.randomized = true;
    report.seed = opt.seed;
    std::mt19937_64 rng(opt.seed);
    const std::int64_t samples = opt.samples.value_or(1000);

    for (std::int64_t i = 0; i < samples; ++i) {
        std::vector<std::pair<Word, std::int64_t>> raw;
        std::int64_t nterms = rand_range(rng, 0, 4);
        for (std::int64_t t = 0; t < nterms; ++t) {
            Word w;
            std::int64_t len = rand_range(rng, 0, 4);
            for (std::int64_t j = 0; j < len; ++j)
                w.push_back(make_letter(rand_range(rng, 0, 1), rand_range(rng, -100, 100), ctx));
            raw.emplace_back(std::move(w), rand_range(rng, 1, ctx.p - 1));
        }
        Poly x = poly_from_terms(raw, ctx);
        /* Same terms fed in reverse order must normalize to the same print. */
        std::reverse(raw.begin(), raw.end());
        Poly x2 = poly_from_terms(raw, ctx);

        std::string text = print_poly(x, ctx);
        bool ok = parse_poly(text, ctx) == x && print_poly(x2, ctx) == text &&
                  decode_poly_json(encode_json(x, ctx), ctx) == x;
        report.add("sample=" + std::to_string(i), ok, ok ? "" : text);
    }
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "lucas",   "divisibility", "reduction", "phi-rel",    "psi-rel",
        "kmodule", "theta",        "lambda-s",  "confluence",
    };
    return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, const PrimeContext& ctx,
                                    const VerifyOptions& opt) {
    std::vector<SuiteReport> out;
    auto run_one = [&](const std::string& suite) {
        if (suite == "lucas")
            out.push_back(verify_lucas(ctx, opt));
        else if (suite == "divisibility")
            out.push_back(verify_divisibility(ctx, opt));
        else if (suite == "reduction")
            out.push_back(verify_reduction(ctx, opt));
        else if (suite == "phi-rel")
            out.push_back(verify_phi_rel(ctx, opt));
        else if (suite == "psi-rel")
            out.push_back(verify_psi_rel(ctx, opt));
        else if (suite == "kmodule")
            out.push_back(verify_kmodule(ctx, opt));
        else if (suite == "theta")
            out.push_back(verify_theta(ctx));
        else if (suite == "lambda-s")
            out.push_back(verify_lambda_s(ctx, opt));
        else if (suite == "confluence")
            out.push_back(verify_confluence(ctx, opt));
        else
            throw Error("unknown suite: " + suite);
    };
    if (name == "all") {
        for (const auto& suite : suite_names())
            run_one(suite);
    } else {
        run_one(name);
    }
    return out;
}

std::string encode_json(const SuiteReport& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["passed"] = report.passed;
    if (report.randomized)
        j["seed"] = report.seed;
    auto cases = nlohmann::json::array();
    for (const auto& c : report.cases)
        cases.push_back({{"key", c.key}, {"pass", c.pass}, {"detail", c.detail}});
    j["cases"] = std::move(cases);
    return j.dump();
}

std::string format_text(const SuiteReport& report) {
    std::string out;
    std::size_t npass = 0;
    for (const auto& c : report.cases) {
        if (c.pass)
            ++npass;
        else
            out += "FAIL " + c.key + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    }
    out += "suite " + report.suite + ": " + (report.passed ? "PASS" : "FAIL") + " (" +
           std::to_string(npass) + "/" + std::to_string(report.cases.size()) + " cases)";
    if (report.randomized)
        out += " seed=" + std::to_string(report.seed);
    out += "\n";
    return out;
}

}  // namespace usteen
