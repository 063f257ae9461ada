#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "usteen/fractal.hpp"

namespace usteen {

struct CaseResult {
    std::string key;
    bool pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    bool passed = true;
    bool randomized = false;
    std::uint64_t seed = 0;

    void add(std::string key, bool pass, std::string detail = "");
};

/* Sweep bounds.  Unset fields fall back to per-suite defaults (grid suites
   kmax 3 / nmax 6 / smax 2, divisibility smax 3, relation-vanishing window
   4 / 8, obstruction scan 6 / 12, 1000 straightening samples, 200 morphism
   samples). */
struct VerifyOptions {
    std::optional<std::int64_t> kmax;
    std::optional<std::int64_t> nmax;
    std::optional<std::int64_t> smax;
    std::optional<std::int64_t> samples;
    std::uint64_t seed = 0;
    std::int64_t amax = 300;
    std::int64_t hmax = 5;
};

/* Congruence sweeps: extended binomial vs exact oracle, power scaling,
   and the p*l - h identity. */
SuiteReport verify_lucas(const PrimeContext& ctx, const VerifyOptions& opt = {});
SuiteReport verify_lucas_oracle(const PrimeContext& ctx, std::int64_t amax);
SuiteReport verify_cor12(const PrimeContext& ctx, std::int64_t lmax);

/* A(p^s n, j) vanishes whenever j is not divisible by p^s. */
SuiteReport verify_divisibility(const PrimeContext& ctx, const VerifyOptions& opt = {});

/* Anchor relation values plus the scaled-relation identities for both
   families over the (eps, k, n, s) grid. */
SuiteReport verify_reduction(const PrimeContext& ctx, const VerifyOptions& opt = {});

/* Map/relation compatibility plus the admissibility-scaling law for the
   relevant map (Phi on eps 0 words, Psi on eps 1 words). */
SuiteReport verify_phi_rel(const PrimeContext& ctx, const VerifyOptions& opt = {});
SuiteReport verify_psi_rel(const PrimeContext& ctx, const VerifyOptions& opt = {});

/* Morphism law f(vq) = f(v) w(q) on seeded samples at stages 0 and 1. */
SuiteReport verify_kmodule(const PrimeContext& ctx, const VerifyOptions& opt = {});

/* The two non-extendability obstructions. */
SuiteReport verify_theta(const PrimeContext& ctx);
SuiteReport verify_lambda_s(const PrimeContext& ctx, const VerifyOptions& opt = {});

/* Straightening sweep: seeded random words reduced under four strategies,
   with soundness, idempotence, grading and relation-vanishing checks. */
SuiteReport verify_confluence(const PrimeContext& ctx, const VerifyOptions& opt = {});

/* Parser/printer/JSON round-trip on seeded random polynomials. */
SuiteReport verify_roundtrip(const PrimeContext& ctx, const VerifyOptions& opt = {});

const std::vector<std::string>& suite_names();
std::vector<SuiteReport> run_suites(const std::string& name, const PrimeContext& ctx,
                                    const VerifyOptions& opt = {});

std::string encode_json(const SuiteReport& report);
/* Failing cases line by line, then a one-line summary. */
std::string format_text(const SuiteReport& report);

}  // namespace usteen
