#pragma once

// Exhaustive per-prime checks of the weight theorems over the enumerated
// parameter space, with a deterministic parallel runner.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace serrewt {

struct Failure {
    nlohmann::json param;
    nlohmann::json expected;
    nlohmann::json actual;
};

struct VerificationReport {
    int p = 0;
    std::string check;
    long long params_checked = 0;
    std::vector<Failure> failures;
    long long ms = 0;

    bool pass() const noexcept { return failures.empty(); }
};

enum class Check { Main, BmEqualsBdj, KminFormula, RecursionLemma, Brauer };

std::string_view check_name(Check c);
/// Accepts main, bm, kmin, lemma, brauer; throws InvalidArgument otherwise.
Check check_from_name(std::string_view name);
std::vector<Check> all_checks();

/// serre_k = k_min_of_set = k_cris for every enumerated param.
VerificationReport check_main_theorem(int p, int jobs = 1);
/// bm_set = bdj_weight_set for every enumerated param.
VerificationReport check_bm_equals_bdj(int p, int jobs = 1);
/// k_min_closed = scan oracle on all (p-1)p weights.
VerificationReport check_kmin_formula(int p, int jobs = 1);
/// The recursion lemma for n in [1,p-1], k in [1,k_max], plus the periodic
/// relation for n in [-2p, 4p].
VerificationReport check_recursion_lemma(int p, long long k_max, int jobs = 1);
/// Brauer certification of decompose_sym for 0 <= N <= n_max.
VerificationReport check_brauer(int p, long long n_max, int jobs = 1);

struct SuiteOptions {
    int jobs = 1;
    /// Largest prime on which the Brauer check runs; larger primes are skipped.
    int oracle_max_p = 31;
    /// k_max for the lemma check; 0 means 3p.
    long long lemma_k_max = 0;
    /// N bound for the Brauer check; 0 means 3p^2.
    long long brauer_n_max = 0;
};

struct SuiteReport {
    std::vector<VerificationReport> runs;
    bool pass() const noexcept;
};

/// Runs every check on every prime, in the given order. Rejects p = 2 and
/// non-primes with UnsupportedPrime before any work is done.
SuiteReport run_suite(const std::vector<int>& primes, const std::vector<Check>& checks,
                      const SuiteOptions& opts = {});

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = true);
nlohmann::json suite_to_json(const SuiteReport& s, bool with_timing = true);

}  // namespace serrewt
