#pragma once

// Independent checks on the weights module:
//  * Brauer characters over Z[zeta_{p^2-1}] certify decompose_sym, since
//    Brauer characters of the irreducibles are linearly independent;
//  * a literal scan of symmetric powers for the least k containing a weight.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "serrewt/weights.hpp"

namespace serrewt::oracle {

/// Integer polynomial, coefficients in ascending degree.
using Poly = std::vector<std::int64_t>;

/// n-th cyclotomic polynomial by exact division of x^n - 1.
Poly cyclotomic_poly(int n);

/// Element of Z[x]/(Phi_n), stored as coefficients below deg Phi_n.
class CyclotomicElement {
public:
    CyclotomicElement(int order, Poly reduced);

    int order() const noexcept { return order_; }
    const Poly& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;

    friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

private:
    int order_;
    Poly coeffs_;
};

/// Z[x]/(Phi_n) together with the reduction map from the group ring
/// Z[x]/(x^n - 1), where an element is a vector of n exponent counts.
class CyclotomicRing {
public:
    explicit CyclotomicRing(int n);

    int order() const noexcept { return n_; }
    int degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }
    const Poly& modulus() const noexcept { return phi_; }

    /// Reduces sum counts[e] * x^e. Throws InternalError on overflow.
    CyclotomicElement reduce(const std::vector<std::int64_t>& counts) const;

private:
    int n_;
    Poly phi_;
};

/// Conjugacy class of a p-regular element of GL2(F_p). Eigenvalues are kept
/// as discrete logs base the fixed generator g of F_{p^2}^*.
struct PRegularClass {
    enum class Kind { Central, Split, Nonsplit };
    Kind kind;
    int x = 0;  ///< residue (Central, Split)
    int y = 0;  ///< second residue (Split, x < y)
    int j = 0;  ///< exponent of g (Nonsplit), canonical under j -> pj
    int eig_u = 0;
    int eig_v = 0;

    std::string describe() const;
};

/// Everything the Brauer check needs for one prime: F_{p^2} = F_p[t]/(t^2-c)
/// with c the least non-residue, the least generator g in the order
/// (coefficient of t, constant term), a discrete-log table, and the ring
/// Z[zeta] with g -> zeta.
class BrauerContext {
public:
    explicit BrauerContext(int p);

    int p() const noexcept { return p_; }
    int order() const noexcept { return ring_.order(); }
    const CyclotomicRing& ring() const noexcept { return ring_; }
    const std::vector<PRegularClass>& classes() const noexcept { return classes_; }
    /// Generator as (constant term, coefficient of t).
    std::pair<int, int> generator() const noexcept { return generator_; }
    /// Discrete log of a non-zero residue of F_p inside F_{p^2}.
    int index_of_residue(int x) const;

    CyclotomicElement char_weight(const SerreWeight& w, const PRegularClass& c) const;
    CyclotomicElement char_sym(long long N, const PRegularClass& c) const;

    /// Accumulate into group-ring counts (length = order()).
    void add_char_weight(std::vector<std::int64_t>& counts, const SerreWeight& w,
                         const PRegularClass& c, std::int64_t mult) const;
    void add_char_sym(std::vector<std::int64_t>& counts, long long N, const PRegularClass& c,
                      std::int64_t mult) const;

private:
    int p_;
    CyclotomicRing ring_;
    std::pair<int, int> generator_;
    std::vector<int> residue_log_;  // residue_log_[x] for x in [1, p-1]
    std::vector<PRegularClass> classes_;
};

/// Shared, lazily built context for p (thread-safe).
std::shared_ptr<const BrauerContext> brauer_context(int p);

std::vector<PRegularClass> p_regular_classes(int p);
CyclotomicElement brauer_char_weight(const SerreWeight& w, const PRegularClass& c);
CyclotomicElement brauer_char_sym(int p, long long N, const PRegularClass& c);

struct DecompositionReport {
    int p;
    long long N;
    int classes_checked;
    std::vector<std::string> failures;  ///< descriptions of failing classes
    bool pass() const noexcept { return failures.empty(); }
};

/// Checks char(Sym^N) = sum mult * char(V) over decompose_sym(p, N) on every
/// p-regular class.
DecompositionReport verify_decomposition(int p, long long N);
DecompositionReport verify_decomposition(const BrauerContext& ctx, const Decomposition& d,
                                         long long N);
nlohmann::json report_to_json(const DecompositionReport& r);

/// Least k in [2, p^2] with w a constituent of Sym^{k-2}, by scanning.
long long k_min_search(int p, const SerreWeight& w);

/// k_min_search for every weight of p at once; indexed [a][b-1].
std::vector<std::vector<long long>> k_min_search_all(int p);

}  // namespace serrewt::oracle
