#pragma once

// The three minimal-weight recipes (Serre's k, the BDJ minimum, and the
// crystalline weight via the Breuil-Mezard sum) and the two weight-set
// recipes (BDJ's W and Kisin's B).

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "serrewt/galois_params.hpp"
#include "serrewt/weights.hpp"

namespace serrewt {

/// A set of Serre weights of one prime, sorted by (a,b) without duplicates.
struct WeightSet {
    int p;
    std::vector<SerreWeight> weights;

    static WeightSet of(int p, std::vector<SerreWeight> ws);
    bool contains(const SerreWeight& w) const;
    std::size_t size() const noexcept { return weights.size(); }
    WeightSet twisted(long long t) const;
    friend bool operator==(const WeightSet&, const WeightSet&) = default;
};

/// Kisin's mu_{n,m} over (n,m) in [0,p-1] x [0,p-2].
class MuTable {
public:
    explicit MuTable(const InertialParam& x);

    int p() const noexcept { return p_; }
    int at(int n, int m) const;
    /// mu of the cell sigma_{n,m} = w, i.e. n = b-1, m = a.
    int at(const SerreWeight& w) const { return at(w.b() - 1, w.a()); }

private:
    int p_;
    std::vector<int> entries_;
};

/// Serre's k(rho).
long long serre_k(const InertialParam& x);

/// BDJ's W(rho).
WeightSet bdj_weight_set(const InertialParam& x);

/// min over W(rho) of k_min_closed.
long long k_min_of_set(const InertialParam& x);

/// Kisin's mu_{n,m}(rho), in {0, 1, 2, 4}. Throws InvalidArgument when
/// (n,m) is outside [0,p-1] x [0,p-2].
int kisin_mu(const InertialParam& x, int n, int m);

/// B(rho) = { V_{m,n+1} : mu_{n,m} > 0 }.
WeightSet bm_set(const InertialParam& x);

/// Breuil-Mezard right-hand side: sum over cells of a_cr(n,m) * mu_{n,m}.
std::int64_t bm_multiplicity(const InertialParam& x, long long k);
std::int64_t bm_multiplicity(const MuTable& mu, const Decomposition& sym_k_minus_2);

/// Least k >= 2 with a non-zero Breuil-Mezard sum. Throws InternalError if
/// nothing is found up to p^2.
long long k_cris(const InertialParam& x);
/// Same scan against a prebuilt table (must reach N = p^2 - 2).
long long k_cris(const InertialParam& x, const MuTable& mu, const SymPowerTable& table);

nlohmann::json weight_set_to_json(const WeightSet& s);

/// {"param", "k_serre", "k_min", "k_cris", "W", "B", "mu_nonzero"}.
nlohmann::json result_to_json(const InertialParam& x);

}  // namespace serrewt
