#pragma once

// Serre weights V_{a,b} = det^a (x) Sym^{b-1} of GL2(F_p), the Grothendieck
// group they generate, and the Jordan-Holder decomposition of Sym^N.

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace serrewt {

/// Irreducible representation det^a (x) Sym^{b-1} with 0 <= a <= p-2 and
/// 1 <= b <= p. The twist exponent is always stored reduced mod p-1.
class SerreWeight {
public:
    /// Canonicalizes `a` mod p-1; throws InvalidArgument if b is out of
    /// [1, p] and UnsupportedPrime if p is not an odd prime.
    static SerreWeight make(int p, long long a, int b);

    int p() const noexcept { return p_; }
    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }

    /// Sym^{b-1} has dimension b.
    int dim() const noexcept { return b_; }

    /// Exponent c with central element x acting by x^c, as a residue mod p-1.
    int central_exponent() const noexcept { return (2 * a_ + b_ - 1) % (p_ - 1); }

    /// Kisin's sigma_{n,m} = V_{m,n+1}.
    static SerreWeight sigma(int p, int n, int m) { return make(p, m, n + 1); }

    friend bool operator==(const SerreWeight&, const SerreWeight&) = default;
    friend auto operator<=>(const SerreWeight&, const SerreWeight&) = default;

private:
    SerreWeight(int p, int a, int b) : p_(p), a_(a), b_(b) {}
    int p_;
    int a_;
    int b_;
};

int weight_dim(const SerreWeight& w);

/// det^t (x) V_{a,b} = V_{(a+t) mod (p-1), b}.
SerreWeight twist_weight(const SerreWeight& w, long long t);

/// An element of the Grothendieck group: integer combination of weights of a
/// single prime. Zero coefficients are never stored.
class VirtualClass {
public:
    explicit VirtualClass(int p);

    int p() const noexcept { return p_; }
    const std::map<SerreWeight, std::int64_t>& coeffs() const noexcept { return coeffs_; }

    std::int64_t coeff(const SerreWeight& w) const;
    void add(const SerreWeight& w, std::int64_t c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_effective() const noexcept;
    /// Sum of coeff * dim.
    std::int64_t dimension() const noexcept;

    VirtualClass twisted(long long t) const;

    VirtualClass& operator+=(const VirtualClass& o);
    VirtualClass& operator-=(const VirtualClass& o);
    friend VirtualClass operator+(VirtualClass l, const VirtualClass& r) { return l += r; }
    friend VirtualClass operator-(VirtualClass l, const VirtualClass& r) { return l -= r; }
    friend VirtualClass operator-(const VirtualClass& v);
    friend bool operator==(const VirtualClass&, const VirtualClass&) = default;

private:
    void check_prime(const SerreWeight& w) const;
    int p_;
    std::map<SerreWeight, std::int64_t> coeffs_;
};

/// A factor of an effective decomposition, sorted by weight.
struct Factor {
    SerreWeight weight;
    std::int64_t mult;
    friend bool operator==(const Factor&, const Factor&) = default;
};
using Decomposition = std::vector<Factor>;

/// Jordan-Holder factors of Sym^N (N >= 0) with multiplicity, sorted by (a,b).
Decomposition decompose_sym(int p, long long N);

/// [Sym^N] for every integer N, with [Sym^{-1}] = 0 and
/// [Sym^N] = -[det^{N+1} (x) Sym^{-N-2}] for N < -1.
VirtualClass sym_class(int p, long long N);

VirtualClass to_class(int p, const Decomposition& d);

/// Multiplicity of w in Sym^{k-2}; Kisin's a_cr(n,m) when w = sigma_{n,m}.
std::int64_t jh_multiplicity(int p, long long k, const SerreWeight& w);

/// Least k >= 2 with w a constituent of Sym^{k-2}, in closed form.
long long k_min_closed(const SerreWeight& w);

/// Immutable table of decompose_sym(p, N) for 0 <= N <= max_n. Safe to share
/// between threads once constructed.
class SymPowerTable {
public:
    SymPowerTable(int p, long long max_n);

    int p() const noexcept { return p_; }
    long long max_n() const noexcept { return static_cast<long long>(rows_.size()) - 1; }
    /// Throws std::out_of_range beyond max_n.
    const Decomposition& at(long long N) const;

private:
    int p_;
    std::vector<Decomposition> rows_;
};

// JSON: weights are {"a","b"}; classes are arrays of {"a","b","mult"} sorted
// by (a,b).
nlohmann::json weight_to_json(const SerreWeight& w);
SerreWeight weight_from_json(int p, const nlohmann::json& j);
nlohmann::json class_to_json(const VirtualClass& v);
nlohmann::json decomposition_to_json(const Decomposition& d);

}  // namespace serrewt
