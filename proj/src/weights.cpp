#include "serrewt/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "serrewt/errors.hpp"

namespace serrewt {

namespace {

int reduce(long long x, int mod) {
    long long r = x % mod;
    return static_cast<int>(r < 0 ? r + mod : r);
}

}  // namespace

SerreWeight SerreWeight::make(int p, long long a, int b) {
    require_odd_prime(p);
    if (b < 1 || b > p)
        throw InvalidArgument("weight dimension b=" + std::to_string(b) + " outside [1, " +
                              std::to_string(p) + "]");
    return SerreWeight(p, reduce(a, p - 1), b);
}

int weight_dim(const SerreWeight& w) { return w.dim(); }

SerreWeight twist_weight(const SerreWeight& w, long long t) {
    return SerreWeight::make(w.p(), static_cast<long long>(w.a()) + reduce(t, w.p() - 1), w.b());
}

// ---------------------------------------------------------------------------
// VirtualClass

VirtualClass::VirtualClass(int p) : p_(p) { require_odd_prime(p); }

void VirtualClass::check_prime(const SerreWeight& w) const {
    if (w.p() != p_)
        throw InvalidArgument("weight of p=" + std::to_string(w.p()) +
                              " in a class of p=" + std::to_string(p_));
}

std::int64_t VirtualClass::coeff(const SerreWeight& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? 0 : it->second;
}

void VirtualClass::add(const SerreWeight& w, std::int64_t c) {
    check_prime(w);
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(w, 0);
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

bool VirtualClass::is_effective() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::int64_t VirtualClass::dimension() const noexcept {
    std::int64_t d = 0;
    for (const auto& [w, c] : coeffs_) d += c * w.dim();
    return d;
}

VirtualClass VirtualClass::twisted(long long t) const {
    VirtualClass out(p_);
    for (const auto& [w, c] : coeffs_) out.add(twist_weight(w, t), c);
    return out;
}

VirtualClass& VirtualClass::operator+=(const VirtualClass& o) {
    if (o.p_ != p_) throw InvalidArgument("adding classes of different primes");
    for (const auto& [w, c] : o.coeffs_) add(w, c);
    return *this;
}

VirtualClass& VirtualClass::operator-=(const VirtualClass& o) {
    if (o.p_ != p_) throw InvalidArgument("subtracting classes of different primes");
    for (const auto& [w, c] : o.coeffs_) add(w, -c);
    return *this;
}

VirtualClass operator-(const VirtualClass& v) {
    VirtualClass out(v.p_);
    for (const auto& [w, c] : v.coeffs_) out.add(w, -c);
    return out;
}

// ---------------------------------------------------------------------------
// Symmetric powers

// One application of
//   [S_N] = [S_n] + [det^n (x) S_{p-n-1}] + [det (x) S_{N-p-1}],
// with N = n + k(p-1), 1 <= n <= p-1, repeated on the last term while
// accumulating the det twist, until the index drops below p.
Decomposition decompose_sym(int p, long long N) {
    require_odd_prime(p);
    if (N < 0) throw InvalidArgument("decompose_sym needs N >= 0, got " + std::to_string(N));
    const long long target_dim = N + 1;

    std::map<SerreWeight, std::int64_t> acc;
    long long twist = 0;
    while (N >= p) {
        const int n = static_cast<int>((N - 1) % (p - 1)) + 1;
        ++acc[SerreWeight::make(p, twist, n + 1)];
        ++acc[SerreWeight::make(p, twist + n, p - n)];
        N -= p + 1;
        ++twist;
    }
    if (N >= 0) ++acc[SerreWeight::make(p, twist, static_cast<int>(N) + 1)];

    Decomposition out;
    out.reserve(acc.size());
    long long dim = 0;
    for (const auto& [w, c] : acc) {
        if (c <= 0) throw InternalError("non-positive multiplicity in decompose_sym");
        dim += c * w.dim();
        out.push_back({w, c});
    }
    if (dim != target_dim) throw InternalError("decompose_sym lost dimension");
    return out;
}

VirtualClass to_class(int p, const Decomposition& d) {
    VirtualClass v(p);
    for (const auto& f : d) v.add(f.weight, f.mult);
    return v;
}

VirtualClass sym_class(int p, long long N) {
    if (N >= 0) return to_class(p, decompose_sym(p, N));
    if (N == -1) return VirtualClass(p);
    return -sym_class(p, -N - 2).twisted(N + 1);
}

std::int64_t jh_multiplicity(int p, long long k, const SerreWeight& w) {
    if (k < 2) throw InvalidArgument("weight k must be >= 2, got " + std::to_string(k));
    if (w.p() != p) throw InvalidArgument("weight prime does not match p");
    for (const auto& f : decompose_sym(p, k - 2))
        if (f.weight == w) return f.mult;
    return 0;
}

long long k_min_closed(const SerreWeight& w) {
    const long long p = w.p(), a = w.a(), b = w.b();
    if (a + b < p) return a * (p + 1) + b + 1;
    return (a + 1) * (p + 1) + b * p - p * p;
}

SymPowerTable::SymPowerTable(int p, long long max_n) : p_(p) {
    require_odd_prime(p);
    if (max_n < 0) throw InvalidArgument("SymPowerTable needs max_n >= 0");
    rows_.reserve(static_cast<std::size_t>(max_n) + 1);
    for (long long n = 0; n <= max_n; ++n) rows_.push_back(decompose_sym(p, n));
}

const Decomposition& SymPowerTable::at(long long N) const {
    if (N < 0 || N > max_n())
        throw std::out_of_range("SymPowerTable index " + std::to_string(N) + " outside [0, " +
                                std::to_string(max_n()) + "]");
    return rows_[static_cast<std::size_t>(N)];
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json weight_to_json(const SerreWeight& w) { return {{"a", w.a()}, {"b", w.b()}}; }

SerreWeight weight_from_json(int p, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j["a"].is_number_integer() ||
        !j["b"].is_number_integer())
        throw InvalidArgument("weight JSON must be {\"a\": int, \"b\": int}");
    const auto a = j["a"].get<long long>();
    if (a < 0 || a > p - 2) throw InvalidArgument("weight a outside [0, p-2]");
    return SerreWeight::make(p, a, j["b"].get<int>());
}

nlohmann::json class_to_json(const VirtualClass& v) {
    auto arr = nlohmann::json::array();
    for (const auto& [w, c] : v.coeffs()) arr.push_back({{"a", w.a()}, {"b", w.b()}, {"mult", c}});
    return arr;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
    auto arr = nlohmann::json::array();
    for (const auto& f : d)
        arr.push_back({{"a", f.weight.a()}, {"b", f.weight.b()}, {"mult", f.mult}});
    return arr;
}

}  // namespace serrewt
