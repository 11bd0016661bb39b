#include "serrewt/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "serrewt/errors.hpp"

namespace serrewt::oracle {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InternalError("cyclotomic coefficient overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw InternalError("cyclotomic coefficient overflow");
    return r;
}

// Long division by a monic divisor, in place. Returns the quotient; `num`
// is left holding the remainder (degree < deg den).
Poly divide_monic(Poly& num, const Poly& den) {
    const int dd = static_cast<int>(den.size()) - 1;
    const int nd = static_cast<int>(num.size()) - 1;
    if (nd < dd) return {0};
    Poly quot(static_cast<std::size_t>(nd - dd + 1), 0);
    for (int i = nd; i >= dd; --i) {
        const std::int64_t c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (int k = 0; k <= dd; ++k) num[i - dd + k] = checked_sub(num[i - dd + k], checked_mul(c, den[k]));
    }
    num.resize(static_cast<std::size_t>(dd));
    return quot;
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) out.push_back(n);
    return out;
}

int mod(long long x, long long n) {
    long long r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

// Arithmetic in F_p[t]/(t^2 - c).
struct Fp2 {
    int p;
    int c;
    std::pair<int, int> mul(std::pair<int, int> x, std::pair<int, int> y) const {
        const long long a0 = x.first, a1 = x.second, b0 = y.first, b1 = y.second;
        return {mod(a0 * b0 + static_cast<long long>(c) * (a1 * b1 % p), p), mod(a0 * b1 + a1 * b0, p)};
    }
    std::pair<int, int> pow(std::pair<int, int> x, long long e) const {
        std::pair<int, int> r{1, 0};
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
};

int least_nonresidue(int p) {
    for (int c = 2; c < p; ++c) {
        bool square = false;
        for (long long s = 1; s < p && !square; ++s) square = (s * s) % p == c;
        if (!square) return c;
    }
    throw InternalError("no quadratic non-residue found");
}

}  // namespace

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic

Poly cyclotomic_poly(int n) {
    if (n < 1) throw InvalidArgument("cyclotomic_poly needs n >= 1");
    std::map<int, Poly> phi;
    for (int d : divisors(n)) {
        Poly num(static_cast<std::size_t>(d) + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (const auto& [e, pe] : phi)
            if (d % e == 0) {
                Poly q = divide_monic(num, pe);
                if (std::any_of(num.begin(), num.end(), [](std::int64_t v) { return v != 0; }))
                    throw InternalError("inexact cyclotomic division");
                num = std::move(q);
            }
        phi.emplace(d, std::move(num));
    }
    return phi.at(n);
}

CyclotomicElement::CyclotomicElement(int order, Poly reduced) : order_(order), coeffs_(std::move(reduced)) {}

bool CyclotomicElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t v) { return v == 0; });
}

CyclotomicRing::CyclotomicRing(int n) : n_(n), phi_(cyclotomic_poly(n)) {}

CyclotomicElement CyclotomicRing::reduce(const std::vector<std::int64_t>& counts) const {
    if (static_cast<int>(counts.size()) != n_) throw InvalidArgument("group-ring element has wrong length");
    Poly rem = counts;
    divide_monic(rem, phi_);
    rem.resize(static_cast<std::size_t>(degree()), 0);
    return CyclotomicElement(n_, std::move(rem));
}

// ---------------------------------------------------------------------------
// p-regular classes and Brauer characters

std::string PRegularClass::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Central: os << "central(" << x << ")"; break;
        case Kind::Split: os << "split(" << x << "," << y << ")"; break;
        case Kind::Nonsplit: os << "nonsplit(g^" << j << ")"; break;
    }
    return os.str();
}

BrauerContext::BrauerContext(int p) : p_((require_odd_prime(p), p)), ring_(p * p - 1) {
    const int n = p * p - 1;
    const Fp2 field{p, least_nonresidue(p)};
    const auto factors = prime_factors(n);

    bool found = false;
    for (int x1 = 0; x1 < p && !found; ++x1)
        for (int x0 = 0; x0 < p && !found; ++x0) {
            if (x0 == 0 && x1 == 0) continue;
            const std::pair<int, int> g{x0, x1};
            found = std::all_of(factors.begin(), factors.end(), [&](int q) {
                return field.pow(g, n / q) != std::pair<int, int>{1, 0};
            });
            if (found) generator_ = g;
        }
    if (!found) throw InternalError("F_{p^2} has no generator");

    // Discrete logs of the residues, which are the powers g^{(p+1)i}.
    residue_log_.assign(static_cast<std::size_t>(p), -1);
    std::pair<int, int> z{1, 0};
    for (int e = 0; e < n; ++e) {
        if (z.second == 0) residue_log_[static_cast<std::size_t>(z.first)] = e;
        z = field.mul(z, generator_);
    }
    if (z != std::pair<int, int>{1, 0}) throw InternalError("generator order mismatch");

    using K = PRegularClass::Kind;
    for (int x = 1; x < p; ++x) {
        const int e = index_of_residue(x);
        classes_.push_back({K::Central, x, 0, 0, e, e});
    }
    for (int x = 1; x < p; ++x)
        for (int y = x + 1; y < p; ++y)
            classes_.push_back({K::Split, x, y, 0, index_of_residue(x), index_of_residue(y)});
    for (int j = 1; j < n; ++j) {
        if (j % (p + 1) == 0) continue;
        const int conj = mod(static_cast<long long>(j) * p, n);
        if (conj < j) continue;
        classes_.push_back({K::Nonsplit, 0, 0, j, j, conj});
    }
}

int BrauerContext::index_of_residue(int x) const {
    const int r = mod(x, p_);
    if (r == 0) throw InvalidArgument("zero has no discrete log");
    return residue_log_[static_cast<std::size_t>(r)];
}

void BrauerContext::add_char_weight(std::vector<std::int64_t>& counts, const SerreWeight& w,
                                    const PRegularClass& c, std::int64_t mult) const {
    const long long n = order();
    const long long u = c.eig_u, v = c.eig_v;
    const long long base = static_cast<long long>(w.a()) * (u + v);
    for (long long t = 0; t < w.b(); ++t) counts[mod(base + t * u + (w.b() - 1 - t) * v, n)] += mult;
}

void BrauerContext::add_char_sym(std::vector<std::int64_t>& counts, long long N, const PRegularClass& c,
                                 std::int64_t mult) const {
    const long long n = order();
    const int step = mod(c.eig_u - c.eig_v, n);
    int e = mod((N % n) * c.eig_v, n);
    for (long long t = 0; t <= N; ++t) {
        counts[e] += mult;
        e += step;
        if (e >= n) e -= static_cast<int>(n);
    }
}

CyclotomicElement BrauerContext::char_weight(const SerreWeight& w, const PRegularClass& c) const {
    if (w.p() != p_) throw InvalidArgument("weight prime does not match context");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(order()), 0);
    add_char_weight(counts, w, c, 1);
    return ring_.reduce(counts);
}

CyclotomicElement BrauerContext::char_sym(long long N, const PRegularClass& c) const {
    if (N < 0) throw InvalidArgument("char_sym needs N >= 0");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(order()), 0);
    add_char_sym(counts, N, c, 1);
    return ring_.reduce(counts);
}

std::shared_ptr<const BrauerContext> brauer_context(int p) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const BrauerContext>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[p];
    if (!slot) slot = std::make_shared<const BrauerContext>(p);
    return slot;
}

std::vector<PRegularClass> p_regular_classes(int p) { return brauer_context(p)->classes(); }

CyclotomicElement brauer_char_weight(const SerreWeight& w, const PRegularClass& c) {
    return brauer_context(w.p())->char_weight(w, c);
}

CyclotomicElement brauer_char_sym(int p, long long N, const PRegularClass& c) {
    return brauer_context(p)->char_sym(N, c);
}

DecompositionReport verify_decomposition(const BrauerContext& ctx, const Decomposition& d, long long N) {
    DecompositionReport rep{ctx.p(), N, 0, {}};
    std::vector<std::int64_t> counts(static_cast<std::size_t>(ctx.order()), 0);
    for (const auto& c : ctx.classes()) {
        std::fill(counts.begin(), counts.end(), 0);
        ctx.add_char_sym(counts, N, c, 1);
        for (const auto& f : d) ctx.add_char_weight(counts, f.weight, c, -f.mult);
        ++rep.classes_checked;
        // Zero in the group ring already means zero at zeta; otherwise decide
        // in Z[x]/Phi_n.
        if (std::all_of(counts.begin(), counts.end(), [](std::int64_t v) { return v == 0; })) continue;
        if (!ctx.ring().reduce(counts).is_zero()) rep.failures.push_back(c.describe());
    }
    return rep;
}

DecompositionReport verify_decomposition(int p, long long N) {
    return verify_decomposition(*brauer_context(p), decompose_sym(p, N), N);
}

nlohmann::json report_to_json(const DecompositionReport& r) {
    return {{"p", r.p}, {"N", r.N}, {"classes_checked", r.classes_checked}, {"failures", r.failures}};
}

// ---------------------------------------------------------------------------
// Scan oracle for k_min

long long k_min_search(int p, const SerreWeight& w) {
    if (w.p() != p) throw InvalidArgument("weight prime does not match p");
    const long long bound = static_cast<long long>(p) * p;
    for (long long k = 2; k <= bound; ++k)
        for (const auto& f : decompose_sym(p, k - 2))
            if (f.weight == w) return k;
    throw InternalError("k_min_search exhausted p^2");
}

std::vector<std::vector<long long>> k_min_search_all(int p) {
    require_odd_prime(p);
    std::vector<std::vector<long long>> first(static_cast<std::size_t>(p - 1),
                                              std::vector<long long>(static_cast<std::size_t>(p), -1));
    const long long bound = static_cast<long long>(p) * p;
    for (long long k = 2; k <= bound; ++k)
        for (const auto& f : decompose_sym(p, k - 2)) {
            auto& slot = first[static_cast<std::size_t>(f.weight.a())][static_cast<std::size_t>(f.weight.b() - 1)];
            if (slot < 0) slot = k;
        }
    for (const auto& row : first)
        if (std::any_of(row.begin(), row.end(), [](long long v) { return v < 0; }))
            throw InternalError("k_min_search exhausted p^2");
    return first;
}

}  // namespace serrewt::oracle
