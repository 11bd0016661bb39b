#pragma once

// Finite model of rho restricted to the decomposition group at p: exactly the
// data consumed by the Serre, BDJ and Kisin recipes.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace serrewt {

/// rho|I_p ~ w^a (x) diag(w2^{b-a}, w2^{p(b-a)}), 0 <= a < b <= p-1.
struct Irreducible {
    int p;
    int a;
    int b;
    friend bool operator==(const Irreducible&, const Irreducible&) = default;
};

/// Extension shape of a reducible rho|G_p. Split means rho|I_p is semisimple
/// (wild inertia acts trivially); Peu and Tres only exist when the ratio of
/// the two characters is exactly the cyclotomic character.
enum class Shape { Split, NonsplitGeneric, Peu, Tres };

std::string_view shape_name(Shape s);

/// rho|G_p ~ w^twist (x) (w^ratio mu_lambda, *; 0, mu_lambda'), where the
/// upper-left character is the submodule when the extension is non-split.
struct Reducible {
    int p;
    int twist;
    int ratio;
    Shape shape;
    bool lambda_equal;
    friend bool operator==(const Reducible&, const Reducible&) = default;
};

class InertialParam {
public:
    /// Both factories validate and throw InvalidArgument / UnsupportedPrime.
    static InertialParam irreducible(int p, int a, int b);
    static InertialParam reducible(int p, int twist, int ratio, Shape shape, bool lambda_equal);

    int p() const noexcept;
    bool is_irreducible() const noexcept { return std::holds_alternative<Irreducible>(v_); }
    const Irreducible& irr() const { return std::get<Irreducible>(v_); }
    const Reducible& red() const { return std::get<Reducible>(v_); }
    const std::variant<Irreducible, Reducible>& variant() const noexcept { return v_; }

    friend bool operator==(const InertialParam&, const InertialParam&) = default;

    /// Total order matching enumerate_params.
    friend bool operator<(const InertialParam& l, const InertialParam& r);

private:
    explicit InertialParam(std::variant<Irreducible, Reducible> v) : v_(v) {}
    std::variant<Irreducible, Reducible> v_;
};

struct Level2Pair {
    int a;
    int b;
    friend bool operator==(const Level2Pair&, const Level2Pair&) = default;
};

/// Canonical (a,b), 0 <= a < b <= p-1, for the pair {w2^e, w2^{pe}}:
/// {e, pe} = {pa+b, a+pb} mod p^2-1. Throws LevelOneError if (p+1) | e.
Level2Pair normalize_level2(int p, long long e);

/// All irreducible records by (a,b), then for each twist, ratio and
/// lambda_equal (true first): Split followed by NonsplitGeneric, or by Peu and
/// Tres when ratio = 1 and lambda_equal.
std::vector<InertialParam> enumerate_params(int p);

/// Expected size of enumerate_params(p).
long long param_count(int p);

/// The record for w^t (x) rho.
InertialParam param_twist(const InertialParam& x, long long t);

nlohmann::json param_to_json(const InertialParam& x);
InertialParam param_from_json(const nlohmann::json& j);
std::string serialize_param(const InertialParam& x);
/// Throws InvalidArgument on malformed JSON, schema violations or invariant
/// violations.
InertialParam parse_param(std::string_view text);

std::string describe(const InertialParam& x);

}  // namespace serrewt
