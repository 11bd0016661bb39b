#include "serrewt/galois_params.hpp"

#include <set>
#include <sstream>
#include <tuple>

#include "serrewt/errors.hpp"

namespace serrewt {

namespace {

int reduce(long long x, long long mod) {
    long long r = x % mod;
    return static_cast<int>(r < 0 ? r + mod : r);
}

constexpr int shape_rank(Shape s) {
    switch (s) {
        case Shape::Split: return 0;
        case Shape::NonsplitGeneric: return 1;
        case Shape::Peu: return 2;
        case Shape::Tres: return 3;
    }
    return 4;
}

auto order_key(const InertialParam& x) {
    if (x.is_irreducible()) {
        const auto& i = x.irr();
        return std::make_tuple(i.p, 0, i.a, i.b, 0, 0);
    }
    const auto& r = x.red();
    return std::make_tuple(r.p, 1, r.twist, r.ratio, r.lambda_equal ? 0 : 1, shape_rank(r.shape));
}

Shape shape_from_name(const std::string& s) {
    if (s == "split") return Shape::Split;
    if (s == "nonsplit") return Shape::NonsplitGeneric;
    if (s == "peu") return Shape::Peu;
    if (s == "tres") return Shape::Tres;
    throw InvalidArgument("unknown shape \"" + s + "\"");
}

int get_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidArgument(std::string("param field \"") + key + "\" must be an integer");
    const auto v = j[key].get<long long>();
    if (v < -1000000000LL || v > 1000000000LL)
        throw InvalidArgument(std::string("param field \"") + key + "\" out of range");
    return static_cast<int>(v);
}

void require_keys(const nlohmann::json& j, std::set<std::string> allowed) {
    for (const auto& [k, _] : j.items())
        if (!allowed.contains(k)) throw InvalidArgument("unexpected param field \"" + k + "\"");
}

}  // namespace

std::string_view shape_name(Shape s) {
    switch (s) {
        case Shape::Split: return "split";
        case Shape::NonsplitGeneric: return "nonsplit";
        case Shape::Peu: return "peu";
        case Shape::Tres: return "tres";
    }
    return "?";
}

InertialParam InertialParam::irreducible(int p, int a, int b) {
    require_odd_prime(p);
    if (!(0 <= a && a < b && b <= p - 1))
        throw InvalidArgument("irreducible param needs 0 <= a < b <= p-1");
    return InertialParam(Irreducible{p, a, b});
}

InertialParam InertialParam::reducible(int p, int twist, int ratio, Shape shape, bool lambda_equal) {
    require_odd_prime(p);
    if (twist < 0 || twist > p - 2) throw InvalidArgument("reducible twist outside [0, p-2]");
    if (ratio < 0 || ratio > p - 2) throw InvalidArgument("reducible ratio outside [0, p-2]");
    if ((shape == Shape::Peu || shape == Shape::Tres) && !(ratio == 1 && lambda_equal))
        throw InvalidArgument("peu/tres ramifiee requires ratio 1 and lambda_equal");
    if (shape == Shape::NonsplitGeneric && ratio == 1 && lambda_equal)
        throw InvalidArgument("a non-split extension with ratio 1 and lambda_equal is peu or tres");
    return InertialParam(Reducible{p, twist, ratio, shape, lambda_equal});
}

int InertialParam::p() const noexcept {
    return std::visit([](const auto& v) { return v.p; }, v_);
}

bool operator<(const InertialParam& l, const InertialParam& r) { return order_key(l) < order_key(r); }

Level2Pair normalize_level2(int p, long long e) {
    require_odd_prime(p);
    const long long q = static_cast<long long>(p) * p - 1;
    const int r = reduce(e, q);
    if (r % (p + 1) == 0)
        throw LevelOneError("w2^" + std::to_string(e) + " has level 1 for p=" + std::to_string(p));
    // e = p*hi + lo; multiplying by p swaps the two base-p digits mod p^2-1.
    const int hi = r / p, lo = r % p;
    return hi < lo ? Level2Pair{hi, lo} : Level2Pair{lo, hi};
}

std::vector<InertialParam> enumerate_params(int p) {
    require_odd_prime(p);
    std::vector<InertialParam> out;
    out.reserve(static_cast<std::size_t>(param_count(p)));
    for (int a = 0; a < p - 1; ++a)
        for (int b = a + 1; b <= p - 1; ++b) out.push_back(InertialParam::irreducible(p, a, b));
    for (int m = 0; m <= p - 2; ++m)
        for (int r = 0; r <= p - 2; ++r)
            for (bool eq : {true, false}) {
                out.push_back(InertialParam::reducible(p, m, r, Shape::Split, eq));
                if (r == 1 && eq) {
                    out.push_back(InertialParam::reducible(p, m, r, Shape::Peu, eq));
                    out.push_back(InertialParam::reducible(p, m, r, Shape::Tres, eq));
                } else {
                    out.push_back(InertialParam::reducible(p, m, r, Shape::NonsplitGeneric, eq));
                }
            }
    return out;
}

long long param_count(int p) {
    const long long q = p - 1;
    return static_cast<long long>(p) * q / 2 + q * (q * 2 * 2 + 1);
}

InertialParam param_twist(const InertialParam& x, long long t) {
    const int p = x.p();
    if (x.is_irreducible()) {
        const auto& i = x.irr();
        const long long q = static_cast<long long>(p) * p - 1;
        const long long e = static_cast<long long>(p) * i.a + i.b + reduce(t, p - 1) * (p + 1LL);
        const auto n = normalize_level2(p, e % q);
        return InertialParam::irreducible(p, n.a, n.b);
    }
    const auto& r = x.red();
    return InertialParam::reducible(p, reduce(r.twist + reduce(t, p - 1), p - 1), r.ratio, r.shape,
                                    r.lambda_equal);
}

nlohmann::json param_to_json(const InertialParam& x) {
    if (x.is_irreducible()) {
        const auto& i = x.irr();
        return {{"p", i.p}, {"type", "irreducible"}, {"a", i.a}, {"b", i.b}};
    }
    const auto& r = x.red();
    return {{"p", r.p},
            {"type", "reducible"},
            {"twist", r.twist},
            {"ratio", r.ratio},
            {"shape", std::string(shape_name(r.shape))},
            {"lambda_equal", r.lambda_equal}};
}

InertialParam param_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidArgument("param must be a JSON object");
    if (!j.contains("type") || !j["type"].is_string())
        throw InvalidArgument("param field \"type\" must be a string");
    const auto type = j["type"].get<std::string>();
    const int p = get_int(j, "p");
    if (type == "irreducible") {
        require_keys(j, {"p", "type", "a", "b"});
        return InertialParam::irreducible(p, get_int(j, "a"), get_int(j, "b"));
    }
    if (type == "reducible") {
        require_keys(j, {"p", "type", "twist", "ratio", "shape", "lambda_equal"});
        if (!j.contains("shape") || !j["shape"].is_string())
            throw InvalidArgument("param field \"shape\" must be a string");
        if (!j.contains("lambda_equal") || !j["lambda_equal"].is_boolean())
            throw InvalidArgument("param field \"lambda_equal\" must be a boolean");
        return InertialParam::reducible(p, get_int(j, "twist"), get_int(j, "ratio"),
                                        shape_from_name(j["shape"].get<std::string>()),
                                        j["lambda_equal"].get<bool>());
    }
    throw InvalidArgument("param type must be \"irreducible\" or \"reducible\"");
}

std::string serialize_param(const InertialParam& x) { return param_to_json(x).dump(); }

InertialParam parse_param(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("malformed param JSON: ") + e.what());
    }
    return param_from_json(j);
}

std::string describe(const InertialParam& x) {
    std::ostringstream os;
    if (x.is_irreducible()) {
        os << "irr(a=" << x.irr().a << ",b=" << x.irr().b << ")";
    } else {
        const auto& r = x.red();
        os << "red(m=" << r.twist << ",r=" << r.ratio << "," << shape_name(r.shape) << ","
           << (r.lambda_equal ? "eq" : "neq") << ")";
    }
    return os.str();
}

}  // namespace serrewt
