#ifndef WARD_IO_HPP
#define WARD_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include <ward/calculus.hpp>
#include <ward/error.hpp>
#include <ward/operator_algebra.hpp>
#include <ward/poly.hpp>
#include <ward/product_chain.hpp>
#include <ward/psi_context.hpp>
#include <ward/rational.hpp>
#include <ward/scalar.hpp>
#include <ward/series.hpp>

// JSON and text formats:
//   Rational  "p/q" or "p"
//   Poly      ["c0", "c1", ...] indexed by degree
//   RatFunc   {"num": Poly, "den": Poly}
//   Series    {"psi": <psi-spec>, "order": N, "coeffs": [Scalar...]}
//   Report    {"rule", "psi", "order", "equal", "first_diff", "lhs", "rhs"}
namespace ward::io
{

using json = nlohmann::json;

inline json to_json(const Poly &p)
{
    json out = json::array();
    for (const auto &c : p.coeffs()) out.push_back(c.str());
    return out;
}

inline json to_json(const Scalar &s)
{
    if (s.is_rational()) return s.as_rational().str();
    return json{{"num", to_json(s.as_ratfunc().num())}, {"den", to_json(s.as_ratfunc().den())}};
}

inline Poly poly_from_json(const json &j)
{
    if (!j.is_array()) throw error(errc::parse_error, "polynomial must be an array of rational strings");
    std::vector<Rational> c;
    for (const auto &e : j) {
        if (!e.is_string()) throw error(errc::parse_error, "polynomial coefficient must be a string");
        c.push_back(Rational::parse(e.get<std::string>()));
    }
    return Poly(std::move(c));
}

// A bare rational, or a {"num","den"} object for Q(q).
inline Scalar scalar_from_json(const json &j)
{
    if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        return Scalar(RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den"))));
    }
    throw error(errc::parse_error, "scalar must be a rational string or a {num, den} object");
}

// Canonical form of a psi-spec string, e.g. "q=6/4" -> "q=3/2".
inline std::string canonical_spec(std::string_view spec)
{
    return PsiContext::from_spec(spec, 1)->spec();
}

inline json to_json(const WardSeries &f)
{
    json coeffs = json::array();
    for (const auto &c : f.coeffs()) coeffs.push_back(to_json(c));
    return json{{"psi", f.ctx().spec()}, {"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

// Series bound to an existing context; the file's psi-spec must name it.
inline WardSeries series_from_json(const json &j, const PsiContextPtr &ctx)
{
    try {
        const std::string psi = j.at("psi").get<std::string>();
        if (canonical_spec(psi) != ctx->spec()) {
            throw error(errc::context_mismatch, "series over '" + psi + "' used with '" + ctx->spec() + "'");
        }
        const auto &coeffs = j.at("coeffs");
        if (!coeffs.is_array()) throw error(errc::parse_error, "coeffs must be an array");
        std::vector<Scalar> v;
        for (const auto &c : coeffs) v.push_back(scalar_from_json(c));
        if (j.contains("order") && j.at("order").get<std::size_t>() + 1 != v.size()) {
            throw error(errc::parse_error, "order does not match the number of coefficients");
        }
        return WardSeries(ctx, std::move(v));
    } catch (const json::exception &e) {
        throw error(errc::parse_error, std::string("malformed series JSON: ") + e.what());
    }
}

// Inline shorthand "[a0,a1,...]" of rational strings.
inline WardSeries series_from_inline(std::string_view text, const PsiContextPtr &ctx)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw error(errc::parse_error, "inline series must look like [a0,a1,...]");
    }
    text = text.substr(1, text.size() - 2);
    std::vector<Scalar> v;
    while (!trim(text).empty()) {
        const auto comma = text.find(',');
        v.emplace_back(Rational::parse(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (v.empty()) throw error(errc::parse_error, "inline series has no coefficients");
    return WardSeries(ctx, std::move(v));
}

// "[(i,j),(k,l),...]"; "[]" is the ordinary product.
inline ProductChain parse_chain(std::string_view text, Flavor flavor = Flavor::asterisk)
{
    std::vector<IndexPair> pairs;
    std::size_t pos = 0;
    auto fail = [&] { throw error(errc::parse_error, "chain must look like [(i,j),...]: '" + std::string(text) + "'"); };
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto number = [&]() -> std::size_t {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (start == pos) fail();
        return std::stoul(std::string(text.substr(start, pos - start)));
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) fail();
        ++pos;
    };
    expect('[');
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            expect('(');
            const std::size_t i = number();
            expect(',');
            const std::size_t j = number();
            expect(')');
            pairs.push_back({i, j});
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(']');
            break;
        }
    }
    skip_ws();
    if (pos != text.size()) fail();
    return ProductChain(std::move(pairs), flavor);
}

inline json to_json(const RuleReport &r)
{
    json lhs = json::array(), rhs = json::array();
    for (const auto &c : r.lhs) lhs.push_back(to_json(c));
    for (const auto &c : r.rhs) rhs.push_back(to_json(c));
    json out{{"rule", r.rule}, {"psi", r.psi}, {"order", r.order}, {"equal", r.equal}};
    out["first_diff"] = r.first_diff ? json(*r.first_diff) : json(nullptr);
    out["expect_equal"] = r.expect_equal;
    out["lhs"] = std::move(lhs);
    out["rhs"] = std::move(rhs);
    return out;
}

// Pascal-table rows {"n", "k", "op"} for 0 <= k <= n <= n_max.
inline json pascal_json(const BinomialOperatorTable &table)
{
    json rows = json::array();
    for (std::size_t n = 0; n <= table.n_max(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) rows.push_back(json{{"n", n}, {"k", k}, {"op", table(n, k).str()}});
    }
    return rows;
}

} // namespace ward::io

#endif
