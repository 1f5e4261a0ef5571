#ifndef WARD_PRODUCT_CHAIN_HPP
#define WARD_PRODUCT_CHAIN_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <ward/error.hpp>
#include <ward/rational.hpp>
#include <ward/scalar.hpp>

namespace ward
{

// Index pair (i,j) of a Fontane product; always j < i.
struct IndexPair {
    std::size_t i;
    std::size_t j;

    friend auto operator<=>(const IndexPair &, const IndexPair &) = default;
};

// Asterisk weights term (n,k) by F(n+i, k+j); Star by F(n+i, n-k+j).
enum class Flavor { asterisk, star };

// One monomial of the product algebra: coefficient times a concatenation of
// Fontane products of a single flavor. No pairs means the ordinary product;
// such a chain is flavor-neutral and always stored as Asterisk.
class ProductChain
{
public:
    ProductChain() : coefficient_(Rational(1)) {}

    ProductChain(std::vector<IndexPair> pairs, Flavor flavor = Flavor::asterisk, Scalar coefficient = Rational(1))
        : coefficient_(std::move(coefficient)), flavor_(flavor), pairs_(std::move(pairs))
    {
        for (const auto &p : pairs_) {
            if (p.j >= p.i) {
                throw error(errc::bad_indices, "product index (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                                   ") needs j < i");
            }
        }
        if (pairs_.empty()) flavor_ = Flavor::asterisk;
    }

    ProductChain(std::initializer_list<IndexPair> pairs, Flavor flavor = Flavor::asterisk)
        : ProductChain(std::vector<IndexPair>(pairs), flavor)
    {
    }

    // The ordinary product (the empty concatenation).
    static ProductChain ordinary()
    {
        return ProductChain();
    }

    const Scalar &coefficient() const noexcept
    {
        return coefficient_;
    }
    Flavor flavor() const noexcept
    {
        return flavor_;
    }
    std::span<const IndexPair> pairs() const noexcept
    {
        return pairs_;
    }
    bool is_ordinary() const noexcept
    {
        return pairs_.empty();
    }

    // Largest i over the pairs (0 for the ordinary product): the kernel
    // headroom this chain needs above the series order.
    std::size_t max_shift() const noexcept
    {
        std::size_t m = 0;
        for (const auto &p : pairs_) m = std::max(m, p.i);
        return m;
    }

    ProductChain with_coefficient(Scalar c) const
    {
        ProductChain r = *this;
        r.coefficient_ = std::move(c);
        return r;
    }

    // Same chain with pairs in ascending order. Kernels are commuting
    // scalars, so this does not change the action.
    ProductChain sorted() const
    {
        ProductChain r = *this;
        std::sort(r.pairs_.begin(), r.pairs_.end());
        return r;
    }

    // Text form: "*(1,0)*(2,1)", "#(i,j)" for star, "*inf" for the ordinary
    // product, prefixed with "c·" when the coefficient is not one.
    std::string str() const
    {
        std::string body;
        if (pairs_.empty()) {
            body = "*inf";
        } else {
            const char sym = flavor_ == Flavor::asterisk ? '*' : '#';
            for (const auto &p : pairs_) {
                body += sym;
                body += "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
            }
        }
        if (coefficient_.is_one()) return body;
        std::string c = coefficient_.str();
        if (c.find_first_of("+-/q", 1) != std::string::npos) c = "(" + c + ")";
        return c + "·" + body;
    }

    friend bool operator==(const ProductChain &a, const ProductChain &b)
    {
        return a.flavor_ == b.flavor_ && a.pairs_ == b.pairs_ && a.coefficient_.same_variant(b.coefficient_) &&
               a.coefficient_ == b.coefficient_;
    }

private:
    Scalar coefficient_;
    Flavor flavor_ = Flavor::asterisk;
    std::vector<IndexPair> pairs_;
};

} // namespace ward

#endif
