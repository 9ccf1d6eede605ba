#ifndef CLC_UNIPOLY_HPP
#define CLC_UNIPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clc/field.hpp"

namespace clc {

/// Univariate polynomial over a field, coefficients ascending by canonical
/// element index, trailing zeros stripped. The zero polynomial has degree -1.
class UniPoly {
   public:
    explicit UniPoly(const FieldCtx* ctx) : ctx_(ctx) {}
    UniPoly(const FieldCtx* ctx, std::vector<uint32_t> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
        normalize();
    }

    static UniPoly zero(const FieldCtx* ctx) { return UniPoly(ctx); }
    static UniPoly constant(const FieldCtx* ctx, uint32_t v) { return {ctx, {v}}; }
    /// c * x^k
    static UniPoly monomial(const FieldCtx* ctx, uint32_t c, int k);

    const FieldCtx* ctx() const noexcept { return ctx_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    uint32_t coeff(int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint32_t>& coeffs() const noexcept { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }

    /// (quotient, remainder) with deg(remainder) < deg(g). Exact division over
    /// the field; iterates only the nonzero terms of g, so reduction modulo a
    /// sparse modulus costs O(deg * terms(g)). Throws DivisionByZeroPoly.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& g) const;
    UniPoly mod(const UniPoly& g) const { return divmod(g).second; }

    /// Monic gcd; gcd(f, 0) = monic(f).
    static UniPoly gcd(UniPoly a, UniPoly b);
    UniPoly monic() const;

    /// base^e mod m by square-and-multiply; m must be nonzero.
    static UniPoly powmod(const UniPoly& base, uint64_t e, const UniPoly& m);

    /// Plain power (no modulus); small exponents only.
    UniPoly pow(uint64_t e) const;

    uint32_t eval(uint32_t x) const;

    std::string to_string() const;

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const UniPoly& o) const {
        if (ctx_ != o.ctx_) throw ContextMismatch("polynomials over different fields");
    }
    const FieldCtx* ctx_;
    std::vector<uint32_t> c_;
};

/// (alpha*x + beta)^e expanded over the ctx. Uses the base-p digit
/// decomposition of e: (alpha x + beta)^{p^i} has two terms in characteristic
/// p, so the expansion multiplies at most digit-many small factors.
UniPoly linear_power(const FieldCtx* ctx, uint32_t alpha, uint32_t beta, uint64_t e);

}  // namespace clc

#endif
