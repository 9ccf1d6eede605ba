#include "clc/unipoly.hpp"

#include <sstream>

namespace clc {

UniPoly UniPoly::monomial(const FieldCtx* ctx, uint32_t c, int k) {
    std::vector<uint32_t> v(static_cast<size_t>(k) + 1, 0);
    v[static_cast<size_t>(k)] = c;
    return {ctx, std::move(v)};
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    check(o);
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = ctx_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return {ctx_, std::move(r)};
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    check(o);
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = ctx_->sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return {ctx_, std::move(r)};
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return UniPoly(ctx_);
    std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        uint32_t a = c_[i];
        if (a == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] = ctx_->add(r[i + j], ctx_->mul(a, o.c_[j]));
        }
    }
    return {ctx_, std::move(r)};
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& g) const {
    check(g);
    if (g.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
    int dg = g.degree();
    if (degree() < dg) return {UniPoly(ctx_), *this};

    // nonzero terms of g below the leading one
    std::vector<std::pair<int, uint32_t>> terms;
    for (int i = 0; i < dg; ++i)
        if (g.c_[static_cast<size_t>(i)] != 0) terms.emplace_back(i, g.c_[static_cast<size_t>(i)]);
    uint32_t lead_inv = ctx_->inv(g.leading());

    std::vector<uint32_t> rem = c_;
    std::vector<uint32_t> quot(static_cast<size_t>(degree() - dg) + 1, 0);
    for (int d = degree(); d >= dg; --d) {
        uint32_t c = rem[static_cast<size_t>(d)];
        if (c == 0) continue;
        uint32_t q = ctx_->mul(c, lead_inv);
        quot[static_cast<size_t>(d - dg)] = q;
        rem[static_cast<size_t>(d)] = 0;
        for (auto [i, gc] : terms) {
            size_t k = static_cast<size_t>(d - dg + i);
            rem[k] = ctx_->sub(rem[k], ctx_->mul(q, gc));
        }
    }
    return {UniPoly(ctx_, std::move(quot)), UniPoly(ctx_, std::move(rem))};
}

UniPoly UniPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    uint32_t s = ctx_->inv(leading());
    std::vector<uint32_t> r(c_);
    for (auto& v : r) v = ctx_->mul(v, s);
    return {ctx_, std::move(r)};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    a.check(b);
    while (!b.is_zero()) {
        UniPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly UniPoly::powmod(const UniPoly& base, uint64_t e, const UniPoly& m) {
    base.check(m);
    if (m.is_zero()) throw DivisionByZeroPoly("powmod with zero modulus");
    UniPoly result = UniPoly::constant(base.ctx_, 1).mod(m);
    UniPoly b = base.mod(m);
    while (e) {
        if (e & 1) result = (result * b).mod(m);
        e >>= 1;
        if (e) b = (b * b).mod(m);
    }
    return result;
}

UniPoly UniPoly::pow(uint64_t e) const {
    UniPoly result = UniPoly::constant(ctx_, 1);
    UniPoly b = *this;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

uint32_t UniPoly::eval(uint32_t x) const {
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = ctx_->add(ctx_->mul(acc, x), c_[i]);
    return acc;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        uint32_t c = coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

UniPoly linear_power(const FieldCtx* ctx, uint32_t alpha, uint32_t beta, uint64_t e) {
    uint64_t p = static_cast<uint64_t>(ctx->characteristic());
    UniPoly result = UniPoly::constant(ctx, 1);
    uint64_t pk = 1;
    while (e) {
        int digit = static_cast<int>(e % p);
        if (digit > 0) {
            // (alpha^{p^k} x^{p^k} + beta^{p^k}) ^ digit
            UniPoly factor(ctx);
            {
                std::vector<uint32_t> v(pk + 1, 0);
                v[0] = ctx->pow(beta, pk);
                v[pk] = ctx->pow(alpha, pk);
                factor = UniPoly(ctx, std::move(v));
            }
            for (int i = 0; i < digit; ++i) result = result * factor;
        }
        e /= p;
        pk *= p;
    }
    return result;
}

}  // namespace clc
