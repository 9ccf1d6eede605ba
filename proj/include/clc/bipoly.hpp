#ifndef CLC_BIPOLY_HPP
#define CLC_BIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "clc/field.hpp"
#include "clc/unipoly.hpp"

namespace clc {

/// Bivariate polynomial over a field: exponent pair (a, b) -> nonzero
/// coefficient. Zero coefficients are never stored.
class BiPoly {
   public:
    using Exp = std::pair<int, int>;

    explicit BiPoly(const FieldCtx* ctx) : ctx_(ctx) {}

    const FieldCtx* ctx() const noexcept { return ctx_; }
    const std::map<Exp, uint32_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void set_term(int a, int b, uint32_t c) {
        if (c == 0)
            terms_.erase({a, b});
        else
            terms_[{a, b}] = c;
    }
    void add_term(int a, int b, uint32_t c) { set_term(a, b, ctx_->add(coeff(a, b), c)); }
    uint32_t coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? 0 : it->second;
    }

    int total_degree() const;
    /// Degree of the second-highest-degree term (distinct total degrees);
    /// -1 when all terms share one degree.
    int second_degree() const;

    uint32_t eval(uint32_t x, uint32_t y) const;

    /// Substitute y -> alpha*x + beta and expand to a univariate polynomial.
    UniPoly substitute_line(uint32_t alpha, uint32_t beta) const;

    std::string to_string() const;

   private:
    const FieldCtx* ctx_;
    std::map<Exp, uint32_t> terms_;
};

}  // namespace clc

#endif
