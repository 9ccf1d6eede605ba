#ifndef CLC_FIELD_HPP
#define CLC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clc/errors.hpp"

namespace clc {

/// Marks the sub-extension F_q inside F_{q^r}: q = p^s and the full degree is
/// m = s*r. Relative trace and norm are taken with respect to this tower.
struct Tower {
    int s = 1;
    int r = 1;
    bool operator==(const Tower&) const = default;
};

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// The field F_{p^m} with elements in polynomial basis over the canonical
/// modulus (lexicographically smallest monic irreducible of degree m, with
/// coefficient vectors compared as base-p integers).
///
/// Elements are addressed by their canonical index: the base-p integer value
/// of the coefficient vector, ascending degree. Index order is the canonical
/// element order used everywhere (enumeration, serialization, tie-breaks).
///
/// Immutable after construction and safe to share across threads.
class FieldCtx {
   public:
    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return m_; }
    uint64_t size() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    const std::optional<Tower>& tower() const noexcept { return tower_; }

    /// q = p^s of the declared tower. Throws NoTowerDeclared without one.
    uint64_t subfield_size() const;
    int tower_r() const;

    bool same(const FieldCtx& other) const noexcept { return this == &other; }

    // Arithmetic on canonical indices. All operations are total on [0, q)
    // except inv(0), which throws DivisionByZero.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    /// Square-and-multiply via the log table; pow(0, 0) = 1.
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// Element with a given prime-field residue as constant coefficient.
    uint32_t from_residue(int64_t c) const;

    /// Coefficient vector (ascending, length m) of an element.
    std::vector<int> coeffs(uint32_t a) const;
    uint32_t from_coeffs(const std::vector<int>& c) const;

    // Relative trace/norm for the extension F_{q^r} / F_q. Both land in the
    // subfield. Throw NoTowerDeclared if no tower is present.
    uint32_t rel_trace(uint32_t a) const;
    uint32_t rel_norm(uint32_t a) const;
    /// True iff a is fixed by the q-power Frobenius (a lies in F_q).
    bool in_subfield(uint32_t a) const;

    /// #{gamma : Tr(gamma) = trace_val, Norm(gamma) = norm_val}, by exhaustive
    /// enumeration. Arguments must lie in the subfield (ArgNotInSubfield).
    uint64_t fiber_count(uint32_t trace_val, uint32_t norm_val) const;

    std::string describe() const;

    /// Fields above this size are rejected (lookup tables become impractical).
    static constexpr uint64_t kMaxSize = uint64_t(1) << 22;

   private:
    friend Field make_field(int, int, std::optional<Tower>);
    friend Field make_field_with_modulus(int, int, std::vector<int>, std::optional<Tower>);
    static Field create(int p, int m, std::vector<int> modulus, std::optional<Tower> tower);
    FieldCtx() = default;
    void build_tables();

    int p_ = 0;
    int m_ = 0;
    uint64_t q_ = 0;
    std::vector<int> modulus_;  // ascending, monic, length m+1
    std::optional<Tower> tower_;

    // exp_ has length 2(q-1) so sums of two logs index it directly.
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;   // log_[0] unused
    std::vector<uint32_t> zech_;  // p > 2 only: zech_[k] = log(1 + g^k), kZechZero if none
    uint64_t group_ = 0;          // q - 1
    uint64_t half_ = 0;           // log of -1 (p > 2)
    static constexpr uint32_t kZechZero = 0xFFFFFFFFu;
};

/// Construct F_{p^m} with the canonical modulus. Errors: NonPrimeCharacteristic,
/// TowerMismatch (s*r != m), FieldTooLarge.
Field make_field(int p, int m, std::optional<Tower> tower = std::nullopt);

/// Construct with an explicit modulus (ascending coefficients, monic, degree m,
/// irreducible over F_p). Used when loading serialized field specs.
Field make_field_with_modulus(int p, int m, std::vector<int> modulus,
                              std::optional<Tower> tower = std::nullopt);

/// Value-semantics wrapper pairing an element with its context. Mixing
/// contexts throws ContextMismatch.
class FElem {
   public:
    FElem() = default;
    FElem(const FieldCtx* ctx, uint32_t v) : ctx_(ctx), v_(v) {}
    FElem(const Field& f, uint32_t v) : ctx_(f.get()), v_(v) {}

    uint32_t value() const noexcept { return v_; }
    const FieldCtx* ctx() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend FElem operator+(const FElem& a, const FElem& b) {
        check(a, b);
        return {a.ctx_, a.ctx_->add(a.v_, b.v_)};
    }
    friend FElem operator-(const FElem& a, const FElem& b) {
        check(a, b);
        return {a.ctx_, a.ctx_->sub(a.v_, b.v_)};
    }
    friend FElem operator*(const FElem& a, const FElem& b) {
        check(a, b);
        return {a.ctx_, a.ctx_->mul(a.v_, b.v_)};
    }
    friend FElem operator/(const FElem& a, const FElem& b) {
        check(a, b);
        return {a.ctx_, a.ctx_->mul(a.v_, b.ctx_->inv(b.v_))};
    }
    FElem operator-() const { return {ctx_, ctx_->neg(v_)}; }
    FElem inv() const { return {ctx_, ctx_->inv(v_)}; }
    FElem pow(uint64_t e) const { return {ctx_, ctx_->pow(v_, e)}; }
    FElem trace() const { return {ctx_, ctx_->rel_trace(v_)}; }
    FElem norm() const { return {ctx_, ctx_->rel_norm(v_)}; }

    friend bool operator==(const FElem& a, const FElem& b) {
        check(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FElem& a, const FElem& b) { return !(a == b); }

   private:
    static void check(const FElem& a, const FElem& b) {
        if (a.ctx_ != b.ctx_) throw ContextMismatch("operands from different fields");
    }
    const FieldCtx* ctx_ = nullptr;
    uint32_t v_ = 0;
};

}  // namespace clc

#endif
