#ifndef CLC_CURVE_HPP
#define CLC_CURVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clc/bipoly.hpp"
#include "clc/field.hpp"
#include "clc/unipoly.hpp"

namespace clc {

struct Point {
    uint32_t x = 0;
    uint32_t y = 0;
    bool operator==(const Point&) const = default;
    bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};

/// Non-horizontal, non-vertical affine line y = alpha*x + beta (alpha != 0).
struct Line {
    uint32_t alpha = 1;
    uint32_t beta = 0;
    bool operator==(const Line&) const = default;
    bool operator<(const Line& o) const {
        return alpha != o.alpha ? alpha < o.alpha : beta < o.beta;
    }
};

/// A plane curve F(x, y) = 0 with its field. The norm-trace kind is the curve
/// Tr(y) = Norm(x) for the declared tower F_q inside F_{q^r}; it carries exact
/// genus and enables class-reduced line computations.
class PlaneCurve {
   public:
    enum class Kind { NormTrace, Custom };

    static PlaneCurve norm_trace(Field field);
    static PlaneCurve custom(Field field, BiPoly F);

    Kind kind() const noexcept { return kind_; }
    bool is_norm_trace() const noexcept { return kind_ == Kind::NormTrace; }
    const Field& field() const noexcept { return field_; }
    const FieldCtx* ctx() const noexcept { return field_.get(); }
    const BiPoly& equation() const noexcept { return F_; }
    int total_degree() const noexcept { return total_degree_; }
    int second_degree() const noexcept { return second_degree_; }
    const std::optional<long long>& genus() const noexcept { return genus_; }

    /// Subfield size q and extension degree r (norm-trace kind).
    uint64_t sub_q() const { return ctx()->subfield_size(); }
    int ext_r() const { return ctx()->tower_r(); }

    bool contains(Point P) const { return F_.eval(P.x, P.y) == 0; }

    /// All affine rational points in canonical order (x major, y minor).
    /// Throws EnumerationBudgetExceeded when the scan would exceed `budget`
    /// candidate pairs (or points, for the norm-trace fast path).
    std::vector<Point> enumerate_affine_points(uint64_t budget = uint64_t(1) << 24) const;

    /// m_{alpha,beta}(x) = F(x, alpha*x + beta).
    UniPoly restrict_to_line(Line L) const;

    std::string describe() const;

   private:
    PlaneCurve(Kind k, Field f, BiPoly F) : kind_(k), field_(std::move(f)), F_(std::move(F)) {}
    Kind kind_;
    Field field_;
    BiPoly F_;
    int total_degree_ = 0;
    int second_degree_ = -1;
    std::optional<long long> genus_;
};

enum class CountMethod { Gcd, Brute };

/// Number of distinct rational points on L intersected with the curve.
/// Gcd: deg gcd(m_{alpha,beta}, x^Q - x), with x^Q reduced by powmod.
/// Brute: evaluates the curve equation at every (x0, alpha*x0 + beta).
uint64_t intersection_count(const PlaneCurve& curve, Line L, CountMethod method);

/// Named family of lines, resolved against a field.
class LineFamily {
   public:
    enum class Selector { All, TraceNonzero, TraceZero, Explicit };

    static LineFamily all() { return LineFamily(Selector::All); }
    static LineFamily trace_nonzero() { return LineFamily(Selector::TraceNonzero); }
    static LineFamily trace_zero() { return LineFamily(Selector::TraceZero); }
    static LineFamily explicit_list(std::vector<Line> lines);

    Selector selector() const noexcept { return selector_; }
    const std::vector<Line>& lines() const noexcept { return lines_; }

    bool contains(const FieldCtx& F, Line L) const;
    uint64_t size(const FieldCtx& F) const;

    /// Visit every family line in canonical (alpha, beta) order.
    template <typename Fn>
    void for_each(const FieldCtx& F, Fn&& fn) const {
        if (selector_ == Selector::Explicit) {
            for (Line l : lines_) fn(l);
            return;
        }
        uint64_t Q = F.size();
        for (uint64_t a = 1; a < Q; ++a)
            for (uint64_t b = 0; b < Q; ++b) {
                Line l{static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
                if (selector_ == Selector::All || contains(F, l)) fn(l);
            }
    }

    std::string name() const;

   private:
    explicit LineFamily(Selector s) : selector_(s) {}
    Selector selector_;
    std::vector<Line> lines_;  // sorted, Explicit only
};

/// All family lines meeting the curve in a number of points contained in
/// `sizes`. Uses the class table for norm-trace curves, brute force otherwise.
std::vector<Line> lines_with_intersection_size(const PlaneCurve& curve, const LineFamily& family,
                                               const std::vector<uint64_t>& sizes);

/// Intersection data for one (Norm(alpha), Tr(beta)) class of lines.
struct IntersectionRecord {
    uint32_t norm_class = 0;   // Norm(alpha), nonzero subfield element
    uint32_t trace_class = 0;  // Tr(beta), subfield element
    uint64_t count = 0;        // points on any line of the class
    uint64_t lines_in_class = 0;
};

/// One representative line per class is counted and the result propagated to
/// the class; >= 3 random class members are re-counted by brute force and any
/// disagreement raises ClassReductionUnsound. Records are sorted by
/// (norm_class, trace_class).
std::vector<IntersectionRecord> intersection_table(const PlaneCurve& curve,
                                                   const LineFamily& family,
                                                   CountMethod method = CountMethod::Gcd);

/// Histogram intersection-size -> number of family lines, computed line by
/// line (valid for any curve kind).
std::map<uint64_t, uint64_t> intersection_spectrum(const PlaneCurve& curve,
                                                   const LineFamily& family);

/// Histogram intersection-size -> number of family lines through P.
/// Throws PointNotOnCurve. A precomputed class table may be supplied for
/// norm-trace curves; otherwise one is computed (or lines counted directly
/// for custom curves).
std::map<uint64_t, uint64_t> point_line_profile(const PlaneCurve& curve, Point P,
                                                const LineFamily& family,
                                                const std::vector<IntersectionRecord>* table = nullptr);

/// Lower bound B_{q,r} (refined = false) or B'_{q,r} (refined = true) on
/// intersection numbers, floored to an integer. The square root for odd r is
/// evaluated in integer arithmetic with a verification-by-squaring guard.
/// Throws InvalidExtensionDegree for r < 2.
long long bound_B(uint64_t q, int r, bool refined);

inline bool bound_degenerate(long long B) { return B <= 2; }

struct LowerBoundRow {
    uint32_t norm_class = 0, trace_class = 0;
    uint64_t count = 0;
    long long bound = 0;
    long long slack = 0;
};

struct LowerBoundReport {
    std::vector<LowerBoundRow> rows;
    uint64_t min_count_trace_zero = 0, min_count_trace_nonzero = 0;
    long long bound_trace_zero = 0, bound_trace_nonzero = 0;
    long long global_bound = 0;       // valid for every line of the full family
    uint64_t family_size = 0;         // (q^r - 1) * q^r
    uint64_t lines_through_point = 0;  // q^r - 1
};

/// Checks every class count against the branch lower bound it falls under
/// (trace-zero vs trace-nonzero). Throws BoundViolated if any class count is
/// below its floor bound. Norm-trace curves only.
LowerBoundReport verify_lower_bounds(const PlaneCurve& curve,
                                     const std::vector<IntersectionRecord>* table = nullptr);

}  // namespace clc

#endif
