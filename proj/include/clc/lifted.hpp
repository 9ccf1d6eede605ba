#ifndef CLC_LIFTED_HPP
#define CLC_LIFTED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clc/curve.hpp"
#include "clc/linalg.hpp"

namespace clc {

/// M_{a,b} = x^a y^b.
struct Monomial {
    int a = 0;
    int b = 0;
    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const { return a != o.a ? a < o.a : b < o.b; }
};

enum class MonomialStatus { Typical, Sporadic, NotGood };

std::string to_string(MonomialStatus s);
MonomialStatus monomial_status_from_string(const std::string& s);

struct MonomialClass {
    Monomial m;
    MonomialStatus status = MonomialStatus::NotGood;
    /// Max over checked family lines of deg(reduction of M on the line); for
    /// not-good monomials under early exit this is the first witness degree
    /// (> B-2), not necessarily the family-wide maximum.
    int worst_line_degree = -1;
};

enum class CodeMode { Monomial, Exact };

std::string to_string(CodeMode m);

/// Everything needed to build one code: the curve, the line family, the
/// degree bound B, and the construction mode.
struct CodePlan {
    PlaneCurve curve;
    LineFamily family = LineFamily::all();
    int B = 0;
    CodeMode mode = CodeMode::Monomial;
};

struct CodeParams {
    uint64_t n = 0;
    uint64_t k = 0;                       // dimension of the built generator
    std::optional<uint64_t> k_monomial;   // Exact mode: dimension of the monomial subcode
    int locality = 0;                     // B - 1
    uint64_t availability = 0;            // measured by the audit
    std::optional<uint64_t> claimed_availability;
    double rate = 0.0;
    uint64_t typical_count = 0;
    std::optional<double> closed_form_dimension;  // see parameter_report
};

class LiftedCode {
   public:
    CodePlan plan;
    std::vector<Point> points;          // coordinate order of the code
    std::vector<MonomialClass> good_monomials;
    std::vector<Monomial> generator_monomials;  // row <-> monomial (Monomial mode)
    Mat generator;                      // k x n, full row rank
    CodeParams params;

    const FieldCtx* ctx() const { return plan.curve.ctx(); }
    uint64_t length() const { return params.n; }
    uint64_t dimension() const { return params.k; }

    /// True iff word lies in the row space of the generator.
    bool membership_test(const std::vector<uint32_t>& word) const;

    LiftedCode(CodePlan p, std::vector<Point> pts, Mat gen)
        : plan(std::move(p)), points(std::move(pts)), generator(std::move(gen)),
          row_space_(generator) {}

   private:
    RowSpace row_space_;
};

/// Monomials spanning the function space searched for good monomials:
/// a <= (q^r-1)/(q-1) - 1 and b <= q^{r-1} - 1 for norm-trace curves,
/// a, b <= field size - 1 for custom curves. Ordered a-major.
std::vector<Monomial> representative_range(const PlaneCurve& curve);

/// Substitute y -> alpha x + beta in f and reduce modulo m_{alpha,beta}.
/// The degree of the result is deg_{alpha,beta}(f); -1 for the zero remainder.
UniPoly reduce_on_line(const BiPoly& f, const PlaneCurve& curve, Line L);

/// Classify every representative-range monomial against the plan's family:
/// good iff the on-line reduction degree stays <= B-2 on every family line.
/// Typical monomials (a+b <= B-2) are good on any family by degree alone.
/// With exhaustive = false the line scan stops at the first witness of
/// non-goodness; exhaustive = true always scans the whole family.
/// Throws DegeneratePlan when B <= 2.
std::vector<MonomialClass> classify_monomials(const CodePlan& plan, bool exhaustive = false);

/// Evaluation matrix: one row per monomial, one column per point.
Mat monomial_eval_matrix(const PlaneCurve& curve, const std::vector<Point>& points,
                         const std::vector<Monomial>& monomials);

/// Build the code. Monomial mode evaluates the good monomials; Exact mode
/// solves for all functions (in the representative-range coefficient space)
/// whose reductions vanish in degrees B-1 and above on every family line.
/// Errors: DegeneratePlan (B <= 2), LocalityUnsatisfiable (a family line
/// meets the curve in fewer than B points).
LiftedCode build_code(const CodePlan& plan);

std::string parameter_report(const LiftedCode& code);

}  // namespace clc

#endif
