#include "clc/lifted.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "clc/repair.hpp"

namespace clc {

std::string to_string(MonomialStatus s) {
    switch (s) {
        case MonomialStatus::Typical:
            return "typical";
        case MonomialStatus::Sporadic:
            return "sporadic";
        case MonomialStatus::NotGood:
            return "not-good";
    }
    return "?";
}

MonomialStatus monomial_status_from_string(const std::string& s) {
    if (s == "typical") return MonomialStatus::Typical;
    if (s == "sporadic") return MonomialStatus::Sporadic;
    if (s == "not-good") return MonomialStatus::NotGood;
    throw BadSpec("unknown monomial status: " + s);
}

std::string to_string(CodeMode m) { return m == CodeMode::Monomial ? "monomial" : "exact"; }

bool LiftedCode::membership_test(const std::vector<uint32_t>& word) const {
    if (word.size() != params.n)
        throw LengthMismatch("word length " + std::to_string(word.size()) + ", code length " +
                             std::to_string(params.n));
    return row_space_.contains(word);
}

std::vector<Monomial> representative_range(const PlaneCurve& curve) {
    uint64_t Q = curve.ctx()->size();
    uint64_t amax, bmax;
    if (curve.is_norm_trace()) {
        uint64_t q = curve.sub_q();
        amax = (Q - 1) / (q - 1) - 1;
        bmax = Q / q - 1;  // q^{r-1} - 1
    } else {
        amax = Q - 1;
        bmax = Q - 1;
    }
    std::vector<Monomial> range;
    range.reserve((amax + 1) * (bmax + 1));
    for (uint64_t a = 0; a <= amax; ++a)
        for (uint64_t b = 0; b <= bmax; ++b)
            range.push_back({static_cast<int>(a), static_cast<int>(b)});
    return range;
}

UniPoly reduce_on_line(const BiPoly& f, const PlaneCurve& curve, Line L) {
    if (f.ctx() != curve.ctx()) throw ContextMismatch("function over a different field");
    UniPoly m = curve.restrict_to_line(L);
    return f.substitute_line(L.alpha, L.beta).mod(m);
}

namespace {

// line restrictions m_{alpha,beta} cached per classification/build; for
// norm-trace curves the polynomial depends only on (alpha, Tr(beta))
struct RestrictionCache {
    const PlaneCurve& curve;
    std::unordered_map<uint64_t, UniPoly> memo;

    const UniPoly& get(Line L) {
        const FieldCtx* F = curve.ctx();
        uint64_t key = (static_cast<uint64_t>(L.alpha) << 32) |
                       (curve.is_norm_trace() ? F->rel_trace(L.beta) : L.beta);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, curve.restrict_to_line(L)).first;
        return it->second;
    }
};

std::vector<Line> materialize(const LineFamily& family, const FieldCtx& F) {
    std::vector<Line> lines;
    family.for_each(F, [&](Line l) { lines.push_back(l); });
    return lines;
}

UniPoly monomial_on_line(const FieldCtx* F, Monomial m, Line L) {
    return linear_power(F, L.alpha, L.beta, static_cast<uint64_t>(m.b)) *
           UniPoly::monomial(F, 1, m.a);
}

}  // namespace

std::vector<MonomialClass> classify_monomials(const CodePlan& plan, bool exhaustive) {
    if (plan.B <= 2) throw DegeneratePlan("B = " + std::to_string(plan.B) +
                                          " leaves no nonconstant low-degree polynomials");
    const PlaneCurve& curve = plan.curve;
    const FieldCtx* F = curve.ctx();
    std::vector<Line> lines = materialize(plan.family, *F);
    RestrictionCache cache{curve, {}};

    std::vector<MonomialClass> out;
    for (Monomial m : representative_range(curve)) {
        MonomialClass mc{m, MonomialStatus::NotGood, -1};
        if (m.a + m.b <= plan.B - 2) {
            // degree a+b < B <= deg m_{alpha,beta} on every family line, so the
            // restriction is already reduced and has degree exactly a+b
            mc.status = MonomialStatus::Typical;
            mc.worst_line_degree = m.a + m.b;
        } else {
            int worst = -1;
            for (Line l : lines) {
                UniPoly red = monomial_on_line(F, m, l).mod(cache.get(l));
                worst = std::max(worst, red.degree());
                if (!exhaustive && worst > plan.B - 2) break;
            }
            mc.worst_line_degree = worst;
            mc.status = worst <= plan.B - 2 ? MonomialStatus::Sporadic : MonomialStatus::NotGood;
        }
        out.push_back(mc);
    }
    return out;
}

Mat monomial_eval_matrix(const PlaneCurve& curve, const std::vector<Point>& points,
                         const std::vector<Monomial>& monomials) {
    const FieldCtx* F = curve.ctx();
    Mat m(F, monomials.size(), points.size());
    for (size_t i = 0; i < monomials.size(); ++i) {
        for (size_t j = 0; j < points.size(); ++j) {
            m.at(i, j) = F->mul(F->pow(points[j].x, static_cast<uint64_t>(monomials[i].a)),
                                F->pow(points[j].y, static_cast<uint64_t>(monomials[i].b)));
        }
    }
    return m;
}

namespace {

void check_line_sizes(const CodePlan& plan) {
    const PlaneCurve& curve = plan.curve;
    const FieldCtx* F = curve.ctx();
    if (curve.is_norm_trace() && plan.family.selector() != LineFamily::Selector::Explicit) {
        for (const auto& rec : intersection_table(curve, plan.family)) {
            if (rec.count < static_cast<uint64_t>(plan.B))
                throw LocalityUnsatisfiable(
                    "line class (" + std::to_string(rec.norm_class) + "," +
                    std::to_string(rec.trace_class) + ") meets the curve in " +
                    std::to_string(rec.count) + " < B = " + std::to_string(plan.B) + " points");
        }
        return;
    }
    std::vector<Line> lines = materialize(plan.family, *F);
    for (Line l : lines) {
        uint64_t n = intersection_count(curve, l, CountMethod::Brute);
        if (n < static_cast<uint64_t>(plan.B))
            throw LocalityUnsatisfiable("line (" + std::to_string(l.alpha) + "," +
                                        std::to_string(l.beta) + ") meets the curve in " +
                                        std::to_string(n) + " < B = " + std::to_string(plan.B) +
                                        " points");
    }
}

}  // namespace

LiftedCode build_code(const CodePlan& plan) {
    if (plan.B <= 2) throw DegeneratePlan("B = " + std::to_string(plan.B));
    const PlaneCurve& curve = plan.curve;
    const FieldCtx* F = curve.ctx();
    check_line_sizes(plan);

    std::vector<Point> points = curve.enumerate_affine_points();
    std::vector<MonomialClass> classes = classify_monomials(plan);
    std::vector<MonomialClass> good;
    for (const auto& mc : classes)
        if (mc.status != MonomialStatus::NotGood) good.push_back(mc);

    std::vector<Monomial> good_monomials;
    for (const auto& mc : good) good_monomials.push_back(mc.m);

    Mat generator(F, 0, points.size());
    std::vector<Monomial> generator_monomials;
    std::optional<uint64_t> k_monomial;

    if (plan.mode == CodeMode::Monomial) {
        Mat evals = monomial_eval_matrix(curve, points, good_monomials);
        std::vector<size_t> kept = independent_rows(evals);
        if (curve.is_norm_trace() && kept.size() != good_monomials.size())
            throw BoundViolated("good-monomial evaluations are rank deficient: " +
                                std::to_string(kept.size()) + " of " +
                                std::to_string(good_monomials.size()));
        for (size_t i : kept) {
            std::vector<uint32_t> row(evals.row(i), evals.row(i) + evals.cols());
            generator.append_row(row);
            generator_monomials.push_back(good_monomials[i]);
        }
    } else {
        // Exact mode: coefficients over the representative range subject to
        // vanishing of reduction coefficients t^{B-1} .. t^{deg m - 1} on
        // every family line.
        std::vector<Monomial> range = representative_range(curve);
        std::vector<Line> lines = materialize(plan.family, *F);
        RestrictionCache cache{curve, {}};

        size_t rows = 0;
        for (Line l : lines)
            rows += static_cast<size_t>(std::max(0, cache.get(l).degree() - (plan.B - 1)));
        Mat constraints(F, rows, range.size());
        size_t r0 = 0;
        for (Line l : lines) {
            const UniPoly& m = cache.get(l);
            int degm = m.degree();
            int span = std::max(0, degm - (plan.B - 1));
            if (span == 0) continue;
            for (size_t j = 0; j < range.size(); ++j) {
                UniPoly red = monomial_on_line(F, range[j], l).mod(m);
                for (int d = plan.B - 1; d < degm; ++d)
                    constraints.at(r0 + static_cast<size_t>(d - (plan.B - 1)), j) = red.coeff(d);
            }
            r0 += static_cast<size_t>(span);
        }

        std::vector<std::vector<uint32_t>> kernel = kernel_basis(std::move(constraints));
        Mat evals = monomial_eval_matrix(curve, points, range);
        Mat rows_mat(F, 0, points.size());
        for (const auto& coeffs : kernel) {
            std::vector<uint32_t> row(points.size(), 0);
            for (size_t j = 0; j < range.size(); ++j) {
                if (coeffs[j] == 0) continue;
                for (size_t c = 0; c < points.size(); ++c)
                    row[c] = F->add(row[c], F->mul(coeffs[j], evals.at(j, c)));
            }
            rows_mat.append_row(row);
        }
        std::vector<size_t> kept = independent_rows(rows_mat);
        if (curve.is_norm_trace() && kept.size() != kernel.size())
            throw BoundViolated("exact-mode evaluations are rank deficient");
        for (size_t i : kept) {
            std::vector<uint32_t> row(rows_mat.row(i), rows_mat.row(i) + rows_mat.cols());
            generator.append_row(row);
        }
        k_monomial = good_monomials.size();
        if (generator.rows() < good_monomials.size())
            throw BoundViolated("exact-mode dimension below the monomial dimension");
    }

    LiftedCode code(plan, std::move(points), std::move(generator));
    code.good_monomials = std::move(good);
    code.generator_monomials = std::move(generator_monomials);

    CodeParams& p = code.params;
    p.n = code.points.size();
    p.k = code.generator.rows();
    p.k_monomial = k_monomial;
    p.locality = plan.B - 1;
    p.rate = static_cast<double>(p.k) / static_cast<double>(p.n);
    for (const auto& mc : code.good_monomials)
        if (mc.status == MonomialStatus::Typical) ++p.typical_count;

    if (curve.is_norm_trace()) {
        uint64_t Q = F->size();
        uint64_t q = curve.sub_q();
        int r = curve.ext_r();
        if (plan.family.selector() == LineFamily::Selector::All)
            p.claimed_availability = Q - 1;
        else if (plan.family.selector() == LineFamily::Selector::TraceNonzero)
            p.claimed_availability = Q - Q / q - 2;
        if (plan.family.selector() == LineFamily::Selector::All &&
            plan.B == bound_B(q, r, false)) {
            double M = std::pow(static_cast<double>(q), r - 1) -
                       static_cast<double>((r - 1) * (q - 1)) *
                           std::pow(static_cast<double>(q), (r - 2) / 2.0);
            p.closed_form_dimension = M * (M + 1) / 2.0;
        }
    }

    p.availability = availability_audit(code).availability;
    return code;
}

std::string parameter_report(const LiftedCode& code) {
    const CodeParams& p = code.params;
    std::ostringstream os;
    os << "curve: " << code.plan.curve.describe() << "\n";
    os << "family: " << code.plan.family.name() << ", B = " << code.plan.B
       << ", mode = " << to_string(code.plan.mode) << "\n";
    os << "n = " << p.n << "\n";
    os << "k = " << p.k;
    if (p.k_monomial) os << " (monomial subcode: " << *p.k_monomial << ")";
    os << "\n";
    os << "locality = " << p.locality << "\n";
    os << "availability (measured) = " << p.availability;
    if (p.claimed_availability) {
        os << ", claimed = " << *p.claimed_availability;
        if (*p.claimed_availability != p.availability) os << "  [deviates]";
    }
    os << "\n";
    os << "rate = " << p.rate << "\n";
    os << "typical monomials = " << p.typical_count
       << ", sporadic = " << (code.good_monomials.size() - p.typical_count) << "\n";
    if (p.closed_form_dimension)
        os << "closed-form dimension bound = " << *p.closed_form_dimension
           << " (exact good-monomial count " << code.good_monomials.size()
           << " is authoritative)\n";
    return os.str();
}

}  // namespace clc
