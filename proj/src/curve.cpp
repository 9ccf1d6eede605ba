#include "clc/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "clc/rng.hpp"

namespace clc {

PlaneCurve PlaneCurve::norm_trace(Field field) {
    const FieldCtx* F = field.get();
    uint64_t q = F->subfield_size();  // throws NoTowerDeclared
    int r = F->tower_r();
    if (r < 2) throw InvalidExtensionDegree("norm-trace curve needs r >= 2");
    uint64_t Q = F->size();
    uint64_t norm_deg = (Q - 1) / (q - 1);

    BiPoly eq(F);
    eq.set_term(static_cast<int>(norm_deg), 0, 1);
    uint32_t minus_one = F->neg(1);
    uint64_t e = 1;
    for (int i = 0; i < r; ++i) {
        eq.set_term(0, static_cast<int>(e), minus_one);
        e *= q;
    }

    PlaneCurve c(Kind::NormTrace, std::move(field), std::move(eq));
    c.total_degree_ = static_cast<int>(norm_deg);
    c.second_degree_ = c.F_.second_degree();
    uint64_t qr1 = Q / q;  // q^{r-1}
    c.genus_ = static_cast<long long>((norm_deg - 1) * (qr1 - 1) / 2);
    return c;
}

PlaneCurve PlaneCurve::custom(Field field, BiPoly F) {
    if (F.is_zero()) throw BadSpec("curve equation must be nonzero");
    if (F.ctx() != field.get()) throw ContextMismatch("curve equation over a different field");
    PlaneCurve c(Kind::Custom, std::move(field), std::move(F));
    c.total_degree_ = c.F_.total_degree();
    c.second_degree_ = c.F_.second_degree();
    return c;
}

std::vector<Point> PlaneCurve::enumerate_affine_points(uint64_t budget) const {
    const FieldCtx* F = ctx();
    uint64_t Q = F->size();
    std::vector<Point> pts;
    if (is_norm_trace()) {
        uint64_t q = sub_q();
        uint64_t expected = Q * (Q / q);  // q^{2r-1}
        if (expected > budget)
            throw EnumerationBudgetExceeded("norm-trace point count " + std::to_string(expected) +
                                            " exceeds budget " + std::to_string(budget));
        // bucket y by trace, then walk x in canonical order
        std::map<uint32_t, std::vector<uint32_t>> by_trace;
        for (uint64_t y = 0; y < Q; ++y)
            by_trace[F->rel_trace(static_cast<uint32_t>(y))].push_back(static_cast<uint32_t>(y));
        pts.reserve(expected);
        for (uint64_t x = 0; x < Q; ++x) {
            uint32_t nx = F->rel_norm(static_cast<uint32_t>(x));
            auto it = by_trace.find(nx);
            if (it == by_trace.end()) continue;
            for (uint32_t y : it->second) pts.push_back({static_cast<uint32_t>(x), y});
        }
        return pts;
    }
    if (Q * Q > budget)
        throw EnumerationBudgetExceeded("scan of " + std::to_string(Q * Q) +
                                        " pairs exceeds budget " + std::to_string(budget));
    for (uint64_t x = 0; x < Q; ++x)
        for (uint64_t y = 0; y < Q; ++y)
            if (F_.eval(static_cast<uint32_t>(x), static_cast<uint32_t>(y)) == 0)
                pts.push_back({static_cast<uint32_t>(x), static_cast<uint32_t>(y)});
    return pts;
}

UniPoly PlaneCurve::restrict_to_line(Line L) const {
    const FieldCtx* F = ctx();
    if (!is_norm_trace()) return F_.substitute_line(L.alpha, L.beta);
    // closed form: x^{(q^r-1)/(q-1)} - Tr(beta) - sum_i alpha^{q^i} x^{q^i}
    uint64_t q = sub_q();
    int r = ext_r();
    uint64_t norm_deg = (F->size() - 1) / (q - 1);
    std::vector<uint32_t> c(norm_deg + 1, 0);
    c[norm_deg] = 1;
    c[0] = F->neg(F->rel_trace(L.beta));
    uint64_t e = 1;
    for (int i = 0; i < r; ++i) {
        c[e] = F->sub(c[e], F->pow(L.alpha, e));
        e *= q;
    }
    return UniPoly(F, std::move(c));
}

std::string PlaneCurve::describe() const {
    std::ostringstream os;
    os << (is_norm_trace() ? "norm-trace curve" : "custom curve") << " " << F_.to_string()
       << " = 0 over " << ctx()->describe();
    return os.str();
}

uint64_t intersection_count(const PlaneCurve& curve, Line L, CountMethod method) {
    const FieldCtx* F = curve.ctx();
    uint64_t Q = F->size();
    if (method == CountMethod::Brute) {
        const BiPoly& eq = curve.equation();
        uint64_t n = 0;
        for (uint64_t x = 0; x < Q; ++x) {
            uint32_t y = F->add(F->mul(L.alpha, static_cast<uint32_t>(x)), L.beta);
            if (eq.eval(static_cast<uint32_t>(x), y) == 0) ++n;
        }
        return n;
    }
    UniPoly m = curve.restrict_to_line(L);
    if (m.is_zero()) return Q;  // line contained in the curve
    if (m.degree() == 0) return 0;
    // x^Q mod m, never materializing x^Q
    UniPoly xq = UniPoly::powmod(UniPoly::monomial(F, 1, 1), Q, m);
    UniPoly g = UniPoly::gcd(m, xq - UniPoly::monomial(F, 1, 1));
    return static_cast<uint64_t>(g.degree());
}

LineFamily LineFamily::explicit_list(std::vector<Line> lines) {
    LineFamily f(Selector::Explicit);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (Line l : lines)
        if (l.alpha == 0) throw BadSpec("family lines must have alpha != 0");
    f.lines_ = std::move(lines);
    return f;
}

bool LineFamily::contains(const FieldCtx& F, Line L) const {
    if (L.alpha == 0) return false;
    switch (selector_) {
        case Selector::All:
            return true;
        case Selector::TraceNonzero:
            return F.rel_trace(L.beta) != 0;
        case Selector::TraceZero:
            return F.rel_trace(L.beta) == 0;
        case Selector::Explicit:
            return std::binary_search(lines_.begin(), lines_.end(), L);
    }
    return false;
}

uint64_t LineFamily::size(const FieldCtx& F) const {
    uint64_t Q = F.size();
    switch (selector_) {
        case Selector::All:
            return (Q - 1) * Q;
        case Selector::TraceZero:
            return (Q - 1) * (Q / F.subfield_size());  // q^{r-1} zero-trace betas
        case Selector::TraceNonzero:
            return (Q - 1) * (Q - Q / F.subfield_size());
        case Selector::Explicit:
            return lines_.size();
    }
    return 0;
}

std::string LineFamily::name() const {
    switch (selector_) {
        case Selector::All:
            return "all";
        case Selector::TraceNonzero:
            return "trace-nonzero";
        case Selector::TraceZero:
            return "trace-zero";
        case Selector::Explicit:
            return "explicit[" + std::to_string(lines_.size()) + "]";
    }
    return "?";
}

std::vector<Line> lines_with_intersection_size(const PlaneCurve& curve, const LineFamily& family,
                                               const std::vector<uint64_t>& sizes) {
    const FieldCtx* F = curve.ctx();
    auto wanted = [&sizes](uint64_t n) {
        return std::find(sizes.begin(), sizes.end(), n) != sizes.end();
    };
    std::vector<Line> out;
    if (curve.is_norm_trace()) {
        auto table = intersection_table(curve, family);
        std::map<std::pair<uint32_t, uint32_t>, uint64_t> class_count;
        for (const auto& rec : table) class_count[{rec.norm_class, rec.trace_class}] = rec.count;
        family.for_each(*F, [&](Line l) {
            auto it = class_count.find({F->rel_norm(l.alpha), F->rel_trace(l.beta)});
            if (it != class_count.end() && wanted(it->second)) out.push_back(l);
        });
    } else {
        family.for_each(*F, [&](Line l) {
            if (wanted(intersection_count(curve, l, CountMethod::Brute))) out.push_back(l);
        });
    }
    return out;
}

std::vector<IntersectionRecord> intersection_table(const PlaneCurve& curve,
                                                   const LineFamily& family, CountMethod method) {
    const FieldCtx* F = curve.ctx();
    uint64_t Q = F->size();
    F->subfield_size();  // classes need a tower: NoTowerDeclared without one

    // deterministic spot-check sampling, seeded by the instance
    Rng rng(0xC1A55E5ULL ^ (Q << 8) ^ static_cast<uint64_t>(family.selector()));

    auto spot_check = [&](std::pair<uint32_t, uint32_t> key, uint64_t expected, Line other) {
        uint64_t check = intersection_count(curve, other, CountMethod::Brute);
        if (check != expected)
            throw ClassReductionUnsound("class (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) + ") count " +
                                        std::to_string(expected) + " vs " + std::to_string(check) +
                                        " on line (" + std::to_string(other.alpha) + "," +
                                        std::to_string(other.beta) + ")");
    };

    std::vector<IntersectionRecord> records;

    if (family.selector() != LineFamily::Selector::Explicit && curve.is_norm_trace()) {
        // fibers of the norm over nonzero elements and of the trace over all
        std::map<uint32_t, std::vector<uint32_t>> norm_fiber, trace_fiber;
        for (uint64_t a = 1; a < Q; ++a)
            norm_fiber[F->rel_norm(static_cast<uint32_t>(a))].push_back(static_cast<uint32_t>(a));
        for (uint64_t b = 0; b < Q; ++b)
            trace_fiber[F->rel_trace(static_cast<uint32_t>(b))].push_back(static_cast<uint32_t>(b));
        for (const auto& [nv, alphas] : norm_fiber) {
            for (const auto& [tv, betas] : trace_fiber) {
                if (family.selector() == LineFamily::Selector::TraceZero && tv != 0) continue;
                if (family.selector() == LineFamily::Selector::TraceNonzero && tv == 0) continue;
                Line rep{alphas.front(), betas.front()};
                uint64_t n = intersection_count(curve, rep, method);
                for (int k = 0; k < 3; ++k)
                    spot_check({nv, tv}, n,
                               {alphas[rng.below(alphas.size())], betas[rng.below(betas.size())]});
                records.push_back({nv, tv, n, alphas.size() * betas.size()});
            }
        }
        return records;
    }

    // explicit families and custom curves: group the actual lines
    std::map<std::pair<uint32_t, uint32_t>, std::vector<Line>> groups;
    family.for_each(*F, [&](Line l) {
        groups[{F->rel_norm(l.alpha), F->rel_trace(l.beta)}].push_back(l);
    });
    for (const auto& [key, members] : groups) {
        Line rep = members.front();
        uint64_t n = intersection_count(curve, rep, method);
        size_t checks = std::min<size_t>(3, members.size() - 1);
        for (size_t k = 0; k < checks; ++k)
            spot_check(key, n, members[1 + rng.below(members.size() - 1)]);
        records.push_back({key.first, key.second, n, members.size()});
    }
    return records;
}

std::map<uint64_t, uint64_t> intersection_spectrum(const PlaneCurve& curve,
                                                   const LineFamily& family) {
    const FieldCtx* F = curve.ctx();
    std::map<uint64_t, uint64_t> hist;
    if (curve.is_norm_trace()) {
        for (const auto& rec : intersection_table(curve, family))
            hist[rec.count] += rec.lines_in_class;
    } else {
        family.for_each(*F, [&](Line l) {
            ++hist[intersection_count(curve, l, CountMethod::Brute)];
        });
    }
    return hist;
}

std::map<uint64_t, uint64_t> point_line_profile(const PlaneCurve& curve, Point P,
                                                const LineFamily& family,
                                                const std::vector<IntersectionRecord>* table) {
    const FieldCtx* F = curve.ctx();
    if (!curve.contains(P))
        throw PointNotOnCurve("(" + std::to_string(P.x) + "," + std::to_string(P.y) + ")");

    std::vector<IntersectionRecord> local;
    std::map<std::pair<uint32_t, uint32_t>, uint64_t> class_count;
    if (curve.is_norm_trace()) {
        if (table == nullptr) {
            local = intersection_table(curve, LineFamily::all());
            table = &local;
        }
        for (const auto& rec : *table) class_count[{rec.norm_class, rec.trace_class}] = rec.count;
    }

    uint64_t Q = F->size();
    std::map<uint64_t, uint64_t> hist;
    for (uint64_t a = 1; a < Q; ++a) {
        uint32_t alpha = static_cast<uint32_t>(a);
        Line l{alpha, F->sub(P.y, F->mul(alpha, P.x))};
        if (!family.contains(*F, l)) continue;
        uint64_t n;
        if (curve.is_norm_trace())
            n = class_count.at({F->rel_norm(l.alpha), F->rel_trace(l.beta)});
        else
            n = intersection_count(curve, l, CountMethod::Brute);
        ++hist[n];
    }
    return hist;
}

namespace {

// floor(A - K * q^{(r-2)/2}) in exact integer arithmetic. For odd r the value
// K^2 * q^{r-2} is an exact integer; its integer square root certifies the
// floor (re-verified by squaring).
long long floor_minus_sqrt(long long A, uint64_t K, uint64_t q, int r) {
    if (K == 0) return A;
    uint64_t s;  // s = (K * q^{(r-2)/2})^2 = K^2 * q^{r-2}
    {
        s = K * K;
        for (int i = 0; i < r - 2; ++i) s *= q;
    }
    uint64_t t = static_cast<uint64_t>(std::llround(std::sqrt(static_cast<double>(s))));
    while (t * t > s) --t;
    while ((t + 1) * (t + 1) <= s) ++t;
    // now t = floor(sqrt(s)), certified: t^2 <= s < (t+1)^2
    if (t * t == s) return A - static_cast<long long>(t);
    return A - static_cast<long long>(t) - 1;
}

}  // namespace

long long bound_B(uint64_t q, int r, bool refined) {
    if (r < 2) throw InvalidExtensionDegree("bound defined for r >= 2");
    long long qr1 = 1;  // q^{r-1}
    for (int i = 0; i < r - 1; ++i) qr1 *= static_cast<long long>(q);
    if (!refined && q == 2) return qr1 - 1;
    uint64_t K;
    if (refined) {
        uint64_t d = std::gcd<uint64_t>(static_cast<uint64_t>(r), q - 1);
        K = (d - 1) + static_cast<uint64_t>(r - 1) * (q - 2);
    } else {
        K = static_cast<uint64_t>(r - 1) * (q - 1);
    }
    return floor_minus_sqrt(qr1 - 1, K, q, r);
}

LowerBoundReport verify_lower_bounds(const PlaneCurve& curve,
                                     const std::vector<IntersectionRecord>* table) {
    if (!curve.is_norm_trace()) throw BadSpec("lower bounds apply to norm-trace curves");
    std::vector<IntersectionRecord> local;
    if (table == nullptr) {
        local = intersection_table(curve, LineFamily::all());
        table = &local;
    }
    uint64_t q = curve.sub_q();
    int r = curve.ext_r();
    uint64_t Q = curve.ctx()->size();
    long long qr1 = 1;
    for (int i = 0; i < r - 1; ++i) qr1 *= static_cast<long long>(q);
    uint64_t d = std::gcd<uint64_t>(static_cast<uint64_t>(r), q - 1);

    LowerBoundReport rep;
    rep.bound_trace_zero = floor_minus_sqrt(qr1, static_cast<uint64_t>(r - 1) * (q - 1), q, r);
    rep.bound_trace_nonzero =
        floor_minus_sqrt(qr1 - 1, (d - 1) + static_cast<uint64_t>(r - 1) * (q - 2), q, r);
    rep.global_bound = floor_minus_sqrt(qr1 - 1, static_cast<uint64_t>(r - 1) * (q - 1), q, r);
    rep.family_size = (Q - 1) * Q;
    rep.lines_through_point = Q - 1;
    rep.min_count_trace_zero = UINT64_MAX;
    rep.min_count_trace_nonzero = UINT64_MAX;

    for (const auto& recd : *table) {
        bool zero = recd.trace_class == 0;
        long long b = zero ? rep.bound_trace_zero : rep.bound_trace_nonzero;
        LowerBoundRow row{recd.norm_class, recd.trace_class, recd.count, b,
                          static_cast<long long>(recd.count) - b};
        rep.rows.push_back(row);
        auto& mn = zero ? rep.min_count_trace_zero : rep.min_count_trace_nonzero;
        mn = std::min(mn, recd.count);
        if (row.slack < 0)
            throw BoundViolated("class (" + std::to_string(row.norm_class) + "," +
                                std::to_string(row.trace_class) + ") count " +
                                std::to_string(row.count) + " below bound " + std::to_string(b));
    }
    return rep;
}

}  // namespace clc
