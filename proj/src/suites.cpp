#include "clc/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "clc/repair.hpp"

namespace clc {

namespace {

PlaneCurve norm_trace(uint64_t q, int r) {
    auto [p, s] = factor_prime_power(q);
    return PlaneCurve::norm_trace(make_field(p, s * r, Tower{s, r}));
}

PlaneCurve schmidt_curve() {
    Field f = make_field(2, 6, Tower{1, 6});
    BiPoly eq(f.get());
    eq.set_term(0, 8, 1);
    eq.set_term(0, 1, 1);
    eq.set_term(3, 0, 1);
    return PlaneCurve::custom(f, std::move(eq));
}

/// Gcd where the restriction degree is desk-scale, brute force beyond.
CountMethod auto_method(const PlaneCurve& curve) {
    if (!curve.is_norm_trace()) return CountMethod::Brute;
    uint64_t deg = (curve.ctx()->size() - 1) / (curve.sub_q() - 1);
    return deg <= 4096 ? CountMethod::Gcd : CountMethod::Brute;
}

Json sorted_distinct_counts(const std::vector<IntersectionRecord>& table) {
    std::set<uint64_t> s;
    for (const auto& rec : table) s.insert(rec.count);
    return Json(std::vector<uint64_t>(s.begin(), s.end()));
}

std::vector<uint32_t> eval_monomial(const PlaneCurve& curve, const std::vector<Point>& pts,
                                    int a, int b) {
    const FieldCtx* F = curve.ctx();
    std::vector<uint32_t> ev(pts.size());
    for (size_t j = 0; j < pts.size(); ++j)
        ev[j] = F->mul(F->pow(pts[j].x, static_cast<uint64_t>(a)),
                       F->pow(pts[j].y, static_cast<uint64_t>(b)));
    return ev;
}

Json profile_to_json(const std::map<uint64_t, uint64_t>& hist) {
    Json j = Json::object();
    for (auto [size, n] : hist) j[std::to_string(size)] = n;
    return j;
}

class Checker {
   public:
    Checker(SuiteReport& report, const Json& entries) : report_(report) {
        for (const auto& e : entries) by_id_[e.at("id").get<std::string>()] = e;
    }

    const Json* entry(const std::string& id) const {
        auto it = by_id_.find(id);
        return it == by_id_.end() ? nullptr : &it->second;
    }

    void check(const std::string& id, const Json& actual) {
        SuiteAssertion a;
        a.id = id;
        a.actual = actual;
        auto it = by_id_.find(id);
        if (it == by_id_.end()) {
            a.anchor = "(missing expectation)";
            a.pass = false;
        } else {
            a.anchor = it->second.value("anchor", "");
            a.expected = it->second.at("expected");
            a.pass = (a.expected == actual);
        }
        report_.pass = report_.pass && a.pass;
        report_.assertions.push_back(std::move(a));
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

   private:
    SuiteReport& report_;
    std::map<std::string, Json> by_id_;
};

// in the trace-zero-family code with B = 2^{r-1}+1 and outside the all-lines
// code with B = B_{2,r}: evaluations of x^a y^b, a+b in {B_all-1, B_all}
Json separation_result(int r) {
    PlaneCurve curve = norm_trace(2, r);
    int B_all = static_cast<int>(bound_B(2, r, false));  // 2^{r-1}-1
    LiftedCode all_code = build_code({curve, LineFamily::all(), B_all, CodeMode::Monomial});
    LiftedCode tz_code =
        build_code({curve, LineFamily::trace_zero(), B_all + 2, CodeMode::Monomial});
    auto pts = curve.enumerate_affine_points();

    bool all_in_tz = true, any_in_all = false;
    for (Monomial m : representative_range(curve)) {
        int s = m.a + m.b;
        if (s != B_all - 1 && s != B_all) continue;
        std::vector<uint32_t> ev = eval_monomial(curve, pts, m.a, m.b);
        all_in_tz = all_in_tz && tz_code.membership_test(ev);
        any_in_all = any_in_all || all_code.membership_test(ev);
    }
    Json j;
    j["in_trace_zero_code"] = all_in_tz;
    j["in_all_lines_code"] = any_in_all;
    return j;
}

void run_binary(Checker& c, const SuiteOptions&) {
    for (int r = 2; r <= 6; ++r) {
        auto table = intersection_table(norm_trace(2, r), LineFamily::all());
        Json actual;
        for (const auto& rec : table)
            actual[rec.trace_class == 0 ? "trace_zero" : "trace_nonzero"] = rec.count;
        c.check("counts_r" + std::to_string(r), actual);
    }
    c.check("separation_r3", separation_result(3));
    c.check("separation_r4", separation_result(4));
}

void run_memberships(Checker& c, const SuiteOptions&) {
    c.check("separation_r3", separation_result(3));
    c.check("separation_r4", separation_result(4));
}

void run_ex33(Checker& c, const SuiteOptions&) {
    PlaneCurve x33 = norm_trace(3, 3);
    auto pts = x33.enumerate_affine_points();
    c.check("affine_points", pts.size());

    auto table = intersection_table(x33, LineFamily::all());
    c.check("spectrum", sorted_distinct_counts(table));

    bool profiles_ok = true;
    Json prof_nonzero, prof_zero;
    for (Point p : pts) {
        Json prof = profile_to_json(point_line_profile(x33, p, LineFamily::all(), &table));
        Json& want = p.x == 0 ? prof_zero : prof_nonzero;
        if (want.is_null())
            want = prof;
        else
            profiles_ok = profiles_ok && (want == prof);
    }
    if (!profiles_ok) c.note("per-point profiles are not constant within x=0 / x!=0 classes");
    c.check("profile_x_nonzero", prof_nonzero);
    c.check("profile_x_zero", prof_zero);

    LiftedCode code7 = build_code({x33, LineFamily::all(), 7, CodeMode::Monomial});
    c.check("code_b7", Json{{"n", code7.params.n},
                            {"locality", code7.params.locality},
                            {"availability", code7.params.availability}});
    {
        std::set<Monomial> good;
        for (const auto& mc : code7.good_monomials) good.insert(mc.m);
        bool inc = true;
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; a + b <= 5; ++b)
                inc = inc && good.count({a, b}) == 1 &&
                      code7.membership_test(eval_monomial(x33, pts, a, b));
        c.check("inclusion_deg5", inc);
    }

    auto lines13 = lines_with_intersection_size(x33, LineFamily::all(), {13});
    LiftedCode code13 =
        build_code({x33, LineFamily::explicit_list(lines13), 13, CodeMode::Monomial});
    c.check("code_b13", Json{{"n", code13.params.n},
                             {"locality", code13.params.locality},
                             {"availability", code13.params.availability}});
    {
        std::set<Monomial> good;
        for (const auto& mc : code13.good_monomials) good.insert(mc.m);
        bool inc = true;
        for (int a = 0; a <= 11; ++a)
            for (int b = 0; a + b <= 11 && b <= 8; ++b) inc = inc && good.count({a, b}) == 1;
        c.check("inclusion_deg11", inc);
        c.note("inclusion_deg11 is checked over the monomial search range (b <= 8)");
    }

    PlaneCurve x34 = norm_trace(3, 4);
    auto pts4 = x34.enumerate_affine_points();
    c.check("affine_points_r4", pts4.size());
    c.check("spectrum_r4", sorted_distinct_counts(intersection_table(x34, LineFamily::all())));
    LiftedCode code22 = build_code({x34, LineFamily::all(), 22, CodeMode::Monomial});
    c.check("code_b22", Json{{"n", code22.params.n},
                             {"locality", code22.params.locality},
                             {"availability", code22.params.availability}});
}

void run_ex34(Checker& c, const SuiteOptions&) {
    PlaneCurve curve = schmidt_curve();
    auto pts = curve.enumerate_affine_points();
    c.check("affine_points", pts.size());

    std::map<std::string, std::pair<Json, uint64_t>> profile_classes;
    for (Point p : pts) {
        Json prof = profile_to_json(point_line_profile(curve, p, LineFamily::all()));
        auto& slot = profile_classes[prof.dump()];
        slot.first = prof;
        ++slot.second;
    }
    const Json* special = c.entry("special_profile");
    uint64_t n_generic = 0, n_special = 0;
    Json generic_actual, special_actual;
    for (const auto& [key, slot] : profile_classes) {
        const auto& [prof, n] = slot;
        if (special && prof == special->at("expected")) {
            special_actual = prof;
            n_special = n;
        } else if (generic_actual.is_null() || n > n_generic) {
            generic_actual = prof;
            n_generic = n;
        }
    }
    c.check("generic_profile", generic_actual);
    c.check("generic_point_count", n_generic);
    c.check("special_profile", special_actual);
    c.check("special_point_count", n_special);

    auto spectrum = intersection_spectrum(curve, LineFamily::all());
    std::vector<uint64_t> nonempty;
    for (auto [size, n] : spectrum)
        if (size > 0) nonempty.push_back(size);
    c.check("nonempty_spectrum", Json(nonempty));
    {
        std::ostringstream os;
        os << "computed line spectrum (size:lines):";
        for (auto [size, n] : spectrum) os << " " << size << ":" << n;
        os << "; the narrative spectrum 1,2,4,7 omits the 3-point lines visible in "
           << "the per-point profiles, computed values are authoritative";
        c.note(os.str());
    }

    auto lines4 = lines_with_intersection_size(curve, LineFamily::all(), {4});
    LiftedCode code =
        build_code({curve, LineFamily::explicit_list(lines4), 4, CodeMode::Monomial});
    c.check("code_b4", Json{{"n", code.params.n},
                            {"locality", code.params.locality},
                            {"availability", code.params.availability}});
}

void run_table2(Checker& c, const SuiteOptions& opt) {
    for (uint64_t p : {3, 5, 7}) {
        for (int r = 2; r <= 7; ++r) {
            std::string id = "p" + std::to_string(p) + "_r" + std::to_string(r);
            const Json* e = c.entry(id);
            if (e == nullptr) continue;
            if (e->value("budget", false) && !opt.budget) {
                c.note("skipped " + id + " (enable with --budget)");
                continue;
            }
            PlaneCurve curve = norm_trace(p, r);
            auto table = intersection_table(curve, LineFamily::all(), auto_method(curve));
            Json actual;
            actual["counts"] = sorted_distinct_counts(table);
            actual["B"] = bound_B(p, r, false);
            actual["B_refined"] = bound_B(p, r, true);
            c.check(id, actual);
        }
    }
}

void run_table1(Checker& c, const SuiteOptions&) {
    double prev_rate = 0.0;
    bool trend = true;
    for (int r = 3; r <= 6; ++r) {
        PlaneCurve curve = norm_trace(2, r);
        int B = static_cast<int>(bound_B(2, r, false));
        LiftedCode code = build_code({curve, LineFamily::all(), B, CodeMode::Monomial});
        Json actual;
        actual["length"] = code.params.n;
        actual["locality"] = code.params.locality;
        actual["availability"] = code.params.availability;
        actual["dimension"] = code.params.k;
        c.check("ntlc_r" + std::to_string(r), actual);
        trend = trend && code.params.rate > prev_rate;
        prev_rate = code.params.rate;
        std::ostringstream os;
        os << "r=" << r << " rate=" << code.params.rate;
        if (code.params.closed_form_dimension)
            os << " closed-form dimension bound=" << *code.params.closed_form_dimension
               << " (exact " << code.params.k << ")";
        c.note(os.str());
    }
    trend = trend && prev_rate < 0.25;
    c.check("rate_trend", trend);
}

void run_bounds(Checker& c, const SuiteOptions&) {
    auto run_one = [&c](uint64_t q, int r) {
        std::string id = "q" + std::to_string(q) + "_r" + std::to_string(r);
        PlaneCurve curve = norm_trace(q, r);
        auto table = intersection_table(curve, LineFamily::all(), auto_method(curve));
        bool ok = true;
        std::string detail;
        try {
            LowerBoundReport rep = verify_lower_bounds(curve, &table);
            std::ostringstream os;
            os << id << ": min counts tr0=" << rep.min_count_trace_zero
               << " tr!=0=" << rep.min_count_trace_nonzero << ", floors tr0=" << rep.bound_trace_zero
               << " tr!=0=" << rep.bound_trace_nonzero << ", global floor=" << rep.global_bound
               << ", family lines=" << rep.family_size
               << ", lines through a point=" << rep.lines_through_point;
            detail = os.str();
        } catch (const BoundViolated& e) {
            ok = false;
            detail = e.what();
        }
        c.note(detail);
        c.check(id, ok);
    };
    for (int r = 2; r <= 6; ++r) run_one(2, r);
    for (uint64_t q : {3, 5, 7})
        for (int r = 2; r <= 5; ++r) run_one(q, r);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ex33",   "ex34",   "binary",     "table2",
                                                "table1", "bounds", "memberships"};
    return names;
}

std::string resolve_data_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* env = std::getenv("CLC_DATA_DIR")) return env;
#ifdef CLC_DATA_DIR
    return CLC_DATA_DIR;
#else
    return "data";
#endif
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    Json all = Json::parse(read_file(resolve_data_dir(opt.data_dir) + "/expectations.json"));
    if (!all.contains(name)) throw BadSpec("unknown suite: " + name);

    SuiteReport report;
    report.suite = name;
    Checker c(report, all.at(name));

    if (name == "binary")
        run_binary(c, opt);
    else if (name == "memberships")
        run_memberships(c, opt);
    else if (name == "ex33")
        run_ex33(c, opt);
    else if (name == "ex34")
        run_ex34(c, opt);
    else if (name == "table2")
        run_table2(c, opt);
    else if (name == "table1")
        run_table1(c, opt);
    else if (name == "bounds")
        run_bounds(c, opt);
    return report;
}

Json suite_report_to_json(const SuiteReport& report) {
    Json j;
    j["suite"] = report.suite;
    j["pass"] = report.pass;
    Json asserts = Json::array();
    for (const auto& a : report.assertions) {
        Json e;
        e["id"] = a.id;
        e["anchor"] = a.anchor;
        e["expected"] = a.expected;
        e["actual"] = a.actual;
        e["pass"] = a.pass;
        asserts.push_back(e);
    }
    j["assertions"] = asserts;
    j["notes"] = report.notes;
    return j;
}

}  // namespace clc
