#include "clc/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace clc {

std::pair<int, int> factor_prime_power(uint64_t q) {
    if (q < 2) throw BadSpec("q must be >= 2");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int s = 0;
    uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw BadSpec(std::to_string(q) + " is not a prime power");
        t /= p;
        ++s;
    }
    return {static_cast<int>(p), s};
}

Json field_to_json(const FieldCtx& F) {
    Json j;
    j["p"] = F.characteristic();
    j["m"] = F.degree();
    if (F.tower())
        j["tower"] = Json::array({F.tower()->s, F.tower()->r});
    else
        j["tower"] = nullptr;
    j["modulus"] = F.modulus();
    return j;
}

Field field_from_json(const Json& j) {
    int p = j.at("p").get<int>();
    int m = j.at("m").get<int>();
    std::optional<Tower> tower;
    if (j.contains("tower") && !j.at("tower").is_null()) {
        auto t = j.at("tower");
        tower = Tower{t.at(0).get<int>(), t.at(1).get<int>()};
    }
    std::vector<int> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null())
        modulus = j.at("modulus").get<std::vector<int>>();
    if (modulus.empty()) return make_field(p, m, tower);
    return make_field_with_modulus(p, m, std::move(modulus), tower);
}

Json curve_to_json(const PlaneCurve& curve) {
    Json j;
    if (curve.is_norm_trace()) {
        j["kind"] = "norm-trace";
        j["q"] = curve.sub_q();
        j["r"] = curve.ext_r();
    } else {
        j["kind"] = "custom";
        j["field"] = field_to_json(*curve.ctx());
        Json terms = Json::array();
        for (const auto& [e, c] : curve.equation().terms()) {
            Json t;
            t["a"] = e.first;
            t["b"] = e.second;
            t["coeff"] = c;
            terms.push_back(t);
        }
        j["terms"] = terms;
    }
    return j;
}

PlaneCurve curve_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "norm-trace") {
        uint64_t q = j.at("q").get<uint64_t>();
        int r = j.at("r").get<int>();
        auto [p, s] = factor_prime_power(q);
        Field f = make_field(p, s * r, Tower{s, r});
        return PlaneCurve::norm_trace(f);
    }
    if (kind == "custom") {
        Field f = field_from_json(j.at("field"));
        BiPoly eq(f.get());
        for (const auto& t : j.at("terms")) {
            int64_t raw = t.at("coeff").get<int64_t>();
            uint32_t c;
            if (raw < 0)
                c = f->neg(f->from_residue(-raw));  // small negative literals allowed
            else
                c = static_cast<uint32_t>(raw);
            if (c >= f->size()) throw BadSpec("coefficient outside the field");
            eq.add_term(t.at("a").get<int>(), t.at("b").get<int>(), c);
        }
        return PlaneCurve::custom(f, std::move(eq));
    }
    throw BadSpec("unknown curve kind: " + kind);
}

Json family_to_json(const LineFamily& family) {
    Json j;
    j["selector"] = family.name();
    if (family.selector() == LineFamily::Selector::Explicit) {
        j["selector"] = "explicit";
        Json lines = Json::array();
        for (Line l : family.lines()) lines.push_back(Json::array({l.alpha, l.beta}));
        j["lines"] = lines;
    }
    return j;
}

LineFamily family_from_json(const Json& j) {
    std::string sel = j.at("selector").get<std::string>();
    if (sel == "all") return LineFamily::all();
    if (sel == "trace-nonzero") return LineFamily::trace_nonzero();
    if (sel == "trace-zero") return LineFamily::trace_zero();
    if (sel == "explicit") {
        std::vector<Line> lines;
        for (const auto& l : j.at("lines"))
            lines.push_back({l.at(0).get<uint32_t>(), l.at(1).get<uint32_t>()});
        return LineFamily::explicit_list(std::move(lines));
    }
    throw BadSpec("unknown family selector: " + sel);
}

namespace {

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

Json params_to_json(const CodeParams& p) {
    Json j;
    j["n"] = p.n;
    j["k"] = p.k;
    if (p.k_monomial)
        j["k_monomial"] = *p.k_monomial;
    else
        j["k_monomial"] = nullptr;
    j["locality"] = p.locality;
    j["availability"] = p.availability;
    if (p.claimed_availability)
        j["claimed_availability"] = *p.claimed_availability;
    else
        j["claimed_availability"] = nullptr;
    j["rate"] = round3(p.rate);
    j["typical_count"] = p.typical_count;
    if (p.closed_form_dimension)
        j["closed_form_dimension"] = round3(*p.closed_form_dimension);
    else
        j["closed_form_dimension"] = nullptr;
    return j;
}

CodeParams params_from_json(const Json& j) {
    CodeParams p;
    p.n = j.at("n").get<uint64_t>();
    p.k = j.at("k").get<uint64_t>();
    if (!j.at("k_monomial").is_null()) p.k_monomial = j.at("k_monomial").get<uint64_t>();
    p.locality = j.at("locality").get<int>();
    p.availability = j.at("availability").get<uint64_t>();
    if (!j.at("claimed_availability").is_null())
        p.claimed_availability = j.at("claimed_availability").get<uint64_t>();
    p.rate = j.at("rate").get<double>();
    p.typical_count = j.at("typical_count").get<uint64_t>();
    if (!j.at("closed_form_dimension").is_null())
        p.closed_form_dimension = j.at("closed_form_dimension").get<double>();
    return p;
}

}  // namespace

Json code_to_json(const LiftedCode& code) {
    Json j;
    Json plan;
    plan["curve"] = curve_to_json(code.plan.curve);
    plan["family"] = family_to_json(code.plan.family);
    plan["B"] = code.plan.B;
    plan["mode"] = to_string(code.plan.mode);
    j["plan"] = plan;

    Json points = Json::array();
    for (Point p : code.points) points.push_back(Json::array({p.x, p.y}));
    j["points"] = points;

    Json good = Json::array();
    for (const auto& mc : code.good_monomials)
        good.push_back(Json::array({mc.m.a, mc.m.b, to_string(mc.status)}));
    j["good_monomials"] = good;

    Json gm = Json::array();
    for (const auto& m : code.generator_monomials) gm.push_back(Json::array({m.a, m.b}));
    j["generator_monomials"] = gm;

    Json gen;
    gen["rows"] = code.generator.rows();
    gen["cols"] = code.generator.cols();
    gen["data"] = code.generator.data();
    j["generator"] = gen;

    j["params"] = params_to_json(code.params);
    return j;
}

LiftedCode code_from_json(const Json& j) {
    const Json& plan_j = j.at("plan");
    CodePlan plan{curve_from_json(plan_j.at("curve")), family_from_json(plan_j.at("family")),
                  plan_j.at("B").get<int>(),
                  plan_j.at("mode").get<std::string>() == "exact" ? CodeMode::Exact
                                                                  : CodeMode::Monomial};

    std::vector<Point> points;
    for (const auto& p : j.at("points"))
        points.push_back({p.at(0).get<uint32_t>(), p.at(1).get<uint32_t>()});

    const Json& gen = j.at("generator");
    size_t rows = gen.at("rows").get<size_t>();
    size_t cols = gen.at("cols").get<size_t>();
    Mat g(plan.curve.ctx(), rows, cols);
    g.data() = gen.at("data").get<std::vector<uint32_t>>();
    if (g.data().size() != rows * cols) throw BadSpec("generator shape mismatch");

    LiftedCode code(std::move(plan), std::move(points), std::move(g));
    for (const auto& mc : j.at("good_monomials"))
        code.good_monomials.push_back({{mc.at(0).get<int>(), mc.at(1).get<int>()},
                                       monomial_status_from_string(mc.at(2).get<std::string>()),
                                       0});
    for (const auto& m : j.at("generator_monomials"))
        code.generator_monomials.push_back({m.at(0).get<int>(), m.at(1).get<int>()});
    code.params = params_from_json(j.at("params"));
    return code;
}

Json drill_to_json(const DrillReport& r) {
    Json j;
    j["trials"] = r.trials;
    j["erasures"] = r.erasures;
    j["successes"] = r.successes;
    j["mean_symbols_read"] = round3(r.mean_symbols_read);
    j["mean_lines_tried"] = round3(r.mean_lines_tried);
    j["seed"] = r.seed;
    return j;
}

std::string intersection_table_csv(const std::vector<IntersectionRecord>& table) {
    std::ostringstream os;
    os << "norm_class,trace_class,count,lines_in_class\n";
    for (const auto& r : table)
        os << r.norm_class << "," << r.trace_class << "," << r.count << "," << r.lines_in_class
           << "\n";
    return os.str();
}

std::string spectrum_csv(const std::map<uint64_t, uint64_t>& spectrum) {
    std::ostringstream os;
    os << "size,num_lines\n";
    for (const auto& [size, n] : spectrum) os << size << "," << n << "\n";
    return os.str();
}

std::string profile_csv(
    const std::vector<std::pair<Point, std::map<uint64_t, uint64_t>>>& profiles) {
    std::ostringstream os;
    os << "point_x,point_y,size,num_lines\n";
    for (const auto& [p, hist] : profiles)
        for (const auto& [size, n] : hist)
            os << p.x << "," << p.y << "," << size << "," << n << "\n";
    return os.str();
}

std::string bounds_csv(uint64_t q, int rmax) {
    std::ostringstream os;
    os << "r,B,B_refined,degenerate\n";
    for (int r = 2; r <= rmax; ++r) {
        long long b = bound_B(q, r, false);
        long long bp = bound_B(q, r, true);
        os << r << "," << b << "," << bp << "," << (bound_degenerate(b) ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string codeword_csv(const Codeword& cw) {
    std::ostringstream os;
    for (size_t i = 0; i < cw.symbols.size(); ++i) os << (i ? "," : "") << "c" << i;
    os << "\n";
    for (size_t i = 0; i < cw.symbols.size(); ++i) {
        if (i) os << ",";
        if (cw.symbols[i] == kErased)
            os << "?";
        else
            os << cw.symbols[i];
    }
    os << "\n";
    return os.str();
}

Codeword codeword_from_csv(const LiftedCode& code, const std::string& text) {
    std::istringstream is(text);
    std::string header, data;
    if (!std::getline(is, header) || !std::getline(is, data))
        throw BadSpec("codeword CSV needs a header row and a data row");
    Codeword cw{&code, {}};
    std::istringstream ds(data);
    std::string cell;
    while (std::getline(ds, cell, ',')) {
        if (cell == "?")
            cw.symbols.push_back(kErased);
        else
            cw.symbols.push_back(static_cast<uint32_t>(std::stoul(cell)));
    }
    if (cw.symbols.size() != code.params.n)
        throw LengthMismatch("codeword length " + std::to_string(cw.symbols.size()) +
                             ", code length " + std::to_string(code.params.n));
    for (uint32_t s : cw.symbols)
        if (s != kErased && s >= code.ctx()->size()) throw BadSpec("symbol outside the field");
    return cw;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw BadSpec("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw BadSpec("cannot write " + path);
    f << content;
}

}  // namespace clc
