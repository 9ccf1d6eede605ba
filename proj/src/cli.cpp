#include "clc/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "clc/repair.hpp"
#include "clc/rng.hpp"
#include "clc/serialize.hpp"
#include "clc/suites.hpp"

namespace clc {

namespace {

struct CurveArgs {
    uint64_t q = 0;
    int r = 0;
    std::string curve_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "subfield size q (prime power) of the norm-trace curve");
        cmd->add_option("--r", r, "extension degree r of the norm-trace curve");
        cmd->add_option("--curve", curve_file, "curve spec JSON file");
    }

    PlaneCurve resolve() const {
        if (!curve_file.empty()) return curve_from_json(Json::parse(read_file(curve_file)));
        if (q == 0 || r == 0) throw BadSpec("give either --curve or both --q and --r");
        auto [p, s] = factor_prime_power(q);
        return PlaneCurve::norm_trace(make_field(p, s * r, Tower{s, r}));
    }
};

LineFamily resolve_family(const std::string& spec, const PlaneCurve& curve) {
    if (spec.empty() || spec == "all") return LineFamily::all();
    if (spec == "trace-nonzero") return LineFamily::trace_nonzero();
    if (spec == "trace-zero") return LineFamily::trace_zero();
    if (spec.rfind("size:", 0) == 0) {
        std::vector<uint64_t> sizes;
        std::istringstream is(spec.substr(5));
        std::string tok;
        while (std::getline(is, tok, ',')) sizes.push_back(std::stoull(tok));
        return LineFamily::explicit_list(lines_with_intersection_size(curve, LineFamily::all(), sizes));
    }
    return family_from_json(Json::parse(read_file(spec)));  // path to a family JSON
}

CountMethod resolve_method(const std::string& name, const PlaneCurve& curve) {
    if (name == "gcd") return CountMethod::Gcd;
    if (name == "brute") return CountMethod::Brute;
    if (name != "auto") throw BadSpec("--method must be gcd, brute, or auto");
    if (!curve.is_norm_trace()) return CountMethod::Brute;
    uint64_t deg = (curve.ctx()->size() - 1) / (curve.sub_q() - 1);
    return deg <= 4096 ? CountMethod::Gcd : CountMethod::Brute;
}

std::vector<uint32_t> parse_ints(const std::string& csv) {
    std::vector<uint32_t> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(static_cast<uint32_t>(std::stoul(tok)));
    return out;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

LiftedCode load_code(const std::string& path) {
    if (path.empty()) throw BadSpec("--code is required");
    return code_from_json(Json::parse(read_file(path)));
}

int cmd_field(int p, int m, const std::string& tower, const std::string& out) {
    std::optional<Tower> tw;
    if (!tower.empty()) {
        auto v = parse_ints(tower);
        if (v.size() != 2) throw BadSpec("--tower takes s,r");
        tw = Tower{static_cast<int>(v[0]), static_cast<int>(v[1])};
    }
    Field f = make_field(p, m, tw);
    std::cout << f->describe() << "\n" << f->size() << " elements\n";
    if (!out.empty()) write_file(out, field_to_json(*f).dump(2) + "\n");
    return 0;
}

int cmd_curve(const CurveArgs& ca, uint64_t budget, const std::string& out) {
    PlaneCurve curve = ca.resolve();
    auto pts = curve.enumerate_affine_points(budget);
    std::cout << curve.describe() << "\n";
    std::cout << "affine rational points: " << pts.size() << "\n";
    if (curve.genus()) std::cout << "genus: " << *curve.genus() << "\n";
    if (!out.empty()) write_file(out, curve_to_json(curve).dump(2) + "\n");
    return 0;
}

int cmd_intersect(const CurveArgs& ca, const std::string& lines, const std::string& method,
                  bool oracle, const std::string& format, const std::string& out) {
    PlaneCurve curve = ca.resolve();
    LineFamily family = resolve_family(lines, curve);
    CountMethod m = resolve_method(method, curve);

    if (!curve.is_norm_trace() && family.selector() != LineFamily::Selector::Explicit) {
        auto spectrum = intersection_spectrum(curve, family);
        emit(out, spectrum_csv(spectrum));
        return 0;
    }

    auto table = intersection_table(curve, family, m);
    if (oracle) {
        // recount one representative per class with the other method
        CountMethod other = m == CountMethod::Gcd ? CountMethod::Brute : CountMethod::Gcd;
        const FieldCtx* F = curve.ctx();
        for (const auto& rec : table) {
            Line rep{0, 0};
            bool found = false;
            for (uint64_t a = 1; a < F->size() && !found; ++a)
                for (uint64_t b = 0; b < F->size() && !found; ++b) {
                    Line l{static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
                    if (!family.contains(*F, l)) continue;
                    if (F->rel_norm(l.alpha) == rec.norm_class &&
                        F->rel_trace(l.beta) == rec.trace_class) {
                        rep = l;
                        found = true;
                    }
                }
            if (found && intersection_count(curve, rep, other) != rec.count)
                throw ClassReductionUnsound("oracle recount disagrees for class (" +
                                            std::to_string(rec.norm_class) + "," +
                                            std::to_string(rec.trace_class) + ")");
        }
        std::cout << "oracle cross-check passed on " << table.size() << " classes\n";
    }
    if (format == "json") {
        Json j = Json::array();
        for (const auto& rec : table)
            j.push_back(Json{{"norm_class", rec.norm_class},
                             {"trace_class", rec.trace_class},
                             {"count", rec.count},
                             {"lines_in_class", rec.lines_in_class}});
        emit(out, j.dump(2) + "\n");
    } else {
        emit(out, intersection_table_csv(table));
    }
    return 0;
}

int cmd_profile(const CurveArgs& ca, const std::string& lines, const std::string& point,
                const std::string& out) {
    PlaneCurve curve = ca.resolve();
    LineFamily family = resolve_family(lines, curve);
    std::vector<std::pair<Point, std::map<uint64_t, uint64_t>>> profiles;
    std::vector<IntersectionRecord> table;
    const std::vector<IntersectionRecord>* table_ptr = nullptr;
    if (curve.is_norm_trace()) {
        table = intersection_table(curve, LineFamily::all());
        table_ptr = &table;
    }
    if (point.empty()) {
        for (Point p : curve.enumerate_affine_points())
            profiles.emplace_back(p, point_line_profile(curve, p, family, table_ptr));
    } else {
        auto xy = parse_ints(point);
        if (xy.size() != 2) throw BadSpec("--point takes x,y");
        Point p{xy[0], xy[1]};
        profiles.emplace_back(p, point_line_profile(curve, p, family, table_ptr));
    }
    emit(out, profile_csv(profiles));
    return 0;
}

int cmd_bounds(uint64_t q, int rmax, const std::string& out) {
    emit(out, bounds_csv(q, rmax));
    return 0;
}

int cmd_build(const CurveArgs& ca, const std::string& lines, const std::string& B_arg,
              const std::string& mode, const std::string& out) {
    PlaneCurve curve = ca.resolve();
    LineFamily family = resolve_family(lines, curve);
    int B;
    if (B_arg == "auto") {
        if (!curve.is_norm_trace())
            throw BadSpec("--B auto needs a norm-trace curve; give an explicit --B");
        long long b = bound_B(curve.sub_q(), curve.ext_r(), false);
        if (bound_degenerate(b))
            throw DegeneratePlan("B_{q,r} = " + std::to_string(b) +
                                 " is degenerate; give an explicit --B (e.g. from the "
                                 "measured intersection table)");
        B = static_cast<int>(b);
    } else {
        B = std::stoi(B_arg);
    }
    CodePlan plan{curve, family, B, mode == "exact" ? CodeMode::Exact : CodeMode::Monomial};
    LiftedCode code = build_code(plan);
    std::cout << parameter_report(code);
    if (!out.empty()) write_file(out, code_to_json(code).dump(2) + "\n");
    return 0;
}

int cmd_encode(const std::string& code_path, const std::string& message, bool random,
               uint64_t seed, const std::string& out) {
    LiftedCode code = load_code(code_path);
    std::vector<uint32_t> msg;
    if (random) {
        Rng rng(seed);
        msg.resize(code.params.k);
        for (auto& v : msg) v = static_cast<uint32_t>(rng.below(code.ctx()->size()));
    } else {
        msg = parse_ints(message);
    }
    emit(out, codeword_csv(encode(code, msg)));
    return 0;
}

int cmd_erase(const std::string& code_path, const std::string& cw_path,
              const std::string& positions, int count, uint64_t seed, const std::string& out) {
    LiftedCode code = load_code(code_path);
    Codeword cw = codeword_from_csv(code, read_file(cw_path));
    if (!positions.empty()) {
        std::vector<size_t> pos;
        for (uint32_t p : parse_ints(positions)) pos.push_back(p);
        erase_at(cw, pos);
    } else {
        erase_random(cw, static_cast<size_t>(count), seed);
    }
    emit(out, codeword_csv(cw));
    return 0;
}

int cmd_repair(const std::string& code_path, const std::string& cw_path, int position,
               const std::string& out) {
    LiftedCode code = load_code(code_path);
    Codeword cw = codeword_from_csv(code, read_file(cw_path));
    if (position >= 0) {
        RepairOutcome o = repair_position(cw, static_cast<size_t>(position));
        cw.symbols[static_cast<size_t>(position)] = o.value;
        std::cout << "position " << position << " -> " << o.value << " via line ("
                  << o.line.alpha << "," << o.line.beta << "), read " << o.symbols_read
                  << " symbols, " << o.viable_lines << " viable lines\n";
    } else {
        // greedy loop over all erased positions
        size_t repaired = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (size_t i = 0; i < cw.symbols.size(); ++i) {
                if (cw.symbols[i] != kErased) continue;
                try {
                    cw.symbols[i] = repair_position(cw, i).value;
                    ++repaired;
                    progress = true;
                } catch (const NoViableLine&) {
                }
            }
        }
        std::cout << "repaired " << repaired << " positions, " << cw.erased_count()
                  << " unrecoverable\n";
        if (cw.erased_count() > 0) {
            emit(out, codeword_csv(cw));
            return 1;
        }
    }
    emit(out, codeword_csv(cw));
    return 0;
}

int cmd_audit(const std::string& code_path, const std::string& format, const std::string& out) {
    LiftedCode code = load_code(code_path);
    AuditResult res = availability_audit(code);
    if (format == "json") {
        Json j;
        j["availability"] = res.availability;
        j["per_position"] = res.per_position;
        emit(out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "position,disjoint_recovery_sets\n";
        for (size_t i = 0; i < res.per_position.size(); ++i)
            os << i << "," << res.per_position[i] << "\n";
        emit(out, os.str());
    }
    std::cout << "availability (min over positions): " << res.availability << "\n";
    return 0;
}

int cmd_drill(const std::string& code_path, uint64_t trials, int erasures, uint64_t seed,
              const std::string& out) {
    LiftedCode code = load_code(code_path);
    DrillReport rep = repair_drill(code, trials, static_cast<size_t>(erasures), seed);
    emit(out, drill_to_json(rep).dump(2) + "\n");
    return 0;
}

int cmd_reproduce(const std::string& suite, bool budget, const std::string& data,
                  const std::string& out) {
    SuiteOptions opt;
    opt.budget = budget;
    opt.data_dir = data;
    SuiteReport rep = run_suite(suite, opt);
    for (const auto& a : rep.assertions) {
        std::cout << (a.pass ? "[PASS] " : "[FAIL] ") << rep.suite << "/" << a.id;
        if (!a.pass)
            std::cout << "  expected=" << a.expected.dump() << " actual=" << a.actual.dump();
        std::cout << "\n";
    }
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    std::cout << (rep.pass ? "suite passed" : "suite FAILED") << " (" << rep.assertions.size()
              << " assertions)\n";
    if (!out.empty()) write_file(out, suite_report_to_json(rep).dump(2) + "\n");
    return rep.pass ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"curve-lifted locally recoverable codes over finite fields"};
    app.require_subcommand(1);

    // field
    auto* field_cmd = app.add_subcommand("field", "construct a finite field");
    int fp = 0, fm = 0;
    std::string ftower, fout;
    field_cmd->add_option("--char", fp, "characteristic p (prime)")->required();
    field_cmd->add_option("--deg", fm, "extension degree m")->required();
    field_cmd->add_option("--tower", ftower, "subfield tower s,r with s*r = m");
    field_cmd->add_option("--out", fout, "write the field spec JSON here");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "enumerate a plane curve");
    CurveArgs curve_args;
    curve_args.attach(curve_cmd);
    uint64_t budget = uint64_t(1) << 24;
    std::string curve_out;
    curve_cmd->add_option("--budget-pairs", budget, "enumeration budget");
    curve_cmd->add_option("--out", curve_out, "write the curve spec JSON here");

    // intersect
    auto* int_cmd = app.add_subcommand("intersect", "line-curve intersection table");
    CurveArgs int_args;
    int_args.attach(int_cmd);
    std::string int_lines = "all", int_method = "gcd", int_format = "csv", int_out;
    bool int_oracle = false;
    int_cmd->add_option("--lines", int_lines, "all | trace-nonzero | trace-zero | size:N[,M] | file");
    int_cmd->add_option("--method", int_method, "gcd | brute | auto");
    int_cmd->add_flag("--oracle", int_oracle, "cross-check each class with the other method");
    int_cmd->add_option("--format", int_format, "csv | json");
    int_cmd->add_option("--out", int_out, "output path (stdout otherwise)");

    // profile
    auto* prof_cmd = app.add_subcommand("profile", "per-point line profiles");
    CurveArgs prof_args;
    prof_args.attach(prof_cmd);
    std::string prof_lines = "all", prof_point, prof_out;
    prof_cmd->add_option("--lines", prof_lines, "line family");
    prof_cmd->add_option("--point", prof_point, "x,y (all points when omitted)");
    prof_cmd->add_option("--out", prof_out, "output path");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "lower bounds B and B' per extension degree");
    uint64_t bq = 0;
    int brmax = 0;
    std::string bounds_out;
    bounds_cmd->add_option("--char", bq, "subfield size q (prime power)")->required();
    bounds_cmd->add_option("--rmax", brmax, "largest extension degree")->required();
    bounds_cmd->add_option("--out", bounds_out, "output path");

    // build
    auto* build_cmd = app.add_subcommand("build", "build a curve-lifted code");
    CurveArgs build_args;
    build_args.attach(build_cmd);
    std::string build_lines = "all", build_B = "auto", build_mode = "monomial", build_out;
    build_cmd->add_option("--lines", build_lines, "line family");
    build_cmd->add_option("--B", build_B, "auto | integer >= 3");
    build_cmd->add_option("--mode", build_mode, "monomial | exact");
    build_cmd->add_option("--out", build_out, "write the code artifact JSON here");

    // encode
    auto* enc_cmd = app.add_subcommand("encode", "encode a message");
    std::string enc_code, enc_msg, enc_out;
    bool enc_random = false;
    uint64_t enc_seed = 0;
    enc_cmd->add_option("--code", enc_code, "code artifact JSON")->required();
    enc_cmd->add_option("--message", enc_msg, "comma-separated element integers");
    enc_cmd->add_flag("--random", enc_random, "random message from --seed");
    enc_cmd->add_option("--seed", enc_seed, "seed for --random");
    enc_cmd->add_option("--out", enc_out, "codeword CSV path");

    // erase
    auto* erase_cmd = app.add_subcommand("erase", "erase codeword symbols");
    std::string er_code, er_cw, er_pos, er_out;
    int er_count = 0;
    uint64_t er_seed = 0;
    erase_cmd->add_option("--code", er_code, "code artifact JSON")->required();
    erase_cmd->add_option("--cw", er_cw, "codeword CSV")->required();
    erase_cmd->add_option("--positions", er_pos, "comma-separated positions");
    erase_cmd->add_option("--count", er_count, "random erasure count");
    erase_cmd->add_option("--seed", er_seed, "seed for random erasures");
    erase_cmd->add_option("--out", er_out, "output codeword CSV");

    // repair
    auto* rep_cmd = app.add_subcommand("repair", "repair erased symbols by interpolation");
    std::string rp_code, rp_cw, rp_out;
    int rp_pos = -1;
    rep_cmd->add_option("--code", rp_code, "code artifact JSON")->required();
    rep_cmd->add_option("--cw", rp_cw, "codeword CSV")->required();
    rep_cmd->add_option("--position", rp_pos, "single position (all erased when omitted)");
    rep_cmd->add_option("--out", rp_out, "output codeword CSV");

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "disjoint recovery sets per position");
    std::string au_code, au_format = "csv", au_out;
    audit_cmd->add_option("--code", au_code, "code artifact JSON")->required();
    audit_cmd->add_option("--format", au_format, "csv | json");
    audit_cmd->add_option("--out", au_out, "output path");

    // drill
    auto* drill_cmd = app.add_subcommand("drill", "random-erasure repair drill");
    std::string dr_code, dr_out;
    uint64_t dr_trials = 100, dr_seed = 0;
    int dr_erasures = 1;
    drill_cmd->add_option("--code", dr_code, "code artifact JSON")->required();
    drill_cmd->add_option("--trials", dr_trials, "number of trials");
    drill_cmd->add_option("--erasures", dr_erasures, "erasures per trial");
    drill_cmd->add_option("--seed", dr_seed, "seed");
    drill_cmd->add_option("--out", dr_out, "drill report JSON path");

    // reproduce
    auto* repro_cmd = app.add_subcommand("reproduce", "run a reproduction suite");
    std::string su_name, su_data, su_out;
    bool su_budget = false;
    repro_cmd->add_option("--suite", su_name, "ex33|ex34|binary|table2|table1|bounds|memberships")
        ->required();
    repro_cmd->add_flag("--budget", su_budget, "include the large table rows");
    repro_cmd->add_option("--data", su_data, "directory holding expectations.json");
    repro_cmd->add_option("--out", su_out, "report JSON path");

    std::reverse(args.begin(), args.end());  // CLI11 parses in reverse
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (field_cmd->parsed()) return cmd_field(fp, fm, ftower, fout);
        if (curve_cmd->parsed()) return cmd_curve(curve_args, budget, curve_out);
        if (int_cmd->parsed())
            return cmd_intersect(int_args, int_lines, int_method, int_oracle, int_format, int_out);
        if (prof_cmd->parsed()) return cmd_profile(prof_args, prof_lines, prof_point, prof_out);
        if (bounds_cmd->parsed()) return cmd_bounds(bq, brmax, bounds_out);
        if (build_cmd->parsed())
            return cmd_build(build_args, build_lines, build_B, build_mode, build_out);
        if (enc_cmd->parsed()) return cmd_encode(enc_code, enc_msg, enc_random, enc_seed, enc_out);
        if (erase_cmd->parsed())
            return cmd_erase(er_code, er_cw, er_pos, er_count, er_seed, er_out);
        if (rep_cmd->parsed()) return cmd_repair(rp_code, rp_cw, rp_pos, rp_out);
        if (audit_cmd->parsed()) return cmd_audit(au_code, au_format, au_out);
        if (drill_cmd->parsed())
            return cmd_drill(dr_code, dr_trials, dr_erasures, dr_seed, dr_out);
        if (repro_cmd->parsed()) return cmd_reproduce(su_name, su_budget, su_data, su_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace clc
