#include "clc/repair.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "clc/rng.hpp"

namespace clc {

namespace {

// position lookup and per-line point lists, shared by the repair operations
struct Geometry {
    const LiftedCode& code;
    const FieldCtx* F;
    std::unordered_map<uint64_t, size_t> position_of;
    std::unordered_map<uint64_t, std::vector<size_t>> line_points;

    explicit Geometry(const LiftedCode& c) : code(c), F(c.ctx()) {
        for (size_t i = 0; i < code.points.size(); ++i)
            position_of.emplace(key(code.points[i]), i);
    }

    uint64_t key(Point p) const { return (static_cast<uint64_t>(p.x) << 32) | p.y; }
    uint64_t key(Line l) const { return (static_cast<uint64_t>(l.alpha) << 32) | l.beta; }

    // positions of curve points on l, ascending x (canonical order)
    const std::vector<size_t>& points_on(Line l) {
        auto it = line_points.find(key(l));
        if (it != line_points.end()) return it->second;
        std::vector<size_t> pts;
        uint64_t Q = F->size();
        for (uint64_t x = 0; x < Q; ++x) {
            uint32_t y = F->add(F->mul(l.alpha, static_cast<uint32_t>(x)), l.beta);
            auto p = position_of.find(key(Point{static_cast<uint32_t>(x), y}));
            if (p != position_of.end()) pts.push_back(p->second);
        }
        return line_points.emplace(key(l), std::move(pts)).first->second;
    }

    template <typename Fn>
    void for_each_family_line_through(size_t position, Fn&& fn) {
        Point P = code.points[position];
        uint64_t Q = F->size();
        for (uint64_t a = 1; a < Q; ++a) {
            uint32_t alpha = static_cast<uint32_t>(a);
            Line l{alpha, F->sub(P.y, F->mul(alpha, P.x))};
            if (code.plan.family.contains(*F, l)) fn(l);
        }
    }
};

uint32_t interpolate(const FieldCtx* F, const std::vector<uint32_t>& xs,
                     const std::vector<uint32_t>& ys, uint32_t x_target) {
    // Lagrange evaluation at a single point; xs are pairwise distinct
    uint32_t acc = 0;
    for (size_t j = 0; j < xs.size(); ++j) {
        uint32_t w = 1;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i == j) continue;
            w = F->mul(w, F->mul(F->sub(x_target, xs[i]), F->inv(F->sub(xs[j], xs[i]))));
        }
        acc = F->add(acc, F->mul(w, ys[j]));
    }
    return acc;
}

std::vector<uint32_t> lagrange_weights(const FieldCtx* F, const std::vector<uint32_t>& xs,
                                       uint32_t x_target) {
    std::vector<uint32_t> w(xs.size(), 1);
    for (size_t j = 0; j < xs.size(); ++j)
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i == j) continue;
            w[j] = F->mul(w[j], F->mul(F->sub(x_target, xs[i]), F->inv(F->sub(xs[j], xs[i]))));
        }
    return w;
}

// first B-1 surviving positions on the line (canonical x order), excluding the
// target; empty result means the line is not viable
std::vector<size_t> pick_sources(const Codeword& cw, const std::vector<size_t>& on_line,
                                 size_t target, size_t needed) {
    std::vector<size_t> sources;
    for (size_t p : on_line) {
        if (p == target || cw.symbols[p] == kErased) continue;
        sources.push_back(p);
        if (sources.size() == needed) break;
    }
    if (sources.size() < needed) sources.clear();
    return sources;
}

uint32_t repair_with_sources(const Codeword& cw, Geometry& geo, size_t position,
                             const std::vector<size_t>& sources) {
    const FieldCtx* F = geo.F;
    std::vector<uint32_t> xs, ys;
    xs.reserve(sources.size());
    ys.reserve(sources.size());
    for (size_t p : sources) {
        xs.push_back(geo.code.points[p].x);
        ys.push_back(cw.symbols[p]);
    }
    return interpolate(F, xs, ys, geo.code.points[position].x);
}

}  // namespace

Codeword encode(const LiftedCode& code, const std::vector<uint32_t>& message) {
    if (message.size() != code.params.k)
        throw LengthMismatch("message length " + std::to_string(message.size()) +
                             ", dimension " + std::to_string(code.params.k));
    const FieldCtx* F = code.ctx();
    Codeword cw{&code, std::vector<uint32_t>(code.params.n, 0)};
    for (size_t i = 0; i < message.size(); ++i) {
        uint32_t m = message[i];
        if (m == 0) continue;
        const uint32_t* row = code.generator.row(i);
        for (size_t j = 0; j < cw.symbols.size(); ++j)
            cw.symbols[j] = F->add(cw.symbols[j], F->mul(m, row[j]));
    }
    return cw;
}

void erase_at(Codeword& cw, const std::vector<size_t>& positions) {
    for (size_t p : positions) {
        if (p >= cw.symbols.size())
            throw IndexOutOfRange("position " + std::to_string(p) + " of " +
                                  std::to_string(cw.symbols.size()));
        cw.symbols[p] = kErased;
    }
}

void erase_random(Codeword& cw, size_t count, uint64_t seed) {
    Rng rng(seed);
    erase_at(cw, rng.sample(cw.symbols.size(), count));
}

RepairPlan repair_plan(const LiftedCode& code, size_t position) {
    if (position >= code.points.size())
        throw IndexOutOfRange("position " + std::to_string(position));
    Geometry geo(code);
    size_t needed = static_cast<size_t>(code.plan.B - 1);
    RepairPlan plan;
    plan.position = position;
    geo.for_each_family_line_through(position, [&](Line l) {
        const auto& pts = geo.points_on(l);
        if (pts.size() < needed + 1) return;  // fewer than B curve points
        std::vector<size_t> set;
        for (size_t p : pts) {
            if (p == position) continue;
            set.push_back(p);
            if (set.size() == needed) break;
        }
        plan.lines.push_back(l);
        plan.candidate_sets.push_back(std::move(set));
    });
    return plan;
}

RepairOutcome repair_position(const Codeword& cw, size_t position) {
    const LiftedCode& code = *cw.code;
    if (position >= cw.symbols.size())
        throw IndexOutOfRange("position " + std::to_string(position));
    Geometry geo(code);
    size_t needed = static_cast<size_t>(code.plan.B - 1);

    Line best{};
    size_t best_survivors = 0;
    size_t viable = 0;
    geo.for_each_family_line_through(position, [&](Line l) {
        size_t survivors = 0;
        for (size_t p : geo.points_on(l))
            if (p != position && cw.symbols[p] != kErased) ++survivors;
        if (survivors >= needed) {
            ++viable;
            if (survivors > best_survivors) {  // canonical order: first max wins
                best_survivors = survivors;
                best = l;
            }
        }
    });
    if (viable == 0)
        throw NoViableLine("every family line through position " + std::to_string(position) +
                           " has fewer than " + std::to_string(needed) + " surviving points");

    std::vector<size_t> sources = pick_sources(cw, geo.points_on(best), position, needed);
    return {repair_with_sources(cw, geo, position, sources), best, sources.size(), viable};
}

uint32_t repair_via_line(const Codeword& cw, size_t position, Line l) {
    const LiftedCode& code = *cw.code;
    Geometry geo(code);
    size_t needed = static_cast<size_t>(code.plan.B - 1);
    std::vector<size_t> sources = pick_sources(cw, geo.points_on(l), position, needed);
    if (sources.empty())
        throw NoViableLine("line (" + std::to_string(l.alpha) + "," + std::to_string(l.beta) +
                           ") has fewer than " + std::to_string(needed) + " surviving points");
    return repair_with_sources(cw, geo, position, sources);
}

AuditResult availability_audit(const LiftedCode& code) {
    const PlaneCurve& curve = code.plan.curve;
    const FieldCtx* F = code.ctx();
    uint64_t B = static_cast<uint64_t>(code.plan.B);
    AuditResult res;
    res.per_position.assign(code.points.size(), 0);

    if (curve.is_norm_trace() && code.plan.family.selector() != LineFamily::Selector::Explicit) {
        // class counts give each line's size in O(1)
        auto table = intersection_table(curve, code.plan.family);
        std::map<std::pair<uint32_t, uint32_t>, uint64_t> count;
        for (const auto& rec : table) count[{rec.norm_class, rec.trace_class}] = rec.count;
        uint64_t Q = F->size();
        for (size_t i = 0; i < code.points.size(); ++i) {
            Point P = code.points[i];
            for (uint64_t a = 1; a < Q; ++a) {
                uint32_t alpha = static_cast<uint32_t>(a);
                Line l{alpha, F->sub(P.y, F->mul(alpha, P.x))};
                if (!code.plan.family.contains(*F, l)) continue;
                if (count.at({F->rel_norm(l.alpha), F->rel_trace(l.beta)}) >= B)
                    ++res.per_position[i];
            }
        }
    } else {
        Geometry geo(code);
        for (size_t i = 0; i < code.points.size(); ++i) {
            geo.for_each_family_line_through(i, [&](Line l) {
                if (geo.points_on(l).size() >= B) ++res.per_position[i];
            });
        }
    }
    res.availability = res.per_position.empty()
                           ? 0
                           : *std::min_element(res.per_position.begin(), res.per_position.end());
    return res;
}

DrillReport repair_drill(const LiftedCode& code, uint64_t trials, size_t erasure_count,
                         uint64_t seed) {
    const FieldCtx* F = code.ctx();
    uint64_t Q = F->size();
    Rng rng(seed);
    Geometry geo(code);
    size_t needed = static_cast<size_t>(code.plan.B - 1);

    DrillReport rep;
    rep.trials = trials;
    rep.erasures = erasure_count;
    rep.seed = seed;
    uint64_t total_reads = 0, total_viable = 0, total_repairs = 0;

    for (uint64_t t = 0; t < trials; ++t) {
        std::vector<uint32_t> msg(code.params.k);
        for (auto& m : msg) m = static_cast<uint32_t>(rng.below(Q));
        Codeword cw = encode(code, msg);
        erase_at(cw, rng.sample(cw.symbols.size(), erasure_count));

        bool progress = true;
        while (progress && cw.erased_count() > 0) {
            progress = false;
            for (size_t i = 0; i < cw.symbols.size(); ++i) {
                if (cw.symbols[i] != kErased) continue;
                // inline viability scan against the current erasure pattern
                Line best{};
                size_t best_survivors = 0, viable = 0;
                geo.for_each_family_line_through(i, [&](Line l) {
                    size_t survivors = 0;
                    for (size_t p : geo.points_on(l))
                        if (p != i && cw.symbols[p] != kErased) ++survivors;
                    if (survivors >= needed) {
                        ++viable;
                        if (survivors > best_survivors) {
                            best_survivors = survivors;
                            best = l;
                        }
                    }
                });
                if (viable == 0) continue;
                std::vector<size_t> sources = pick_sources(cw, geo.points_on(best), i, needed);
                cw.symbols[i] = repair_with_sources(cw, geo, i, sources);
                ++total_repairs;
                total_reads += sources.size();
                total_viable += viable;
                progress = true;
            }
        }
        if (cw.erased_count() == 0) ++rep.successes;
    }
    if (total_repairs > 0) {
        rep.mean_symbols_read = static_cast<double>(total_reads) / static_cast<double>(total_repairs);
        rep.mean_lines_tried = static_cast<double>(total_viable) / static_cast<double>(total_repairs);
    }
    return rep;
}

RoundTripResult round_trip_audit(const LiftedCode& code, uint64_t num_codewords, uint64_t seed) {
    const FieldCtx* F = code.ctx();
    uint64_t Q = F->size();
    Geometry geo(code);
    size_t needed = static_cast<size_t>(code.plan.B - 1);

    // per (position, viable line): sources and interpolation weights
    struct Repairer {
        std::vector<size_t> sources;
        std::vector<uint32_t> weights;
    };
    std::vector<std::vector<Repairer>> repairers(code.points.size());
    RoundTripResult res;

    for (size_t i = 0; i < code.points.size(); ++i) {
        std::vector<char> seen(code.points.size(), 0);
        geo.for_each_family_line_through(i, [&](Line l) {
            const auto& pts = geo.points_on(l);
            if (pts.size() < needed + 1) return;
            Repairer r;
            for (size_t p : pts) {
                if (p == i) continue;
                r.sources.push_back(p);
                if (r.sources.size() == needed) break;
            }
            std::vector<uint32_t> xs;
            for (size_t p : r.sources) {
                xs.push_back(code.points[p].x);
                if (seen[p]) res.disjoint_ok = false;
                seen[p] = 1;
            }
            r.weights = lagrange_weights(F, xs, code.points[i].x);
            res.max_symbols_read = std::max(res.max_symbols_read, r.sources.size());
            repairers[i].push_back(std::move(r));
        });
    }

    Rng rng(seed);
    for (uint64_t w = 0; w < num_codewords; ++w) {
        std::vector<uint32_t> msg(code.params.k);
        for (auto& m : msg) m = static_cast<uint32_t>(rng.below(Q));
        Codeword cw = encode(code, msg);
        ++res.codewords;
        for (size_t i = 0; i < cw.symbols.size(); ++i) {
            for (const Repairer& r : repairers[i]) {
                uint32_t acc = 0;
                for (size_t j = 0; j < r.sources.size(); ++j)
                    acc = F->add(acc, F->mul(r.weights[j], cw.symbols[r.sources[j]]));
                ++res.repairs;
                if (acc != cw.symbols[i]) ++res.mismatches;
            }
        }
    }
    return res;
}

}  // namespace clc
