#ifndef CLC_REPAIR_HPP
#define CLC_REPAIR_HPP

#include <cstdint>
#include <vector>

#include "clc/lifted.hpp"

namespace clc {

/// Erasure marker inside codeword symbol vectors.
constexpr uint32_t kErased = 0xFFFFFFFFu;

/// A (possibly partially erased) received word of a lifted code.
struct Codeword {
    const LiftedCode* code = nullptr;
    std::vector<uint32_t> symbols;

    size_t erased_count() const {
        size_t n = 0;
        for (uint32_t s : symbols) n += (s == kErased);
        return n;
    }
};

/// message * generator. Throws LengthMismatch unless message has length k.
Codeword encode(const LiftedCode& code, const std::vector<uint32_t>& message);

/// Mark positions as erased. Throws IndexOutOfRange.
void erase_at(Codeword& cw, const std::vector<size_t>& positions);

/// Erase `count` distinct positions chosen deterministically from the seed.
void erase_random(Codeword& cw, size_t count, uint64_t seed);

/// Disjoint candidate recovery sets for a position: one set of B-1 positions
/// per family line through the point that meets the curve in >= B points
/// (smallest x-coordinates first on each line).
struct RepairPlan {
    size_t position = 0;
    std::vector<Line> lines;
    std::vector<std::vector<size_t>> candidate_sets;
};

RepairPlan repair_plan(const LiftedCode& code, size_t position);

struct RepairOutcome {
    uint32_t value = 0;
    Line line;
    size_t symbols_read = 0;
    size_t viable_lines = 0;  // repair options available at the time
};

/// Repair one position by Lagrange interpolation along a family line through
/// its point. Line choice: most surviving points, ties broken by smallest
/// (alpha, beta) in canonical order; exactly B-1 symbols are read. Throws
/// NoViableLine when every line through the point has fewer than B-1
/// surviving other points.
RepairOutcome repair_position(const Codeword& cw, size_t position);

/// Repair through one specific line (used for cross-line consistency checks).
uint32_t repair_via_line(const Codeword& cw, size_t position, Line l);

struct AuditResult {
    std::vector<uint64_t> per_position;  // disjoint recovery sets available
    uint64_t availability = 0;           // minimum over positions
};

/// Counts, for every position, the family lines through its point that carry
/// at least B-1 other curve points. Distinct lines through a point meet only
/// there, so the count equals the number of pairwise-disjoint recovery sets.
AuditResult availability_audit(const LiftedCode& code);

struct DrillReport {
    uint64_t trials = 0;
    uint64_t erasures = 0;
    uint64_t successes = 0;
    double mean_symbols_read = 0.0;  // per successful repair
    double mean_lines_tried = 0.0;   // viable lines per successful repair
    uint64_t seed = 0;
};

/// Random-erasure repair drill: per trial, a random codeword loses
/// `erasure_count` random symbols and greedy single-symbol repair runs until
/// no erased position has a viable line. Repaired symbols are written back
/// immediately so later repairs can cascade. Deterministic under the seed.
DrillReport repair_drill(const LiftedCode& code, uint64_t trials, size_t erasure_count,
                         uint64_t seed);

struct RoundTripResult {
    uint64_t codewords = 0;
    uint64_t repairs = 0;       // (position, viable line) pairs x codewords
    uint64_t mismatches = 0;
    size_t max_symbols_read = 0;
    bool disjoint_ok = true;    // recovery sets of each position pairwise disjoint
};

/// Exhaustive single-erasure check: for `num_codewords` random codewords,
/// every position is repaired through every viable line and compared with
/// the original symbol.
RoundTripResult round_trip_audit(const LiftedCode& code, uint64_t num_codewords, uint64_t seed);

}  // namespace clc

#endif
