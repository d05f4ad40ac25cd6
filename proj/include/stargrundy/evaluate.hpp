#pragma once

// Position evaluation as reported by the `eval` command: value, route, and a
// winning move whose target has been re-checked to be a P-position.

#include <cstdint>
#include <optional>

#include "stargrundy/closed_forms.hpp"
#include "stargrundy/oracle.hpp"
#include "stargrundy/position.hpp"

namespace stargrundy {

struct EvalReport {
    Position position;
    std::uint64_t value = 0;
    EvalRoute route = EvalRoute::oracle;
    std::optional<Move> winning_move;  // present iff value != 0
    std::optional<Position> after_move;

    bool is_p() const noexcept { return value == 0; }
};

/// A position is P iff no option is P. Uses the evaluator on the options only,
/// so it is an independent check of a claimed zero.
inline bool confirm_p_position(const Position& p, GrundyTable& table) {
    bool ok = true;
    for_each_legal_move(p, [&](const Move& m) {
        if (ok && sg_star_silver_dollar(apply_move_unchecked(p, m), table) == 0) ok = false;
    });
    return ok;
}

inline EvalReport evaluate(const Position& p, GrundyTable& table) {
    const Evaluation e = evaluate_star_silver_dollar(p, table);
    EvalReport report{p, e.value, e.route, std::nullopt, std::nullopt};
    if (e.value == 0) return report;

    for (const Move& m : legal_moves(p)) {
        Position next = apply_move_unchecked(p, m);
        if (sg_star_silver_dollar(next, table) != 0) continue;
        if (!confirm_p_position(next, table)) {
            throw InvariantError("move " + format_move(m) + " reaches a position that is not P on re-check");
        }
        report.winning_move = m;
        report.after_move = std::move(next);
        return report;
    }
    throw InvariantError("nonzero value " + std::to_string(e.value) + " but no move to a P-position");
}

}  // namespace stargrundy
