#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "stargrundy/closed_forms.hpp"
#include "stargrundy/evaluate.hpp"
#include "support/brute_force.hpp"

using namespace stargrundy;

namespace {

brute::Board board_of(const Position& p) {
    brute::Board b;
    for (const auto& s : p.strips()) b.push_back(s.tokens());
    return b;
}

}  // namespace

TEST(Nim, XorOfPiles) {
    const std::vector<std::uint64_t> p{3, 5, 6};
    EXPECT_EQ(sg_nim(p), 0u);
    const std::vector<std::uint64_t> q{9};
    EXPECT_EQ(sg_nim(q), 9u);
    // With square 0 taken, single tokens on 7 and 4 are Nim heaps of 6 and 3.
    brute::Solver solver;
    const std::vector<std::uint64_t> heaps{6, 3};
    EXPECT_EQ(sg_nim(heaps), solver.value({{7}, {4}, {0}}));
}

TEST(SilverDollar, WorkedExample) { EXPECT_EQ(sg_silver_dollar(Strip{3, 5, 8, 12, 19}), 7u); }

TEST(SilverDollar, SingleTokenIsNimHeap) {
    for (Square a = 0; a < 20; ++a) EXPECT_EQ(sg_silver_dollar(Strip{a}), a);
    EXPECT_EQ(sg_silver_dollar(Strip{}), 0u);
}

TEST(SilverDollar, AgreesWithBruteForce) {
    brute::Solver solver;
    std::vector<Square> cur;
    std::size_t checked = 0;
    // Every strip on squares 0..10 with up to four tokens.
    std::function<void(Square)> rec = [&](Square from) {
        if (!cur.empty()) {
            ASSERT_EQ(sg_silver_dollar(Strip(cur)), solver.value({cur}));
            ++checked;
        }
        if (cur.size() == 4) return;
        for (Square s = from; s <= 10; ++s) {
            cur.push_back(s);
            rec(s + 1);
            cur.pop_back();
        }
    };
    rec(0);
    EXPECT_EQ(checked, 561u);
}

TEST(HeadTail, Shapes) {
    const auto odd = head_tail_split(Position({Strip{2, 5, 6, 8, 10}}));
    EXPECT_EQ(odd.heads[0], (Strip{2}));
    EXPECT_EQ(odd.tails[0], (Strip{5, 6, 8, 10}));
    const auto even = head_tail_split(Position({Strip{2, 5, 6, 8}}));
    EXPECT_EQ(even.heads[0], (Strip{2, 5}));
    EXPECT_EQ(even.tails[0], (Strip{6, 8}));
}

TEST(HeadTail, ThreeStripExample) {
    const auto s = head_tail_split(parse_position("[2];[2,4,7];[1,4,6,10,12,17]"));
    EXPECT_EQ(s.heads, (std::vector<Strip>{Strip{2}, Strip{2}, Strip{1, 4}}));
    EXPECT_EQ(s.tails, (std::vector<Strip>{Strip{}, Strip{4, 7}, Strip{6, 10, 12, 17}}));
}

TEST(HeadTail, Preconditions) {
    EXPECT_THROW(head_tail_split(parse_position("[0,3];[2]")), PreconditionError);
    EXPECT_THROW(head_tail_split(parse_position("[];[2]")), PreconditionError);
}

TEST(HeadTail, RecoversTokens) {
    const Position p = parse_position("[2,9];[1,3,4];[5,6,7,8,11]");
    const auto s = head_tail_split(p);
    for (std::size_t i = 0; i < p.strip_count(); ++i) {
        std::vector<Square> joined = s.heads[i].tokens();
        joined.insert(joined.end(), s.tails[i].tokens().begin(), s.tails[i].tokens().end());
        EXPECT_EQ(joined, p[i].tokens());
        EXPECT_EQ(s.tails[i].size() % 2, 0u);
    }
}

TEST(StarSilverDollar, DecompositionExample) {
    GrundyTable t;
    brute::Solver solver;
    const auto lhs = sg_star_silver_dollar(parse_position("[2];[2,4,7];[1,4,6,10,12,17]"), t);
    const auto heads = solver.value({{2}, {2}, {1, 4}});
    EXPECT_EQ(lhs, heads ^ 5);
    EXPECT_EQ(lhs, solver.value({{2}, {2, 4, 7}, {1, 4, 6, 10, 12, 17}}));
}

TEST(StarSilverDollar, OddAndEvenExamples) {
    GrundyTable t;
    const auto odd = evaluate_star_silver_dollar(parse_position("[2];[2,5,8];[1,5,10]"), t);
    EXPECT_EQ(odd.value, 5u);
    EXPECT_EQ(odd.route, EvalRoute::decomposition_odd);
    const auto even = evaluate_star_silver_dollar(parse_position("[2,5];[3,6,8,10]"), t);
    EXPECT_EQ(even.value, 1u);
    EXPECT_EQ(even.route, EvalRoute::decomposition_even);
}

TEST(StarSilverDollar, ZeroOccupiedIsSumOfStrips) {
    GrundyTable t;
    brute::Solver solver;
    for (const char* text : {"[0,3];[2,5];[4]", "[7];[4];[0,2]", "[0];[1,2];[3,9]", "[1];[0,5,6]"}) {
        const Position p = parse_position(text);
        const auto e = evaluate_star_silver_dollar(p, t);
        EXPECT_EQ(e.route, EvalRoute::zero_occupied) << text;
        EXPECT_EQ(e.value, solver.value(board_of(p))) << text;
    }
}

TEST(StarSilverDollar, RoutesAgreeWithBruteForce) {
    GrundyTable t;
    brute::Solver solver;
    for (const char* text : {"[3];[1,4];[2,5,7]", "[2,6];[1,3]", "[5];[5];[5]", "[1,2,3];[4]", "[];[6]", "[4,5,9];[3]"}) {
        const Position p = parse_position(text);
        EXPECT_EQ(sg_star_silver_dollar(p, t), solver.value(board_of(p))) << text;
    }
}

TEST(Evaluate, WinningMoveReachesZero) {
    GrundyTable t;
    brute::Solver solver;
    for (const char* text : {"[3,5,8,12,19]", "[2];[2];[1]", "[2,5];[3];[1,4]", "[6];[9]"}) {
        const Position p = parse_position(text);
        const auto r = evaluate(p, t);
        ASSERT_TRUE(r.winning_move.has_value()) << text;
        EXPECT_EQ(solver.value(board_of(*r.after_move)), 0u) << text;
        EXPECT_TRUE(is_legal(p, *r.winning_move));
    }
    const auto p = evaluate(parse_position("[0];[1]"), t);
    EXPECT_TRUE(p.is_p());
    EXPECT_FALSE(p.winning_move.has_value());
}

TEST(PRule, Examples) {
    EXPECT_EQ(star_nim_p_rule({3, 3}), PVerdict::p_position);
    EXPECT_EQ(star_nim_p_rule({1, 1}), PVerdict::not_p_position);
    EXPECT_EQ(star_nim_p_rule({0, 1}), PVerdict::p_position);
    EXPECT_EQ(star_nim_p_rule({1, 2, 3}), PVerdict::p_position);
    EXPECT_EQ(star_nim_p_rule({1, 2, 4, 6}), PVerdict::p_position);
    EXPECT_EQ(star_nim_p_rule({0, 2, 3, 4}), PVerdict::p_position);  // 1 ^ 2 ^ 3 = 0
    EXPECT_EQ(star_nim_p_rule({2, 3, 4, 5}), PVerdict::unknown);
    EXPECT_EQ(star_nim_p_rule({1, 1, 1, 1, 1}), PVerdict::unknown);
}

TEST(PRule, Preconditions) {
    EXPECT_THROW(star_nim_p_rule({3, 1}), PreconditionError);
    EXPECT_THROW(star_nim_p_rule({0, 0, 4}), InvariantError);
}

TEST(PRule, AgreesWithBruteForceOnDecidedDomains) {
    brute::Solver solver;
    for (std::uint64_t a = 0; a <= 12; ++a) {
        for (std::uint64_t b = a; b <= 12; ++b) {
            if (a == 0 && b == 0) continue;
            const bool p = solver.two(a, b) == 0;
            EXPECT_EQ(star_nim_p_rule({a, b}), p ? PVerdict::p_position : PVerdict::not_p_position);
            for (std::uint64_t c = b; c <= 8 && a <= 8; ++c) {
                const bool q = solver.value({{a}, {b}, {c}}) == 0;
                EXPECT_EQ(star_nim_p_rule({a, b, c}), q ? PVerdict::p_position : PVerdict::not_p_position);
            }
        }
    }
    for (std::uint64_t a1 = 0; a1 <= 1; ++a1) {
        for (std::uint64_t b = std::max<std::uint64_t>(a1, 1); b <= 6; ++b) {
            for (std::uint64_t c = b; c <= 6; ++c) {
                for (std::uint64_t d = c; d <= 6; ++d) {
                    const bool p = solver.value({{a1}, {b}, {c}, {d}}) == 0;
                    EXPECT_EQ(star_nim_p_rule({a1, b, c, d}), p ? PVerdict::p_position : PVerdict::not_p_position)
                        << a1 << b << c << d;
                }
            }
        }
    }
}

TEST(SmallG, Examples) {
    EXPECT_TRUE(small_g_set(3, 10, 12));
    EXPECT_TRUE(small_g_set(0, 0, 1));
    EXPECT_TRUE(small_g_set(5, 9, 11));
    EXPECT_FALSE(small_g_set(0, 1, 1));
    EXPECT_THROW(small_g_set(6, 1, 2), PreconditionError);
    EXPECT_THROW(small_g_set(2, 5, 4), PreconditionError);
}

TEST(SmallG, ValueFiveRepeatsEverySix) {
    // G(16,19) is not 5; the class continues (18,21), (19,22), (20,23).
    const auto g = brute::two_star_grid(30);
    EXPECT_NE(g[16][19], 5);
    EXPECT_FALSE(small_g_set(5, 16, 19));
    for (std::uint64_t a : {12, 13, 14, 18, 19, 20, 24}) {
        EXPECT_EQ(g[a][a + 3], 5) << a;
        EXPECT_TRUE(small_g_set(5, a, a + 3));
    }
}

TEST(SmallG, MatchesBruteForceGrid) {
    const auto g = brute::two_star_grid(40);
    for (unsigned v = 0; v <= 5; ++v) {
        for (std::uint64_t a = 0; a <= 40; ++a) {
            for (std::uint64_t b = a; b <= 40; ++b) {
                if (a == 0 && b == 0) continue;
                EXPECT_EQ(small_g_set(v, a, b), g[a][b] == static_cast<std::int64_t>(v)) << v << " " << a << "," << b;
            }
        }
    }
}

TEST(RowFormula, Examples) {
    EXPECT_EQ(row_formula_small_a(2, 3), 4u);
    EXPECT_EQ(row_formula_small_a(2, 5), 3u);
    EXPECT_EQ(row_formula_small_a(1, 9), 9u);
    EXPECT_EQ(row_formula_small_a(2, 2), 0u);
    EXPECT_EQ(row_formula_small_a(0, 1), 0u);
    EXPECT_THROW(row_formula_small_a(3, 5), PreconditionError);
    EXPECT_THROW(row_formula_small_a(0, 0), PreconditionError);
}

TEST(RowFormula, MatchesBruteForceGrid) {
    const auto g = brute::two_star_grid(120);
    for (std::uint64_t a = 0; a <= 2; ++a) {
        for (std::uint64_t b = std::max<std::uint64_t>(a, 1); b <= 120; ++b) {
            EXPECT_EQ(static_cast<std::int64_t>(row_formula_small_a(a, b)), g[a][b]) << a << "," << b;
        }
    }
}
