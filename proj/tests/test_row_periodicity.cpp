#include <gtest/gtest.h>

#include <vector>

#include "fixtures/reference_values.hpp"
#include "stargrundy/row_periodicity.hpp"
#include "support/brute_force.hpp"

using namespace stargrundy;

namespace {

const std::vector<std::vector<std::int64_t>>& grid() {
    static const auto g = brute::two_star_grid(260);
    return g;
}

std::int64_t brute_h(std::uint64_t a, std::uint64_t b) {
    return grid()[a][b] - static_cast<std::int64_t>(b) + static_cast<std::int64_t>(a);
}

}  // namespace

TEST(HValue, Examples) {
    TwoStarNimTable t;
    EXPECT_EQ(h_value(2, 4, t), 3);
    EXPECT_EQ(h_value(3, 5, t), 4);
    for (std::uint64_t b = 0; b < 30; ++b) EXPECT_EQ(h_value(1, b, t), 1) << b;
    EXPECT_EQ(h_value(0, 9, t), 1);
}

TEST(HValue, BoundedByTwoA) {
    TwoStarNimTable t;
    for (std::uint64_t a = 1; a <= 15; ++a) {
        for (std::uint64_t b = 2 * a; b <= 200; ++b) {
            const auto h = h_value(a, b, t);
            EXPECT_GE(h, 0);
            EXPECT_LT(h, static_cast<std::int64_t>(2 * a));
        }
    }
}

TEST(Machine, SeedPreconditions) {
    TwoStarNimTable t;
    EXPECT_THROW(row_machine_seed(0, 5, t), PreconditionError);
    EXPECT_THROW(row_machine_seed(3, 4, t), PreconditionError);
    EXPECT_THROW(row_machine_seed(kMaxMachineRow + 1, 200, t), PreconditionError);
    EXPECT_NO_THROW(row_machine_seed(3, 5, t));
}

TEST(Machine, TracksEveryLevelAgainstBruteForce) {
    TwoStarNimTable t;
    for (unsigned a = 1; a <= 7; ++a) {
        auto s = row_machine_seed(a, 2 * a - 1, t);
        for (std::uint64_t b = 2 * a - 1; b < 250; ++b) {
            ASSERT_EQ(s.b, b);
            for (unsigned l = 1; l <= a; ++l) ASSERT_EQ(machine_h(s, l), brute_h(l, b)) << "a=" << a << " l=" << l;
            auto step = row_machine_step(s);
            ASSERT_EQ(step.h, brute_h(a, b + 1)) << "a=" << a << " b=" << b + 1;
            s = std::move(step.next);
        }
    }
}

TEST(Machine, StateIgnoresColumnCounter) {
    TwoStarNimTable t;
    auto s = row_machine_seed(2, 3, t);
    auto u = s;
    u.b += 100;
    EXPECT_TRUE(s.same_machine(u));
    EXPECT_EQ(s.key(), u.key());
}

TEST(Certificate, PeriodsOfFirstRows) {
    TwoStarNimTable t;
    const std::uint64_t expected[] = {1, 3, 9, 36, 144, 720};
    for (unsigned a = 1; a <= 6; ++a) {
        const auto c = certify_row_period(a, t);
        EXPECT_EQ(c.a, a);
        EXPECT_EQ(c.period, expected[a - 1]) << "a=" << a;
        EXPECT_EQ(c.block.size(), c.period);
        EXPECT_TRUE(c.certified);
        EXPECT_LT(c.evidence.first, c.evidence.second);
        EXPECT_EQ((c.evidence.second - c.evidence.first) % c.period, 0u);
    }
    // 1, 3, 9, 36, 144, 720: successive ratios 3, 3, 4, 4, 5.
    const auto one = certify_row_period(1, t);
    EXPECT_EQ(one.preperiod, 0u);
    EXPECT_EQ(one.block, std::vector<std::int64_t>{1});
}

TEST(Certificate, AdditivePeriodHoldsInBruteForce) {
    TwoStarNimTable t;
    for (unsigned a = 1; a <= 4; ++a) {
        const auto c = certify_row_period(a, t);
        const auto p = static_cast<std::int64_t>(c.period);
        for (std::uint64_t b = c.preperiod; b + c.period <= 260; ++b) {
            ASSERT_EQ(grid()[a][b + c.period], grid()[a][b] + p) << "a=" << a << " b=" << b;
            ASSERT_EQ(brute_h(a, b), c.block[(b - c.preperiod) % c.period]);
        }
        if (c.preperiod > 0) {
            const auto b = c.preperiod - 1;
            EXPECT_NE(grid()[a][b + c.period], grid()[a][b] + p) << "preperiod of row " << a << " is not minimal";
        }
    }
}

TEST(Certificate, LongerRowsAgainstTable) {
    TwoStarNimTable t;
    for (unsigned a = 5; a <= 6; ++a) {
        const auto c = certify_row_period(a, t);
        const std::uint64_t end = c.preperiod + 3 * c.period;
        for (std::uint64_t b = c.preperiod; b < end; ++b) {
            ASSERT_EQ(h_value(a, b, t), c.block[(b - c.preperiod) % c.period]) << "a=" << a << " b=" << b;
        }
    }
}

TEST(Certificate, Budget) {
    TwoStarNimTable t;
    try {
        certify_row_period(5, t, 10);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        // Columns 0 .. 2a - 1 come from the seed, then ten machine steps.
        ASSERT_EQ(e.partial().size(), 10u + 10u);
        for (std::uint64_t b = 0; b < e.partial().size(); ++b) EXPECT_EQ(e.partial()[b], brute_h(5, b));
    }
}

TEST(FindB, Examples) {
    TwoStarNimTable t;
    EXPECT_EQ(find_b(2, 0, t), 2u);
    EXPECT_EQ(find_b(4, 9, t), 6u);
    EXPECT_EQ(find_b(0, 7, t), 8u);
    EXPECT_EQ(find_b(8, 0, t), 8u);
}

TEST(FindB, InverseOfRowAgainstBruteForce) {
    TwoStarNimTable t;
    for (std::uint64_t a = 0; a <= 40; ++a) {
        for (std::uint64_t g = 0; g <= 40; ++g) {
            std::vector<std::uint64_t> hits;
            for (std::uint64_t b = 0; b <= 200; ++b) {
                if ((a || b) && grid()[a][b] == static_cast<std::int64_t>(g)) hits.push_back(b);
            }
            ASSERT_EQ(hits.size(), 1u) << a << " " << g;
            EXPECT_EQ(find_b(a, g, t), hits[0]) << a << " " << g;
        }
    }
}

TEST(FindB, ReportsExhaustedBudget) {
    TwoStarNimTable t(50);
    EXPECT_THROW(find_b(30, 30, t), ResourceLimit);
}

TEST(Symmetry, StoredRectangle) {
    TwoStarNimTable t;
    t.reserve(60, 60);
    for (std::uint64_t a = 0; a <= 60; ++a) {
        for (std::uint64_t b = 0; b <= 60; ++b) {
            if (a == 0 && b == 0) continue;
            EXPECT_EQ(t.stored(a, b), t.stored(b, a));
            EXPECT_EQ(static_cast<std::int64_t>(t.stored(a, b)), grid()[a][b]);
        }
    }
    EXPECT_THROW(t.stored(0, 0), PreconditionError);
}

TEST(Table, ReferenceCells) {
    TwoStarNimTable t;
    for (const auto& c : fixtures::kTable) {
        EXPECT_EQ(t.value(c.a, c.b), c.g) << c.a << "," << c.b;
        EXPECT_EQ(static_cast<std::uint64_t>(grid()[c.a][c.b]), c.g) << c.a << "," << c.b;
    }
}

TEST(Diagonal, TwoFour) {
    TwoStarNimTable t;
    const auto r = explore_diagonal(2, 4, 100, t);
    EXPECT_EQ(r.values, std::vector<std::int64_t>(fixtures::kDiagonal24.begin(), fixtures::kDiagonal24.end()));
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.preperiod, 8u);
    EXPECT_EQ(r.period, 4u);
    EXPECT_FALSE(r.certified);
}

TEST(Diagonal, TwoFive) {
    TwoStarNimTable t;
    const auto r = explore_diagonal(2, 5, 400, t);
    EXPECT_EQ(r.values, std::vector<std::int64_t>(fixtures::kDiagonal25.begin(), fixtures::kDiagonal25.end()));
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.preperiod, 28u);
    EXPECT_EQ(r.period, 144u);
    EXPECT_EQ(r.block.size(), 144u);
}

TEST(Diagonal, MainDiagonalIsZero) {
    TwoStarNimTable t;
    // G(1, 1) = 1 is the one nonzero cell on the diagonal.
    const auto first = explore_diagonal(1, 1, 40, t);
    EXPECT_EQ(first.preperiod, 1u);
    EXPECT_EQ(first.period, 1u);
    for (std::uint64_t k = 2; k <= 5; ++k) {
        const auto r = explore_diagonal(k, k, 40, t);
        ASSERT_TRUE(r.found);
        EXPECT_EQ(r.preperiod, 0u);
        EXPECT_EQ(r.period, 1u);
        EXPECT_EQ(r.block, std::vector<std::int64_t>{0});
    }
}

TEST(Diagonal, SelectionRule) {
    // A tail that only repeats once is not enough evidence.
    EXPECT_FALSE(find_eventual_period({1, 2, 3}).found);
    const auto r = find_eventual_period({5, 1, 2, 1, 2, 1, 2});
    EXPECT_EQ(r.preperiod, 1u);
    EXPECT_EQ(r.period, 2u);
}

TEST(Diagonal, Preconditions) {
    TwoStarNimTable t;
    EXPECT_THROW(explore_diagonal(5, 4, 10, t), PreconditionError);
    EXPECT_THROW(explore_diagonal(2, 4, 0, t), PreconditionError);
}
