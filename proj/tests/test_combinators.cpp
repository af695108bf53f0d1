// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "widenkit/chain.hpp"
#include "widenkit/combinators.hpp"
#include "widenkit/interval_trees.hpp"

using namespace widenkit;
using namespace widenkit::test;

namespace {

const ExtInt inf = ExtInt::pos_inf();

IntervalRamp byte_ramp() { return IntervalRamp{{Interval{0, 255}, Interval{0, 32767}}}; }

template <typename E>
struct Trace {
    std::vector<E> labels;
    bool converged = false;
    bool leaf_ok = true;
};

template <AbstractDomain D>
Trace<typename D::element> follow(WideningNode<typename D::element> node,
                                  const std::vector<typename D::element>& queries) {
    Trace<typename D::element> t;
    t.labels.push_back(node.proposal());
    for (const auto& q : queries) {
        auto a = node.step(q);
        if (a.is_converged()) {
            t.converged = true;
            t.leaf_ok = D::leq(q, node.proposal());
            return t;
        }
        node = a.next_node();
        t.labels.push_back(node.proposal());
    }
    return t;
}

// Ascending query sequence from the grid: each query is the join of the
// previous one and a random grid element, so trees are pushed upward.
std::vector<Interval> ascending_queries(Random& rnd, const std::vector<Interval>& grid, std::size_t n) {
    std::vector<Interval> out;
    Interval cur = Interval::bottom();
    for (std::size_t i = 0; i < n; ++i) {
        cur = interval_join(cur, rnd.pick(grid));
        out.push_back(cur);
    }
    return out;
}

} // namespace

TEST_CASE("ramp search returns the first dominating suffix", "[combinators][ramp]") {
    const auto r = byte_ramp();
    CHECK(ramp_widening_search<IntervalDomain>(Interval{0, 300}, r).values() == std::vector<Interval>{Interval{0, 32767}});
    CHECK(ramp_widening_search<IntervalDomain>(Interval{0, 10}, r).values() == r.values());
    CHECK(ramp_widening_search<IntervalDomain>(Interval{0, 40000}, r).empty());
    CHECK(ramp_widening_search<IntervalDomain>(Interval{-1, 10}, r).empty());
    CHECK(ramp_widening_search<IntervalDomain>(Interval::bottom(), r).values() == r.values());
}

TEST_CASE("ramp search agrees with a linear scan on random ramps", "[combinators][ramp][property]") {
    Random rnd(3);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<Interval> values;
        int hi = rnd.uniform(-3, 3);
        for (int k = rnd.uniform(0, 4); k > 0; --k) {
            values.emplace_back(0 < hi ? ExtInt{0} : ExtInt{hi}, ExtInt{hi});
            hi += rnd.uniform(1, 3);
        }
        IntervalRamp ramp;
        try {
            ramp = IntervalRamp{values};
        } catch (const std::invalid_argument&) {
            continue;
        }
        const Interval q = rnd.interval(8);
        const auto found = ramp_widening_search<IntervalDomain>(q, ramp);
        // Expected: drop elements from the front while q is not contained.
        std::size_t i = 0;
        while (i < values.size() && !interval_leq(q, values[i])) {
            ++i;
        }
        const std::vector<Interval> expected(values.begin() + static_cast<std::ptrdiff_t>(i), values.end());
        REQUIRE(found.values() == expected);
    }
}

TEST_CASE("ramps must be strictly ascending", "[combinators][ramp]") {
    CHECK_THROWS_AS(IntervalRamp({Interval{0, 255}, Interval{0, 255}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalRamp({Interval{0, 300}, Interval{0, 255}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalRamp({Interval{0, 5}, Interval{3, 9}}), std::invalid_argument);
    CHECK_NOTHROW(IntervalRamp(std::vector<Interval>{}));
    CHECK_NOTHROW(IntervalRamp({Interval{1, 1}}));
}

TEST_CASE("ramp_widening tries thresholds before the base", "[combinators][ramp]") {
    const auto root = ramp_widening<IntervalDomain>(byte_ramp(), brutal_interval_tree(Interval{0, 255}));
    CHECK(root.proposal() == Interval{0, 255});
    CHECK(root.depth_bound() == std::optional<std::size_t>{2 + 2});
    CHECK(step(root, Interval{0, 100}).is_converged());

    const auto a = step(root, Interval{0, 300});
    REQUIRE(a.is_next());
    CHECK(a.next_node().proposal() == Interval{0, 32767});

    const auto b = step(root, Interval{0, 40000});
    REQUIRE(b.is_next());
    // Past the last threshold the base node takes over and widens on the next query.
    CHECK(b.next_node().proposal() == Interval{0, 255});
    const auto c = step(b.next_node(), Interval{0, 40000});
    REQUIRE(c.is_next());
    CHECK(c.next_node().proposal() == Interval{0, inf});

    const auto base = brutal_interval_tree(Interval{0, 0});
    const auto same = ramp_widening<IntervalDomain>(IntervalRamp{}, base);
    CHECK(same.proposal() == base.proposal());
    CHECK(same.depth_bound() == base.depth_bound());
}

TEST_CASE("threshold_ramp lifts thresholds above the entry", "[combinators][ramp]") {
    const std::vector<Integer> ts{255, 32767};
    CHECK(threshold_ramp(Interval{0, 0}, ts).values() ==
          std::vector<Interval>{Interval{0, 0}, Interval{0, 255}, Interval{0, 32767}});
    CHECK(threshold_ramp(Interval{0, 300}, ts).values() == std::vector<Interval>{Interval{0, 300}, Interval{0, 32767}});
    CHECK(threshold_ramp(Interval{0, inf}, ts).values() == std::vector<Interval>{Interval{0, inf}});
    CHECK(threshold_ramp(Interval::bottom(), ts).values() == std::vector<Interval>{Interval::bottom()});
    CHECK_THROWS_AS(threshold_ramp(Interval{0, 0}, {5, 5}), std::invalid_argument);
}

TEST_CASE("delay 0 is the base tree, answer for answer", "[combinators][delay][property]") {
    const auto grid = interval_grid();
    Random rnd(5);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto base = brutal_interval_tree(rnd.pick(grid));
        const auto delayed = delayed_widening_each_step<IntervalDomain>(0, base);
        const auto qs = ascending_queries(rnd, grid, 6);
        const auto t1 = follow<IntervalDomain>(base, qs);
        const auto t2 = follow<IntervalDomain>(delayed, qs);
        REQUIRE(t1.labels == t2.labels);
        REQUIRE(t1.converged == t2.converged);
    }
}

TEST_CASE("delay 5 counts exactly up to 3", "[combinators][delay]") {
    const auto root = delayed_widening_each_step<IntervalDomain>(5, brutal_interval_tree(Interval{0, 0}));
    const auto t = follow<IntervalDomain>(root, {Interval{0, 1}, Interval{0, 2}, Interval{0, 3}, Interval{0, 3}});
    CHECK(t.labels == std::vector<Interval>{Interval{0, 0}, Interval{0, 1}, Interval{0, 2}, Interval{0, 3}});
    CHECK(t.converged);
}

TEST_CASE("delay 1 joins once then widens", "[combinators][delay]") {
    const auto root = delayed_widening_each_step<IntervalDomain>(1, brutal_interval_tree(Interval{0, 0}));
    const auto t = follow<IntervalDomain>(root, {Interval{0, 1}, Interval{0, 2}, Interval{0, 2}});
    CHECK(t.labels == std::vector<Interval>{Interval{0, 0}, Interval{0, 1}, Interval{0, inf}});
    CHECK(t.converged);
}

TEST_CASE("product of lookahead chains steps only the moving coordinate", "[combinators][product]") {
    using P = ProductDomain<ChainDomain, ChainDomain>;
    const auto root = product_widening<ChainDomain, ChainDomain>(chain_lookahead_tree(Chain{1}),
                                                                 chain_lookahead_tree(Chain{1}));
    const auto a = step(root, P::element{Chain{2}, Chain{1}});
    REQUIRE(a.is_next());
    CHECK(a.next_node().proposal() == P::element{Chain{3}, Chain{1}});

    const auto b = step(root, P::element{Chain{2}, Chain{2}});
    REQUIRE(b.is_next());
    CHECK(b.next_node().proposal() == P::element{Chain{3}, Chain{3}});

    CHECK(step(root, P::element{Chain{1}, Chain{1}}).is_converged());
    CHECK(root.depth_bound() == std::optional<std::size_t>{4});
}

TEST_CASE("pointwise env widening", "[combinators][env]") {
    const auto root = pointwise_env_widening(
        {{"x", brutal_interval_tree(Interval{0, 0})}, {"y", brutal_interval_tree(Interval{5, 5})}});
    CHECK(root.proposal() == AbstractEnv{{{"x", Interval{0, 0}}, {"y", Interval{5, 5}}}});

    const auto a = step(root, AbstractEnv{{{"x", Interval{0, 1}}, {"y", Interval{5, 5}}}});
    REQUIRE(a.is_next());
    CHECK(a.next_node().proposal() == AbstractEnv{{{"x", Interval{0, inf}}, {"y", Interval{5, 5}}}});

    CHECK(step(root, env_bottom()).is_converged());
    CHECK(step(root, AbstractEnv{{{"x", Interval{0, 0}}, {"y", Interval{5, 5}}}}).is_converged());
    CHECK_THROWS_AS(step(root, AbstractEnv{{{"x", Interval{0, 1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(pointwise_env_widening({{"x", brutal_interval_tree(Interval{0, 0})},
                                            {"x", brutal_interval_tree(Interval{0, 0})}}),
                    std::invalid_argument);

    const auto empty = pointwise_env_widening({});
    CHECK(step(empty, AbstractEnv::top({})).is_converged());
}

TEST_CASE("combined trees stop within their depth bound on ascending grid queries",
          "[combinators][property]") {
    const auto grid = interval_grid();
    Random rnd(11);
    for (int trial = 0; trial < 5000; ++trial) {
        const Interval start = rnd.pick(grid);
        IntervalNode tree = brutal_interval_tree(start);
        switch (rnd.uniform(0, 3)) {
        case 0:
            tree = ramp_widening<IntervalDomain>(threshold_ramp(start, {0, 1, 2}), brutal_interval_tree(start));
            break;
        case 1:
            tree = delayed_widening_each_step<IntervalDomain>(static_cast<std::size_t>(rnd.uniform(0, 3)), tree);
            break;
        case 2:
            tree = delayed_widening_each_step<IntervalDomain>(
                2, ramp_widening<IntervalDomain>(threshold_ramp(start, {1, 2}), tree));
            break;
        default:
            break;
        }
        REQUIRE(tree.depth_bound().has_value());
        const auto qs = ascending_queries(rnd, grid, 30);
        const auto t = follow<IntervalDomain>(tree, qs);
        REQUIRE(t.leaf_ok);
        REQUIRE(t.labels.size() - 1 <= *tree.depth_bound());
    }
}

TEST_CASE("product of brutal trees stops within the summed bound", "[combinators][product][property]") {
    using P = ProductDomain<IntervalDomain, IntervalDomain>;
    const auto grid = interval_grid();
    Random rnd(13);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto root = product_widening<IntervalDomain, IntervalDomain>(brutal_interval_tree(rnd.pick(grid)),
                                                                           brutal_interval_tree(rnd.pick(grid)));
        std::vector<P::element> qs;
        P::element cur = P::bottom();
        for (int i = 0; i < 20; ++i) {
            cur = P::join(cur, P::element{rnd.pick(grid), rnd.pick(grid)});
            qs.push_back(cur);
        }
        const auto t = follow<P>(root, qs);
        REQUIRE(t.leaf_ok);
        REQUIRE(t.labels.size() - 1 <= *root.depth_bound());
    }
}
