#include "rufpp/io.hpp"
#include "rufpp/model.hpp"
#include "rufpp/sparse_table.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace rufpp;
using namespace rufpp::testing;

namespace {

// Path with six edges so that a flow v1 -> v3 and a flow v4 -> v6 see
// bottlenecks 2 and 4 respectively.
PathInstance two_bottleneck_path() { return path_of({4, 2, 2, 4, 4, 4}); }

} // namespace

TEST(Rational, ParsesDecimalsFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("0.75"), Rational(3, 4));
    EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("1e2"), Rational(100));
    EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
    EXPECT_EQ(parse_rational("010"), Rational(10));
    EXPECT_THROW(parse_rational("abc"), std::exception);
    EXPECT_THROW(parse_rational("1/0"), std::exception);
    EXPECT_THROW(parse_rational(""), std::exception);
}

TEST(Rational, FormatsExactly) {
    EXPECT_EQ(format_rational(Rational(3, 4)), "0.75");
    EXPECT_EQ(format_rational(Rational(5)), "5");
    EXPECT_EQ(format_rational(Rational(1, 3)), "1/3");
    EXPECT_EQ(format_rational(Rational(-3, 8)), "-0.375");
    for (const auto* text : {"1/3", "0.001", "17", "2/7", "123.456"}) {
        const auto v = parse_rational(text);
        EXPECT_EQ(parse_rational(format_rational(v)), v) << text;
    }
}

TEST(Rational, Logarithms) {
    EXPECT_EQ(ceil_log(Rational(4, 3), Rational(2)), 3);
    EXPECT_EQ(ceil_log(Rational(4, 3), Rational(16)), 10);
    EXPECT_EQ(ceil_log(Rational(2), Rational(1)), 0);
    EXPECT_EQ(ceil_log(Rational(2), Rational(4)), 2);
    EXPECT_EQ(floor_log2(Rational(1)), 0);
    EXPECT_EQ(floor_log2(Rational(7, 2)), 1);
    EXPECT_EQ(floor_log2(Rational(8)), 3);
    EXPECT_EQ(floor_log2(Rational(1, 2)), -1);
    EXPECT_EQ(floor_log2(Rational(3, 8)), -2);
    EXPECT_EQ(pow(Rational(3, 4), 2), Rational(9, 16));
}

TEST(SparseTable, LeftmostMinimumOnEveryRange) {
    TestRng rng(7);
    std::vector<int> values;
    for (int i = 0; i < 40; ++i) {
        values.push_back(static_cast<int>(rng.between(0, 5)));
    }
    SparseTable<int> table(values);
    for (std::size_t a = 0; a < values.size(); ++a) {
        for (std::size_t b = a; b < values.size(); ++b) {
            const auto expected =
                static_cast<std::size_t>(std::min_element(values.begin() + a, values.begin() + b + 1) - values.begin());
            ASSERT_EQ(table.range_arg_min(a, b), expected);
        }
    }
}

TEST(Model, EdgesUsed) {
    EXPECT_EQ(edges_used(flow(0, 1, 3, 1)).first, 2);
    EXPECT_EQ(edges_used(flow(0, 1, 3, 1)).last, 3);
    EXPECT_EQ(edges_used(flow(0, 0, 1, 1)).first, 1);
    EXPECT_EQ(edges_used(flow(0, 0, 1, 1)).last, 1);
    EXPECT_EQ(edges_used(flow(0, 0, 7, 1)).size(), 7);
}

TEST(Model, AnnotateFindsBottleneck) {
    const auto path = two_bottleneck_path();
    const auto f1 = annotate(path, flow(0, 1, 3, 1));
    const auto f2 = annotate(path, flow(1, 4, 6, 1));
    EXPECT_EQ(f1.bottleneck, 2);
    EXPECT_EQ(f1.bottleneck_edge, 2);
    EXPECT_EQ(f2.bottleneck, 4);

    const auto uniform = path_of({5, 5, 5, 5});
    EXPECT_EQ(annotate(uniform, flow(0, 1, 4, 2)).bottleneck, 5);

    const auto p = path_of({3, 1, 4});
    const auto af = annotate(p, flow(0, 0, 3, 1));
    EXPECT_EQ(af.bottleneck, 1);
    EXPECT_EQ(af.bottleneck_edge, 2);
}

TEST(Model, AnnotateRejectsMalformedFlows) {
    const auto p = path_of({3, 1, 4});
    EXPECT_THROW(annotate(p, flow(0, 2, 2, 1)), InvalidFlowError);
    EXPECT_THROW(annotate(p, flow(0, 2, 1, 1)), InvalidFlowError);
    EXPECT_THROW(annotate(p, flow(0, 0, 4, 1)), InvalidFlowError);
    EXPECT_THROW(annotate(p, flow(0, -1, 2, 1)), InvalidFlowError);
    EXPECT_THROW(annotate(p, flow(0, 0, 2, 0)), InvalidFlowError);
    EXPECT_THROW(PathInstance({}), std::exception);
    EXPECT_THROW(PathInstance({Rational(1), Rational(0)}), std::exception);
}

TEST(Model, Classify) {
    const auto path = two_bottleneck_path();
    EXPECT_EQ(classify(annotate(path, flow(0, 1, 3, 1)), Rational(1, 4)), SizeClass::Large);
    EXPECT_EQ(classify(annotate(path, flow(1, 4, 6, 1)), Rational(1, 4)), SizeClass::Small);
    EXPECT_EQ(classify(annotate(path, flow(2, 0, 1, 2)), Rational(1, 2)), SizeClass::Small);
    EXPECT_EQ(classify(annotate(path, flow(3, 0, 1, 4)), Rational(1)), SizeClass::Small);
    EXPECT_THROW(classify(annotate(path, flow(3, 0, 1, 4)), Rational(0)), ParameterError);
}

TEST(Model, Congestion) {
    const auto p = path_of({2, 1, 2});
    std::vector<Flow> one{flow(0, 0, 3, 1)};
    const auto r = congestion(p, one);
    EXPECT_EQ(r.per_edge, (std::vector<Rational>{Rational(1, 2), Rational(1), Rational(1, 2)}));
    EXPECT_EQ(r.r_max, 1);

    const auto empty = congestion(p, std::vector<Flow>{});
    EXPECT_EQ(empty.r_max, 0);
    for (const auto& x : empty.per_edge) {
        EXPECT_EQ(x, 0);
    }

    const auto p2 = path_of({2, 2});
    std::vector<Flow> three{flow(0, 0, 2, 2), flow(1, 0, 2, 2), flow(2, 0, 1, 1)};
    const auto r2 = congestion(p2, three);
    EXPECT_EQ(r2.per_edge, (std::vector<Rational>{Rational(5, 2), Rational(2)}));
    EXPECT_EQ(r2.r_max, Rational(5, 2));
}

TEST(Model, LowerBound) {
    const auto single = path_of({1});
    std::vector<Flow> five;
    for (int i = 0; i < 5; ++i) {
        five.push_back(flow(static_cast<FlowId>(i), 0, 1, 1));
    }
    EXPECT_EQ(lower_bound(single, five), 5);

    const auto p2 = path_of({2, 2});
    std::vector<Flow> three{flow(0, 0, 2, 2), flow(1, 0, 2, 2), flow(2, 0, 1, 1)};
    EXPECT_EQ(lower_bound(p2, three), 3);

    const auto p = path_of({3, 1, 4});
    std::vector<Flow> lone{flow(0, 0, 3, 1)};
    EXPECT_EQ(lower_bound(p, lone), 1);
    std::vector<Flow> tiny{flow(0, 0, 3, Rational(1, 100))};
    EXPECT_EQ(lower_bound(p, tiny), 1);
    EXPECT_EQ(lower_bound(p, std::vector<Flow>{}), 0);
}

TEST(Model, VerifySchedule) {
    const auto path = two_bottleneck_path();
    std::vector<Flow> flows{flow(0, 1, 3, 1), flow(1, 4, 6, 1)};
    Schedule together;
    together.assign(0, 1);
    together.assign(1, 1);
    EXPECT_TRUE(verify_schedule(path, flows, together).feasible);

    const auto single = path_of({1});
    std::vector<Flow> pair{flow(0, 0, 1, 1), flow(1, 0, 1, 1)};
    Schedule clash;
    clash.assign(0, 1);
    clash.assign(1, 1);
    const auto report = verify_schedule(single, pair, clash);
    ASSERT_FALSE(report.feasible);
    ASSERT_EQ(report.violations.size(), 1u);
    EXPECT_EQ(report.violations[0].edge, 1);
    EXPECT_EQ(report.violations[0].load, 2);
    EXPECT_EQ(report.violations[0].capacity, 1);

    EXPECT_TRUE(verify_schedule(single, std::vector<Flow>{}, Schedule{}).feasible);
}

TEST(Model, VerifyScheduleRejectsWrongCoverage) {
    const auto single = path_of({1});
    std::vector<Flow> pair{flow(0, 0, 1, 1), flow(1, 0, 1, 1)};
    Schedule partial;
    partial.assign(0, 1);
    EXPECT_THROW(verify_schedule(single, pair, partial), ScheduleStructureError);
    Schedule extra;
    extra.assign(0, 1);
    extra.assign(1, 2);
    extra.assign(5, 3);
    EXPECT_THROW(verify_schedule(single, pair, extra), ScheduleStructureError);
    Schedule bad_round;
    EXPECT_THROW(bad_round.assign(0, 0), std::exception);
}

TEST(Model, ScheduleCompactKeepsOrder) {
    Schedule s;
    s.assign(0, 7);
    s.assign(1, 3);
    s.assign(2, 7);
    EXPECT_EQ(s.num_rounds(), 2);
    EXPECT_EQ(s.max_round(), 7);
    s.compact();
    EXPECT_EQ(s.round_of(0), 2);
    EXPECT_EQ(s.round_of(1), 1);
    EXPECT_EQ(s.max_round(), 2);
}

TEST(ModelProperty, RemovingAFlowNeverRaisesCongestion) {
    TestRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        PathInstance path(random_caps(rng, static_cast<int>(rng.between(1, 10)), 5));
        auto flows = random_flows(rng, path, static_cast<int>(rng.between(1, 12)), 1, 1024, 1024);
        const auto full = congestion(path, flows);
        const auto drop = static_cast<std::size_t>(rng.between(0, static_cast<long>(flows.size()) - 1));
        flows.erase(flows.begin() + static_cast<long>(drop));
        const auto less = congestion(path, flows);
        for (std::size_t e = 0; e < full.per_edge.size(); ++e) {
            ASSERT_GE(less.per_edge[e], 0);
            ASSERT_LE(less.per_edge[e], full.per_edge[e]);
        }
    }
}

TEST(ModelProperty, AnnotationIndependentOfOrder) {
    TestRng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        PathInstance path(random_caps(rng, static_cast<int>(rng.between(1, 12)), 6));
        auto flows = random_flows(rng, path, 10, 1, 1024, 1024);
        const auto forward = annotate_all(path, flows);
        std::reverse(flows.begin(), flows.end());
        const auto backward = annotate_all(path, flows);
        for (std::size_t i = 0; i < forward.size(); ++i) {
            const auto& a = forward[i];
            const auto& b = backward[forward.size() - 1 - i];
            ASSERT_EQ(a.id(), b.id());
            ASSERT_EQ(a.bottleneck, b.bottleneck);
            ASSERT_EQ(a.bottleneck_edge, b.bottleneck_edge);
            const auto again = annotate(path, a.flow);
            ASSERT_EQ(again.bottleneck, a.bottleneck);
        }
    }
}

TEST(ModelProperty, ScheduleFeasibleIffEveryRoundFeasible) {
    TestRng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        PathInstance path(random_caps(rng, static_cast<int>(rng.between(1, 6)), 3));
        const auto flows = random_flows(rng, path, static_cast<int>(rng.between(1, 10)), 1, 1024, 1024);
        Schedule s;
        for (const auto& f : flows) {
            s.assign(f.id, static_cast<int>(rng.between(1, 3)));
        }
        bool every_round = true;
        for (const auto& [round, ids] : s.by_round()) {
            std::vector<Flow> members;
            for (auto id : ids) {
                members.push_back(flows[id]);
            }
            every_round = every_round && check_round(path, members, round).empty();
            ASSERT_EQ(check_round(path, members, round).empty(), round_fits(path, members));
        }
        ASSERT_EQ(verify_schedule(path, flows, s).feasible, every_round);
    }
}

TEST(Io, InstanceRoundTrip) {
    const std::string text =
        "# two flows\n"
        "6\n"
        "4 2 2 4 4 4\n"
        "2\n"
        "1 3 1\n"
        "4 6 0.5   # trailing comment\n";
    std::istringstream in(text);
    const auto inst = read_instance(in);
    ASSERT_EQ(inst.path.num_edges(), 6);
    ASSERT_EQ(inst.flows.size(), 2u);
    EXPECT_EQ(inst.flows[1].sigma, Rational(1, 2));
    EXPECT_EQ(inst.flows[1].id, 1u);

    std::ostringstream out;
    write_instance(out, inst);
    std::istringstream back(out.str());
    const auto again = read_instance(back);
    ASSERT_EQ(again.flows.size(), 2u);
    EXPECT_EQ(again.flows[0].s, 1);
    EXPECT_EQ(again.flows[1].sigma, Rational(1, 2));
    EXPECT_EQ(again.path.capacity(2), 2);
}

TEST(Io, ParseErrorsCarryLineNumbers) {
    std::istringstream bad_cap("2\n1 x\n0\n");
    try {
        read_instance(bad_cap);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    std::istringstream short_flows("1\n1\n2\n0 1 1\n");
    EXPECT_THROW(read_instance(short_flows), ParseError);
    std::istringstream bad_flow("1\n1\n1\n0 2 1\n");
    try {
        read_instance(bad_flow);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4);
    }
}

TEST(Io, ScheduleRoundTrip) {
    Schedule s;
    s.assign(0, 2);
    s.assign(1, 1);
    s.assign(2, 2);
    std::ostringstream out;
    write_schedule(out, s);
    EXPECT_EQ(out.str(), "1 2\n2 1\n3 2\nrounds 2\n");
    std::istringstream in(out.str());
    const auto back = read_schedule(in);
    EXPECT_EQ(back.assignments(), s.assignments());

    std::istringstream dup("1 1\n1 2\nrounds 2\n");
    EXPECT_THROW(read_schedule(dup), ParseError);
    std::istringstream wrong_count("1 1\nrounds 3\n");
    EXPECT_THROW(read_schedule(wrong_count), ParseError);
}
