#include "peerline/instance_io.hpp"

#include <gtest/gtest.h>

using namespace peerline;

namespace {

const char* kSample = R"(format: 1
# comment line
label = three on a line
objective = util-q2
n=3
k=2
ranking 1 = 1 2 3
ranking 2 = 2 1 3   # trailing comment
ranking 3 = 3 2 1
position 1 = 0
position 2 = 1/2
position 3 = 2.25
)";

} // namespace

TEST(InstanceIo, ParsesSample)
{
    Instance inst = parse_instance(std::string(kSample));
    EXPECT_EQ(inst.label, "three on a line");
    EXPECT_EQ(inst.election.k, 2);
    EXPECT_EQ(inst.election.profile.of(2), (Ranking{2, 1, 3}));
    ASSERT_TRUE(inst.metric);
    EXPECT_EQ(inst.metric->x(2), make_rational(1, 2));
    EXPECT_EQ(inst.metric->x(3), make_rational(9, 4));
    EXPECT_EQ(inst.objective, CostSpec::util_q(2));
}

TEST(InstanceIo, RoundTrip)
{
    Instance inst = parse_instance(std::string(kSample));
    EXPECT_EQ(parse_instance(write_instance(inst)), inst);
    inst.metric.reset();
    inst.objective.reset();
    inst.label.clear();
    EXPECT_EQ(parse_instance(write_instance(inst)), inst);
}

TEST(InstanceIo, Objectives)
{
    EXPECT_EQ(parse_objective("egal-add"), CostSpec::egal_add());
    EXPECT_EQ(parse_objective("egal-q12"), CostSpec::egal_q(12));
    EXPECT_FALSE(parse_objective("util-q0"));
    EXPECT_FALSE(parse_objective("util-q2x"));
    EXPECT_FALSE(parse_objective("sum"));
}

TEST(InstanceIo, Errors)
{
    auto bad = [](const std::string& s) { EXPECT_THROW(parse_instance(s), std::invalid_argument) << s; };
    bad("");
    bad("n=1\nk=1\nranking 1 = 1\n");                              // no format line
    bad("format: 2\nn=1\nk=1\nranking 1 = 1\n");                   // version
    bad("format: 1\nn=1\nk=1\nranking 1 = 1\ncolour = red\n");     // unknown key
    bad("format: 1\nn=2\nk=1\nranking 1 = 1 2\n");                 // missing ranking
    bad("format: 1\nn=1\nk=1\nranking 1 = 1\nranking 1 = 1\n");    // duplicate
    bad("format: 1\nn=2\nk=1\nranking 1 = 1 2\nranking 2 = 2 1\nposition 1 = 0\n"); // partial positions
    bad("format: 1\nn=2\nk=3\nranking 1 = 1 2\nranking 2 = 2 1\n"); // k too large
    bad("format: 1\nn=2\nk=1\nranking 1 = 1 1\nranking 2 = 2 1\n"); // duplicate agent
    bad("format: 1\nn=1\nk=1\nranking 1 = 1\nposition 1 = abc\n");
    bad("format: 1\nn=x\nk=1\n");
}
