#include "loopbraid/cli.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace loopbraid;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return { code, out.str(), err.str() };
}

std::string sample(const std::string &name) {
    const char *dir = std::getenv("LOOPBRAID_SAMPLES");
    return (std::filesystem::path(dir ? dir : "samples") / name).string();
}

std::string pair_json(const Pair &p) { return io::to_json(io::PairFile{ p, nullptr }).dump(); }

}  // namespace

TEST(Cli, CountUnsigned) {
    const Outcome r = run({ "count", "--max", "4" });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 1 3 6 13\n");
}

TEST(Cli, CountSigned) {
    const Outcome r = run({ "count", "--max", "5", "--signed" });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 2 7 18 47 110\n");
    const Outcome j = run({ "count", "--max", "2", "--signed", "--format", "json" });
    EXPECT_EQ(io::parse_json(j.out), io::Json({ { "signed", { 1, 2, 7 } } }));
    EXPECT_EQ(run({ "count", "--max", "2", "--format", "tsv" }).out, "0\t1\n1\t1\n2\t3\n");
}

TEST(Cli, Enumerate) {
    const Outcome r = run({ "enumerate", "--n", "3", "--signed", "--format", "tsv" });
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 18);
    const Outcome l = run({ "enumerate", "--n", "2", "--labelled" });
    EXPECT_EQ(io::parse_json(l.out).size(), 10U);
    EXPECT_EQ(run({ "enumerate", "--n", "9", "--labelled" }).code, 2);
    EXPECT_EQ(run({ "enumerate", "--n", "3" }).code, 0);
}

TEST(Cli, ConstructThenVerify) {
    const Outcome c = run({ "construct", "--random", "--seed", "1", "--shape", R"({"plus":[{"top":[1,2],"bottom":[3]}]})" });
    ASSERT_EQ(c.code, 0) << c.err;
    const io::Json file = io::parse_json(c.out);
    EXPECT_EQ(file.at("metadata").at("seed"), 1);
    const Outcome v = run({ "verify", c.out, "--method", "both" });
    EXPECT_EQ(v.code, 0) << v.err;
    const io::Json rep = io::parse_json(v.out);
    EXPECT_TRUE(rep.at("rrs").get<bool>());
    EXPECT_FALSE(rep.at("reverse_srr").get<bool>());
    EXPECT_EQ(run({ "construct", "--random", "--seed", "1", "--shape", R"({"plus":[{"top":[1,2],"bottom":[3]}]})" }).out, c.out);
}

TEST(Cli, ConstructFromParams) {
    const Outcome c = run({ "construct", "--shape", R"({"plus":[[2,1]]})", "--params", R"({"nations":[{"alpha":{"re":"2"},"beta":{"re":"-1/3"}}]})" });
    ASSERT_EQ(c.code, 0) << c.err;
    const io::PairFile f = io::pair_file_from_json(io::parse_json(c.out));
    EXPECT_EQ(f.pair, testsupport::example_123(2, Rational(-1, 3)));
    EXPECT_EQ(run({ "construct", "--shape", R"({"plus":[[2,1]]})" }).code, 2);
}

TEST(Cli, VerifyFailureExitsOne) {
    const Outcome v = run({ "verify", pair_json(testsupport::cautionary(2, 3)) });
    EXPECT_EQ(v.code, 1);
    const io::Json rep = io::parse_json(v.out);
    EXPECT_FALSE(rep.at("rrs").get<bool>());
    EXPECT_FALSE(rep.at("failures").empty());
}

TEST(Cli, MalformedInputExitsTwo) {
    EXPECT_EQ(run({ "verify", "{\"S\":1}" }).code, 2);
    EXPECT_EQ(run({ "verify", "/nonexistent/pair.json" }).code, 2);
    EXPECT_EQ(run({ "bogus" }).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({ "--help" }).code, 0);
    io::Json extra = io::parse_json(pair_json(testsupport::example_123(2, 3)));
    extra["unexpected"] = 1;
    EXPECT_EQ(run({ "verify", extra.dump() }).code, 2);
}

TEST(Cli, ClassifyRoundTripsShapes) {
    for (int N = 1; N <= 4; ++N) {
        for (const SignedShape &s : enum_signed(N)) {
            const std::string shape = io::to_json(canonical_labelling(s)).dump();
            const Outcome c = run({ "construct", "--random", "--seed", "7", "--shape", shape });
            ASSERT_EQ(c.code, 0) << c.err;
            const Outcome k = run({ "classify", c.out });
            ASSERT_EQ(k.code, 0) << k.err;
            EXPECT_EQ(io::signed_shape_from_json(io::parse_json(k.out).at("shape")), s);
        }
    }
}

TEST(Cli, ClassifyRejectsNonSolution) { EXPECT_EQ(run({ "classify", pair_json(testsupport::cautionary(2, 3)) }).code, 1); }

TEST(Cli, GaugeAndRestrict) {
    const Pair p = testsupport::example_123(2, 5);
    const Outcome g = run({ "gauge", pair_json(p), "--m", R"([{"i":1,"j":3,"m":{"re":"7"}}])" });
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_EQ(io::pair_file_from_json(io::parse_json(g.out)).pair, gauge_transform(p, GaugeMap{ { { 1, 3 }, ExactComplex{ 7 } } }));
    EXPECT_EQ(run({ "gauge", pair_json(p), "--m", R"([{"i":1,"j":3,"m":{"re":"0"}}])" }).code, 2);
    const Outcome r = run({ "restrict", pair_json(p), "--map", "3,1" });
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::pair_file_from_json(io::parse_json(r.out)).pair, restrict(p, std::vector<int>{ 3, 1 }));
    EXPECT_EQ(run({ "restrict", pair_json(p), "--map", "1,1" }).code, 2);
    EXPECT_EQ(run({ "restrict", pair_json(p), "--map", "1,x" }).code, 2);
}

TEST(Cli, ExportDense) {
    const Pair p = testsupport::example_123(2, 5);
    const Outcome e = run({ "export-dense", pair_json(p), "--width", "2" });
    ASSERT_EQ(e.code, 0);
    const io::Json j = io::parse_json(e.out);
    EXPECT_EQ(j.at("R").at("side"), 9);
    const Outcome w = run({ "export-dense", pair_json(p), "--width", "3" });
    EXPECT_EQ(io::parse_json(w.out).at("S2").at("side"), 27);
    EXPECT_EQ(run({ "export-dense", pair_json(p), "--width", "4" }).code, 2);
}

TEST(Cli, FloatImport) {
    const std::string text = R"({"S":{"N":2,"vertex":[1,-1],"edges":[{"i":1,"j":2,"block":[[0,1],[1,0]]}]},
        "R":{"N":2,"vertex":[0.5,0.3333333333333],"edges":[{"i":1,"j":2,"block":[[0.8333333333333,0.5],[-0.3333333333333,0]]}]}})";
    EXPECT_EQ(run({ "verify", text }).code, 2);
    const Outcome v = run({ "verify", text, "--float-import", "--eps", "1e-9" });
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(run({ "verify", text, "--float-import", "--eps", "1e-15" }).code, 2);
}

TEST(Cli, SampleFiles) {
    EXPECT_EQ(run({ "verify", sample("pair_two_county.json") }).code, 0);
    EXPECT_EQ(run({ "verify", sample("pair_cautionary.json") }).code, 1);
    EXPECT_EQ(run({ "construct", "--shape", sample("shape_two_nations.json"), "--params", sample("params_two_nations.json") }).code, 0);
    EXPECT_EQ(run({ "gauge", sample("pair_two_county.json"), "--m", sample("gauge.json") }).code, 0);
    EXPECT_EQ(run({ "classify", sample("pair_two_county.json") }).code, 0);
}
