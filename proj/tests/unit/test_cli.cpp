#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "birank_cli/cli.hpp"
#include "support/temp_dir.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = birank::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

// rank<TAB>id<TAB>score lines into id -> score.
std::map<std::string, double> scores(const std::string& text) {
    std::map<std::string, double> out;
    for (const auto& line : lines(text)) {
        const auto a = line.find('\t');
        const auto b = line.find('\t', a + 1);
        out[line.substr(a + 1, b - a - 1)] = std::stod(line.substr(b + 1));
    }
    return out;
}

std::vector<std::string> ids_in_order(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& line : lines(text)) {
        const auto a = line.find('\t');
        const auto b = line.find('\t', a + 1);
        out.push_back(line.substr(a + 1, b - a - 1));
    }
    return out;
}

class Cli : public ::testing::Test {
protected:
    test_support::TempDir dir;
    std::string at(const std::string& name) const { return (dir.path() / name).string(); }
};

TEST_F(Cli, HelpAndMissingSubcommand) {
    EXPECT_EQ(invoke({"--help"}).code, 0);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST_F(Cli, RankSingleEdge) {
    const auto g = dir.write("g.tsv", "a\tx\t1\n");
    const auto r = invoke({"rank", "--graph", g, "--out", at("r")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(dir.read("r.u.tsv")).size(), 1u);
    EXPECT_EQ(lines(dir.read("r.p.tsv")).size(), 1u);
    EXPECT_NE(dir.read("r.manifest.json").find("\"subcommand\": \"rank\""), std::string::npos);
}

TEST_F(Cli, RankRejectsOutOfRangeAlpha) {
    const auto g = dir.write("g.tsv", "a\tx\t1\n");
    const auto r = invoke({"rank", "--graph", g, "--out", at("r"), "--alpha", "1.5"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--alpha"), std::string::npos);
}

TEST_F(Cli, RankCoHitsOneStepMatchesHandProduct) {
    // W = [[1, 2], [0, 3]]; forward = W Dp^-1 = [[1, .4], [0, .6]], backward = W^T Du^-1 = [[1/3, 0], [2/3, 1]].
    // From uniform vectors with alpha = beta = 0.5: p = [1/3, 2/3], u = [0.55, 0.45].
    const auto g = dir.write("g.tsv", "u1\tp1\t1\nu1\tp2\t2\nu2\tp2\t3\n");
    const auto r = invoke({"--precision", "17", "rank", "--graph", g, "--out", at("r"), "--scheme", "cohits",
                           "--alpha", "0.5", "--beta", "0.5", "--max-iters", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto p = scores(dir.read("r.p.tsv"));
    const auto u = scores(dir.read("r.u.tsv"));
    EXPECT_NEAR(p.at("p1"), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(p.at("p2"), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(u.at("u1"), 0.55, 1e-15);
    EXPECT_NEAR(u.at("u2"), 0.45, 1e-15);
}

TEST_F(Cli, RankQueryVectorsAndTrace) {
    const auto g = dir.write("g.tsv", "u1\tp1\t1\nu2\tp1\t1\nu2\tp2\t1\n");
    const auto p0 = dir.write("p0.tsv", "p2\t1\nghost\t4\n");
    const auto r = invoke({"rank", "--graph", g, "--p0", p0, "--out", at("r"), "--trace", "--alpha", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("ignored"), std::string::npos);
    const auto p = scores(dir.read("r.p.tsv"));
    EXPECT_EQ(p.at("p1"), 0.0);
    EXPECT_EQ(p.at("p2"), 1.0);
    const auto trace = lines(dir.read("r.trace.csv"));
    ASSERT_GE(trace.size(), 2u);
    EXPECT_EQ(trace[0], "iteration,diff,objective,seconds");
}

TEST_F(Cli, RankIsReproducible) {
    const auto g = dir.write("g.tsv", "u1\tp1\t1.5\nu2\tp1\t2\nu2\tp2\t0.5\nu3\tp2\t1\nu3\tp3\t4\n");
    ASSERT_EQ(invoke({"rank", "--graph", g, "--out", at("a")}).code, 0);
    ASSERT_EQ(invoke({"rank", "--graph", g, "--out", at("b")}).code, 0);
    EXPECT_EQ(dir.read("a.u.tsv"), dir.read("b.u.tsv"));
    EXPECT_EQ(dir.read("a.p.tsv"), dir.read("b.p.tsv"));
}

TEST_F(Cli, MalformedInputsGiveLineNumbers) {
    const auto bad3 = dir.write("bad3.tsv", "a\tb\t1\nbroken\n");
    const auto empty = dir.write("empty.tsv", "# only a comment\n");
    const auto pred = dir.write("pred.tsv", "1\ta\t0.5\n2\tb\tnot-a-number\n");
    const auto truth = dir.write("truth.tsv", "a\t1\nb\t2\n");
    const std::vector<std::vector<std::string>> cases{
        {"rank", "--graph", bad3, "--out", at("x")},
        {"predict-popularity", "--comments", bad3, "--t0", "5"},
        {"recommend", "--triples", bad3, "--user", "a"},
        {"eval", "--predicted", pred, "--truth", truth},
    };
    for (const auto& args : cases) {
        const auto r = invoke(args);
        EXPECT_EQ(r.code, 1) << args[0];
        EXPECT_NE(r.err.find(":2:"), std::string::npos) << args[0] << ": " << r.err;
    }
    for (const auto& sub : {"rank", "predict-popularity", "recommend"}) {
        std::vector<std::string> args{sub};
        if (std::string(sub) == "rank") {
            args.insert(args.end(), {"--graph", empty, "--out", at("x")});
        } else if (std::string(sub) == "predict-popularity") {
            args.insert(args.end(), {"--comments", empty, "--t0", "1"});
        } else {
            args.insert(args.end(), {"--triples", empty, "--user", "a"});
        }
        const auto r = invoke(args);
        EXPECT_EQ(r.code, 1) << sub;
        EXPECT_NE(r.err.find("no data lines"), std::string::npos) << sub;
    }
    EXPECT_EQ(invoke({"eval", "--predicted", empty, "--truth", truth}).code, 1);
    EXPECT_EQ(invoke({"rank", "--graph", at("missing.tsv"), "--out", at("x")}).code, 2);
}

TEST_F(Cli, GenerateThroughFiles) {
    ASSERT_EQ(invoke({"generate", "--kind", "random", "--u", "4", "--p", "5", "--density", "1", "--out", at("full.tsv")})
                  .code,
              0);
    EXPECT_EQ(lines(dir.read("full.tsv")).size(), 20u);
    EXPECT_NE(dir.read("full.tsv.manifest.json").find("\"edges\": 20"), std::string::npos);

    for (const auto* name : {"a.tsv", "b.tsv"}) {
        ASSERT_EQ(invoke({"--seed", "17", "generate", "--kind", "powerlaw", "--u", "50", "--p", "80", "--out", at(name)})
                      .code,
                  0);
    }
    EXPECT_EQ(dir.read("a.tsv"), dir.read("b.tsv"));

    ASSERT_EQ(invoke({"generate", "--kind", "powerlaw", "--u", "30", "--p", "40", "--lambda", "50", "--out", at("s.tsv")})
                  .code,
              0);
    std::map<std::string, int> degree;
    for (const auto& line : lines(dir.read("s.tsv"))) {
        ++degree[line.substr(0, line.find('\t'))];
    }
    for (const auto& [u, d] : degree) {
        EXPECT_EQ(d, 1) << u;
    }

    EXPECT_EQ(invoke({"generate", "--kind", "random", "--u", "3", "--p", "3", "--density", "0"}).code, 2);
    EXPECT_EQ(invoke({"generate", "--kind", "random", "--u", "3", "--p", "3", "--lambda", "2"}).code, 2);
}

TEST_F(Cli, PredictPopularityThroughFiles) {
    const auto single = dir.write("single.tsv", "a\tonly\t3\nb\tonly\t1\n");
    auto r = invoke({"predict-popularity", "--comments", single, "--t0", "3", "--manifest", at("m.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(ids_in_order(r.out), (std::vector<std::string>{"only"}));

    const auto tie = dir.write("tie.tsv", "u1\tb\t3\nu2\ta\t3\n");
    const auto friends = dir.write("friends.tsv", "u1\t2\nu2\t2\n");
    const auto views = dir.write("views.tsv", "a\t5\nb\t5\n");
    r = invoke({"predict-popularity", "--comments", tie, "--friends", friends, "--views", views, "--t0", "3",
                "--manifest", at("m.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(ids_in_order(r.out), (std::vector<std::string>{"a", "b"}));

    std::string recency;
    for (int k = 0; k < 10; ++k) {
        recency += "u" + std::to_string(k) + "\tA\t100\n";
        recency += "u" + std::to_string(k) + "\tB\t70\n";
    }
    r = invoke({"predict-popularity", "--comments", dir.write("rec.tsv", recency), "--t0", "100", "--out",
                at("pop.tsv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(ids_in_order(dir.read("pop.tsv")), (std::vector<std::string>{"A", "B"}));
}

TEST_F(Cli, RecommendThroughFiles) {
    const auto triples = dir.write("t.tsv", "u1\tp1\t5\nu2\tp1\t4\nu3\tp1\t1\nu2\tp2\t3\nu3\tp3\t3\n");
    auto r = invoke({"recommend", "--triples", triples, "--user", "u1", "--k", "10", "--manifest", at("m.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(ids_in_order(r.out), (std::vector<std::string>{"p2", "p3"}));
    r = invoke({"recommend", "--triples", triples, "--user", "u1", "--k", "1", "--manifest", at("m.json")});
    EXPECT_EQ(ids_in_order(r.out), (std::vector<std::string>{"p2"}));
    r = invoke({"recommend", "--triples", triples, "--user", "u9", "--manifest", at("m.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(invoke({"recommend", "--triples", triples, "--user", "u1", "--k", "0"}).code, 2);

    const auto aspects = dir.write("a.tsv", "u1\tp1\tsvc\t5\nu2\tp1\tsvc\t4\nu2\tp2\tfood\t3\nu3\tp3\tview\t3\n");
    r = invoke({"recommend", "--triples", aspects, "--user", "u1", "--aspects", "--aspects-out", at("asp.tsv"),
                "--out", at("items.tsv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(dir.read("items.tsv")).size(), 2u);
    EXPECT_EQ(lines(dir.read("asp.tsv")).size(), 3u);
}

TEST_F(Cli, EvalThroughFiles) {
    const auto pred = dir.write("pred.tsv", "1\ta\t0.9\n2\tb\t0.8\n3\tc\t0.7\n4\td\t0.1\n");
    const auto m = at("m.json");
    auto value = [&](const std::vector<std::string>& args) {
        const auto r = invoke(args);
        EXPECT_EQ(r.code, 0) << r.err;
        std::map<std::string, std::string> out;
        for (const auto& line : lines(r.out)) {
            out[line.substr(0, line.find('\t'))] = line.substr(line.find('\t') + 1);
        }
        return out;
    };
    EXPECT_EQ(value({"eval", "--predicted", pred, "--truth", dir.write("t1.tsv", "a\t4\nb\t3\nc\t2\nd\t1\n"),
                     "--manifest", m})["spearman"],
              "1");
    EXPECT_EQ(value({"eval", "--predicted", pred, "--truth", dir.write("t2.tsv", "a\t1\nb\t2\nc\t3\nd\t4\n"),
                     "--manifest", m})["spearman"],
              "-1");
    EXPECT_EQ(value({"eval", "--predicted", pred, "--truth", dir.write("t3.tsv", "a\t4\nb\t2\nc\t3\nd\t1\n"),
                     "--manifest", m})["spearman"],
              "0.8");
    const auto topk = value({"eval", "--predicted", pred, "--truth", dir.write("h.tsv", "b\nz\n"), "--metric", "topk",
                             "--k", "2", "--manifest", m});
    EXPECT_EQ(topk.at("hit_ratio@2"), "0.5");
    EXPECT_EQ(std::stod(topk.at("ndcg@2")), std::stod("0.386853"));
    const auto partial = dir.write("partial.tsv", "a\t1\n");
    EXPECT_EQ(invoke({"eval", "--predicted", pred, "--truth", partial, "--manifest", m}).code, 1);
}

TEST_F(Cli, BenchSweep) {
    const auto r = invoke({"bench", "--sizes", "20x30,40x30,60x30", "--densities", "0.2", "--iters", "2", "--out",
                           at("b.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(dir.read("b.csv"));
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "u,p,kind,param,seed,edges,iterations,seconds_per_iteration");
    EXPECT_EQ(invoke({"bench", "--iters", "2"}).code, 2);
    EXPECT_EQ(invoke({"bench", "--sizes", "10by10"}).code, 2);
}

}  // namespace
