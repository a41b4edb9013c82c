#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace birank::cli {

/// Bad combination of arguments detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    int precision = 6;
};

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

struct IterationOptions {
    double alpha = 0.85;
    double beta = 0.85;
    double tol = 1e-4;
    int max_iters = 200;
};

struct RankOptions {
    std::string graph;
    std::string p0;
    std::string u0;
    std::string scheme = "birank";
    std::string init = "uniform";
    std::string out;
    bool trace = false;
    IterationOptions iter;
};

struct GenerateOptions {
    std::string kind;
    std::size_t u = 0;
    std::size_t p = 0;
    double density = 0.01;
    double lambda = 2.0;
    std::string out;
    std::string manifest;
};

struct PopularityOptions {
    std::string comments;
    std::string friends;
    std::string views;
    long long t0 = 0;
    double delta = 0.85;
    double a = 1.0;
    double b = 0.0;
    double time_unit = 1.0;
    IterationOptions iter;
    std::string out;
    std::string manifest;
};

struct RecommendOptions {
    std::string triples;
    std::string user;
    std::size_t k = 10;
    bool aspects = false;
    std::string aspects_out;
    IterationOptions iter;
    std::string out;
    std::string manifest;
};

struct EvalOptions {
    std::string predicted;
    std::string truth;
    std::string metric = "spearman";
    std::size_t k = 10;
    std::string out;
    std::string manifest;
};

struct BenchOptions {
    std::string kind = "random";
    std::vector<std::string> sizes;
    std::vector<double> densities;
    std::vector<double> lambdas;
    std::vector<std::uint64_t> seeds;
    int iters = 10;
    double alpha = 0.85;
    double beta = 0.85;
    std::string out;
    std::string manifest;
};

int run_rank(const RankOptions& opts, const GlobalOptions& global, Streams io);
int run_generate(const GenerateOptions& opts, const GlobalOptions& global, Streams io);
int run_predict_popularity(const PopularityOptions& opts, const GlobalOptions& global, Streams io);
int run_recommend(const RecommendOptions& opts, const GlobalOptions& global, Streams io);
int run_eval(const EvalOptions& opts, const GlobalOptions& global, Streams io);
int run_bench(const BenchOptions& opts, const GlobalOptions& global, Streams io);

}  // namespace birank::cli
