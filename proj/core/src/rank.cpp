#include "birank/rank.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "birank/error.hpp"

namespace birank {

namespace {

double squared_diff(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

void l2_normalize(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    if (s > 0.0) {
        const double inv = 1.0 / std::sqrt(s);
        for (double& x : v) {
            x *= inv;
        }
    }
}

bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            return false;
        }
    }
    return true;
}

std::vector<double> initial_vector(Init init, const QueryVector& query, const std::vector<double>& given,
                                   const char* name) {
    switch (init) {
        case Init::Uniform:
            return QueryVector::uniform(query.side, query.scores.size()).scores;
        case Init::Query:
            return query.scores;
        case Init::Given:
            if (given.size() != query.scores.size()) {
                throw DimensionError(std::string("initial ") + name + " has length " + std::to_string(given.size()) +
                                     ", expected " + std::to_string(query.scores.size()));
            }
            if (!all_finite(given)) {
                throw ConfigError(std::string("initial ") + name + " has non-finite entries");
            }
            return given;
    }
    return {};
}

Eigen::MatrixXd to_dense(const CsrMatrix& m) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto cols = m.row_cols(r);
        const auto vals = m.row_values(r);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cols[k])) = vals[k];
        }
    }
    return d;
}

Eigen::VectorXd solve_checked(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) {
        throw NumericError("stationary system is singular");
    }
    return lu.solve(rhs);
}

}  // namespace

void RankConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw ConfigError("alpha must be in [0, 1], got " + std::to_string(alpha));
    }
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw ConfigError("beta must be in [0, 1], got " + std::to_string(beta));
    }
    if (!(tol > 0.0)) {
        throw ConfigError("tol must be > 0");
    }
    if (max_iters < 1) {
        throw ConfigError("max_iters must be >= 1");
    }
}

RankResult rank(const TransitionPair& tp, const QueryVector& p0, const QueryVector& u0, const RankConfig& cfg) {
    cfg.validate();
    p0.validate(tp.p_count());
    u0.validate(tp.u_count());

    RankResult result;
    result.p = initial_vector(cfg.init, p0, cfg.initial_p, "p");
    result.u = initial_vector(cfg.init, u0, cfg.initial_u, "u");

    const bool track_objective = cfg.record_objective && cfg.alpha > 0.0 && cfg.beta > 0.0;
    const auto reg = track_objective ? hyperparam_map(cfg.alpha, cfg.beta) : Regularization{0.0, 0.0};

    const double a = cfg.alpha;
    const double b = cfg.beta;
    std::vector<double> p_next(tp.p_count());
    std::vector<double> u_next(tp.u_count());

    using clock = std::chrono::steady_clock;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        const auto start = clock::now();

        tp.backward.multiply(result.u, p_next, cfg.threads);
        for (std::size_t j = 0; j < p_next.size(); ++j) {
            p_next[j] = a * p_next[j] + (1.0 - a) * p0.scores[j];
        }
        tp.forward.multiply(p_next, u_next, cfg.threads);
        for (std::size_t i = 0; i < u_next.size(); ++i) {
            u_next[i] = b * u_next[i] + (1.0 - b) * u0.scores[i];
        }
        if (tp.scheme == Scheme::HITS) {
            l2_normalize(p_next);
            l2_normalize(u_next);
        }
        if (!all_finite(p_next) || !all_finite(u_next)) {
            throw NumericError("non-finite score at iteration " + std::to_string(it));
        }

        const double diff = squared_diff(p_next, result.p) + squared_diff(u_next, result.u);
        result.p.swap(p_next);
        result.u.swap(u_next);
        result.iterations = it;
        result.diff_trace.push_back(diff);
        result.iteration_seconds.push_back(std::chrono::duration<double>(clock::now() - start).count());
        if (track_objective) {
            result.objective_trace.push_back(
                objective(tp.graph, result.p, result.u, reg.gamma, reg.eta, p0.scores, u0.scores));
        }
        if (diff <= cfg.tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

StationarySolution closed_form(const TransitionPair& tp, const QueryVector& p0, const QueryVector& u0, double alpha,
                               double beta, std::size_t dense_limit) {
    if (tp.u_count() > dense_limit || tp.p_count() > dense_limit) {
        throw SizeLimitError("closed_form: graph is " + std::to_string(tp.u_count()) + "x" +
                             std::to_string(tp.p_count()) + ", dense limit is " + std::to_string(dense_limit));
    }
    RankConfig probe;
    probe.alpha = alpha;
    probe.beta = beta;
    probe.validate();
    p0.validate(tp.p_count());
    u0.validate(tp.u_count());
    if (alpha * beta >= 1.0 && tp.forward.nnz() > 0) {
        throw NumericError("stationary system is singular for alpha * beta >= 1");
    }

    const Eigen::MatrixXd f = to_dense(tp.forward);
    const Eigen::MatrixXd b = to_dense(tp.backward);
    const Eigen::Map<const Eigen::VectorXd> p0v(p0.scores.data(), static_cast<Eigen::Index>(p0.scores.size()));
    const Eigen::Map<const Eigen::VectorXd> u0v(u0.scores.data(), static_cast<Eigen::Index>(u0.scores.size()));
    const double ab = alpha * beta;

    const Eigen::MatrixXd ap = Eigen::MatrixXd::Identity(b.rows(), b.rows()) - ab * (b * f);
    const Eigen::VectorXd rp = alpha * (1.0 - beta) * (b * u0v) + (1.0 - alpha) * p0v;
    const Eigen::MatrixXd au = Eigen::MatrixXd::Identity(f.rows(), f.rows()) - ab * (f * b);
    const Eigen::VectorXd ru = beta * (1.0 - alpha) * (f * p0v) + (1.0 - beta) * u0v;

    const Eigen::VectorXd p = solve_checked(ap, rp);
    const Eigen::VectorXd u = solve_checked(au, ru);
    return {std::vector<double>(p.begin(), p.end()), std::vector<double>(u.begin(), u.end())};
}

double objective(const BipartiteGraph& graph, std::span<const double> p, std::span<const double> u, double gamma,
                 double eta, std::span<const double> p0, std::span<const double> u0) {
    if (p.size() != graph.p_count() || p0.size() != graph.p_count() || u.size() != graph.u_count() ||
        u0.size() != graph.u_count()) {
        throw DimensionError("objective: score vectors do not match the graph");
    }
    const auto du = graph.u_degrees();
    const auto dp = graph.p_degrees();
    const auto& w = graph.weights();

    double smooth = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        const auto cols = w.row_cols(i);
        const auto vals = w.row_values(i);
        const double ui = u[i] / std::sqrt(du[i]);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const double d = p[cols[k]] / std::sqrt(dp[cols[k]]) - ui;
            smooth += vals[k] * d * d;
        }
    }
    return smooth + gamma * squared_diff(p, p0) + eta * squared_diff(u, u0);
}

Regularization hyperparam_map(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0 && beta <= 1.0)) {
        throw ConfigError("alpha and beta must be in (0, 1] to map onto regularization weights");
    }
    return {(1.0 - alpha) / alpha, (1.0 - beta) / beta};
}

}  // namespace birank
