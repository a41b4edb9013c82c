#include "birank/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "birank/error.hpp"

namespace birank {

namespace {

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

void require_birank(const TransitionPair& tp, const char* what) {
    if (tp.scheme != Scheme::BiRank) {
        throw ConfigError(std::string(what) + " requires the birank scheme");
    }
}

/// Eigenvalues (descending) of the smaller Gram matrix of S; they are the non-zero spectrum of S^T S.
Eigen::VectorXd gram_spectrum(const TransitionPair& tp) {
    const Eigen::MatrixXd s = to_dense(tp.forward);
    const Eigen::MatrixXd gram = s.rows() < s.cols() ? Eigen::MatrixXd(s * s.transpose())
                                                     : Eigen::MatrixXd(s.transpose() * s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = solver.eigenvalues();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

// splitmix64; only used to build a deterministic start vector.
std::uint64_t splitmix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::vector<double> start_vector(std::size_t n, std::uint64_t seed, bool positive) {
    std::vector<double> v(n);
    for (auto& x : v) {
        const double r = static_cast<double>(splitmix(seed) >> 11) * 0x1.0p-53;
        x = positive ? 0.5 + r : r - 0.5;
    }
    return v;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void scale(std::vector<double>& a, double f) {
    for (double& x : a) {
        x *= f;
    }
}

void remove_component(std::vector<double>& x, std::span<const double> unit) {
    const double c = dot(x, unit);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] -= c * unit[i];
    }
}

struct PowerResult {
    double value;
    std::vector<double> vector;
    bool converged;
    int iterations;
};

// Power iteration for S^T S, optionally restricted to the complement of `deflate`.
PowerResult power_iteration(const TransitionPair& tp, std::vector<double> x, const std::vector<double>* deflate,
                            const EigenEstimateOptions& opts) {
    std::vector<double> ax(tp.p_count());
    std::vector<double> tmp(tp.u_count());
    auto apply = [&](const std::vector<double>& in) {
        tp.forward.multiply(in, tmp);
        tp.backward.multiply(tmp, ax);
        if (deflate != nullptr) {
            remove_component(ax, *deflate);
        }
    };

    if (deflate != nullptr) {
        remove_component(x, *deflate);
    }
    double nx = norm(x);
    if (nx == 0.0) {
        return {0.0, x, true, 0};
    }
    scale(x, 1.0 / nx);

    double lambda = 0.0;
    for (int it = 1; it <= opts.max_iters; ++it) {
        apply(x);
        lambda = dot(x, ax);
        double residual = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = ax[i] - lambda * x[i];
            residual += r * r;
        }
        residual = std::sqrt(residual);
        const double nax = norm(ax);
        // The restricted operator can be (numerically) zero, e.g. when S^T S has rank one.
        if (nax <= 1e-14 || residual <= opts.tol) {
            return {std::max(lambda, 0.0), x, true, it};
        }
        x.swap(ax);
        scale(x, 1.0 / nax);
    }
    return {std::max(lambda, 0.0), x, false, opts.max_iters};
}

}  // namespace

EigenBound eigen_bound_check(const TransitionPair& tp, double alpha, double beta, std::size_t dense_limit) {
    require_birank(tp, "eigen_bound_check");
    if (tp.u_count() > dense_limit || tp.p_count() > dense_limit) {
        throw SizeLimitError("eigen_bound_check: graph is " + std::to_string(tp.u_count()) + "x" +
                             std::to_string(tp.p_count()) + ", dense limit is " + std::to_string(dense_limit));
    }
    const double ab = alpha * beta;
    EigenBound out;
    if (tp.u_count() > 0 && tp.p_count() > 0 && ab != 0.0) {
        const Eigen::VectorXd ev = gram_spectrum(tp);
        out.lambda_max_abs = ab * std::max(std::abs(ev.maxCoeff()), std::abs(ev.minCoeff()));
    }
    out.within_bound = out.lambda_max_abs <= ab + 1e-9;
    return out;
}

EigenEstimate second_eigenvalue_estimate(const TransitionPair& tp, const EigenEstimateOptions& opts) {
    require_birank(tp, "second_eigenvalue_estimate");
    EigenEstimate out;
    if (tp.p_count() < 2 || tp.u_count() == 0) {
        out.method = opts.method == EigenMethod::Power ? EigenMethod::Power : EigenMethod::Dense;
        return out;
    }

    const bool dense = opts.method == EigenMethod::Dense ||
                       (opts.method == EigenMethod::Auto && tp.u_count() <= opts.dense_limit &&
                        tp.p_count() <= opts.dense_limit);
    if (dense) {
        const Eigen::VectorXd ev = gram_spectrum(tp);
        out.method = EigenMethod::Dense;
        out.value = ev.size() >= 2 ? std::abs(ev[1]) : 0.0;
        return out;
    }

    out.method = EigenMethod::Power;
    const auto top = power_iteration(tp, start_vector(tp.p_count(), 1, true), nullptr, opts);
    const auto second = power_iteration(tp, start_vector(tp.p_count(), 2, false), &top.vector, opts);
    out.value = second.value;
    out.reliable = top.converged && second.converged;
    out.iterations = top.iterations + second.iterations;
    return out;
}

}  // namespace birank
