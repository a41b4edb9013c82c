#pragma once

// Dense reference computations used only by tests. Everything here is
// written directly from the defining formulas and shares no code with the
// sparse library paths it checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "birank/graph.hpp"
#include "birank/normalize.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;
using Vector = std::vector<double>;

inline Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, Vector(cols, 0.0)); }

inline Matrix identity(std::size_t n) {
    Matrix m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Matrix transpose(const Matrix& a) {
    if (a.empty()) {
        return {};
    }
    Matrix t = zeros(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            t[j][i] = a[i][j];
        }
    }
    return t;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    Matrix c = zeros(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < k; ++x) {
            for (std::size_t j = 0; j < m; ++j) {
                c[i][j] += a[i][x] * b[x][j];
            }
        }
    }
    return c;
}

inline Vector multiply(const Matrix& a, const Vector& x) {
    Vector y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            y[i] += a[i][j] * x[j];
        }
    }
    return y;
}

inline Matrix scaled(Matrix a, double s) {
    for (auto& row : a) {
        for (double& v : row) {
            v *= s;
        }
    }
    return a;
}

inline Matrix subtract(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            a[i][j] -= b[i][j];
        }
    }
    return a;
}

inline Vector axpby(double a, const Vector& x, double b, const Vector& y) {
    Vector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = a * x[i] + b * y[i];
    }
    return z;
}

/// Gaussian elimination with partial pivoting.
inline Vector solve(Matrix a, Vector b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        if (std::abs(a[pivot][col]) < 1e-300) {
            throw std::runtime_error("oracle: singular system");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    Vector x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            s -= a[i][c] * x[c];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted descending.
inline Vector symmetric_eigenvalues(Matrix a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                off += a[i][j] * a[i][j];
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Vector ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = a[i][i];
    }
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

inline Matrix dense_weights(const birank::BipartiteGraph& g) {
    Matrix w = zeros(g.u_count(), g.p_count());
    for (const auto& e : g.edges()) {
        w[e.u][e.p] = e.weight;
    }
    return w;
}

inline Matrix dense(const birank::CsrMatrix& m) {
    Matrix d = zeros(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            d[r][c] = m.at(r, c);
        }
    }
    return d;
}

struct DensePair {
    Matrix forward;   // |U| x |P|
    Matrix backward;  // |P| x |U|
};

/// Transition matrices of each scheme built from dense W by the defining formulas.
inline DensePair dense_transition(const Matrix& w, birank::Scheme scheme) {
    const std::size_t nu = w.size();
    const std::size_t np = nu == 0 ? 0 : w[0].size();
    Vector du(nu, 0.0);
    Vector dp(np, 0.0);
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            du[i] += w[i][j];
            dp[j] += w[i][j];
        }
    }
    auto inv = [](double d, double power) { return d > 0 ? std::pow(d, -power) : 0.0; };
    double eu = 0.0;
    double ep = 0.0;
    switch (scheme) {
        case birank::Scheme::HITS: eu = 0.0; ep = 0.0; break;
        case birank::Scheme::CoHITS: eu = 0.0; ep = 1.0; break;
        case birank::Scheme::BGER: eu = 1.0; ep = 0.0; break;
        case birank::Scheme::BGRM: eu = 1.0; ep = 1.0; break;
        case birank::Scheme::BiRank: eu = 0.5; ep = 0.5; break;
    }
    DensePair out{zeros(nu, np), zeros(np, nu)};
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            out.forward[i][j] = inv(du[i], eu) * w[i][j] * inv(dp[j], ep);
        }
    }
    // Backward roles mirror the forward ones: Co-HITS and BGER swap which side divides.
    double bu = eu;
    double bp = ep;
    if (scheme == birank::Scheme::CoHITS) {
        bu = 1.0;
        bp = 0.0;
    } else if (scheme == birank::Scheme::BGER) {
        bu = 0.0;
        bp = 1.0;
    }
    for (std::size_t j = 0; j < np; ++j) {
        for (std::size_t i = 0; i < nu; ++i) {
            out.backward[j][i] = inv(dp[j], bp) * w[i][j] * inv(du[i], bu);
        }
    }
    return out;
}

struct DenseStationary {
    Vector p;
    Vector u;
};

/// Fixed point of p = a B u + (1-a) p0, u = b F p + (1-b) u0 by eliminating u and solving densely.
inline DenseStationary stationary(const DensePair& t, const Vector& p0, const Vector& u0, double a, double b) {
    const std::size_t np = p0.size();
    const std::size_t nu = u0.size();
    const Matrix bf = multiply(t.backward, t.forward);
    const Matrix fb = multiply(t.forward, t.backward);
    const Vector rp = axpby(a * (1.0 - b), multiply(t.backward, u0), 1.0 - a, p0);
    const Vector ru = axpby(b * (1.0 - a), multiply(t.forward, p0), 1.0 - b, u0);
    return {solve(subtract(identity(np), scaled(bf, a * b)), rp), solve(subtract(identity(nu), scaled(fb, a * b)), ru)};
}

/// Random bipartite edge list with weights in [0.5, 3); density drawn per graph.
inline std::vector<birank::Edge> random_edges(std::mt19937_64& rng, std::size_t nu, std::size_t np, double density) {
    std::bernoulli_distribution keep(density);
    std::uniform_real_distribution<double> weight(0.5, 3.0);
    std::vector<birank::Edge> edges;
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            if (keep(rng)) {
                edges.push_back({i, j, weight(rng)});
            }
        }
    }
    return edges;
}

/// Random graph in which every vertex has at least one edge.
inline birank::BipartiteGraph random_connected_graph(std::mt19937_64& rng, std::size_t nu, std::size_t np,
                                                     double density) {
    auto edges = random_edges(rng, nu, np, density);
    // A spanning path u0-p0-u1-p1-... guarantees connectivity.
    std::uniform_real_distribution<double> weight(0.5, 3.0);
    const std::size_t steps = std::max(nu, np);
    for (std::size_t k = 0; k < steps; ++k) {
        edges.push_back({std::min(k, nu - 1), std::min(k, np - 1), weight(rng)});
        if (k + 1 < steps) {
            edges.push_back({std::min(k + 1, nu - 1), std::min(k, np - 1), weight(rng)});
        }
    }
    return birank::build_bipartite(nu, np, edges);
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    Vector v(n);
    for (double& x : v) {
        x = d(rng);
    }
    return v;
}

}  // namespace oracle
