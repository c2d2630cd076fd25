// SPDX-License-Identifier: MIT
#include "fadecap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <Eigen/Dense>

#include "fadecap/common.hpp"

namespace fadecap {

namespace {

// Nodes are eigenvalues of the symmetric Jacobi matrix of the orthogonal
// polynomial recurrence; the weight is mu0 times the squared first component
// of the normalized eigenvector.
GaussRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag, double mu0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) {
        throw numeric_error("golub_welsch: tridiagonal eigensolver failed");
    }
    const int n = static_cast<int>(diag.size());
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

struct Panel {
    double a;
    double b;
    double coarse; // one-panel estimate, kept so a split can reuse it
    double refined;
    double err;
    int depth;
    bool operator<(const Panel& o) const { return err < o.err; }
};

double apply_gl(const GaussRule& rule, const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return s * half;
}

const GaussRule& gl15() {
    static const GaussRule rule = gauss_legendre(15);
    return rule;
}

} // namespace

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) {
        sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    }
    return golub_welsch(diag, sub, 2.0);
}

GaussRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) {
        sub(k - 1) = std::sqrt(0.5 * k);
    }
    return golub_welsch(diag, sub, std::sqrt(pi));
}

GaussRule gauss_laguerre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) {
        diag(k) = 2.0 * k + 1.0;
        if (k >= 1) sub(k - 1) = static_cast<double>(k);
    }
    return golub_welsch(diag, sub, 1.0);
}

double integrate(const std::function<double(double)>& f, double a, double b, const QuadOptions& opt) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        throw std::invalid_argument("integrate: need a <= b");
    }
    const GaussRule& rule = gl15();

    // Globally adaptive: the worst panel is split until the summed error
    // estimates meet the tolerance, so an isolated jump cannot starve the
    // rest of the interval of budget.
    const auto make_panel = [&](double lo, double hi, double coarse, int depth) {
        const double mid = 0.5 * (lo + hi);
        const double refined = apply_gl(rule, f, lo, mid) + apply_gl(rule, f, mid, hi);
        return Panel{lo, hi, coarse, refined, std::fabs(refined - coarse), depth};
    };

    std::priority_queue<Panel> work;
    work.push(make_panel(a, b, apply_gl(rule, f, a, b), 0));
    double total = work.top().refined;
    double total_abs = std::fabs(total);
    double total_err = work.top().err;

    std::size_t panels = 0;
    for (;;) {
        // float-noise floor keeps cancelling integrands from looping forever
        const double tol = std::max({opt.abs_tol, opt.rel_tol * std::fabs(total),
                                     5e-16 * total_abs, 1e-300});
        if (total_err <= tol) break;
        if (++panels > 500000) {
            throw numeric_error("integrate: panel budget exhausted");
        }
        const Panel p = work.top();
        work.pop();
        if (p.depth >= opt.max_depth) {
            throw numeric_error("integrate: max refinement depth reached");
        }
        const double mid = 0.5 * (p.a + p.b);
        const double coarse_l = apply_gl(rule, f, p.a, mid);
        const double coarse_r = apply_gl(rule, f, mid, p.b);
        const Panel l = make_panel(p.a, mid, coarse_l, p.depth + 1);
        const Panel r = make_panel(mid, p.b, coarse_r, p.depth + 1);
        total += l.refined + r.refined - p.refined;
        total_abs += std::fabs(l.refined) + std::fabs(r.refined) - std::fabs(p.refined);
        total_err += l.err + r.err - p.err;
        work.push(l);
        work.push(r);
    }
    // compensated pass over the surviving panels tightens the running total
    double sum = 0.0;
    double comp = 0.0;
    while (!work.empty()) {
        const double v = work.top().refined - comp;
        const double t = sum + v;
        comp = (t - sum) - v;
        sum = t;
        work.pop();
    }
    return sum;
}

double integrate2d(const std::function<double(double, double)>& f, double ax, double bx, double ay,
                   double by, const QuadOptions& opt) {
    QuadOptions inner = opt;
    inner.rel_tol = opt.rel_tol * 0.1;
    inner.abs_tol = opt.abs_tol * 0.1;
    auto outer_f = [&](double x) {
        return integrate([&](double y) { return f(x, y); }, ay, by, inner);
    };
    return integrate(outer_f, ax, bx, opt);
}

} // namespace fadecap
