#pragma once

// Discrete minimax by linear programming, independent of the Remez code.
//
// The dual of  min t  s.t. |f_i - sum_j c_j T_j(t_i)| <= t  is
//   max sum_i f_i (u_i - v_i)
//   s.t. sum_i (u_i - v_i) T_j(t_i) = 0 (j = 0..d),  sum_i (u_i + v_i) = 1,  u, v >= 0.
// Revised simplex; the basis is tiny (d + 2 rows) so it is refactorized every step,
// which keeps rounding from piling up at higher degrees.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace lp {

class Revised
{
public:
    Revised(Eigen::MatrixXd A, Eigen::VectorXd b) : A_(std::move(A)), b_(std::move(b))
    {
        m_ = static_cast<int>(A_.rows());
        n_ = static_cast<int>(A_.cols());
    }

    // Maximizes c.x over {A x = b, x >= 0}; b must be >= 0.
    double maximize(const Eigen::VectorXd& c)
    {
        // phase 1 on [A | I] with artificials
        Eigen::MatrixXd full(m_, n_ + m_);
        full << A_, Eigen::MatrixXd::Identity(m_, m_);
        basis_.resize(m_);
        for (int r = 0; r < m_; ++r) {
            basis_[r] = n_ + r;
        }
        Eigen::VectorXd c1 = Eigen::VectorXd::Zero(n_ + m_);
        c1.tail(m_).setConstant(-1.0);
        const double infeas = run(full, c1, n_ + m_);
        if (infeas < -1e-9) {
            throw std::runtime_error("lp oracle: infeasible");
        }
        // drive leftover artificials out of the basis
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < n_) {
                continue;
            }
            Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix(full));
            int best = -1;
            double mag = 1e-9;
            for (int j = 0; j < n_; ++j) {
                if (is_basic(j)) {
                    continue;
                }
                const double w = std::abs(lu.solve(full.col(j))(r));
                if (w > mag) {
                    mag = w;
                    best = j;
                }
            }
            if (best < 0) {
                throw std::runtime_error("lp oracle: rank deficient");
            }
            basis_[r] = best;
        }
        Eigen::VectorXd c2 = Eigen::VectorXd::Zero(n_ + m_);
        c2.head(n_) = c;
        return run(full, c2, n_);
    }

private:
    Eigen::MatrixXd basis_matrix(const Eigen::MatrixXd& full) const
    {
        Eigen::MatrixXd B(m_, m_);
        for (int r = 0; r < m_; ++r) {
            B.col(r) = full.col(basis_[r]);
        }
        return B;
    }

    bool is_basic(int j) const
    {
        for (int b : basis_) {
            if (b == j) {
                return true;
            }
        }
        return false;
    }

    // columns >= allowed never enter
    double run(const Eigen::MatrixXd& full, const Eigen::VectorXd& c, int allowed)
    {
        const double eps = 1e-10;
        int degenerate_run = 0;
        for (int iter = 0; iter < 50000; ++iter) {
            Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix(full));
            const Eigen::VectorXd xb = lu.solve(b_);
            Eigen::VectorXd cb(m_);
            for (int r = 0; r < m_; ++r) {
                cb(r) = c(basis_[r]);
            }
            const Eigen::VectorXd y = lu.transpose().solve(cb);
            const Eigen::VectorXd reduced = c.head(allowed) - full.leftCols(allowed).transpose() * y;

            const bool bland = degenerate_run > 50;
            int pc = -1;
            double best = eps;
            for (int j = 0; j < allowed; ++j) {
                if (reduced(j) > best && !is_basic(j)) {
                    pc = j;
                    if (bland) {
                        break;
                    }
                    best = reduced(j);
                }
            }
            if (pc < 0) {
                return cb.dot(xb);
            }
            const Eigen::VectorXd w = lu.solve(full.col(pc));
            int pr = -1;
            double ratio = 0.0;
            for (int r = 0; r < m_; ++r) {
                if (w(r) > eps) {
                    const double q = std::max(xb(r), 0.0) / w(r);
                    if (pr < 0 || q < ratio - 1e-14 || (q <= ratio + 1e-14 && basis_[r] < basis_[pr])) {
                        ratio = q;
                        pr = r;
                    }
                }
            }
            if (pr < 0) {
                throw std::runtime_error("lp oracle: unbounded");
            }
            degenerate_run = ratio < 1e-14 ? degenerate_run + 1 : 0;
            basis_[pr] = pc;
        }
        throw std::runtime_error("lp oracle: iteration limit");
    }

    Eigen::MatrixXd A_;
    Eigen::VectorXd b_;
    int m_ = 0;
    int n_ = 0;
    std::vector<int> basis_;
};

// Best uniform error of f on the points x (in [lo, hi]) by polynomials of degree d.
inline double discrete_minimax(const std::function<double(double)>& f, const std::vector<double>& x,
                               int d, double lo, double hi)
{
    const int npts = static_cast<int>(x.size());
    const int m = d + 2;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, 2 * npts);
    Eigen::VectorXd c(2 * npts);
    for (int i = 0; i < npts; ++i) {
        const double s = (2.0 * x[i] - lo - hi) / (hi - lo);
        double tp = 1.0;
        double tc = s;
        for (int j = 0; j <= d; ++j) {
            const double tj = j == 0 ? 1.0 : (j == 1 ? s : 2.0 * s * tc - tp);
            if (j >= 2) {
                tp = tc;
                tc = tj;
            }
            A(j, i) = tj;
            A(j, npts + i) = -tj;
        }
        A(d + 1, i) = 1.0;
        A(d + 1, npts + i) = 1.0;
        c(i) = f(x[i]);
        c(npts + i) = -c(i);
    }
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    b(d + 1) = 1.0;
    return Revised(std::move(A), std::move(b)).maximize(c);
}

// The fixed 2001-point equispaced grid of [lo, hi].
inline std::vector<double> oracle_grid(double lo, double hi, int n = 2001)
{
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = lo + (hi - lo) * i / (n - 1);
    }
    return x;
}

} // namespace lp
