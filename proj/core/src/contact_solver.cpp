// Copyright 2026 The toruspenny Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contact_solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace toruspenny::detail {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Unknowns: (x1, y1, ..., x_{n-1}, y_{n-1}, l); point 0 is pinned.
class ContactSystem {
 public:
  ContactSystem(std::span<const Point> initial, std::span<const ContactConstraint> constraints)
      : anchor_(initial.front()), n_(initial.size()), constraints_(constraints) {}

  Eigen::Index dim() const { return static_cast<Eigen::Index>(2 * (n_ - 1) + 1); }
  Eigen::Index rows() const { return static_cast<Eigen::Index>(constraints_.size()); }
  Eigen::Index l_index() const { return dim() - 1; }

  VectorXd pack(std::span<const Point> pts, double l) const {
    VectorXd x(dim());
    for (std::size_t v = 1; v < n_; ++v) {
      x(static_cast<Eigen::Index>(2 * (v - 1))) = pts[v].x;
      x(static_cast<Eigen::Index>(2 * (v - 1) + 1)) = pts[v].y;
    }
    x(l_index()) = l;
    return x;
  }

  Point point(const VectorXd& x, std::size_t v) const {
    if (v == 0) return anchor_;
    return {x(static_cast<Eigen::Index>(2 * (v - 1))),
            x(static_cast<Eigen::Index>(2 * (v - 1) + 1))};
  }

  std::vector<Point> unpack(const VectorXd& x) const {
    std::vector<Point> out(n_);
    for (std::size_t v = 0; v < n_; ++v) out[v] = point(x, v);
    return out;
  }

  Point delta(const VectorXd& x, const ContactConstraint& c) const {
    const Point pi = point(x, c.i);
    const Point pj = point(x, c.j);
    return {pj.x - pi.x + c.offset.mx, pj.y - pi.y + c.offset.my};
  }

  VectorXd residuals(const VectorXd& x) const {
    VectorXd r(rows());
    const double l = x(l_index());
    for (Eigen::Index k = 0; k < rows(); ++k) {
      const Point d = delta(x, constraints_[static_cast<std::size_t>(k)]);
      r(k) = d.x * d.x + d.y * d.y - l * l;
    }
    return r;
  }

  MatrixXd jacobian(const VectorXd& x) const {
    MatrixXd J = MatrixXd::Zero(rows(), dim());
    const double l = x(l_index());
    for (Eigen::Index k = 0; k < rows(); ++k) {
      const auto& c = constraints_[static_cast<std::size_t>(k)];
      const Point d = delta(x, c);
      if (c.j != 0) {
        J(k, col(c.j)) += 2 * d.x;
        J(k, col(c.j) + 1) += 2 * d.y;
      }
      if (c.i != 0) {
        J(k, col(c.i)) -= 2 * d.x;
        J(k, col(c.i) + 1) -= 2 * d.y;
      }
      J(k, l_index()) = -2 * l;
    }
    return J;
  }

  // sum_k w_k * Hessian(r_k)
  MatrixXd weighted_hessian(const VectorXd& w) const {
    MatrixXd H = MatrixXd::Zero(dim(), dim());
    for (Eigen::Index k = 0; k < rows(); ++k) {
      const auto& c = constraints_[static_cast<std::size_t>(k)];
      for (int axis = 0; axis < 2; ++axis) {
        if (c.i != 0) H(col(c.i) + axis, col(c.i) + axis) += 2 * w(k);
        if (c.j != 0) H(col(c.j) + axis, col(c.j) + axis) += 2 * w(k);
        if (c.i != 0 && c.j != 0) {
          H(col(c.i) + axis, col(c.j) + axis) -= 2 * w(k);
          H(col(c.j) + axis, col(c.i) + axis) -= 2 * w(k);
        }
      }
      H(l_index(), l_index()) -= 2 * w(k);
    }
    return H;
  }

 private:
  static Eigen::Index col(std::size_t v) { return static_cast<Eigen::Index>(2 * (v - 1)); }

  Point anchor_;
  std::size_t n_;
  std::span<const ContactConstraint> constraints_;
};

struct Projection {
  const ContactSystem& system;
  double tol;
  int& budget_used;
  int budget;
  std::vector<double>* history;

  // Levenberg-Marquardt with monotone acceptance.
  bool operator()(VectorXd& x) {
    VectorXd r = system.residuals(x);
    double f = r.squaredNorm();
    double mu = 1e-10;
    const auto eye = MatrixXd::Identity(system.dim(), system.dim());
    while (r.lpNorm<Eigen::Infinity>() >= tol) {
      if (budget_used >= budget) return false;
      ++budget_used;
      const MatrixXd J = system.jacobian(x);
      const MatrixXd A = J.transpose() * J + mu * eye;
      const VectorXd step = -A.ldlt().solve(J.transpose() * r);
      const VectorXd trial = x + step;
      const VectorXd rt = system.residuals(trial);
      const double ft = rt.squaredNorm();
      if (std::isfinite(ft) && ft < f) {
        x = trial;
        r = rt;
        f = ft;
        mu = std::max(mu / 3.0, 1e-15);
        if (history) history->push_back(std::sqrt(f));
      } else {
        mu *= 4.0;
        if (mu > 1e12) return false;
      }
    }
    return true;
  }
};

constexpr double kStationaryTol = 1e-11;

// Null space Z of the contact Jacobian, the reduced gradient Z^T e_l and the
// reduced Hessian of the Lagrangian l - lambda . r.
struct Tangent {
  MatrixXd Z;
  VectorXd g;
  MatrixXd Hr;
};

Tangent tangent_at(const ContactSystem& system, const VectorXd& x) {
  const Eigen::Index l_at = system.l_index();
  const MatrixXd J = system.jacobian(x);
  Eigen::JacobiSVD<MatrixXd> svd(J, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const VectorXd& sv = svd.singularValues();
  const double cutoff = 1e-10 * (sv.size() > 0 ? sv(0) : 1.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;

  Tangent t;
  t.Z = svd.matrixV().rightCols(system.dim() - rank);
  t.g = t.Z.row(l_at).transpose();
  // Multipliers from J^T lambda ~= e_l.
  VectorXd lambda = VectorXd::Zero(system.rows());
  for (Eigen::Index k = 0; k < rank; ++k) {
    lambda += svd.matrixU().col(k) * (svd.matrixV()(l_at, k) / sv(k));
  }
  t.Hr = t.Z.transpose() * (-system.weighted_hessian(lambda)) * t.Z;
  return t;
}

}  // namespace

ContactSolveResult solve_contacts(std::span<const Point> initial,
                                  std::span<const ContactConstraint> constraints,
                                  double initial_diameter,
                                  const ContactSolveOptions& options) {
  ContactSystem system(initial, constraints);
  ContactSolveResult result;
  VectorXd x = system.pack(initial, initial_diameter);
  result.residual_history.push_back(system.residuals(x).norm());

  Projection project{system, options.tol, result.iterations, options.max_iterations,
                     &result.residual_history};
  bool feasible = project(x);

  if (feasible && options.diameter_phase != DiameterPhase::kNone) {
    const bool stationary = options.diameter_phase == DiameterPhase::kStationary;
    const Eigen::Index l_at = system.l_index();
    while (result.iterations < options.max_iterations) {
      const Tangent tangent = tangent_at(system, x);
      if (tangent.Z.cols() == 0) break;
      const VectorXd& g = tangent.g;
      if (g.norm() < kStationaryTol) break;

      VectorXd step;
      Eigen::SelfAdjointEigenSolver<MatrixXd> eig(tangent.Hr);
      const VectorXd& ev = eig.eigenvalues();
      if (stationary) {
        // Pseudo-inverse Newton step on Z^T e_l = 0; it converges to a
        // critical point of whatever signature.
        VectorXd coeffs = eig.eigenvectors().transpose() * (-g);
        const double scale = ev.cwiseAbs().maxCoeff();
        for (Eigen::Index k = 0; k < ev.size(); ++k) {
          coeffs(k) = std::abs(ev(k)) > 1e-10 * scale ? coeffs(k) / ev(k) : 0.0;
        }
        step = tangent.Z * (eig.eigenvectors() * coeffs);
      } else if (ev.maxCoeff() < -1e-12) {
        step = tangent.Z * tangent.Hr.ldlt().solve(-g);
      } else {
        step = tangent.Z * g * (1e-2 / g.norm());
      }
      if (step.norm() > 2e-2) step *= 2e-2 / step.norm();

      ++result.iterations;
      const double l_before = x(l_at);
      const double g_before = g.norm();
      bool accepted = false;
      for (double t = 1.0; t > 1e-6 && !accepted; t *= 0.5) {
        VectorXd trial = x + t * step;
        Projection inner{system, options.tol, result.iterations, options.max_iterations, nullptr};
        if (inner(trial)) {
          accepted = stationary ? tangent_at(system, trial).g.norm() < g_before
                                : trial(l_at) >= l_before - 1e-15;
          if (accepted) x = trial;
        }
        if (result.iterations >= options.max_iterations) break;
      }
      if (!accepted) break;
      if (!stationary && std::abs(x(l_at) - l_before) < 1e-16) break;
    }
    feasible = system.residuals(x).lpNorm<Eigen::Infinity>() < options.tol;
    if (stationary && feasible) {
      const Tangent tangent = tangent_at(system, x);
      feasible = tangent.Z.cols() == 0 || tangent.g.norm() < kStationaryTol;
    }
  }

  const VectorXd r = system.residuals(x);
  result.points = system.unpack(x);
  result.diameter = std::abs(x(system.l_index()));
  result.max_residual = r.lpNorm<Eigen::Infinity>();
  result.converged = feasible;
  return result;
}

}  // namespace toruspenny::detail
