#include "msr/eig.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace msr {

std::vector<double> float_eigenvalues(const RationalMatrix& m) {
  if (!m.symmetric()) throw std::invalid_argument("float_eigenvalues: matrix not symmetric");
  int n = m.rows();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

}  // namespace msr
