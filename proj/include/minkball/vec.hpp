#pragma once

#include <Eigen/Dense>

#include <initializer_list>

namespace minkball {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline Vec make_vec(std::initializer_list<double> values) {
  Vec out(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) out[i++] = v;
  return out;
}

inline Mat make_mat(std::initializer_list<std::initializer_list<double>> rows) {
  Mat out(static_cast<Eigen::Index>(rows.size()),
          rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) out(r, c++) = v;
    ++r;
  }
  return out;
}

}  // namespace minkball
