#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace recover {

/// Exponent vector (alpha_1, ..., alpha_d) of one monomial.
using MultiIndex = std::vector<int>;

/// Ordered monomial dictionary of total degree <= p in d variables.
/// Ordering is graded (by total degree), then lexicographic with x1
/// highest priority: 1, x1, ..., xd, x1^2, x1*x2, ..., xd^2, ...
struct MultiIndexBasis {
  int d = 0;
  int p = 0;
  std::vector<MultiIndex> indices;

  long size() const { return static_cast<long>(indices.size()); }
};

/// C(p+d, d), the number of monomials of degree at most p in d variables.
/// Throws OverflowError if the binomial exceeds the int64 range.
std::int64_t basis_size(int d, int p);

MultiIndexBasis enumerate_basis(int d, int p);

/// Row of dictionary values at a single state; entry i is prod_j x_j^alpha(i)_j.
Eigen::RowVectorXd evaluate_monomials(const MultiIndexBasis& basis,
                                      const Eigen::VectorXd& x);

/// Dictionary matrix: row j evaluates all monomials at states.row(j).
Eigen::MatrixXd build_dictionary(const MultiIndexBasis& basis,
                                 const Eigen::MatrixXd& states);

/// Human-readable monomial name: "1", "x2", "x1*x3", "x3^2", "x1^2*x2".
std::string monomial_label(const MultiIndex& alpha);

/// Inverse of monomial_label; variables are 1-based (throws ParseError on
/// "x0" or indices beyond d). `line` is forwarded into the error message.
MultiIndex parse_monomial_label(const std::string& label, int d, long line = 0);

}  // namespace recover
