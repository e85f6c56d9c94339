#include "recover/basis.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "recover/errors.hpp"

namespace recover {

std::int64_t basis_size(int d, int p) {
  if (d < 1) throw DimensionError("basis_size: dimension d must be >= 1");
  if (p < 0) throw DimensionError("basis_size: degree p must be >= 0");
  // C(p+d, d) by the multiplicative formula, overflow-checked.
  std::int64_t result = 1;
  for (int k = 1; k <= d; ++k) {
    // result * (p + k) / k is always integral at this point.
    if (result > std::numeric_limits<std::int64_t>::max() / (p + k)) {
      throw OverflowError("basis_size: C(p+d, d) overflows int64 for d=" +
                          std::to_string(d) + ", p=" + std::to_string(p));
    }
    result = result * (p + k) / k;
  }
  return result;
}

namespace {

void enumerate_degree(int d, int degree, int pos, MultiIndex& current,
                      std::vector<MultiIndex>& out) {
  if (pos == d - 1) {
    current[pos] = degree;
    out.push_back(current);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current[pos] = e;
    enumerate_degree(d, degree - e, pos + 1, current, out);
  }
  current[pos] = 0;
}

}  // namespace

MultiIndexBasis enumerate_basis(int d, int p) {
  const std::int64_t r = basis_size(d, p);
  MultiIndexBasis basis;
  basis.d = d;
  basis.p = p;
  basis.indices.reserve(static_cast<std::size_t>(r));
  MultiIndex current(d, 0);
  for (int degree = 0; degree <= p; ++degree) {
    enumerate_degree(d, degree, 0, current, basis.indices);
  }
  return basis;
}

Eigen::RowVectorXd evaluate_monomials(const MultiIndexBasis& basis,
                                      const Eigen::VectorXd& x) {
  if (x.size() != basis.d) {
    throw DimensionError("evaluate_monomials: state has length " +
                         std::to_string(x.size()) + ", basis dimension is " +
                         std::to_string(basis.d));
  }
  Eigen::RowVectorXd row(basis.size());
  for (long i = 0; i < basis.size(); ++i) {
    double v = 1.0;
    const MultiIndex& alpha = basis.indices[static_cast<std::size_t>(i)];
    for (int j = 0; j < basis.d; ++j) {
      // Repeated multiplication keeps exact zeros and signs exact.
      for (int e = 0; e < alpha[static_cast<std::size_t>(j)]; ++e) v *= x(j);
    }
    row(i) = v;
  }
  return row;
}

Eigen::MatrixXd build_dictionary(const MultiIndexBasis& basis,
                                 const Eigen::MatrixXd& states) {
  if (states.rows() < 1) {
    throw DimensionError("build_dictionary: empty trajectory");
  }
  if (states.cols() != basis.d) {
    throw DimensionError("build_dictionary: trajectory dimension " +
                         std::to_string(states.cols()) +
                         " does not match basis dimension " +
                         std::to_string(basis.d));
  }
  Eigen::MatrixXd phi(states.rows(), basis.size());
  for (long j = 0; j < states.rows(); ++j) {
    phi.row(j) = evaluate_monomials(basis, states.row(j).transpose());
  }
  return phi;
}

std::string monomial_label(const MultiIndex& alpha) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    if (!first) out << '*';
    out << 'x' << (j + 1);
    if (alpha[j] > 1) out << '^' << alpha[j];
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

MultiIndex parse_monomial_label(const std::string& label, int d, long line) {
  MultiIndex alpha(static_cast<std::size_t>(d), 0);
  if (label == "1") return alpha;
  std::size_t pos = 0;
  while (pos < label.size()) {
    if (label[pos] != 'x') {
      throw ParseError("expected variable 'xK' in monomial '" + label + "'", line);
    }
    ++pos;
    std::size_t start = pos;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (pos == start) {
      throw ParseError("missing variable index in monomial '" + label + "'", line);
    }
    const int var = std::stoi(label.substr(start, pos - start));
    if (var < 1 || var > d) {
      throw ParseError("variable index out of range (variables are 1-based, d=" +
                       std::to_string(d) + ") in monomial '" + label + "'", line);
    }
    int exponent = 1;
    if (pos < label.size() && label[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
      if (pos == start) {
        throw ParseError("missing exponent in monomial '" + label + "'", line);
      }
      exponent = std::stoi(label.substr(start, pos - start));
    }
    alpha[static_cast<std::size_t>(var - 1)] += exponent;
    if (pos < label.size()) {
      if (label[pos] != '*') {
        throw ParseError("expected '*' between factors in monomial '" + label + "'", line);
      }
      ++pos;
    }
  }
  return alpha;
}

}  // namespace recover
