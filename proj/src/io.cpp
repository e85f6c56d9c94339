#include "recover/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "recover/errors.hpp"

namespace recover {

namespace {

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return in;
}

double parse_double(const std::string& token, long line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid number '" + token + "' at line " + std::to_string(line), line);
  }
  if (used != token.size()) {
    throw ParseError("trailing characters in number '" + token + "' at line " +
                     std::to_string(line), line);
  }
  return value;
}

}  // namespace

void save_trajectory_csv(const Trajectory& traj, const std::string& path) {
  auto out = open_out(path);
  out << 't';
  for (int j = 1; j <= traj.dim(); ++j) out << ",x" << j;
  out << '\n';
  for (long i = 0; i < traj.rows(); ++i) {
    out << format_double(traj.t0 + static_cast<double>(i) * traj.dt);
    for (int j = 0; j < traj.dim(); ++j) out << ',' << format_double(traj.states(i, j));
    out << '\n';
  }
}

Trajectory load_trajectory_csv(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty trajectory file", 1);
  ++line_no;
  int d = 0;
  {
    std::stringstream header(line);
    std::string column;
    bool first = true;
    while (std::getline(header, column, ',')) {
      if (first) {
        if (column != "t") throw ParseError("first column must be 't'", line_no);
        first = false;
      } else {
        ++d;
      }
    }
  }
  if (d < 1) throw ParseError("trajectory header names no state columns", line_no);

  std::vector<double> times;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string token;
    int col = -1;
    while (std::getline(row, token, ',')) {
      const double v = parse_double(token, line_no);
      if (col < 0) {
        times.push_back(v);
      } else {
        values.push_back(v);
      }
      ++col;
    }
    if (col != d) {
      throw ParseError("expected " + std::to_string(d + 1) + " columns, got " +
                       std::to_string(col + 1), line_no);
    }
  }
  if (times.empty()) throw ParseError("trajectory file has no samples", line_no);

  Trajectory traj;
  traj.t0 = times.front();
  traj.dt = times.size() > 1 ? times[1] - times[0] : 1.0;
  traj.states.resize(static_cast<long>(times.size()), d);
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (int j = 0; j < d; ++j) {
      traj.states(static_cast<long>(i), j) = values[i * static_cast<std::size_t>(d) +
                                                    static_cast<std::size_t>(j)];
    }
  }
  return traj;
}

void save_system(const PolynomialSystem& sys, const std::string& path) {
  auto out = open_out(path);
  out << "d = " << sys.basis.d << '\n';
  out << "degree = " << sys.basis.p << '\n';
  for (long i = 0; i < sys.basis.size(); ++i) {
    for (int j = 0; j < sys.dim(); ++j) {
      if (sys.coefficients(i, j) == 0.0) continue;
      out << monomial_label(sys.basis.indices[static_cast<std::size_t>(i)]) << ' '
          << (j + 1) << ' ' << format_double(sys.coefficients(i, j)) << '\n';
    }
  }
}

PolynomialSystem load_system(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  long line_no = 0;
  int d = -1;
  int degree = -1;
  PolynomialSystem sys;
  bool basis_ready = false;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::stringstream row(line);
    std::string first;
    if (!(row >> first)) continue;

    if (first == "d" || first == "degree") {
      std::string eq;
      int value = 0;
      if (!(row >> eq >> value) || eq != "=") {
        throw ParseError("malformed header line", line_no);
      }
      (first == "d" ? d : degree) = value;
      continue;
    }

    if (!basis_ready) {
      if (d < 1 || degree < 0) {
        throw ParseError("coefficient rows before 'd'/'degree' headers", line_no);
      }
      sys.basis = enumerate_basis(d, degree);
      sys.coefficients = Eigen::MatrixXd::Zero(sys.basis.size(), d);
      basis_ready = true;
    }

    int equation = 0;
    std::string value_token;
    if (!(row >> equation >> value_token)) {
      throw ParseError("expected 'monomial equation value'", line_no);
    }
    if (equation < 1 || equation > d) {
      throw ParseError("equation index out of range", line_no);
    }
    const MultiIndex alpha = parse_monomial_label(first, d, line_no);
    long row_index = -1;
    for (long i = 0; i < sys.basis.size(); ++i) {
      if (sys.basis.indices[static_cast<std::size_t>(i)] == alpha) {
        row_index = i;
        break;
      }
    }
    if (row_index < 0) {
      throw ParseError("monomial '" + first + "' exceeds degree " +
                       std::to_string(degree), line_no);
    }
    sys.coefficients(row_index, equation - 1) = parse_double(value_token, line_no);
  }
  if (!basis_ready) throw ParseError("system file has no coefficient rows", line_no);
  return sys;
}

void save_corruption_record(const CorruptionRecord& record, const std::string& path) {
  auto out = open_out(path);
  out << "seed = " << record.seed << '\n';
  out << "sigma = " << format_double(record.sigma) << '\n';
  out << "intervals = " << record.intervals.size() << '\n';
  for (const auto& [start, bandwidth] : record.intervals) {
    out << start << ' ' << bandwidth << '\n';
  }
}

CorruptionRecord load_corruption_record(const std::string& path) {
  auto in = open_in(path);
  CorruptionRecord record;
  std::string key, eq;
  long line_no = 0;
  std::size_t n_intervals = 0;
  for (int i = 0; i < 3; ++i) {
    ++line_no;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("truncated corruption record", line_no);
    std::stringstream row(line);
    if (!(row >> key >> eq) || eq != "=") throw ParseError("malformed header", line_no);
    if (key == "seed") {
      row >> record.seed;
    } else if (key == "sigma") {
      row >> record.sigma;
    } else if (key == "intervals") {
      row >> n_intervals;
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  for (std::size_t i = 0; i < n_intervals; ++i) {
    ++line_no;
    long start = 0, bandwidth = 0;
    if (!(in >> start >> bandwidth)) throw ParseError("truncated interval list", line_no);
    record.intervals.emplace_back(start, bandwidth);
  }
  return record;
}

}  // namespace recover
