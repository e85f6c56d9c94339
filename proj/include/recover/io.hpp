#pragma once

#include <string>

#include "recover/dynamics.hpp"
#include "recover/preprocess.hpp"

namespace recover {

/// CSV with header "t,x1,...,xd", one sample per row, 17 significant digits.
void save_trajectory_csv(const Trajectory& traj, const std::string& path);
Trajectory load_trajectory_csv(const std::string& path);

/// Text table of (monomial label, 1-based equation index, value), preceded
/// by "d = ..." and "degree = ..." header lines. Zero entries are omitted.
void save_system(const PolynomialSystem& sys, const std::string& path);
PolynomialSystem load_system(const std::string& path);

/// Seed, sigma and the interval list; offsets are regenerable from these.
void save_corruption_record(const CorruptionRecord& record, const std::string& path);
CorruptionRecord load_corruption_record(const std::string& path);

}  // namespace recover
