#pragma once

#include <string>

#include <Eigen/Core>

namespace nielson {

/// 17 significant digits ("%.17g"); round-trips exactly.
std::string format_real(double x);
/// Three components separated by single spaces.
std::string format_point(const Eigen::Vector3d& p);

}  // namespace nielson
