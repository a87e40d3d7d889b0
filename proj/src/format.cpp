#include "nielson/format.hpp"

#include <cstdio>

namespace nielson {

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_point(const Eigen::Vector3d& p) {
  return format_real(p.x()) + ' ' + format_real(p.y()) + ' ' + format_real(p.z());
}

}  // namespace nielson
