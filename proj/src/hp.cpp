#include "cyclobound/hp.hpp"

#include <cstdio>
#include <vector>

namespace cyclobound {

std::string Real::str(int digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
  char buf[256];
  mpfr_snprintf(buf, sizeof(buf), fmt, v_);
  return buf;
}

}  // namespace cyclobound
