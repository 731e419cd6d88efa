#include "rumflow/rational.hpp"

#include <sstream>

namespace rumflow {

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r;  // cpp_rational keeps lowest terms and a positive denominator
  return out.str();
}

}  // namespace rumflow
