#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apollonius/exactfield.hpp"
#include "apollonius/pipeline.hpp"
#include "apollonius/solver.hpp"

namespace apollo::testing {

inline FieldElement q(const std::string& s) { return FieldElement(Scalar::parse(s)); }

inline Configuration ccc(const FieldDescriptor& k, std::array<std::array<const char*, 3>, 3> data) {
  std::array<InputObject, 3> o;
  for (std::size_t i = 0; i < 3; ++i) o[i] = InputObject::circle(q(data[i][0]), q(data[i][1]), q(data[i][2]));
  return Configuration::over(k, o);
}

// Unit circles centered (0,0), (4,0), (2,3).
inline Configuration generic(const FieldDescriptor& k = FieldDescriptor::rationals()) {
  return ccc(k, {{{"0", "0", "1"}, {"4", "0", "1"}, {"2", "3", "1"}}});
}

inline Configuration deficient_real() {
  return ccc(FieldDescriptor::rationals(), {{{"0", "1/8", "49/64"}, {"5/4", "0", "1"}, {"1", "2", "1/4"}}});
}

inline Configuration all_real() {
  return ccc(FieldDescriptor::rationals(), {{{"0", "0", "4/25"}, {"21/20", "3/20", "1/16"}, {"7/10", "4/5", "1/100"}}});
}

// Third input is a point, entered as a radius-zero circle.
inline Configuration ccp_doubled() {
  return ccc(FieldDescriptor::rationals(), {{{"0", "0", "1"}, {"4", "0", "1"}, {"2", "3", "0"}}});
}

// Random transverse CCC configurations for seeds 1..n, redrawn past DegenerateMerge.
std::vector<Configuration> seeded_ccc(int n);

// The same, CPP.
std::vector<Configuration> seeded_cpp(int n);

}  // namespace apollo::testing
