#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>

#include "hfs/app/golden.hpp"

namespace hfs::test {

using complex = std::complex<double>;

inline const golden::GoldenFile& oracle() {
  static const golden::GoldenFile g = golden::GoldenFile::load(HFS_TEST_GOLDEN);
  return g;
}

inline double rel_gap(double a, double b) { return std::abs(a - b) / std::abs(b); }
inline double rel_gap(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace hfs::test
