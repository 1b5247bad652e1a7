#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#ifdef __FAST_MATH__
#error "fast-math reassociation defeats the error-free transformations below"
#endif

namespace hfs {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

namespace detail {

// Knuth's TwoSum: a + b = s + e exactly.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

}  // namespace detail

/// Compensated accumulator (Ogita-Rump-Oishi Sum2). The rounding error of each
/// addition is captured exactly and summed separately, so the result is as
/// accurate as if computed in twice the working precision.
template <class Scalar>
class CompensatedSum {
 public:
  CompensatedSum() = default;

  CompensatedSum& operator+=(const Scalar& x) {
    if constexpr (is_complex_v<Scalar>) {
      add(re_, re_err_, x.real());
      add(im_, im_err_, x.imag());
    } else {
      add(re_, re_err_, x);
    }
    return *this;
  }

  Scalar value() const {
    if constexpr (is_complex_v<Scalar>) {
      return Scalar(re_ + re_err_, im_ + im_err_);
    } else {
      return re_ + re_err_;
    }
  }

 private:
  static void add(double& sum, double& err, double x) {
    double e;
    detail::two_sum(sum, x, sum, e);
    err += e;
  }

  double re_ = 0.0, re_err_ = 0.0;
  double im_ = 0.0, im_err_ = 0.0;
};

template <class Scalar>
Scalar compensated_sum(std::span<const Scalar> terms) {
  CompensatedSum<Scalar> acc;
  for (const auto& t : terms) acc += t;
  return acc.value();
}

/// Limit estimate produced by a sequence transformation.
template <class Scalar>
struct SeriesLimit {
  Scalar value{};
  double error_estimate = std::numeric_limits<double>::infinity();
  bool converged = false;
};

/// Wynn's epsilon algorithm on a sequence of partial sums. The even columns of
/// the epsilon table are the diagonal Pade approximants of the underlying power
/// series, so this also sums a Stieltjes series outside its disk of
/// convergence. The estimate returned is the even-column entry that agrees best
/// with its predecessor; that difference is the error estimate.
template <class Scalar>
SeriesLimit<Scalar> wynn_epsilon(std::span<const Scalar> partial_sums) {
  using std::abs;
  SeriesLimit<Scalar> out;
  const std::size_t m = partial_sums.size();
  if (m == 0) return out;
  out.value = partial_sums.back();
  if (m >= 2) {
    out.error_estimate = abs(partial_sums[m - 1] - partial_sums[m - 2]);
    out.converged = std::isfinite(out.error_estimate);
  }

  std::vector<Scalar> prev(m + 1, Scalar(0));
  std::vector<Scalar> cur(partial_sums.begin(), partial_sums.end());
  auto finite = [](const Scalar& v) {
    if constexpr (is_complex_v<Scalar>) {
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    } else {
      return std::isfinite(v);
    }
  };

  bool have_last = false;
  Scalar last_even{};
  for (std::size_t k = 1; cur.size() > 1; ++k) {
    std::vector<Scalar> next(cur.size() - 1);
    bool any_finite = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Scalar d = cur[i + 1] - cur[i];
      if (d == Scalar(0) || !finite(d)) {
        next[i] = Scalar(std::numeric_limits<double>::quiet_NaN());
      } else {
        next[i] = prev[i + 1] + Scalar(1) / d;
        any_finite = any_finite || finite(next[i]);
      }
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (!any_finite) break;
    if (k % 2 == 0 && finite(cur.back())) {
      const Scalar est = cur.back();
      if (have_last) {
        const double diff = abs(est - last_even);
        if (diff <= out.error_estimate) {
          out.value = est;
          out.error_estimate = diff;
          out.converged = true;
        }
      }
      last_even = est;
      have_last = true;
    }
  }
  return out;
}

}  // namespace hfs
