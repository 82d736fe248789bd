#include "chemgenus/response.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chemgenus/error.hpp"

namespace chemgenus {

ResponseCurve::ResponseCurve(std::vector<Sample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2)
    fail(ErrorKind::InvalidArgument, "a response curve needs at least two samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const Sample& s = samples_[i];
    if (!std::isfinite(s.t) || !std::isfinite(s.value))
      fail(ErrorKind::InvalidArgument, "sample " + std::to_string(i + 1) + " is not finite");
    if (i > 0 && !(s.t > samples_[i - 1].t))
      fail(ErrorKind::NonMonotoneTime,
           "sample " + std::to_string(i + 1) + " does not advance time");
  }
  if (samples_.front().t < 0.0)
    fail(ErrorKind::InvalidArgument, "sample times must be non-negative");
}

namespace {

// Trapezoid on the absolute sample values.
double abs_trapezoid(double x0, double y0, double x1, double y1) {
  return 0.5 * (x1 - x0) * (std::abs(y0) + std::abs(y1));
}

double interpolate(const Sample& lo, const Sample& hi, double t) {
  double w = (t - lo.t) / (hi.t - lo.t);
  return lo.value + w * (hi.value - lo.value);
}

} // namespace

double abs_integral(const ResponseCurve& c, double from, double to) {
  const auto& s = c.samples();
  from = std::max(from, c.first_time());
  to = std::min(to, c.last_time());
  if (!(to > from))
    return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    double x0 = std::max(s[i].t, from);
    double x1 = std::min(s[i + 1].t, to);
    if (!(x1 > x0))
      continue;
    double y0 = x0 == s[i].t ? s[i].value : interpolate(s[i], s[i + 1], x0);
    double y1 = x1 == s[i + 1].t ? s[i + 1].value : interpolate(s[i], s[i + 1], x1);
    total += abs_trapezoid(x0, y0, x1, y1);
  }
  return total;
}

double tail_ratio(const ResponseCurve& c, double T) {
  if (!(T >= c.first_time() && T < c.last_time()))
    fail(ErrorKind::TOutOfRange, "T = " + std::to_string(T) + " lies outside [" +
                                     std::to_string(c.first_time()) + ", " +
                                     std::to_string(c.last_time()) + ")");
  double before = abs_integral(c, c.first_time(), T);
  if (!(before > 0.0))
    fail(ErrorKind::ZeroDenominator, "no response before T = " + std::to_string(T));
  return abs_integral(c, T, c.last_time()) / before;
}

bool meets_threshold(const ResponseCurve& c, double T, double epsilon) {
  if (!(epsilon > 0.0))
    fail(ErrorKind::InvalidArgument, "epsilon must be positive");
  return tail_ratio(c, T) < epsilon;
}

} // namespace chemgenus
