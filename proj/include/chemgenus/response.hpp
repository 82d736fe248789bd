// Tail-ratio criterion for sampled response curves A(t).
//
//     ratio(T) = int_T^inf |A| dt / int_0^T |A| dt
//
// evaluated with the trapezoidal rule on the samples. The improper upper
// limit is truncated at the last sample (A = 0 beyond it).

#ifndef CHEMGENUS_RESPONSE_HPP_
#define CHEMGENUS_RESPONSE_HPP_

#include <vector>

namespace chemgenus {

struct Sample {
  double t = 0.0;
  double value = 0.0;
  friend bool operator==(const Sample&, const Sample&) = default;
};

// At least two samples with strictly increasing, non-negative times.
class ResponseCurve {
public:
  // Throws Error(NonMonotoneTime) or Error(InvalidArgument).
  explicit ResponseCurve(std::vector<Sample> samples);

  const std::vector<Sample>& samples() const { return samples_; }
  double first_time() const { return samples_.front().t; }
  // End of the integration horizon.
  double last_time() const { return samples_.back().t; }

private:
  std::vector<Sample> samples_;
};

// Integral of |A| over [from, to] within the sampled range.
double abs_integral(const ResponseCurve& c, double from, double to);

// Requires first_time <= T < last_time (Error(TOutOfRange)) and a non-zero
// integral before T (Error(ZeroDenominator)).
double tail_ratio(const ResponseCurve& c, double T);

bool meets_threshold(const ResponseCurve& c, double T, double epsilon);

} // namespace chemgenus

#endif
