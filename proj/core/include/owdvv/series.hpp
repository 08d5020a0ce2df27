#ifndef OWDVV_SERIES_HPP
#define OWDVV_SERIES_HPP

#include "owdvv/laurent.hpp"

namespace owdvv {

enum class SeriesCenter { Zero, Infinity, Finite };

/// Truncated Laurent series sum_k coeff(k) w^k in the local parameter w
/// (w = x at 0 and finite centers, w = 1/x at infinity), exact coefficients.
struct TruncatedSeries {
    SeriesCenter center = SeriesCenter::Zero;
    CoefElement center_value;  // for Finite
    int lowest = 0;
    std::vector<FracCoef> coeffs;  // coeffs[k] multiplies w^(lowest+k)

    FracCoef coeff(int e) const {
        if (e < lowest || e >= lowest + static_cast<int>(coeffs.size())) return FracCoef();
        return coeffs[static_cast<size_t>(e - lowest)];
    }
    int highest() const { return lowest + static_cast<int>(coeffs.size()) - 1; }
};

/// Coefficients of f up to w^order inclusive. Exact.
TruncatedSeries series_at_zero(const RatFunc& f, int order);
TruncatedSeries series_at_infinity(const RatFunc& f, int order);
/// Affine chart only; throws unreduced_input when the center kills both
/// numerator and denominator.
TruncatedSeries series_at_point(const RatFunc& f, const CoefElement& center, int order);

class unreduced_input : public std::runtime_error {
public:
    explicit unreduced_input(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace owdvv

#endif
