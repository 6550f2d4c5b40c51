#pragma once

// Real Gamma, log-Gamma and Beta functions. Every constant in the library that
// involves a ratio of Gamma values is formed in log space and exponentiated once.

namespace bergman {

/// Strictly positive finite real. Construction throws DomainError otherwise.
class PositiveReal {
public:
    explicit PositiveReal(double value);
    double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; }

private:
    double value_;
};

/// ln Gamma(x) for x > 0.
double ln_gamma(PositiveReal x);

/// Gamma(x) for 0 < x <= 170; RangeError above.
double gamma(PositiveReal x);

/// ln B(x, y).
double ln_beta(PositiveReal x, PositiveReal y);

/// Euler Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).
double beta(PositiveReal x, PositiveReal y);

/// Gamma(x) / Gamma(x + delta), accurate for large x where the log-space
/// difference would cancel. Requires x > 0 and x + delta > 0.
double gamma_delta_ratio(double x, double delta);

}  // namespace bergman
