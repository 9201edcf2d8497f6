#pragma once

#include "essq/sseq.hpp"

namespace essq {

// Coefficients of the Poincare numerator: coefficient of t^n is the total
// dimension of Einf/(u5^8, u10^8) in degree n.  The full series is
// numerator / (1 - t^8)^2.
std::vector<int> poincare_numerator(const SpectralSequence& s);

Report poincare_report(const SpectralSequence& s);
Report functional_equation_report(const SpectralSequence& s);
Report rational_parameters_report(const SpectralSequence& s);
Report clark_discrepancy_report(const SpectralSequence& s);

}  // namespace essq
