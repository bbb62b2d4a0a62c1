#pragma once

#include <vector>

#include "msr/ratmatrix.hpp"

namespace msr {

// Floating-point eigenvalues of a symmetric rational matrix, descending.
// Diagnostic only; the exact psd pivots are the authoritative certificate.
std::vector<double> float_eigenvalues(const RationalMatrix& m);

}  // namespace msr
