#pragma once

#include "degen/mpoly.hpp"

namespace degen {

/// Degenerate falling factorial (u | s*lambda)_n = prod_{j<n} (u - j*s*lambda).
MPoly falling(const MPoly& u, const Rational& s, unsigned n);

}  // namespace degen
