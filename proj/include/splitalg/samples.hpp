#pragma once

// Small worked algebras used by the CLI fixtures and the test suite.

#include <cstddef>

#include "splitalg/algebra.hpp"

namespace splitalg::samples {

/// span(x, ..., x^n) with x^i x^j = x^(i+j), zero past degree n.
/// Basis index i is x^(i+1).
AlgebraSpec truncated_polynomials(std::size_t n);

/// R(x^i) = x^(i+1) / (i+1), zero on x^n.
LinearMap integration_operator(std::size_t n);

/// The dendriform algebra of truncated_polynomials(4) under integration.
AlgebraSpec truncated_dendriform();

/// e prec e = a e, e succ e = b e.
AlgebraSpec one_dim_dendriform(const Rational& a, const Rational& b);

/// x -> x^n, every other basis element -> 0.
LinearMap top_shift(std::size_t n);

} // namespace splitalg::samples
