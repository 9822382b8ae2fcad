#pragma once

// Helpers shared by the test programs. The oracles here are written
// straight from the defining formulas and read structure constants
// directly, without the library's evaluator or identity engine.

#include <random>
#include <string>
#include <vector>

#include "splitalg/algebra.hpp"
#include "splitalg/linear.hpp"

namespace support {

using splitalg::AlgebraSpec;
using splitalg::BilinearOp;
using splitalg::LinearMap;
using splitalg::Matrix;
using splitalg::Rational;
using splitalg::Signature;
using splitalg::Vector;

inline Rational random_rational(std::mt19937& rng, int span = 5, int max_den = 4)
{
	std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
	Rational r(num(rng), den(rng));
	r.canonicalize();
	return r;
}

inline Vector random_vector(std::mt19937& rng, std::size_t n)
{
	Vector v(n);
	for (auto& x : v)
		x = random_rational(rng);
	return v;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, const std::vector<int>& values)
{
	std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
	Matrix m(rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = values[pick(rng)];
	return m;
}

inline BilinearOp random_op(std::mt19937& rng, std::size_t l, std::size_t r, std::size_t o)
{
	BilinearOp op(l, r, o);
	for (std::size_t i = 0; i < l; ++i)
		for (std::size_t j = 0; j < r; ++j)
			for (std::size_t k = 0; k < o; ++k)
				op(i, j, k) = random_rational(rng);
	return op;
}

/// sum_{i,j} x_i y_j c(i, j, .), straight from the coefficients.
inline Vector mul(const BilinearOp& op, const Vector& x, const Vector& y)
{
	Vector out(op.out_dim());
	for (auto& v : out)
		v = 0;
	for (std::size_t i = 0; i < op.left_dim(); ++i)
		for (std::size_t j = 0; j < op.right_dim(); ++j)
			for (std::size_t k = 0; k < op.out_dim(); ++k)
				out[k] += x[i] * y[j] * op(i, j, k);
	return out;
}

inline Vector e(std::size_t n, std::size_t i)
{
	Vector v(n);
	for (auto& x : v)
		x = 0;
	v[i] = 1;
	return v;
}

inline Vector add(Vector a, const Vector& b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

inline bool equal(const Vector& a, const Vector& b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		if (a[i] != b[i])
			return false;
	return a.size() == b.size();
}

/// Truncated polynomials x, ..., x^4; index i is x^(i+1).
inline AlgebraSpec poly_oracle()
{
	AlgebraSpec a;
	a.dimension = 4;
	a.signature = Signature::associative;
	BilinearOp mu(4, 4, 4);
	for (int p = 1; p <= 4; ++p)
		for (int q = 1; p + q <= 4; ++q)
			mu(p - 1, q - 1, p + q - 1) = 1;
	a.operations.emplace("mul", mu);
	return a;
}

/// R(x^p) = x^(p+1) / (p+1).
inline LinearMap integration_oracle()
{
	Matrix m(4, 4);
	for (int p = 1; p < 4; ++p)
		m(p, p - 1) = Rational(1, p + 1);
	return LinearMap(m);
}

/// x^p prec x^q = x^p R(x^q) = x^(p+q+1)/(q+1), x^p succ x^q = x^(p+q+1)/(p+1).
inline AlgebraSpec ag1_dendriform_oracle()
{
	AlgebraSpec d;
	d.dimension = 4;
	d.signature = Signature::dendriform;
	BilinearOp prec(4, 4, 4), succ(4, 4, 4);
	for (int p = 1; p <= 4; ++p)
		for (int q = 1; p + q + 1 <= 4; ++q) {
			prec(p - 1, q - 1, p + q) = Rational(1, q + 1);
			succ(p - 1, q - 1, p + q) = Rational(1, p + 1);
		}
	d.operations.emplace("prec", prec);
	d.operations.emplace("succ", succ);
	return d;
}

/// The three dendriform axioms on every basis triple, written out by hand.
inline bool dendriform_oracle(const AlgebraSpec& d)
{
	const auto& p = d.operations.at("prec");
	const auto& s = d.operations.at("succ");
	const std::size_t n = d.dimension;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k) {
				Vector x = e(n, i), y = e(n, j), z = e(n, k);
				Vector yz = add(mul(p, y, z), mul(s, y, z));
				Vector xy = add(mul(p, x, y), mul(s, x, y));
				if (!equal(mul(p, mul(p, x, y), z), mul(p, x, yz)))
					return false;
				if (!equal(mul(p, mul(s, x, y), z), mul(s, x, mul(p, y, z))))
					return false;
				if (!equal(mul(s, x, mul(s, y, z)), mul(s, xy, z)))
					return false;
			}
	return true;
}

inline bool tensors_equal(const AlgebraSpec& a, const AlgebraSpec& b)
{
	return a.dimension == b.dimension && a.operations == b.operations;
}

} // namespace support
