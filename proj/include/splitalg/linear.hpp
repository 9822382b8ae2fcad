#pragma once

// Exact rational linear algebra: scalars, dense vectors and matrices,
// row reduction, subspaces in canonical RREF form and quotient coordinates.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace splitalg {

/// Arbitrary-precision rational; GMP keeps it canonical (den > 0, reduced).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed input or q == 0.
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& r);

class Error : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  public:
	using Error::Error;
};

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);

/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);

std::string to_string(const Vector& v);

class Matrix {
  public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols);
	/// Row-major nested initialiser; all rows must have the same length.
	static Matrix from_rows(const std::vector<Vector>& rows);
	static Matrix identity(std::size_t n);
	static Matrix scalar(std::size_t n, const Rational& k);

	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }

	Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	Vector row(std::size_t r) const;
	Vector column(std::size_t c) const;

	Vector apply(const Vector& v) const;
	Matrix operator*(const Matrix& other) const;
	Matrix operator+(const Matrix& other) const;

	bool is_zero() const;

	friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Rational> data_;
};

struct RowEchelon {
	Matrix reduced;
	std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(const Matrix& m);

std::size_t rank(const std::vector<Vector>& vectors, std::size_t ambient_dim);

/// A subspace stored as the nonzero rows of an RREF matrix. Two
/// SubspaceBasis values compare equal iff they span the same subspace.
class SubspaceBasis {
  public:
	explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

	std::size_t ambient_dim() const noexcept { return ambient_dim_; }
	std::size_t dimension() const noexcept { return basis_.size(); }
	const std::vector<Vector>& basis() const noexcept { return basis_; }
	const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

	friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

  private:
	friend SubspaceBasis span(const std::vector<Vector>&, std::size_t);

	std::size_t ambient_dim_;
	std::vector<Vector> basis_;
	std::vector<std::size_t> pivots_;
};

SubspaceBasis span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

/// Reduces v against the basis; the result is zero on every pivot column.
/// This is the canonical coset representative of v + S.
Vector reduce(const SubspaceBasis& s, const Vector& v);

bool contains(const SubspaceBasis& s, const Vector& v);

/// Quotient coordinates: V/S is identified with the non-pivot coordinates.
class ComplementCoordinates {
  public:
	explicit ComplementCoordinates(const SubspaceBasis& s);

	const std::vector<std::size_t>& indices() const noexcept { return indices_; }
	std::size_t dimension() const noexcept { return indices_.size(); }

	/// Coset of v, expressed in complement coordinates.
	Vector project(const Vector& v) const;
	/// The representative of a quotient vector supported on the complement.
	Vector lift(const Vector& q) const;
	/// Matrix of project(), of shape dimension() x ambient_dim.
	Matrix projection_matrix() const;

  private:
	SubspaceBasis subspace_;
	std::vector<std::size_t> indices_;
};

ComplementCoordinates complement_coordinates(const SubspaceBasis& s);

} // namespace splitalg
