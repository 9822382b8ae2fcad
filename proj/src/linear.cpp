#include "splitalg/linear.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace splitalg {

namespace {

bool is_integer_literal(std::string_view s)
{
	if (s.empty())
		return false;
	std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
	if (i == s.size())
		return false;
	return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
	                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

void require_same_size(const Vector& a, const Vector& b)
{
	if (a.size() != b.size())
		throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
		                     std::to_string(b.size()));
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text)
{
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
		return std::nullopt;
	if (num[0] == '+')
		num.remove_prefix(1);
	mpz_class p(std::string(num), 10);
	mpz_class q(std::string(den), 10);
	if (q == 0)
		return std::nullopt;
	Rational r(p, q);
	r.canonicalize();
	return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v = zero_vector(n);
	v.at(i) = 1;
	return v;
}

bool is_zero(const Vector& v)
{
	return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector operator+(const Vector& a, const Vector& b)
{
	Vector r = a;
	r += b;
	return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
	Vector r = a;
	r -= b;
	return r;
}

Vector operator*(const Rational& s, const Vector& v)
{
	Vector r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = s * v[i];
	return r;
}

Vector& operator+=(Vector& a, const Vector& b)
{
	require_same_size(a, b);
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

Vector& operator-=(Vector& a, const Vector& b)
{
	require_same_size(a, b);
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] -= b[i];
	return a;
}

void axpy(Vector& a, const Rational& s, const Vector& b)
{
	require_same_size(a, b);
	if (sgn(s) == 0)
		return;
	for (std::size_t i = 0; i < a.size(); ++i)
		if (sgn(b[i]) != 0)
			a[i] += s * b[i];
}

std::string to_string(const Vector& v)
{
	std::ostringstream os;
	os << '(';
	for (std::size_t i = 0; i < v.size(); ++i)
		os << (i ? ", " : "") << to_string(v[i]);
	os << ')';
	return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows)
{
	std::size_t cols = rows.empty() ? 0 : rows.front().size();
	Matrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols)
			throw DimensionError("ragged matrix rows");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational& k)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = k;
	return m;
}

Vector Matrix::row(std::size_t r) const
{
	return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
	              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
	Vector v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

Vector Matrix::apply(const Vector& v) const
{
	if (v.size() != cols_)
		throw DimensionError("matrix with " + std::to_string(cols_) + " columns applied to vector of length " +
		                     std::to_string(v.size()));
	Vector out = zero_vector(rows_);
	for (std::size_t c = 0; c < cols_; ++c) {
		if (sgn(v[c]) == 0)
			continue;
		for (std::size_t r = 0; r < rows_; ++r)
			if (sgn((*this)(r, c)) != 0)
				out[r] += (*this)(r, c) * v[c];
	}
	return out;
}

Matrix Matrix::operator*(const Matrix& other) const
{
	if (cols_ != other.rows_)
		throw DimensionError("matrix product shape mismatch");
	Matrix out(rows_, other.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k) {
			const Rational& a = (*this)(i, k);
			if (sgn(a) == 0)
				continue;
			for (std::size_t j = 0; j < other.cols_; ++j)
				out(i, j) += a * other(k, j);
		}
	return out;
}

Matrix Matrix::operator+(const Matrix& other) const
{
	if (rows_ != other.rows_ || cols_ != other.cols_)
		throw DimensionError("matrix sum shape mismatch");
	Matrix out = *this;
	for (std::size_t i = 0; i < data_.size(); ++i)
		out.data_[i] += other.data_[i];
	return out;
}

bool Matrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RowEchelon rref(const Matrix& m)
{
	Matrix a = m;
	std::vector<std::size_t> pivots;
	std::size_t lead_row = 0;
	for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
		std::size_t p = lead_row;
		while (p < a.rows() && sgn(a(p, c)) == 0)
			++p;
		if (p == a.rows())
			continue;
		if (p != lead_row)
			for (std::size_t j = 0; j < a.cols(); ++j)
				swap(a(p, j), a(lead_row, j));
		Rational inv = 1 / a(lead_row, c);
		for (std::size_t j = c; j < a.cols(); ++j)
			a(lead_row, j) *= inv;
		for (std::size_t r = 0; r < a.rows(); ++r) {
			if (r == lead_row || sgn(a(r, c)) == 0)
				continue;
			Rational f = a(r, c);
			for (std::size_t j = c; j < a.cols(); ++j)
				a(r, j) -= f * a(lead_row, j);
		}
		pivots.push_back(c);
		++lead_row;
	}
	return {std::move(a), std::move(pivots)};
}

std::size_t rank(const std::vector<Vector>& vectors, std::size_t ambient_dim)
{
	return span(vectors, ambient_dim).dimension();
}

SubspaceBasis span(const std::vector<Vector>& vectors, std::size_t ambient_dim)
{
	for (const auto& v : vectors)
		if (v.size() != ambient_dim)
			throw DimensionError("spanning vector of length " + std::to_string(v.size()) +
			                     " in ambient dimension " + std::to_string(ambient_dim));
	SubspaceBasis s(ambient_dim);
	if (vectors.empty() || ambient_dim == 0)
		return s;
	auto [reduced, pivots] = rref(Matrix::from_rows(vectors));
	for (std::size_t r = 0; r < pivots.size(); ++r)
		s.basis_.push_back(reduced.row(r));
	s.pivots_ = std::move(pivots);
	return s;
}

Vector reduce(const SubspaceBasis& s, const Vector& v)
{
	if (v.size() != s.ambient_dim())
		throw DimensionError("vector of length " + std::to_string(v.size()) + " tested against subspace of " +
		                     std::to_string(s.ambient_dim()));
	Vector r = v;
	for (std::size_t b = 0; b < s.dimension(); ++b) {
		Rational coeff = r[s.pivots()[b]];
		if (sgn(coeff) != 0)
			axpy(r, -coeff, s.basis()[b]);
	}
	return r;
}

bool contains(const SubspaceBasis& s, const Vector& v) { return is_zero(reduce(s, v)); }

ComplementCoordinates::ComplementCoordinates(const SubspaceBasis& s) : subspace_(s)
{
	const auto& piv = s.pivots();
	for (std::size_t i = 0; i < s.ambient_dim(); ++i)
		if (!std::binary_search(piv.begin(), piv.end(), i))
			indices_.push_back(i);
}

Vector ComplementCoordinates::project(const Vector& v) const
{
	Vector r = reduce(subspace_, v);
	Vector q(indices_.size());
	for (std::size_t i = 0; i < indices_.size(); ++i)
		q[i] = r[indices_[i]];
	return q;
}

Vector ComplementCoordinates::lift(const Vector& q) const
{
	if (q.size() != indices_.size())
		throw DimensionError("quotient vector has wrong length");
	Vector v = zero_vector(subspace_.ambient_dim());
	for (std::size_t i = 0; i < indices_.size(); ++i)
		v[indices_[i]] = q[i];
	return v;
}

Matrix ComplementCoordinates::projection_matrix() const
{
	std::size_t n = subspace_.ambient_dim();
	Matrix m(indices_.size(), n);
	for (std::size_t c = 0; c < n; ++c) {
		Vector col = project(unit_vector(n, c));
		for (std::size_t r = 0; r < col.size(); ++r)
			m(r, c) = col[r];
	}
	return m;
}

ComplementCoordinates complement_coordinates(const SubspaceBasis& s) { return ComplementCoordinates(s); }

} // namespace splitalg
