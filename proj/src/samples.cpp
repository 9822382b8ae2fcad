#include "splitalg/samples.hpp"

#include "splitalg/constructions.hpp"

namespace splitalg::samples {

AlgebraSpec truncated_polynomials(std::size_t n)
{
	AlgebraSpec a = AlgebraSpec::zero(n, Signature::associative);
	for (std::size_t i = 0; i < n; ++i) {
		a.basis.push_back(i == 0 ? "x" : "x^" + std::to_string(i + 1));
		for (std::size_t j = 0; i + j + 1 < n; ++j)
			a.op(ops::mul)(i, j, i + j + 1) = 1;
	}
	return a;
}

LinearMap integration_operator(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i + 1 < n; ++i)
		m(i + 1, i) = Rational(1, static_cast<unsigned long>(i + 2));
	return LinearMap(std::move(m));
}

AlgebraSpec truncated_dendriform()
{
	AlgebraSpec d = aguiar_dendriform(truncated_polynomials(4), integration_operator(4));
	d.basis = truncated_polynomials(4).basis;
	return d;
}

AlgebraSpec one_dim_dendriform(const Rational& a, const Rational& b)
{
	AlgebraSpec d = AlgebraSpec::zero(1, Signature::dendriform);
	d.op(ops::prec)(0, 0, 0) = a;
	d.op(ops::succ)(0, 0, 0) = b;
	return d;
}

LinearMap top_shift(std::size_t n)
{
	Matrix m(n, n);
	if (n > 0)
		m(n - 1, 0) = 1;
	return LinearMap(std::move(m));
}

} // namespace splitalg::samples
