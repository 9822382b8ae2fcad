#include "splitalg/algebra.hpp"

#include <algorithm>
#include <array>

namespace splitalg {

BilinearOp::BilinearOp(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
    : left_(left_dim), right_(right_dim), out_(out_dim), c_(left_dim * right_dim * out_dim, Rational(0))
{
}

Vector BilinearOp::product(std::size_t i, std::size_t j) const
{
	auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * right_ + j) * out_);
	return Vector(first, first + static_cast<std::ptrdiff_t>(out_));
}

void BilinearOp::set_product(std::size_t i, std::size_t j, const Vector& v)
{
	if (v.size() != out_)
		throw DimensionError("product vector has length " + std::to_string(v.size()) + ", expected " +
		                     std::to_string(out_));
	std::copy(v.begin(), v.end(), c_.begin() + static_cast<std::ptrdiff_t>((i * right_ + j) * out_));
}

Vector BilinearOp::evaluate(const Vector& x, const Vector& y) const
{
	if (x.size() != left_ || y.size() != right_)
		throw DimensionError("operation of shape " + std::to_string(left_) + "x" + std::to_string(right_) +
		                     " evaluated on vectors of length " + std::to_string(x.size()) + " and " +
		                     std::to_string(y.size()));
	Vector out = zero_vector(out_);
	Rational xy;
	for (std::size_t i = 0; i < left_; ++i) {
		if (sgn(x[i]) == 0)
			continue;
		for (std::size_t j = 0; j < right_; ++j) {
			if (sgn(y[j]) == 0)
				continue;
			xy = x[i] * y[j];
			const Rational* row = &c_[(i * right_ + j) * out_];
			for (std::size_t k = 0; k < out_; ++k)
				if (sgn(row[k]) != 0)
					out[k] += xy * row[k];
		}
	}
	return out;
}

bool BilinearOp::is_zero() const
{
	return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

BilinearOp& BilinearOp::operator+=(const BilinearOp& other)
{
	if (left_ != other.left_ || right_ != other.right_ || out_ != other.out_)
		throw DimensionError("sum of operations with different shapes");
	for (std::size_t i = 0; i < c_.size(); ++i)
		c_[i] += other.c_[i];
	return *this;
}

namespace {

constexpr std::array<std::pair<Signature, std::string_view>, 7> signature_names{{
    {Signature::associative, "associative"},
    {Signature::dendriform, "dendriform"},
    {Signature::diassociative, "diassociative"},
    {Signature::triassociative, "triassociative"},
    {Signature::quadri, "quadri"},
    {Signature::six, "six"},
    {Signature::raw, "raw"},
}};

void check_op_shape(const BilinearOp& op, std::size_t l, std::size_t r, std::size_t o, const std::string& what)
{
	if (op.left_dim() != l || op.right_dim() != r || op.out_dim() != o)
		throw DimensionError(what + " has shape " + std::to_string(op.left_dim()) + "x" +
		                     std::to_string(op.right_dim()) + "->" + std::to_string(op.out_dim()) + ", expected " +
		                     std::to_string(l) + "x" + std::to_string(r) + "->" + std::to_string(o));
}

} // namespace

std::string_view to_string(Signature s)
{
	for (auto [sig, name] : signature_names)
		if (sig == s)
			return name;
	return "raw";
}

std::optional<Signature> signature_from_string(std::string_view s)
{
	for (auto [sig, name] : signature_names)
		if (name == s)
			return sig;
	return std::nullopt;
}

const std::vector<std::string>& canonical_operations(Signature s)
{
	static const std::vector<std::string> associative{ops::mul};
	static const std::vector<std::string> dendriform{ops::prec, ops::succ};
	static const std::vector<std::string> diassociative{ops::dashv, ops::vdash};
	static const std::vector<std::string> triassociative{ops::dashv, ops::perp, ops::vdash};
	static const std::vector<std::string> quadri{ops::prec_dashv, ops::prec_vdash, ops::succ_dashv,
	                                             ops::succ_vdash};
	static const std::vector<std::string> six{ops::prec_dashv, ops::prec_perp, ops::prec_vdash,
	                                          ops::succ_dashv, ops::succ_perp, ops::succ_vdash};
	static const std::vector<std::string> raw{};
	switch (s) {
	case Signature::associative: return associative;
	case Signature::dendriform: return dendriform;
	case Signature::diassociative: return diassociative;
	case Signature::triassociative: return triassociative;
	case Signature::quadri: return quadri;
	case Signature::six: return six;
	case Signature::raw: return raw;
	}
	return raw;
}

AlgebraSpec AlgebraSpec::zero(std::size_t n, Signature sig)
{
	AlgebraSpec a;
	a.dimension = n;
	a.signature = sig;
	for (const auto& name : canonical_operations(sig))
		a.operations.emplace(name, BilinearOp::square(n));
	return a;
}

const BilinearOp& AlgebraSpec::op(const std::string& name) const
{
	auto it = operations.find(name);
	if (it == operations.end())
		throw Error("algebra has no operation '" + name + "'");
	return it->second;
}

BilinearOp& AlgebraSpec::op(const std::string& name)
{
	auto it = operations.find(name);
	if (it == operations.end())
		throw Error("algebra has no operation '" + name + "'");
	return it->second;
}

void AlgebraSpec::validate() const
{
	if (!basis.empty() && basis.size() != dimension)
		throw DimensionError("basis has " + std::to_string(basis.size()) + " labels for dimension " +
		                     std::to_string(dimension));
	const auto& required = canonical_operations(signature);
	for (const auto& name : required)
		if (!has(name))
			throw Error("signature " + std::string(to_string(signature)) + " requires operation '" + name + "'");
	for (const auto& [name, op] : operations) {
		if (signature != Signature::raw && std::find(required.begin(), required.end(), name) == required.end())
			throw Error("operation '" + name + "' is not part of signature " + std::string(to_string(signature)));
		check_op_shape(op, dimension, dimension, dimension, "operation '" + name + "'");
	}
}

RepresentationSpec RepresentationSpec::zero(const AlgebraSpec& base, std::size_t module_dim)
{
	RepresentationSpec r;
	r.base = base;
	r.module_dim = module_dim;
	r.prec_l = r.succ_l = BilinearOp(base.dimension, module_dim, module_dim);
	r.prec_r = r.succ_r = BilinearOp(module_dim, base.dimension, module_dim);
	return r;
}

RepresentationSpec RepresentationSpec::adjoint(const AlgebraSpec& dendriform)
{
	RepresentationSpec r;
	r.base = dendriform;
	r.module_dim = dendriform.dimension;
	r.prec_l = r.prec_r = dendriform.op(ops::prec);
	r.succ_l = r.succ_r = dendriform.op(ops::succ);
	return r;
}

void RepresentationSpec::validate() const
{
	base.validate();
	if (base.signature != Signature::dendriform)
		throw Error("representation base must be a dendriform algebra");
	std::size_t n = base.dimension;
	check_op_shape(prec_l, n, module_dim, module_dim, "prec_l");
	check_op_shape(succ_l, n, module_dim, module_dim, "succ_l");
	check_op_shape(prec_r, module_dim, n, module_dim, "prec_r");
	check_op_shape(succ_r, module_dim, n, module_dim, "succ_r");
}

ActionSpec ActionSpec::self(const AlgebraSpec& dendriform)
{
	ActionSpec a;
	a.base = dendriform;
	a.target = dendriform;
	a.prec_l = a.prec_r = dendriform.op(ops::prec);
	a.succ_l = a.succ_r = dendriform.op(ops::succ);
	return a;
}

RepresentationSpec ActionSpec::representation() const
{
	RepresentationSpec r;
	r.base = base;
	r.module_dim = target.dimension;
	r.prec_l = prec_l;
	r.succ_l = succ_l;
	r.prec_r = prec_r;
	r.succ_r = succ_r;
	return r;
}

void ActionSpec::validate() const
{
	target.validate();
	if (target.signature != Signature::dendriform)
		throw Error("action target must be a dendriform algebra");
	representation().validate();
}

LinearMap::LinearMap(Matrix m) : source_dim(m.cols()), target_dim(m.rows()), matrix(std::move(m)) {}

Vector LinearMap::apply(const Vector& v) const
{
	if (v.size() != source_dim)
		throw DimensionError("map with source dimension " + std::to_string(source_dim) +
		                     " applied to vector of length " + std::to_string(v.size()));
	return matrix.apply(v);
}

LinearMap LinearMap::compose(const LinearMap& other) const
{
	if (other.target_dim != source_dim)
		throw DimensionError("composition of incompatible maps");
	return LinearMap(matrix * other.matrix);
}

void LinearMap::validate() const
{
	if (matrix.rows() != target_dim || matrix.cols() != source_dim)
		throw DimensionError("map matrix is " + std::to_string(matrix.rows()) + "x" +
		                     std::to_string(matrix.cols()) + ", expected " + std::to_string(target_dim) + "x" +
		                     std::to_string(source_dim));
}

} // namespace splitalg
