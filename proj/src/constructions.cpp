#include "splitalg/constructions.hpp"

#include "splitalg/operators.hpp"

namespace splitalg {

namespace {

/// Copies v into coordinates [offset, offset + v.size()) of a length-n vector.
Vector placed(const Vector& v, std::size_t offset, std::size_t n)
{
	Vector out = zero_vector(n);
	for (std::size_t i = 0; i < v.size(); ++i)
		out[offset + i] = v[i];
	return out;
}

/// Writes the products of a D x D, D x V or V x D block of a direct-sum
/// operation. Left indices start at lo, right at ro, output at oo.
void place_block(BilinearOp& dst, const BilinearOp& src, std::size_t lo, std::size_t ro, std::size_t oo)
{
	const std::size_t n = dst.out_dim();
	for (std::size_t i = 0; i < src.left_dim(); ++i)
		for (std::size_t j = 0; j < src.right_dim(); ++j)
			dst.set_product(lo + i, ro + j, placed(src.product(i, j), oo, n));
}

/// Adds another block onto an existing operation.
void add_block(BilinearOp& dst, const BilinearOp& src, std::size_t lo, std::size_t ro, std::size_t oo)
{
	const std::size_t n = dst.out_dim();
	for (std::size_t i = 0; i < src.left_dim(); ++i)
		for (std::size_t j = 0; j < src.right_dim(); ++j)
			dst.set_product(lo + i, ro + j, dst.product(lo + i, ro + j) + placed(src.product(i, j), oo, n));
}

std::vector<Vector> basis_images(const LinearMap& t)
{
	std::vector<Vector> images;
	for (std::size_t i = 0; i < t.source_dim; ++i)
		images.push_back(t.apply(unit_vector(t.source_dim, i)));
	return images;
}

/// op(f(e_i), e_j) when twist_left, else op(e_i, f(e_j)), for all i, j.
BilinearOp twisted(const BilinearOp& op, const LinearMap& f, bool twist_left, std::size_t n)
{
	BilinearOp out = BilinearOp::square(n);
	const auto images = basis_images(f);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			out.set_product(i, j, twist_left ? op.evaluate(images[i], unit_vector(n, j))
			                                 : op.evaluate(unit_vector(n, i), images[j]));
	return out;
}

AlgebraSpec with_ops(std::size_t n, Signature sig, std::map<std::string, BilinearOp> ops)
{
	AlgebraSpec a;
	a.dimension = n;
	a.signature = sig;
	a.operations = std::move(ops);
	a.validate();
	return a;
}

} // namespace

AlgebraSpec semidirect(const RepresentationSpec& rep)
{
	rep.validate();
	const std::size_t n = rep.base.dimension, m = rep.module_dim, total = n + m;
	AlgebraSpec out = AlgebraSpec::zero(total, Signature::dendriform);
	auto build = [&](BilinearOp& op, const BilinearOp& base, const BilinearOp& left, const BilinearOp& right) {
		place_block(op, base, 0, 0, 0);
		place_block(op, left, 0, n, n);
		place_block(op, right, n, 0, n);
	};
	build(out.op(ops::prec), rep.base.op(ops::prec), rep.prec_l, rep.prec_r);
	build(out.op(ops::succ), rep.base.op(ops::succ), rep.succ_l, rep.succ_r);
	return out;
}

AlgebraSpec hemisemidirect(const RepresentationSpec& rep)
{
	rep.validate();
	const std::size_t n = rep.base.dimension, m = rep.module_dim, total = n + m;
	AlgebraSpec out = AlgebraSpec::zero(total, Signature::quadri);
	const auto& prec = rep.base.op(ops::prec);
	const auto& succ = rep.base.op(ops::succ);
	for (const char* name : {ops::prec_vdash, ops::prec_dashv})
		place_block(out.op(name), prec, 0, 0, 0);
	for (const char* name : {ops::succ_vdash, ops::succ_dashv})
		place_block(out.op(name), succ, 0, 0, 0);
	place_block(out.op(ops::prec_vdash), rep.prec_l, 0, n, n);
	place_block(out.op(ops::succ_vdash), rep.succ_l, 0, n, n);
	place_block(out.op(ops::prec_dashv), rep.prec_r, n, 0, n);
	place_block(out.op(ops::succ_dashv), rep.succ_r, n, 0, n);
	return out;
}

AlgebraSpec action_semidirect(const ActionSpec& act)
{
	act.validate();
	AlgebraSpec out = semidirect(act.representation());
	const std::size_t n = act.base.dimension;
	add_block(out.op(ops::prec), act.target.op(ops::prec), n, n, n);
	add_block(out.op(ops::succ), act.target.op(ops::succ), n, n, n);
	return out;
}

AlgebraSpec sum_collapse_quadri(const AlgebraSpec& q)
{
	if (q.signature != Signature::quadri && q.signature != Signature::six)
		throw Error("sum collapse needs a quadri-dendriform algebra");
	return with_ops(q.dimension, Signature::diassociative,
	                {{ops::vdash, q.op(ops::prec_vdash) + q.op(ops::succ_vdash)},
	                 {ops::dashv, q.op(ops::prec_dashv) + q.op(ops::succ_dashv)}});
}

AlgebraSpec sum_collapse_six(const AlgebraSpec& s)
{
	if (s.signature != Signature::six)
		throw Error("sum collapse needs a six-dendriform algebra");
	return with_ops(s.dimension, Signature::triassociative,
	                {{ops::vdash, s.op(ops::prec_vdash) + s.op(ops::succ_vdash)},
	                 {ops::dashv, s.op(ops::prec_dashv) + s.op(ops::succ_dashv)},
	                 {ops::perp, s.op(ops::prec_perp) + s.op(ops::succ_perp)}});
}

AlgebraSpec aguiar_dendriform(const AlgebraSpec& assoc, const LinearMap& r)
{
	auto verdict = check_rota_baxter(assoc, r);
	if (!verdict.pass())
		throw PreconditionError("map is not a Rota-Baxter operator", verdict.report);
	const auto& mul = assoc.op(ops::mul);
	const std::size_t n = assoc.dimension;
	return with_ops(n, Signature::dendriform,
	                {{ops::prec, twisted(mul, r, false, n)}, {ops::succ, twisted(mul, r, true, n)}});
}

AlgebraSpec aguiar_diassociative(const AlgebraSpec& assoc, const LinearMap& h)
{
	auto verdict = check_assoc_averaging(assoc, h);
	if (!verdict.pass())
		throw PreconditionError("map is not an averaging operator", verdict.report);
	const auto& mul = assoc.op(ops::mul);
	const std::size_t n = assoc.dimension;
	return with_ops(n, Signature::diassociative,
	                {{ops::dashv, twisted(mul, h, false, n)}, {ops::vdash, twisted(mul, h, true, n)}});
}

namespace {

std::map<std::string, BilinearOp> induced_ops(const RepresentationSpec& rep, const LinearMap& t)
{
	const std::size_t m = rep.module_dim;
	const auto images = basis_images(t);
	std::map<std::string, BilinearOp> out;
	for (const char* name : {ops::prec_vdash, ops::prec_dashv, ops::succ_vdash, ops::succ_dashv})
		out.emplace(name, BilinearOp::square(m));
	for (std::size_t u = 0; u < m; ++u)
		for (std::size_t v = 0; v < m; ++v) {
			Vector eu = unit_vector(m, u), ev = unit_vector(m, v);
			out[ops::prec_vdash].set_product(u, v, rep.prec_l.evaluate(images[u], ev));
			out[ops::prec_dashv].set_product(u, v, rep.prec_r.evaluate(eu, images[v]));
			out[ops::succ_vdash].set_product(u, v, rep.succ_l.evaluate(images[u], ev));
			out[ops::succ_dashv].set_product(u, v, rep.succ_r.evaluate(eu, images[v]));
		}
	return out;
}

} // namespace

AlgebraSpec induced_quadri(const RepresentationSpec& rep, const LinearMap& t)
{
	auto verdict = check_relative_averaging(rep, t);
	if (!verdict.pass())
		throw PreconditionError("map is not a relative averaging operator", verdict.report);
	return with_ops(rep.module_dim, Signature::quadri, induced_ops(rep, t));
}

AlgebraSpec averaging_induced_quadri(const AlgebraSpec& dendriform, const LinearMap& t)
{
	return induced_quadri(RepresentationSpec::adjoint(dendriform), t);
}

AlgebraSpec induced_six(const ActionSpec& act, const LinearMap& t)
{
	auto verdict = check_homomorphic_relative(act, t);
	if (!verdict.pass())
		throw PreconditionError("map is not a homomorphic relative averaging operator", verdict.report);
	auto ops_map = induced_ops(act.representation(), t);
	ops_map.emplace(ops::prec_perp, act.target.op(ops::prec));
	ops_map.emplace(ops::succ_perp, act.target.op(ops::succ));
	return with_ops(act.target.dimension, Signature::six, std::move(ops_map));
}

ViolationReport DifferentialDendriformSpec::audit(std::size_t limit) const
{
	base.validate();
	d.validate();
	const std::size_t n = base.dimension;
	if (d.source_dim != n || d.target_dim != n)
		throw DimensionError("differential must be an endomorphism of the base algebra");
	ViolationReport report;
	auto record = [&](const std::string& tag, std::vector<std::size_t> witness, Vector residual) {
		if (is_zero(residual))
			return;
		++report.violation_count;
		if (report.violations.size() < limit)
			report.violations.push_back({tag, std::move(witness), std::move(residual)});
	};
	const auto images = basis_images(d);
	std::size_t before = 0;
	for (std::size_t i = 0; i < n; ++i)
		record("d^2", {i}, d.apply(images[i]));
	report.checked += n;
	report.schemas.push_back({"d^2", report.violation_count - before});
	for (const char* name : {ops::prec, ops::succ}) {
		const auto& op = base.op(name);
		before = report.violation_count;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				record(std::string("leibniz/") + name, {i, j},
				       d.apply(op.product(i, j)) - op.evaluate(images[i], unit_vector(n, j)) -
				           op.evaluate(unit_vector(n, i), images[j]));
		report.checked += n * n;
		report.schemas.push_back({std::string("leibniz/") + name, report.violation_count - before});
	}
	return report;
}

AlgebraSpec differential_quadri(const DifferentialDendriformSpec& dd)
{
	auto report = dd.audit();
	if (!report.passed())
		throw PreconditionError("map is not a differential (d^2 = 0 and Leibniz)", report);
	const std::size_t n = dd.base.dimension;
	const auto& prec = dd.base.op(ops::prec);
	const auto& succ = dd.base.op(ops::succ);
	return with_ops(n, Signature::quadri,
	                {{ops::prec_vdash, twisted(prec, dd.d, true, n)},
	                 {ops::prec_dashv, twisted(prec, dd.d, false, n)},
	                 {ops::succ_vdash, twisted(succ, dd.d, true, n)},
	                 {ops::succ_dashv, twisted(succ, dd.d, false, n)}});
}

DualExtension dual_extension(const AlgebraSpec& dendriform)
{
	dendriform.validate();
	if (dendriform.signature != Signature::dendriform)
		throw Error("dual extension needs a dendriform algebra");
	const std::size_t n = dendriform.dimension, total = 2 * n;

	AlgebraSpec f = AlgebraSpec::zero(total, Signature::dendriform);
	for (const char* name : {ops::prec, ops::succ}) {
		const auto& op = dendriform.op(name);
		place_block(f.op(name), op, 0, 0, 0); // a * c
		place_block(f.op(name), op, 0, n, n); // a * tc = t(a * c)
		place_block(f.op(name), op, n, 0, n); // ta * c = t(a * c)
	}

	// The action is F's product restricted to D = the degree-zero block.
	auto restrict_left = [&](const BilinearOp& op) {
		BilinearOp out(n, total, total);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < total; ++j)
				out.set_product(i, j, op.product(i, j));
		return out;
	};
	auto restrict_right = [&](const BilinearOp& op) {
		BilinearOp out(total, n, total);
		for (std::size_t i = 0; i < total; ++i)
			for (std::size_t j = 0; j < n; ++j)
				out.set_product(i, j, op.product(i, j));
		return out;
	};

	DualExtension ext;
	ext.action.base = dendriform;
	ext.action.target = f;
	ext.action.prec_l = restrict_left(f.op(ops::prec));
	ext.action.succ_l = restrict_left(f.op(ops::succ));
	ext.action.prec_r = restrict_right(f.op(ops::prec));
	ext.action.succ_r = restrict_right(f.op(ops::succ));

	Matrix p(n, total);
	for (std::size_t i = 0; i < n; ++i)
		p(i, i) = 1;
	ext.projection = LinearMap(std::move(p));
	return ext;
}

AlgebraSpec promote_to_quadri(const AlgebraSpec& dendriform)
{
	const auto& p = dendriform.op(ops::prec);
	const auto& s = dendriform.op(ops::succ);
	return with_ops(dendriform.dimension, Signature::quadri,
	                {{ops::prec_vdash, p}, {ops::prec_dashv, p}, {ops::succ_vdash, s}, {ops::succ_dashv, s}});
}

AlgebraSpec promote_to_six(const AlgebraSpec& dendriform)
{
	AlgebraSpec out = promote_to_quadri(dendriform);
	out.signature = Signature::six;
	out.operations.emplace(ops::prec_perp, dendriform.op(ops::prec));
	out.operations.emplace(ops::succ_perp, dendriform.op(ops::succ));
	out.validate();
	return out;
}

AlgebraSpec perp_part(const AlgebraSpec& six)
{
	return with_ops(six.dimension, Signature::dendriform,
	                {{ops::prec, six.op(ops::prec_perp)}, {ops::succ, six.op(ops::succ_perp)}});
}

AlgebraSpec quadri_part(const AlgebraSpec& six)
{
	std::map<std::string, BilinearOp> ops_map;
	for (const auto& name : canonical_operations(Signature::quadri))
		ops_map.emplace(name, six.op(name));
	return with_ops(six.dimension, Signature::quadri, std::move(ops_map));
}

} // namespace splitalg
