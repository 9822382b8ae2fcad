#include "splitalg/quotients.hpp"

#include <set>

#include "splitalg/parallel.hpp"

namespace splitalg {

namespace {

/// Products of every vector in vs with every basis element, on both sides,
/// under every operation of a.
std::vector<Vector> one_sided_products(const AlgebraSpec& a, const std::vector<Vector>& vs)
{
	const std::size_t n = a.dimension;
	std::vector<std::vector<Vector>> parts(worker_count());
	parallel_chunks(vs.size() * n, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
		for (std::size_t g = begin; g < end; ++g) {
			const Vector& b = vs[g / n];
			Vector ex = unit_vector(n, g % n);
			for (const auto& [name, op] : a.operations) {
				Vector l = op.evaluate(b, ex), r = op.evaluate(ex, b);
				if (!is_zero(l))
					parts[chunk].push_back(std::move(l));
				if (!is_zero(r))
					parts[chunk].push_back(std::move(r));
			}
		}
	});
	std::vector<Vector> out;
	for (auto& p : parts)
		for (auto& v : p)
			out.push_back(std::move(v));
	return out;
}

Signature signature_of_targets(const OpPairing& collapse)
{
	std::set<std::string> targets;
	for (const auto& [from, to] : collapse)
		targets.insert(to);
	for (Signature s : {Signature::associative, Signature::dendriform, Signature::diassociative,
	                    Signature::triassociative, Signature::quadri, Signature::six}) {
		const auto& names = canonical_operations(s);
		if (std::set<std::string>(names.begin(), names.end()) == targets)
			return s;
	}
	return Signature::raw;
}

} // namespace

IdealSpec ideal_generated(const AlgebraSpec& a, const std::vector<Vector>& generators)
{
	a.validate();
	const std::size_t n = a.dimension;
	SubspaceBasis s = span(generators, n);
	while (s.dimension() < n) {
		std::vector<Vector> grown = s.basis();
		for (auto& v : one_sided_products(a, s.basis()))
			if (!contains(s, v))
				grown.push_back(std::move(v));
		SubspaceBasis next = span(grown, n);
		if (next.dimension() == s.dimension())
			break;
		s = std::move(next);
	}
	return {a, s};
}

ViolationReport audit_ideal(const IdealSpec& ideal, std::size_t limit)
{
	const auto& a = ideal.ambient;
	const auto& s = ideal.subspace;
	const std::size_t n = a.dimension, r = s.dimension();
	ViolationReport report;
	for (const auto& [name, op] : a.operations) {
		for (const char* side : {"left", "right"}) {
			const bool left = side[0] == 'l';
			std::size_t failures = 0;
			for (std::size_t b = 0; b < r; ++b)
				for (std::size_t x = 0; x < n; ++x) {
					Vector ex = unit_vector(n, x);
					Vector res = reduce(s, left ? op.evaluate(s.basis()[b], ex) : op.evaluate(ex, s.basis()[b]));
					if (is_zero(res))
						continue;
					++failures;
					if (report.violations.size() < limit)
						report.violations.push_back({name + "/" + side, {b, x}, std::move(res)});
				}
			report.checked += r * n;
			report.violation_count += failures;
			report.schemas.push_back({name + "/" + side, failures});
		}
	}
	return report;
}

IdealSpec splitting_ideal(const AlgebraSpec& q)
{
	if (q.signature != Signature::quadri && q.signature != Signature::six)
		throw Error("splitting ideal needs a quadri or six algebra");
	q.validate();
	const std::size_t n = q.dimension;
	std::vector<Vector> generators;
	for (auto [vdash, dashv] : {std::pair{ops::prec_vdash, ops::prec_dashv}, std::pair{ops::succ_vdash, ops::succ_dashv}})
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				Vector d = q.op(vdash).product(i, j) - q.op(dashv).product(i, j);
				if (!is_zero(d))
					generators.push_back(std::move(d));
			}
	return ideal_generated(q, generators);
}

OpPairing six_collapse_pairing() { return quadri_collapse_pairing(); }

Quotient quotient_algebra(const AlgebraSpec& a, const IdealSpec& ideal, const OpPairing& collapse)
{
	if (ideal.subspace.ambient_dim() != a.dimension)
		throw DimensionError("ideal lives in a space of the wrong dimension");
	IdealSpec checked{a, ideal.subspace};
	auto audit = audit_ideal(checked);
	if (!audit.passed())
		throw PreconditionError("not an ideal", audit);

	const std::size_t n = a.dimension;
	const auto& s = ideal.subspace;
	std::map<std::string, std::vector<std::string>> preimages;
	for (const auto& [from, to] : collapse) {
		if (!a.has(from))
			throw Error("collapse pairing names unknown operation '" + from + "'");
		preimages[to].push_back(from);
	}

	ViolationReport clash;
	for (const auto& [to, froms] : preimages)
		for (std::size_t k = 1; k < froms.size(); ++k) {
			const std::string tag = froms[0] + "~" + froms[k];
			std::size_t failures = 0;
			for (std::size_t i = 0; i < n; ++i)
				for (std::size_t j = 0; j < n; ++j) {
					Vector res = reduce(s, a.op(froms[0]).product(i, j) - a.op(froms[k]).product(i, j));
					if (is_zero(res))
						continue;
					++failures;
					if (clash.violations.size() < default_report_limit)
						clash.violations.push_back({tag, {i, j}, std::move(res)});
				}
			clash.checked += n * n;
			clash.violation_count += failures;
			clash.schemas.push_back({tag, failures});
		}
	if (!clash.passed())
		throw PreconditionError("ill-defined collapse", clash);

	ComplementCoordinates cc(s);
	const std::size_t m = cc.dimension();
	Quotient out;
	out.algebra.dimension = m;
	out.algebra.signature = signature_of_targets(collapse);
	for (const auto& [to, froms] : preimages) {
		const auto& op = a.op(froms[0]);
		BilinearOp q = BilinearOp::square(m);
		for (std::size_t i = 0; i < m; ++i)
			for (std::size_t j = 0; j < m; ++j)
				q.set_product(i, j, cc.project(op.product(cc.indices()[i], cc.indices()[j])));
		out.algebra.operations.emplace(to, std::move(q));
	}
	out.algebra.validate();
	out.map = LinearMap(cc.projection_matrix());
	return out;
}

namespace {

/// The quotient of q by its splitting ideal acting on q; the ideal is
/// closed under all of q's operations, including any perp pair.
RelativeSetup relative_setup(const AlgebraSpec& q)
{
	const IdealSpec ideal = splitting_ideal(q);
	Quotient quot = quotient_algebra(q, ideal, quadri_collapse_pairing());
	const std::size_t n = q.dimension;
	const auto& s = ideal.subspace;

	// The actions use x itself for x̄, so they must vanish on the ideal.
	ViolationReport bad;
	const std::pair<const char*, const char*> acts[] = {{"prec_l", ops::prec_vdash},
	                                                    {"succ_l", ops::succ_vdash},
	                                                    {"prec_r", ops::prec_dashv},
	                                                    {"succ_r", ops::succ_dashv}};
	for (const auto& [tag, name] : acts) {
		const bool left = tag[5] == 'l';
		std::size_t failures = 0;
		for (std::size_t b = 0; b < s.dimension(); ++b)
			for (std::size_t y = 0; y < n; ++y) {
				Vector ey = unit_vector(n, y);
				Vector res = left ? q.op(name).evaluate(s.basis()[b], ey) : q.op(name).evaluate(ey, s.basis()[b]);
				if (is_zero(res))
					continue;
				++failures;
				if (bad.violations.size() < default_report_limit)
					bad.violations.push_back({tag, {b, y}, std::move(res)});
			}
		bad.checked += s.dimension() * n;
		bad.violation_count += failures;
		bad.schemas.push_back({tag, failures});
	}
	if (!bad.passed())
		throw PreconditionError("ill-defined action", bad);

	ComplementCoordinates cc(s);
	const std::size_t m = cc.dimension();
	RelativeSetup out;
	out.representation = RepresentationSpec::zero(quot.algebra, n);
	for (std::size_t i = 0; i < m; ++i)
		for (std::size_t y = 0; y < n; ++y) {
			const std::size_t x = cc.indices()[i];
			out.representation.prec_l.set_product(i, y, q.op(ops::prec_vdash).product(x, y));
			out.representation.succ_l.set_product(i, y, q.op(ops::succ_vdash).product(x, y));
			out.representation.prec_r.set_product(y, i, q.op(ops::prec_dashv).product(y, x));
			out.representation.succ_r.set_product(y, i, q.op(ops::succ_dashv).product(y, x));
		}
	out.representation.validate();
	out.t = quot.map;
	return out;
}

} // namespace

RelativeSetup quadri_to_relative_setup(const AlgebraSpec& q)
{
	if (q.signature != Signature::quadri)
		throw Error("quadri_to_relative_setup needs a quadri algebra");
	return relative_setup(q);
}

AveragingEmbedding embed_averaging(const AlgebraSpec& q)
{
	RelativeSetup setup = quadri_to_relative_setup(q);
	const std::size_t n = q.dimension, m = setup.representation.base.dimension, total = m + n;
	AveragingEmbedding out;
	out.ambient = semidirect(setup.representation);

	Matrix t(total, total);
	for (std::size_t y = 0; y < n; ++y)
		for (std::size_t i = 0; i < m; ++i)
			t(i, m + y) = setup.t.matrix(i, y);
	out.t = LinearMap(std::move(t));

	Matrix inc(total, n);
	for (std::size_t x = 0; x < n; ++x)
		inc(m + x, x) = 1;
	out.inclusion = LinearMap(std::move(inc));
	return out;
}

HomomorphicSetup six_to_homomorphic_setup(const AlgebraSpec& s)
{
	if (s.signature != Signature::six)
		throw Error("six_to_homomorphic_setup needs a six algebra");
	AlgebraSpec target = perp_part(s);
	if (!check(target, "dendriform").passed())
		throw Error("target not dendriform");
	RelativeSetup rel = relative_setup(s);
	HomomorphicSetup out;
	out.action.base = rel.representation.base;
	out.action.target = std::move(target);
	out.action.prec_l = rel.representation.prec_l;
	out.action.succ_l = rel.representation.succ_l;
	out.action.prec_r = rel.representation.prec_r;
	out.action.succ_r = rel.representation.succ_r;
	out.action.validate();
	out.t = rel.t;
	return out;
}

} // namespace splitalg
