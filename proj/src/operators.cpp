#include "splitalg/operators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

#include "splitalg/constructions.hpp"
#include "splitalg/document.hpp"
#include "splitalg/parallel.hpp"

namespace splitalg {

namespace {

constexpr std::array<std::pair<OperatorKind, std::string_view>, 6> kind_names{{
    {OperatorKind::rota_baxter, "rota_baxter"},
    {OperatorKind::assoc_averaging, "assoc_averaging"},
    {OperatorKind::dend_averaging, "dend_averaging"},
    {OperatorKind::relative_averaging, "relative_averaging"},
    {OperatorKind::homomorphic_relative, "homomorphic_relative"},
    {OperatorKind::graph_subalgebra, "graph_subalgebra"},
}};

/// Evaluates residuals(i, j) -> one Vector per tag over all index pairs,
/// in parallel, and merges into a report ordered by tag, then pair.
template <class Residuals>
ViolationReport check_pairs(std::size_t rows, std::size_t cols, const std::vector<std::string>& tags,
                            Residuals&& residuals, std::size_t limit)
{
	struct Partial {
		std::vector<std::vector<Violation>> found;
		std::vector<std::size_t> counts;
	};
	const std::size_t workers = worker_count();
	std::vector<Partial> partial(workers, Partial{std::vector<std::vector<Violation>>(tags.size()),
	                                              std::vector<std::size_t>(tags.size(), 0)});
	parallel_chunks(rows * cols, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
		auto& p = partial[chunk];
		for (std::size_t g = begin; g < end; ++g) {
			std::size_t i = g / cols, j = g % cols;
			std::vector<Vector> res = residuals(i, j);
			for (std::size_t t = 0; t < tags.size(); ++t) {
				if (is_zero(res[t]))
					continue;
				++p.counts[t];
				if (p.found[t].size() < limit)
					p.found[t].push_back({tags[t], {i, j}, std::move(res[t])});
			}
		}
	});
	ViolationReport report;
	report.checked = rows * cols * tags.size();
	for (std::size_t t = 0; t < tags.size(); ++t) {
		std::size_t failures = 0;
		for (const auto& p : partial) {
			failures += p.counts[t];
			for (const auto& v : p.found[t])
				if (report.violations.size() < limit)
					report.violations.push_back(v);
		}
		report.violation_count += failures;
		report.schemas.push_back({tags[t], failures});
	}
	return report;
}

void require_square(const LinearMap& t, std::size_t n, const char* what)
{
	t.validate();
	if (t.source_dim != n || t.target_dim != n)
		throw DimensionError(std::string(what) + " must be an endomorphism of a " + std::to_string(n) +
		                     "-dimensional algebra, got " + std::to_string(t.target_dim) + "x" +
		                     std::to_string(t.source_dim));
}

void require_module_map(const LinearMap& t, std::size_t module_dim, std::size_t base_dim)
{
	t.validate();
	if (t.source_dim != module_dim || t.target_dim != base_dim)
		throw DimensionError("operator must map the " + std::to_string(module_dim) + "-dimensional module to the " +
		                     std::to_string(base_dim) + "-dimensional base, got " + std::to_string(t.target_dim) +
		                     "x" + std::to_string(t.source_dim));
}

std::vector<Vector> basis_images(const LinearMap& t)
{
	std::vector<Vector> images;
	for (std::size_t i = 0; i < t.source_dim; ++i)
		images.push_back(t.apply(unit_vector(t.source_dim, i)));
	return images;
}

ViolationReport relative_averaging_report(const RepresentationSpec& rep, const LinearMap& t,
                                          const std::vector<std::string>& extra_tags, const BilinearOp* target_prec,
                                          const BilinearOp* target_succ, std::size_t limit)
{
	rep.validate();
	require_module_map(t, rep.module_dim, rep.base.dimension);
	const auto& prec = rep.base.op(ops::prec);
	const auto& succ = rep.base.op(ops::succ);
	const auto images = basis_images(t);
	const std::size_t m = rep.module_dim;
	std::vector<std::string> tags{"prec/left", "prec/right", "succ/left", "succ/right"};
	tags.insert(tags.end(), extra_tags.begin(), extra_tags.end());
	return check_pairs(
	    m, m, tags,
	    [&](std::size_t u, std::size_t v) {
		    const Vector& tu = images[u];
		    const Vector& tv = images[v];
		    Vector eu = unit_vector(m, u), ev = unit_vector(m, v);
		    Vector p = prec.evaluate(tu, tv);
		    Vector s = succ.evaluate(tu, tv);
		    std::vector<Vector> res{p - t.apply(rep.prec_l.evaluate(tu, ev)), p - t.apply(rep.prec_r.evaluate(eu, tv)),
		                            s - t.apply(rep.succ_l.evaluate(tu, ev)), s - t.apply(rep.succ_r.evaluate(eu, tv))};
		    if (target_prec) {
			    res.push_back(t.apply(target_prec->product(u, v)) - p);
			    res.push_back(t.apply(target_succ->product(u, v)) - s);
		    }
		    return res;
	    },
	    limit);
}

} // namespace

std::string_view to_string(OperatorKind k)
{
	for (auto [kind, name] : kind_names)
		if (kind == k)
			return name;
	return "unknown";
}

std::optional<OperatorKind> operator_kind_from_string(std::string_view s)
{
	static constexpr std::array<std::pair<std::string_view, OperatorKind>, 6> cli{{
	    {"rota-baxter", OperatorKind::rota_baxter},
	    {"assoc-averaging", OperatorKind::assoc_averaging},
	    {"averaging", OperatorKind::dend_averaging},
	    {"relative-averaging", OperatorKind::relative_averaging},
	    {"homomorphic-relative", OperatorKind::homomorphic_relative},
	    {"graph", OperatorKind::graph_subalgebra},
	}};
	for (auto [name, kind] : cli)
		if (name == s)
			return kind;
	for (auto [kind, name] : kind_names)
		if (name == s)
			return kind;
	return std::nullopt;
}

nlohmann::json to_json(const OperatorVerdict& v)
{
	auto j = to_json(v.report);
	j["kind"] = std::string(to_string(v.kind));
	j["pass"] = v.pass();
	return j;
}

std::string render_text(const OperatorVerdict& v)
{
	return std::string(to_string(v.kind)) + " check\n" + render_text(v.report);
}

OperatorVerdict check_rota_baxter(const AlgebraSpec& a, const LinearMap& r, std::size_t limit)
{
	require_square(r, a.dimension, "Rota-Baxter operator");
	const auto& mul = a.op(ops::mul);
	const auto images = basis_images(r);
	const std::size_t n = a.dimension;
	auto report = check_pairs(
	    n, n, {"rota-baxter"},
	    [&](std::size_t i, std::size_t j) {
		    Vector inner = mul.evaluate(unit_vector(n, i), images[j]) + mul.evaluate(images[i], unit_vector(n, j));
		    return std::vector<Vector>{mul.evaluate(images[i], images[j]) - r.apply(inner)};
	    },
	    limit);
	return {OperatorKind::rota_baxter, std::move(report)};
}

OperatorVerdict check_assoc_averaging(const AlgebraSpec& a, const LinearMap& h, std::size_t limit)
{
	require_square(h, a.dimension, "averaging operator");
	const auto& mul = a.op(ops::mul);
	const auto images = basis_images(h);
	const std::size_t n = a.dimension;
	auto report = check_pairs(
	    n, n, {"mul(Ha,Hb)=H(mul(a,Hb))", "mul(Ha,Hb)=H(mul(Ha,b))"},
	    [&](std::size_t i, std::size_t j) {
		    Vector lhs = mul.evaluate(images[i], images[j]);
		    return std::vector<Vector>{lhs - h.apply(mul.evaluate(unit_vector(n, i), images[j])),
		                               lhs - h.apply(mul.evaluate(images[i], unit_vector(n, j)))};
	    },
	    limit);
	return {OperatorKind::assoc_averaging, std::move(report)};
}

OperatorVerdict check_dend_averaging(const AlgebraSpec& d, const LinearMap& t, std::size_t limit)
{
	require_square(t, d.dimension, "averaging operator");
	const auto& prec = d.op(ops::prec);
	const auto& succ = d.op(ops::succ);
	const auto images = basis_images(t);
	const std::size_t n = d.dimension;
	auto report = check_pairs(
	    n, n, {"prec/left", "prec/right", "succ/left", "succ/right"},
	    [&](std::size_t i, std::size_t j) {
		    Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
		    Vector p = prec.evaluate(images[i], images[j]);
		    Vector s = succ.evaluate(images[i], images[j]);
		    return std::vector<Vector>{p - t.apply(prec.evaluate(images[i], ej)), p - t.apply(prec.evaluate(ei, images[j])),
		                               s - t.apply(succ.evaluate(images[i], ej)), s - t.apply(succ.evaluate(ei, images[j]))};
	    },
	    limit);
	return {OperatorKind::dend_averaging, std::move(report)};
}

OperatorVerdict check_relative_averaging(const RepresentationSpec& rep, const LinearMap& t, std::size_t limit)
{
	return {OperatorKind::relative_averaging, relative_averaging_report(rep, t, {}, nullptr, nullptr, limit)};
}

OperatorVerdict graph_subalgebra_check(const RepresentationSpec& rep, const LinearMap& t, std::size_t limit)
{
	rep.validate();
	require_module_map(t, rep.module_dim, rep.base.dimension);
	const std::size_t n = rep.base.dimension;
	const std::size_t m = rep.module_dim;
	const AlgebraSpec hemi = hemisemidirect(rep);

	std::vector<Vector> generators;
	for (std::size_t u = 0; u < m; ++u) {
		Vector g = t.apply(unit_vector(m, u));
		g.resize(n + m, Rational(0));
		g[n + u] = 1;
		generators.push_back(std::move(g));
	}
	const SubspaceBasis graph = span(generators, n + m);

	const std::vector<std::string> names{ops::prec_vdash, ops::prec_dashv, ops::succ_vdash, ops::succ_dashv};
	auto report = check_pairs(
	    m, m, names,
	    [&](std::size_t u, std::size_t v) {
		    std::vector<Vector> res;
		    for (const auto& name : names)
			    res.push_back(reduce(graph, hemi.op(name).evaluate(generators[u], generators[v])));
		    return res;
	    },
	    limit);
	return {OperatorKind::graph_subalgebra, std::move(report)};
}

OperatorVerdict check_homomorphic_relative(const ActionSpec& act, const LinearMap& t, std::size_t limit)
{
	act.validate();
	return {OperatorKind::homomorphic_relative,
	        relative_averaging_report(act.representation(), t, {"hom/prec", "hom/succ"}, &act.target.op(ops::prec),
	                                  &act.target.op(ops::succ), limit)};
}

OperatorVerdict check_operator(const OperatorSubject& subject, OperatorKind kind, const LinearMap& t,
                               std::size_t limit)
{
	auto wrong = [&](const char* expected) {
		return Error(std::string(to_string(kind)) + " checks need " + expected);
	};
	switch (kind) {
	case OperatorKind::rota_baxter:
	case OperatorKind::assoc_averaging:
	case OperatorKind::dend_averaging: {
		const auto* a = std::get_if<AlgebraSpec>(&subject);
		if (!a)
			throw wrong("an algebra");
		if (kind == OperatorKind::rota_baxter)
			return check_rota_baxter(*a, t, limit);
		if (kind == OperatorKind::assoc_averaging)
			return check_assoc_averaging(*a, t, limit);
		return check_dend_averaging(*a, t, limit);
	}
	case OperatorKind::relative_averaging:
	case OperatorKind::graph_subalgebra: {
		RepresentationSpec rep;
		if (const auto* r = std::get_if<RepresentationSpec>(&subject))
			rep = *r;
		else if (const auto* act = std::get_if<ActionSpec>(&subject))
			rep = act->representation();
		else
			rep = RepresentationSpec::adjoint(std::get<AlgebraSpec>(subject));
		return kind == OperatorKind::relative_averaging ? check_relative_averaging(rep, t, limit)
		                                                : graph_subalgebra_check(rep, t, limit);
	}
	case OperatorKind::homomorphic_relative: {
		if (const auto* act = std::get_if<ActionSpec>(&subject))
			return check_homomorphic_relative(*act, t, limit);
		if (const auto* a = std::get_if<AlgebraSpec>(&subject))
			return check_homomorphic_relative(ActionSpec::self(*a), t, limit);
		throw wrong("an action or a dendriform algebra");
	}
	}
	throw Error("unknown operator kind");
}

std::pair<std::size_t, std::size_t> operator_shape(const OperatorSubject& subject, OperatorKind kind)
{
	if (const auto* a = std::get_if<AlgebraSpec>(&subject))
		return {a->dimension, a->dimension};
	if (kind == OperatorKind::rota_baxter || kind == OperatorKind::assoc_averaging ||
	    kind == OperatorKind::dend_averaging)
		throw Error(std::string(to_string(kind)) + " checks need an algebra");
	if (const auto* r = std::get_if<RepresentationSpec>(&subject)) {
		if (kind == OperatorKind::homomorphic_relative)
			throw Error("homomorphic relative averaging checks need an action");
		return {r->base.dimension, r->module_dim};
	}
	const auto& act = std::get<ActionSpec>(subject);
	return {act.base.dimension, act.target.dimension};
}

std::vector<LinearMap> search_operators(const OperatorSubject& subject, OperatorKind kind, std::vector<Rational> grid,
                                        std::size_t cap)
{
	std::sort(grid.begin(), grid.end());
	grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
	if (grid.empty())
		throw Error("operator search needs a non-empty grid");
	auto [rows, cols] = operator_shape(subject, kind);
	const std::size_t entries = rows * cols;

	std::size_t count = 1;
	for (std::size_t e = 0; e < entries; ++e) {
		if (count > cap / grid.size()) {
			count = std::numeric_limits<std::size_t>::max();
			break;
		}
		count *= grid.size();
	}
	if (count > cap)
		throw CapExceeded("search space of " + std::to_string(grid.size()) + "^" + std::to_string(entries) +
		                  " candidates exceeds the cap of " + std::to_string(cap) +
		                  "; shrink the grid or the dimensions, or raise --cap");

	auto candidate = [&](std::size_t index) {
		Matrix m(rows, cols);
		for (std::size_t e = entries; e-- > 0;) {
			m(e / cols, e % cols) = grid[index % grid.size()];
			index /= grid.size();
		}
		LinearMap t(std::move(m));
		return t;
	};

	const std::size_t workers = worker_count();
	std::vector<std::vector<LinearMap>> found(workers);
	parallel_chunks(count, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
		for (std::size_t c = begin; c < end; ++c) {
			LinearMap t = candidate(c);
			if (check_operator(subject, kind, t, 1).pass())
				found[chunk].push_back(std::move(t));
		}
	});
	std::vector<LinearMap> out;
	for (auto& f : found)
		for (auto& t : f)
			out.push_back(std::move(t));
	return out;
}

} // namespace splitalg
