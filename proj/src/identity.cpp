#include "splitalg/identity.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "splitalg/parallel.hpp"

namespace splitalg {

Term Term::variable(int slot)
{
	Term t;
	t.slot = slot;
	return t;
}

Term Term::apply(std::string op, Term left, Term right)
{
	Term t;
	t.op = std::move(op);
	t.args.push_back(std::move(left));
	t.args.push_back(std::move(right));
	return t;
}

int Term::depth() const { return is_variable() ? 0 : 1 + std::max(args[0].depth(), args[1].depth()); }

std::string Term::to_string() const
{
	static const char* names[] = {"x", "y", "z"};
	if (is_variable())
		return names[slot];
	auto side = [](const Term& t) { return t.is_variable() ? t.to_string() : "(" + t.to_string() + ")"; };
	return side(args[0]) + " " + op + " " + side(args[1]);
}

namespace dsl {

Expr var(int slot) { return {Monomial{Rational(1), Term::variable(slot)}}; }

Expr apply(const std::string& op, const Expr& left, const Expr& right)
{
	Expr out;
	for (const auto& l : left)
		for (const auto& r : right)
			out.push_back(Monomial{l.coeff * r.coeff, Term::apply(op, l.term, r.term)});
	return out;
}

Expr operator+(Expr a, const Expr& b)
{
	a.insert(a.end(), b.begin(), b.end());
	return a;
}

} // namespace dsl

namespace {

std::string expr_to_string(const Expr& e)
{
	std::string s;
	for (std::size_t i = 0; i < e.size(); ++i) {
		if (i)
			s += " + ";
		if (e[i].coeff != 1)
			s += splitalg::to_string(e[i].coeff) + "*";
		s += e[i].term.to_string();
	}
	return s;
}

using dsl::operator+;

struct Chain {
	std::string id;
	std::vector<Expr> links;
	std::array<Sort, 3> sorts{Sort::A, Sort::A, Sort::A};
};

void expand(const Chain& c, bool paranoid, std::vector<IdentitySchema>& out)
{
	const auto k = c.links.size();
	if (k == 2) {
		out.push_back({c.id, c.links[0], c.links[1], c.sorts});
		return;
	}
	for (std::size_t i = 0; i + 1 < k; ++i)
		out.push_back({c.id + static_cast<char>('a' + i), c.links[i], c.links[i + 1], c.sorts});
	if (paranoid)
		for (std::size_t i = 0; i < k; ++i)
			for (std::size_t j = i + 2; j < k; ++j)
				out.push_back({c.id + ":" + std::to_string(i) + "=" + std::to_string(j), c.links[i], c.links[j],
				               c.sorts});
}

/// Builds a binary operator over expressions for one op name.
struct Op {
	std::string name;
	Expr operator()(const Expr& a, const Expr& b) const { return dsl::apply(name, a, b); }
};

const Expr x = dsl::var(0);
const Expr y = dsl::var(1);
const Expr z = dsl::var(2);

std::vector<Chain> associative_chains()
{
	Op m{ops::mul};
	return {{"assoc", {m(m(x, y), z), m(x, m(y, z))}}};
}

std::vector<Chain> dendriform_chains(const Op& p, const Op& s)
{
	return {
	    {"2.1", {p(p(x, y), z), p(x, p(y, z) + s(y, z))}},
	    {"2.2", {p(s(x, y), z), s(x, p(y, z))}},
	    {"2.3", {s(x, s(y, z)), s(p(x, y) + s(x, y), z)}},
	};
}

std::vector<Chain> diassociative_chains(const std::string& prefix)
{
	Op l{ops::dashv}, r{ops::vdash};
	return {
	    {prefix + "1", {l(l(x, y), z), l(x, r(y, z))}},
	    {prefix + "2", {l(l(x, y), z), l(x, l(y, z))}},
	    {prefix + "3", {l(r(x, y), z), r(x, l(y, z))}},
	    {prefix + "4", {r(l(x, y), z), r(x, r(y, z))}},
	    {prefix + "5", {r(r(x, y), z), r(x, r(y, z))}},
	};
}

std::vector<Chain> triassociative_chains()
{
	Op l{ops::dashv}, r{ops::vdash}, t{ops::perp};
	auto chains = diassociative_chains("diass.");
	chains.push_back({"perp-assoc", {t(t(x, y), z), t(x, t(y, z))}});
	chains.push_back({"triass.1", {l(l(x, y), z), l(x, t(y, z))}});
	chains.push_back({"triass.2", {l(t(x, y), z), t(x, l(y, z))}});
	chains.push_back({"triass.3", {t(l(x, y), z), t(x, r(y, z))}});
	chains.push_back({"triass.4", {t(r(x, y), z), r(x, t(y, z))}});
	chains.push_back({"triass.5", {r(t(x, y), z), r(x, r(y, z))}});
	return chains;
}

std::vector<Chain> quadri_chains()
{
	Op pv{ops::prec_vdash}, pd{ops::prec_dashv}, sv{ops::succ_vdash}, sd{ops::succ_dashv};
	return {
	    {"2.13", {pv(pv(x, y), z), pv(pd(x, y), z), pv(x, pv(y, z) + sv(y, z))}},
	    {"2.14", {pv(sv(x, y), z), pv(sd(x, y), z), sv(x, pv(y, z))}},
	    {"2.15",
	     {sv(x, sv(y, z)), sv(pv(x, y) + sv(x, y), z), sv(pd(x, y) + sd(x, y), z), sv(pv(x, y) + sd(x, y), z),
	      sv(pd(x, y) + sv(x, y), z)}},
	    {"2.16", {pd(pv(x, y), z), pv(x, pd(y, z) + sd(y, z))}},
	    {"2.17", {pd(sv(x, y), z), sv(x, pd(y, z))}},
	    {"2.18", {sv(x, sd(y, z)), sd(pv(x, y) + sv(x, y), z)}},
	    {"2.19",
	     {pd(pd(x, y), z), pd(x, pv(y, z) + sv(y, z)), pd(x, pd(y, z) + sd(y, z)), pd(x, pv(y, z) + sd(y, z)),
	      pd(x, pd(y, z) + sv(y, z))}},
	    {"2.20", {pd(sd(x, y), z), sd(x, pv(y, z)), sd(x, pd(y, z))}},
	    {"2.21", {sd(x, sv(y, z)), sd(x, sd(y, z)), sd(pd(x, y) + sd(x, y), z)}},
	};
}

std::vector<Chain> six_chains()
{
	Op pv{ops::prec_vdash}, pd{ops::prec_dashv}, sv{ops::succ_vdash}, sd{ops::succ_dashv};
	Op pt{ops::prec_perp}, st{ops::succ_perp};
	return {
	    {"3.10a", {pt(pv(x, y), z), pv(x, pt(y, z) + st(y, z))}},
	    {"3.10b", {pt(sv(x, y), z), sv(x, pt(y, z))}},
	    {"3.10c", {sv(x, st(y, z)), st(pv(x, y) + sv(x, y), z)}},
	    {"3.10d", {pt(pd(x, y), z), pt(x, pv(y, z) + sv(y, z))}},
	    {"3.10e", {pt(sd(x, y), z), st(x, pv(y, z))}},
	    {"3.10f", {st(x, sv(y, z)), st(pd(x, y) + sd(x, y), z)}},
	    {"3.10g", {pd(pt(x, y), z), pt(x, pd(y, z) + sd(y, z))}},
	    {"3.10h", {pd(st(x, y), z), st(x, pd(y, z))}},
	    {"3.10i", {st(x, sd(y, z)), sd(pt(x, y) + st(x, y), z)}},
	    {"3.11.1", {pv(pt(x, y), z), pv(pv(x, y), z), pv(pd(x, y), z)}},
	    {"3.11.2", {pv(st(x, y), z), pv(sv(x, y), z), pv(sd(x, y), z)}},
	    {"3.11.3", {sv(pt(x, y), z), sv(pv(x, y), z), sv(pd(x, y), z)}},
	    {"3.11.4", {sv(st(x, y), z), sv(sv(x, y), z), sv(sd(x, y), z)}},
	    {"3.12.1", {pd(x, pt(y, z)), pd(x, pv(y, z)), pd(x, pd(y, z))}},
	    {"3.12.2", {sd(x, pt(y, z)), sd(x, pv(y, z)), sd(x, pd(y, z))}},
	    {"3.12.3", {pd(x, st(y, z)), pd(x, sv(y, z)), pd(x, sd(y, z))}},
	    {"3.12.4", {sd(x, st(y, z)), sd(x, sv(y, z)), sd(x, sd(y, z))}},
	};
}

std::vector<Chain> representation_chains()
{
	Op p{ops::prec}, s{ops::succ};
	Op pl{ops::prec_l}, sl{ops::succ_l}, pr{ops::prec_r}, sr{ops::succ_r};
	// Variables are named by slot; the module variable moves through the slots.
	const Expr& u2 = z;
	const Expr& u1 = y;
	const Expr& u0 = x;
	constexpr std::array<Sort, 3> aav{Sort::A, Sort::A, Sort::V};
	constexpr std::array<Sort, 3> ava{Sort::A, Sort::V, Sort::A};
	constexpr std::array<Sort, 3> vaa{Sort::V, Sort::A, Sort::A};
	return {
	    {"2.4", {pl(p(x, y), u2), pl(x, pl(y, u2) + sl(y, u2))}, aav},
	    {"2.5", {pl(s(x, y), u2), sl(x, pl(y, u2))}, aav},
	    {"2.6", {sl(x, sl(y, u2)), sl(p(x, y) + s(x, y), u2)}, aav},
	    {"2.7", {pr(pl(x, u1), z), pl(x, pr(u1, z) + sr(u1, z))}, ava},
	    {"2.8", {pr(sl(x, u1), z), sl(x, pr(u1, z))}, ava},
	    {"2.9", {sl(x, sr(u1, z)), sr(pl(x, u1) + sl(x, u1), z)}, ava},
	    {"2.10", {pr(pr(u0, y), z), pr(u0, p(y, z) + s(y, z))}, vaa},
	    {"2.11", {pr(sr(u0, y), z), sr(u0, p(y, z))}, vaa},
	    {"2.12", {sr(u0, s(y, z)), sr(pr(u0, y) + sr(u0, y), z)}, vaa},
	};
}

std::vector<Chain> action_chains()
{
	Op pl{ops::prec_l}, sl{ops::succ_l}, pr{ops::prec_r}, sr{ops::succ_r};
	Op pt{target_prec}, st{target_succ};
	constexpr std::array<Sort, 3> avv{Sort::A, Sort::V, Sort::V};
	constexpr std::array<Sort, 3> vav{Sort::V, Sort::A, Sort::V};
	constexpr std::array<Sort, 3> vva{Sort::V, Sort::V, Sort::A};
	// x,y,z stand for whichever of D or D' their slot sort says.
	return {
	    {"3.1", {pt(pl(x, y), z), pl(x, pt(y, z) + st(y, z))}, avv},
	    {"3.2", {pt(sl(x, y), z), sl(x, pt(y, z))}, avv},
	    {"3.3", {sl(x, st(y, z)), st(pl(x, y) + sl(x, y), z)}, avv},
	    {"3.4", {pt(pr(x, y), z), pt(x, pl(y, z) + sl(y, z))}, vav},
	    {"3.5", {pt(sr(x, y), z), st(x, pl(y, z))}, vav},
	    {"3.6", {st(x, sl(y, z)), st(pr(x, y) + sr(x, y), z)}, vav},
	    {"3.7", {pr(pt(x, y), z), pt(x, pr(y, z) + sr(y, z))}, vva},
	    {"3.8", {pr(st(x, y), z), st(x, pr(y, z))}, vva},
	    {"3.9", {st(x, sr(y, z)), sr(pt(x, y) + st(x, y), z)}, vva},
	};
}

std::vector<Chain> chains_for(const std::string& name)
{
	if (name == "associative")
		return associative_chains();
	if (name == "dendriform")
		return dendriform_chains(Op{ops::prec}, Op{ops::succ});
	if (name == "diassociative")
		return diassociative_chains("diass.");
	if (name == "triassociative")
		return triassociative_chains();
	if (name == "quadri")
		return quadri_chains();
	if (name == "six")
		return six_chains();
	if (name == "dend-representation")
		return representation_chains();
	if (name == "dend-action")
		return action_chains();
	throw Error("unknown catalog '" + name + "'");
}

void collect_ops(const Term& t, std::vector<std::string>& out)
{
	if (t.is_variable())
		return;
	out.push_back(t.op);
	collect_ops(t.args[0], out);
	collect_ops(t.args[1], out);
}

} // namespace

std::string IdentitySchema::to_string() const { return expr_to_string(lhs) + " = " + expr_to_string(rhs); }

const std::vector<std::string>& catalog_names()
{
	static const std::vector<std::string> names{"associative", "dendriform",         "diassociative",
	                                            "triassociative", "quadri",          "six",
	                                            "dend-representation", "dend-action"};
	return names;
}

std::vector<IdentitySchema> catalog(const std::string& name, bool paranoid)
{
	std::vector<IdentitySchema> out;
	for (const auto& c : chains_for(name))
		expand(c, paranoid, out);
	return out;
}

OperationTable OperationTable::of(const AlgebraSpec& a)
{
	OperationTable t(a.dimension, 0);
	for (const auto& [name, op] : a.operations)
		t.add(name, op, Sort::A, Sort::A, Sort::A);
	return t;
}

OperationTable OperationTable::of(const RepresentationSpec& rep)
{
	rep.validate();
	OperationTable t(rep.base.dimension, rep.module_dim);
	for (const auto& [name, op] : rep.base.operations)
		t.add(name, op, Sort::A, Sort::A, Sort::A);
	t.add(ops::prec_l, rep.prec_l, Sort::A, Sort::V, Sort::V);
	t.add(ops::succ_l, rep.succ_l, Sort::A, Sort::V, Sort::V);
	t.add(ops::prec_r, rep.prec_r, Sort::V, Sort::A, Sort::V);
	t.add(ops::succ_r, rep.succ_r, Sort::V, Sort::A, Sort::V);
	return t;
}

OperationTable OperationTable::of(const ActionSpec& act)
{
	act.validate();
	OperationTable t(act.base.dimension, act.target.dimension);
	for (const auto& [name, op] : act.base.operations)
		t.add(name, op, Sort::A, Sort::A, Sort::A);
	t.add(ops::prec_l, act.prec_l, Sort::A, Sort::V, Sort::V);
	t.add(ops::succ_l, act.succ_l, Sort::A, Sort::V, Sort::V);
	t.add(ops::prec_r, act.prec_r, Sort::V, Sort::A, Sort::V);
	t.add(ops::succ_r, act.succ_r, Sort::V, Sort::A, Sort::V);
	t.add(target_prec, act.target.op(ops::prec), Sort::V, Sort::V, Sort::V);
	t.add(target_succ, act.target.op(ops::succ), Sort::V, Sort::V, Sort::V);
	return t;
}

void OperationTable::add(const std::string& name, const BilinearOp& op, Sort left, Sort right, Sort out)
{
	if (op.left_dim() != dim(left) || op.right_dim() != dim(right) || op.out_dim() != dim(out))
		throw DimensionError("operation '" + name + "' does not match the dimensions of its sorts");
	ops_[name] = TypedOperation{&op, left, right, out};
}

const TypedOperation& OperationTable::get(const std::string& name) const
{
	auto it = ops_.find(name);
	if (it == ops_.end())
		throw Error("missing operation '" + name + "'");
	return it->second;
}

Sort sort_of(const Term& t, const std::array<Sort, 3>& slot_sorts, const OperationTable& table)
{
	if (t.is_variable())
		return slot_sorts.at(static_cast<std::size_t>(t.slot));
	const auto& op = table.get(t.op);
	if (sort_of(t.args[0], slot_sorts, table) != op.left || sort_of(t.args[1], slot_sorts, table) != op.right)
		throw Error("sort mismatch: operation '" + t.op + "' applied to " + t.to_string());
	return op.out;
}

Vector evaluate(const Term& t, const std::array<Vector, 3>& args, const OperationTable& table)
{
	if (t.is_variable())
		return args.at(static_cast<std::size_t>(t.slot));
	const auto& op = table.get(t.op);
	return op.op->evaluate(evaluate(t.args[0], args, table), evaluate(t.args[1], args, table));
}

Vector evaluate(const Expr& e, const std::array<Vector, 3>& args, const OperationTable& table)
{
	Vector out;
	for (const auto& m : e) {
		Vector v = evaluate(m.term, args, table);
		if (out.empty())
			out = zero_vector(v.size());
		axpy(out, m.coeff, v);
	}
	return out;
}

ViolationReport check(const OperationTable& table, const std::vector<IdentitySchema>& schemas,
                      const CheckOptions& options)
{
	// Validate every schema up front: sorts, depth, and that both sides agree.
	std::vector<std::size_t> offsets{0};
	std::vector<std::array<std::size_t, 3>> extents;
	std::vector<std::size_t> out_dims;
	for (const auto& s : schemas) {
		std::optional<Sort> out;
		for (const Expr* side : {&s.lhs, &s.rhs})
			for (const auto& m : *side) {
				if (m.term.depth() > 2)
					throw Error("identity " + s.id + " has depth above two");
				Sort so = sort_of(m.term, s.slot_sorts, table);
				if (out && *out != so)
					throw Error("identity " + s.id + " mixes output sorts");
				out = so;
			}
		if (!out)
			throw Error("identity " + s.id + " is empty");
		extents.push_back({table.dim(s.slot_sorts[0]), table.dim(s.slot_sorts[1]), table.dim(s.slot_sorts[2])});
		out_dims.push_back(table.dim(*out));
		offsets.push_back(offsets.back() + extents.back()[0] * extents.back()[1] * extents.back()[2]);
	}

	const std::size_t total = offsets.back();
	const std::size_t workers = worker_count();
	std::vector<ViolationReport> partial(workers);
	std::vector<std::vector<std::size_t>> tallies(workers, std::vector<std::size_t>(schemas.size(), 0));

	parallel_chunks(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
		auto& report = partial[chunk];
		auto& tally = tallies[chunk];
		std::size_t s = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), begin) -
		                                         offsets.begin()) -
		                1;
		for (std::size_t g = begin; g < end; ++g) {
			while (g >= offsets[s + 1])
				++s;
			const auto& ext = extents[s];
			std::size_t local = g - offsets[s];
			std::size_t k = local % ext[2];
			std::size_t j = (local / ext[2]) % ext[1];
			std::size_t i = local / (ext[2] * ext[1]);
			std::array<Vector, 3> args{unit_vector(ext[0], i), unit_vector(ext[1], j), unit_vector(ext[2], k)};
			Vector lhs = evaluate(schemas[s].lhs, args, table);
			Vector rhs = evaluate(schemas[s].rhs, args, table);
			if (lhs.empty())
				lhs = zero_vector(out_dims[s]);
			if (rhs.empty())
				rhs = zero_vector(out_dims[s]);
			Vector residual = lhs - rhs;
			if (!is_zero(residual)) {
				++tally[s];
				++report.violation_count;
				if (report.violations.size() < options.limit)
					report.violations.push_back({schemas[s].id, {i, j, k}, std::move(residual)});
			}
		}
		report.checked = end - begin;
	});

	ViolationReport merged;
	for (const auto& p : partial)
		merged.absorb(p, options.limit);
	for (std::size_t s = 0; s < schemas.size(); ++s) {
		std::size_t failures = 0;
		for (const auto& t : tallies)
			failures += t[s];
		merged.schemas.push_back({schemas[s].id, failures});
	}
	return merged;
}

ViolationReport check(const AlgebraSpec& a, const std::string& catalog_name, const CheckOptions& options)
{
	a.validate();
	return check(OperationTable::of(a), catalog(catalog_name, options.paranoid), options);
}

ViolationReport check(const RepresentationSpec& rep, const std::string& catalog_name, const CheckOptions& options)
{
	return check(OperationTable::of(rep), catalog(catalog_name, options.paranoid), options);
}

ViolationReport check(const ActionSpec& act, const std::string& catalog_name, const CheckOptions& options)
{
	return check(OperationTable::of(act), catalog(catalog_name, options.paranoid), options);
}

OpPairing identity_pairing(Signature s)
{
	OpPairing p;
	for (const auto& name : canonical_operations(s))
		p[name] = name;
	return p;
}

OpPairing quadri_collapse_pairing()
{
	return {{ops::prec_vdash, ops::prec},
	        {ops::prec_dashv, ops::prec},
	        {ops::succ_vdash, ops::succ},
	        {ops::succ_dashv, ops::succ}};
}

ViolationReport check_morphism(const LinearMap& f, const AlgebraSpec& source, const AlgebraSpec& target,
                               const OpPairing& pairing, std::size_t limit)
{
	f.validate();
	if (f.source_dim != source.dimension || f.target_dim != target.dimension)
		throw DimensionError("morphism dimensions do not match source and target algebras");
	for (const auto& name : canonical_operations(source.signature))
		if (!pairing.count(name))
			throw Error("pairing does not cover source operation '" + name + "'");
	ViolationReport report;
	const std::size_t n = source.dimension;
	std::vector<Vector> images;
	for (std::size_t i = 0; i < n; ++i)
		images.push_back(f.apply(unit_vector(n, i)));
	for (const auto& [from, to] : pairing) {
		const BilinearOp& src = source.op(from);
		const BilinearOp& dst = target.op(to);
		std::string id = from + "->" + to;
		std::size_t failures = 0;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				Vector residual = f.apply(src.product(i, j)) - dst.evaluate(images[i], images[j]);
				if (!is_zero(residual)) {
					++failures;
					++report.violation_count;
					if (report.violations.size() < limit)
						report.violations.push_back({id, {i, j}, std::move(residual)});
				}
			}
		report.checked += n * n;
		report.schemas.push_back({id, failures});
	}
	return report;
}

} // namespace splitalg
