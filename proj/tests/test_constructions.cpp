#include <gtest/gtest.h>

#include "splitalg/constructions.hpp"
#include "splitalg/identity.hpp"
#include "splitalg/operators.hpp"
#include "splitalg/samples.hpp"
#include "support.hpp"

using namespace splitalg;

namespace {

AlgebraSpec dual_numbers()
{
	// basis 1, x with x^2 = 0
	auto a = AlgebraSpec::zero(2, Signature::associative);
	auto& mu = a.op(ops::mul);
	mu(0, 0, 0) = 1;
	mu(0, 1, 1) = 1;
	mu(1, 0, 1) = 1;
	return a;
}

/// Products with a V-side input have a zero D-block.
void expect_block_triangular(const AlgebraSpec& a, std::size_t n)
{
	for (const auto& [name, op] : a.operations)
		for (std::size_t i = 0; i < a.dimension; ++i)
			for (std::size_t j = 0; j < a.dimension; ++j) {
				if (i < n && j < n)
					continue;
				Vector p = op.product(i, j);
				for (std::size_t k = 0; k < n; ++k)
					EXPECT_EQ(p[k], 0) << name << " " << i << "," << j;
			}
}

std::vector<AlgebraSpec> dendriform_fixtures()
{
	return {samples::truncated_dendriform(), samples::one_dim_dendriform(1, 0), samples::one_dim_dendriform(0, 2),
	        AlgebraSpec::zero(3, Signature::dendriform)};
}

} // namespace

TEST(Semidirect, ZeroInputs)
{
	auto zero = AlgebraSpec::zero(2, Signature::dendriform);
	auto s = semidirect(RepresentationSpec::zero(zero, 3));
	EXPECT_EQ(s, AlgebraSpec::zero(5, Signature::dendriform));
}

TEST(Semidirect, AdjointOfOneDimensional)
{
	auto s = semidirect(RepresentationSpec::adjoint(samples::one_dim_dendriform(1, 0)));
	EXPECT_EQ(s.dimension, 2u);
	EXPECT_TRUE(check(s, "dendriform").passed());
	EXPECT_TRUE(support::dendriform_oracle(s));
}

TEST(Semidirect, TruncatedAdjoint)
{
	auto rep = RepresentationSpec::adjoint(samples::truncated_dendriform());
	ASSERT_TRUE(check(rep, "dend-representation").passed());
	auto s = semidirect(rep);
	EXPECT_EQ(s.dimension, 8u);
	EXPECT_TRUE(check(s, "dendriform").passed());
	EXPECT_TRUE(support::dendriform_oracle(s));
	expect_block_triangular(s, 4);
	// (x, 0) succ (0, v) = (0, x succ_l v) and (0, u) succ (y, 0) = (0, u succ_r y)
	for (std::size_t i = 0; i < 4; ++i)
		for (std::size_t u = 0; u < 4; ++u) {
			Vector left = rep.succ_l.product(i, u), right = rep.succ_r.product(u, i);
			left.insert(left.begin(), 4, Rational(0));
			right.insert(right.begin(), 4, Rational(0));
			EXPECT_EQ(s.op(ops::succ).product(i, 4 + u), left);
			EXPECT_EQ(s.op(ops::succ).product(4 + u, i), right);
		}
}

TEST(Hemisemidirect, ZeroRepresentation)
{
	auto zero = AlgebraSpec::zero(1, Signature::dendriform);
	EXPECT_EQ(hemisemidirect(RepresentationSpec::zero(zero, 2)), AlgebraSpec::zero(3, Signature::quadri));
}

TEST(Hemisemidirect, TruncatedAdjoint)
{
	auto h = hemisemidirect(RepresentationSpec::adjoint(samples::truncated_dendriform()));
	auto r = check(h, "quadri");
	EXPECT_TRUE(r.passed());
	EXPECT_EQ(r.checked, 19u * 512u);
	expect_block_triangular(h, 4);
	EXPECT_TRUE(check(sum_collapse_quadri(h), "diassociative").passed());
}

TEST(ActionSemidirect, TrivialAction)
{
	auto d = samples::truncated_dendriform();
	ActionSpec act;
	act.base = d;
	act.target = AlgebraSpec::zero(2, Signature::dendriform);
	act.prec_l = act.succ_l = BilinearOp(4, 2, 2);
	act.prec_r = act.succ_r = BilinearOp(2, 4, 2);
	auto s = action_semidirect(act);
	EXPECT_EQ(s.dimension, 6u);
	EXPECT_TRUE(check(s, "dendriform").passed());
	for (std::size_t i = 0; i < 4; ++i)
		for (std::size_t j = 0; j < 4; ++j) {
			Vector p = s.op(ops::prec).product(i, j);
			EXPECT_EQ(Vector(p.begin(), p.begin() + 4), d.op(ops::prec).product(i, j));
		}
}

TEST(ActionSemidirect, ZeroBaseEmbedsTarget)
{
	auto t = samples::truncated_dendriform();
	ActionSpec act;
	act.base = AlgebraSpec::zero(0, Signature::dendriform);
	act.target = t;
	act.prec_l = act.succ_l = BilinearOp(0, 4, 4);
	act.prec_r = act.succ_r = BilinearOp(4, 0, 4);
	auto s = action_semidirect(act);
	EXPECT_EQ(s.operations, t.operations);
}

TEST(ActionSemidirect, DualExtension)
{
	auto s = action_semidirect(dual_extension(samples::truncated_dendriform()).action);
	EXPECT_EQ(s.dimension, 12u);
	EXPECT_TRUE(check(s, "dendriform").passed());
}

TEST(SumCollapse, Zero)
{
	EXPECT_EQ(sum_collapse_quadri(AlgebraSpec::zero(2, Signature::quadri)), AlgebraSpec::zero(2, Signature::diassociative));
	EXPECT_EQ(sum_collapse_six(AlgebraSpec::zero(2, Signature::six)), AlgebraSpec::zero(2, Signature::triassociative));
}

TEST(SumCollapse, DegenerateSixHasEqualOps)
{
	auto d = samples::truncated_dendriform();
	auto t = sum_collapse_six(promote_to_six(d));
	EXPECT_EQ(t.op(ops::perp), t.op(ops::vdash));
	EXPECT_EQ(t.op(ops::dashv), t.op(ops::vdash));
	EXPECT_EQ(t.op(ops::perp), d.op(ops::prec) + d.op(ops::succ));
	EXPECT_TRUE(check(t, "triassociative").passed());
}

TEST(Aguiar, ZeroOperator)
{
	auto d = aguiar_dendriform(samples::truncated_polynomials(4), LinearMap::zero(4, 4));
	EXPECT_EQ(d, AlgebraSpec::zero(4, Signature::dendriform));
}

TEST(Aguiar, Integration)
{
	auto d = aguiar_dendriform(support::poly_oracle(), support::integration_oracle());
	EXPECT_EQ(d.operations, support::ag1_dendriform_oracle().operations);
	EXPECT_TRUE(check(d, "dendriform").passed());
}

TEST(Aguiar, RejectsNonRotaBaxter)
{
	LinearMap swap(Matrix::from_rows({{0, 1}, {1, 0}}));
	try {
		aguiar_dendriform(dual_numbers(), swap);
		FAIL() << "expected a precondition error";
	} catch (const PreconditionError& e) {
		EXPECT_FALSE(e.report().passed());
		EXPECT_EQ(e.report().violations.front().witness.size(), 2u);
	}
}

TEST(AguiarDiass, IdentityZeroAndScalar)
{
	auto a = samples::truncated_polynomials(4);
	auto id = aguiar_diassociative(a, LinearMap::identity(4));
	EXPECT_EQ(id.op(ops::dashv), a.op(ops::mul));
	EXPECT_EQ(id.op(ops::vdash), a.op(ops::mul));
	EXPECT_EQ(aguiar_diassociative(a, LinearMap::zero(4, 4)), AlgebraSpec::zero(4, Signature::diassociative));
	EXPECT_TRUE(check(aguiar_diassociative(a, LinearMap::scalar(4, 2)), "diassociative").passed());
	LinearMap swap(Matrix::from_rows({{0, 1}, {1, 0}}));
	EXPECT_THROW(aguiar_diassociative(dual_numbers(), swap), PreconditionError);
}

TEST(InducedQuadri, ZeroMap)
{
	auto rep = RepresentationSpec::adjoint(samples::truncated_dendriform());
	EXPECT_EQ(induced_quadri(rep, LinearMap::zero(4, 4)), AlgebraSpec::zero(4, Signature::quadri));
}

TEST(InducedQuadri, ScalarOnAdjoint)
{
	auto d = samples::truncated_dendriform();
	for (int k = -2; k <= 2; ++k) {
		auto q = averaging_induced_quadri(d, LinearMap::scalar(4, k));
		EXPECT_TRUE(check(q, "quadri").passed()) << k;
		EXPECT_TRUE(check(sum_collapse_quadri(q), "diassociative").passed()) << k;
	}
}

TEST(InducedQuadri, CollapseCoherence)
{
	// T(u vdash v) = Tu * Tv = T(u dashv v), * = prec + succ in the base.
	auto d = samples::truncated_dendriform();
	auto rep = RepresentationSpec::adjoint(d);
	std::mt19937 rng(61);
	int tried = 0;
	for (int trial = 0; trial < 200 && tried < 10; ++trial) {
		LinearMap t(support::random_matrix(rng, 4, 4, {0, 0, 0, 0, 1, -1}));
		if (!check_relative_averaging(rep, t).pass())
			continue;
		++tried;
		auto diass = sum_collapse_quadri(induced_quadri(rep, t));
		auto star = d.op(ops::prec) + d.op(ops::succ);
		for (std::size_t u = 0; u < 4; ++u)
			for (std::size_t v = 0; v < 4; ++v) {
				Vector rhs = star.evaluate(t.apply(unit_vector(4, u)), t.apply(unit_vector(4, v)));
				EXPECT_EQ(t.apply(diass.op(ops::vdash).product(u, v)), rhs);
				EXPECT_EQ(t.apply(diass.op(ops::dashv).product(u, v)), rhs);
			}
	}
	EXPECT_GT(tried, 1);
}

TEST(InducedQuadri, RepresentationMorphism)
{
	// The projection of the dual extension intertwines the actions, so it is
	// relative averaging for the representation part.
	auto ext = dual_extension(samples::truncated_dendriform());
	auto rep = ext.action.representation();
	auto q = induced_quadri(rep, ext.projection);
	EXPECT_EQ(q.dimension, 8u);
	EXPECT_TRUE(check(q, "quadri").passed());
	EXPECT_TRUE(check_morphism(ext.projection, q, ext.action.base, quadri_collapse_pairing()).passed());
}

TEST(InducedQuadri, RejectsNonAveraging)
{
	auto rep = RepresentationSpec::adjoint(samples::truncated_dendriform());
	LinearMap swap(Matrix::from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
	EXPECT_THROW(induced_quadri(rep, swap), PreconditionError);
}

TEST(InducedSix, IdentityOnSelfAction)
{
	auto d = samples::truncated_dendriform();
	auto s = induced_six(ActionSpec::self(d), LinearMap::identity(4));
	EXPECT_EQ(s, promote_to_six(d));
	EXPECT_TRUE(check(s, "six").passed());
}

TEST(InducedSix, DualExtension)
{
	auto ext = dual_extension(samples::truncated_dendriform());
	auto s = induced_six(ext.action, ext.projection);
	EXPECT_EQ(s.dimension, 8u);
	auto r = check(s, "six");
	EXPECT_TRUE(r.passed());
	EXPECT_EQ(r.checked, 25u * 512u);
	EXPECT_TRUE(check(quadri_part(s), "quadri").passed());
	EXPECT_TRUE(check(perp_part(s), "dendriform").passed());
	EXPECT_TRUE(check(sum_collapse_six(s), "triassociative").passed());
	EXPECT_THROW(induced_six(ext.action, LinearMap(Matrix::scalar(4, 2) * ext.projection.matrix)), PreconditionError);
}

TEST(Differential, ZeroMap)
{
	auto d = samples::truncated_dendriform();
	EXPECT_EQ(differential_quadri({d, LinearMap::zero(4, 4)}), AlgebraSpec::zero(4, Signature::quadri));
}

TEST(Differential, ZeroProducts)
{
	auto z = AlgebraSpec::zero(2, Signature::dendriform);
	DifferentialDendriformSpec dd{z, LinearMap(Matrix::from_rows({{0, 0}, {1, 0}}))};
	EXPECT_TRUE(dd.audit().passed());
	EXPECT_EQ(differential_quadri(dd), AlgebraSpec::zero(2, Signature::quadri));
}

TEST(Differential, IntegrationRejected)
{
	auto d = samples::truncated_dendriform();
	DifferentialDendriformSpec dd{d, samples::integration_operator(4)};
	auto r = dd.audit();
	ASSERT_FALSE(r.passed());
	EXPECT_EQ(r.violations.front().id, "d^2");
	EXPECT_THROW(differential_quadri(dd), PreconditionError);
}

TEST(Differential, TopShift)
{
	// d(x) = x^4 and d = 0 elsewhere: d^2 = 0, and both sides of Leibniz
	// vanish because x^4 and any product of degree >= 3 are annihilated.
	auto d = samples::truncated_dendriform();
	DifferentialDendriformSpec dd{d, samples::top_shift(4)};
	EXPECT_TRUE(dd.audit().passed());
	auto q = differential_quadri(dd);
	EXPECT_TRUE(check(q, "quadri").passed());
	EXPECT_TRUE(check_dend_averaging(d, dd.d).pass());
}

TEST(DualExtension, ZeroAlgebra)
{
	auto ext = dual_extension(AlgebraSpec::zero(2, Signature::dendriform));
	EXPECT_EQ(ext.action.target, AlgebraSpec::zero(4, Signature::dendriform));
	EXPECT_TRUE(check_homomorphic_relative(ext.action, ext.projection).pass());
}

TEST(DualExtension, OneDimensional)
{
	auto d = samples::one_dim_dendriform(1, 0);
	auto ext = dual_extension(d);
	EXPECT_EQ(ext.action.target.dimension, 2u);
	// (a + tb) prec (c + td) = ac + t(ad + bc) with prec = 1 on e.
	EXPECT_EQ(ext.action.target.op(ops::prec).product(0, 1), (Vector{0, 1}));
	EXPECT_EQ(ext.action.target.op(ops::prec).product(1, 1), (Vector{0, 0}));
	EXPECT_TRUE(check(ext.action, "dend-action").passed());
	EXPECT_TRUE(check_homomorphic_relative(ext.action, ext.projection).pass());
	EXPECT_TRUE(check_relative_averaging(ext.action.representation(), ext.projection).pass());
	EXPECT_TRUE(graph_subalgebra_check(ext.action.representation(), ext.projection).pass());
}

TEST(DualExtension, Truncated)
{
	auto ext = dual_extension(samples::truncated_dendriform());
	EXPECT_EQ(ext.action.target.dimension, 8u);
	EXPECT_EQ(ext.projection.matrix, Matrix::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
	                                                    {0, 1, 0, 0, 0, 0, 0, 0},
	                                                    {0, 0, 1, 0, 0, 0, 0, 0},
	                                                    {0, 0, 0, 1, 0, 0, 0, 0}}));
	EXPECT_TRUE(check(ext.action.target, "dendriform").passed());
	EXPECT_TRUE(check(ext.action, "dend-action").passed());
}

TEST(Degenerate, PromotedFixturesPass)
{
	for (const auto& d : dendriform_fixtures()) {
		EXPECT_TRUE(check(promote_to_quadri(d), "quadri").passed());
		EXPECT_TRUE(check(promote_to_six(d), "six").passed());
		EXPECT_EQ(quadri_part(promote_to_six(d)), promote_to_quadri(d));
		EXPECT_EQ(perp_part(promote_to_six(d)).operations, d.operations);
	}
}
