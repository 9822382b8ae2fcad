#pragma once

// Constructions relating dendriform, di-/tri-associative, quadri- and
// six-dendriform algebras. Outputs are never trusted: the test suite and
// the CLI re-verify each against its axiom catalog.

#include <string>

#include "splitalg/algebra.hpp"
#include "splitalg/report.hpp"

namespace splitalg {

/// A precondition of a construction failed; carries the failing report.
class PreconditionError : public Error {
  public:
	PreconditionError(const std::string& what, ViolationReport report)
	    : Error(what), report_(std::move(report))
	{
	}
	const ViolationReport& report() const noexcept { return report_; }

  private:
	ViolationReport report_;
};

/// D + V with (x,u) prec (y,v) = (x prec y, x prec_l v + u prec_r y) and
/// (x,u) succ (y,v) = (x succ y, x succ_l v + u succ_r y).
AlgebraSpec semidirect(const RepresentationSpec& rep);

/// Quadri-dendriform structure on D + V where each split op keeps one side:
/// prec_vdash -> (x prec y, x prec_l v), prec_dashv -> (x prec y, u prec_r y),
/// and likewise for succ.
AlgebraSpec hemisemidirect(const RepresentationSpec& rep);

/// D + D' with the V x V block taken from the target's own products.
AlgebraSpec action_semidirect(const ActionSpec& act);

/// vdash = prec_vdash + succ_vdash, dashv = prec_dashv + succ_dashv.
AlgebraSpec sum_collapse_quadri(const AlgebraSpec& q);
/// As sum_collapse_quadri, plus perp = prec_perp + succ_perp.
AlgebraSpec sum_collapse_six(const AlgebraSpec& s);

/// a prec b = mul(a, Rb), a succ b = mul(Ra, b). Throws PreconditionError
/// unless R is a Rota-Baxter operator.
AlgebraSpec aguiar_dendriform(const AlgebraSpec& assoc, const LinearMap& r);

/// a dashv b = mul(a, Hb), a vdash b = mul(Ha, b). Throws PreconditionError
/// unless H is an averaging operator.
AlgebraSpec aguiar_diassociative(const AlgebraSpec& assoc, const LinearMap& h);

/// Quadri structure on the module: u prec_vdash v = Tu prec_l v,
/// u prec_dashv v = u prec_r Tv, u succ_vdash v = Tu succ_l v,
/// u succ_dashv v = u succ_r Tv. T must be relative averaging.
AlgebraSpec induced_quadri(const RepresentationSpec& rep, const LinearMap& t);

/// induced_quadri on the adjoint representation: x prec_vdash y = Tx prec y, etc.
AlgebraSpec averaging_induced_quadri(const AlgebraSpec& dendriform, const LinearMap& t);

/// Six structure on the action target: the perp pair is the target's own
/// dendriform pair, the other four are as in induced_quadri. T must be a
/// homomorphic relative averaging operator.
AlgebraSpec induced_six(const ActionSpec& act, const LinearMap& t);

struct DifferentialDendriformSpec {
	AlgebraSpec base;
	LinearMap d;

	/// Violations of d^2 = 0 (tag "d^2", witness [i]) and of the Leibniz
	/// rules (tags "leibniz/prec", "leibniz/succ", witness [i, j]).
	ViolationReport audit(std::size_t limit = default_report_limit) const;
};

/// x prec_vdash y = d(x) prec y, x prec_dashv y = x prec d(y),
/// x succ_vdash y = d(x) succ y, x succ_dashv y = x succ d(y).
AlgebraSpec differential_quadri(const DifferentialDendriformSpec& dd);

struct DualExtension {
	ActionSpec action;  // D acting on F = D[t]/(t^2)
	LinearMap projection; // a + tb -> a
};

/// F has basis e_0..e_{n-1}, t e_0..t e_{n-1}; its products are the
/// t-bilinear extension of D's and vanish on the t^2 block.
DualExtension dual_extension(const AlgebraSpec& dendriform);

/// Degenerate structures: every split pair equal to the dendriform pair.
AlgebraSpec promote_to_quadri(const AlgebraSpec& dendriform);
AlgebraSpec promote_to_six(const AlgebraSpec& dendriform);

/// The dendriform algebra (prec_perp, succ_perp) of a six algebra.
AlgebraSpec perp_part(const AlgebraSpec& six);
/// The underlying quadri algebra of a six algebra.
AlgebraSpec quadri_part(const AlgebraSpec& six);

} // namespace splitalg
