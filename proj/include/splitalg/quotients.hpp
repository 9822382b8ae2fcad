#pragma once

// Ideals, quotient algebras, and the setups that recover relative and
// homomorphic relative averaging operators from quadri and six algebras.

#include <vector>

#include "splitalg/algebra.hpp"
#include "splitalg/constructions.hpp"
#include "splitalg/identity.hpp"
#include "splitalg/linear.hpp"
#include "splitalg/report.hpp"

namespace splitalg {

struct IdealSpec {
	AlgebraSpec ambient;
	SubspaceBasis subspace;
};

/// Least subspace containing the generators and closed under multiplication
/// by basis elements on both sides, for every ambient operation.
IdealSpec ideal_generated(const AlgebraSpec& a, const std::vector<Vector>& generators);

/// Products op(b, e_x) and op(e_x, b) escaping the subspace. Tags are
/// "<op>/left" for op(b, e_x) and "<op>/right" for op(e_x, b); the witness
/// is [ideal basis index, x] and the residual is the reduced product.
ViolationReport audit_ideal(const IdealSpec& ideal, std::size_t limit = default_report_limit);

/// The ideal generated by e_i prec_vdash e_j - e_i prec_dashv e_j and
/// e_i succ_vdash e_j - e_i succ_dashv e_j over all basis pairs.
IdealSpec splitting_ideal(const AlgebraSpec& q);

struct Quotient {
	AlgebraSpec algebra;
	LinearMap map; // coset projection in complement coordinates
};

/// a / ideal with each ambient op sent to collapse[op]; ops absent from the
/// pairing are dropped. The signature is the one whose operations are
/// exactly the pairing's targets, else raw. Throws PreconditionError
/// "not an ideal" or "ill-defined collapse".
Quotient quotient_algebra(const AlgebraSpec& a, const IdealSpec& ideal, const OpPairing& collapse);

/// Collapse pairing for six algebras: the quadri ops as in
/// quadri_collapse_pairing, the perp ops dropped.
OpPairing six_collapse_pairing();

struct RelativeSetup {
	RepresentationSpec representation; // the quotient acting on q itself
	LinearMap t;                       // the quotient map
};

/// x̄ prec_l y = x prec_vdash y, y prec_r x̄ = y prec_dashv x and likewise for
/// succ. Throws PreconditionError "ill-defined action" when these depend on
/// the coset representative.
RelativeSetup quadri_to_relative_setup(const AlgebraSpec& q);

struct AveragingEmbedding {
	AlgebraSpec ambient;  // semidirect product of the quotient and q
	LinearMap t;          // (x̄, y) -> (ȳ, 0)
	LinearMap inclusion;  // x -> (0, x)
};

AveragingEmbedding embed_averaging(const AlgebraSpec& q);

struct HomomorphicSetup {
	ActionSpec action; // the quotient acting on (s, prec_perp, succ_perp)
	LinearMap t;
};

/// Throws Error "target not dendriform" when the perp pair fails the
/// dendriform axioms.
HomomorphicSetup six_to_homomorphic_setup(const AlgebraSpec& s);

} // namespace splitalg
