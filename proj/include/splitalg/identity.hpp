#pragma once

// Multilinear identities in three variables of depth at most two, the
// axiom catalogs built from them, and exhaustive basis-tuple checking.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "splitalg/algebra.hpp"
#include "splitalg/report.hpp"

namespace splitalg {

/// Which space a variable or operation result lives in: the acted-on
/// algebra (A) or a module / second algebra (V).
enum class Sort { A, V };

/// Either a variable slot (op empty) or op applied to two subterms.
struct Term {
	std::string op;
	int slot = -1;
	std::vector<Term> args;

	static Term variable(int slot);
	static Term apply(std::string op, Term left, Term right);

	bool is_variable() const noexcept { return op.empty(); }
	int depth() const;
	std::string to_string() const;
};

struct Monomial {
	Rational coeff;
	Term term;
};

using Expr = std::vector<Monomial>;

/// Builders for identity expressions; apply() distributes over sums.
namespace dsl {
Expr var(int slot);
Expr apply(const std::string& op, const Expr& left, const Expr& right);
Expr operator+(Expr a, const Expr& b);
} // namespace dsl

struct IdentitySchema {
	std::string id;
	Expr lhs;
	Expr rhs;
	std::array<Sort, 3> slot_sorts{Sort::A, Sort::A, Sort::A};

	std::string to_string() const;
};

/// Catalog names: associative, dendriform, diassociative, triassociative,
/// quadri, six, dend-representation, dend-action.
const std::vector<std::string>& catalog_names();

/// Chains E1 = E2 = ... = Ek contribute the k-1 consecutive equalities; with
/// paranoid set, every other pair of the chain is appended as well.
std::vector<IdentitySchema> catalog(const std::string& name, bool paranoid = false);

struct TypedOperation {
	const BilinearOp* op = nullptr;
	Sort left = Sort::A;
	Sort right = Sort::A;
	Sort out = Sort::A;
};

/// The named operations a set of identities is evaluated against. Holds
/// pointers into the objects it was built from, which must outlive it.
class OperationTable {
  public:
	OperationTable(std::size_t a_dim, std::size_t v_dim) : dims_{a_dim, v_dim} {}

	/// Base ops under their own names (A x A -> A).
	static OperationTable of(const AlgebraSpec& a);
	/// Base ops plus prec_l, succ_l (A x V -> V), prec_r, succ_r (V x A -> V).
	static OperationTable of(const RepresentationSpec& rep);
	/// As for representations, plus the target ops as prec', succ' (V x V -> V).
	static OperationTable of(const ActionSpec& act);

	void add(const std::string& name, const BilinearOp& op, Sort left, Sort right, Sort out);
	const TypedOperation& get(const std::string& name) const;
	std::size_t dim(Sort s) const noexcept { return dims_[s == Sort::A ? 0 : 1]; }

  private:
	std::array<std::size_t, 2> dims_;
	std::map<std::string, TypedOperation> ops_;
};

inline constexpr const char* target_prec = "prec'";
inline constexpr const char* target_succ = "succ'";

/// Output sort of a term; throws Error on an ill-sorted term or unknown op.
Sort sort_of(const Term& t, const std::array<Sort, 3>& slot_sorts, const OperationTable& table);

Vector evaluate(const Term& t, const std::array<Vector, 3>& args, const OperationTable& table);
Vector evaluate(const Expr& e, const std::array<Vector, 3>& args, const OperationTable& table);

struct CheckOptions {
	bool paranoid = false;
	std::size_t limit = default_report_limit;
};

/// Evaluates every schema on every basis triple allowed by its slot sorts.
ViolationReport check(const OperationTable& table, const std::vector<IdentitySchema>& schemas,
                      const CheckOptions& options = {});
ViolationReport check(const AlgebraSpec& a, const std::string& catalog_name, const CheckOptions& options = {});
ViolationReport check(const RepresentationSpec& rep, const std::string& catalog_name,
                      const CheckOptions& options = {});
ViolationReport check(const ActionSpec& act, const std::string& catalog_name, const CheckOptions& options = {});

using OpPairing = std::map<std::string, std::string>;

/// Each op paired with the op of the same name.
OpPairing identity_pairing(Signature s);
/// prec_vdash, prec_dashv -> prec and succ_vdash, succ_dashv -> succ.
OpPairing quadri_collapse_pairing();

/// Checks f(e_i o e_j) = f(e_i) * f(e_j) for every paired (o, *) and basis pair.
ViolationReport check_morphism(const LinearMap& f, const AlgebraSpec& source, const AlgebraSpec& target,
                               const OpPairing& pairing, std::size_t limit = default_report_limit);

} // namespace splitalg
