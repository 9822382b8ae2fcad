#pragma once

// Rota-Baxter, averaging, relative averaging and homomorphic relative
// averaging operator checks, the graph characterisation of relative
// averaging operators, and exhaustive operator search over finite grids.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "splitalg/algebra.hpp"
#include "splitalg/report.hpp"

namespace splitalg {

enum class OperatorKind {
	rota_baxter,
	assoc_averaging,
	dend_averaging,
	relative_averaging,
	homomorphic_relative,
	graph_subalgebra,
};

std::string_view to_string(OperatorKind k);
/// Accepts the CLI spellings (rota-baxter, assoc-averaging, averaging,
/// relative-averaging, homomorphic-relative, graph) and the enum names.
std::optional<OperatorKind> operator_kind_from_string(std::string_view s);

struct OperatorVerdict {
	OperatorKind kind = OperatorKind::rota_baxter;
	ViolationReport report;

	bool pass() const noexcept { return report.passed(); }
};

nlohmann::json to_json(const OperatorVerdict& v);
std::string render_text(const OperatorVerdict& v);

/// mul(Ra, Rb) = R(mul(a, Rb) + mul(Ra, b)) on all basis pairs.
OperatorVerdict check_rota_baxter(const AlgebraSpec& a, const LinearMap& r,
                                  std::size_t limit = default_report_limit);

/// mul(Ha, Hb) = H mul(a, Hb) = H mul(Ha, b); two equations per pair.
OperatorVerdict check_assoc_averaging(const AlgebraSpec& a, const LinearMap& h,
                                      std::size_t limit = default_report_limit);

/// Tx * Ty = T(Tx * y) = T(x * Ty) for * in {prec, succ}; four per pair.
OperatorVerdict check_dend_averaging(const AlgebraSpec& d, const LinearMap& t,
                                     std::size_t limit = default_report_limit);

/// T : V -> D with Tu * Tv = T(Tu *_l v) = T(u *_r Tv) for * in {prec, succ}.
OperatorVerdict check_relative_averaging(const RepresentationSpec& rep, const LinearMap& t,
                                         std::size_t limit = default_report_limit);

/// Closure of the graph {(Tu, u)} under the four operations of the
/// hemisemidirect product. Closure is tested on the generators (T e_u, e_u)
/// only: every operation is bilinear, so products of spanning sets span the
/// products of the subspace. Residuals are the escaping products reduced
/// modulo the graph.
OperatorVerdict graph_subalgebra_check(const RepresentationSpec& rep, const LinearMap& t,
                                       std::size_t limit = default_report_limit);

/// Relative averaging equations plus T(u prec' v) = Tu prec Tv and
/// T(u succ' v) = Tu succ Tv.
OperatorVerdict check_homomorphic_relative(const ActionSpec& act, const LinearMap& t,
                                           std::size_t limit = default_report_limit);

using OperatorSubject = std::variant<AlgebraSpec, RepresentationSpec, ActionSpec>;

/// Dispatches to the check for kind; throws Error when the subject has
/// the wrong type for the kind.
OperatorVerdict check_operator(const OperatorSubject& subject, OperatorKind kind, const LinearMap& t,
                               std::size_t limit = default_report_limit);

/// Shape (target_dim, source_dim) of the maps a kind expects on a subject.
std::pair<std::size_t, std::size_t> operator_shape(const OperatorSubject& subject, OperatorKind kind);

class CapExceeded : public Error {
  public:
	using Error::Error;
};

inline constexpr std::size_t default_search_cap = 19683; // 3^9

/// Every matrix with entries from grid (deduplicated, ascending) that passes
/// the check for kind, in lexicographic row-major order.
std::vector<LinearMap> search_operators(const OperatorSubject& subject, OperatorKind kind,
                                        std::vector<Rational> grid, std::size_t cap = default_search_cap);

} // namespace splitalg
