#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitalg/linear.hpp"

namespace splitalg {

inline constexpr std::size_t default_report_limit = 100;

/// One failing instance: the identity (or equation tag), the basis indices
/// it was evaluated at, and lhs - rhs there.
struct Violation {
	std::string id;
	std::vector<std::size_t> witness;
	Vector residual;
	friend bool operator==(const Violation&, const Violation&) = default;
};

struct SchemaTally {
	std::string id;
	std::size_t failures = 0;
	friend bool operator==(const SchemaTally&, const SchemaTally&) = default;
};

struct ViolationReport {
	std::size_t checked = 0;
	std::size_t violation_count = 0; // total, including those beyond the cap
	std::vector<Violation> violations;
	std::vector<SchemaTally> schemas;

	bool passed() const noexcept { return violation_count == 0; }

	/// Appends other's tallies and violations, keeping at most limit entries.
	void absorb(const ViolationReport& other, std::size_t limit = default_report_limit);

	friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

nlohmann::json to_json(const ViolationReport& r);
ViolationReport report_from_json(const nlohmann::json& j);
std::string render_text(const ViolationReport& r);

} // namespace splitalg
