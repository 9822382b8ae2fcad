#include "splitalg/report.hpp"

#include <sstream>

#include "splitalg/document.hpp"

namespace splitalg {

using nlohmann::json;

void ViolationReport::absorb(const ViolationReport& other, std::size_t limit)
{
	checked += other.checked;
	violation_count += other.violation_count;
	schemas.insert(schemas.end(), other.schemas.begin(), other.schemas.end());
	for (const auto& v : other.violations) {
		if (violations.size() >= limit)
			break;
		violations.push_back(v);
	}
}

nlohmann::json to_json(const ViolationReport& r)
{
	json violations = json::array();
	for (const auto& v : r.violations)
		violations.push_back({{"id", v.id}, {"witness", v.witness}, {"residual", vector_to_json(v.residual)}});
	json schemas = json::array();
	for (const auto& s : r.schemas)
		schemas.push_back({{"id", s.id}, {"failures", s.failures}});
	return {{"checked", r.checked},
	        {"violation_count", r.violation_count},
	        {"violations", std::move(violations)},
	        {"schemas", std::move(schemas)}};
}

ViolationReport report_from_json(const nlohmann::json& j)
{
	ViolationReport r;
	r.checked = j.at("checked").get<std::size_t>();
	r.violation_count = j.at("violation_count").get<std::size_t>();
	for (const auto& v : j.at("violations")) {
		Violation out;
		out.id = v.at("id").get<std::string>();
		out.witness = v.at("witness").get<std::vector<std::size_t>>();
		for (const auto& x : v.at("residual")) {
			if (x.is_string()) {
				auto q = parse_rational(x.get<std::string>());
				if (!q)
					throw Error("invalid rational in report: " + x.dump());
				out.residual.push_back(*q);
			} else {
				out.residual.emplace_back(mpz_class(std::to_string(x.get<long long>())));
			}
		}
		r.violations.push_back(std::move(out));
	}
	for (const auto& s : j.at("schemas"))
		r.schemas.push_back({s.at("id").get<std::string>(), s.at("failures").get<std::size_t>()});
	return r;
}

std::string render_text(const ViolationReport& r)
{
	std::ostringstream os;
	for (const auto& s : r.schemas)
		os << "  " << (s.failures == 0 ? "pass" : "FAIL") << "  " << s.id
		   << (s.failures ? "  (" + std::to_string(s.failures) + " failing)" : "") << '\n';
	for (const auto& v : r.violations) {
		os << "  witness " << v.id << " at (";
		for (std::size_t i = 0; i < v.witness.size(); ++i)
			os << (i ? "," : "") << v.witness[i];
		os << "): residual " << to_string(v.residual) << '\n';
	}
	if (r.violations.size() < r.violation_count)
		os << "  ... " << (r.violation_count - r.violations.size()) << " more violations not shown\n";
	os << (r.passed() ? "PASS" : "FAIL") << ": " << r.checked << " evaluations, " << r.violation_count
	   << " violations\n";
	return os.str();
}

} // namespace splitalg
