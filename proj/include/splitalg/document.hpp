#pragma once

// JSON documents holding named algebras, maps, representations and actions.

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "splitalg/algebra.hpp"

namespace splitalg {

/// Parse or validation failure, tagged with a JSON-pointer-like path.
class DocumentError : public Error {
  public:
	DocumentError(std::string path, const std::string& message)
	    : Error(message + " at path " + (path.empty() ? "/" : path)), path_(std::move(path))
	{
	}
	const std::string& path() const noexcept { return path_; }

  private:
	std::string path_;
};

struct NamedRepresentation {
	std::string base; // algebra name
	RepresentationSpec spec;
	friend bool operator==(const NamedRepresentation&, const NamedRepresentation&) = default;
};

struct NamedAction {
	std::string base;
	std::string target;
	ActionSpec spec;
	friend bool operator==(const NamedAction&, const NamedAction&) = default;
};

struct Document {
	std::map<std::string, AlgebraSpec> algebras;
	std::map<std::string, LinearMap> maps;
	std::map<std::string, NamedRepresentation> representations;
	std::map<std::string, NamedAction> actions;

	const AlgebraSpec& algebra(const std::string& name) const;
	const LinearMap& map(const std::string& name) const;
	const NamedRepresentation& representation(const std::string& name) const;
	const NamedAction& action(const std::string& name) const;

	/// Adds a representation whose base is stored under base_name.
	void add_representation(const std::string& name, const std::string& base_name, const RepresentationSpec& rep);
	void add_action(const std::string& name, const std::string& base_name, const std::string& target_name,
	                const ActionSpec& act);

	friend bool operator==(const Document&, const Document&) = default;
};

Document parse_document(std::string_view text);
Document document_from_json(const nlohmann::json& j);
Document load_document(const std::string& path);

nlohmann::json to_json(const Document& doc);
/// Canonical text: sorted keys, reduced rationals, integers unquoted,
/// innermost numeric arrays on one line. Ends with a newline.
std::string serialize_document(const Document& doc);

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json vector_to_json(const Vector& v);
/// Multi-line JSON text with scalar-only arrays kept on one line.
std::string format_json(const nlohmann::json& j);

} // namespace splitalg
