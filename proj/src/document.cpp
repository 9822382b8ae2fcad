#include "splitalg/document.hpp"

#include <fstream>
#include <sstream>

namespace splitalg {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& obj, const std::string& key, const std::string& path)
{
	auto it = obj.find(key);
	if (it == obj.end())
		throw DocumentError(path, "missing key '" + key + "'");
	return *it;
}

void require_object(const json& j, const std::string& path)
{
	if (!j.is_object())
		throw DocumentError(path, "expected an object");
}

void require_array(const json& j, std::size_t n, const std::string& path)
{
	if (!j.is_array())
		throw DocumentError(path, "expected an array");
	if (j.size() != n)
		throw DocumentError(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
}

std::size_t parse_count(const json& j, const std::string& path)
{
	if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
		throw DocumentError(path, "expected a non-negative integer");
	return j.get<std::size_t>();
}

Rational parse_scalar(const json& j, const std::string& path)
{
	if (j.is_number_integer() || j.is_number_unsigned()) {
		if (j.is_number_unsigned())
			return Rational(mpz_class(std::to_string(j.get<unsigned long long>())));
		return Rational(mpz_class(std::to_string(j.get<long long>())));
	}
	if (j.is_string()) {
		if (auto r = parse_rational(j.get<std::string>()))
			return *r;
	}
	throw DocumentError(path, "invalid rational " + j.dump());
}

BilinearOp parse_op(const json& j, std::size_t l, std::size_t r, std::size_t o, const std::string& path)
{
	BilinearOp op(l, r, o);
	require_array(j, l, path);
	for (std::size_t i = 0; i < l; ++i) {
		auto pi = child(path, i);
		require_array(j[i], r, pi);
		for (std::size_t k = 0; k < r; ++k) {
			auto pk = child(pi, k);
			require_array(j[i][k], o, pk);
			for (std::size_t m = 0; m < o; ++m)
				op(i, k, m) = parse_scalar(j[i][k][m], child(pk, m));
		}
	}
	return op;
}

json op_to_json(const BilinearOp& op)
{
	json out = json::array();
	for (std::size_t i = 0; i < op.left_dim(); ++i) {
		json row = json::array();
		for (std::size_t j = 0; j < op.right_dim(); ++j)
			row.push_back(vector_to_json(op.product(i, j)));
		out.push_back(std::move(row));
	}
	return out;
}

AlgebraSpec parse_algebra(const json& j, const std::string& path)
{
	require_object(j, path);
	AlgebraSpec a;
	a.dimension = parse_count(require(j, "dimension", path), child(path, "dimension"));
	const json& sig = require(j, "signature", path);
	if (!sig.is_string() || !signature_from_string(sig.get<std::string>()))
		throw DocumentError(child(path, "signature"), "unknown signature " + sig.dump());
	a.signature = *signature_from_string(sig.get<std::string>());
	if (auto it = j.find("basis"); it != j.end()) {
		require_array(*it, a.dimension, child(path, "basis"));
		for (std::size_t i = 0; i < it->size(); ++i) {
			if (!(*it)[i].is_string())
				throw DocumentError(child(child(path, "basis"), i), "basis label must be a string");
			a.basis.push_back((*it)[i].get<std::string>());
		}
	}
	const json& ops = require(j, "operations", path);
	auto ops_path = child(path, "operations");
	require_object(ops, ops_path);
	for (const auto& [name, tensor] : ops.items())
		a.operations.emplace(name, parse_op(tensor, a.dimension, a.dimension, a.dimension, child(ops_path, name)));
	for (const auto& name : canonical_operations(a.signature))
		if (!a.has(name))
			throw DocumentError(ops_path, "missing operation '" + name + "' required by signature " +
			                                  std::string(to_string(a.signature)));
	if (a.signature != Signature::raw)
		for (const auto& [name, op] : a.operations) {
			const auto& req = canonical_operations(a.signature);
			if (std::find(req.begin(), req.end(), name) == req.end())
				throw DocumentError(child(ops_path, name), "operation not allowed for signature " +
				                                               std::string(to_string(a.signature)));
		}
	return a;
}

const AlgebraSpec& lookup_algebra(const Document& doc, const json& ref, const std::string& path)
{
	if (!ref.is_string())
		throw DocumentError(path, "expected an algebra name");
	auto it = doc.algebras.find(ref.get<std::string>());
	if (it == doc.algebras.end())
		throw DocumentError(path, "unknown algebra '" + ref.get<std::string>() + "'");
	return it->second;
}

struct ActionTensors {
	BilinearOp prec_l, succ_l, prec_r, succ_r;
};

ActionTensors parse_action_tensors(const json& j, std::size_t n, std::size_t m, const std::string& path)
{
	const json& ops = require(j, "operations", path);
	auto p = child(path, "operations");
	require_object(ops, p);
	for (const auto& [name, _] : ops.items())
		if (name != ops::prec_l && name != ops::succ_l && name != ops::prec_r && name != ops::succ_r)
			throw DocumentError(child(p, name), "unknown action '" + name + "'");
	ActionTensors t;
	t.prec_l = parse_op(require(ops, ops::prec_l, p), n, m, m, child(p, ops::prec_l));
	t.succ_l = parse_op(require(ops, ops::succ_l, p), n, m, m, child(p, ops::succ_l));
	t.prec_r = parse_op(require(ops, ops::prec_r, p), m, n, m, child(p, ops::prec_r));
	t.succ_r = parse_op(require(ops, ops::succ_r, p), m, n, m, child(p, ops::succ_r));
	return t;
}

json action_tensors_to_json(const BilinearOp& pl, const BilinearOp& sl, const BilinearOp& pr, const BilinearOp& sr)
{
	json ops = json::object();
	ops[ops::prec_l] = op_to_json(pl);
	ops[ops::succ_l] = op_to_json(sl);
	ops[ops::prec_r] = op_to_json(pr);
	ops[ops::succ_r] = op_to_json(sr);
	return ops;
}

void write_json(std::ostream& os, const json& j, int indent)
{
	auto pad = [&](int n) { os << std::string(static_cast<std::size_t>(n), ' '); };
	if (j.is_object()) {
		if (j.empty()) {
			os << "{}";
			return;
		}
		os << "{\n";
		std::size_t i = 0;
		for (const auto& [k, v] : j.items()) {
			pad(indent + 2);
			os << json(k).dump() << ": ";
			write_json(os, v, indent + 2);
			os << (++i < j.size() ? ",\n" : "\n");
		}
		pad(indent);
		os << '}';
	} else if (j.is_array()) {
		bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
		if (flat) {
			os << '[';
			for (std::size_t i = 0; i < j.size(); ++i)
				os << (i ? ", " : "") << j[i].dump();
			os << ']';
			return;
		}
		os << "[\n";
		for (std::size_t i = 0; i < j.size(); ++i) {
			pad(indent + 2);
			write_json(os, j[i], indent + 2);
			os << (i + 1 < j.size() ? ",\n" : "\n");
		}
		pad(indent);
		os << ']';
	} else {
		os << j.dump();
	}
}

} // namespace

const AlgebraSpec& Document::algebra(const std::string& name) const
{
	auto it = algebras.find(name);
	if (it == algebras.end())
		throw Error("no algebra named '" + name + "'");
	return it->second;
}

const LinearMap& Document::map(const std::string& name) const
{
	auto it = maps.find(name);
	if (it == maps.end())
		throw Error("no map named '" + name + "'");
	return it->second;
}

const NamedRepresentation& Document::representation(const std::string& name) const
{
	auto it = representations.find(name);
	if (it == representations.end())
		throw Error("no representation named '" + name + "'");
	return it->second;
}

const NamedAction& Document::action(const std::string& name) const
{
	auto it = actions.find(name);
	if (it == actions.end())
		throw Error("no action named '" + name + "'");
	return it->second;
}

void Document::add_representation(const std::string& name, const std::string& base_name,
                                  const RepresentationSpec& rep)
{
	algebras[base_name] = rep.base;
	representations[name] = NamedRepresentation{base_name, rep};
}

void Document::add_action(const std::string& name, const std::string& base_name, const std::string& target_name,
                          const ActionSpec& act)
{
	algebras[base_name] = act.base;
	algebras[target_name] = act.target;
	actions[name] = NamedAction{base_name, target_name, act};
}

nlohmann::json rational_to_json(const Rational& r)
{
	if (r.get_den() == 1 && r.get_num().fits_slong_p())
		return json(r.get_num().get_si());
	return json(to_string(r));
}

nlohmann::json vector_to_json(const Vector& v)
{
	json out = json::array();
	for (const auto& x : v)
		out.push_back(rational_to_json(x));
	return out;
}

Document parse_document(std::string_view text)
{
	json j;
	try {
		j = json::parse(text);
	} catch (const json::parse_error& e) {
		throw DocumentError("", std::string("malformed JSON: ") + e.what());
	}
	return document_from_json(j);
}

Document document_from_json(const nlohmann::json& j)
{
	require_object(j, "");
	for (const auto& [key, _] : j.items())
		if (key != "algebras" && key != "maps" && key != "representations" && key != "actions")
			throw DocumentError("/" + key, "unknown top-level key");
	Document doc;

	if (auto it = j.find("algebras"); it != j.end()) {
		require_object(*it, "/algebras");
		for (const auto& [name, body] : it->items())
			doc.algebras.emplace(name, parse_algebra(body, "/algebras/" + name));
	}

	if (auto it = j.find("representations"); it != j.end()) {
		require_object(*it, "/representations");
		for (const auto& [name, body] : it->items()) {
			std::string path = "/representations/" + name;
			require_object(body, path);
			const json& base_ref = require(body, "base", path);
			const AlgebraSpec& base = lookup_algebra(doc, base_ref, child(path, "base"));
			if (base.signature != Signature::dendriform)
				throw DocumentError(child(path, "base"), "representation base must be dendriform");
			std::size_t m = parse_count(require(body, "module", path), child(path, "module"));
			auto t = parse_action_tensors(body, base.dimension, m, path);
			RepresentationSpec rep{base, m, std::move(t.prec_l), std::move(t.succ_l), std::move(t.prec_r),
			                       std::move(t.succ_r)};
			doc.representations.emplace(name, NamedRepresentation{base_ref.get<std::string>(), std::move(rep)});
		}
	}

	if (auto it = j.find("actions"); it != j.end()) {
		require_object(*it, "/actions");
		for (const auto& [name, body] : it->items()) {
			std::string path = "/actions/" + name;
			require_object(body, path);
			const json& base_ref = require(body, "base", path);
			const json& target_ref = require(body, "target", path);
			const AlgebraSpec& base = lookup_algebra(doc, base_ref, child(path, "base"));
			const AlgebraSpec& target = lookup_algebra(doc, target_ref, child(path, "target"));
			if (base.signature != Signature::dendriform)
				throw DocumentError(child(path, "base"), "action base must be dendriform");
			if (target.signature != Signature::dendriform)
				throw DocumentError(child(path, "target"), "action target must be dendriform");
			auto t = parse_action_tensors(body, base.dimension, target.dimension, path);
			ActionSpec act{base, target, std::move(t.prec_l), std::move(t.succ_l), std::move(t.prec_r),
			               std::move(t.succ_r)};
			doc.actions.emplace(name, NamedAction{base_ref.get<std::string>(), target_ref.get<std::string>(),
			                                      std::move(act)});
		}
	}

	if (auto it = j.find("maps"); it != j.end()) {
		require_object(*it, "/maps");
		for (const auto& [name, body] : it->items()) {
			std::string path = "/maps/" + name;
			require_object(body, path);
			LinearMap map;
			auto endpoint = [&](const char* key, std::size_t& dim, std::optional<std::string>& label) {
				const json& ref = require(body, key, path);
				if (ref.is_string()) {
					dim = lookup_algebra(doc, ref, child(path, key)).dimension;
					label = ref.get<std::string>();
				} else {
					dim = parse_count(ref, child(path, key));
				}
			};
			endpoint("source", map.source_dim, map.source_name);
			endpoint("target", map.target_dim, map.target_name);
			const json& rows = require(body, "matrix", path);
			std::string mpath = child(path, "matrix");
			require_array(rows, map.target_dim, mpath);
			map.matrix = Matrix(map.target_dim, map.source_dim);
			for (std::size_t r = 0; r < map.target_dim; ++r) {
				require_array(rows[r], map.source_dim, child(mpath, r));
				for (std::size_t c = 0; c < map.source_dim; ++c)
					map.matrix(r, c) = parse_scalar(rows[r][c], child(child(mpath, r), c));
			}
			doc.maps.emplace(name, std::move(map));
		}
	}
	return doc;
}

Document load_document(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw DocumentError("", "cannot open '" + path + "'");
	std::stringstream ss;
	ss << in.rdbuf();
	return parse_document(ss.str());
}

nlohmann::json to_json(const Document& doc)
{
	json out = {{"algebras", json::object()},
	            {"maps", json::object()},
	            {"representations", json::object()},
	            {"actions", json::object()}};
	for (const auto& [name, a] : doc.algebras) {
		json body = {{"dimension", a.dimension}, {"signature", std::string(to_string(a.signature))}};
		if (!a.basis.empty())
			body["basis"] = a.basis;
		json ops = json::object();
		for (const auto& [op_name, op] : a.operations)
			ops[op_name] = op_to_json(op);
		body["operations"] = std::move(ops);
		out["algebras"][name] = std::move(body);
	}
	for (const auto& [name, m] : doc.maps) {
		json body;
		body["source"] = m.source_name ? json(*m.source_name) : json(m.source_dim);
		body["target"] = m.target_name ? json(*m.target_name) : json(m.target_dim);
		json rows = json::array();
		for (std::size_t r = 0; r < m.matrix.rows(); ++r)
			rows.push_back(vector_to_json(m.matrix.row(r)));
		body["matrix"] = std::move(rows);
		out["maps"][name] = std::move(body);
	}
	for (const auto& [name, r] : doc.representations) {
		const auto& s = r.spec;
		out["representations"][name] = {{"base", r.base},
		                                {"module", s.module_dim},
		                                {"operations", action_tensors_to_json(s.prec_l, s.succ_l, s.prec_r, s.succ_r)}};
	}
	for (const auto& [name, a] : doc.actions) {
		const auto& s = a.spec;
		out["actions"][name] = {{"base", a.base},
		                        {"target", a.target},
		                        {"operations", action_tensors_to_json(s.prec_l, s.succ_l, s.prec_r, s.succ_r)}};
	}
	return out;
}

std::string format_json(const nlohmann::json& j)
{
	std::ostringstream os;
	write_json(os, j, 0);
	os << '\n';
	return os.str();
}

std::string serialize_document(const Document& doc) { return format_json(to_json(doc)); }

} // namespace splitalg
