#include "splitalg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "splitalg/constructions.hpp"
#include "splitalg/document.hpp"
#include "splitalg/identity.hpp"
#include "splitalg/operators.hpp"
#include "splitalg/quotients.hpp"

namespace splitalg::cli {

using nlohmann::json;

namespace {

/// Bad input or usage; reported on err with exit code 2.
struct UsageError : Error {
	using Error::Error;
};

struct Options {
	std::string file;
	std::string object;
	std::string catalog;
	std::string map;
	std::string kind;
	std::string on;
	std::string recipe;
	std::string out;
	std::string rep;
	std::string action;
	std::string grid;
	std::size_t limit = default_report_limit;
	std::size_t cap = default_search_cap;
	bool paranoid = false;
	bool json = false;
	bool no_verify = false;
};

OperatorSubject resolve_subject(const Document& doc, const std::string& name)
{
	if (auto it = doc.algebras.find(name); it != doc.algebras.end())
		return it->second;
	if (auto it = doc.representations.find(name); it != doc.representations.end())
		return it->second.spec;
	if (auto it = doc.actions.find(name); it != doc.actions.end())
		return it->second.spec;
	throw UsageError("no object named '" + name + "'");
}

OperatorKind parse_kind(const std::string& s)
{
	if (auto k = operator_kind_from_string(s))
		return *k;
	throw UsageError("unknown operator kind '" + s + "'");
}

std::vector<Rational> parse_grid(const std::string& text)
{
	std::vector<Rational> grid;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
		           item.end());
		auto r = parse_rational(item);
		if (!r)
			throw UsageError("grid entry '" + item + "' is not a rational");
		grid.push_back(*r);
	}
	if (grid.empty())
		throw UsageError("grid is empty");
	return grid;
}

json matrix_to_json(const Matrix& m)
{
	json rows = json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		rows.push_back(vector_to_json(m.row(r)));
	return rows;
}

std::string matrix_line(const Matrix& m)
{
	std::ostringstream os;
	os << '[';
	for (std::size_t r = 0; r < m.rows(); ++r) {
		os << (r ? ", " : "") << '[';
		for (std::size_t c = 0; c < m.cols(); ++c)
			os << (c ? ", " : "") << to_string(m(r, c));
		os << ']';
	}
	os << ']';
	return os.str();
}

int cmd_check(const Options& o, std::ostream& out)
{
	Document doc = load_document(o.file);
	const auto& names = catalog_names();
	if (std::find(names.begin(), names.end(), o.catalog) == names.end())
		throw UsageError("unknown catalog '" + o.catalog + "'");
	CheckOptions opts{o.paranoid, o.limit};
	OperatorSubject subject = resolve_subject(doc, o.object);
	ViolationReport report =
	    std::visit([&](const auto& s) { return check(s, o.catalog, opts); }, subject);
	if (o.json)
		out << format_json(to_json(report));
	else
		out << o.object << " against " << o.catalog << '\n' << render_text(report);
	return report.passed() ? exit_pass : exit_violations;
}

int cmd_check_operator(const Options& o, std::ostream& out)
{
	Document doc = load_document(o.file);
	const LinearMap& t = doc.map(o.map);
	OperatorKind kind = parse_kind(o.kind);
	std::string on = o.on;
	if (on.empty())
		on = t.source_name ? *t.source_name : t.target_name ? *t.target_name : "";
	if (on.empty())
		throw UsageError("map '" + o.map + "' names no object; pass --on");
	OperatorVerdict verdict = check_operator(resolve_subject(doc, on), kind, t, o.limit);
	if (o.json)
		out << format_json(to_json(verdict));
	else
		out << render_text(verdict);
	return verdict.pass() ? exit_pass : exit_violations;
}

int cmd_search(const Options& o, std::ostream& out)
{
	Document doc = load_document(o.file);
	OperatorKind kind = parse_kind(o.kind);
	auto found = search_operators(resolve_subject(doc, o.object), kind, parse_grid(o.grid), o.cap);
	if (o.json) {
		json maps = json::array();
		for (const auto& m : found)
			maps.push_back(matrix_to_json(m.matrix));
		out << format_json(json{{"count", found.size()}, {"kind", to_string(kind)}, {"maps", maps}});
	} else {
		for (const auto& m : found)
			out << matrix_line(m.matrix) << '\n';
		out << found.size() << " maps\n";
	}
	return exit_pass;
}

/// A construction result plus the checks it must pass.
struct Built {
	Document doc;
	std::vector<std::pair<std::string, std::function<ViolationReport()>>> checks;
};

void expect(Built& b, const std::string& label, std::function<ViolationReport()> fn)
{
	b.checks.emplace_back(label, std::move(fn));
}

void expect_catalog(Built& b, const std::string& name, const std::string& catalog_name)
{
	AlgebraSpec a = b.doc.algebra(name);
	expect(b, name + " against " + catalog_name, [a, catalog_name] { return check(a, catalog_name); });
}

LinearMap named_map(LinearMap m, std::optional<std::string> source, std::optional<std::string> target)
{
	m.source_name = std::move(source);
	m.target_name = std::move(target);
	return m;
}

const std::string& require_flag(const std::string& value, const char* flag, const std::string& recipe)
{
	if (value.empty())
		throw UsageError("recipe " + recipe + " needs " + flag);
	return value;
}

RepresentationSpec rep_input(const Document& doc, const Options& o)
{
	if (!o.rep.empty())
		return doc.representation(o.rep).spec;
	if (!o.object.empty())
		return RepresentationSpec::adjoint(doc.algebra(o.object));
	throw UsageError("recipe " + o.recipe + " needs --rep or --object");
}

Built build(const Document& doc, const Options& o)
{
	const std::string& r = o.recipe;
	Built b;
	auto object = [&]() -> const AlgebraSpec& { return doc.algebra(require_flag(o.object, "--object", r)); };
	auto map = [&]() -> const LinearMap& { return doc.map(require_flag(o.map, "--map", r)); };
	auto act = [&]() -> const ActionSpec& { return doc.action(require_flag(o.action, "--action", r)).spec; };

	if (r == "semidirect" || r == "hemisemidirect") {
		RepresentationSpec rep = rep_input(doc, o);
		bool semi = r == "semidirect";
		b.doc.algebras[r] = semi ? semidirect(rep) : hemisemidirect(rep);
		expect_catalog(b, r, semi ? "dendriform" : "quadri");
	} else if (r == "action-semidirect") {
		b.doc.algebras[r] = action_semidirect(act());
		expect_catalog(b, r, "dendriform");
	} else if (r == "aguiar-dendriform") {
		b.doc.algebras[r] = aguiar_dendriform(object(), map());
		expect_catalog(b, r, "dendriform");
	} else if (r == "aguiar-diass") {
		b.doc.algebras[r] = aguiar_diassociative(object(), map());
		expect_catalog(b, r, "diassociative");
	} else if (r == "induced-quadri") {
		b.doc.algebras[r] = induced_quadri(rep_input(doc, o), map());
		expect_catalog(b, r, "quadri");
	} else if (r == "induced-six") {
		b.doc.algebras[r] = induced_six(act(), map());
		expect_catalog(b, r, "six");
	} else if (r == "differential-quadri") {
		b.doc.algebras[r] = differential_quadri({object(), map()});
		expect_catalog(b, r, "quadri");
	} else if (r == "dual-extension") {
		DualExtension ext = dual_extension(object());
		b.doc.add_action("dual", "base", "extension", ext.action);
		b.doc.maps["projection"] = named_map(ext.projection, "extension", "base");
		expect(b, "dual against dend-action", [a = ext.action] { return check(a, "dend-action"); });
		expect(b, "projection as homomorphic-relative", [ext] {
			return check_homomorphic_relative(ext.action, ext.projection).report;
		});
	} else if (r == "sum-diass") {
		b.doc.algebras[r] = sum_collapse_quadri(object());
		expect_catalog(b, r, "diassociative");
	} else if (r == "sum-triass") {
		b.doc.algebras[r] = sum_collapse_six(object());
		expect_catalog(b, r, "triassociative");
	} else if (r == "quotient-dend") {
		const AlgebraSpec& q = object();
		IdealSpec ideal = splitting_ideal(q);
		Quotient quot = quotient_algebra(q, ideal, quadri_collapse_pairing());
		b.doc.algebras["quotient"] = quot.algebra;
		b.doc.maps["quotient_map"] = LinearMap(quot.map.matrix);
		expect(b, "splitting ideal closure", [ideal] { return audit_ideal(ideal); });
		expect_catalog(b, "quotient", "dendriform");
	} else if (r == "embed-averaging") {
		AveragingEmbedding e = embed_averaging(object());
		b.doc.algebras["ambient"] = e.ambient;
		b.doc.maps["t"] = named_map(e.t, "ambient", "ambient");
		b.doc.maps["inclusion"] = named_map(e.inclusion, std::nullopt, "ambient");
		expect_catalog(b, "ambient", "dendriform");
		expect(b, "t as averaging", [e] { return check_dend_averaging(e.ambient, e.t).report; });
	} else if (r == "quadri-to-relative") {
		RelativeSetup s = quadri_to_relative_setup(object());
		b.doc.add_representation("rep", "quotient", s.representation);
		b.doc.maps["t"] = named_map(s.t, std::nullopt, "quotient");
		expect(b, "rep against dend-representation",
		       [rep = s.representation] { return check(rep, "dend-representation"); });
		expect(b, "t as relative-averaging", [s] { return check_relative_averaging(s.representation, s.t).report; });
	} else if (r == "six-to-homomorphic") {
		HomomorphicSetup s = six_to_homomorphic_setup(object());
		b.doc.add_action("action", "quotient", "perp", s.action);
		b.doc.maps["t"] = named_map(s.t, "perp", "quotient");
		expect(b, "action against dend-action", [a = s.action] { return check(a, "dend-action"); });
		expect(b, "t as homomorphic-relative", [s] { return check_homomorphic_relative(s.action, s.t).report; });
	} else {
		throw UsageError("unknown recipe '" + r + "'");
	}
	return b;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err)
{
	Document doc = load_document(o.file);
	Built b;
	try {
		b = build(doc, o);
	} catch (const PreconditionError& e) {
		if (o.json)
			out << format_json(json{{"error", e.what()}, {"report", to_json(e.report())}});
		else
			out << "precondition failed: " << e.what() << '\n' << render_text(e.report());
		err << "error: " << e.what() << '\n';
		return exit_usage;
	}

	std::string text = serialize_document(b.doc);
	if (o.out.empty() || o.out == "-") {
		out << text;
	} else {
		std::ofstream file(o.out, std::ios::binary);
		if (!(file << text))
			throw UsageError("cannot write '" + o.out + "'");
	}
	if (o.no_verify)
		return exit_pass;

	bool pass = true;
	json results = json::array();
	std::ostringstream text_report;
	for (const auto& [label, fn] : b.checks) {
		ViolationReport report = fn();
		pass = pass && report.passed();
		results.push_back(json{{"check", label}, {"report", to_json(report)}});
		text_report << "verify " << label << '\n' << render_text(report);
	}
	std::ostream& dst = (o.out.empty() || o.out == "-") ? err : out;
	if (o.json)
		dst << format_json(json{{"pass", pass}, {"recipe", o.recipe}, {"verification", results}});
	else
		dst << text_report.str();
	return pass ? exit_pass : exit_violations;
}

} // namespace

const std::vector<std::string>& recipes()
{
	static const std::vector<std::string> names{
	    "semidirect",   "hemisemidirect",  "action-semidirect", "aguiar-dendriform",  "aguiar-diass",
	    "induced-quadri", "induced-six",   "differential-quadri", "dual-extension",   "sum-diass",
	    "sum-triass",   "quotient-dend",   "embed-averaging",   "quadri-to-relative", "six-to-homomorphic"};
	return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Verify and construct dendriform-family algebras over the rationals", "splitalg"};
	app.require_subcommand(1);
	Options o;

	auto* check_cmd = app.add_subcommand("check", "Check an object against an identity catalog");
	check_cmd->add_option("file", o.file, "Input document")->required();
	check_cmd->add_option("--object", o.object, "Algebra, representation or action name")->required();
	check_cmd->add_option("--catalog", o.catalog, "Identity catalog")->required();
	check_cmd->add_flag("--paranoid", o.paranoid, "Also check every pair of chain members");
	check_cmd->add_option("--limit", o.limit, "Maximum witnesses reported");
	check_cmd->add_flag("--json", o.json, "Machine-readable report");

	auto* op_cmd = app.add_subcommand("check-operator", "Check a linear map against an operator identity");
	op_cmd->add_option("file", o.file, "Input document")->required();
	op_cmd->add_option("--map", o.map, "Map name")->required();
	op_cmd->add_option("--kind", o.kind, "Operator kind")->required();
	op_cmd->add_option("--on", o.on, "Algebra, representation or action the map acts on");
	op_cmd->add_option("--limit", o.limit, "Maximum witnesses reported");
	op_cmd->add_flag("--json", o.json, "Machine-readable report");

	auto* build_cmd = app.add_subcommand("construct", "Build a derived structure and re-verify it");
	build_cmd->add_option("file", o.file, "Input document")->required();
	build_cmd->add_option("--recipe", o.recipe, "Construction")->required()->check(CLI::IsMember(recipes()));
	build_cmd->add_option("--out", o.out, "Output document, - for stdout");
	build_cmd->add_option("--object", o.object, "Input algebra");
	build_cmd->add_option("--map", o.map, "Input map");
	build_cmd->add_option("--rep", o.rep, "Input representation");
	build_cmd->add_option("--action", o.action, "Input action");
	build_cmd->add_flag("--no-verify", o.no_verify, "Skip re-verification");
	build_cmd->add_flag("--json", o.json, "Machine-readable verification report");

	auto* search_cmd = app.add_subcommand("search", "Enumerate operators with entries from a grid");
	search_cmd->add_option("file", o.file, "Input document")->required();
	search_cmd->add_option("--object", o.object, "Algebra, representation or action")->required();
	search_cmd->add_option("--kind", o.kind, "Operator kind")->required();
	search_cmd->add_option("--grid", o.grid, "Comma-separated rationals")->required();
	search_cmd->add_option("--cap", o.cap, "Maximum number of candidate maps");
	search_cmd->add_flag("--json", o.json, "Machine-readable output");

	std::vector<const char*> argv;
	for (const auto& a : args)
		argv.push_back(a.c_str());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp& e) {
		app.exit(e, out, err);
		return exit_pass;
	} catch (const CLI::ParseError& e) {
		app.exit(e, out, err);
		return exit_usage;
	}

	try {
		if (check_cmd->parsed())
			return cmd_check(o, out);
		if (op_cmd->parsed())
			return cmd_check_operator(o, out);
		if (build_cmd->parsed())
			return cmd_construct(o, out, err);
		return cmd_search(o, out);
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << '\n';
		return exit_usage;
	}
}

} // namespace splitalg::cli
