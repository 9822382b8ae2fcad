#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "splitalg/cli.hpp"
#include "splitalg/constructions.hpp"
#include "splitalg/document.hpp"
#include "splitalg/identity.hpp"
#include "splitalg/operators.hpp"
#include "splitalg/samples.hpp"

using namespace splitalg;
namespace fs = std::filesystem;

namespace {

struct Outcome {
	int code;
	std::string out;
	std::string err;
};

Outcome run(std::vector<std::string> args)
{
	args.insert(args.begin(), "splitalg");
	std::ostringstream out, err;
	int code = cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SPLITALG_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p)
{
	std::ifstream in(p, std::ios::binary);
	return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
  protected:
	void SetUp() override
	{
		dir_ = fs::temp_directory_path() /
		       ("splitalg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
		fs::remove_all(dir_);
		fs::create_directories(dir_);
	}
	void TearDown() override { fs::remove_all(dir_); }
	std::string path(const std::string& name) const { return (dir_ / name).string(); }

	/// Runs a construction into a file and returns the parsed document.
	Document construct(const std::vector<std::string>& args, const std::string& out_name)
	{
		std::vector<std::string> full{"construct"};
		full.insert(full.end(), args.begin(), args.end());
		full.push_back("--out");
		full.push_back(path(out_name));
		auto r = run(full);
		EXPECT_EQ(r.code, cli::exit_pass) << r.out << r.err;
		return load_document(path(out_name));
	}

	fs::path dir_;
};

} // namespace

TEST(CliCheck, ZeroAlgebraPasses)
{
	auto r = run({"check", data("zero.json"), "--object", "zero_dend", "--catalog", "dendriform"});
	EXPECT_EQ(r.code, cli::exit_pass);
	EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(CliCheck, OneDimensionalFailureHasWitness)
{
	auto r = run({"check", data("onedim.json"), "--object", "a1b1", "--catalog", "dendriform", "--json"});
	EXPECT_EQ(r.code, cli::exit_violations);
	auto report = report_from_json(nlohmann::json::parse(r.out));
	ASSERT_FALSE(report.passed());
	EXPECT_EQ(report.violations.front().id, "2.1");
	EXPECT_EQ(report.violations.front().witness, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(CliCheck, JsonMatchesLibrary)
{
	Document doc = load_document(data("onedim.json"));
	for (const char* name : {"a1b0", "a1b1", "a0b2"}) {
		auto r = run({"check", data("onedim.json"), "--object", name, "--catalog", "dendriform", "--json"});
		EXPECT_EQ(report_from_json(nlohmann::json::parse(r.out)), check(doc.algebra(name), "dendriform")) << name;
		EXPECT_EQ(r.code, check(doc.algebra(name), "dendriform").passed() ? 0 : 1);
	}
}

TEST(CliCheck, RepresentationObjects)
{
	Document doc;
	doc.add_representation("adj", "d", RepresentationSpec::adjoint(samples::truncated_dendriform()));
	auto file = fs::temp_directory_path() / "splitalg_cli_rep.json";
	std::ofstream(file) << serialize_document(doc);
	auto r = run({"check", file.string(), "--object", "adj", "--catalog", "dend-representation"});
	EXPECT_EQ(r.code, cli::exit_pass) << r.err;
	fs::remove(file);
}

TEST(CliCheck, InputErrors)
{
	EXPECT_EQ(run({"check", data("missing.json"), "--object", "x", "--catalog", "dendriform"}).code, cli::exit_usage);
	EXPECT_EQ(run({"check", data("zero.json"), "--object", "nope", "--catalog", "dendriform"}).code, cli::exit_usage);
	EXPECT_EQ(run({"check", data("zero.json"), "--object", "zero_dend", "--catalog", "lie"}).code, cli::exit_usage);
	EXPECT_EQ(run({"check", data("zero.json"), "--object", "zero_dend", "--catalog", "quadri"}).code, cli::exit_usage);
	EXPECT_EQ(run({"check", data("zero.json"), "--catalog", "dendriform"}).code, cli::exit_usage);
	EXPECT_EQ(run({}).code, cli::exit_usage);
	EXPECT_EQ(run({"frobnicate"}).code, cli::exit_usage);
	auto r = run({"check", data("missing.json"), "--object", "x", "--catalog", "dendriform"});
	EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(CliCheckOperator, Examples)
{
	EXPECT_EQ(run({"check-operator", data("ag1.json"), "--map", "R", "--kind", "rota-baxter"}).code, cli::exit_pass);
	EXPECT_EQ(run({"check-operator", data("ag1.json"), "--map", "k3", "--kind", "averaging", "--on", "dend"}).code,
	          cli::exit_pass);
	EXPECT_EQ(run({"check-operator", data("ag1.json"), "--map", "k3", "--kind", "averaging"}).code, cli::exit_pass);
	EXPECT_EQ(run({"check-operator", data("ag1.json"), "--map", "wide", "--kind", "averaging", "--on", "dend"}).code,
	          cli::exit_usage);
	EXPECT_EQ(run({"check-operator", data("ag1.json"), "--map", "swap", "--kind", "averaging"}).code,
	          cli::exit_violations);
	EXPECT_EQ(run({"check-operator", data("ag1.json"), "--map", "R", "--kind", "mystery"}).code, cli::exit_usage);
}

TEST(CliCheckOperator, JsonVerdict)
{
	auto r = run({"check-operator", data("ag1.json"), "--map", "swap", "--kind", "averaging", "--json"});
	auto j = nlohmann::json::parse(r.out);
	EXPECT_EQ(j["kind"], "dend_averaging");
	EXPECT_EQ(j["pass"], false);
	Document doc = load_document(data("ag1.json"));
	EXPECT_EQ(report_from_json(j), check_dend_averaging(doc.algebra("dend"), doc.map("swap")).report);
}

TEST_F(Cli, DualExtension)
{
	auto r = run({"construct", data("ag1.json"), "--recipe", "dual-extension", "--object", "dend", "--out",
	              path("dual.json"), "--json"});
	ASSERT_EQ(r.code, cli::exit_pass) << r.err;
	auto j = nlohmann::json::parse(r.out);
	EXPECT_EQ(j["pass"], true);
	EXPECT_EQ(j["recipe"], "dual-extension");
	Document doc = load_document(path("dual.json"));
	const auto& act = doc.action("dual");
	EXPECT_EQ(act.spec.target.dimension, 8u);
	EXPECT_EQ(doc.map("projection").source_dim, 8u);
	EXPECT_EQ(act.spec, dual_extension(samples::truncated_dendriform()).action);
}

TEST_F(Cli, InducedQuadriNeedsAveragingMap)
{
	auto r = run({"construct", data("ag1.json"), "--recipe", "induced-quadri", "--object", "dend", "--map", "swap",
	              "--out", path("q.json"), "--json"});
	EXPECT_EQ(r.code, cli::exit_usage);
	auto j = nlohmann::json::parse(r.out);
	auto report = report_from_json(j["report"]);
	EXPECT_FALSE(report.passed());
	EXPECT_EQ(report.violations.front().id.substr(0, 4), "prec");
	EXPECT_FALSE(fs::exists(path("q.json")));
}

TEST_F(Cli, SumDiassOnZeroQuadri)
{
	Document doc = construct({data("zero.json"), "--recipe", "sum-diass", "--object", "zero_quadri"}, "d.json");
	EXPECT_EQ(doc.algebra("sum-diass"), AlgebraSpec::zero(2, Signature::diassociative));
}

TEST_F(Cli, EveryRecipeRoundTrips)
{
	const auto ag1 = data("ag1.json");
	const auto zero = data("zero.json");
	Document dual = construct({ag1, "--recipe", "dual-extension", "--object", "dend"}, "dual.json");
	Document hemi = construct({ag1, "--recipe", "hemisemidirect", "--object", "dend"}, "hemi.json");
	Document six = construct({path("dual.json"), "--recipe", "induced-six", "--action", "dual", "--map", "projection"},
	                         "six.json");
	construct({ag1, "--recipe", "semidirect", "--object", "dend"}, "semi.json");
	construct({path("dual.json"), "--recipe", "action-semidirect", "--action", "dual"}, "as.json");
	construct({ag1, "--recipe", "aguiar-dendriform", "--object", "poly", "--map", "R"}, "ag.json");
	construct({ag1, "--recipe", "induced-quadri", "--object", "dend", "--map", "k3"}, "iq.json");
	construct({ag1, "--recipe", "differential-quadri", "--object", "dend", "--map", "shift"}, "dq.json");
	construct({zero, "--recipe", "sum-triass", "--object", "zero_six"}, "st.json");
	construct({path("hemi.json"), "--recipe", "quotient-dend", "--object", "hemisemidirect"}, "quot.json");
	construct({path("hemi.json"), "--recipe", "embed-averaging", "--object", "hemisemidirect"}, "emb.json");
	Document rel =
	    construct({path("hemi.json"), "--recipe", "quadri-to-relative", "--object", "hemisemidirect"}, "rel.json");
	Document hom = construct({path("six.json"), "--recipe", "six-to-homomorphic", "--object", "induced-six"}, "hom.json");

	const auto& rep = rel.representation("rep");
	EXPECT_EQ(induced_quadri(rep.spec, rel.map("t")).operations, hemi.algebra("hemisemidirect").operations);
	EXPECT_EQ(induced_six(hom.action("action").spec, hom.map("t")).operations, six.algebra("induced-six").operations);
	EXPECT_EQ(dual.action("dual").spec.base, samples::truncated_dendriform());

	// aguiar-diass needs an averaging operator; R is not one.
	EXPECT_EQ(run({"construct", ag1, "--recipe", "aguiar-diass", "--object", "poly", "--map", "R", "--out",
	               path("x.json")})
	              .code,
	          cli::exit_usage);
	construct({ag1, "--recipe", "aguiar-diass", "--object", "poly", "--map", "id"}, "diass.json");
	EXPECT_EQ(run({"construct", ag1, "--recipe", "no-such", "--object", "dend"}).code, cli::exit_usage);
	EXPECT_EQ(run({"construct", ag1, "--recipe", "induced-quadri", "--object", "dend"}).code, cli::exit_usage);
}

TEST_F(Cli, StdoutOutputAndNoVerify)
{
	auto r = run({"construct", data("ag1.json"), "--recipe", "hemisemidirect", "--object", "dend"});
	ASSERT_EQ(r.code, cli::exit_pass);
	Document doc = parse_document(r.out);
	EXPECT_EQ(doc.algebra("hemisemidirect").dimension, 8u);
	EXPECT_NE(r.err.find("verify hemisemidirect against quadri"), std::string::npos);
	EXPECT_EQ(serialize_document(doc), r.out);
	run({"construct", data("ag1.json"), "--recipe", "hemisemidirect", "--object", "dend", "--out", path("h.json")});
	EXPECT_EQ(slurp(path("h.json")), r.out);

	auto quiet = run({"construct", data("ag1.json"), "--recipe", "hemisemidirect", "--object", "dend", "--no-verify"});
	EXPECT_EQ(quiet.code, cli::exit_pass);
	EXPECT_EQ(quiet.out, r.out);
	EXPECT_TRUE(quiet.err.empty());
}

TEST(CliSearch, Examples)
{
	auto r = run({"search", data("onedim.json"), "--object", "a1b0", "--kind", "averaging", "--grid", "-1,0,1",
	              "--json"});
	ASSERT_EQ(r.code, cli::exit_pass) << r.err;
	auto j = nlohmann::json::parse(r.out);
	EXPECT_EQ(j["count"], 3);
	EXPECT_EQ(j["maps"], nlohmann::json::parse("[[[-1]], [[0]], [[1]]]"));

	auto zero = run({"search", data("zero.json"), "--object", "zero_assoc", "--kind", "rota-baxter", "--grid", "0,1"});
	EXPECT_EQ(zero.code, cli::exit_pass);
	EXPECT_NE(zero.out.find("16 maps"), std::string::npos);

	auto capped =
	    run({"search", data("zero.json"), "--object", "zero3", "--kind", "averaging", "--grid", "0,1,2,3,4"});
	EXPECT_EQ(capped.code, cli::exit_usage);
	EXPECT_EQ(
	    run({"search", data("zero.json"), "--object", "zero3", "--kind", "averaging", "--grid", "0,1", "--cap", "512"})
	        .code,
	    cli::exit_pass);
	EXPECT_EQ(
	    run({"search", data("zero.json"), "--object", "zero3", "--kind", "averaging", "--grid", "0,1", "--cap", "511"})
	        .code,
	    cli::exit_usage);
	EXPECT_EQ(run({"search", data("zero.json"), "--object", "zero_dend", "--kind", "averaging", "--grid", "0,x"}).code,
	          cli::exit_usage);
}

TEST(CliSearch, AgreesWithLibrary)
{
	Document doc = load_document(data("onedim.json"));
	auto r = run({"search", data("onedim.json"), "--object", "a0b2", "--kind", "averaging", "--grid", "-1,0,1/2,1",
	              "--json"});
	ASSERT_EQ(r.code, cli::exit_pass) << r.err;
	auto j = nlohmann::json::parse(r.out);
	std::size_t expected = 0;
	for (const char* g : {"-1", "0", "1/2", "1"})
		expected += check_operator(OperatorSubject{doc.algebra("a0b2")}, OperatorKind::dend_averaging,
		                           LinearMap(Matrix::from_rows({{*parse_rational(g)}})))
		                .pass();
	EXPECT_EQ(j["count"], expected);
}

TEST(CliDeterminism, RepeatedRunsAndWorkerCounts)
{
	const std::vector<std::vector<std::string>> commands{
	    {"check", data("onedim.json"), "--object", "a1b1", "--catalog", "dendriform", "--json"},
	    {"check-operator", data("ag1.json"), "--map", "swap", "--kind", "averaging"},
	    {"construct", data("ag1.json"), "--recipe", "hemisemidirect", "--object", "dend", "--json"},
	    {"search", data("zero.json"), "--object", "zero_dend", "--kind", "averaging", "--grid", "0,1"}};
	for (const auto& c : commands) {
		setenv("SPLITALG_WORKERS", "1", 1);
		auto one = run(c);
		setenv("SPLITALG_WORKERS", "4", 1);
		auto four = run(c);
		auto again = run(c);
		unsetenv("SPLITALG_WORKERS");
		EXPECT_EQ(one.out, four.out) << c[0];
		EXPECT_EQ(four.out, again.out) << c[0];
		EXPECT_EQ(one.code, four.code);
	}
}
