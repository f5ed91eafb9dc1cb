#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Run
{
	int code = -1;
	std::string out;
};

Run run(const std::string &args, const std::string &env = "")
{
	const std::string cmd = env + " " + REDGW_CLI_PATH + " " + args + " 2>/dev/null";
	Run r;
	FILE *p = popen(cmd.c_str(), "r");
	if (!p)
		return r;
	char buf[4096];
	std::size_t n;
	while ((n = fread(buf, 1, sizeof buf, p)) > 0)
		r.out.append(buf, n);
	const int status = pclose(p);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

std::filesystem::path temp_dir()
{
	auto dir = std::filesystem::temp_directory_path() / ("redgw_cli_test_" + std::to_string(::getpid()));
	std::filesystem::create_directories(dir);
	return dir;
}

} // namespace

TEST(Cli, QuinticDegreeThree)
{
	const auto r = run("coefficient --n 4 --degrees 5 --d 3 --gw0 317206375");
	ASSERT_EQ(r.code, 0);
	const auto j = nlohmann::json::parse(r.out);
	EXPECT_EQ(j.at("coefficient"), "1/12");
	EXPECT_EQ(j.at("correction"), "317206375/12");
	EXPECT_EQ(j.at("input").at("gw0"), "317206375");
}

TEST(Cli, LinesGw0)
{
	const auto r = run("coefficient --n 4 --degrees 5 --lines-gw0");
	ASSERT_EQ(r.code, 0);
	EXPECT_EQ(nlohmann::json::parse(r.out).at("correction"), "2875/12");
	EXPECT_EQ(run("coefficient --n 4 --degrees 5 --d 2 --lines-gw0").code, 2);
}

TEST(Cli, SurfaceAudit)
{
	const auto r = run("audit --n 3 --degrees 4 --d 2 --k 0");
	ASSERT_EQ(r.code, 0);
	const auto j = nlohmann::json::parse(r.out);
	EXPECT_EQ(j.at("all_vanish"), true);
	EXPECT_GT(j.at("strata").size(), 0u);
}

TEST(Cli, Lines)
{
	const auto r = run("lines --n 3 --degrees 3");
	ASSERT_EQ(r.code, 0);
	EXPECT_EQ(nlohmann::json::parse(r.out).at("count"), "27");
	EXPECT_EQ(run("lines --n 4 --degrees 4").code, 2);
}

TEST(Cli, TreeCommands)
{
	const auto dir = temp_dir();
	const auto tree = dir / "tree.json";
	std::ofstream(tree) << R"({"root": "a", "vertices": [
	  {"id": "a", "parent": null, "weight": 0, "legs": []},
	  {"id": "b", "parent": "a", "weight": 0, "legs": []},
	  {"id": "c", "parent": "b", "weight": 2, "legs": [1]},
	  {"id": "d", "parent": "b", "weight": 0, "legs": [2, 3]},
	  {"id": "g1", "parent": "d", "weight": 1, "legs": []},
	  {"id": "g2", "parent": "d", "weight": 3, "legs": []}]})";

	auto r = run("advance --tree " + tree.string() + " --vertex c");
	ASSERT_EQ(r.code, 0);
	auto j = nlohmann::json::parse(r.out);
	EXPECT_EQ(j.at("advanced").at("vertices").size(), 3u);

	r = run("strata --tree " + tree.string());
	ASSERT_EQ(r.code, 0);
	EXPECT_EQ(nlohmann::json::parse(r.out).at("sequences").size(), 4u);

	r = run("charts --tree " + tree.string() + " --n 4 --degrees 5 --p-fields");
	ASSERT_EQ(r.code, 0);
	j = nlohmann::json::parse(r.out);
	for (const auto &atlas : j.at("atlases"))
		EXPECT_EQ(atlas.at("equations").size(), 5u);

	EXPECT_EQ(run("advance --tree " + tree.string() + " --vertex g1").code, 2);
	EXPECT_EQ(run("advance --tree " + (dir / "missing.json").string() + " --vertex c").code, 2);
	std::filesystem::remove_all(dir);
}

TEST(Cli, ValidationErrorsExitTwo)
{
	EXPECT_EQ(run("").code, 2);
	EXPECT_EQ(run("frobnicate").code, 2);
	EXPECT_EQ(run("coefficient --n 4").code, 2);
	EXPECT_EQ(run("coefficient --n 4 --degrees five").code, 2);
	EXPECT_EQ(run("coefficient --n 9 --degrees 5").code, 2);
	EXPECT_EQ(run("coefficient --n 4 --degrees 5 --d 0").code, 2);
	EXPECT_EQ(run("coefficient --n 4 --degrees 5 --gw0 1/0").code, 2);
	EXPECT_EQ(run("sign --n 4 --degrees 5 --genus 2").code, 2);
}

TEST(Cli, ReportDirectoryAndRoundTrip)
{
	const auto dir = temp_dir();
	const auto r = run("coefficient --n 5 --degrees 2,3 --d 2", "REDGW_REPORT_DIR=" + dir.string());
	ASSERT_EQ(r.code, 0);
	std::ifstream f(dir / "coefficient.json");
	const std::string saved((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
	EXPECT_EQ(saved, r.out);
	EXPECT_EQ(nlohmann::json::parse(saved).dump(2) + "\n", saved);
	std::filesystem::remove_all(dir);
}

TEST(Cli, SignAndSelftest)
{
	auto r = run("sign --n 4 --degrees 5 --d 1 --genus 0");
	ASSERT_EQ(r.code, 0);
	EXPECT_EQ(nlohmann::json::parse(r.out).at("sign_factor"), 1);
	r = run("selftest --seed 17");
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(nlohmann::json::parse(r.out).at("passed"), true);
}
