#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(BEI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string(BEI_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("recognize") {
  auto p3 = run("recognize " + write_temp("p3.txt", "n 3\n1 2\n2 3\n"));
  CHECK(p3.status == 0);
  CHECK(contains(p3.out, "PI; labeling 1 2 3; facets [1,2],[2,3]"));

  auto star = run("recognize " + write_temp("star.txt", "n 4\n1 2\n1 3\n1 4\n"));
  CHECK(star.status == 2);
  CHECK(contains(star.out, "not PI"));

  auto loop = run("recognize " + write_temp("loop.txt", "n 3\n2 2\n"));
  CHECK(loop.status == 1);
  CHECK(contains(loop.out, "line 2"));

  CHECK(run("recognize /nonexistent/graph.txt").status == 1);

  auto json = run("recognize --json --graph 4:1-2,2-3,3-4");
  CHECK(json.status == 0);
  CHECK(nlohmann::json::parse(json.out).contains("labeling"));
}

TEST_CASE("enumerate") {
  auto two = run("enumerate --n 2");
  CHECK(two.status == 0);
  CHECK(contains(two.out, "count 1"));
  CHECK(contains(run("enumerate --n 3").out, "count 2"));
  auto four = run("enumerate --n 4");
  CHECK(contains(four.out, "count 5"));
  CHECK(contains(four.out, "4:1-2,3-4"));      // K_2 u K_2
  CHECK_FALSE(contains(four.out, "4:1-2,1-3,1-4\n"));
  CHECK(run("enumerate --n 9").status == 1);
  CHECK(run("enumerate --n 0").status == 1);
}

TEST_CASE("betti") {
  auto p3 = run("betti --graph 3:1-2,2-3 --ideal both");
  CHECK(p3.status == 0);
  CHECK(contains(p3.out, "(all zero)"));

  auto star = run("betti --graph 4:1-2,1-3,1-4 --ideal both");
  CHECK(star.status == 0);
  CHECK(contains(star.out, "gap"));
  auto star_json = run("betti --graph 4:1-2,1-3,1-4 --ideal both --format json");
  auto j = nlohmann::json::parse(star_json.out);
  std::map<std::pair<int, int>, long long> gap;
  for (const auto& e : j["gap"]) gap[{e["i"].get<int>(), e["j"].get<int>()}] = e["gap"].get<long long>();
  CHECK(gap.at({2, 3}) == 3);
  CHECK(gap.at({3, 4}) == 1);

  auto k3 = nlohmann::json::parse(run("betti --graph 3:1-2,1-3,2-3 --ideal binomial --format json").out);
  std::map<std::pair<int, int>, int> entries;
  for (const auto& e : k3["binomial"]["entries"]) entries[{e["i"].get<int>(), e["j"].get<int>()}] = e["beta"].get<int>();
  CHECK(entries == std::map<std::pair<int, int>, int>{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});

  CHECK(run("betti --graph 4:1-2,2-3,3-4 --max-j 3").status == 3);
  CHECK(run("betti --graph 4:1-2,2-3,3-4 --max-j 3 --allow-truncated").status == 0);
  CHECK(run("betti --graph 4:1-2,2-3,3-4 --engine hochster --ideal initial").status == 0);
  CHECK(run("betti --graph 3:1-2,2-3 --char 4").status == 1);
  CHECK(run("betti --graph 3:1-2,1-2").status == 1);
}

TEST_CASE("ideal") {
  auto out = run("ideal --graph 3:1-2,2-3 --kind both");
  CHECK(out.status == 0);
  CHECK(contains(out.out, "x1*y2 - x2*y1\nx2*y3 - x3*y2\n"));
  CHECK(contains(out.out, "x1*y2\nx2*y3\n"));
  auto star = run("ideal --graph 4:1-2,1-3,1-4 --kind initial");
  CHECK(star.status == 0);
  CHECK(contains(star.out, "Groebner basis"));
}

TEST_CASE("verify") {
  auto main = run("verify --suite main --max-n 5");
  CHECK(main.status == 0);
  CHECK(contains(main.out, "[clean]"));
  auto all = run("verify --suite all --max-n 4");
  CHECK(all.status == 0);
  CHECK(contains(all.out, "expected-fail"));
  CHECK(run("verify --suite exact-seq --max-n 5").status == 0);
  CHECK(run("verify --suite gb-closed --max-n 4").status == 2);
  CHECK(run("verify --suite bogus").status == 1);

  auto path = std::string(BEI_TEST_TMP) + "/report.json";
  CHECK(run("verify --suite reg2 --max-n 4 --format json --out " + path).status == 0);
  std::ifstream in(path);
  auto report = nlohmann::json::parse(in);
  CHECK(report["clean"] == true);
  CHECK(report["reports"][0]["scenario"] == "reg2");
}

TEST_CASE("output is byte-deterministic across thread counts") {
  CHECK(run("--threads 1 verify --suite main --max-n 5 --format json").out ==
        run("--threads 4 verify --suite main --max-n 5 --format json").out);
  CHECK(run("--threads 1 betti --graph 5:1-2,1-3,2-3,3-4,3-5,4-5 --ideal both").out ==
        run("--threads 3 betti --graph 5:1-2,1-3,2-3,3-4,3-5,4-5 --ideal both").out);
}
