#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs a shell command; stderr is merged into the captured output.
Run shell(const std::string& cmd) {
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t got; (got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Run cli(const std::string& args) { return shell(std::string(SIGNEDSPEC_CLI) + " " + args + " 2>&1"); }

// Feeds `text` (printf escapes) to the CLI's standard input.
Run piped(const std::string& text, const std::string& args) {
  return shell("printf '" + text + "' | " + SIGNEDSPEC_CLI + " " + args + " 2>&1");
}

int count_lines(const std::string& text, const std::string& suffix) {
  int n = 0;
  std::size_t pos = 0;
  while ((pos = text.find(suffix + "\n", pos)) != std::string::npos) {
    ++n;
    pos += suffix.size();
  }
  return n;
}

}  // namespace

TEST_CASE("make") {
  const Run c4 = cli("make --cycle 4 --delta -1");
  CHECK(c4.status == 0);
  CHECK(c4.out == "# family cycle 4 -1\nn 4\n1 2 +1\n1 4 -1\n2 3 +1\n3 4 +1\n");

  const Run kmr = cli("make --kmr 8 2 3");
  CHECK(kmr.status == 0);
  CHECK(count_lines(kmr.out, " +1") + count_lines(kmr.out, " -1") == 28);
  CHECK(count_lines(kmr.out, " -1") == 6);

  const Run star = cli("make --star 3 4 2");
  CHECK(star.out.find("n 9\n") != std::string::npos);
  CHECK(count_lines(star.out, " +1") + count_lines(star.out, " -1") == 12);
  CHECK(count_lines(star.out, " -1") == 6);
}

TEST_CASE("make rejects bad parameters") {
  const Run bad = cli("make --kmr 5 2 3");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("m*r") != std::string::npos);
  CHECK(cli("make").status == 1);
  CHECK(cli("make --cycle 3 --path 4").status == 1);
  CHECK(cli("make --cycle 2").status == 1);
  CHECK(cli("bogus").status == 1);
}

TEST_CASE("analyze family flags") {
  const Run k3 = cli("analyze --cycle 3 --delta 1");
  REQUIRE(k3.status == 0);
  const auto doc = nlohmann::json::parse(k3.out);
  CHECK(doc["charpoly"] == nlohmann::json::array({"2", "3", "0", "-1"}));
  CHECK(doc["determinant"] == "2");
  CHECK(doc["spectrum"].size() == 2);
  CHECK(doc["verification"]["oracle_checked"] == false);

  CHECK(nlohmann::json::parse(cli("analyze --path 4").out)["determinant"] == "1");
  const Run verified = cli("analyze --kmr 6 2 3 --verify");
  CHECK(verified.status == 0);
  CHECK(nlohmann::json::parse(verified.out)["verification"]["oracle_checked"] == true);
}

TEST_CASE("make piped to analyze reproduces family analysis") {
  for (const std::string flags : {"--kmr 8 2 3", "--star 3 4 2", "--mixed 1,2,3", "--cycle 5 --delta -1",
                                  "--path 5 --signs 1,-1,1,1"}) {
    const Run direct = cli("analyze " + flags + " --verify");
    const Run piped = cli("make " + flags + " | " + std::string(SIGNEDSPEC_CLI) + " analyze --verify -");
    CHECK(direct.status == 0);
    CHECK(piped.status == 0);
    CHECK_MESSAGE(direct.out == piped.out, flags);
  }
}

TEST_CASE("analyze edge lists") {
  const Run generic = piped("n 4\\n1 2 +1\\n2 3 -1\\n3 4 +1\\n1 3 +1\\n", "analyze --verify -");
  REQUIRE(generic.status == 0);
  const auto doc = nlohmann::json::parse(generic.out);
  CHECK(doc["family"] == "edge_list");
  CHECK(doc["charpoly"].size() == 5);

  const Run bad = piped("n 3\\n1 2 +1\\n2 3 x\\n", "analyze");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("line 3") != std::string::npos);
  CHECK(cli("analyze /nonexistent/file").status == 1);
}

TEST_CASE("output flag") {
  const std::string path = std::string(SIGNEDSPEC_TMP) + "/cli_output.txt";
  CHECK(cli("--output " + path + " make --path 3").status == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 256> buf{};
  const std::size_t got = std::fread(buf.data(), 1, buf.size(), f);
  std::fclose(f);
  CHECK(std::string(buf.data(), got) == "# family path 3\nn 3\n1 2 +1\n2 3 +1\n");
}

TEST_CASE("sweep") {
  const Run small = cli("sweep --max-n 6");
  CHECK(small.status == 0);
  CHECK(small.out.find("FAIL") == std::string::npos);

  const Run faulty = cli("sweep --max-n 6 --inject-fault kmr");
  CHECK(faulty.status == 2);
  CHECK(faulty.out.find("FAIL kmr 4 1 2 closed_form_charpoly") != std::string::npos);
}
