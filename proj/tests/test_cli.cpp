#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = linfor::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct") {
    CHECK(run({"construct", "--n", "6", "--k", "3", "--a", "1"}).out == "Esa?\n");
    CHECK(run({"construct", "--n", "8", "--k", "5", "--a", "0"}).out == "G~{???\n");
    const Result bad = run({"construct", "--n", "5", "--k", "3", "--a", "2"});
    CHECK(bad.code == linfor::cli::kExitUsage);
    CHECK(bad.out.empty());
    CHECK(run({"construct", "--n", "6", "--k", "3", "--a", "1", "--variant", "odd"}).code == linfor::cli::kExitUsage);
  }

  TEST_CASE("count") {
    CHECK(run({"count", "--in", "-", "--r", "3"}, "C~\nDhc\nI}rEEB?o?\n").out == "4\n0\n8\n");
    CHECK(run({"count", "--in", "-", "--r", "3"}, "C~\n\n").out == "4\n");
    CHECK(run({"count", "--in", "-", "--r", "3"}, "D~\n").code == linfor::cli::kExitUsage);
    CHECK(run({"count", "--in", "/nonexistent/file.g6", "--r", "3"}).code == linfor::cli::kExitUsage);
  }

  TEST_CASE("transform") {
    CHECK(run({"transform", "--in", "-", "--closure", "4"}, "Dhc\n").out == "D~{\n");
    CHECK(run({"transform", "--in", "-", "--core", "1"}, "Ch\n").out == "?\n");
    CHECK(run({"transform", "--in", "-", "--closure", "2"}, "D~{\n").out == "D~{\n");
    CHECK(run({"transform", "--in", "-"}, "Dhc\n").code == linfor::cli::kExitUsage);
    CHECK(run({"transform", "--in", "-", "--closure", "2", "--core", "1"}, "Dhc\n").code == linfor::cli::kExitUsage);
  }

  TEST_CASE("verify exit codes") {
    const Result ok = run({"verify", "--theorem", "1", "--n", "3:6"});
    CHECK(ok.code == linfor::cli::kExitPass);
    CHECK(ok.out.find("\"all_pass\": true") != std::string::npos);
    CHECK(run({"verify", "--theorem", "2", "--n", "3:6", "--r", "3"}).code == linfor::cli::kExitPass);
    CHECK(run({"verify", "--theorem", "4", "--n", "20", "--k", "7"}).code == linfor::cli::kExitPass);
    CHECK(run({"verify", "--theorem", "1", "--n", "9"}).code == linfor::cli::kExitUsage);
    CHECK(run({"verify", "--theorem", "8"}).code == linfor::cli::kExitUsage);
    CHECK(run({"verify", "--theorem", "1", "--n", "5:3"}).code == linfor::cli::kExitUsage);
    CHECK(run({"verify", "--theorem", "1", "--n", "6", "--budget", "0"}).code == linfor::cli::kExitUsage);
    CHECK(run({"verify", "--theorem", "1", "--n", "6", "--format", "g6"}).code == linfor::cli::kExitUsage);
    const std::string tree = "^qO`?_OA?O?_@??_?O?A??O??_?@???_??O??A???O???_??@????_???O???A????O????_???@???\n";
    CHECK(run({"forest", "--in", "-", "--budget", "10"}, tree).code == linfor::cli::kExitBudget);
    CHECK(run({"forest", "--in", "-"}, tree).out.rfind("20 ", 0) == 0);
    CHECK(run({}).code == linfor::cli::kExitUsage);
    CHECK(run({"--help"}).code == linfor::cli::kExitPass);
  }

  TEST_CASE("classification of input graphs") {
    // Row 0 is the host H(12,7,3) itself; row 1 (K_9) is not L_7-free.
    const Result r = run({"verify", "--theorem", "4", "--in", "-", "--k", "7", "--r", "2", "--format", "csv"},
                         "K~zfFB_wF?[?\nH~~~~~~\n");
    CHECK(r.code == linfor::cli::kExitPass);
    CHECK(r.out.find("embeds_in=H(12,7,3)") != std::string::npos);
    CHECK(r.out.find("input=1;in_class=no") != std::string::npos);
  }

  TEST_CASE("verify reports from input files") {
    const Result r = run({"verify", "--theorem", "1", "--in", "-", "--format", "csv"}, "C~\nC?\nDhc\n");
    CHECK(r.code == linfor::cli::kExitPass);
    CHECK(r.out.rfind("theorem,kind,", 0) == 0);
    CHECK(r.out.find("1,bound,4,3,2,,3,0,pass,C?,source=input;graphs=2\n") != std::string::npos);
  }
}
