#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr merged
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("QTAU_CLI");
  if (bin == nullptr)
    throw std::runtime_error("QTAU_CLI must point at the built binary");
  const std::string command = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("tau tables") {
  const CliResult r = run_cli("tau --k 24 --max-n 7 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "7,-16744"));
  CHECK(contains(r.output, "2,-24"));

  const CliResult omega = run_cli("tau --k 1 --max-n 8 --format csv");
  CHECK(omega.exit_code == 0);
  CHECK(contains(omega.output,
                 "n,value\n1,1\n2,-1\n3,-1\n4,0\n5,0\n6,1\n7,0\n8,1\n"));

  const CliResult reduced = run_cli("tau --k 24 --max-n 5 --mod 5 --format csv");
  CHECK(reduced.exit_code == 0);
  CHECK(contains(reduced.output, "5,0"));  // 4830 = 0 mod 5

  const CliResult via_recurrence =
      run_cli("tau --k 24 --max-n 7 --route recurrence --format csv");
  CHECK(via_recurrence.output == r.output);
}

TEST_CASE("tau usage errors exit 2") {
  CHECK(run_cli("tau --k 0 --max-n 3").exit_code == 2);
  CHECK(run_cli("tau --k 24").exit_code == 2);           // missing --max-n
  CHECK(run_cli("tau --k 24 --max-n 0").exit_code == 2);
}

TEST_CASE("partition tables") {
  const CliResult r9 = run_cli("partition --fn R --t 9 --max-n 3 --format csv");
  CHECK(r9.exit_code == 0);
  CHECK(contains(r9.output, "0,1\n1,1\n2,2\n3,3\n"));

  const CliResult p = run_cli("partition --fn p --max-n 9 --format csv");
  CHECK(p.exit_code == 0);
  CHECK(contains(p.output, "9,30"));

  const CliResult d3 = run_cli("partition --fn d --t 3 --max-n 6 --format csv");
  const CliResult r4 = run_cli("partition --fn R --t 4 --max-n 6 --format csv");
  CHECK(d3.exit_code == 0);
  CHECK(d3.output == r4.output);

  CHECK(run_cli("partition --fn R --t 1 --max-n 3").exit_code == 2);
  CHECK(run_cli("partition --fn z --max-n 3").exit_code == 2);
  CHECK(run_cli("partition --fn F --max-n 3").exit_code == 2);  // empty set
}

TEST_CASE("series expansion") {
  const CliResult tau_prefix = run_cli("series --spec \"1; 1^24\" --order 2 --format csv");
  CHECK(tau_prefix.exit_code == 0);
  CHECK(contains(tau_prefix.output, "0,0\n1,1\n2,-24\n"));

  const CliResult r4 = run_cli("series --spec \"0; 4^1 1^-1\" --order 6 --format csv");
  CHECK(r4.exit_code == 0);
  CHECK(contains(r4.output, "0,1\n1,1\n2,2\n3,3\n4,4\n5,6\n6,9\n"));

  const CliResult bad = run_cli("series --spec \"0; 0^2\" --order 3");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "position"));
}

TEST_CASE("json output round-trips byte for byte") {
  for (const std::string args :
       {std::string("series --spec \"1; 1^24\" --order 6 --format json"),
        std::string("series --spec \"0; 3^2 1^-1\" --order 5 --mod 7 --format json"),
        std::string("tau --k -2 --max-n 6 --format json"),
        std::string("verify --check T3.3 --check E6 --limit 60 --format json")}) {
    const CliResult r = run_cli(args);
    CHECK(r.exit_code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(r.output);
    CHECK(parsed.dump(2) + "\n" == r.output);
  }
}

TEST_CASE("formats carry identical numbers") {
  const CliResult csv = run_cli("tau --k 24 --max-n 4 --format csv");
  const nlohmann::json j =
      nlohmann::json::parse(run_cli("tau --k 24 --max-n 4 --format json").output);
  CHECK(contains(csv.output, "4," + j.at("values")[3].get<std::string>()));
}

TEST_CASE("verify command") {
  const CliResult pass = run_cli("verify --check T3.6 --limit 300");
  CHECK(pass.exit_code == 0);
  CHECK(contains(pass.output, "T3.6"));
  CHECK(contains(pass.output, "pass"));

  const CliResult audit = run_cli("verify --check P2.4a --limit 50");
  CHECK(audit.exit_code == 0);  // predicted failure counts as expectation met
  CHECK(contains(audit.output, "refuted as predicted"));
  CHECK(contains(audit.output, "n=5"));

  CHECK(run_cli("verify --check NOPE").exit_code == 2);
  CHECK(run_cli("verify --profile nope").exit_code == 2);

  const CliResult quick = run_cli("verify --check T3.3 --check L4.1 --format csv");
  CHECK(quick.exit_code == 0);
  CHECK(contains(quick.output, "T3.3,pass"));
  CHECK(contains(quick.output, "L4.1,pass"));
}

TEST_CASE("bench reports stable checksums") {
  const CliResult a = run_cli("bench --order 200");
  const CliResult b = run_cli("bench --order 200");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.output, "checksum"));
  // timing differs between runs; the checksums must not
  const auto checksum_of = [](const std::string& out) {
    std::string sums;
    std::size_t pos = 0;
    while ((pos = out.find("checksum ", pos)) != std::string::npos) {
      pos += 9;
      sums += out.substr(pos, out.find('\n', pos) - pos) + ";";
    }
    return sums;
  };
  CHECK(checksum_of(a.output) == checksum_of(b.output));
  CHECK(run_cli("bench --order 0").exit_code == 2);
}

TEST_CASE("top-level usage") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("frobnicate").exit_code == 2);
}
