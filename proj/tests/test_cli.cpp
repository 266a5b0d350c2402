// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace
{

const fs::path kScratch = fs::temp_directory_path() / "excite_iter_cli";

int Cli(const std::string &args)
{
  const std::string command =
      std::string("\"") + EXCITE_ITER_CLI + "\" " + args + " > /dev/null 2>&1";
  const int raw = std::system(command.c_str());
  REQUIRE(WIFEXITED(raw));
  return WEXITSTATUS(raw);
}

std::string Slurp(const fs::path &path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("soluble run then compare")
{
  const fs::path out = kScratch / "soluble";
  fs::remove_all(out);
  REQUIRE(Cli("soluble --delta 0.1 --iters 3 --out " + out.string()) == 0);
  CHECK(fs::exists(out / "summary.json"));
  CHECK(fs::exists(out / "chi_curves.csv"));
  CHECK(fs::exists(out / "wavefunctions.csv"));
  CHECK(Cli("compare --summary " + (out / "summary.json").string() + " --ref eq_3_17") == 0);
  // Same summary against the quartic table: configuration mismatch.
  CHECK(Cli("compare --summary " + (out / "summary.json").string() + " --ref eq_4_6") == 1);
}

TEST_CASE("perturbed summary fails compare")
{
  const fs::path out = kScratch / "perturbed";
  fs::remove_all(out);
  REQUIRE(Cli("soluble --iters 3 --out " + out.string()) == 0);
  nlohmann::json summary = nlohmann::json::parse(Slurp(out / "summary.json"));
  summary["eps_sequence"][2] = summary["eps_sequence"][2].get<double>() + 1e-3;
  std::ofstream(out / "bad.json") << summary.dump(2);
  CHECK(Cli("compare --summary " + (out / "bad.json").string() + " --ref eq_3_17") == 1);
}

TEST_CASE("usage and argument errors exit 2")
{
  const std::string out = (kScratch / "usage").string();
  CHECK(Cli("") == 2);
  CHECK(Cli("soluble --g 3 --out " + out) == 2);
  CHECK(Cli("quartic --delta 0.1 --out " + out) == 2);
  CHECK(Cli("soluble --bogus 1 --out " + out) == 2);
  CHECK(Cli("soluble --trial cubic --out " + out) == 2);
  CHECK(Cli("soluble --points 100 --out " + out) == 2);
  CHECK(Cli("soluble --anchor 0.1234567 --out " + out) == 2);
  CHECK(Cli("compare --summary x.json --ref eq_9_9") == 2);
  CHECK(Cli("compare --ref eq_3_17") == 2);
}

TEST_CASE("runtime failures exit 1")
{
  CHECK(Cli("compare --summary " + (kScratch / "missing.json").string() + " --ref eq_3_17") == 1);
  const fs::path garbage = kScratch / "garbage.json";
  fs::create_directories(kScratch);
  std::ofstream(garbage) << "{ not json";
  CHECK(Cli("compare --summary " + garbage.string() + " --ref eq_3_17") == 1);
}

TEST_CASE("help and version exit 0")
{
  CHECK(Cli("--help") == 0);
  CHECK(Cli("--version") == 0);
  CHECK(Cli("quartic --help") == 0);
}

TEST_CASE("reruns are byte identical")
{
  const fs::path a = kScratch / "rerun_a";
  const fs::path b = kScratch / "rerun_b";
  fs::remove_all(a);
  fs::remove_all(b);
  REQUIRE(Cli("quartic --g 3 --points 4001 --iters 3 --out " + a.string()) == 0);
  REQUIRE(Cli("quartic --g 3 --points 4001 --iters 3 --out " + b.string()) == 0);
  for (const char *name : {"chi_curves.csv", "wavefunctions.csv", "groundstate.csv"})
  {
    CAPTURE(name);
    CHECK(Slurp(a / name) == Slurp(b / name));
  }
  // summary.json embeds the output directory, so compare everything else.
  auto sa = nlohmann::json::parse(Slurp(a / "summary.json"));
  auto sb = nlohmann::json::parse(Slurp(b / "summary.json"));
  sa["config"].erase("out");
  sb["config"].erase("out");
  CHECK(sa == sb);
}

TEST_CASE("ground-state cache is reused")
{
  const fs::path dir = kScratch / "cache";
  fs::remove_all(dir);
  const std::string cache = (dir / "gs.csv").string();
  REQUIRE(Cli("quartic --points 4001 --iters 2 --gs-cache " + cache + " --out " +
              (dir / "one").string()) == 0);
  CHECK(fs::exists(dir / "gs.csv"));
  CHECK(fs::exists(dir / "gs.json"));
  REQUIRE(Cli("quartic --points 4001 --iters 2 --gs-cache " + cache + " --out " +
              (dir / "two").string()) == 0);
  const auto summary = nlohmann::json::parse(Slurp(dir / "two" / "summary.json"));
  CHECK(summary["ground_state_from_cache"] == true);
  CHECK(Cli("quartic --points 2001 --iters 2 --gs-cache " + cache + " --out " +
            (dir / "three").string()) == 2);
}
