#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "frameforge/json_io.hpp"
#include "frameforge/matrix_io.hpp"
#include "oracles.hpp"

namespace ff = frameforge;
namespace fs = std::filesystem;
using ff::cli::ExitCode;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("frameforge-cli-" + std::to_string(std::random_device{}()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path config(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p;
  }

  int run(const std::string& command, const fs::path& cfg, const std::string& out = "out",
          std::optional<std::uint64_t> seed = std::nullopt) {
    ff::cli::Options o;
    o.command = command;
    o.config = cfg;
    o.out = dir_ / out;
    o.seed = seed;
    o.timestamp = false;
    stdout_.str("");
    stderr_.str("");
    return ff::cli::run(o, stdout_, stderr_);
  }

  ff::Json report(const std::string& command, const std::string& out = "out") {
    std::ifstream in(dir_ / out / (command + ".json"));
    return ff::Json::parse(in);
  }

  std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  fs::path dir_;
  std::ostringstream stdout_, stderr_;
};

const char* kPerturbed = R"({"n":256,"perturbation":{"r":1,"a":{"constant":0.5}},"label":"pb","seed":11})";

}  // namespace

TEST_F(Cli, GenWritesMatrixAndMetadata) {
  ASSERT_EQ(run("gen", config("gen.json", kPerturbed)), ExitCode::kPass) << stderr_.str();
  const auto e = ff::read_frame_system(dir_ / "out" / "system.csv");
  EXPECT_EQ(e.size(), 256);
  EXPECT_EQ(e.label(), "pb");
  EXPECT_EQ(report("gen")["status"], "pass");
  EXPECT_FALSE(report("gen").contains("generated_at"));
}

TEST_F(Cli, GenRoundTripIsBitExact) {
  for (const char* fmt : {"csv", "binary"}) {
    const std::string body = std::string(R"({"n":64,"perturbation":{"r":2,"eps":[0.3,0.2],"a":[[0.1,[0.2,-0.05]],[0.15]]},"format":")") +
                             fmt + R"(","output":"s.)" + fmt + "\"}";
    ASSERT_EQ(run("gen", config("g.json", body)), ExitCode::kPass) << stderr_.str();
    const auto back = ff::read_frame_system(dir_ / "out" / (std::string("s.") + fmt));
    const auto spec = ff::perturbation_spec_from_json(ff::Json::parse(body)["perturbation"]);
    EXPECT_EQ(back.entries(), ff::build_perturbed_basis(spec, 64).system.entries()) << fmt;
  }
}

TEST_F(Cli, GenRejectsEntryAboveEps) {
  EXPECT_EQ(run("gen", config("bad.json", R"({"n":64,"perturbation":{"r":1,"a":{"constant":1.1}}})")),
            ExitCode::kInvalidInput);
  EXPECT_NE(stderr_.str().find("entry exceeds eps"), std::string::npos);
}

TEST_F(Cli, InvalidConfigsExitTwo) {
  EXPECT_EQ(run("gen", config("small.json", R"({"n":8,"perturbation":{"r":1,"a":{"constant":0.1}}})")),
            ExitCode::kInvalidInput);
  EXPECT_EQ(run("fit", config("nomatrix.json", R"({"betas":[1]})")), ExitCode::kInvalidInput);
  EXPECT_EQ(run("fframe", config("noseed.json", R"({"n":32,"system":"onb"})")), ExitCode::kInvalidInput);
  EXPECT_NE(stderr_.str().find("seed required"), std::string::npos);
  EXPECT_EQ(run("bogus", config("x.json", "{}")), ExitCode::kInvalidInput);
}

TEST_F(Cli, UnreadableInputsExitThree) {
  EXPECT_EQ(run("gen", dir_ / "missing.json"), ExitCode::kIoError);
  EXPECT_EQ(run("gen", config("broken.json", "{\"n\": 12,")), ExitCode::kIoError);
  config("bad.csv", "1,2\nx,4\n");
  EXPECT_EQ(run("fit", config("fit.json", R"({"matrix":"bad.csv"})")), ExitCode::kIoError);
  EXPECT_EQ(run("fit", config("fit2.json", R"({"matrix":"nowhere.csv"})")), ExitCode::kIoError);
}

TEST_F(Cli, FitCsvRows) {
  const ff::TruncatedMatrix a(oracle::exponential_matrix(128, 0.7));
  ff::write_matrix_csv(dir_ / "exp.csv", a);
  ASSERT_EQ(run("fit", config("fit.json", R"({"matrix":"exp.csv","betas":[1]})")), ExitCode::kPass);
  std::istringstream csv(read(dir_ / "out" / "fit.csv"));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  EXPECT_EQ(header, "beta,gamma_fit,C_fit,residual");
  const double gamma = std::stod(row.substr(row.find(',') + 1));
  EXPECT_NEAR(gamma, 0.7, 1e-6);

  ff::write_matrix_csv(dir_ / "id.csv", ff::TruncatedMatrix::identity(64));
  ASSERT_EQ(run("fit", config("fid.json", R"({"matrix":"id.csv"})")), ExitCode::kPass);
  std::istringstream idcsv(read(dir_ / "out" / "fit.csv"));
  std::getline(idcsv, header);
  std::getline(idcsv, row);
  EXPECT_EQ(row.substr(0, 6), "1,inf,");
}

TEST_F(Cli, JaffardTridiagonalIdentityAndSingular) {
  ASSERT_EQ(run("jaffard", config("t.json", R"({"matrix":{"generate":{"kind":"tridiagonal","n":512,"sub":0.3,"diag":1,"super":0.3}},"margin":64,"beta":1})")),
            ExitCode::kPass)
      << stderr_.str();
  EXPECT_EQ(report("jaffard")["result"]["violations"], 0);

  ASSERT_EQ(run("jaffard", config("i.json", R"({"matrix":{"generate":{"kind":"identity","n":64}},"gamma":2})")),
            ExitCode::kPass);
  const auto rep = report("jaffard")["result"]["report"];
  EXPECT_DOUBLE_EQ(rep["gamma1_pred"].get<double>(), 0.5 * 0.5);  // gamma'' min(1-eps, eps)
  EXPECT_DOUBLE_EQ(rep["log_ratio"].get<double>(), 1.0);

  EXPECT_EQ(run("jaffard", config("s.json", R"({"matrix":{"generate":{"kind":"diagonal","n":64,"value":0}}})")),
            ExitCode::kInvalidInput);
  EXPECT_NE(stderr_.str().find("singular at truncation"), std::string::npos);
}

TEST_F(Cli, SchurAndDual) {
  ASSERT_EQ(run("schur", config("s.json", R"({"matrix":{"generate":{"kind":"exponential","n":128,"gamma":1}}})")),
            ExitCode::kPass);
  ASSERT_EQ(run("dual", config("d.json", kPerturbed)), ExitCode::kPass);
  const auto r = report("dual")["result"];
  EXPECT_LT(r["biorthogonality_error"].get<double>(), 1e-8);
  EXPECT_NEAR(ff::number_from_json(r["localization"]["dual"]["gamma"]), std::log(2.0), 1e-6);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "dual.csv"));
}

TEST_F(Cli, ExpandAndFframe) {
  ASSERT_EQ(run("expand", config("e.json", R"({"n":128,"perturbation":{"r":1,"a":{"constant":0.5}},"function":{"kind":"gaussian","a":3},"permutations":10,"seed":2})")),
            ExitCode::kPass)
      << stderr_.str();
  EXPECT_EQ(read(dir_ / "out" / "expand.csv").substr(0, 10), "M,k,error\n");
  ASSERT_EQ(run("fframe", config("f.json", R"({"n":64,"system":"onb","random_samples":20})"), "out", 5),
            ExitCode::kPass);
  const auto intervals = report("fframe")["result"]["intervals"];
  for (const auto& iv : intervals) {
    EXPECT_NEAR(iv["lower"].get<double>(), 1.0, 1e-10);
    EXPECT_NEAR(iv["upper"].get<double>(), 1.0, 1e-10);
  }
}

TEST_F(Cli, ReportOrthonormalPasses) {
  ASSERT_EQ(run("report", config("r.json", R"({"n":64,"system":"onb","seed":1,"random_samples":50})")),
            ExitCode::kPass)
      << stdout_.str();
  const auto steps = report("report")["result"]["steps"];
  ASSERT_GE(steps.size(), 8u);
  for (const auto& s : steps) EXPECT_TRUE(s["status"] == "pass" || s["status"] == "skipped") << s["name"];
}

TEST_F(Cli, ReportIsDeterministicAcrossThreadBudgets) {
  const auto cfg = config("r.json", R"({"n":128,"perturbation":{"r":1,"a":{"constant":0.5}},"seed":4,"random_samples":100})");
  ASSERT_EQ(run("report", cfg, "a"), ExitCode::kPass) << stdout_.str();
  setenv("FRAME_FORGE_THREADS", "1", 1);
  ASSERT_EQ(run("report", cfg, "b"), ExitCode::kPass);
  unsetenv("FRAME_FORGE_THREADS");
  EXPECT_EQ(read(dir_ / "a" / "report.json"), read(dir_ / "b" / "report.json"));
  ASSERT_EQ(run("report", cfg, "c", 5), ExitCode::kPass);
  EXPECT_NE(read(dir_ / "a" / "report.json"), read(dir_ / "c" / "report.json"));
}

TEST_F(Cli, ReportRejectsIncompatibleWeightButRunsOtherSteps) {
  const auto cfg = config("w.json", R"({"n":128,"perturbation":{"r":1,"a":{"constant":0.5}},"seed":4,"random_samples":50,"weight":{"kind":"subexponential","beta":1,"gamma":0.2}})");
  EXPECT_EQ(run("report", cfg), ExitCode::kVerificationFailure);
  int passed = 0;
  const auto steps = report("report")["result"]["steps"];
  for (const auto& s : steps) {
    if (s["name"] == "weighted_norms") {
      EXPECT_EQ(s["status"], "rejected");
      EXPECT_NE(s["message"].get<std::string>().find("incompatible weight"), std::string::npos);
    } else if (s["status"] == "pass") {
      ++passed;
    }
  }
  EXPECT_EQ(passed, 9);
}

TEST_F(Cli, ReportCompatibleWeightPasses) {
  const auto cfg = config("w.json", R"({"n":128,"perturbation":{"r":1,"a":{"constant":0.5}},"seed":4,"random_samples":50,"weight":{"kind":"subexponential","beta":0.5,"gamma":1}})");
  EXPECT_EQ(run("report", cfg), ExitCode::kPass) << stdout_.str();
}

TEST_F(Cli, ThreadBudgetFromEnvironment) {
  setenv("FRAME_FORGE_THREADS", "3", 1);
  EXPECT_EQ(ff::cli::thread_budget(), 3u);
  setenv("FRAME_FORGE_THREADS", "zero", 1);
  EXPECT_GE(ff::cli::thread_budget(), 1u);
  unsetenv("FRAME_FORGE_THREADS");
}

TEST_F(Cli, ExecutableArgumentHandling) {
  const std::string exe = FRAME_FORGE_EXE;
  const auto cfg = config("gen.json", R"({"n":32,"perturbation":{"r":1,"a":{"constant":0.25}}})");
  auto status = [&](const std::string& args) {
    const int rc = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  };
  EXPECT_EQ(status("gen --config " + cfg.string() + " --out " + (dir_ / "x").string()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "x" / "gen.json"));
  EXPECT_EQ(status("--help"), 0);
  EXPECT_EQ(status("gen"), 2);
  EXPECT_EQ(status("nonsense --config " + cfg.string()), 2);
  EXPECT_EQ(status("gen --config " + cfg.string() + " --seed notanumber"), 2);
}
