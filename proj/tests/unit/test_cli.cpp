// Copyright 2026 The rotframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "rotframe/error.hpp"
#include "run.hpp"

namespace rotframe::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  fs::path dir_;
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rotframe_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  static int exec(const std::string& args) {
    const std::string cmd = std::string(ROTFRAME_CLI_BINARY) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
};

TEST(Config, ModeNames) {
  for (Mode m : {Mode::spectrum, Mode::intensity, Mode::ionization, Mode::point})
    EXPECT_EQ(parse_mode(mode_name(m)), m);
  EXPECT_THROW(parse_mode("sweep"), ConfigError);
}

TEST(Config, Presets) {
  EXPECT_EQ(preset_names(), (std::vector<std::string>{"fig1", "fig2", "fig3", "fig4"}));
  const RunConfig f1 = config_from_values(Mode::spectrum, preset_values("fig1"));
  EXPECT_EQ(f1.n0, 18);
  EXPECT_EQ(*f1.amplitude_vspm, 5e-6);
  ASSERT_TRUE(f1.sweep);
  EXPECT_EQ(f1.sweep->spacing, AxisSpacing::linear);
  EXPECT_NO_THROW(validate(f1));
  const RunConfig f2 = config_from_values(Mode::intensity, preset_values("fig2"));
  EXPECT_EQ(*f2.photon_energy_ev, 0.296);
  EXPECT_NO_THROW(validate(f2));
  for (const char* name : {"fig3", "fig4"}) {
    const RunConfig f = config_from_values(Mode::ionization, preset_values(name));
    EXPECT_EQ(*f.photon_energy_ev, 2.37);
    EXPECT_EQ(f.sweep->spacing, AxisSpacing::logarithmic);
    EXPECT_NO_THROW(validate(f));
  }
  EXPECT_THROW(preset_values("fig5"), ConfigError);
}

TEST(Config, ShippedIniFilesValidate) {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(ROTFRAME_PRESET_DIR)) {
    if (entry.path().extension() != ".ini") continue;
    ++seen;
    const KeyValues kv = read_config_file(entry.path().string());
    ASSERT_TRUE(kv.count("run.mode")) << entry.path();
    const Mode mode = parse_mode(kv.at("run.mode"));
    Overrides o;
    o.config_path = entry.path().string();
    EXPECT_NO_THROW(resolve_config(mode, o)) << entry.path();
  }
  EXPECT_GE(seen, 3);
}

TEST(Config, ErrorsNameTheKey) {
  const auto message = [](Mode mode, KeyValues kv) -> std::string {
    try {
      validate(config_from_values(mode, kv));
    } catch (const ConfigError& e) {
      return e.what();
    }
    return "";
  };
  KeyValues point{{"laser.amplitude_vspm", "1e-6"}, {"laser.photon_energy_ev", "2"}};
  EXPECT_EQ(message(Mode::point, point), "");
  auto bad = point;
  bad["run.n0"] = "-2";
  EXPECT_NE(message(Mode::point, bad).find("run.n0"), std::string::npos);
  bad = point;
  bad["run.n0"] = "31";
  EXPECT_NE(message(Mode::point, bad).find("run.n0"), std::string::npos);
  bad = point;
  bad["laser.photon_energy_ev"] = "abc";
  EXPECT_NE(message(Mode::point, bad).find("laser.photon_energy_ev"), std::string::npos);
  bad = point;
  bad["laser.colour"] = "red";
  EXPECT_NE(message(Mode::point, bad).find("laser.colour"), std::string::npos);
  bad = point;
  bad["state.n"] = "4";
  bad["state.l"] = "4";
  EXPECT_NE(message(Mode::point, bad).find("state"), std::string::npos);
  bad = point;
  bad["sweep.start"] = "1";
  EXPECT_NE(message(Mode::point, bad).find("sweep"), std::string::npos);
  // spectrum sweeps the photon energy, so a fixed one contradicts it
  KeyValues spec = preset_values("fig1");
  spec["laser.photon_energy_ev"] = "2";
  EXPECT_NE(message(Mode::spectrum, spec).find("laser.photon_energy_ev"), std::string::npos);
  spec = preset_values("fig1");
  EXPECT_NE(message(Mode::intensity, spec).find("run.mode"), std::string::npos);
  spec.erase("run.mode");
  EXPECT_NE(message(Mode::intensity, spec).find("laser.amplitude_vspm"), std::string::npos);
  spec = preset_values("fig1");
  spec["sweep.stop"] = "0.01";
  EXPECT_NE(message(Mode::spectrum, spec).find("sweep.stop"), std::string::npos);
  spec = preset_values("fig1");
  spec["run.mode"] = "intensity";
  EXPECT_NE(message(Mode::spectrum, spec).find("run.mode"), std::string::npos);
  spec = preset_values("fig1");
  spec["model.reduced_mass"] = "maybe";
  EXPECT_NE(message(Mode::spectrum, spec).find("model.reduced_mass"), std::string::npos);
}

TEST_F(CliTest, LayeringPresetFileFlags) {
  const std::string ini = write("a.ini", "[run]\nn0 = 12\n[sweep]\ncount = 3\n");
  Overrides o;
  o.preset = "fig2";
  o.config_path = ini;
  RunConfig c = resolve_config(Mode::intensity, o);
  EXPECT_EQ(c.n0, 12);
  EXPECT_EQ(c.sweep->count, 3);
  EXPECT_EQ(c.sweep->start, 1e-7);
  EXPECT_EQ(c.preset, "fig2");
  EXPECT_EQ(c.output_path, "rotframe_intensity.csv");
  o.n0 = 9;
  o.output_path = "x.csv";
  c = resolve_config(Mode::intensity, o);
  EXPECT_EQ(c.n0, 9);
  EXPECT_EQ(c.output_path, "x.csv");
  Overrides missing;
  missing.config_path = (dir_ / "nope.ini").string();
  EXPECT_THROW(resolve_config(Mode::point, missing), IoError);
}

TEST_F(CliTest, PointModeZeroFieldWritesIdentityRow) {
  RunConfig c = config_from_values(
      Mode::point, {{"run.n0", "3"}, {"laser.amplitude_vspm", "0"}, {"laser.photon_energy_ev", "1"}});
  c.output_path = (dir_ / "p.csv").string();
  std::ostringstream log;
  ASSERT_EQ(run(c, log), kExitOk);
  std::istringstream csv(slurp(c.output_path));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, kTransitionHeader);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    const bool self = line.rfind("1,1,0,0,1,0,0,", 0) == 0;
    EXPECT_EQ(line.substr(line.rfind(',', line.size() - 3) + 1), self ? "1,0" : "0,0") << line;
  }
  EXPECT_EQ(rows, 14);
  const auto meta = nlohmann::json::parse(slurp(metadata_path(c.output_path)));
  EXPECT_EQ(meta["constants"], "CODATA 2018");
  EXPECT_EQ(meta["exit_code"], 0);
  EXPECT_EQ(meta["points"].size(), 1u);
  EXPECT_NEAR(meta["points"][0]["row_sum"].get<double>(), 1.0, 1e-15);
  EXPECT_TRUE(meta.contains("wall_time_s"));
  EXPECT_EQ(meta["config"]["n0"], 3);
}

TEST_F(CliTest, IonizationOutputColumns) {
  const std::string ini = write("ion.ini",
                                "[run]\nn0 = 6\n[laser]\nphoton_energy_ev = 20\n"
                                "[sweep]\nstart = 1e-7\nstop = 1e-6\ncount = 2\nspacing = log\n");
  Overrides o;
  o.config_path = ini;
  o.output_path = (dir_ / "ion.csv").string();
  const RunConfig c = resolve_config(Mode::ionization, o);
  std::ostringstream log;
  ASSERT_EQ(run(c, log), kExitOk);
  std::istringstream csv(slurp(c.output_path));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, kIonizationHeader);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 8) << line;
  }
  EXPECT_GE(rows, 2);
  const auto meta = nlohmann::json::parse(slurp(metadata_path(c.output_path)));
  EXPECT_EQ(meta["points"][0]["status"], "ok");
  EXPECT_GT(meta["points"][0]["overlap"].get<double>(), 0.99);
}

TEST_F(CliTest, FailedPointKeepsOtherRows) {
  RunConfig c = config_from_values(Mode::spectrum, {{"run.n0", "3"},
                                                    {"laser.amplitude_vspm", "1e-6"},
                                                    {"sweep.start", "1"},
                                                    {"sweep.stop", "3"},
                                                    {"sweep.count", "3"},
                                                    {"debug.fail_point", "1"}});
  c.output_path = (dir_ / "f.csv").string();
  std::ostringstream log;
  EXPECT_EQ(run(c, log), kExitFailedPoint);
  const std::string text = slurp(c.output_path);
  EXPECT_NE(text.find("\n2,1,0,0,nan,nan,nan,nan,failed\n"), std::string::npos);
  EXPECT_NE(text.find("\n1,1,0,0,1,0,0,"), std::string::npos);
  EXPECT_NE(text.find("\n3,1,0,0,1,0,0,"), std::string::npos);
  const auto meta = nlohmann::json::parse(slurp(metadata_path(c.output_path)));
  EXPECT_EQ(meta["failed_points"], 1);
  EXPECT_EQ(meta["points"][1]["status"], "failed");
}

TEST_F(CliTest, ExitCodes) {
  const std::string ok = write("ok.ini", "[run]\nn0 = 2\n[laser]\namplitude_vspm = 1e-6\n"
                                         "photon_energy_ev = 3\n");
  const std::string out = (dir_ / "o.csv").string();
  EXPECT_EQ(exec("point --config " + ok + " --out " + out), 0);
  const std::string first = slurp(out);
  EXPECT_EQ(exec("point --config " + ok + " --out " + out + " --threads 2"), 0);
  EXPECT_EQ(slurp(out), first);  // deterministic
  EXPECT_EQ(exec("point --config " + ok + " --n0 -2 --out " + out), 2);
  EXPECT_EQ(exec("intensity --preset fig1 --out " + out), 2);
  EXPECT_EQ(exec("spectrum --preset fig9 --out " + out), 2);
  EXPECT_EQ(exec("frobnicate"), 2);
  EXPECT_EQ(exec("point --config " + (dir_ / "missing.ini").string()), 3);
  EXPECT_EQ(exec("point --config " + ok + " --out /nonexistent-dir/x.csv"), 3);
  const std::string bad = write("bad.ini", "[run]\nn0 = 2\n[laser]\namplitude_vspm = 1e-6\n"
                                           "[sweep]\nstart = 1\nstop = 2\ncount = 2\n"
                                           "[debug]\nfail_point = 0\n");
  EXPECT_EQ(exec("spectrum --config " + bad + " --out " + out), 1);
}

}  // namespace
}  // namespace rotframe::cli
