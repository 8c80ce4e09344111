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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "rotframe/error.hpp"
#include "run.hpp"

int main(int argc, char** argv) {
  using namespace rotframe::cli;

  CLI::App app{"Hydrogen in a circularly polarised laser: dressed-state transition and "
               "ionization scans"};
  app.set_version_flag("--version", ROTFRAME_VERSION);
  app.require_subcommand(1);

  Overrides o;
  std::string config_path, preset, out;
  int n0 = 0, threads = 0;
  struct Sub {
    const char* name;
    Mode mode;
    const char* help;
  };
  const Sub subs[] = {
      {"spectrum", Mode::spectrum, "sweep the photon energy at fixed amplitude"},
      {"intensity", Mode::intensity, "sweep the amplitude at fixed photon energy"},
      {"ionization", Mode::ionization, "photoionization of the tracked state over an amplitude sweep"},
      {"point", Mode::point, "one (amplitude, photon energy) evaluation"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", config_path, "INI configuration file");
    sub->add_option("--preset", preset, "built-in parameter set")
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
    sub->add_option("--n0", n0, "basis truncation (largest n)");
    sub->add_option("--out", out, "CSV output path (metadata goes to <out>.meta.json)");
    sub->add_option("--threads", threads, "concurrent scan points (default $ROTFRAME_THREADS or 1)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  Mode mode = Mode::point;
  for (const Sub& s : subs) {
    CLI::App* sub = app.get_subcommand(s.name);
    if (sub->parsed()) {
      mode = s.mode;
      if (sub->count("--config")) o.config_path = config_path;
      if (sub->count("--preset")) o.preset = preset;
      if (sub->count("--n0")) o.n0 = n0;
      if (sub->count("--out")) o.output_path = out;
      if (sub->count("--threads")) o.threads = threads;
    }
  }

  RunConfig config;
  try {
    config = resolve_config(mode, o);
  } catch (const rotframe::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const rotframe::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    return run(config, std::cerr);
  } catch (const rotframe::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const rotframe::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const rotframe::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailedPoint;
  }
}
