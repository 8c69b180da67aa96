// Command-line front end; talks to the shared library through the C API only.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ruled/ruled.h"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

ruled_format to_format(const std::string& name) {
  return name == "json-lines" ? RULED_FORMAT_JSON_LINES : RULED_FORMAT_TEXT;
}

// Reports go to stdout; input errors (exit code 4) go to stderr.
int emit(ruled_status status, char* out, int exit_code) {
  if (status != RULED_OK) {
    std::cerr << "error: " << ruled_status_str(status) << "\n";
    ruled_string_free(out);
    return 4;
  }
  const std::string text = out ? out : "";
  ruled_string_free(out);
  (exit_code == 4 ? std::cerr : std::cout) << text;
  return exit_code;
}

int with_config(const std::string& path, int (*run)(const char*)) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read config file '" << path << "'\n";
    return 4;
  }
  return run(text.c_str());
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->envname("RULED_FORMAT")
      ->check(CLI::IsMember({"text", "json-lines"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact intersection theory, polarization construction, splitting-type "
      "strata, and moduli-dimension audits on blown-up ruled surfaces"};
  app.require_subcommand(1);

  std::string cfg_path;
  std::string format = "text";
  long long rank = 0, d = 0, min_part = -10;

  CLI::App* surface = app.add_subcommand("surface", "surface-level checks");
  surface->require_subcommand(1);
  CLI::App* check = surface->add_subcommand("check", "validate a config and print the surface data");
  check->add_option("config", cfg_path, "config file")->required();

  CLI::App* polarize =
      app.add_subcommand("polarize", "construct or test a polarization with H.(K_S+f) < 0");
  polarize->add_option("config", cfg_path, "config file")->required();

  CLI::App* reduce = app.add_subcommand(
      "reduce", "run the reduction to the geometrically ruled base with dimension audits");
  reduce->add_option("config", cfg_path, "config file")->required();
  add_format_option(reduce, format);

  CLI::App* strata =
      app.add_subcommand("strata", "stratify sheaves on P^1 by splitting type");
  strata->add_option("--rank", rank, "rank r >= 2")->required();
  strata->add_option("--d", d, "degree parameter, 0 <= d < r")->required();
  strata->add_option("--min-part", min_part, "enumeration window floor");
  add_format_option(strata, format);

  CLI::App* report = app.add_subcommand("report", "full pipeline report");
  report->add_option("config", cfg_path, "config file")->required();
  add_format_option(report, format);

  CLI11_PARSE(app, argc, argv);

  char* out = nullptr;
  int exit_code = 0;

  if (check->parsed()) {
    return with_config(cfg_path, [](const char* text) {
      char* out = nullptr;
      int exit_code = 0;
      return emit(ruled_cmd_surface_check(text, &out, &exit_code), out, exit_code);
    });
  }
  if (polarize->parsed()) {
    return with_config(cfg_path, [](const char* text) {
      char* out = nullptr;
      int exit_code = 0;
      return emit(ruled_cmd_polarize(text, &out, &exit_code), out, exit_code);
    });
  }
  if (reduce->parsed()) {
    std::string text;
    if (!read_file(cfg_path, text)) {
      std::cerr << "error: cannot read config file '" << cfg_path << "'\n";
      return 4;
    }
    return emit(ruled_cmd_reduce(text.c_str(), to_format(format), &out, &exit_code), out,
                exit_code);
  }
  if (strata->parsed()) {
    return emit(ruled_cmd_strata(rank, d, min_part, to_format(format), &out, &exit_code),
                out, exit_code);
  }
  if (report->parsed()) {
    std::string text;
    if (!read_file(cfg_path, text)) {
      std::cerr << "error: cannot read config file '" << cfg_path << "'\n";
      return 4;
    }
    return emit(ruled_cmd_report(text.c_str(), to_format(format), &out, &exit_code), out,
                exit_code);
  }
  return 0;
}
