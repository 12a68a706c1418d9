#include "swrbd/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "swrbd/certificate.hpp"
#include "swrbd/presets.hpp"

namespace swrbd::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << content;
}

SearchConfig load_config(const std::string& preset, const std::string& config_path) {
  if (!preset.empty()) return load_preset(preset);
  return parse_config(read_file(config_path));
}

int cmd_run(const std::string& preset, const std::string& config_path,
            const std::string& out_path, const std::string& format, unsigned threads,
            std::ostream& out, std::ostream& err) {
  SearchConfig config = load_config(preset, config_path);
  auto t0 = std::chrono::steady_clock::now();
  StageReport report = run_pipeline(config, threads);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  err << "swrbd: " << config.label() << ": " << report.count_candidates << " candidates in "
      << ms << " ms (" << threads << " worker" << (threads == 1 ? "" : "s") << ")\n";
  verify_lemma_hypothesis(config, report);
  if (report.lemma_verified) {
    check_minimality(config, report);
  } else {
    err << "swrbd: lemma hypothesis failed; minimality not evaluated\n";
  }
  Certificate cert = make_certificate(config, report);
  std::string payload =
      format == "text" ? render_certificate_text(cert) : certificate_to_json(cert);
  if (!out_path.empty()) {
    write_file(out_path, payload);
    err << "swrbd: wrote " << out_path << "\n";
  } else {
    out << payload;
  }
  return 0;
}

int cmd_verify(const std::string& preset, const std::string& config_path, std::ostream& out,
               std::ostream& err) {
  SearchConfig config = load_config(preset, config_path);
  std::vector<CheckResult> checks = check_config(config);
  bool all_ok = true;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " [" << c.detail << "]";
    out << "\n";
    all_ok = all_ok && c.passed;
  }
  if (!all_ok) {
    err << "swrbd: verification failed\n";
    return 1;
  }
  out << checks.size() << " checks passed for " << config.label() << "\n";
  return 0;
}

int cmd_report(const std::string& in_path, const std::string& format, std::ostream& out) {
  std::string text = read_file(in_path);
  Certificate cert = certificate_from_json(text);
  if (format == "json")
    out << text;  // byte-identical pass-through of the stored certificate
  else
    out << render_certificate_text(cert);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact enumeration of Seiberg-Witten basic classes over rational "
               "blow-down configurations"};
  app.require_subcommand(1);

  std::string preset, config_path, out_path, in_path;
  std::string format = "json";
  unsigned threads = 1;

  CLI::App* run = app.add_subcommand("run", "run the filter pipeline and emit a certificate");
  auto* run_preset = run->add_option("--preset", preset, "built-in instance label");
  auto* run_config = run->add_option("--config", config_path, "config document path");
  run_preset->excludes(run_config);
  run->add_option("--out", out_path, "write the certificate to this path");
  run->add_option("--format", format, "certificate format")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("--threads", threads, "worker count")->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "check all config invariants");
  auto* verify_preset = verify->add_option("--preset", preset, "built-in instance label");
  auto* verify_config = verify->add_option("--config", config_path, "config document path");
  verify_preset->excludes(verify_config);

  CLI::App* report = app.add_subcommand("report", "render a stored certificate");
  report->add_option("--in", in_path, "certificate path")->required();
  report->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* list = app.add_subcommand("list-presets", "list built-in instance labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "swrbd: " << e.what() << "\n";
    return 2;
  }

  try {
    if (run->parsed() || verify->parsed()) {
      if (preset.empty() && config_path.empty()) {
        err << "swrbd: one of --preset or --config is required\n";
        return 2;
      }
    }
    if (run->parsed()) return cmd_run(preset, config_path, out_path, format, threads, out, err);
    if (verify->parsed()) return cmd_verify(preset, config_path, out, err);
    if (report->parsed()) return cmd_report(in_path, format, out);
    if (list->parsed()) {
      for (const std::string& l : preset_labels()) out << l << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "swrbd: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace swrbd::cli
