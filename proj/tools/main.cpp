#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pcross/commands.hpp"
#include "pcross/error.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw pcross::Error(pcross::ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of twisted partial Hopf actions and their crossed products"};
  app.require_subcommand(1);

  std::string field_text;
  std::string format = "json";
  unsigned parallel = 1;
  bool timing = false;
  app.add_option("--field", field_text, "rational | prime:<p> (overrides the definition file)");
  app.add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--parallel", parallel, "worker threads for verification sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "include wall time in the report");

  std::string spec_path;
  std::string spec_out;
  const std::map<std::string, std::string> about{
      {"verify", "check the Hopf algebra, the algebra and every action axiom"},
      {"build-crossed", "build the crossed product, its coaction and canonical map"},
      {"globalize", "construct the enveloping action of a group partial action"},
      {"morita", "build and check the Morita context against the enveloping action"},
      {"gauge", "gauge the action by the given map and compare crossed products"},
      {"separability", "compute the separability idempotent of the extension"},
      {"report", "run every command the definition file has inputs for"}};
  for (const auto& name : pcross::command_names()) {
    auto* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("spec", spec_path, "definition file (JSON), '-' for stdin")->required();
    if (name == "globalize") sub->add_option("-o,--output", spec_out, "write the enveloping datum here");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  pcross::RunOptions options;
  options.format = format == "text" ? pcross::OutputFormat::Text : pcross::OutputFormat::Json;
  options.parallel = parallel;
  options.timing = timing;

  std::optional<pcross::Field> field;
  std::string text;
  try {
    if (!field_text.empty()) field = pcross::Field::parse(field_text);
    text = slurp(spec_path);
  } catch (const pcross::Error& e) {
    std::cerr << "error " << pcross::to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  }

  const pcross::RunResult result = pcross::run_text(command, text, field, options);
  std::cout << result.output;
  if (result.spec_out && !spec_out.empty()) {
    std::ofstream out(spec_out);
    out << *result.spec_out;
    if (!out) {
      std::cerr << "error: cannot write " << spec_out << '\n';
      return 2;
    }
  }
  return result.exit_code;
}
