// Command-line front end.  Everything goes through the C API: the flags are
// packed into a JSON request and handed to pptlab_run.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "pptlab/pptlab.h"

namespace {

struct Flags {
  unsigned p = 0;
  std::string vars;
  std::string f;
  unsigned depth = 8;
  unsigned emax = 5;
  bool json = false;
  bool trace = false;
  bool strict_r1 = false;
  std::optional<long long> max_monomials;
  std::optional<long long> max_generators;
  std::string cache_dir;
  bool no_cache = false;
  std::string filter;
};

void add_common(CLI::App* sub, Flags& fl, bool needs_input) {
  if (needs_input) {
    sub->add_option("--p", fl.p, "prime (2..13)")->required();
    sub->add_option("--vars", fl.vars, "variables, e.g. x,y,z or x1..x5")->required();
    sub->add_option("--f", fl.f, "polynomial, e.g. \"x^3+y^3+z^3\"")->required();
    sub->add_option("--depth", fl.depth, "number of sequence terms")->capture_default_str();
    sub->add_flag("--trace", fl.trace, "print the ideal of every step");
    sub->add_flag("--strict-r1", fl.strict_r1,
                  "report r = 1 and uncertified all-(p-1) windows as inconclusive");
    sub->add_option("--cache-dir", fl.cache_dir, "result cache directory (or $PPTLAB_CACHE)");
    sub->add_flag("--no-cache", fl.no_cache, "ignore the result cache");
  }
  sub->add_flag("--json", fl.json, "emit JSON");
  sub->add_option("--max-monomials", fl.max_monomials, "term cap per reduction");
  sub->add_option("--max-generators", fl.max_generators, "input cap per reduction");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pptlab: splitting-order sequences and perfectoid pure thresholds"};
  app.set_version_flag("--version", std::string(pptlab_version()));
  app.require_subcommand(1);

  Flags fl;
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"sequence", "splitting-order sequence s_0..s_depth"},
      {"ppt", "perfectoid pure threshold (partial sum and exact value)"},
      {"classify", "perfectoid purity verdict"},
      {"qfs-height", "quasi-F-split height read off the sequence"},
      {"fpt", "nu(p^e) table and F-pure threshold approximation"},
      {"criteria", "shortcut criteria C1-C3"},
  };
  for (const auto& s : subs) add_common(app.add_subcommand(s.name, s.help), fl, true);
  app.get_subcommand("fpt")->add_option("--emax", fl.emax, "largest e")->capture_default_str();
  auto* corpus = app.add_subcommand("corpus", "run the built-in examples and diff them");
  add_common(corpus, fl, false);
  corpus->add_option("--filter", fl.filter, "substring of a row name or tag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit 0; malformed command lines count as invalid input
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  nlohmann::json req = {{"command", command}, {"json", fl.json}};
  if (command != "corpus") {
    req["p"] = fl.p;
    req["vars"] = fl.vars;
    req["f"] = fl.f;
    req["depth"] = fl.depth;
    req["emax"] = fl.emax;
    req["trace"] = fl.trace;
    req["strict_r1"] = fl.strict_r1;
    req["no_cache"] = fl.no_cache;
    if (!fl.cache_dir.empty()) req["cache_dir"] = fl.cache_dir;
  } else {
    req["filter"] = fl.filter;
  }
  if (fl.max_monomials) req["max_monomials"] = *fl.max_monomials;
  if (fl.max_generators) req["max_generators"] = *fl.max_generators;

  char* out_json = nullptr;
  char* out_text = nullptr;
  int exit_code = 4;
  const std::string body = req.dump();
  if (pptlab_run(body.c_str(), fl.json ? &out_json : nullptr,
                 fl.json ? nullptr : &out_text, &exit_code) != PPTLAB_OK) {
    std::cerr << "error: " << pptlab_last_error() << "\n";
    return 4;
  }
  if (out_json) {
    std::cout << out_json << "\n";
  } else if (out_text) {
    (exit_code == 2 || exit_code == 3 || exit_code == 4 ? std::cerr : std::cout) << out_text;
  }
  pptlab_string_free(out_json);
  pptlab_string_free(out_text);
  return exit_code;
}
