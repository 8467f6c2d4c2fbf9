// Command-line frontend for the logjet shared library. Parses arguments,
// reads presentation files, and prints the reports rendered by the engine;
// every computation happens behind the C interface.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "logjet/logjet.h"

namespace {

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// base references are resolved relative to the directory of the input file
struct BaseDir {
  std::string dir;
};

char* base_reader(const char* path, void* userdata) {
  auto* bd = static_cast<BaseDir*>(userdata);
  std::filesystem::path p(path);
  if (p.is_relative() && !bd->dir.empty()) p = bd->dir / p;
  std::ifstream in(p);
  if (!in) return nullptr;
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

int finish(logjet_status status, char* report) {
  if (report) {
    std::cout << report;
    logjet_string_free(report);
  }
  if (status == LOGJET_REJECTED || status == LOGJET_ERROR)
    std::cerr << "error: " << logjet_last_error() << "\n";
  return static_cast<int>(status) == 3 ? 2 : static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact log jet rings, jet multiplicity and the polynomial "
               "ABC suite"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  // hs: print the order-n presentation of a log algebra file
  auto* hs = app.add_subcommand("hs", "build a log Hasse-Schmidt presentation");
  std::string hs_file;
  std::uint32_t hs_order = 1, hs_cap = 5;
  bool show_omega = false;
  hs->add_option("file", hs_file, "presentation file")->required();
  hs->add_option("--order", hs_order, "jet order n")->capture_default_str();
  hs->add_option("--cap", hs_cap, "order cap")->capture_default_str();
  hs->add_flag("--show-omega", show_omega,
               "print the degree-1 module presentation (order 1)");

  // mult: multiplicity of a divisor at a point
  auto* mult = app.add_subcommand("mult", "multiplicity of a divisor at a "
                                          "rational point");
  std::string mult_file, mult_vars, mult_eq, mult_point;
  std::uint32_t mult_cap = 16;
  mult->add_option("file", mult_file, "ambient presentation file");
  mult->add_option("--vars", mult_vars, "free ambient variables, e.g. x,y");
  mult->add_option("--equation", mult_eq, "local equation")->required();
  mult->add_option("--point", mult_point, "rational point, e.g. 0,0")
      ->required();
  mult->add_option("--cap", mult_cap, "jet order cap")->capture_default_str();

  // mason: conductor, theorem, corollary, pullback bound
  auto* mason = app.add_subcommand("mason", "polynomial ABC machinery");
  mason->set_help_flag("--help", "print help");  // frees -h / --h for data
  std::string m_f, m_g, m_h, m_conductor, m_var = "z";
  std::string m_vars, m_images, m_locus;
  mason->add_option("--f", m_f, "first polynomial");
  mason->add_option("--g", m_g, "second polynomial");
  mason->add_option("--h", m_h, "third polynomial (Mason's theorem)");
  mason->add_option("--conductor", m_conductor, "conductor of one polynomial");
  mason->add_option("--var", m_var, "line variable")->capture_default_str();
  mason->add_option("--pullback-vars", m_vars, "ambient variables");
  mason->add_option("--pullback-images", m_images,
                    "images of the ambient variables, ';'-separated");
  mason->add_option("--pullback-locus", m_locus, "removed-point locus");

  // glue: projective chart gluing of the log differential
  auto* glue = app.add_subcommand("glue", "chart gluing on projective space");
  std::string g_poly, g_vars = "x0,x1,x2";
  bool g_corrupt = false;
  glue->add_option("--poly", g_poly, "homogeneous polynomial")->required();
  glue->add_option("--vars", g_vars, "homogeneous coordinates")
      ->capture_default_str();
  glue->add_flag("--corrupt", g_corrupt, "drop a term (negative control)");

  // suite: the full paper-example regression suite
  auto* suite = app.add_subcommand("suite", "run the paper-example suite");
  std::uint64_t seed = 42;
  suite->add_option("--seed", seed, "seed for the randomized suites")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  const int machine = format == "machine" ? 1 : 0;
  char* report = nullptr;

  if (hs->parsed()) {
    std::string text = read_file_or_die(hs_file);
    BaseDir bd{std::filesystem::path(hs_file).parent_path().string()};
    auto status = logjet_cmd_hs(text.c_str(), hs_order, show_omega ? 1 : 0,
                                hs_cap, machine, base_reader, &bd, &report);
    return finish(status, report);
  }
  if (mult->parsed()) {
    std::string text;
    BaseDir bd;
    if (!mult_file.empty()) {
      text = read_file_or_die(mult_file);
      bd.dir = std::filesystem::path(mult_file).parent_path().string();
    }
    auto status = logjet_cmd_mult(
        mult_file.empty() ? nullptr : text.c_str(),
        mult_vars.empty() ? nullptr : mult_vars.c_str(), mult_eq.c_str(),
        mult_point.c_str(), mult_cap, machine, base_reader, &bd, &report);
    return finish(status, report);
  }
  if (mason->parsed()) {
    logjet_status status;
    if (!m_conductor.empty()) {
      status = logjet_cmd_mason_conductor(m_conductor.c_str(), m_var.c_str(),
                                          machine, &report);
    } else if (!m_images.empty() || !m_locus.empty()) {
      status = logjet_cmd_mason_pullback(m_f.c_str(), m_g.c_str(),
                                         m_vars.c_str(), m_images.c_str(),
                                         m_locus.c_str(), m_var.c_str(),
                                         machine, &report);
    } else if (!m_h.empty()) {
      status = logjet_cmd_mason_theorem(m_f.c_str(), m_g.c_str(), m_h.c_str(),
                                        m_var.c_str(), machine, &report);
    } else if (!m_f.empty() && !m_g.empty()) {
      status = logjet_cmd_mason_corollary(m_f.c_str(), m_g.c_str(),
                                          m_var.c_str(), machine, &report);
    } else {
      std::cerr << "error: mason needs --conductor, or --f and --g\n";
      return 2;
    }
    return finish(status, report);
  }
  if (glue->parsed()) {
    auto status = logjet_cmd_glue(g_poly.c_str(), g_vars.c_str(),
                                  g_corrupt ? 1 : 0, machine, &report);
    return finish(status, report);
  }
  if (suite->parsed()) {
    auto status = logjet_cmd_suite(seed, machine, &report);
    return finish(status, report);
  }
  return 2;
}
