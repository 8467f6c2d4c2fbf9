#ifndef LOGJET_SUITE_HPP
#define LOGJET_SUITE_HPP

#include <string>
#include <vector>

#include "pres_io.hpp"

namespace logjet {

// Exit-code contract shared by every command: 0 all assertions hold,
// 1 a theorem assertion failed, 2 the input was rejected.
struct CommandResult {
  int exit_code = 0;
  std::string text;
  std::vector<std::pair<std::string, std::string>> machine;

  void put(const std::string& k, const std::string& v) {
    machine.push_back({k, v});
  }
  std::string render(bool machine_format) const;
};

CommandResult cmd_hs(const std::string& file_text, const FileReader& reader,
                     std::uint32_t order, bool show_omega, std::uint32_t cap);

CommandResult cmd_mult(const std::string& file_text, const FileReader& reader,
                       const std::string& vars_csv,
                       const std::string& equation_text,
                       const std::string& point_csv, std::uint32_t cap);

CommandResult cmd_mason_conductor(const std::string& poly_text,
                                  const std::string& var);
CommandResult cmd_mason_theorem(const std::string& f_text,
                                const std::string& g_text,
                                const std::string& h_text,
                                const std::string& var);
CommandResult cmd_mason_corollary(const std::string& f_text,
                                  const std::string& g_text,
                                  const std::string& var);
CommandResult cmd_mason_pullback(const std::string& f_text,
                                 const std::string& g_text,
                                 const std::string& vars_csv,
                                 const std::string& images_semicolon,
                                 const std::string& locus_text,
                                 const std::string& var);

CommandResult cmd_glue(const std::string& poly_text,
                       const std::string& vars_csv, bool corrupt);

// The worked-example regression suite plus the randomized property
// suites, deterministic for a fixed seed.
CommandResult cmd_suite(std::uint64_t seed);

}  // namespace logjet

#endif
