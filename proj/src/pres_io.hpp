#ifndef LOGJET_PRES_IO_HPP
#define LOGJET_PRES_IO_HPP

#include <functional>
#include <optional>

#include "logalg.hpp"

namespace logjet {

// Loader for base-file references; receives the path named in the file.
using FileReader = std::function<std::string(const std::string&)>;

// Parsed form of the on-disk log-algebra presentation format. One file
// describes one log algebra; a relative construction references its base
// ring through a `base` line.
//
//   ring x y            variable list (one line, required)
//   char 0              0 or a prime (default 0)
//   order grevlex       grevlex | lex (default grevlex)
//   ideal x^2 - y^3     repeatable, one generator per line
//   log mx : x          log generator with its alpha image
//   logrel 2 mx = 3 my  optional monoid relation
//   logmode strict      strict | embedded (default strict)
//   base other.pres     optional base presentation file
//   basemap x -> x      image of a base ring variable (one per variable)
//   baselog bm -> mx    image of a base log generator (linear combination)
//
// Lines starting with '#' and blank lines are ignored. Unknown keys are
// rejected.
struct PresentationFile {
  std::vector<std::string> ring_vars;
  std::uint32_t characteristic = 0;
  OrderKind order = OrderKind::grevlex;
  std::vector<std::string> ideal_texts;
  std::vector<std::pair<std::string, std::string>> log_gens;
  std::vector<std::string> logrel_texts;
  bool embedded = false;
  std::optional<std::string> base_path;
  std::vector<std::pair<std::string, std::string>> basemap_texts;
  std::vector<std::pair<std::string, std::string>> baselog_texts;

  // canonical re-print: fixed key order, canonical polynomial forms
  std::string print() const;

  ContextPtr make_ring_context() const;
  // Build the log algebra; the reader resolves the base path when present.
  LogAlgebraPresentation to_algebra(const FileReader& read_file = {}) const;
};

PresentationFile parse_presentation(const std::string& text);

// parse + build in one step
LogAlgebraPresentation load_algebra(const std::string& text,
                                    const FileReader& read_file = {});

}  // namespace logjet

#endif
