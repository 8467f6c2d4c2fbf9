#include "logjet/logjet.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hasse.hpp"
#include "suite.hpp"

using namespace logjet;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

logjet_status set_error(const std::string& msg, logjet_status code) {
  g_last_error = msg;
  return code;
}

FileReader wrap_reader(logjet_read_file_fn reader, void* userdata) {
  if (!reader) return {};
  return [reader, userdata](const std::string& path) -> std::string {
    char* raw = reader(path.c_str(), userdata);
    if (!raw) throw DomainError("cannot read base file: " + path);
    std::string text(raw);
    std::free(raw);
    return text;
  };
}

logjet_status run_command(const CommandResult& r, int machine_format,
                          char** out) {
  if (out) *out = dup_string(r.render(machine_format != 0));
  switch (r.exit_code) {
    case 0:
      return LOGJET_OK;
    case 1:
      return set_error("assertion failed", LOGJET_ASSERTION_FAILED);
    default:
      return set_error(r.text, LOGJET_REJECTED);
  }
}

template <typename Fn>
logjet_status guard(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return set_error(e.what(), LOGJET_REJECTED);
  } catch (const Error& e) {
    return set_error(e.what(), LOGJET_REJECTED);
  } catch (const std::exception& e) {
    return set_error(e.what(), LOGJET_ERROR);
  }
}

}  // namespace

struct logjet_presentation {
  PresentationFile file;
};

struct logjet_hs {
  HSPresentation hs;
};

extern "C" {

const char* logjet_version(void) { return "0.1.0"; }

const char* logjet_last_error(void) { return g_last_error.c_str(); }

void logjet_string_free(char* s) { std::free(s); }

logjet_status logjet_presentation_parse(const char* text,
                                        logjet_presentation** out) {
  if (!text || !out) return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    auto* p = new logjet_presentation{parse_presentation(text)};
    *out = p;
    return LOGJET_OK;
  });
}

logjet_status logjet_presentation_print(const logjet_presentation* p,
                                        char** out) {
  if (!p || !out) return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    *out = dup_string(p->file.print());
    return LOGJET_OK;
  });
}

void logjet_presentation_free(logjet_presentation* p) { delete p; }

logjet_status logjet_hs_build(const logjet_presentation* p, uint32_t order,
                              uint32_t order_cap, logjet_read_file_fn reader,
                              void* userdata, logjet_hs** out) {
  if (!p || !out) return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    HSPresentation::BuildOptions opts;
    opts.embedded = p->file.embedded;
    opts.order_cap = order_cap == 0 ? 5 : order_cap;
    auto alg = p->file.to_algebra(wrap_reader(reader, userdata));
    *out = new logjet_hs{HSPresentation::build(alg, order, opts)};
    return LOGJET_OK;
  });
}

logjet_status logjet_hs_print(const logjet_hs* hs, int show_omega,
                              char** out) {
  if (!hs || !out) return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    std::string s = hs->hs.print();
    if (show_omega && hs->hs.order() == 1) s += hs->hs.omega().to_string();
    *out = dup_string(s);
    return LOGJET_OK;
  });
}

logjet_status logjet_hs_normal_form(const logjet_hs* hs, const char* poly,
                                    char** out) {
  if (!hs || !poly || !out) return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    Polynomial f = parse_polynomial(hs->hs.symbol_context(), poly);
    *out = dup_string(hs->hs.ring()->normal_form(f).to_string());
    return LOGJET_OK;
  });
}

logjet_status logjet_hs_contains(const logjet_hs* hs, const char* poly,
                                 int* out) {
  if (!hs || !poly || !out) return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    Polynomial f = parse_polynomial(hs->hs.symbol_context(), poly);
    *out = hs->hs.ring()->contains(f) ? 1 : 0;
    return LOGJET_OK;
  });
}

void logjet_hs_free(logjet_hs* hs) { delete hs; }

logjet_status logjet_cmd_hs(const char* file_text, uint32_t order,
                            int show_omega, uint32_t cap, int machine_format,
                            logjet_read_file_fn reader, void* userdata,
                            char** out) {
  if (!file_text) return set_error("null file text", LOGJET_REJECTED);
  return guard([&] {
    auto r = cmd_hs(file_text, wrap_reader(reader, userdata), order,
                    show_omega != 0, cap == 0 ? 5 : cap);
    return run_command(r, machine_format, out);
  });
}

logjet_status logjet_cmd_mult(const char* file_text, const char* vars_csv,
                              const char* equation, const char* point_csv,
                              uint32_t cap, int machine_format,
                              logjet_read_file_fn reader, void* userdata,
                              char** out) {
  if (!equation || !point_csv)
    return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    auto r = cmd_mult(file_text ? file_text : "",
                      wrap_reader(reader, userdata),
                      vars_csv ? vars_csv : "", equation, point_csv,
                      cap == 0 ? 16 : cap);
    return run_command(r, machine_format, out);
  });
}

logjet_status logjet_cmd_mason_conductor(const char* poly, const char* var,
                                         int machine_format, char** out) {
  if (!poly) return set_error("null polynomial", LOGJET_REJECTED);
  return guard([&] {
    auto r = cmd_mason_conductor(poly, var ? var : "z");
    return run_command(r, machine_format, out);
  });
}

logjet_status logjet_cmd_mason_theorem(const char* f, const char* g,
                                       const char* h, const char* var,
                                       int machine_format, char** out) {
  if (!f || !g || !h) return set_error("null polynomial", LOGJET_REJECTED);
  return guard([&] {
    auto r = cmd_mason_theorem(f, g, h, var ? var : "z");
    return run_command(r, machine_format, out);
  });
}

logjet_status logjet_cmd_mason_corollary(const char* f, const char* g,
                                         const char* var, int machine_format,
                                         char** out) {
  if (!f || !g) return set_error("null polynomial", LOGJET_REJECTED);
  return guard([&] {
    auto r = cmd_mason_corollary(f, g, var ? var : "z");
    return run_command(r, machine_format, out);
  });
}

logjet_status logjet_cmd_mason_pullback(const char* f, const char* g,
                                        const char* vars_csv,
                                        const char* images, const char* locus,
                                        const char* var, int machine_format,
                                        char** out) {
  if (!f || !g || !vars_csv || !images || !locus)
    return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    auto r = cmd_mason_pullback(f, g, vars_csv, images, locus,
                                var ? var : "z");
    return run_command(r, machine_format, out);
  });
}

logjet_status logjet_cmd_glue(const char* poly, const char* vars_csv,
                              int corrupt, int machine_format, char** out) {
  if (!poly || !vars_csv) return set_error("null argument", LOGJET_REJECTED);
  return guard([&] {
    auto r = cmd_glue(poly, vars_csv, corrupt != 0);
    return run_command(r, machine_format, out);
  });
}

logjet_status logjet_cmd_suite(uint64_t seed, int machine_format, char** out) {
  return guard([&] {
    auto r = cmd_suite(seed);
    return run_command(r, machine_format, out);
  });
}

}  // extern "C"
