#include <cstdlib>
#include <cstring>
#include <string>

#include "doctest.h"
#include "logjet/logjet.h"

namespace {

const char* kCuspFile =
    "ring x y\nideal x^2 - y^3\nlog mx : x\nlog my : y\nlogmode embedded\n";

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  logjet_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("presentation parse, print, free") {
  logjet_presentation* p = nullptr;
  REQUIRE(logjet_presentation_parse(kCuspFile, &p) == LOGJET_OK);
  char* printed = nullptr;
  REQUIRE(logjet_presentation_print(p, &printed) == LOGJET_OK);
  std::string text = take(printed);
  CHECK(text.find("ring x y") == 0);
  CHECK(text.find("logmode embedded") != std::string::npos);
  logjet_presentation_free(p);

  logjet_presentation* bad = nullptr;
  CHECK(logjet_presentation_parse("ring x\nbogus\n", &bad) == LOGJET_REJECTED);
  CHECK(std::strlen(logjet_last_error()) > 0);
}

TEST_CASE("hs handle: build, print, membership") {
  logjet_presentation* p = nullptr;
  REQUIRE(logjet_presentation_parse(kCuspFile, &p) == LOGJET_OK);
  logjet_hs* hs = nullptr;
  REQUIRE(logjet_hs_build(p, 1, 5, nullptr, nullptr, &hs) == LOGJET_OK);

  char* printed = nullptr;
  REQUIRE(logjet_hs_print(hs, 1, &printed) == LOGJET_OK);
  std::string text = take(printed);
  CHECK(text.find("symbols d1_x d1_y del1_mx del1_my") != std::string::npos);
  CHECK(text.find("omega rank: 1") != std::string::npos);

  int member = 0;
  REQUIRE(logjet_hs_contains(hs, "2*del1_mx - 3*del1_my", &member) ==
          LOGJET_OK);
  CHECK(member == 1);
  REQUIRE(logjet_hs_contains(hs, "del1_mx", &member) == LOGJET_OK);
  CHECK(member == 0);

  char* nf = nullptr;
  REQUIRE(logjet_hs_normal_form(hs, "x^2 - y^3 + d1_x", &nf) == LOGJET_OK);
  CHECK(take(nf) == "d1_x");

  CHECK(logjet_hs_normal_form(hs, "unknown_var", &nf) == LOGJET_REJECTED);

  logjet_hs_free(hs);
  logjet_presentation_free(p);
}

TEST_CASE("cmd surface: mult, mason, glue") {
  char* out = nullptr;
  REQUIRE(logjet_cmd_mult(nullptr, "x,y", "x^2 - y^3", "0,0", 8, 0, nullptr,
                          nullptr, &out) == LOGJET_OK);
  CHECK(take(out) == "mult = 2 (taylor) / 2 (jets)\n");

  REQUIRE(logjet_cmd_mason_conductor("z^5*(z+1)^11", "z", 1, &out) ==
          LOGJET_OK);
  std::string machine = take(out);
  CHECK(machine.find("conductor=2\n") != std::string::npos);
  CHECK(machine.find("exit=0\n") != std::string::npos);

  CHECK(logjet_cmd_mason_theorem("z", "-z", "0", "z", 0, &out) ==
        LOGJET_REJECTED);
  logjet_string_free(out);
  out = nullptr;

  REQUIRE(logjet_cmd_glue("x0^2*x2 - x1^3", "x0,x1,x2", 0, 0, &out) ==
          LOGJET_OK);
  CHECK(take(out).find("all chart overlaps glue") == 0);

  CHECK(logjet_cmd_glue("x0^2*x2 - x1^3", "x0,x1,x2", 1, 0, &out) ==
        LOGJET_ASSERTION_FAILED);
  logjet_string_free(out);
}

TEST_CASE("base file resolution through the reader callback") {
  const char* total = "ring x y\nbase b.pres\nbasemap x -> x\n";
  auto reader = [](const char* path, void*) -> char* {
    if (std::string(path) != "b.pres") return nullptr;
    const char* base = "ring x\n";
    char* out = static_cast<char*>(std::malloc(std::strlen(base) + 1));
    std::strcpy(out, base);
    return out;
  };
  logjet_presentation* p = nullptr;
  REQUIRE(logjet_presentation_parse(total, &p) == LOGJET_OK);
  logjet_hs* hs = nullptr;
  REQUIRE(logjet_hs_build(p, 1, 5, reader, nullptr, &hs) == LOGJET_OK);
  int member = 0;
  REQUIRE(logjet_hs_contains(hs, "d1_x", &member) == LOGJET_OK);
  CHECK(member == 1);
  logjet_hs_free(hs);

  // missing base file surfaces as a rejection
  logjet_hs* hs2 = nullptr;
  auto bad_reader = [](const char*, void*) -> char* { return nullptr; };
  CHECK(logjet_hs_build(p, 1, 5, bad_reader, nullptr, &hs2) ==
        LOGJET_REJECTED);
  logjet_presentation_free(p);
}
