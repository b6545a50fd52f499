// Command line driver. Everything interesting lives behind the C API; this
// file only forwards arguments and routes the two output streams.

#include <stdio.h>

#include "fpt/fpt.h"

int main(int argc, char** argv) {
  char* report = nullptr;
  char* human = nullptr;
  int code = fpt_dispatch(argc - 1, argv + 1, &report, &human);
  if (report) {
    fputs(report, stdout);
    fpt_string_free(report);
  }
  if (human) {
    fputs(human, stderr);
    fpt_string_free(human);
  }
  return code;
}
