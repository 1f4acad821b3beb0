/* Compiled as C: exercises the shared library through the public header
 * only, checking the ABI surface works without any C++ runtime help. */

#include <stdio.h>
#include <string.h>

#include "heptad.h"

static int failures = 0;

static void expect(int ok, const char *what) {
  if (!ok) {
    ++failures;
    fprintf(stderr, "FAIL %s\n", what);
  }
}

int main(void) {
  expect(strcmp(heptad_version(), "1.0.0") == 0, "version string");
  expect(strcmp(heptad_status_name(HEPTAD_OK), "ok") == 0, "status name");

  heptad_engine *eng = heptad_engine_create();
  expect(eng != NULL, "engine creation");
  if (!eng) return 1;
  expect(heptad_engine_last_error(eng)[0] == '\0', "fresh engine has no error");

  char *report = NULL;
  heptad_status st = heptad_map_fourqubit(eng, "XIII", &report);
  expect(st == HEPTAD_OK, "map fourqubit status");
  expect(report != NULL, "map fourqubit report");
  if (report) {
    expect(!heptad_report_failed(report), "map report not failed");
    expect(strstr(report, "\"four_qubit\": \"XIII\"") != NULL, "report names the class");
    heptad_string_free(report);
  }

  report = NULL;
  st = heptad_map_fourqubit(eng, "not a label", &report);
  expect(st == HEPTAD_ERR_ARGUMENT, "bad label rejected");
  expect(report == NULL, "no report on error");
  expect(heptad_engine_last_error(eng)[0] != '\0', "error message recorded");

  char *payload = NULL;
  report = NULL;
  st = heptad_enumerate(eng, "lines", "csv", 0, NULL, &payload, &report);
  expect(st == HEPTAD_OK, "enumerate lines status");
  expect(payload != NULL && strncmp(payload, "index,op1,op2,op3\n", 18) == 0,
         "csv header");
  heptad_string_free(payload);
  heptad_string_free(report);

  heptad_engine_destroy(eng);
  heptad_engine_destroy(NULL); /* must be a no-op */

  if (failures == 0) printf("c smoke test passed\n");
  return failures == 0 ? 0 : 1;
}
