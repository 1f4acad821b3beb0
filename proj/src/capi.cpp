#include "heptad.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "heptad/engine.hpp"

struct heptad_engine {
  heptad::Engine impl;
  std::string last_error;
};

namespace {

char *dup_string(const std::string& s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

// Shared boundary: run fn, serialize its Report, translate exceptions.
template <typename Fn>
heptad_status guarded(heptad_engine *eng, char **report_json, Fn&& fn) {
  if (!eng) return HEPTAD_ERR_ARGUMENT;
  eng->last_error.clear();
  if (report_json) *report_json = nullptr;
  try {
    heptad::Report r = fn();
    if (report_json) *report_json = dup_string(r.to_json());
    return HEPTAD_OK;
  } catch (const std::invalid_argument& e) {
    eng->last_error = e.what();
    return HEPTAD_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    eng->last_error = "out of memory";
    return HEPTAD_ERR_NOMEM;
  } catch (const std::exception& e) {
    eng->last_error = e.what();
    return HEPTAD_ERR_INTERNAL;
  } catch (...) {
    eng->last_error = "unknown error";
    return HEPTAD_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

heptad_engine *heptad_engine_create(void) {
  return new (std::nothrow) heptad_engine;
}

void heptad_engine_destroy(heptad_engine *eng) { delete eng; }

heptad_status heptad_engine_set_threads(heptad_engine *eng, int threads) {
  if (!eng) return HEPTAD_ERR_ARGUMENT;
  if (threads < 1) {
    eng->last_error = "threads must be >= 1";
    return HEPTAD_ERR_ARGUMENT;
  }
  eng->impl.threads = threads;
  return HEPTAD_OK;
}

const char *heptad_engine_last_error(const heptad_engine *eng) {
  return eng ? eng->last_error.c_str() : "";
}

heptad_status heptad_verify(heptad_engine *eng, const char *suite, char **report_json) {
  return guarded(eng, report_json, [&] {
    if (!suite) throw std::invalid_argument("suite is null");
    return eng->impl.verify(suite);
  });
}

heptad_status heptad_enumerate(heptad_engine *eng, const char *what, const char *format,
                               int symmetric_only, const char *artifact_name, char **payload,
                               char **report_json) {
  if (payload) *payload = nullptr;
  return guarded(eng, report_json, [&] {
    if (!what || !format) throw std::invalid_argument("what/format is null");
    std::string body;
    heptad::Report r = eng->impl.enumerate(what, format, symmetric_only != 0, &body);
    if (artifact_name) r.artifacts.push_back(artifact_name);
    if (payload) *payload = dup_string(body);
    return r;
  });
}

heptad_status heptad_map_plane(heptad_engine *eng, const char *labels, char **report_json) {
  return guarded(eng, report_json, [&] {
    if (!labels) throw std::invalid_argument("labels is null");
    return eng->impl.map_plane(labels);
  });
}

heptad_status heptad_map_fourqubit(heptad_engine *eng, const char *label, char **report_json) {
  return guarded(eng, report_json, [&] {
    if (!label) throw std::invalid_argument("label is null");
    return eng->impl.map_fourqubit(label);
  });
}

heptad_status heptad_hexagon(heptad_engine *eng, int export_payload, const char *artifact_name,
                             char **payload, char **report_json) {
  if (payload) *payload = nullptr;
  return guarded(eng, report_json, [&] {
    std::string body;
    heptad::Report r = eng->impl.hexagon_report(export_payload != 0, &body);
    if (artifact_name) r.artifacts.push_back(artifact_name);
    if (payload && export_payload) *payload = dup_string(body);
    return r;
  });
}

heptad_status heptad_group_order(heptad_engine *eng, const char *generators, char **report_json) {
  return guarded(eng, report_json, [&] {
    if (!generators) throw std::invalid_argument("generators is null");
    return eng->impl.group_order(generators);
  });
}

heptad_status heptad_group_orbit(heptad_engine *eng, const char *seed, char **report_json) {
  return guarded(eng, report_json, [&] {
    if (!seed) throw std::invalid_argument("seed is null");
    return eng->impl.group_orbit(seed);
  });
}

int heptad_report_failed(const char *report_json) {
  if (!report_json) return 0;
  return std::strstr(report_json, "\"status\": \"fail\"") != nullptr;
}

const char *heptad_version(void) {
  static const std::string v(heptad::kVersion);
  return v.c_str();
}

const char *heptad_status_name(heptad_status status) {
  switch (status) {
    case HEPTAD_OK:
      return "ok";
    case HEPTAD_ERR_ARGUMENT:
      return "invalid argument";
    case HEPTAD_ERR_NOMEM:
      return "out of memory";
    case HEPTAD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void heptad_string_free(char *s) { std::free(s); }

}  // extern "C"
