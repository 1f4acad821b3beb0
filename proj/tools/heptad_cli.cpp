// Batch front end. Every subcommand prints one JSON report (or a CSV payload)
// and exits 0 on pass/info, 1 on verification failure, 2 on usage errors.
// Reports are byte-stable across runs to keep them diffable.

#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "heptad.h"

namespace {

struct Owned {
  char *p = nullptr;
  ~Owned() { heptad_string_free(p); }
};

struct EngineHandle {
  heptad_engine *eng = nullptr;
  ~EngineHandle() { heptad_engine_destroy(eng); }
};

bool write_file(const std::string &path, const char *text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  f.flush();
  return bool(f);
}

int api_error(heptad_engine *eng, heptad_status rc) {
  std::fprintf(stderr, "heptad: %s: %s\n", heptad_status_name(rc),
               heptad_engine_last_error(eng));
  return rc == HEPTAD_ERR_ARGUMENT ? 2 : 1;
}

// Route a finished report to stdout or --out; exit code mirrors its status.
int deliver(heptad_engine *eng, heptad_status rc, const char *report, const std::string &out) {
  if (rc != HEPTAD_OK) return api_error(eng, rc);
  if (out.empty()) {
    std::fputs(report, stdout);
  } else if (!write_file(out, report)) {
    std::fprintf(stderr, "heptad: cannot write %s\n", out.c_str());
    return 1;
  }
  return heptad_report_failed(report) ? 1 : 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact engine for the commuting-heptad geometry of the three-qubit Pauli group"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for the pentagram search")
      ->check(CLI::Range(1, 512));
  app.set_version_flag("--version", heptad_version());

  std::string verify_suite = "all", verify_out;
  auto *verify = app.add_subcommand("verify", "run a verification suite and report its metrics");
  verify->add_option("suite", verify_suite, "all, group, bijection, pentagrams, hexagon, spreads")
      ->check(CLI::IsMember({"all", "group", "bijection", "pentagrams", "hexagon", "spreads"}));
  verify->add_option("--out", verify_out, "write the report here instead of stdout");

  std::string enum_what, enum_format = "json", enum_out;
  bool enum_sym = false;
  auto *enumerate = app.add_subcommand("enumerate", "export one of the object families");
  enumerate->add_option("what", enum_what, "planes, lines, edges, pentagrams, spreads")
      ->required()
      ->check(CLI::IsMember({"planes", "lines", "edges", "pentagrams", "spreads"}));
  enumerate->add_option("--format", enum_format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_flag("--symmetric-only", enum_sym,
                      "only the all-symmetric planes or pentagrams");
  enumerate->add_option("--out", enum_out,
                        "write the export here; the report then goes to stdout");

  std::string map_plane_arg, map_fourqubit_arg, map_out;
  auto *map = app.add_subcommand("map", "translate between heptads and four-qubit classes");
  auto *plane_opt =
      map->add_option("--plane", map_plane_arg, "comma-separated commuting three-qubit operators");
  auto *four_opt =
      map->add_option("--fourqubit", map_fourqubit_arg, "symmetric four-qubit operator");
  plane_opt->excludes(four_opt);
  four_opt->excludes(plane_opt);
  map->add_option("--out", map_out, "write the report here instead of stdout");

  bool hex_export = false, hex_check = false;
  std::string hex_out;
  auto *hex = app.add_subcommand("hexagon", "check the hexagon axioms or export the model");
  hex->add_flag("--export", hex_export, "emit the full point/line model");
  hex->add_flag("--check", hex_check, "verify the defining axioms (default)");
  hex->add_option("--out", hex_out, "write the report here instead of stdout");

  std::string group_order_arg, group_orbit_arg, group_out;
  auto *group = app.add_subcommand("group", "orders and orbits of the symmetry generators");
  auto *order_opt = group->add_option(
      "--order", group_order_arg,
      "comma-separated generators from dalpha,dbeta,dgamma,ralpha,rbeta,rgamma");
  auto *orbit_opt = group->add_option(
      "--orbit", group_orbit_arg, "seed operator label, or three three-qubit labels for a plane");
  order_opt->excludes(orbit_opt);
  orbit_opt->excludes(order_opt);
  group->add_option("--out", group_out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  EngineHandle h;
  h.eng = heptad_engine_create();
  if (!h.eng) {
    std::fprintf(stderr, "heptad: cannot create engine\n");
    return 1;
  }
  if (heptad_engine_set_threads(h.eng, threads) != HEPTAD_OK) {
    std::fprintf(stderr, "heptad: %s\n", heptad_engine_last_error(h.eng));
    return 2;
  }

  if (verify->parsed()) {
    Owned report;
    auto rc = heptad_verify(h.eng, verify_suite.c_str(), &report.p);
    return deliver(h.eng, rc, report.p, verify_out);
  }

  if (enumerate->parsed()) {
    Owned report, payload;
    const char *artifact = enum_out.empty() ? nullptr : enum_out.c_str();
    auto rc = heptad_enumerate(h.eng, enum_what.c_str(), enum_format.c_str(), enum_sym ? 1 : 0,
                               artifact, &payload.p, &report.p);
    if (rc != HEPTAD_OK) return api_error(h.eng, rc);
    if (enum_format == "csv") {
      if (enum_out.empty()) {
        std::fputs(payload.p, stdout);
      } else {
        if (!write_file(enum_out, payload.p)) {
          std::fprintf(stderr, "heptad: cannot write %s\n", enum_out.c_str());
          return 1;
        }
        std::fputs(report.p, stdout);
      }
      return 0;
    }
    return deliver(h.eng, HEPTAD_OK, report.p, enum_out);
  }

  if (map->parsed()) {
    if (plane_opt->count() + four_opt->count() != 1) {
      std::fprintf(stderr, "heptad: map needs exactly one of --plane or --fourqubit\n");
      return 2;
    }
    Owned report;
    heptad_status rc;
    if (plane_opt->count())
      rc = heptad_map_plane(h.eng, map_plane_arg.c_str(), &report.p);
    else
      rc = heptad_map_fourqubit(h.eng, map_fourqubit_arg.c_str(), &report.p);
    return deliver(h.eng, rc, report.p, map_out);
  }

  if (hex->parsed()) {
    if (hex_export && hex_check) {
      std::fprintf(stderr, "heptad: hexagon takes --check or --export, not both\n");
      return 2;
    }
    Owned report;
    auto rc = heptad_hexagon(h.eng, hex_export ? 1 : 0,
                             hex_out.empty() ? nullptr : hex_out.c_str(), nullptr, &report.p);
    return deliver(h.eng, rc, report.p, hex_out);
  }

  if (group->parsed()) {
    if (order_opt->count() + orbit_opt->count() != 1) {
      std::fprintf(stderr, "heptad: group needs exactly one of --order or --orbit\n");
      return 2;
    }
    Owned report;
    heptad_status rc;
    if (order_opt->count())
      rc = heptad_group_order(h.eng, group_order_arg.c_str(), &report.p);
    else
      rc = heptad_group_orbit(h.eng, group_orbit_arg.c_str(), &report.p);
    return deliver(h.eng, rc, report.p, group_out);
  }

  std::fprintf(stderr, "heptad: no subcommand\n");
  return 2;
}
