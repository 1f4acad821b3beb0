#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "heptad/group.hpp"
#include "heptad/hexagon.hpp"
#include "heptad/mermin.hpp"
#include "heptad/plucker.hpp"
#include "heptad/polar.hpp"

namespace heptad {

inline constexpr std::string_view kVersion = "1.0.0";

struct Report {
  std::string command;
  std::string status;  // "pass", "fail" or "info"
  std::map<std::string, long long> metrics;
  std::vector<std::string> artifacts;
  nlohmann::json data;  // optional payload, omitted when null

  // Deterministic serialization: alphabetical keys, two-space indent,
  // trailing newline. Identical inputs give identical bytes.
  std::string to_json() const;

  bool failed() const { return status == "fail"; }
};

// Lazily built model of the whole geometry plus the command-level API the
// shared library exposes. All caches are deterministic, so repeated calls
// serialize identically.
class Engine {
 public:
  int threads = 1;

  const std::vector<polar::Plane>& planes();
  const std::vector<polar::Plane>& subspaces();
  const pluck::Bijection& bijection();
  const std::vector<mermin::Edge>& edges();
  const mermin::Enumeration& pentagrams();
  const std::vector<std::array<uint16_t, 9>>& spreads();
  const std::vector<uint8_t>& hex_points();
  const std::vector<hexagon::HLine>& hex_lines();

  // suite: all, group, bijection, pentagrams, hexagon, spreads.
  Report verify(std::string_view suite);

  // what: planes, lines, edges, pentagrams, spreads. format: json, csv.
  // The payload receives the exported data; JSON reports embed it too.
  Report enumerate(std::string_view what, std::string_view format, bool symmetric_only,
                   std::string* payload);

  // labels: comma-separated three-qubit classes spanning a heptad.
  Report map_plane(std::string_view labels);
  Report map_fourqubit(std::string_view label);

  Report hexagon_report(bool export_payload, std::string* payload);

  // generators: comma-separated subset of dalpha,dbeta,dgamma,ralpha,rbeta,rgamma.
  Report group_order(std::string_view generators);

  // seed: one operator label (width decides the representation), or three
  // comma-separated three-qubit labels for a plane orbit.
  Report group_orbit(std::string_view seed);

 private:
  struct Checks;

  void check_census(Checks& c);
  void check_bijection(Checks& c);
  void check_group(Checks& c);
  void check_spreads(Checks& c);
  void check_pentagrams(Checks& c);
  void check_hexagon(Checks& c);

  const grp::KeySet& sp6_closure();
  const grp::KeySet& spin_closure();

  std::optional<std::vector<polar::Plane>> planes_;
  std::optional<std::vector<polar::Plane>> subspaces_;
  std::optional<pluck::Bijection> bijection_;
  std::optional<std::vector<mermin::Edge>> edges_;
  std::optional<mermin::Enumeration> pentagrams_;
  std::optional<std::vector<std::array<uint16_t, 9>>> spreads_;
  std::optional<std::vector<uint8_t>> hex_points_;
  std::optional<std::vector<hexagon::HLine>> hex_lines_;
  std::optional<grp::KeySet> sp6_;
  std::optional<grp::KeySet> spin_;
};

}  // namespace heptad
