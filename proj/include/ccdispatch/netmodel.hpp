#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace ccd {

struct Bus {
  int id = 0;
  std::vector<double> demand_profile;  // MW per time step
};

struct Line {
  int id = 0;
  int from_bus = 0;
  int to_bus = 0;
  double reactance = 0.0;  // per unit
  double flow_min = 0.0;   // MW
  double flow_max = 0.0;   // MW
};

struct Generator {
  int id = 0;
  int bus = 0;
  std::vector<double> p_min_profile;
  std::vector<double> p_max_profile;
  double cost_quad = 0.0;   // $/MW^2
  double cost_lin = 0.0;    // $/MW
  double cost_const = 0.0;  // $
};

struct WindFarm {
  int id = 0;
  int bus = 0;
  double capacity = 0.0;
  std::vector<double> forecast_profile;
};

struct NetworkCase {
  std::vector<Bus> buses;
  std::vector<Line> lines;
  std::vector<Generator> generators;
  std::vector<WindFarm> wind_farms;
  int horizon = 0;
  int slack_bus = 0;

  std::size_t num_buses() const { return buses.size(); }
  std::size_t num_lines() const { return lines.size(); }
  std::size_t num_generators() const { return generators.size(); }
  std::size_t num_wind_farms() const { return wind_farms.size(); }

  // Position of a bus id in `buses`; throws ValidationError("unknown bus ...").
  std::size_t bus_position(int bus_id) const;

  double total_demand(int t) const;
  double total_forecast(int t) const;

  // Checks every invariant; throws ValidationError naming the first violation.
  void validate() const;

  // Copy restricted to time steps start, start+1, ... (wrapping modulo horizon).
  NetworkCase window(int start, int length) const;
};

NetworkCase load_case(const std::filesystem::path& path);
NetworkCase parse_case(const std::string& text, const std::string& source = "<memory>");
void save_case(const NetworkCase& network, const std::filesystem::path& path);

// Line sensitivities to nodal injections under the DC power-flow model. The
// slack column of bus_ptdf is zero; s_g/s_w/s_d select bus columns per device.
struct PtdfMatrices {
  Eigen::MatrixXd bus_ptdf;  // L x B
  Eigen::MatrixXd s_g;       // L x G
  Eigen::MatrixXd s_w;       // L x W
  Eigen::MatrixXd s_d;       // L x B
};

PtdfMatrices compute_ptdf(const NetworkCase& network);

// Line flows for a nodal injection vector (MW, one entry per bus).
Eigen::VectorXd line_flows(const PtdfMatrices& ptdf, const Eigen::VectorXd& injection);

}  // namespace ccd
