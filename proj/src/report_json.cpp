#include "extopt/report_json.hpp"

namespace extopt {

#ifndef EXTOPT_VERSION
#define EXTOPT_VERSION "0.0.0"
#endif

std::string_view tool_version() { return EXTOPT_VERSION; }

nlohmann::json to_json(const Rational& value) { return to_string(value); }

nlohmann::json to_json(const ServiceVector& v) {
  auto out = nlohmann::json::array();
  for (const Rational& entry : v) out.push_back(to_string(entry));
  return out;
}

nlohmann::json to_json(const InstanceSpec& spec) {
  nlohmann::json out = {{"n", spec.n}, {"x", to_string(spec.x)}, {"w", to_string(spec.w)}};
  if (spec.queue) {
    out["queue"] = {{"lambda", to_string(spec.queue->lambda)},
                    {"mu1", to_string(spec.queue->mu1)},
                    {"mu2", to_string(spec.queue->mu2)}};
  }
  return out;
}

nlohmann::json to_json(const DeltaCertificate& cert) {
  return {{"delta1", cert.delta1},
          {"delta2", cert.delta2},
          {"delta_star", cert.delta_star},
          {"a_delta1", to_string(cert.a_delta1)},
          {"a_delta2", to_string(cert.a_delta2)},
          {"search_window", {to_string(cert.delta_minus), to_string(cert.delta_plus)}},
          {"used_fallback", cert.used_fallback}};
}

nlohmann::json to_json(const TauPair& tau) { return {{"tau_u", tau.tau_u}, {"tau_l", tau.tau_l}}; }

nlohmann::json to_json(const DuoSolution& duo) {
  return {{"v_y", to_json(duo.v_y)},
          {"v_r", to_json(duo.v_r)},
          {"combined", to_json(duo.combined)},
          {"gap_y", duo.gap_y},
          {"gap_r", duo.gap_r}};
}

nlohmann::json to_json(const SolveReport& report) {
  nlohmann::json out = {{"solver", report.solver},
                        {"solution", to_json(report.solution)},
                        {"objective", to_string(report.objective)},
                        {"status", std::string(to_string(report.status))},
                        {"max_gap", report.max_gap}};
  if (report.certificate) out["certificate"] = to_json(*report.certificate);
  if (report.closed_form) out["closed_form"] = to_string(*report.closed_form);
  if (report.tau_m) out["tau_m"] = to_json(*report.tau_m);
  if (report.tau_m_plus_1) out["tau_m_plus_1"] = to_json(*report.tau_m_plus_1);
  if (report.duo) out["duo"] = to_json(*report.duo);
  return out;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json out = {
      {"instance",
       {{"n", report.instance.n()},
        {"x", to_string(report.instance.x())},
        {"w", to_string(report.instance.w())},
        {"m", report.instance.m()},
        {"r", to_string(report.instance.r())}}},
      {"constructed", to_json(report.constructed)},
      {"constructed_objective", to_string(report.constructed_objective)},
      {"constructed_status", std::string(to_string(report.constructed_status))},
      {"oracle_objective", report.oracle_objective},
      {"gap", report.gap},
      {"status", std::string(to_string(report.status))},
      {"oracle_minimizer", report.oracle_minimizer},
      {"oracle_converged", report.oracle_converged},
      {"oracle_iterations", report.oracle_iterations}};
  if (report.grid_resolution) out["grid_resolution"] = *report.grid_resolution;
  if (report.grid_objective) out["grid_objective"] = to_string(*report.grid_objective);
  if (report.exact_recheck) out["exact_recheck"] = to_string(*report.exact_recheck);
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

nlohmann::json make_envelope(std::string_view command, const InstanceSpec& spec,
                             std::string_view status, nlohmann::json result) {
  return make_envelope(command, to_json(spec), status, std::move(result));
}

nlohmann::json make_envelope(std::string_view command, nlohmann::json instance,
                             std::string_view status, nlohmann::json result) {
  return {{"schema", std::string(kSchemaVersion)},
          {"versions", {{"tool", std::string(tool_version())}, {"schema", std::string(kSchemaVersion)}}},
          {"command", std::string(command)},
          {"instance", std::move(instance)},
          {"status", std::string(status)},
          {"result", std::move(result)}};
}

InstanceSpec instance_spec_from_json(const nlohmann::json& j) {
  InstanceSpec spec;
  spec.n = j.at("n").get<int>();
  spec.x = parse_rational(j.at("x").get<std::string>());
  spec.w = parse_rational(j.at("w").get<std::string>());
  if (j.contains("queue")) {
    const auto& q = j.at("queue");
    spec.queue = QueueParams{parse_rational(q.at("lambda").get<std::string>()),
                             parse_rational(q.at("mu1").get<std::string>()),
                             parse_rational(q.at("mu2").get<std::string>())};
  }
  return spec;
}

}  // namespace extopt
