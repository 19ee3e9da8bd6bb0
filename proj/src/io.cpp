#include "polystab/io.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "polystab/kcc.hpp"
#include "polystab/linstab.hpp"

namespace polystab::io {

using nlohmann::json;

namespace {

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string fmt(double x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string machine(double x) { return fmt(x, kMachineDigits); }
std::string human(double x) { return fmt(x, kHumanDigits); }

std::string complex_text(const std::complex<double>& z, int digits) {
  if (z.imag() == 0.0) return fmt(z.real(), digits);
  std::ostringstream os;
  os << std::setprecision(digits) << z.real() << (z.imag() < 0 ? " - " : " + ")
     << std::abs(z.imag()) << "i";
  return os.str();
}

json point_json(const CriticalPoint& p) {
  return {{"kind", to_string(p.kind)},
          {"w0", p.w0 ? json(*p.w0) : json(nullptr)},
          {"q0", 0.0},
          {"power_term", p.power_term},
          {"formal", p.formal()}};
}

json verdicts_json(const MethodVerdicts& v) {
  return {{"linear", table_word(v.linear)},
          {"jacobi", table_word(v.jacobi)},
          {"lyapunov", table_word(v.lyapunov)}};
}

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- analysis

json to_json(const Analysis& analysis) {
  const auto& config = analysis.config;
  json points = json::array();
  for (const auto& r : analysis.reports) {
    const auto j = jacobian(config, r.point.power_term);
    json eig = json::array();
    for (const auto& z : r.linear.eigenvalues) eig.push_back({z.real(), z.imag()});

    json entry = point_json(r.point);
    entry["linear"] = {{"classification", to_string(r.linear.classification)},
                       {"verdict", to_string(r.linear.verdict)},
                       {"eigenvalues", eig},
                       {"jacobian", {{j.a11, j.a12}, {j.a21, j.a22}}}};
    entry["jacobi"] = {{"nonlinear_connection", nonlinear_connection(config)},
                       {"berwald", berwald_connection(config)},
                       {"p11", r.jacobi.deviation_curvature},
                       {"verdict", to_string(r.jacobi.verdict)}};
    entry["lyapunov"] = {{"hessian_eigenvalues", r.lyapunov.hessian_eigenvalues},
                         {"local_minimum", r.lyapunov.is_local_minimum},
                         {"vdot_coefficient", r.lyapunov.vdot_coefficient},
                         {"verdict", to_string(r.lyapunov.verdict)}};
    points.push_back(std::move(entry));
  }
  return {{"schema", kSchema},   {"command", "analyze"},
          {"n", config.n()},     {"b", config.b()},
          {"regime", analysis.regime}, {"nstar", critical_index_nstar()},
          {"coincident", analysis.coincident}, {"points", points}};
}

std::string to_text(const Analysis& analysis) {
  std::ostringstream os;
  os << "n = " << human(analysis.config.n()) << ", B = " << human(analysis.config.b())
     << "  [" << analysis.regime << "]\n";
  if (analysis.coincident) os << "Xn coincides with X0 at this index\n";
  for (const auto& r : analysis.reports) {
    os << "\n" << to_string(r.point.kind);
    if (r.point.w0) {
      os << " at (w, q) = (" << human(*r.point.w0) << ", 0)";
    } else {
      os << " (formal: no real coordinate)";
    }
    os << ", B^(n-1) w^(n-1) = " << human(r.point.power_term) << "\n";
    os << "  linear    " << to_string(r.linear.classification) << " / "
       << to_string(r.linear.verdict) << "; eigenvalues "
       << complex_text(r.linear.eigenvalues[0], kHumanDigits) << ", "
       << complex_text(r.linear.eigenvalues[1], kHumanDigits) << "\n";
    os << "  jacobi    P11 = " << human(r.jacobi.deviation_curvature) << " / "
       << to_string(r.jacobi.verdict) << "\n";
    os << "  lyapunov  Hessian eigenvalues " << human(r.lyapunov.hessian_eigenvalues[0]) << ", "
       << human(r.lyapunov.hessian_eigenvalues[1]) << "; dV/dt = "
       << human(r.lyapunov.vdot_coefficient) << " q^2 / " << to_string(r.lyapunov.verdict)
       << "\n";
  }
  return os.str();
}

std::string to_csv(const Analysis& analysis) {
  std::ostringstream os;
  os << "# schema: " << kSchema << "\n";
  os << "# command: analyze\n";
  os << "# n: " << machine(analysis.config.n()) << "\n";
  os << "# b: " << machine(analysis.config.b()) << "\n";
  os << "# regime: " << analysis.regime << "\n";
  os << "kind,w0,power_term,linear_class,linear_verdict,lambda1_re,lambda1_im,lambda2_re,"
        "lambda2_im,p11,jacobi_verdict,hessian1,hessian2,vdot_coefficient,lyapunov_verdict\n";
  for (const auto& r : analysis.reports) {
    const auto& e = r.linear.eigenvalues;
    os << to_string(r.point.kind) << "," << (r.point.w0 ? machine(*r.point.w0) : "") << ","
       << machine(r.point.power_term) << "," << to_string(r.linear.classification) << ","
       << to_string(r.linear.verdict) << "," << machine(e[0].real()) << ","
       << machine(e[0].imag()) << "," << machine(e[1].real()) << "," << machine(e[1].imag())
       << "," << machine(r.jacobi.deviation_curvature) << "," << to_string(r.jacobi.verdict)
       << "," << machine(r.lyapunov.hessian_eigenvalues[0]) << ","
       << machine(r.lyapunov.hessian_eigenvalues[1]) << ","
       << machine(r.lyapunov.vdot_coefficient) << "," << to_string(r.lyapunov.verdict) << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------------- table

json to_json(const StabilityTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    json row = verdicts_json(r.nontrivial);
    row["regime"] = r.regime_label;
    row["lower"] = r.lower;
    row["upper"] = number(r.upper);
    row["samples"] = r.samples;
    row["consistent"] = r.consistent;
    row["x0"] = verdicts_json(r.origin);
    rows.push_back(std::move(row));
  }
  return {{"schema", kSchema}, {"command", "table"}, {"rows", rows}, {"notes", table.notes}};
}

std::string to_text(const StabilityTable& table) {
  std::ostringstream os;
  const auto line = [&os](const std::string& a, const std::string& b, const std::string& c,
                          const std::string& d, const std::string& e) {
    os << std::left << std::setw(28) << a << std::setw(14) << b << std::setw(14) << c
       << std::setw(14) << d << e << "\n";
  };
  line("index n / method", "Linear", "Jacobi", "Lyapunov", "X0 (lin/jac/lyap)");
  for (const auto& r : table.rows) {
    std::string label = r.regime_label;
    if (!r.consistent) label += " *";
    line(label, table_word(r.nontrivial.linear), table_word(r.nontrivial.jacobi),
         table_word(r.nontrivial.lyapunov),
         table_word(r.origin.linear) + "/" + table_word(r.origin.jacobi) + "/" +
             table_word(r.origin.lyapunov));
  }
  os << "\n";
  for (const auto& note : table.notes) os << "note: " << note << "\n";
  for (const auto& r : table.rows) {
    if (!r.consistent) os << "warning: samples disagree within regime " << r.regime_label << "\n";
  }
  return os.str();
}

std::string to_csv(const StabilityTable& table) {
  std::ostringstream os;
  os << "# schema: " << kSchema << "\n";
  os << "# command: table\n";
  for (const auto& note : table.notes) os << "# note: " << note << "\n";
  os << "regime,linear,jacobi,lyapunov,x0_linear,x0_jacobi,x0_lyapunov,consistent\n";
  for (const auto& r : table.rows) {
    os << "\"" << r.regime_label << "\"," << table_word(r.nontrivial.linear) << ","
       << table_word(r.nontrivial.jacobi) << "," << table_word(r.nontrivial.lyapunov) << ","
       << table_word(r.origin.linear) << "," << table_word(r.origin.jacobi) << ","
       << table_word(r.origin.lyapunov) << "," << (r.consistent ? "true" : "false") << "\n";
  }
  return os.str();
}

// ----------------------------------------------------------------- profile

json to_json(const Profile& profile) {
  json rows = json::array();
  for (const auto& p : profile.points) {
    rows.push_back({p.xi, p.theta, p.dtheta, p.milne ? json(p.milne->u) : json(nullptr),
                    p.milne ? json(p.milne->v) : json(nullptr), number(p.p11)});
  }
  return {{"schema", kSchema},
          {"command", "profile"},
          {"n", profile.n},
          {"tol", profile.tol},
          {"xi_max", profile.xi_max},
          {"surface", profile.surface ? json(*profile.surface) : json(nullptr)},
          {"truncated", profile.truncated},
          {"status", to_string(profile.status)},
          {"columns", {"xi", "theta", "dtheta", "u", "v", "p11"}},
          {"rows", rows}};
}

Profile profile_from_json(const json& j) {
  if (j.at("schema").get<std::string>() != kSchema) {
    throw InvalidArgument("unsupported schema " + j.at("schema").get<std::string>());
  }
  Profile p;
  p.n = j.at("n").get<double>();
  p.tol = j.at("tol").get<double>();
  p.xi_max = j.at("xi_max").get<double>();
  if (!j.at("surface").is_null()) p.surface = j.at("surface").get<double>();
  p.truncated = j.at("truncated").get<bool>();
  const auto status = j.at("status").get<std::string>();
  for (auto s : {IntegrationStatus::Complete, IntegrationStatus::DomainStop,
                 IntegrationStatus::StepUnderflow}) {
    if (status == to_string(s)) p.status = s;
  }
  for (const auto& row : j.at("rows")) {
    ProfilePoint pt;
    pt.xi = row.at(0).get<double>();
    pt.theta = row.at(1).get<double>();
    pt.dtheta = row.at(2).get<double>();
    if (!row.at(3).is_null()) pt.milne = MilneState{row.at(3).get<double>(), row.at(4).get<double>()};
    pt.p11 = number_from(row.at(5));
    p.points.push_back(pt);
  }
  return p;
}

std::string to_csv(const Profile& profile) {
  std::ostringstream os;
  os << "# schema: " << kSchema << "\n";
  os << "# command: profile\n";
  os << "# n: " << machine(profile.n) << "\n";
  os << "# tol: " << machine(profile.tol) << "\n";
  os << "xi,theta,dtheta,u,v,p11\n";
  for (const auto& p : profile.points) {
    os << machine(p.xi) << "," << machine(p.theta) << "," << machine(p.dtheta) << ","
       << (p.milne ? machine(p.milne->u) : "") << "," << (p.milne ? machine(p.milne->v) : "")
       << "," << machine(p.p11) << "\n";
  }
  os << "# surface: " << (profile.surface ? machine(*profile.surface) : "none") << "\n";
  os << "# truncated: " << (profile.truncated ? "true" : "false") << "\n";
  os << "# status: " << to_string(profile.status) << "\n";
  return os.str();
}

// ------------------------------------------------------------------- phase

json to_json(const PhasePortrait& portrait) {
  json critical = json::array();
  for (const auto& p : portrait.critical.points) critical.push_back(point_json(p));

  json trajectories = json::array();
  for (const auto& tr : portrait.trajectories) {
    json pts = json::array();
    for (const auto& s : tr.states) pts.push_back({s.t, s.w, s.q});
    trajectories.push_back({{"status", to_string(tr.status)},
                            {"partial", tr.status != IntegrationStatus::Complete},
                            {"points", std::move(pts)}});
  }
  return {{"schema", kSchema},
          {"command", "phase"},
          {"n", portrait.config.n()},
          {"b", portrait.config.b()},
          {"t_end", portrait.t_end},
          {"tol", portrait.tol},
          {"radius", portrait.radius},
          {"coincident", portrait.critical.coincident},
          {"centre", point_json(portrait.centre)},
          {"critical_points", critical},
          {"trajectories", trajectories}};
}

std::string to_csv(const PhasePortrait& portrait) {
  std::ostringstream os;
  os << "# schema: " << kSchema << "\n";
  os << "# command: phase\n";
  os << "# n: " << machine(portrait.config.n()) << "\n";
  os << "# b: " << machine(portrait.config.b()) << "\n";
  for (const auto& p : portrait.critical.points) {
    os << "# critical_point: " << to_string(p.kind) << " w0="
       << (p.w0 ? machine(*p.w0) : "none") << " power_term=" << machine(p.power_term) << "\n";
  }
  os << "# centre: " << to_string(portrait.centre.kind) << "\n";
  for (std::size_t i = 0; i < portrait.trajectories.size(); ++i) {
    const auto status = portrait.trajectories[i].status;
    if (status != IntegrationStatus::Complete) {
      os << "# partial trajectory " << i << ": " << to_string(status) << "\n";
    }
  }
  os << "trajectory,t,w,q\n";
  for (std::size_t i = 0; i < portrait.trajectories.size(); ++i) {
    for (const auto& s : portrait.trajectories[i].states) {
      os << i << "," << machine(s.t) << "," << machine(s.w) << "," << machine(s.q) << "\n";
    }
  }
  return os.str();
}

}  // namespace polystab::io
