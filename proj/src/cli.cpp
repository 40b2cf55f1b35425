#include "springer/cli.hpp"

#include "springer/cosets.hpp"
#include "springer/fibers.hpp"
#include "springer/repmult.hpp"
#include "springer/toric.hpp"

#include <algorithm>
#include <sstream>

namespace springer::cli {

using nlohmann::json;

namespace {

constexpr const char* kUsage =
    "usage: springer <command> <FAMILY><RANK> [--J 1,3] [--weight 1/2,0,1/2] [--bound N] [--d N] "
    "[--fundamental] [--format json|text] [--out PATH] [--threads N]";

json rat(const Rational& q) { return to_string(q); }

json int_json(const Integer& z) { return z.get_str(); }

json rat_list(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat(x));
  return out;
}

json int_list(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

struct Ctx {
  const RootSystem& rs;
  bool fundamental;

  json weight(const WeightVec& w) const {
    json out{{"alpha", rat_list(w.coords())}, {"display", w.to_string()}};
    if (fundamental) out["fundamental"] = rat_list(rs.fundamental_coords(w));
    return out;
  }
};

json group_json(const FiniteAbelianGroup& g) {
  return json{{"display", g.to_string()}, {"invariant_factors", int_list(g.invariant_factors())},
              {"order", int_json(g.order())}};
}

json word_json(const ReflectionWord& w) {
  json out = json::array();
  for (int i : w) out.push_back(i);
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(int_list(m.row(i)));
  return out;
}

json cone_json(const Cone& c) {
  json rays = json::array();
  for (const auto& r : c.rays()) rays.push_back(int_list(r));
  return json{{"rays", rays}, {"multiplicity", int_json(c.multiplicity())}};
}

void check_supported(const RootSystemId& id, int max_classical_rank) {
  const bool classical = id.family == Family::A || id.family == Family::B || id.family == Family::C ||
                         id.family == Family::D;
  if (classical && id.rank > max_classical_rank)
    throw InputError(id.to_string() + " exceeds the classical rank limit " + std::to_string(max_classical_rank));
}

WeightVec parse_weight(const RootSystem& rs, const std::string& text) {
  RatVector coords = parse_rational_list(text);
  if (coords.size() != rs.rank())
    throw InputError("weight has " + std::to_string(coords.size()) + " coordinates, " + rs.id().to_string() +
                     " needs " + std::to_string(rs.rank()));
  return WeightVec(std::move(coords));
}

const std::string& require(const std::optional<std::string>& opt, const char* flag, const std::string& command) {
  if (!opt) throw InputError("command '" + command + "' requires " + flag);
  return *opt;
}

json fiber_json(const FiberReport& r) {
  return json{{"J", r.face.J},
              {"face", r.face.to_string()},
              {"group_lattice", group_json(r.group_lattice)},
              {"group_cosets", group_json(r.group_cosets)},
              {"group_table", group_json(r.group_table)},
              {"agree", r.agree},
              {"orbit_map_isomorphism", r.orbit_map_isomorphism}};
}

json sweep_json(const TypeSweep& s) {
  json cells = json::array();
  for (const auto& r : s.reports) cells.push_back(fiber_json(r));
  return json{{"type", s.id.to_string()},
              {"subsets_checked", s.reports.size()},
              {"agreements", s.agreements},
              {"disagreements", s.disagreements},
              {"cells", cells}};
}

json cmd_info(const Ctx& c) {
  const RootSystem& rs = c.rs;
  json positive = json::array();
  for (const auto& a : rs.positive_roots()) positive.push_back(c.weight(a));
  json fundamental = json::array();
  for (const auto& w : rs.fundamental_weights()) fundamental.push_back(c.weight(w));
  return json{{"type", rs.id().to_string()},
              {"rank", rs.rank()},
              {"cartan_matrix", matrix_json(rs.cartan())},
              {"positive_root_count", rs.positive_roots().size()},
              {"positive_roots", positive},
              {"fundamental_weights", fundamental},
              {"xi", c.weight(rs.xi())},
              {"rho", c.weight(rs.rho())},
              {"weyl_group_order", int_json(rs.weyl_group_order())},
              {"center_dual", group_json(center_dual(rs))}};
}

json cmd_cosets(const Ctx& c) {
  const RootSystem& rs = c.rs;
  CosetTable table = enumerate_cosets(rs);
  json records = json::array();
  for (const auto& rec : table.records) {
    records.push_back(json{{"coset_id", rec.coset_id},
                           {"lambda_R", c.weight(rec.lambda_R)},
                           {"lambda_dom", c.weight(rec.lambda_dom)},
                           {"lambda_C", c.weight(rec.lambda_C)},
                           {"witness", word_json(rec.witness)},
                           {"lambda_dom_equals_lambda_R", rec.lambda_dom == rec.lambda_R}});
  }
  json out{{"type", rs.id().to_string()}, {"index", table.records.size()}, {"cosets", records}};

  // Simple roots in the basis of the reduced fundamental weights, when these
  // reduced weights are independent.
  std::vector<WeightVec> reduced;
  json reduced_json = json::array();
  for (const auto& w : rs.fundamental_weights()) {
    reduced.push_back(lambda_R_of(rs, w));
    reduced_json.push_back(c.weight(reduced.back()));
  }
  out["fundamental_lambda_R"] = reduced_json;
  if (rank(rows_of(reduced, rs.rank())) == rs.rank()) {
    json coeffs = json::array();
    for (const auto& alpha : rs.simple_roots()) coeffs.push_back(rat_list(express_in_basis(alpha, reduced)));
    out["simple_roots_in_fundamental_lambda_R_basis"] = coeffs;
  }
  return out;
}

json cmd_decompose(const Ctx& c, const CommandRequest& req) {
  const RootSystem& rs = c.rs;
  auto decomposition = [&](const WeightVec& mu) {
    auto d = semigroup_decompose(rs, mu);
    return json{{"target", c.weight(d.target)},
                {"lambda_R", c.weight(d.lambda_R_part)},
                {"alpha_coeffs", int_list(d.alpha_coeffs)}};
  };
  if (req.weight) return json{{"decomposition", decomposition(parse_weight(rs, *req.weight))}};
  const long bound = req.bound.value_or(2);
  json basis = json::array();
  for (const auto& h : dual_semigroup_hilbert_basis(rs, bound)) basis.push_back(decomposition(h));
  return json{{"coordinate_bound", bound}, {"hilbert_basis", basis}};
}

json cmd_smooth(const Ctx& c, const CommandRequest& req) {
  const RootSystem& rs = c.rs;
  Cone sigma = sigma_cone(rs);
  json out{{"sigma", cone_json(sigma)}, {"sigma_smooth", is_smooth(rs, sigma)}};
  if (req.J) {
    FaceSpec face = FaceSpec::parse(*req.J, rs.rank());
    Cone tau = face_cone(rs, face);
    out["face"] = json{{"J", face.J}, {"cone", cone_json(tau)}, {"smooth", is_smooth(rs, tau)}};
  }
  if (req.d) {
    OrbifoldChart chart = orbifold_chart(rs, *req.d);
    out["orbifold_chart"] = json{{"d", chart.d}, {"group", group_json(chart.group)}, {"smooth", chart.smooth}};
  }
  return out;
}

json cmd_resolve(const Ctx& c) {
  const RootSystem& rs = c.rs;
  Cone sigma = sigma_cone(rs);
  Fan fan = resolve_fan(rs, face_fan(sigma));
  json rays = json::array();
  for (const auto& r : fan.rays) rays.push_back(int_list(r));
  json cones = json::array();
  bool all_smooth = true;
  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    Cone cone = fan.cone(k);
    const bool smooth = is_smooth(rs, cone);
    all_smooth = all_smooth && smooth;
    cones.push_back(json{{"ray_indices", fan.maximal_cones[k]},
                         {"multiplicity", int_json(cone.multiplicity())},
                         {"smooth", smooth}});
  }
  if (!all_smooth) throw InvariantViolation("resolved fan still contains a non-smooth cone");
  return json{{"sigma", cone_json(sigma)},
              {"sigma_smooth", is_smooth(rs, sigma)},
              {"rays", rays},
              {"maximal_cones", cones},
              {"maximal_cone_count", fan.maximal_cones.size()},
              {"all_smooth", all_smooth}};
}

json cmd_canonical(const Ctx& c, const CommandRequest& req) {
  const RootSystem& rs = c.rs;
  const long bound = req.bound.value_or(static_cast<long>(rs.rank()) + 1);
  json points = json::array();
  for (const auto& p : canonical_module_points(rs, bound))
    points.push_back(json{{"mu", c.weight(p.mu)}, {"lambda_C", c.weight(p.lambda_C)},
                          {"nu_coeffs", int_list(p.nu_coeffs)}});
  json generators = json::array();
  for (const auto& rec : enumerate_cosets(rs).records) generators.push_back(c.weight(rec.lambda_C));
  return json{{"height_bound", bound}, {"generators", generators}, {"points", points}};
}

json cmd_mult(const Ctx& c, const CommandRequest& req) {
  const RootSystem& rs = c.rs;
  WeightVec hw = parse_weight(rs, require(req.weight, "--weight", req.command));
  std::optional<long> bound;
  if (req.bound) bound = *req.bound;
  WeightMultiplicityTable table = weight_multiplicities(rs, hw, bound);
  json entries = json::array();
  for (const auto& [mu, m] : table.entries)
    entries.push_back(json{{"weight", c.weight(mu)}, {"multiplicity", int_json(m)}});
  json out{{"highest_weight", c.weight(hw)},
           {"weight_count", table.entries.size()},
           {"entries", entries},
           {"total", int_json(table.total())},
           {"weyl_dimension", int_json(weyl_dimension(rs, hw))},
           {"complete", !bound.has_value()}};
  if (!bound) {
    OrbitCoverMultiplicity m = orbit_cover_multiplicity(rs, enumerate_cosets(rs), table);
    out["mult_via_lambda_R"] = int_json(m.mult_via_lambda_R);
    out["mult_via_lambda_dom"] = int_json(m.mult_via_lambda_dom);
  }
  return out;
}

json cmd_normality(const Ctx& c) {
  const RootSystem& rs = c.rs;
  NormalityResult r = normality_check(rs, enumerate_cosets(rs));
  json offending = json::array();
  for (const auto& off : r.offending) {
    json coeffs = json::array();
    for (const auto& [i, q] : off.large_coefficients) coeffs.push_back(json{{"index", i}, {"coefficient", rat(q)}});
    offending.push_back(json{{"coset_id", off.coset_id},
                             {"lambda_R", c.weight(off.lambda_R)},
                             {"lambda_dom", c.weight(off.lambda_dom)},
                             {"coefficients_at_least_one", coeffs}});
  }
  return json{{"type", rs.id().to_string()}, {"normal", r.normal}, {"offending_cosets", offending}};
}

ReportDocument run_checked(const CommandRequest& req, ReportDocument doc) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), req.command) == names.end())
    throw InputError("unknown command '" + req.command + "'");
  if (req.threads == 0) throw InputError("--threads must be at least 1");

  if (req.command == "conformance") {
    auto ids = parse_type_range(req.type_rank);
    for (const auto& id : ids) check_supported(id, req.max_classical_rank);
    ReportDocument sweep = conformance_sweep(ids, req.threads);
    sweep.request = doc.request;
    return sweep;
  }

  RootSystemId id = RootSystemId::parse(req.type_rank);
  check_supported(id, req.max_classical_rank);
  RootSystem rs(id);
  Ctx c{rs, req.fundamental};

  if (req.command == "info") {
    doc.payload = cmd_info(c);
  } else if (req.command == "cosets") {
    doc.payload = cmd_cosets(c);
  } else if (req.command == "zgroup") {
    FaceSpec face = FaceSpec::parse(require(req.J, "--J", req.command), rs.rank());
    FiberReport r = fiber_report(rs, face);
    doc.payload = fiber_json(r);
    if (!r.agree) {
      doc.status = Status::invariant_violation;
      doc.message = "closed-form table gives " + r.group_table.to_string() + " but the lattice method gives " +
                    r.group_lattice.to_string() + " for J = " + face.to_string();
    }
  } else if (req.command == "zgroup-sweep") {
    TypeSweep s = sweep_fibers({id}, 1).front();
    doc.payload = sweep_json(s);
    if (s.disagreements > 0) {
      doc.status = Status::invariant_violation;
      doc.message = std::to_string(s.disagreements) + " subsets disagree with the closed-form table";
    }
  } else if (req.command == "decompose") {
    doc.payload = cmd_decompose(c, req);
  } else if (req.command == "smooth") {
    doc.payload = cmd_smooth(c, req);
  } else if (req.command == "resolve") {
    doc.payload = cmd_resolve(c);
  } else if (req.command == "canonical") {
    doc.payload = cmd_canonical(c, req);
  } else if (req.command == "mult") {
    doc.payload = cmd_mult(c, req);
  } else if (req.command == "normality") {
    doc.payload = cmd_normality(c);
  }
  return doc;
}

void render_text_value(std::ostringstream& os, const json& v, int indent);

void render_text_object(std::ostringstream& os, const json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : obj.items()) {
    os << pad << key << ":";
    const bool nested = (value.is_object() && !value.contains("display")) ||
                        (value.is_array() && std::any_of(value.begin(), value.end(),
                                                         [](const json& e) { return e.is_structured(); }));
    if (nested) {
      os << "\n";
      render_text_value(os, value, indent + 1);
    } else {
      os << " ";
      render_text_value(os, value, 0);
      os << "\n";
    }
  }
}

void render_text_value(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    if (v.contains("display") && v["display"].is_string()) {
      os << v["display"].get<std::string>();
      return;
    }
    render_text_object(os, v, indent);
  } else if (v.is_array()) {
    const bool structured = std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
    if (!structured) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        render_text_value(os, v[i], 0);
      }
      os << "]";
      return;
    }
    for (const auto& e : v) {
      if (e.is_object() && !e.contains("display")) {
        os << pad << "-\n";
        render_text_object(os, e, indent + 1);
      } else {
        os << pad << "- ";
        render_text_value(os, e, indent + 1);
        os << "\n";
      }
    }
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
}

} // namespace

std::string status_name(Status s) {
  switch (s) {
  case Status::ok:
    return "ok";
  case Status::input_error:
    return "input-error";
  case Status::invariant_violation:
    return "invariant-violation";
  }
  return "input-error";
}

int exit_code(Status s) {
  switch (s) {
  case Status::ok:
    return 0;
  case Status::input_error:
    return 1;
  case Status::invariant_violation:
    return 2;
  }
  return 1;
}

json CommandRequest::echo() const {
  json options = json::object();
  if (J) options["J"] = *J;
  if (weight) options["weight"] = *weight;
  if (bound) options["bound"] = *bound;
  if (d) options["d"] = *d;
  if (fundamental) options["fundamental"] = true;
  options["threads"] = threads;
  options["max_classical_rank"] = max_classical_rank;
  return json{{"command", command}, {"type_rank", type_rank}, {"options", options}};
}

json ReportDocument::to_json() const {
  json out{{"schema_version", schema_version}, {"request", request}, {"payload", payload},
           {"status", status_name(status)}};
  if (!message.empty()) out["message"] = message;
  return out;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"info",      "cosets", "zgroup",  "zgroup-sweep",
                                              "decompose", "smooth", "resolve", "canonical",
                                              "mult",      "normality", "conformance"};
  return names;
}

ReportDocument run(const CommandRequest& request) {
  ReportDocument doc;
  doc.request = request.echo();
  try {
    return run_checked(request, doc);
  } catch (const InputError& e) {
    doc.status = Status::input_error;
    doc.message = std::string(e.what()) + "\n" + kUsage;
  } catch (const InvariantViolation& e) {
    doc.status = Status::invariant_violation;
    doc.message = e.what();
  }
  doc.payload = json::object();
  return doc;
}

std::vector<RootSystemId> parse_type_range(const std::string& text) {
  std::string spec = text == "all" ? "A1-A6,B2-B5,C2-C5,D4-D7,E6,E7" : text;
  std::vector<RootSystemId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("empty entry in type range '" + text + "'");
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(RootSystemId::parse(item));
      continue;
    }
    RootSystemId lo = RootSystemId::parse(item.substr(0, dash));
    RootSystemId hi = RootSystemId::parse(item.substr(dash + 1));
    if (lo.family != hi.family || lo.rank > hi.rank) throw InputError("malformed type range '" + item + "'");
    for (int r = lo.rank; r <= hi.rank; ++r) {
      RootSystemId id{lo.family, r};
      id.validate();
      out.push_back(id);
    }
  }
  if (out.empty()) throw InputError("empty type range");
  return out;
}

ReportDocument conformance_sweep(const std::vector<RootSystemId>& ids, unsigned threads) {
  ReportDocument doc;
  std::vector<TypeSweep> sweeps = sweep_fibers(ids, threads);
  json types = json::array();
  std::size_t checked = 0, agreements = 0, disagreements = 0;
  json discrepancies = json::array();
  for (const auto& s : sweeps) {
    types.push_back(sweep_json(s));
    checked += s.reports.size();
    agreements += s.agreements;
    disagreements += s.disagreements;
    for (const auto& r : s.reports)
      if (!r.agree)
        discrepancies.push_back(json{{"type", s.id.to_string()},
                                     {"face", r.face.to_string()},
                                     {"lattice", r.group_lattice.to_string()},
                                     {"table", r.group_table.to_string()}});
  }
  doc.payload = json{{"types", types},
                     {"summary", json{{"subsets_checked", checked},
                                      {"agreements", agreements},
                                      {"disagreements", disagreements},
                                      {"discrepancies", discrepancies}}}};
  if (disagreements > 0) {
    doc.status = Status::invariant_violation;
    doc.message = std::to_string(disagreements) +
                  " subsets disagree with the closed-form table; the lattice method is authoritative";
  }
  return doc;
}

std::string render_json(const ReportDocument& doc) { return doc.to_json().dump(2) + "\n"; }

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  os << "status: " << status_name(doc.status) << "\n";
  if (!doc.message.empty()) os << "message: " << doc.message << "\n";
  os << "command: " << doc.request.value("command", "") << " " << doc.request.value("type_rank", "") << "\n";
  if (!doc.payload.empty()) render_text_object(os, doc.payload, 0);
  return os.str();
}

} // namespace springer::cli
