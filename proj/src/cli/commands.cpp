#include "toric/cli/commands.hpp"

#include "toric/brauer.hpp"
#include "toric/cech.hpp"
#include "toric/errors.hpp"
#include "toric/fan_io.hpp"
#include "toric/invariants.hpp"
#include "toric/resolution.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace toric::cli {

namespace {

using json = nlohmann::ordered_json;

json integer_json(const Integer& x) {
  if (auto v = x.to_int64()) return *v;
  return x.to_string();
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(integer_json(v(i)));
  return out;
}

json integers_json(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(integer_json(x));
  return out;
}

json group_json(const FinAbGroup& g) {
  return {{"text", g.to_string()}, {"free_rank", g.free_rank()}, {"torsion", integers_json(g.torsion())}};
}

json cone_json(const Fan& f, ConeId id) {
  json out = json::array();
  for (std::size_t j : f.ray_indices(id)) out.push_back(vector_json(f.rays()[j]));
  return out;
}

json digest(const Fan& f) {
  return {{"rank", f.ambient_rank()},
          {"rays", f.rays().size()},
          {"cones", f.size()},
          {"maximal", f.maximal_ids().size()}};
}

json fan_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays()) rays.push_back(vector_json(r));
  json cones = json::array();
  for (const auto& c : f.max_cone_rays()) {
    if (!c.empty()) cones.push_back(c);
  }
  return {{"rank", f.ambient_rank()}, {"rays", rays}, {"max_cones", cones}};
}

json echo(const Options& o) {
  json c = {{"name", o.command}, {"path", o.path}};
  if (o.command == "brauer") c["emit_cocycles"] = o.emit_cocycles;
  if (o.command == "resolve") c["output"] = o.output ? json(*o.output) : json(nullptr);
  if (o.command == "cech") {
    c["sheaf"] = o.sheaf;
    c["degree"] = o.degree;
  }
  return c;
}

json axioms_json(const FanValidation& v) {
  json out = json::array();
  for (const auto& c : v.checks) {
    json a = {{"name", c.name}, {"ok", c.ok}};
    if (!c.ok) {
      a["detail"] = c.detail;
      json pairs = json::array();
      for (const auto& [x, y] : c.pairs) pairs.push_back({x, y});
      a["pairs"] = pairs;
      a["cones"] = c.cones;
    }
    out.push_back(a);
  }
  return out;
}

json invariants_result(const Fan& f) {
  InvariantReport r = invariants(f);
  json singular = json::array();
  for (ConeId id : r.singular_cone_ids) singular.push_back(cone_json(f, id));
  return {{"pic", group_json(r.pic)},
          {"cl", group_json(r.cl)},
          {"sf_rank", r.sf_rank},
          {"u_rank", r.u_rank},
          {"singular_cones", singular},
          {"nu", integers_json(r.nu)}};
}

std::string symbol_text(const CyclicSymbol& s) {
  std::string group = s.order.is_zero() ? "Q/Z" : "Z/" + s.order.to_string();
  return group + " (symbol (m" + std::to_string(s.i) + ",m" + std::to_string(s.j) + "))";
}

json certificate_json(const ResolutionCertificate& c) {
  json added = json::array();
  for (const auto& r : c.added_rays()) added.push_back(vector_json(r));
  json points = json::array();
  for (const auto& p : c.subdivision_points) points.push_back(vector_json(p));
  return {{"ok", c.ok()},
          {"refines", c.refines},
          {"support_equal", c.support_equal},
          {"all_smooth", c.all_smooth},
          {"lattice_preserved", c.lattice_preserved},
          {"added_rays", added},
          {"subdivision_points", points},
          {"output", digest(c.output)}};
}

json cocycle_json(const MonomialCocycle& m) {
  json lifts = json::array();
  for (const auto& [ij, v] : m.lifts) lifts.push_back({{"pair", {ij.first, ij.second}}, {"m", vector_json(v)}});
  json exps = json::array();
  for (const auto& [t, v] : m.exponents) exps.push_back({{"triple", t}, {"phi", vector_json(v)}});
  return {{"lifts", lifts}, {"exponents", exps}, {"cocycle_identity", m.satisfies_cocycle_identity()}};
}

json brauer_result(const Fan& f, bool emit) {
  BrauerReport r = brauer_group(f);
  json symbols = json::array();
  for (const auto& s : r.smooth_part) {
    symbols.push_back({{"order", integer_json(s.order)}, {"i", s.i}, {"j", s.j}, {"text", symbol_text(s)}});
  }
  json out = {{"split_part", group_json(r.split_part)},
              {"nu", integers_json(r.nu)},
              {"smooth_part", symbols},
              {"total", {{"text", r.total.to_string()},
                         {"finite", group_json(r.total.finite_part)},
                         {"divisible", r.total.divisible}}},
              {"certificate", certificate_json(r.certificate)}};
  if (emit) {
    json cover = json::array();
    for (ConeId id : f.maximal_ids()) cover.push_back(cone_json(f, id));
    json cocycles = json::array();
    const std::size_t n = r.split_part.generator_count();
    for (std::size_t k = 0; k < n; ++k) {
      IntVector e = IntVector::Zero(static_cast<Index>(n));
      e(static_cast<Index>(k)) = 1;
      json c = {{"generator", k}, {"order", integer_json(r.split_part.coordinate_order(k))}};
      c.update(cocycle_json(cocycle_monomials(f, e)));
      cocycles.push_back(c);
    }
    out["cover"] = cover;
    out["cocycles"] = cocycles;
  }
  return out;
}

json cech_result(const Fan& f, Sheaf sheaf, Index p) {
  CechComplex c(f, sheaf);
  CohomologyResult h = cohomology(c, p);
  return {{"sheaf", to_string(sheaf)},
          {"degree", p},
          {"group", group_json(h.group())},
          {"cover_size", c.cover_size()},
          {"dimensions", {c.term_rank(p - 1), c.term_rank(p), c.term_rank(p + 1)}}};
}

std::string failed_axioms(const FanValidation& v) {
  std::string out;
  for (const auto& c : v.checks) {
    if (c.ok) continue;
    out += "error: axiom " + c.name + " fails: " + c.detail;
    for (const auto& [x, y] : c.pairs) out += " (max cones " + std::to_string(x) + " and " + std::to_string(y) + ")";
    for (std::size_t x : c.cones) out += " (max cone " + std::to_string(x) + ")";
    out += "\n";
  }
  return out;
}

Outcome usage(const std::string& message) {
  Outcome o;
  o.exit_code = kUsage;
  o.err = "error: " + message + "\n";
  return o;
}

}  // namespace

Outcome run(const Options& options) {
  static const char* const kCommands[] = {"validate", "invariants", "brauer", "resolve", "cech"};
  if (std::find(std::begin(kCommands), std::end(kCommands), options.command) == std::end(kCommands)) {
    return usage("unknown command '" + options.command + "'");
  }
  std::optional<Sheaf> sheaf;
  if (options.command == "cech") {
    sheaf = parse_sheaf(options.sheaf);
    if (!sheaf) return usage("unknown sheaf '" + options.sheaf + "' (expected sf, u or w)");
    if (options.degree < 0) return usage("degree must be nonnegative");
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  FanFile file;
  try {
    file = read_fan_file(options.path);
  } catch (const ParseError& e) {
    o.exit_code = kParseFailure;
    o.err = "error: parse failure: " + std::string(e.what()) + "\n";
    return o;
  }

  FanValidation v = validate_fan(file.rank, file.rays, file.max_cones);
  json report = {{"command", echo(options)}};
  if (v.ok()) {
    report["fan"] = digest(*v.fan);
  } else {
    report["fan"] = {{"rank", file.rank}, {"rays", file.rays.size()}, {"cones", nullptr},
                     {"maximal", file.max_cones.size()}};
  }

  try {
    if (options.command == "validate") {
      report["result"] = {{"valid", v.ok()}, {"axioms", axioms_json(v)}};
      if (!v.ok()) o.exit_code = kInvalidFan;
    } else if (!v.ok()) {
      o.exit_code = kInvalidFan;
      o.err = failed_axioms(v);
      return o;
    } else {
      const Fan& f = *v.fan;
      if (options.command == "invariants") {
        report["result"] = invariants_result(f);
      } else if (options.command == "brauer") {
        report["result"] = brauer_result(f, options.emit_cocycles);
      } else if (options.command == "cech") {
        report["result"] = cech_result(f, *sheaf, static_cast<Index>(options.degree));
      } else {
        Resolution r = resolve(f);
        json result = {{"certificate", certificate_json(r.certificate)}};
        if (options.output) {
          write_fan_file(r.fan, *options.output);
          result["written"] = *options.output;
        } else {
          result["fan"] = fan_json(r.fan);
        }
        report["result"] = result;
      }
    }
  } catch (const WriteError& e) {
    o.exit_code = kWriteFailure;
    o.err = "error: " + std::string(e.what()) + "\n";
    return o;
  } catch (const std::exception& e) {
    o.exit_code = kUsage;
    o.err = "error: " + std::string(e.what()) + "\n";
    return o;
  }

  if (options.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = {{"elapsed_ms", ms}};
  }
  o.out = options.format == Format::Json ? report.dump(2) + "\n" : render_text(report);
  o.report = std::move(report);
  return o;
}

namespace {

std::string scalar_text(const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); }

std::string tuple_text(const json& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + scalar_text(xs[i]);
  return out + ")";
}

std::string cone_text(const json& rays) {
  std::string out = "[";
  for (std::size_t i = 0; i < rays.size(); ++i) out += (i ? " " : "") + tuple_text(rays[i]);
  return out + "]";
}

void certificate_text(std::ostream& os, const json& c) {
  os << "certificate: " << (c["ok"].get<bool>() ? "ok" : "FAILED") << " (refines " << c["refines"]
     << ", support_equal " << c["support_equal"] << ", all_smooth " << c["all_smooth"] << ", lattice_preserved "
     << c["lattice_preserved"] << ")\n";
  os << "added rays: " << c["added_rays"].size();
  for (const auto& r : c["added_rays"]) os << ' ' << tuple_text(r);
  os << '\n';
  const json& d = c["output"];
  os << "resolved fan: " << d["rays"] << " rays, " << d["cones"] << " cones, " << d["maximal"] << " maximal\n";
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  const json& cmd = report["command"];
  const std::string name = cmd["name"];
  os << "command: " << name << ' ' << cmd["path"].get<std::string>();
  if (name == "cech") os << " --sheaf " << cmd["sheaf"].get<std::string>() << " --degree " << cmd["degree"];
  if (name == "brauer" && cmd["emit_cocycles"].get<bool>()) os << " --emit-cocycles";
  if (name == "resolve" && !cmd["output"].is_null()) os << " --output " << cmd["output"].get<std::string>();
  os << '\n';
  const json& fan = report["fan"];
  os << "fan: rank " << fan["rank"] << ", " << fan["rays"] << " rays, ";
  if (!fan["cones"].is_null()) os << fan["cones"] << " cones, ";
  os << fan["maximal"] << " maximal\n";

  const json& r = report["result"];
  if (name == "validate") {
    os << "valid: " << (r["valid"].get<bool>() ? "yes" : "no") << '\n';
    for (const auto& a : r["axioms"]) {
      os << "  " << a["name"].get<std::string>() << ": " << (a["ok"].get<bool>() ? "pass" : "FAIL");
      if (!a["ok"].get<bool>()) {
        for (const auto& p : a["pairs"]) os << " (max cones " << p[0] << " and " << p[1] << ')';
        for (const auto& c : a["cones"]) os << " (max cone " << c << ')';
        os << " - " << a["detail"].get<std::string>();
      }
      os << '\n';
    }
  } else if (name == "invariants") {
    os << "Pic: " << r["pic"]["text"].get<std::string>() << '\n';
    os << "Cl: " << r["cl"]["text"].get<std::string>() << '\n';
    os << "SF rank: " << r["sf_rank"] << '\n';
    os << "U rank: " << r["u_rank"] << '\n';
    os << "nu: " << tuple_text(r["nu"]) << '\n';
    os << "singular cones: " << r["singular_cones"].size() << '\n';
    for (const auto& c : r["singular_cones"]) os << "  " << cone_text(c) << '\n';
  } else if (name == "brauer") {
    os << "split part: " << r["split_part"]["text"].get<std::string>() << '\n';
    os << "nu: " << tuple_text(r["nu"]) << '\n';
    os << "smooth part: ";
    if (r["smooth_part"].empty()) os << '0';
    for (std::size_t i = 0; i < r["smooth_part"].size(); ++i) {
      os << (i ? " + " : "") << r["smooth_part"][i]["text"].get<std::string>();
    }
    os << '\n';
    os << "total: " << r["total"]["text"].get<std::string>() << '\n';
    certificate_text(os, r["certificate"]);
    if (r.contains("cocycles")) {
      os << "cover:";
      for (std::size_t i = 0; i < r["cover"].size(); ++i) os << ' ' << i << '=' << cone_text(r["cover"][i]);
      os << '\n';
      for (const auto& c : r["cocycles"]) {
        os << "cocycle " << c["generator"] << " (order " << scalar_text(c["order"]) << "): identity "
           << (c["cocycle_identity"].get<bool>() ? "holds" : "FAILS") << '\n';
        for (const auto& l : c["lifts"]) os << "  m" << tuple_text(l["pair"]) << " = " << tuple_text(l["m"]) << '\n';
        for (const auto& e : c["exponents"]) {
          os << "  phi" << tuple_text(e["triple"]) << " = " << tuple_text(e["phi"]) << '\n';
        }
      }
    }
  } else if (name == "resolve") {
    certificate_text(os, r["certificate"]);
    if (r.contains("written")) {
      os << "written: " << r["written"].get<std::string>() << '\n';
    } else {
      const json& f = r["fan"];
      os << "rays:\n";
      for (std::size_t i = 0; i < f["rays"].size(); ++i) os << "  " << i << ": " << tuple_text(f["rays"][i]) << '\n';
      os << "max cones:\n";
      for (const auto& c : f["max_cones"]) os << "  " << tuple_text(c) << '\n';
    }
  } else if (name == "cech") {
    os << "H^" << r["degree"] << '(' << r["sheaf"].get<std::string>() << "): " << r["group"]["text"].get<std::string>()
       << '\n';
    os << "cover size: " << r["cover_size"] << '\n';
    os << "dimensions: C^" << r["degree"].get<long long>() - 1 << " = " << r["dimensions"][0] << ", C^" << r["degree"]
       << " = " << r["dimensions"][1] << ", C^" << r["degree"].get<long long>() + 1 << " = " << r["dimensions"][2]
       << '\n';
  }
  if (report.contains("timing")) os << "elapsed: " << report["timing"]["elapsed_ms"] << " ms\n";
  return os.str();
}

}  // namespace toric::cli
