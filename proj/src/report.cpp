#include "sasaki/report.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <sstream>

#include "sasaki/classify.hpp"
#include "sasaki/cscrays.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/joinspace.hpp"

namespace sasaki::cli {

const char* const kCaveat =
    "A CSC ray here means the admissible extremal representative on that ray has constant "
    "scalar curvature. Other extremal metrics in the same isotopy class are not examined, so "
    "the counts are counts of admissible CSC rays.";

namespace {

// csc needs a polynomial of degree 2p+4 in memory.
constexpr std::int64_t kMaxCscP = 1000;

std::int64_t require(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw InvalidInput(std::string("missing ") + flag);
  return *v;
}

JoinParams params_of(const CliRequest& req) {
  const std::int64_t p = require(req.p, "-p");
  const std::int64_t l1 = require(req.l1, "-l1");
  const std::int64_t l2 = require(req.l2, "-l2");
  const std::int64_t w1 = require(req.w1, "-w");
  return JoinParams::validate(p, l1, l2, w1, require(req.w2, "-w"));
}

Json params_json(const JoinParams& j) {
  return {{"p", j.p()}, {"l1", j.l1()}, {"l2", j.l2()}, {"w1", j.w1()}, {"w2", j.w2()}};
}

Json residue_json(const Residue& r) {
  return {{"value", integer_json(r.value)}, {"modulus", integer_json(r.modulus)}};
}

Json poly_json(const poly::IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_json(c));
  return {{"coefficients", coeffs}, {"text", poly::to_string(p)}};
}

Json ray_json(const Ray& r, unsigned digits) {
  Json out{{"class", to_string(r.ray_class)},
           {"multiplicity", r.root.multiplicity},
           {"rational", r.root.is_rational}};
  if (r.root.is_exact()) {
    out["exact"] = poly::to_string(r.root.exact());
    out["approx"] = poly::to_decimal(r.root.exact(), digits);
  } else {
    const auto& iv = r.root.interval();
    out["interval"] = {{"lo", poly::to_string(iv.lo)},
                       {"hi", poly::to_string(iv.hi)},
                       {"approx", poly::to_decimal(iv.midpoint(), digits)}};
  }
  if (r.partner) out["partner"] = *r.partner;
  return out;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::kJson:
      return "json";
    case Format::kTable:
      return "table";
    case Format::kCsv:
      return "csv";
  }
  return "?";
}

std::string subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::kInvariants:
      return "invariants";
    case Subcommand::kCsc:
      return "csc";
    case Subcommand::kClassify:
      return "classify";
    case Subcommand::kSweep:
      return "sweep";
  }
  return "?";
}

std::int64_t to_int64(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw InvalidInput("cannot parse " + what + ": '" + s + "'");
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// ---- table rendering ----

void table_invariants(std::ostream& os, const CliReport& r) {
  const Json& p = r.payload;
  const Json& pr = p["params"];
  os << "M(p=" << pr["p"] << ", l1=" << pr["l1"] << ", l2=" << pr["l2"] << ", w=(" << pr["w1"]
     << "," << pr["w2"] << "))  dimension " << p["dimension"] << "\n";
  os << "  c1(D)          " << text(p["c1_coefficient"]) << " gamma\n";
  os << "  spin           " << (p["spin"].get<bool>() ? "yes" : "no") << "\n";
  if (p.contains("h4_order")) os << "  |H^4|          " << text(p["h4_order"]) << "\n";
  if (p.contains("ring")) os << "  H*(M; Z)       " << p["ring"].get<std::string>() << "\n";
  if (p.contains("cohomology")) {
    os << "  cohomology    ";
    for (const auto& g : p["cohomology"])
      os << " H^" << g["degree"] << "=" << g["group"].get<std::string>();
    os << "\n";
  }
  if (p.contains("homotopy")) {
    os << "  homotopy      ";
    for (const auto& g : p["homotopy"])
      os << " pi_" << g["degree"] << "=" << g["group"].get<std::string>();
    os << "\n";
  }
  if (p.contains("p1"))
    os << "  p1             " << text(p["p1"]["value"]) << " mod " << text(p["p1"]["modulus"])
       << "\n";
  if (p.contains("linking"))
    os << "  linking form   " << text(p["linking"]["value"]) << " mod "
       << text(p["linking"]["modulus"]) << "\n";
  if (p.contains("dim5_type")) os << "  type           " << p["dim5_type"].get<std::string>() << "\n";
  if (p.contains("iterated_join_ring"))
    os << "  iterated join  " << p["iterated_join_ring"].get<std::string>() << "\n";
  if (p.contains("bundle_type"))
    os << "  bundle over S2 " << p["bundle_type"].get<std::string>() << "\n";
}

void table_csc(std::ostream& os, const CliReport& r) {
  const Json& p = r.payload;
  os << "f(b) = " << p["f"]["text"].get<std::string>() << "\n";
  os << "forbidden root " << p["forbidden_root"].get<std::string>() << " with multiplicity "
     << p["forbidden_multiplicity"] << "\n";
  os << "deflated: " << p["deflated"]["text"].get<std::string>() << "\n";
  if (p.contains("fourth_derivative_at_one"))
    os << "f''''(1) = " << text(p["fourth_derivative_at_one"]) << ", threshold l2 > "
       << p["threshold"].get<std::string>() << "\n";
  os << "rays (" << p["unreduced_count"] << " unreduced, " << p["reduced_count"]
     << " reduced):\n";
  std::size_t i = 0;
  for (const auto& ray : p["rays"]) {
    os << "  [" << i++ << "] " << ray["class"].get<std::string>();
    if (ray.contains("exact")) {
      os << "  b = " << ray["exact"].get<std::string>() << "  (" << ray["approx"].get<std::string>()
         << ")";
    } else {
      const Json& iv = ray["interval"];
      os << "  b in (" << iv["lo"].get<std::string>() << ", " << iv["hi"].get<std::string>()
         << ")  ~ " << iv["approx"].get<std::string>();
    }
    if (ray["multiplicity"].get<unsigned>() > 1) os << "  multiplicity " << ray["multiplicity"];
    if (ray.contains("partner")) os << "  paired with [" << ray["partner"] << "]";
    os << "\n";
  }
}

void table_classify(std::ostream& os, const CliReport& r) {
  const Json& p = r.payload;
  os << p["relation"].get<std::string>() << ": " << (p["overall"].get<bool>() ? "yes" : "no")
     << "\n";
  for (const auto& c : p["conditions"]) {
    os << "  [" << (c["holds"].get<bool>() ? "x" : " ") << "] " << c["label"].get<std::string>()
       << "  (";
    bool first = true;
    for (const auto& w : c["witness"]) {
      if (!first) os << ", ";
      os << text(w);
      first = false;
    }
    os << ")\n";
  }
}

void table_sweep(std::ostream& os, const CliReport& r) {
  const Json& p = r.payload;
  if (p["target"] == "csc") {
    os << "l2    unreduced  reduced  multiple\n";
    for (const auto& row : p["rows"]) {
      if (!row["valid"].get<bool>()) {
        os << row["l2"] << "  skipped: " << row["skip_reason"].get<std::string>() << "\n";
        continue;
      }
      os << row["l2"] << "  " << row["unreduced"] << "  " << row["reduced"] << "  "
         << (row["multiple"].get<bool>() ? "yes" : "no") << "\n";
    }
    os << "threshold: " << (p["threshold"].is_null() ? std::string("none") : p["threshold"].dump())
       << "\n";
  } else {
    os << "l1 = " << p["l1"] << ", diffeomorphism modulus " << text(p["modulus"]) << "\n";
    for (const auto& cls : p["classes"]) os << "  {" << [&] {
        std::string s;
        for (const auto& m : cls) s += (s.empty() ? "" : ",") + m.dump();
        return s;
      }() << "}\n";
    for (const auto& rej : p["rejected"])
      os << "  rejected " << rej["l2"] << ": " << rej["reason"].get<std::string>() << "\n";
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::int64_t> L2Range::values() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; v += stride) out.push_back(v);
  return out;
}

Json CliRequest::echo() const {
  Json out{{"subcommand", subcommand_name(subcommand)},
           {"format", format_name(format)},
           {"precision", precision}};
  if (!mode.empty()) out["mode"] = mode;
  auto put = [&](const char* key, const std::optional<std::int64_t>& v) {
    if (v) out[key] = *v;
  };
  put("p", p);
  put("l1", l1);
  put("l2", l2);
  put("l2p", l2p);
  put("w1", w1);
  put("w2", w2);
  if (!tuples.empty()) {
    Json ts = Json::array();
    for (const auto& t : tuples) ts.push_back({t.l1, t.l2, t.w1, t.w2});
    out["tuples"] = ts;
  }
  if (range) out["range"] = {{"lo", range->lo}, {"hi", range->hi}, {"stride", range->stride}};
  if (subcommand == Subcommand::kSweep) out["bound"] = bound;
  if (quote_caveat) out["quote_caveat"] = true;
  return out;
}

Json CliReport::to_json() const {
  return {{"schema_version", schema_version},
          {"request", request},
          {"payload", payload},
          {"warnings", warnings}};
}

CliReport CliReport::from_json(const Json& j) {
  CliReport r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.request = j.at("request");
  r.payload = j.at("payload");
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

CliReport run_invariants(const CliRequest& req) {
  const JoinParams j = params_of(req);
  CliReport r;
  r.request = req.echo();
  Json& p = r.payload;
  p["params"] = params_json(j);
  p["dimension"] = j.dimension();
  p["c1_coefficient"] = integer_json(c1_coefficient(j));
  p["spin"] = is_spin(j);
  if (j.p() > 1) {
    p["h4_order"] = integer_json(h4_order(j));
    p["ring"] = cohomology_ring(j).to_string();
    Json groups = Json::array();
    for (int d = 0; d <= j.dimension(); ++d)
      groups.push_back({{"degree", d}, {"group", cohomology_group(j, d).to_string()}});
    p["cohomology"] = groups;
    Json pis = Json::array();
    for (int i = 1; i <= 4; ++i)
      pis.push_back({{"degree", i}, {"group", homotopy_group(j, i).to_string()}});
    p["homotopy"] = pis;
  }
  if (j.p() == 2) {
    p["p1"] = residue_json(p1_class(j));
    p["linking"] = residue_json(linking_form(j));
  }
  if (j.p() == 1) {
    p["dim5_type"] = to_string(diffeo_type_dim5(j.l1(), j.l2(), j.w1(), j.w2()));
    p["iterated_join_ring"] = iterated_join_ring(j.l1(), j.l2(), j.w1(), j.w2()).to_string();
  }
  if (j.l1() == 1 && j.homogeneous()) p["bundle_type"] = to_string(bundle_type_wz(j.p(), j.l2()));
  return r;
}

CliReport run_csc(const CliRequest& req) {
  const JoinParams j = params_of(req);
  if (j.p() > kMaxCscP)
    throw InvalidInput("csc supports p <= " + std::to_string(kMaxCscP));
  const CscPolynomial fp = build_f(j);
  const RayReport rep = csc_rays(j, req.precision);

  CliReport r;
  r.request = req.echo();
  Json& p = r.payload;
  p["params"] = params_json(j);
  p["precision"] = req.precision;
  p["f"] = poly_json(fp.poly);
  p["forbidden_root"] = poly::to_string(fp.forbidden_root);
  p["forbidden_multiplicity"] = rep.forbidden_multiplicity;
  p["deflated"] = poly_json(rep.deflated);
  Json rays = Json::array();
  for (const auto& ray : rep.rays) rays.push_back(ray_json(ray, req.precision));
  p["rays"] = rays;
  p["unreduced_count"] = rep.unreduced_count;
  p["reduced_count"] = rep.reduced_count;
  p["weyl_paired"] = rep.weyl_paired;
  if (j.homogeneous()) {
    const Rational d4 = poly::evaluate(poly::derivative(fp.poly, 4), Rational(1));
    p["fourth_derivative_at_one"] = integer_json(d4.get_num());
    p["threshold"] = poly::to_string(wz_threshold(j.p(), j.l1()));
    if (d4 == 0)
      r.warnings.push_back("f''''(1) = 0: l2 sits exactly on the threshold " +
                           poly::to_string(wz_threshold(j.p(), j.l1())));
  } else if (rep.forbidden_multiplicity > 3) {
    r.warnings.push_back("f vanishes to order " + std::to_string(rep.forbidden_multiplicity) +
                         " at b = " + poly::to_string(fp.forbidden_root) + ", 3 expected");
  }
  if (req.quote_caveat) p["caveat"] = kCaveat;
  return r;
}

CliReport run_classify(const CliRequest& req) {
  CliReport r;
  r.request = req.echo();
  Json& p = r.payload;
  ClassificationVerdict v;
  if (req.mode == "homotopy") {
    if (req.tuples.size() != 2)
      throw InvalidInput("classify homotopy needs two tuples (l1,l2,w1,w2)");
    const auto& a = req.tuples[0];
    const auto& b = req.tuples[1];
    v = kruggel_homotopy_equivalent(JoinParams::validate(2, a.l1, a.l2, a.w1, a.w2),
                                    JoinParams::validate(2, b.l1, b.l2, b.w1, b.w2));
    Json ts = Json::array();
    for (const auto& t : req.tuples) ts.push_back({{"l1", t.l1}, {"l2", t.l2}, {"w1", t.w1}, {"w2", t.w2}});
    p["manifolds"] = ts;
  } else if (req.mode == "homeo" || req.mode == "diffeo") {
    const std::int64_t l1 = require(req.l1, "-l1");
    const std::int64_t l2 = require(req.l2, "-l2");
    const std::int64_t l2p = require(req.l2p, "-l2p");
    v = ks_verdict(req.mode == "homeo" ? Relation7::kHomeomorphism : Relation7::kDiffeomorphism,
                   l1, l2, l2p);
    p["l1"] = l1;
    p["l2"] = l2;
    p["l2p"] = l2p;
    p["moduli"] = {{"homeomorphism", integer_json(homeomorphism_modulus(l1))},
                   {"diffeomorphism", integer_json(diffeomorphism_modulus(l1))}};
  } else {
    throw InvalidInput("classify relation must be homotopy, homeo or diffeo");
  }
  p["relation"] = to_string(v.relation);
  p["overall"] = v.overall;
  Json conds = Json::array();
  for (const auto& c : v.conditions) {
    Json w = Json::array();
    for (const auto& x : c.witness) w.push_back(integer_json(x));
    conds.push_back({{"label", c.label}, {"holds", c.holds}, {"witness", w}});
  }
  p["conditions"] = conds;
  return r;
}

CliReport run_sweep(const CliRequest& req) {
  const L2Range range = req.range ? *req.range : L2Range{1, req.bound, 1};
  CliReport r;
  r.request = req.echo();
  Json& p = r.payload;
  p["range"] = {{"lo", range.lo}, {"hi", range.hi}, {"stride", range.stride}};
  if (req.mode == "csc") {
    const std::int64_t pp = require(req.p, "-p");
    const std::int64_t l1 = require(req.l1, "-l1");
    const std::int64_t w1 = require(req.w1, "-w");
    const std::int64_t w2 = require(req.w2, "-w");
    if (pp > kMaxCscP) throw InvalidInput("csc supports p <= " + std::to_string(kMaxCscP));
    const CscSweep sweep = sweep_csc(pp, l1, w1, w2, range.lo, range.hi, range.stride, req.jobs);
    p["target"] = "csc";
    p["params"] = {{"p", pp}, {"l1", l1}, {"w1", w1}, {"w2", w2}};
    Json rows = Json::array();
    std::size_t skipped = 0;
    for (const auto& row : sweep.rows) {
      Json jr{{"l2", row.l2}, {"valid", row.valid}};
      if (row.valid) {
        jr["unreduced"] = row.unreduced;
        jr["reduced"] = row.reduced;
        jr["multiple"] = row.multiple;
      } else {
        jr["skip_reason"] = row.skip_reason;
        ++skipped;
      }
      rows.push_back(jr);
    }
    p["rows"] = rows;
    p["threshold"] = sweep.threshold ? Json(*sweep.threshold) : Json(nullptr);
    if (skipped)
      r.warnings.push_back(std::to_string(skipped) + " l2 value(s) skipped by the gcd constraints");
    if (req.quote_caveat) p["caveat"] = kCaveat;
  } else if (req.mode == "diffeo") {
    const std::int64_t l1 = require(req.l1, "-l1");
    if (req.p && *req.p != 2)
      throw ValidationError(Constraint::kDimension, "diffeo sweeps need p = 2");
    const DiffeoPartition part = partition_diffeo_types(l1, range.values());
    if (part.classes.empty()) throw InvalidInput("no valid l2 in the requested range");
    p["target"] = "diffeo";
    p["l1"] = l1;
    p["modulus"] = integer_json(diffeomorphism_modulus(l1));
    p["classes"] = part.classes;
    Json rej = Json::array();
    for (const auto& m : part.rejected) rej.push_back({{"l2", m.l2}, {"reason", m.reason}});
    p["rejected"] = rej;
    Json rows = Json::array();
    for (std::int64_t l2 : range.values()) {
      Json jr{{"l2", l2}, {"valid", false}};
      for (std::size_t c = 0; c < part.classes.size(); ++c) {
        const auto& cls = part.classes[c];
        if (std::find(cls.begin(), cls.end(), l2) != cls.end()) {
          jr["valid"] = true;
          jr["class"] = c;
        }
      }
      rows.push_back(jr);
    }
    p["rows"] = rows;
    if (!part.rejected.empty())
      r.warnings.push_back(std::to_string(part.rejected.size()) +
                           " l2 value(s) skipped by the gcd constraints");
  } else {
    throw InvalidInput("sweep target must be csc or diffeo");
  }
  return r;
}

CliReport run(const CliRequest& req) {
  if (req.precision < 1 || req.precision > 1000)
    throw InvalidInput("precision must be between 1 and 1000");
  if (req.format == Format::kCsv && req.subcommand != Subcommand::kSweep)
    throw InvalidInput("--csv is only available for sweep");
  switch (req.subcommand) {
    case Subcommand::kInvariants:
      return run_invariants(req);
    case Subcommand::kCsc:
      return run_csc(req);
    case Subcommand::kClassify:
      return run_classify(req);
    case Subcommand::kSweep:
      return run_sweep(req);
  }
  throw InvalidInput("unknown subcommand");
}

std::string render(const CliReport& report, const CliRequest& req) {
  std::ostringstream os;
  if (req.format == Format::kJson) {
    os << report.to_json().dump(2) << "\n";
    return os.str();
  }
  if (req.format == Format::kCsv) {
    const Json& p = report.payload;
    if (p.value("target", "") == "csc") {
      os << "l2,valid,unreduced,reduced,multiple,skip_reason\n";
      for (const auto& row : p["rows"]) {
        os << row["l2"] << "," << row["valid"] << ",";
        if (row["valid"].get<bool>())
          os << row["unreduced"] << "," << row["reduced"] << "," << row["multiple"] << ",\n";
        else
          os << ",,," << csv_field(row["skip_reason"].get<std::string>()) << "\n";
      }
    } else {
      os << "l2,valid,class\n";
      for (const auto& row : p["rows"])
        os << row["l2"] << "," << row["valid"] << ","
           << (row.contains("class") ? row["class"].dump() : "") << "\n";
    }
    return os.str();
  }
  switch (req.subcommand) {
    case Subcommand::kInvariants:
      table_invariants(os, report);
      break;
    case Subcommand::kCsc:
      table_csc(os, report);
      break;
    case Subcommand::kClassify:
      table_classify(os, report);
      break;
    case Subcommand::kSweep:
      table_sweep(os, report);
      break;
  }
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  if (report.payload.contains("caveat"))
    os << "note: " << report.payload["caveat"].get<std::string>() << "\n";
  return os.str();
}

L2Range parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*(?::\s*(odd|even))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw InvalidInput("cannot parse range '" + text + "', expected LO..HI or LO..HI:odd");
  L2Range r{to_int64(m[1], "range"), to_int64(m[2], "range"), 1};
  if (m[3].matched) {
    const std::int64_t want = m[3] == "odd" ? 1 : 0;
    if (((r.lo % 2) + 2) % 2 != want) ++r.lo;
    r.stride = 2;
  }
  if (r.lo < 1 || r.hi < r.lo) throw InvalidInput("empty l2 range '" + text + "'");
  return r;
}

std::pair<std::int64_t, std::int64_t> parse_weights(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InvalidInput("weights must be W1,W2, got '" + text + "'");
  return {to_int64(parts[0], "w1"), to_int64(parts[1], "w2")};
}

Tuple parse_tuple(const std::string& raw) {
  std::string s = trim(raw);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto parts = split(s, ',');
  if (parts.size() != 4) throw InvalidInput("tuple must be (l1,l2,w1,w2), got '" + raw + "'");
  return {to_int64(parts[0], "l1"), to_int64(parts[1], "l2"), to_int64(parts[2], "w1"),
          to_int64(parts[3], "w2")};
}

Rational parse_rational(const std::string& raw) {
  static const std::regex re(R"(^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(raw, m, re)) throw InvalidInput("cannot parse rational '" + raw + "'");
  Integer num(m[1].str());
  Integer den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw InvalidInput("zero denominator in '" + raw + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvariantViolation*>(&e)) return 2;
  if (dynamic_cast<const InvalidInput*>(&e)) return 1;
  return 2;
}

}  // namespace sasaki::cli
