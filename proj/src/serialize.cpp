#include "indicatrix/serialize.hpp"

#include <fstream>
#include <sstream>

namespace indicatrix {

namespace {

Rat rat_of(const json& j, const char* what) {
  try {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
  } catch (const std::exception& e) {
    throw SpecError(std::string(what) + ": " + e.what());
  }
  throw SpecError(std::string(what) + ": expected a rational string");
}

Card card_of(const json& j) {
  try {
    if (j.is_string()) return Card::parse(j.get<std::string>());
    if (j.is_number_integer()) return Card::finite(j.get<long>());
  } catch (const std::exception& e) {
    throw SpecError(std::string("value: ") + e.what());
  }
  throw SpecError("value: expected \"k\", \"omega\" or \"c\"");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

CComponent component_of(const json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "point") return CComponent::point(rat_of(j.contains("at") ? j.at("at") : field(j, "lo"), "point"));
  const Rat lo = rat_of(field(j, "lo"), "lo");
  const Rat hi = rat_of(field(j, "hi"), "hi");
  try {
    if (type == "interval") return CComponent::interval(lo, hi);
    if (type == "cantor") return CComponent::cantor(lo, hi);
  } catch (const std::exception& e) {
    throw SpecError(std::string("set: ") + e.what());
  }
  throw SpecError("unknown set type \"" + type + "\"");
}

json component_to_json(const CComponent& c) {
  switch (c.kind) {
    case CComponent::Kind::Point: return json{{"type", "point"}, {"at", c.lo.str()}};
    case CComponent::Kind::Interval: return json{{"type", "interval"}, {"lo", c.lo.str()}, {"hi", c.hi.str()}};
    case CComponent::Kind::Cantor: return json{{"type", "cantor"}, {"lo", c.lo.str()}, {"hi", c.hi.str()}};
  }
  return {};
}

json strs(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

json cards(const std::vector<Card>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

json address_json(const Address& a) { return address_str(a); }

Address address_of(const std::string& s) {
  Address a;
  for (char c : s) a.push_back(static_cast<std::uint8_t>(c - '0'));
  return a;
}

}  // namespace

StepSpec spec_from_json(const json& j) {
  std::vector<Rat> bps;
  for (const auto& x : field(j, "breakpoints")) bps.push_back(rat_of(x, "breakpoint"));
  std::vector<Card> pcs;
  for (const auto& x : field(j, "pieceValues")) pcs.push_back(card_of(x));
  std::vector<Card> pts;
  for (const auto& x : field(j, "pointValues")) pts.push_back(card_of(x));
  std::vector<Overlay> ovs;
  if (j.contains("overlays")) {
    for (const auto& o : j.at("overlays")) {
      std::vector<CComponent> comps;
      const json& set = field(o, "set");
      if (set.is_array()) {
        for (const auto& c : set) comps.push_back(component_of(c));
      } else {
        comps.push_back(component_of(set));
      }
      ovs.push_back({field(o, "piece").get<std::size_t>(), CSet(std::move(comps))});
    }
  }
  return StepSpec(std::move(bps), std::move(pcs), std::move(pts), std::move(ovs));
}

SpecFile spec_file_from_json(const json& j) {
  try {
    SpecFile s;
    s.spec = spec_from_json(j);
    if (j.contains("endpoints")) {
      const json& e = j.at("endpoints");
      s.a = rat_of(field(e, "a"), "endpoint a");
      s.b = rat_of(field(e, "b"), "endpoint b");
    }
    return s;
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  }
}

json spec_to_json(const StepSpec& f) {
  json j;
  j["breakpoints"] = strs(f.breakpoints());
  j["pieceValues"] = cards(f.pieces());
  j["pointValues"] = cards(f.points());
  json ovs = json::array();
  for (const auto& o : f.overlays()) {
    json set = json::array();
    for (const auto& c : o.set.components()) set.push_back(component_to_json(c));
    ovs.push_back(json{{"piece", o.piece}, {"set", set}});
  }
  j["overlays"] = ovs;
  return j;
}

json spec_file_to_json(const SpecFile& s) {
  json j = spec_to_json(s.spec);
  j["endpoints"] = json{{"a", s.a.str()}, {"b", s.b.str()}};
  return j;
}

json plf_to_json(const Plf& g) {
  json out = json::array();
  for (const auto& v : g.vertices()) out.push_back(json::array({v.x.str(), v.y.str()}));
  return out;
}

Plf plf_from_json(const json& j) {
  std::vector<Vertex> v;
  for (const auto& p : j) v.push_back({rat_of(p.at(0), "x"), rat_of(p.at(1), "y")});
  return Plf(std::move(v));
}

json assembly_to_json(const Assembly& s) {
  const BuildArtifact& c = s.core;
  json j;
  j["format"] = "indicatrix-artifact";
  j["version"] = kArtifactVersion;
  j["spec"] = spec_to_json(s.spec);
  j["endpoints"] = json{{"a", s.a.str()}, {"b", s.b.str()}};
  j["mode"] = mode_name(c.mode);
  j["stages"] = c.opts.stages;
  j["seqDepth"] = c.opts.seq_depth;
  j["window"] = c.opts.window ? json::array({c.opts.window->lo.str(), c.opts.window->hi.str()}) : json(nullptr);

  json core;
  core["spec"] = spec_to_json(c.spec);
  core["families"] = c.families;
  json simple = json::array();
  for (const auto& p : c.simple) simple.push_back(spec_to_json(p));
  core["simple"] = simple;
  json zones = json::array();
  for (const auto& z : c.zones)
    zones.push_back(json{{"lo", z.lo.str()}, {"hi", z.hi.str()}, {"accumulatesAtLo", z.accumulates_at_lo}});
  core["zones"] = zones;
  json stages = json::array();
  for (std::size_t n = 0; n < c.stages.size(); ++n)
    stages.push_back(json{{"n", n}, {"errorBound", c.error_bound(n).str()}, {"vertices", plf_to_json(c.stages[n])}});
  core["stages"] = stages;
  json rects = json::array();
  for (std::size_t i = 0; i < c.rects.size(); ++i) {
    const Rect& r = c.rects[i];
    rects.push_back(json{{"id", i},
                         {"level", r.level},
                         {"address", address_json(r.d.address)},
                         {"label", r.d.label},
                         {"parent", r.parent ? json(*r.parent) : json(nullptr)},
                         {"x", json::array({r.d.xlo.str(), r.d.xhi.str()})},
                         {"y", json::array({r.d.ylo.str(), r.d.yhi.str()})},
                         {"orient", r.d.orient == Orient::Ascending ? "asc" : "desc"},
                         {"interval", r.d.source},
                         {"meetsC", r.meets_c}});
  }
  core["rectangles"] = rects;
  json usage = json::array();
  for (const auto& u : c.usage)
    usage.push_back(json{{"interval", u.interval}, {"rect", u.rect}, {"level", u.level}, {"queue", u.queue}});
  core["usage"] = usage;
  j["core"] = core;

  json as;
  as["reflected"] = s.reflected;
  as["ramps"] = json{{"left", s.ramp_left}, {"right", s.ramp_right}};
  json pl = json::array();
  for (const auto& p : s.plateaus)
    pl.push_back(json{{"level", p.level.str()}, {"anchor", p.anchor.str()}, {"width", p.width.str()}, {"stage", p.stage}});
  as["plateaus"] = pl;
  json st = json::array();
  for (std::size_t n = 0; n < s.stages.size(); ++n) st.push_back(json{{"n", n}, {"vertices", plf_to_json(s.stages[n])}});
  as["stages"] = st;
  j["assembly"] = as;
  return j;
}

Assembly assembly_from_json(const json& j) {
  try {
    if (field(j, "format").get<std::string>() != "indicatrix-artifact") throw SpecError("not an artifact file");
    if (field(j, "version").get<int>() != kArtifactVersion) throw SpecError("unsupported artifact version");
    Assembly s;
    s.spec = spec_from_json(field(j, "spec"));
    s.a = rat_of(field(field(j, "endpoints"), "a"), "a");
    s.b = rat_of(field(field(j, "endpoints"), "b"), "b");

    BuildArtifact& c = s.core;
    c.mode = field(j, "mode").get<std::string>() == "general" ? BuildMode::General : BuildMode::Countable;
    c.opts.stages = field(j, "stages").get<std::size_t>();
    c.opts.seq_depth = field(j, "seqDepth").get<std::size_t>();
    if (!field(j, "window").is_null())
      c.opts.window = ClosedInterval{rat_of(j.at("window").at(0), "window"), rat_of(j.at("window").at(1), "window")};

    const json& core = field(j, "core");
    c.spec = spec_from_json(field(core, "spec"));
    c.families = field(core, "families").get<std::size_t>();
    for (const auto& p : field(core, "simple")) c.simple.push_back(spec_from_json(p));
    for (const auto& z : field(core, "zones"))
      c.zones.push_back({rat_of(z.at("lo"), "zone"), rat_of(z.at("hi"), "zone"), z.at("accumulatesAtLo").get<bool>()});
    for (const auto& st : field(core, "stages")) c.stages.push_back(plf_from_json(field(st, "vertices")));
    for (const auto& r : field(core, "rectangles")) {
      Rect rect;
      rect.level = r.at("level").get<std::size_t>();
      if (!r.at("parent").is_null()) rect.parent = r.at("parent").get<std::size_t>();
      rect.d.address = address_of(r.at("address").get<std::string>());
      rect.d.label = r.at("label").get<int>();
      rect.d.xlo = rat_of(r.at("x").at(0), "x");
      rect.d.xhi = rat_of(r.at("x").at(1), "x");
      rect.d.ylo = rat_of(r.at("y").at(0), "y");
      rect.d.yhi = rat_of(r.at("y").at(1), "y");
      rect.d.orient = r.at("orient").get<std::string>() == "asc" ? Orient::Ascending : Orient::Descending;
      rect.d.source = r.at("interval").get<std::string>();
      rect.meets_c = r.at("meetsC").get<bool>();
      c.rects.push_back(std::move(rect));
    }
    for (const auto& u : field(core, "usage"))
      c.usage.push_back({u.at("interval").get<std::string>(), u.at("rect").get<std::size_t>(), u.at("level").get<std::size_t>(),
                         u.at("queue").get<std::size_t>()});

    const json& as = field(j, "assembly");
    s.reflected = field(as, "reflected").get<bool>();
    s.ramp_left = field(as, "ramps").at("left").get<bool>();
    s.ramp_right = field(as, "ramps").at("right").get<bool>();
    for (const auto& p : field(as, "plateaus")) {
      Plateau pl{rat_of(p.at("level"), "level"), rat_of(p.at("anchor"), "anchor"), rat_of(p.at("width"), "width"),
                 p.at("stage").get<std::size_t>()};
      s.plan.entries.push_back({pl.level, Card::continuum()});
      s.plateaus.push_back(pl);
    }
    for (const auto& st : field(as, "stages")) s.stages.push_back(plf_from_json(field(st, "vertices")));
    if (s.stages.empty() || s.stages.size() != c.stages.size()) throw SpecError("artifact stage lists do not match");
    return s;
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed artifact: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("malformed artifact: ") + e.what());
  }
}

json violation_to_json(const Violation& v) {
  json j;
  j["y"] = v.y.str();
  j["piece"] = v.piece ? json(*v.piece) : json(nullptr);
  j["region"] = region_name(v.region);
  j["clause"] = clause_name(v.clause);
  j["reducedSpec"] = v.on_reduced;
  j["value"] = v.value.str();
  j["sides"] = json::array({v.sides.left.str(), v.sides.right.str()});
  return j;
}

json validation_to_json(const ValidationResult& r) {
  json j;
  j["accepted"] = r.ok();
  if (r.certificate) {
    const Certificate& c = *r.certificate;
    json cj;
    cj["a"] = c.a.str();
    cj["b"] = c.b.str();
    cj["reflected"] = c.reflected;
    cj["exceptional"] = strs(c.exceptional);
    json checked = json::array();
    for (const auto& l : c.checked)
      checked.push_back(json{{"y", l.y.str()},
                             {"piece", l.piece ? json(*l.piece) : json(nullptr)},
                             {"region", region_name(l.region)},
                             {"reducedSpec", l.delegated}});
    cj["checked"] = checked;
    j["certificate"] = cj;
  }
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back(violation_to_json(v));
  j["violations"] = vs;
  return j;
}

json section_to_json(const SectionReport& r) {
  json j;
  j["y"] = r.y.str();
  j["expected"] = r.expected.str();
  j["kind"] = r.kind;
  j["counts"] = r.counts;
  j["stableFrom"] = r.stable_from ? json(*r.stable_from) : json(nullptr);
  j["chains"] = r.chains;
  j["maxChainsPerLabel"] = r.max_chains_per_label;
  if (r.witness) {
    j["witness"] = json{{"address", address_str(r.address)},
                        {"depth", r.witness->depth},
                        {"branchingLevels", r.witness->branching_levels},
                        {"leaves", r.witness->leaves},
                        {"complete", r.witness->complete}};
  }
  j["consistent"] = r.consistent;
  return j;
}

std::string sample_csv(const Plf& g, std::size_t points, int digits) {
  std::ostringstream os;
  os << "x,y\n";
  const long m = static_cast<long>(points);
  for (long k = 0; k < m; ++k) {
    const Rat x = m == 1 ? Rat(0) : Rat(k, m - 1);
    const Rat y = plf_eval(g, x);
    if (digits > 0) {
      os << x.decimal(digits) << "," << y.decimal(digits) << "\n";
    } else {
      os << x.str() << "," << y.str() << "\n";
    }
  }
  return os.str();
}

std::string plot_svg(const Plf& g) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
  os << "<rect x=\"50\" y=\"50\" width=\"900\" height=\"900\" fill=\"none\" stroke=\"#888\" stroke-width=\"2\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  os.setf(std::ios::fixed);
  os.precision(3);
  bool first = true;
  for (const auto& v : g.vertices()) {
    // floats only here: screen coordinates
    const double px = 50.0 + 900.0 * v.x.to_double();
    const double py = 950.0 - 900.0 * v.y.to_double();
    os << (first ? "" : " ") << px << "," << py;
    first = false;
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SpecError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace indicatrix
