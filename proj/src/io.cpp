#include "harmcurv/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "harmcurv/errors.hpp"

namespace harmcurv::io {

ComplexPoly parse_poly(const json& doc) {
  if (!doc.is_object() || !doc.contains("coeffs")) {
    throw InputError("polynomial document must be an object with \"coeffs\"");
  }
  const json& arr = doc.at("coeffs");
  if (!arr.is_array() || arr.empty()) throw InputError("\"coeffs\" must be a non-empty array");

  std::vector<Complex> coeffs;
  coeffs.reserve(arr.size());
  for (const json& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      throw InputError("each coefficient must be a [re, im] pair of numbers");
    }
    coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return ComplexPoly(std::move(coeffs));
}

ComplexPoly parse_poly(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return parse_poly(doc);
}

ComplexPoly read_poly_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open polynomial file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_poly(buf.str());
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json poly_json(const ComplexPoly& p) {
  json arr = json::array();
  for (const Complex& c : p.coeffs()) arr.push_back(complex_json(c));
  return json{{"coeffs", std::move(arr)}};
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

json roots_json(const ComplexPoly& p, const RootSet& rs) {
  json arr = json::array();
  for (const Root& r : rs.roots) {
    arr.push_back({{"location", complex_json(r.location)},
                   {"multiplicity", r.multiplicity},
                   {"residual", r.residual}});
  }
  return json{{"degree", p.degree()}, {"roots", std::move(arr)}};
}

std::string roots_csv(const RootSet& rs) {
  std::string out = "re,im,multiplicity,residual\n";
  for (const Root& r : rs.roots) {
    out += fmt::format("{},{},{},{}\n", format_real(r.location.real()),
                       format_real(r.location.imag()), r.multiplicity, format_real(r.residual));
  }
  return out;
}

json grid_json(const CurvatureGrid& g) {
  return json{{"domain", {g.domain.xmin, g.domain.xmax, g.domain.ymin, g.domain.ymax}},
              {"nx", g.nx},
              {"ny", g.ny},
              {"min", g.min_value},
              {"max", g.max_value},
              {"values", g.values}};
}

std::string grid_csv(const CurvatureGrid& g) {
  const Lattice lat = g.lattice();
  std::string out = "x,y,K\n";
  out.reserve(out.size() + lat.size() * 64);
  for (std::size_t idx = 0; idx < lat.size(); ++idx) {
    const Complex z = lat.point(idx);
    out += format_real(z.real());
    out += ',';
    out += format_real(z.imag());
    out += ',';
    out += format_real(g.values[idx]);
    out += '\n';
  }
  return out;
}

json hull_json(const ConvexHull2D& hull) {
  json arr = json::array();
  for (const Complex& v : hull.vertices) arr.push_back(complex_json(v));
  return arr;
}

namespace {

json critical_point_json(const CriticalPoint& cp) {
  return json{{"location", complex_json(cp.location)},
              {"u", cp.u_value},
              {"v", cp.v_value},
              {"kind", to_string(cp.kind)},
              {"fpp", complex_json(cp.fpp)},
              {"multiplicity", cp.multiplicity}};
}

}  // namespace

json critical_report_json(const ComplexPoly& p, const std::vector<CriticalPoint>& cps,
                          const Tolerances& tol) {
  json points = json::array();
  for (const CriticalPoint& cp : cps) points.push_back(critical_point_json(cp));
  json doc{{"degree", p.degree()}, {"critical_points", std::move(points)}};

  const FlatSet flat = flat_points(p, tol);
  json flat_doc{{"identically_flat", flat.identically_flat}};
  json flat_arr = json::array();
  for (const Root& r : flat.points.roots) {
    flat_arr.push_back({{"location", complex_json(r.location)}, {"multiplicity", r.multiplicity}});
  }
  flat_doc["points"] = std::move(flat_arr);
  doc["flat_points"] = std::move(flat_doc);

  if (p.degree() >= 2) {
    const GaussLucasReport gl = gauss_lucas_report(p, tol);
    doc["gauss_lucas"] = {{"hull_of_f_roots", hull_json(gl.hull_of_f_roots)},
                          {"hull_of_fprime_roots", hull_json(gl.hull_of_fprime_roots)},
                          {"fprime_roots_contained", gl.fprime_roots_contained},
                          {"fsecond_roots_contained_in_delta", gl.fsecond_roots_contained_in_delta},
                          {"max_violation_distance", gl.max_violation_distance}};
    doc["flat_set_bound"] = flat_set_bound_check(p, tol);
  }
  return doc;
}

std::string critical_csv(const std::vector<CriticalPoint>& cps) {
  std::string out = "x,y,u,v,kind,fpp_re,fpp_im,multiplicity\n";
  for (const CriticalPoint& cp : cps) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", format_real(cp.location.real()),
                       format_real(cp.location.imag()), format_real(cp.u_value),
                       format_real(cp.v_value), to_string(cp.kind), format_real(cp.fpp.real()),
                       format_real(cp.fpp.imag()), cp.multiplicity);
  }
  return out;
}

namespace {

double class_level(const FiberSignature& sig, int member) {
  for (const LevelClass& cls : sig.level_partition) {
    for (int m : cls.members) {
      if (m == member) return cls.value;
    }
  }
  return 0.0;
}

}  // namespace

json signature_json(const FiberSignature& sig, const std::vector<CriticalPoint>& cps) {
  json classes = json::array();
  for (const LevelClass& cls : sig.level_partition) {
    json pts = json::array();
    for (int m : cls.members) pts.push_back(complex_json(cps[static_cast<std::size_t>(m)].location));
    classes.push_back({{"value", cls.value}, {"members", cls.members}, {"points", std::move(pts)}});
  }
  json pairs = json::array();
  for (const FiberPair& pr : sig.same_fiber) {
    pairs.push_back({{"a", pr.a}, {"b", pr.b}, {"level", class_level(sig, pr.a)}, {"same", pr.same}});
  }
  return json{{"saddle_count", sig.saddle_count},
              {"degenerate_count", sig.degenerate_count},
              {"level_classes", std::move(classes)},
              {"same_fiber_pairs", std::move(pairs)}};
}

std::string signature_csv(const FiberSignature& sig, const std::vector<CriticalPoint>& cps) {
  std::string out = "class,level,index,x,y\n";
  for (std::size_t c = 0; c < sig.level_partition.size(); ++c) {
    const LevelClass& cls = sig.level_partition[c];
    for (int m : cls.members) {
      const Complex z = cps[static_cast<std::size_t>(m)].location;
      out += fmt::format("{},{},{},{},{}\n", c, format_real(cls.value), m, format_real(z.real()),
                         format_real(z.imag()));
    }
  }
  return out;
}

json components_json(const std::vector<LevelComponent>& comps) {
  json arr = json::array();
  for (const LevelComponent& c : comps) {
    arr.push_back({{"level", c.level}, {"cells", c.cells}, {"contains_critical", c.contains_critical}});
  }
  return arr;
}

json verdict_json(const EquivalenceVerdict& v) {
  json doc{{"equivalent", v.equivalent}, {"flat_case", v.flat_case}};
  if (v.certificate) {
    doc["alpha"] = complex_json(v.certificate->alpha);
    doc["beta"] = complex_json(v.certificate->beta);
    doc["residual"] = v.certificate->residual;
  }
  if (v.witness) {
    doc["witness"] = {{"point", complex_json(v.witness->point)},
                      {"K_P", v.witness->k_p},
                      {"K_Q", v.witness->k_q}};
  }
  return doc;
}

std::string verdict_csv(const EquivalenceVerdict& v) {
  std::string out =
      "equivalent,flat_case,alpha_re,alpha_im,beta_re,beta_im,residual,witness_x,witness_y,K_P,K_Q\n";
  out += fmt::format("{},{},", v.equivalent, v.flat_case);
  if (v.certificate) {
    const Certificate& c = *v.certificate;
    out += fmt::format("{},{},{},{},{},", format_real(c.alpha.real()), format_real(c.alpha.imag()),
                       format_real(c.beta.real()), format_real(c.beta.imag()),
                       format_real(c.residual));
  } else {
    out += ",,,,,";
  }
  if (v.witness) {
    const Witness& w = *v.witness;
    out += fmt::format("{},{},{},{}", format_real(w.point.real()), format_real(w.point.imag()),
                       format_real(w.k_p), format_real(w.k_q));
  } else {
    out += ",,,";
  }
  out += '\n';
  return out;
}

namespace {

std::size_t same_fiber_count(const FiberSignature& sig) {
  std::size_t n = 0;
  for (const FiberPair& pr : sig.same_fiber) n += pr.same ? 1 : 0;
  return n;
}

}  // namespace

json loop_json(const std::vector<LoopSample>& samples) {
  json arr = json::array();
  for (const LoopSample& s : samples) {
    arr.push_back({{"t", s.t},
                   {"curvature_deviation", s.curvature_deviation},
                   {"saddle_count", s.signature.saddle_count},
                   {"level_classes", s.signature.level_partition.size()},
                   {"same_level_pairs", s.signature.same_level_pairs()},
                   {"same_fiber_pairs", same_fiber_count(s.signature)},
                   {"poly", poly_json(s.poly)}});
  }
  return json{{"samples", std::move(arr)}};
}

std::string loop_csv(const std::vector<LoopSample>& samples) {
  std::string out = "t,curvature_deviation,saddle_count,level_classes,same_level_pairs,same_fiber_pairs\n";
  for (const LoopSample& s : samples) {
    out += fmt::format("{},{},{},{},{},{}\n", format_real(s.t), format_real(s.curvature_deviation),
                       s.signature.saddle_count, s.signature.level_partition.size(),
                       s.signature.same_level_pairs(), same_fiber_count(s.signature));
  }
  return out;
}

}  // namespace harmcurv::io
