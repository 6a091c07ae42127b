#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "harmcurv/critical.hpp"
#include "harmcurv/curvature.hpp"
#include "harmcurv/equivalence.hpp"
#include "harmcurv/poly.hpp"
#include "harmcurv/topology.hpp"

namespace harmcurv::io {

using json = nlohmann::ordered_json;

// {"coeffs": [[re, im], ...]}, ascending powers. Throws InputError on any
// malformed, non-numeric, non-finite or empty coefficient list.
ComplexPoly parse_poly(const json& doc);
ComplexPoly parse_poly(const std::string& text);
ComplexPoly read_poly_file(const std::filesystem::path& path);

json poly_json(const ComplexPoly& p);
json complex_json(Complex z);

// Fixed %.17g formatting, round-trip exact for doubles.
std::string format_real(double x);

json roots_json(const ComplexPoly& p, const RootSet& rs);
std::string roots_csv(const RootSet& rs);

json grid_json(const CurvatureGrid& grid);
std::string grid_csv(const CurvatureGrid& grid);

json hull_json(const ConvexHull2D& hull);
json critical_report_json(const ComplexPoly& p, const std::vector<CriticalPoint>& cps,
                          const Tolerances& tol);
std::string critical_csv(const std::vector<CriticalPoint>& cps);

json signature_json(const FiberSignature& sig, const std::vector<CriticalPoint>& cps);
std::string signature_csv(const FiberSignature& sig, const std::vector<CriticalPoint>& cps);

json components_json(const std::vector<LevelComponent>& comps);

json verdict_json(const EquivalenceVerdict& v);
std::string verdict_csv(const EquivalenceVerdict& v);

json loop_json(const std::vector<LoopSample>& samples);
std::string loop_csv(const std::vector<LoopSample>& samples);

}  // namespace harmcurv::io
