#include "dtn/geometry.hpp"

#include <json.hpp>

namespace dtn {

std::string curvature_report_json(const CurvatureReport<AtomPoly>& r) {
    using nlohmann::json;
    auto s = [](const AtomPoly& p) { return p.to_string(); };
    auto list = [&](const std::vector<AtomPoly>& v) {
        json a = json::array();
        for (const auto& x : v) a.push_back(s(x));
        return a;
    };
    json out;
    out["schema"] = 1;
    out["dim"] = r.n;
    out["order"] = r.order;
    out["kappa"] = list(r.kappa);
    out["H"] = s(r.H);
    out["sum_kappa2"] = s(r.sum_kappa_pow(2));
    out["sum_kappa3"] = s(r.sum_kappa_pow(3));
    out["tildeScalar"] = s(r.tildeScalar);
    out["tildeRicci_nn"] = s(r.tRic_nn());
    out["boundaryScalar"] = s(r.boundaryScalar);
    out["K0"] = s(r.K0);
    out["sum_kappa_tildeRicci"] = s(r.sum_kappa_tilde_ricci());
    out["sum_kappa_Ricci"] = s(r.sum_kappa_ricci());
    json tric = json::array();
    for (int j = 1; j <= r.n; ++j) {
        json row = json::array();
        for (int k = 1; k <= r.n; ++k) row.push_back(s(r.tRic(j, k)));
        tric.push_back(row);
    }
    out["tildeRicci"] = tric;
    json bric = json::array();
    for (int a = 1; a <= r.d(); ++a) {
        json row = json::array();
        for (int b = 1; b <= r.d(); ++b) row.push_back(s(r.Ric(a, b)));
        bric.push_back(row);
    }
    out["boundaryRicci"] = bric;
    out["nablaRicNN"] = r.nablaRicNN ? json(s(*r.nablaRicNN)) : json(nullptr);
    out["laplacePhi"] = s(r.laplacePhi);
    out["laplacePhiCoordinate"] = s(r.laplacePhiCoordinate);
    out["gradPhiSq"] = s(r.gradPhiSq);
    out["phi_n"] = s(r.phi_n);
    out["phi_nn"] = s(r.phi_nn);
    out["phi_nnn"] = r.phi_nnn ? json(s(*r.phi_nnn)) : json(nullptr);
    out["phi_alpha"] = list(r.phi_alpha);
    out["phi_naa"] = list(r.phi_naa);
    out["V"] = s(r.V0);
    out["V_n"] = r.V_n ? json(s(*r.V_n)) : json(nullptr);
    out["normalDerivGroup"] = r.normalDerivGroup ? json(s(*r.normalDerivGroup)) : json(nullptr);
    out["normalDerivGroupCoordinate"] = r.normalDerivGroupCoordinate ? json(s(*r.normalDerivGroupCoordinate)) : json(nullptr);
    return out.dump(2);
}

} // namespace dtn
