#include "polyzeta/json_io.hpp"

namespace polyzeta {

json region_to_json(const Contour& c) {
    if (std::holds_alternative<ComplexRect>(c)) {
        const auto& r = std::get<ComplexRect>(c);
        return {{"type", "rect"},
                {"sigma_min", r.sigma_min},
                {"sigma_max", r.sigma_max},
                {"t_min", r.t_min},
                {"t_max", r.t_max}};
    }
    const auto& d = std::get<Disk>(c);
    return {{"type", "disk"},
            {"center_re", d.center.real()},
            {"center_im", d.center.imag()},
            {"radius", d.radius}};
}

json to_json(const ZeroReport& report) {
    json zeros = json::array();
    for (const auto& z : report.zeros) {
        zeros.push_back({{"re", z.location.real()},
                         {"im", z.location.imag()},
                         {"mult", z.multiplicity},
                         {"residual", z.residual}});
    }
    json j = {{"region", region_to_json(report.region)},
              {"count", report.count},
              {"zeros", zeros},
              {"boundary_min_modulus", report.boundary_min_modulus},
              {"samples_used", report.samples_used}};
    if (report.unresolved_clusters > 0) j["unresolved_clusters"] = report.unresolved_clusters;
    return j;
}

json to_json(const RoucheCertificate& cert) {
    json j = {{"disk", region_to_json(Contour(cert.disk))},
              {"tau", cert.tau},
              {"max_diff", cert.max_diff},
              {"min_target", cert.min_target},
              {"pass", cert.pass},
              {"samples", cert.samples}};
    if (cert.zero_inside) {
        j["zero_inside"] = {{"re", cert.zero_inside->location.real()},
                            {"im", cert.zero_inside->location.imag()},
                            {"mult", cert.zero_inside->multiplicity},
                            {"residual", cert.zero_inside->residual}};
    }
    return j;
}

json to_json(const MeanValueResult& r) {
    json j = {{"sigma_or_eta", r.sigma_or_eta},
              {"theta", r.theta},
              {"order_u", r.order_u},
              {"order_v", r.order_v},
              {"T", r.T},
              {"integral_over_T_re", r.integral_over_T.real()},
              {"integral_over_T_im", r.integral_over_T.imag()},
              {"rel_error", r.rel_error}};
    if (r.predicted) {
        j["predicted_re"] = r.predicted->real();
        j["predicted_im"] = r.predicted->imag();
    }
    return j;
}

json to_json(const DensitySweep& sweep) {
    json rows = json::array();
    for (std::size_t i = 0; i < sweep.T_grid.size(); ++i) {
        json row = {{"T", sweep.T_grid[i]}, {"count", sweep.counts[i]}};
        if (!sweep.errors[i].empty()) row["error"] = sweep.errors[i];
        rows.push_back(row);
    }
    return {{"function", sweep.function_id},
            {"sigma_lo", sweep.sigma_lo},
            {"sigma_hi", sweep.sigma_hi},
            {"rows", rows},
            {"fit", {{"slope", sweep.fit.slope},
                     {"intercept", sweep.fit.intercept},
                     {"residual", sweep.fit.residual}}}};
}

json series_to_json(const GeneralDirichletSeries& series) {
    json terms = json::array();
    for (const auto& t : series.terms())
        terms.push_back({{"a_re", t.a.real()}, {"a_im", t.a.imag()}, {"lambda", t.lambda}});
    double A = series.tail_bound(1.0);  // summary; zero for exact series
    return {{"terms", terms}, {"tail", {{"A", A}, {"Lambda", series.lambda_last()}}}};
}

GeneralDirichletSeries series_from_json(const json& j) {
    if (j.contains("ordinary")) {
        const json& o = j.at("ordinary");
        std::vector<Cx> coeffs;
        for (const auto& c : o.at("coeffs")) {
            if (c.is_array()) coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
            else coeffs.emplace_back(c.get<double>(), 0.0);
        }
        double shift = o.value("shift", 0.0);
        double C = o.value("growth_C", -1.0);
        double theta = o.value("growth_theta", 0.0);
        return GeneralDirichletSeries::make_ordinary(coeffs, shift, C, theta);
    }
    std::vector<SeriesTerm> terms;
    for (const auto& t : j.at("terms")) {
        terms.push_back({Cx(t.at("a_re").get<double>(), t.at("a_im").get<double>()),
                         t.at("lambda").get<double>()});
    }
    TailPtr tail = tail_zero();
    if (j.contains("tail")) {
        double A = j.at("tail").value("A", 0.0);
        double Lambda = j.at("tail").value("Lambda", 0.0);
        double lambda_last = terms.empty() ? 0.0 : terms.back().lambda;
        if (A > 0.0) tail = tail_geometric(A, Lambda, lambda_last);
    }
    return GeneralDirichletSeries::from_terms(std::move(terms), std::move(tail));
}

json polynomial_to_json(const DirichletPolynomial& poly) {
    json terms = json::array();
    for (const auto& [deg, coeff] : poly.terms())
        terms.push_back({{"deg", deg}, {"coeff", series_to_json(coeff)}});
    return {{"l", poly.num_vars() - 1}, {"terms", terms}};
}

DirichletPolynomial polynomial_from_json(const json& j) {
    int l = j.at("l").get<int>();
    int nv = l + 1;
    DirichletPolynomial::TermMap m;
    for (const auto& t : j.at("terms")) {
        DirichletPolynomial::Degree deg = t.at("deg").get<std::vector<int>>();
        if (static_cast<int>(deg.size()) != nv)
            throw std::invalid_argument("polynomial_from_json: degree length != l+1");
        GeneralDirichletSeries coeff = series_from_json(t.at("coeff"));
        auto it = m.find(deg);
        if (it == m.end()) m.emplace(std::move(deg), std::move(coeff));
        else it->second = ring_add(it->second, coeff);
    }
    return DirichletPolynomial(nv, std::move(m));
}

}  // namespace polyzeta
