#include "polyzeta/dirichlet_poly.hpp"

#include <algorithm>
#include <numeric>

#include "polyzeta/contour.hpp"

namespace polyzeta {
namespace {

int degree_sum(const DirichletPolynomial::Degree& d) {
    return std::accumulate(d.begin(), d.end(), 0);
}

void check_caps(int num_vars, const DirichletPolynomial::TermMap& terms) {
    if (num_vars < 1 || num_vars > kMaxVariables)
        throw DegreeCapExceeded("DirichletPolynomial: variable count outside 1..7");
    if (terms.size() > kMaxPolyTerms)
        throw TermBudgetExceeded("DirichletPolynomial: term count exceeds 512");
    for (const auto& [deg, coeff] : terms) {
        if (static_cast<int>(deg.size()) != num_vars)
            throw std::invalid_argument("DirichletPolynomial: degree vector length mismatch");
        for (int d : deg)
            if (d < 0) throw std::invalid_argument("DirichletPolynomial: negative degree");
        if (degree_sum(deg) > kMaxTotalDegree)
            throw DegreeCapExceeded("DirichletPolynomial: total degree exceeds 8");
    }
}

}  // namespace

DirichletPolynomial::DirichletPolynomial(int num_vars, TermMap terms) : num_vars_(num_vars) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero()) it = terms.erase(it);
        else ++it;
    }
    // an empty map is the zero polynomial (intermediate results only)
    check_caps(num_vars, terms);
    terms_ = std::move(terms);
}

DirichletPolynomial DirichletPolynomial::variable(int j, int num_vars) {
    if (j < 0 || j >= num_vars) throw std::invalid_argument("variable index out of range");
    Degree d(num_vars, 0);
    d[j] = 1;
    TermMap m;
    m.emplace(std::move(d), GeneralDirichletSeries::constant(Cx(1.0, 0.0)));
    return DirichletPolynomial(num_vars, std::move(m));
}

DirichletPolynomial DirichletPolynomial::constant(const GeneralDirichletSeries& c, int num_vars) {
    TermMap m;
    m.emplace(Degree(num_vars, 0), c);
    return DirichletPolynomial(num_vars, std::move(m));
}

int DirichletPolynomial::max_variable_used() const {
    int mx = 0;
    for (const auto& [deg, coeff] : terms_)
        for (int j = 0; j < num_vars_; ++j)
            if (deg[j] > 0) mx = std::max(mx, j);
    return mx;
}

int DirichletPolynomial::total_degree() const {
    int mx = 0;
    for (const auto& [deg, coeff] : terms_) mx = std::max(mx, degree_sum(deg));
    return mx;
}

DirichletPolynomial DirichletPolynomial::padded(int num_vars) const {
    if (num_vars < num_vars_) throw std::invalid_argument("padded: cannot shrink");
    if (num_vars == num_vars_) return *this;
    TermMap m;
    for (const auto& [deg, coeff] : terms_) {
        Degree d = deg;
        d.resize(num_vars, 0);
        m.emplace(std::move(d), coeff);
    }
    return DirichletPolynomial(num_vars, std::move(m));
}

DirichletPolynomial poly_add(const DirichletPolynomial& P, const DirichletPolynomial& Q) {
    int nv = std::max(P.num_vars(), Q.num_vars());
    DirichletPolynomial p = P.padded(nv), q = Q.padded(nv);
    DirichletPolynomial::TermMap m = p.terms();
    for (const auto& [deg, coeff] : q.terms()) {
        auto it = m.find(deg);
        if (it == m.end()) m.emplace(deg, coeff);
        else it->second = ring_add(it->second, coeff);
    }
    return DirichletPolynomial(nv, std::move(m));
}

DirichletPolynomial poly_mul(const DirichletPolynomial& P, const DirichletPolynomial& Q) {
    int nv = std::max(P.num_vars(), Q.num_vars());
    DirichletPolynomial p = P.padded(nv), q = Q.padded(nv);
    DirichletPolynomial::TermMap m;
    for (const auto& [dp, cp] : p.terms()) {
        for (const auto& [dq, cq] : q.terms()) {
            DirichletPolynomial::Degree d(nv);
            for (int j = 0; j < nv; ++j) d[j] = dp[j] + dq[j];
            GeneralDirichletSeries prod = ring_mul(cp, cq);
            auto it = m.find(d);
            if (it == m.end()) m.emplace(std::move(d), std::move(prod));
            else it->second = ring_add(it->second, prod);
        }
    }
    return DirichletPolynomial(nv, std::move(m));
}

DirichletPolynomial poly_scale(const DirichletPolynomial& P, const GeneralDirichletSeries& c) {
    DirichletPolynomial::TermMap m;
    for (const auto& [deg, coeff] : P.terms()) m.emplace(deg, ring_mul(coeff, c));
    return DirichletPolynomial(P.num_vars(), std::move(m));
}

DirichletPolynomial poly_pow(const DirichletPolynomial& P, int k) {
    if (k < 0) throw std::invalid_argument("poly_pow: k >= 0 required");
    DirichletPolynomial acc = DirichletPolynomial::constant(
        GeneralDirichletSeries::constant(Cx(1.0, 0.0)), P.num_vars());
    for (int i = 0; i < k; ++i) acc = poly_mul(acc, P);
    return acc;
}

PolyClass classify(const DirichletPolynomial& P) {
    if (P.is_zero()) throw std::invalid_argument("classify: zero polynomial");
    if (P.terms().size() >= 2) return PolyClass::non_monomial;
    const auto& deg = P.terms().begin()->first;
    for (std::size_t j = 1; j < deg.size(); ++j)
        if (deg[j] > 0) return PolyClass::monomial_with_derivative;
    return PolyClass::monomial_plain;
}

Cx eval_composed(const ComposedFunction& F, Cx s) {
    if (F.poly.is_zero()) return Cx(0.0, 0.0);
    Cx w = s + Cx(0.0, F.tau);
    int top = F.poly.max_variable_used();
    std::vector<Cx> base_jets;
    if (F.base.jet) {
        base_jets = F.base.jet(w, top);
    } else {
        base_jets.resize(top + 1);
        for (int j = 0; j <= top; ++j) base_jets[j] = nth_derivative(F.base, w, j);
    }
    // powers table: pw[j][d] = (L^{(j)}(w))^d
    int nv = F.poly.num_vars();
    std::vector<std::vector<Cx>> pw(nv);
    for (int j = 0; j < nv; ++j) pw[j] = {Cx(1.0, 0.0)};
    Cx acc(0.0, 0.0);
    for (const auto& [deg, coeff] : F.poly.terms()) {
        Cx term = ds_eval(coeff, w).value;
        for (int j = 0; j < nv; ++j) {
            while (static_cast<int>(pw[j].size()) <= deg[j]) {
                Cx b = (j <= top) ? base_jets[j] : Cx(0.0, 0.0);
                pw[j].push_back(pw[j].back() * b);
            }
            term *= pw[j][deg[j]];
        }
        acc += term;
    }
    return acc;
}

DirichletPolynomial differentiate_composed(const DirichletPolynomial& P, int k) {
    if (k < 1) throw std::invalid_argument("differentiate_composed: k >= 1 required");
    DirichletPolynomial cur = P;
    for (int step = 0; step < k; ++step) {
        int nv = cur.num_vars() + 1;  // chain rule introduces X_{l+1}
        DirichletPolynomial::TermMap m;
        auto add_term = [&](DirichletPolynomial::Degree d, GeneralDirichletSeries c) {
            if (c.is_zero()) return;
            auto it = m.find(d);
            if (it == m.end()) m.emplace(std::move(d), std::move(c));
            else it->second = ring_add(it->second, c);
            if (m.size() > kMaxPolyTerms)
                throw TermBudgetExceeded("differentiate_composed: term count exceeds 512");
        };
        for (const auto& [deg0, coeff] : cur.terms()) {
            DirichletPolynomial::Degree deg = deg0;
            deg.resize(nv, 0);
            // D'(s) * X^deg
            add_term(deg, ds_derivative(coeff, 1));
            // D(s) * sum_j d_j X_j^{d_j - 1} X_{j+1} * rest
            for (int j = 0; j + 1 < nv; ++j) {
                if (deg[j] == 0) continue;
                DirichletPolynomial::Degree d = deg;
                int dj = d[j];
                d[j] -= 1;
                d[j + 1] += 1;
                add_term(std::move(d), coeff.scaled(Cx(static_cast<double>(dj), 0.0)));
            }
        }
        cur = DirichletPolynomial(nv, std::move(m));
    }
    return cur;
}

AnalyticFunction as_analytic(const ComposedFunction& F) {
    AnalyticFunction g;
    g.name = "composed(" + F.base.name + ")";
    ComposedFunction copy = F;
    g.eval = [copy](Cx s) { return eval_composed(copy, s); };
    g.max_derivative_order = 0;
    Cx shift(0.0, F.tau);
    for (const auto& p : F.base.poles) {
        long long order = 0;
        for (const auto& [deg, coeff] : F.poly.terms()) {
            long long o = 0;
            for (std::size_t j = 0; j < deg.size(); ++j)
                o += static_cast<long long>(deg[j]) * (p.order + static_cast<long long>(j));
            order = std::max(order, o);
        }
        if (order > 0) g.poles.push_back({p.location - shift, static_cast<int>(order)});
    }
    const auto& d = F.base.domain;
    g.domain = ComplexRect(d.sigma_min, d.sigma_max, d.t_min - F.tau, d.t_max - F.tau);
    return g;
}

}  // namespace polyzeta
