#include "qz/funeq.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"
#include "qz/expr.hpp"

namespace qz {

long long SymmetryData::univariate_exponent() const {
    return std::accumulate(c_exps.begin(), c_exps.end(), 0LL);
}

Monomial SymmetryData::predicted_monomial(bool collapse) const {
    Monomial m;
    m.coeff = sign;
    m.q_exp = static_cast<int>(b);
    if (collapse)
        m.t_exps = {static_cast<int>(univariate_exponent())};
    else
        m.t_exps.assign(c_exps.begin(), c_exps.end());
    return m;
}

SymmetryData predicted_symmetry(const Representation& rep) {
    CentralizerSeries series = centralizer_series(rep);
    SymmetryData s;
    s.n = rep.total_rank();
    s.sign = s.n % 2 == 0 ? 1 : -1;
    for (int h = 0; h < rep.num_vertices(); ++h) {
        const long long nh = rep.rank(h);
        s.b += nh * (nh - 1) / 2;
        int ch = 0;
        for (int i = 0; i < series.c; ++i) ch += series.corank[h][i];
        s.c_exps.push_back(ch);
    }
    return s;
}

FuneqReport verify_funeq(const RationalFn& zeta, const SymmetryData& predicted) {
    const int arity = zeta.shape().t_arity;
    const int vertices = static_cast<int>(predicted.c_exps.size());
    if (arity != vertices && arity != 1)
        throw Error("verify_funeq: zeta has " + std::to_string(arity) +
                    " t-variables, expected " + std::to_string(vertices) + " or 1");
    const bool collapse = arity == 1;

    FuneqReport report;
    report.predicted = predicted;
    const Monomial want = predicted.predicted_monomial(collapse);

    std::optional<Monomial> ratio = monomial_ratio(zeta.invert_qt(), zeta);
    report.ratio_is_monomial = ratio.has_value();
    if (ratio) {
        report.observed = *ratio;
        report.holds = *ratio == want;
        if (!report.holds) {
            // Residual factor observed / predicted.
            Monomial r;
            r.coeff = ratio->coeff / want.coeff;
            r.q_exp = ratio->q_exp - want.q_exp;
            r.t_exps.resize(ratio->t_exps.size());
            for (size_t i = 0; i < r.t_exps.size(); ++i)
                r.t_exps[i] = ratio->t_exps[i] - want.t_exps[i];
            report.residual = r.to_string();
        }
        return report;
    }

    report.holds = false;
    // The ratio is not a monomial at all; render it when symbols do not block
    // the division.
    try {
        IntPoly m(zeta.shape());
        IntPoly::Key key(zeta.shape().key_size(), 0);
        key[0] = want.q_exp;
        for (size_t i = 0; i < want.t_exps.size(); ++i) key[1 + i] = want.t_exps[i];
        m.add_term(key, predicted.sign);
        RationalFn full = zeta.invert_qt() / (RationalFn::from_poly(m) * zeta);
        report.residual = expr::render(full);
    } catch (const Error&) {
        report.residual = "(transformed-to-original ratio is not a monomial)";
    }
    return report;
}

std::string funeq_report_json(const FuneqReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.predicted.n;
    j["predicted"] = {{"sign", report.predicted.sign},
                      {"q_exp", report.predicted.b},
                      {"t_exps", report.predicted.c_exps}};
    if (report.observed) {
        std::ostringstream coeff;
        coeff << report.observed->coeff;
        j["observed"] = {{"coeff", coeff.str()},
                         {"q_exp", report.observed->q_exp},
                         {"t_exps", report.observed->t_exps}};
    } else {
        j["observed"] = nullptr;
    }
    j["ratio_is_monomial"] = report.ratio_is_monomial;
    j["holds"] = report.holds;
    if (!report.holds) j["residual"] = report.residual;
    return j.dump();
}

}  // namespace qz
