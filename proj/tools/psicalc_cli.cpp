// Batch driver for the deformed operator calculus library: build presets,
// generate basic sequences, run the identity verification battery, expand
// and classify operators, and emit JSON or text reports.
//
// Exit codes: 0 success, 1 identity failure, 2 input error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "psicalc/psicalc.hpp"
#include "psicalc/serialization.hpp"

using namespace psicalc;

namespace {

struct Config {
    int cap = 16;
    std::string psi_label = "classical";
    std::string q_text;
    std::string r_text;
    std::string n_psi_text;
    std::uint64_t seed = 12345;
    bool json = false;
};

std::vector<Scalar> parse_scalar_list(const std::string& text) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) out.push_back(parse_scalar(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

RationalFunction parse_rational_function(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("rational function spec is 'num0,num1,...:den0,den1,...'");
    return RationalFunction(parse_scalar_list(text.substr(0, colon)),
                            parse_scalar_list(text.substr(colon + 1)));
}

PsiSequence config_psi(const Config& cfg) {
    std::optional<Scalar> q;
    if (!cfg.q_text.empty()) q = parse_scalar(cfg.q_text);
    if (cfg.psi_label == "custom") {
        if (cfg.n_psi_text.empty()) throw MissingParameter("custom preset needs --n-psi");
        return PsiSequence::custom(parse_scalar_list(cfg.n_psi_text), cfg.cap);
    }
    std::optional<RationalFunction> r;
    if (!cfg.r_text.empty()) r = parse_rational_function(cfg.r_text);
    return make_preset(cfg.psi_label, q, cfg.cap, r);
}

DeltaSeries parse_delta(const std::string& spec, const PsiSequence& psi) {
    if (spec == "d_psi") return d_psi_series(psi);
    if (spec == "forward-difference") return forward_difference_series(psi);
    if (spec == "d-plus-d2") return DeltaSeries(psi, {Scalar(0), Scalar(1), Scalar(1)});
    if (spec == "identity-series") return series_const(psi, Scalar(1));
    if (!spec.empty() && spec.front() == '[') {
        std::vector<Scalar> coeffs;
        for (const auto& c : Json::parse(spec)) coeffs.push_back(parse_scalar(c.get<std::string>()));
        return DeltaSeries(psi, std::move(coeffs));
    }
    throw ParseError("unknown delta spec '" + spec + "'");
}

OpMatrix parse_operator(const std::string& spec, const Config& cfg, const PsiSequence& psi) {
    const int cap = cfg.cap;
    if (spec == "d_psi") return d_psi_op(psi);
    if (spec == "d_classical") return d_classical_op(cap);
    if (spec == "d_zero") return d_zero_op(cap);
    if (spec == "x-hat") return x_hat_op(cap);
    if (spec == "x-hat-psi") return x_hat_psi_op(psi);
    if (spec == "identity") return OpMatrix::identity(cap);
    if (spec == "number") return op_compose(x_hat_op(cap), d_psi_op(psi));
    if (spec == "forward-difference") return realize(forward_difference_series(psi));
    if (spec == "d-xhat-d") {
        const OpMatrix d = d_classical_op(cap);
        return op_compose(d, op_compose(x_hat_op(cap), d));
    }
    if (spec == "half-dxd-minus-third-d3") {
        const OpMatrix d = d_classical_op(cap);
        return Scalar(1, 2) * op_compose(d, op_compose(x_hat_op(cap), d)) -
               Scalar(1, 3) * op_pow(d, 3);
    }
    if (spec == "d_q") {
        if (cfg.q_text.empty()) throw MissingParameter("operator d_q needs --q");
        return d_q_op(parse_scalar(cfg.q_text), cap);
    }
    if (!spec.empty() && spec.front() == '[') return op_from_json(Json::parse(spec), cap);
    throw ParseError("unknown operator spec '" + spec + "'");
}

// ---------------------------------------------------------------------------
// verify: the identity battery

struct ItemResult {
    std::string name;
    enum class Status { pass, fail, report } status;
    std::string note;
};

using Items = std::vector<ItemResult>;

void add(Items& items, const std::string& name, bool ok, const std::string& note = "") {
    items.push_back({name, ok ? ItemResult::Status::pass : ItemResult::Status::fail, note});
}

void add_report(Items& items, const std::string& name, const std::string& note) {
    items.push_back({name, ItemResult::Status::report, note});
}

Items run_suite(const std::string& suite, const PsiSequence& psi, const Config& cfg) {
    Items items;
    const int cap = psi.cap();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    const auto rnd = [&] { return Scalar(num(rng), den(rng)); };
    const auto rnd_poly = [&](int max_deg) {
        Poly p(cap);
        for (int i = 0; i <= max_deg; ++i) p.set_coeff(i, rnd());
        return p;
    };

    if (suite == "ghw") {
        const OpMatrix c = op_commutator(d_psi_op(psi), x_hat_psi_op(psi));
        add(items, "ghw/ladder-bracket-id", op_equal_on(c, OpMatrix::identity(cap), cap - 1));
        bool ordering = true;
        for (int n = 0; n <= 3 && 2 * (n + 3) <= cap; ++n)
            for (int m = 0; m <= 3; ++m) ordering = ordering && ghw_leibniz_check(psi, n, m);
        add(items, "ghw/normal-ordering", ordering);
        const int k = std::min(6, cap / 2);
        add(items, "ghw/exponential-commutation",
            ghw_exponential_check(psi, Scalar(1), Scalar(1), k), "K=" + std::to_string(k));
    } else if (suite == "leibniz") {
        bool ok = true;
        for (int trial = 0; trial < 10; ++trial)
            ok = ok && leibniz_product_check(psi, rnd_poly(cap / 2), rnd_poly(cap / 2));
        add(items, "leibniz/product-rules", ok);
        bool d0 = true;
        for (int m = 0; m <= cap; ++m) d0 = d0 && d_zero_series_check(m, cap);
        add(items, "leibniz/divided-difference-series", d0);
    } else if (suite == "binomial") {
        const int m = std::min(8, cap - 1);
        const BasicSequence seq =
            basic_sequence(forward_difference_series(psi), m, BasicSource::rodrigues);
        bool ok = true;
        for (const Scalar& y : {Scalar(1), Scalar(-1), Scalar(1, 2)}) {
            for (int n = 0; n <= m; ++n) {
                Poly rhs(cap);
                for (int kk = 0; kk <= n; ++kk)
                    rhs = rhs + psi.binomial(n, kk) *
                                    seq.polys[static_cast<std::size_t>(n - kk)].eval(y) *
                                    seq.polys[static_cast<std::size_t>(kk)];
                ok = ok && translate(psi, y, seq, n) == rhs;
            }
        }
        add(items, "binomial/basic-sequence-identity", ok);
        add(items, "binomial/exp-product-identity", exp_product_identity_check(psi, std::min(10, cap)));
    } else if (suite == "note21") {
        // Report-only: even powers of the deformed (1 + (-1)) vanish
        // classically but not for general deformations.
        std::string values;
        bool all_zero = true;
        for (int n = 1; 2 * n <= std::min(cap, 10); ++n) {
            const Scalar v = translate(psi, Scalar(-1), 2 * n).eval(Scalar(1));
            all_zero = all_zero && v == 0;
            values += (n > 1 ? ", " : "") + to_fraction_string(v);
        }
        add_report(items, "note21/even-power-vanishing",
                   std::string(all_zero ? "all zero" : "nonzero") + " [" + values + "]");
        const OpMatrix self = op_commutator(d_psi_op(psi), d_psi_op(psi));
        add(items, "note21/self-commutation", op_is_zero_on(self, cap));
    } else if (suite == "poisson") {
        const int m = std::min(4, cap / 3);
        const int so = cap - m - 1;
        const PoissonModel model = poisson_build(psi, Scalar(1, 2), m, so);
        add(items, "poisson/recurrence", poisson_recurrence_check(model));
        add(items, "poisson/partial-sums", poisson_partial_sum_check(model));
        add(items, "poisson/normalizer-unit", poisson_normalizer_unit_check(model));
        add(items, "poisson/operator-route", poisson_operator_route_check(model));
        add(items, "poisson/exp-shift-law",
            star_exp_shift_law_check(psi, Scalar(1), Scalar(-1), std::min(10, cap)));
        add_report(items, "poisson/exp-literal-variant",
                   star_exp_literal_variant_check(psi, Scalar(1), Scalar(1), std::min(8, cap))
                       ? "holds"
                       : "fails (deformed weights)");
        bool star_ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            const Poly f = rnd_poly(3);
            star_ok = star_ok && star_leibniz_check(psi, f, x_to_star_basis(rnd_poly(3), psi));
            star_ok = star_ok && star_composition_check(psi, f, rnd_poly(3));
        }
        add(items, "poisson/star-rules", star_ok);
    } else if (suite == "integration") {
        bool ok = true;
        const OpMatrix d = d_psi_op(psi);
        for (int n = 0; n <= cap - 1; ++n) {
            const Poly mono = Poly::monomial(n, cap);
            ok = ok && d.apply(psi_integral(psi, mono)) == mono;
        }
        add(items, "integration/psi-right-inverse", ok);
        const Scalar q = psi.q() ? *psi.q() : Scalar(1, 2);
        bool qok = true;
        for (int n = 0; n <= cap - 1; ++n) {
            const Poly mono = Poly::monomial(n, cap);
            qok = qok && d_q_op(q, cap).apply(q_integral(q, mono)) == mono;
            qok = qok && q_integral_op_oracle(q, cap).apply(mono) == q_integral(q, mono);
        }
        add(items, "integration/jackson-right-inverse-and-oracle", qok);
        const RationalFunction rf({Scalar(1), Scalar(1)}, {Scalar(1)});
        bool rok = true;
        for (int n = 0; n <= cap - 1; ++n) {
            const Poly mono = Poly::monomial(n, cap);
            rok = rok && d_r_op(rf, q, cap).apply(r_integral(rf, q, mono)) == mono;
        }
        add(items, "integration/r-right-inverse", rok);
    } else if (suite == "expansion-roundtrip") {
        const OpMatrix qm = d_psi_op(psi);
        const int order = std::min(8, cap - 2);
        bool ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            OpMatrix t(cap);
            for (int j = 0; j <= cap; ++j) t.set_column(j, rnd_poly(std::min(cap, j + 2)));
            const OpExpansion e = expand_in_q(t, qm, psi, order, BasisMode::x_hat);
            ok = ok && reconstruction_check(e, t);
            ok = ok && expand_in_q(reconstruct(e), qm, psi, order, BasisMode::x_hat).q_polys ==
                           e.q_polys;
        }
        add(items, "expansion/reconstruction-uniqueness", ok, "seed=" + std::to_string(cfg.seed));
        std::vector<Poly> q_polys(7, Poly::zero(cap));
        q_polys[1] = Poly::one(cap);
        add(items, "expansion/indicator-conjugation",
            psi_exponential_indicator_check(q_polys, psi, std::min(6, cap)));
    } else if (suite == "pincherle") {
        bool ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Scalar> c;
            for (int k = 0; k <= 5; ++k) c.push_back(rnd());
            const DeltaSeries s(psi, c);
            ok = ok && op_equal_within_validity(realize(series_formal_derivative(s)),
                                                pincherle(realize(s), psi));
        }
        add(items, "pincherle/series-vs-bracket", ok);
        bool star_ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Scalar> c;
            for (int k = 0; k <= 4; ++k) c.push_back(rnd());
            star_ok = star_ok && psi_pincherle_matrix_check(c, psi) && psi_pincherle_unit_check(c, psi);
        }
        add(items, "pincherle/raising-series-derivation", star_ok);
    } else if (suite == "egf") {
        const int order = std::min(6, cap - 1);
        const BasicSequence mono = basic_sequence(d_psi_series(psi), order, BasicSource::rodrigues);
        add(items, "egf/bare-derivative", egf_eigen_check(d_psi_series(psi), mono, order));
        const DeltaSeries fd = forward_difference_series(psi);
        add(items, "egf/forward-difference",
            egf_eigen_check(fd, basic_sequence(fd, order, BasicSource::rodrigues), order));
    } else if (suite == "sheffer") {
        const int m = std::min(6, cap - 1);
        const BasicSequence seq = basic_sequence(d_psi_series(psi), m, BasicSource::rodrigues);
        bool ok = true;
        try {
            sheffer_sequence(seq, DeltaSeries(psi, {Scalar(1), Scalar(1)}));
            sheffer_sequence(seq, translation_series(psi, Scalar(1)));
        } catch (const Error&) {
            ok = false;
        }
        add(items, "sheffer/binomial-theorem", ok);
    } else if (suite == "bridge") {
        add(items, "bridge/derivative-difference",
            classical_bridge_check(std::min(5, cap / 2), cap), "classical deformation");
    } else {
        throw ParseError("unknown suite '" + suite + "'");
    }
    return items;
}

const std::vector<std::string> kAllSuites{"ghw",       "leibniz",  "binomial",
                                          "note21",    "poisson",  "integration",
                                          "expansion-roundtrip",   "pincherle",
                                          "egf",       "sheffer",  "bridge"};

int cmd_verify(const Config& cfg, const std::string& suites_text) {
    const PsiSequence psi = config_psi(cfg);
    std::vector<std::string> suites;
    if (suites_text.empty() || suites_text == "all") {
        suites = kAllSuites;
    } else {
        std::size_t start = 0;
        while (start <= suites_text.size()) {
            const std::size_t comma = suites_text.find(',', start);
            suites.push_back(suites_text.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    Items all;
    for (const auto& s : suites) {
        const Items items = run_suite(s, psi, cfg);
        all.insert(all.end(), items.begin(), items.end());
    }

    bool any_fail = false;
    Json report = Json::array();
    for (const auto& item : all) {
        std::string status;
        switch (item.status) {
            case ItemResult::Status::pass: status = "PASS"; break;
            case ItemResult::Status::fail: status = "FAIL"; any_fail = true; break;
            case ItemResult::Status::report: status = "REPORT-ONLY"; break;
        }
        if (cfg.json) {
            report.push_back({{"name", item.name}, {"status", status}, {"note", item.note}});
        } else {
            std::cout << status << "  " << item.name;
            if (!item.note.empty()) std::cout << "  (" << item.note << ")";
            std::cout << "\n";
        }
    }
    if (cfg.json)
        std::cout << Json{{"psi", to_json(psi)}, {"seed", cfg.seed}, {"results", report}}.dump(2)
                  << "\n";
    return any_fail ? 1 : 0;
}

int cmd_basic_seq(const Config& cfg, const std::string& delta_text, int m) {
    const PsiSequence psi = config_psi(cfg);
    const DeltaSeries q = parse_delta(delta_text, psi);
    const std::vector<BasicSource> routes{BasicSource::rodrigues, BasicSource::lagrange1,
                                          BasicSource::lagrange2, BasicSource::lagrange3};
    std::vector<BasicSequence> results;
    for (const BasicSource route : routes) results.push_back(basic_sequence(q, m, route));
    bool agree = true;
    for (const auto& seq : results) agree = agree && seq.polys == results.front().polys;

    if (cfg.json) {
        Json j;
        j["psi"] = to_json(psi);
        j["delta"] = to_json(q);
        j["routes"] = Json::array();
        for (const auto& seq : results) j["routes"].push_back(to_json(seq));
        j["agree"] = agree;
        // If the basis is the monomial one, the generating series collapses
        // to the deformed exponential.
        j["monomial_basic"] = is_monomial_basic(results.front());
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t r = 0; r < routes.size(); ++r) {
            std::cout << basic_source_name(routes[r]) << ":\n";
            for (int n = 0; n <= m; ++n)
                std::cout << "  p_" << n << " = " << to_json(results[r].polys[static_cast<std::size_t>(n)]).dump()
                          << "\n";
        }
        std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_classify(const Config& cfg, const std::string& op_text) {
    const PsiSequence psi = config_psi(cfg);
    const OpMatrix q = parse_operator(op_text, cfg, psi);
    const RecognitionResult res = recognize_delta(q);
    std::cout << to_json(res).dump(2) << "\n";
    return 0;
}

int cmd_expand(const Config& cfg, const std::string& t_text, const std::string& q_text, int m,
               const std::string& basis) {
    const PsiSequence psi = config_psi(cfg);
    const OpMatrix t = parse_operator(t_text, cfg, psi);
    const OpMatrix qm = parse_operator(q_text, cfg, psi);
    std::optional<BasicSequence> basic;
    const BasisMode mode = basis == "x_hat_q" ? BasisMode::x_hat_q : BasisMode::x_hat;
    if (mode == BasisMode::x_hat_q)
        basic = normal_basic_general(qm, psi, std::min(cfg.cap, qm.validity()));
    const OpExpansion e = expand_in_q(t, qm, psi, m, mode, basic);
    const bool ok = reconstruction_check(e, t);
    const int lambda_cap = std::min(m, 6);
    Json j = to_json(e);
    j["reconstruction"] = ok ? "PASS" : "FAIL";
    Json ind = Json::array();
    const BiSeries p = indicator(e, lambda_cap);
    for (int n = 0; n <= lambda_cap; ++n) ind.push_back(to_json(p.term(n)));
    j["indicator"] = ind;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_translate(const Config& cfg, const std::string& y_text, int n, const std::string& poly_text) {
    const PsiSequence psi = config_psi(cfg);
    const Scalar y = parse_scalar(y_text);
    Poly result(cfg.cap);
    if (!poly_text.empty())
        result = translate(psi, y, poly_from_json(Json::parse(poly_text), cfg.cap));
    else
        result = translate(psi, y, n);
    std::cout << to_json(result).dump() << "\n";
    return 0;
}

int cmd_poisson(const Config& cfg, const std::string& lambda_text, int m, int series_order) {
    const PsiSequence psi = config_psi(cfg);
    const Scalar lam = parse_scalar(lambda_text);
    if (series_order < 0) series_order = cfg.cap - m - 1;
    const PoissonModel model = poisson_build(psi, lam, m, series_order);
    const bool ok = poisson_recurrence_check(model) && poisson_partial_sum_check(model) &&
                    poisson_normalizer_unit_check(model);
    Json j = to_json(model);
    j["checks"] = ok ? "PASS" : "FAIL";
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_integrate(const Config& cfg, const std::string& kind, const std::string& poly_text, int n) {
    const PsiSequence psi = config_psi(cfg);
    const Poly p = poly_text.empty() ? Poly::monomial(n, cfg.cap)
                                     : poly_from_json(Json::parse(poly_text), cfg.cap);
    Poly result(cfg.cap);
    bool round_trip = false;
    if (kind == "psi") {
        result = psi_integral(psi, p);
        round_trip = d_psi_op(psi).apply(result) == p;
    } else if (kind == "q") {
        if (cfg.q_text.empty()) throw MissingParameter("q-integration needs --q");
        const Scalar q = parse_scalar(cfg.q_text);
        result = q_integral(q, p);
        round_trip = d_q_op(q, cfg.cap).apply(result) == p;
    } else if (kind == "r") {
        if (cfg.q_text.empty() || cfg.r_text.empty())
            throw MissingParameter("R-integration needs --q and --R");
        const Scalar q = parse_scalar(cfg.q_text);
        const RationalFunction rf = parse_rational_function(cfg.r_text);
        result = r_integral(rf, q, p);
        round_trip = d_r_op(rf, q, cfg.cap).apply(result) == p;
    } else {
        throw ParseError("unknown integral kind '" + kind + "'");
    }
    Json j;
    j["integral"] = to_json(result);
    j["derivative-roundtrip"] = round_trip ? "PASS" : "FAIL";
    std::cout << j.dump(2) << "\n";
    return round_trip ? 0 : 1;
}

int cmd_table(const Config& cfg) {
    const PsiSequence psi = config_psi(cfg);
    if (cfg.json) {
        Json j = to_json(psi);
        Json fact = Json::array(), binom = Json::array();
        for (int nn = 0; nn <= psi.cap(); ++nn) {
            fact.push_back(to_fraction_string(psi.factorial(nn)));
            Json row = Json::array();
            for (int k = 0; k <= nn; ++k) row.push_back(to_fraction_string(psi.binomial(nn, k)));
            binom.push_back(row);
        }
        j["factorials"] = fact;
        j["binomials"] = binom;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "preset " << psi.label() << ", cap " << psi.cap() << "\n";
        std::cout << "n, n_psi, n_psi!\n";
        for (int nn = 0; nn <= psi.cap(); ++nn)
            std::cout << nn << ", " << to_fraction_string(psi.n_psi(nn)) << ", "
                      << to_fraction_string(psi.factorial(nn)) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformed finite operator calculus workbench"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--cap", cfg.cap, "truncation degree (>= 4)")->check(CLI::Range(4, 64));
    app.add_option("--psi", cfg.psi_label,
                   "preset: classical | ones | dxd | q-jackson | custom-R | custom");
    app.add_option("--q", cfg.q_text, "deformation parameter as num/den");
    app.add_option("--R", cfg.r_text, "rational function 'num0,num1,...:den0,den1,...'");
    app.add_option("--n-psi", cfg.n_psi_text, "custom deformed integers '0,1,...'");
    app.add_option("--seed", cfg.seed, "seed for randomized trials");
    app.add_flag("--json", cfg.json, "emit JSON instead of text");

    auto* verify = app.add_subcommand("verify", "run the identity battery");
    std::string suites;
    verify->add_option("--suite", suites, "comma-separated suite names (default all)");

    auto* basic = app.add_subcommand("basic-seq", "basic sequence through all four routes");
    std::string delta_text = "d_psi";
    int m_basic = 6;
    basic->add_option("--delta", delta_text, "series name or JSON coefficient array");
    basic->add_option("-M,--max-index", m_basic, "largest index to generate");

    auto* classify = app.add_subcommand("classify", "test whether an operator is a derivative series");
    std::string op_text;
    classify->add_option("--op", op_text, "operator name or JSON matrix")->required();

    auto* expand = app.add_subcommand("expand", "expand an operator in powers of a lowering operator");
    std::string t_text, q_text = "d_psi", basis = "x_hat";
    int m_expand = 6;
    expand->add_option("--T", t_text, "operator to expand")->required();
    expand->add_option("--Q", q_text, "lowering operator");
    expand->add_option("-M,--order", m_expand, "expansion order");
    expand->add_option("--basis", basis, "x_hat | x_hat_q");

    auto* translate_cmd = app.add_subcommand("translate", "generalized translation");
    std::string y_text = "1", poly_text;
    int n_translate = 2;
    translate_cmd->add_option("--y", y_text, "translation value as num/den");
    translate_cmd->add_option("--n", n_translate, "monomial degree");
    translate_cmd->add_option("--poly", poly_text, "JSON polynomial instead of a monomial");

    auto* poisson = app.add_subcommand("poisson", "Poisson-type distribution components");
    std::string lambda_text = "1/2";
    int m_poisson = 4, series_order = -1;
    poisson->add_option("--lambda", lambda_text, "rate as num/den");
    poisson->add_option("-M,--components", m_poisson, "largest component index");
    poisson->add_option("--series-order", series_order, "exponential truncation order");

    auto* integrate = app.add_subcommand("integrate", "right-inverse integrals");
    std::string kind = "psi", int_poly_text;
    int n_integrate = 2;
    integrate->add_option("--kind", kind, "psi | q | r");
    integrate->add_option("--poly", int_poly_text, "JSON polynomial");
    integrate->add_option("--n", n_integrate, "monomial degree when no polynomial is given");

    auto* table = app.add_subcommand("table", "deformed integers, factorials, binomials");

    // Global options may appear after the subcommand name.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg, suites);
        if (basic->parsed()) return cmd_basic_seq(cfg, delta_text, m_basic);
        if (classify->parsed()) return cmd_classify(cfg, op_text);
        if (expand->parsed()) return cmd_expand(cfg, t_text, q_text, m_expand, basis);
        if (translate_cmd->parsed()) return cmd_translate(cfg, y_text, n_translate, poly_text);
        if (poisson->parsed()) return cmd_poisson(cfg, lambda_text, m_poisson, series_order);
        if (integrate->parsed()) return cmd_integrate(cfg, kind, int_poly_text, n_integrate);
        if (table->parsed()) return cmd_table(cfg);
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
