// Built-in rational models and JSON model-file ingestion. Every model, built
// in or loaded, goes through full fusion and modular verification; loading
// fails hard on any violation.

#include "kkfusion/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kkfusion {

using nlohmann::json;

namespace {

// sin(pi * num / den) as an exact element of Q(zeta_N):
// (zeta_{2 den}^num - zeta_{2 den}^{-num}) * (-i/2), with -i = zeta_4^3.
CyclotomicNumber sin_pi(long num, unsigned den, unsigned N) {
    if (N % (2 * den) != 0 || N % 4 != 0)
        throw std::logic_error("ambient order cannot express sin(pi*" + std::to_string(num) +
                               "/" + std::to_string(den) + ")");
    long step = static_cast<long>(N / (2 * den));
    CyclotomicNumber diff =
        cyc_normalize({{step * num, Rational(1)}, {-step * num, Rational(-1)}}, N);
    CyclotomicNumber minus_i_half =
        CyclotomicNumber::zeta_power(N, 3L * static_cast<long>(N / 4), Rational(1, 2));
    return cyc_mul(diff, minus_i_half);
}

Model finalize_builtin(std::string name, FusionRing ring, std::optional<ModularData> md) {
    VerificationReport rep = verify_fusion_ring(ring);
    if (!rep.all_passed())
        throw std::logic_error("builtin '" + name + "' failed fusion verification: " +
                               rep.summary());
    if (md) {
        VerificationReport mrep = verify_modular_data(*md);
        if (!mrep.all_passed())
            throw std::logic_error("builtin '" + name + "' failed modular verification: " +
                                   mrep.summary());
    }
    return Model{std::move(name), std::move(ring), std::move(md)};
}

Model build_trivial() {
    FusionRing ring({"1"}, std::vector<FusionEntry>{{0, 0, 0, Int(1)}});
    ModularData md = make_modular_data(1, 1, {CyclotomicNumber::one(1)}, Rational(0),
                                       {Rational(0)});
    return finalize_builtin("trivial", std::move(ring), std::move(md));
}

Model build_ising() {
    const unsigned N = 48;
    std::vector<FusionEntry> fus;
    for (std::size_t j = 0; j < 3; ++j) {
        fus.push_back({0, j, j, Int(1)});
        if (j != 0) fus.push_back({j, 0, j, Int(1)});
    }
    // labels: 1, psi, sigma
    fus.push_back({1, 1, 0, Int(1)});
    fus.push_back({1, 2, 2, Int(1)});
    fus.push_back({2, 1, 2, Int(1)});
    fus.push_back({2, 2, 0, Int(1)});
    fus.push_back({2, 2, 1, Int(1)});
    FusionRing ring({"1", "psi", "sigma"}, fus);

    const Rational half(1, 2);
    CyclotomicNumber h = CyclotomicNumber::from_rational(half, N);
    CyclotomicNumber hr2 = half * sqrt_of_integer(2, N);
    CyclotomicNumber zero = CyclotomicNumber::zero(N);
    std::vector<CyclotomicNumber> S = {h,   h,           hr2,           //
                                       h,   h,           cyc_neg(hr2),  //
                                       hr2, cyc_neg(hr2), zero};
    ModularData md = make_modular_data(3, N, std::move(S), half,
                                       {Rational(0), half, Rational(1, 16)});
    return finalize_builtin("ising", std::move(ring), std::move(md));
}

Model build_fibonacci() {
    const unsigned N = 60;
    std::vector<FusionEntry> fus = {{0, 0, 0, Int(1)}, {0, 1, 1, Int(1)}, {1, 0, 1, Int(1)},
                                    {1, 1, 0, Int(1)}, {1, 1, 1, Int(1)}};
    FusionRing ring({"1", "tau"}, fus);

    CyclotomicNumber f = Rational(2, 5) * sqrt_of_integer(5, N);  // 2/sqrt(5)
    CyclotomicNumber s1 = cyc_mul(f, sin_pi(1, 5, N));
    CyclotomicNumber s2 = cyc_mul(f, sin_pi(2, 5, N));
    std::vector<CyclotomicNumber> S = {s1, s2, s2, cyc_neg(s1)};
    ModularData md = make_modular_data(2, N, std::move(S), Rational(14, 5),
                                       {Rational(0), Rational(2, 5)});
    return finalize_builtin("fibonacci", std::move(ring), std::move(md));
}

Model build_su2(unsigned k) {
    if (k < 1 || k > 10) throw std::invalid_argument("su2 level must be in 1..10");
    const unsigned q = k + 2;
    const unsigned n = k + 1;
    const unsigned N = (k % 2 == 0) ? 4 * q : 8 * q;

    // truncated Clebsch-Gordan rules
    std::vector<FusionEntry> fus;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t lo = a > b ? a - b : b - a;
                std::size_t hi = std::min(a + b, 2 * static_cast<std::size_t>(k) - a - b);
                if (lo <= c && c <= hi && (a + b + c) % 2 == 0) fus.push_back({a, b, c, Int(1)});
            }
    std::vector<std::string> labels;
    for (unsigned a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    FusionRing ring(std::move(labels), fus);

    CyclotomicNumber root = Rational(1, static_cast<long>(q)) * sqrt_of_integer(2 * q, N);
    std::vector<CyclotomicNumber> S;
    S.reserve(n * n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            S.push_back(cyc_mul(root, sin_pi(static_cast<long>((a + 1) * (b + 1)), q, N)));

    std::vector<Rational> h;
    for (unsigned a = 0; a < n; ++a)
        h.push_back(Rational(Int(a * (a + 2)), Int(4 * q)));
    ModularData md = make_modular_data(n, N, std::move(S),
                                       Rational(Int(3 * k), Int(q)), std::move(h));
    return finalize_builtin("su2_" + std::to_string(k), std::move(ring), std::move(md));
}

Model build_zn(unsigned n) {
    if (n < 2 || n > 12) throw std::invalid_argument("z_n order must be in 2..12");
    const unsigned N = std::lcm(2 * n, 24u);

    std::vector<FusionEntry> fus;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) fus.push_back({a, b, (a + b) % n, Int(1)});
    std::vector<std::string> labels;
    for (unsigned a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    FusionRing ring(std::move(labels), fus);

    // metric-group data: h_a = q(a) for the standard quadratic refinement of
    // B(a,b) = ab/n, S_ab = e^{-2 pi i ab/n}/sqrt(n)
    std::vector<Rational> h;
    for (unsigned a = 0; a < n; ++a) {
        Rational ha = (n % 2 == 0) ? Rational(Int(a) * Int(a), Int(2 * n))
                                   : Rational(Int(a) * Int(a) * Int((n + 1) / 2), Int(n));
        ha -= Rational(ha.floor());
        h.push_back(ha);
    }

    CyclotomicNumber rootn = sqrt_of_integer(n, N);
    CyclotomicNumber inv_rootn = Rational(1, static_cast<long>(n)) * rootn;  // 1/sqrt(n)
    std::vector<CyclotomicNumber> S;
    S.reserve(n * n);
    const long step = static_cast<long>(N / n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            long e = -static_cast<long>((a * b) % n) * step;
            S.push_back(cyc_mul(inv_rootn, CyclotomicNumber::zeta_power(N, e)));
        }

    // central charge mod 8 from the exact Gauss-Milgram sum
    CyclotomicNumber gauss = CyclotomicNumber::zero(N);
    for (unsigned a = 0; a < n; ++a) {
        Rational e = h[a] * Rational(Int(N));
        gauss = cyc_add(gauss,
                        CyclotomicNumber::zeta_power(N, static_cast<long>(e.numerator().get_si())));
    }
    std::optional<unsigned> sigma;
    for (unsigned s = 0; s < 8; ++s) {
        CyclotomicNumber cand =
            cyc_mul(rootn, CyclotomicNumber::zeta_power(N, static_cast<long>(s * (N / 8))));
        if (gauss == cand) {
            sigma = s;
            break;
        }
    }
    if (!sigma) throw std::logic_error("Gauss-Milgram sum did not land on an eighth root");

    ModularData md = make_modular_data(n, N, std::move(S), Rational(Int(*sigma)), std::move(h));
    return finalize_builtin("z_" + std::to_string(n), std::move(ring), std::move(md));
}

}  // namespace

Model builtin(const std::string& name, std::optional<unsigned> param) {
    if (name == "trivial" || name == "ising" || name == "fibonacci") {
        if (param)
            throw std::invalid_argument("model '" + name + "' takes no parameter");
        if (name == "trivial") return build_trivial();
        if (name == "ising") return build_ising();
        return build_fibonacci();
    }
    if (name == "su2") {
        if (!param) throw std::invalid_argument("su2 needs a level (--k)");
        return build_su2(*param);
    }
    if (name == "z_n") {
        if (!param) throw std::invalid_argument("z_n needs an order (--n)");
        return build_zn(*param);
    }
    throw std::invalid_argument("unknown builtin model '" + name + "'");
}

// ---------------------------------------------------------------------------
// JSON model files

namespace {

json cyc_to_json(const CyclotomicNumber& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
    return json{{"order", v.order()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyc_from_json(const json& j, unsigned ambient) {
    if (!j.is_object()) throw ParseError("cyclotomic entry must be an object");
    if (j.contains("zeta_pow")) {
        if (!j["zeta_pow"].is_number_integer())
            throw ParseError("zeta_pow must be an integer");
        long k = j["zeta_pow"].get<long>();
        Rational scale(1);
        if (j.contains("scale")) scale = Rational::parse(j["scale"].get<std::string>());
        unsigned ord = ambient;
        if (j.contains("order")) ord = j["order"].get<unsigned>();
        if (ord == 0 || ambient % ord != 0)
            throw ParseError("cyclotomic entry order must divide the ambient order");
        return CyclotomicNumber::zeta_power(ord, k, scale);
    }
    if (!j.contains("order") || !j.contains("coeffs"))
        throw ParseError("cyclotomic entry needs order and coeffs (or zeta_pow)");
    unsigned ord = j["order"].get<unsigned>();
    if (ord == 0 || ambient % ord != 0)
        throw ParseError("cyclotomic entry order must divide the ambient order");
    if (!j["coeffs"].is_array() || j["coeffs"].size() != euler_phi(ord))
        throw ParseError("cyclotomic entry needs phi(order) coefficients");
    std::vector<std::pair<long, Rational>> terms;
    long e = 0;
    for (const auto& c : j["coeffs"]) {
        terms.emplace_back(e++, Rational::parse(c.get<std::string>()));
    }
    return cyc_normalize(terms, ord);
}

}  // namespace

std::string serialize_model(const Model& m) {
    json doc;
    doc["name"] = m.name;
    doc["rank"] = m.ring.rank();
    doc["labels"] = m.ring.labels();
    json fus = json::array();
    for (const auto& e : m.ring.sparse()) {
        if (!e.value.fits_slong_p())
            throw std::logic_error("fusion multiplicity too large to serialize");
        fus.push_back(json::array({e.i, e.j, e.k, e.value.get_si()}));
    }
    doc["fusion"] = fus;
    if (m.modular) {
        const ModularData& md = *m.modular;
        doc["ambient_order"] = md.ambient_order;
        doc["central_charge"] = md.central_charge.str();
        json ws = json::array();
        for (const auto& w : md.weights) ws.push_back(w.str());
        doc["weights"] = ws;
        json s = json::array();
        for (std::size_t i = 0; i < md.rank; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < md.rank; ++j) row.push_back(cyc_to_json(md.s(i, j)));
            s.push_back(row);
        }
        doc["S"] = s;
    }
    return doc.dump(2) + "\n";
}

bool LoadedModel::verified() const { return model.has_value(); }

LoadedModel load_model_report(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }

    try {
        if (!doc.is_object()) throw ParseError("model document must be a JSON object");
        for (const char* key : {"name", "rank", "labels", "fusion"})
            if (!doc.contains(key))
                throw ParseError(std::string("missing required field '") + key + "'");

        std::string name = doc["name"].get<std::string>();
        std::size_t rank = doc["rank"].get<std::size_t>();
        std::vector<std::string> labels = doc["labels"].get<std::vector<std::string>>();
        if (labels.size() != rank) throw ParseError("labels length does not match rank");

        std::vector<FusionEntry> fus;
        if (!doc["fusion"].is_array()) throw ParseError("fusion must be an array of quadruples");
        for (const auto& e : doc["fusion"]) {
            if (!e.is_array() || e.size() != 4) throw ParseError("fusion entry must be [i,j,k,N]");
            std::size_t i = e[0].get<std::size_t>(), j = e[1].get<std::size_t>(),
                        k = e[2].get<std::size_t>();
            long v = e[3].get<long>();
            if (i >= rank || j >= rank || k >= rank)
                throw ParseError("fusion tensor index out of range");
            if (v < 0) throw ParseError("fusion multiplicities must be nonnegative");
            fus.push_back({i, j, k, Int(v)});
        }

        FusionRing ring(std::move(labels), fus);
        LoadedModel lm;
        lm.name = name;
        lm.fusion_report = verify_fusion_ring(ring);
        bool ok = lm.fusion_report.all_passed();

        std::optional<ModularData> md;
        if (doc.contains("S")) {
            for (const char* key : {"ambient_order", "central_charge", "weights"})
                if (!doc.contains(key))
                    throw ParseError(std::string("S requires field '") + key + "'");
            unsigned ambient = doc["ambient_order"].get<unsigned>();
            if (ambient == 0) throw ParseError("ambient_order must be positive");
            Rational c = Rational::parse(doc["central_charge"].get<std::string>());
            std::vector<Rational> h;
            for (const auto& w : doc["weights"]) h.push_back(Rational::parse(w.get<std::string>()));
            if (h.size() != rank) throw ParseError("weights length does not match rank");

            if (!doc["S"].is_array() || doc["S"].size() != rank)
                throw ParseError("S must be a rank x rank matrix");
            std::vector<CyclotomicNumber> entries;
            for (const auto& row : doc["S"]) {
                if (!row.is_array() || row.size() != rank)
                    throw ParseError("S must be a rank x rank matrix");
                for (const auto& cell : row) entries.push_back(cyc_from_json(cell, ambient));
            }

            try {
                md = make_modular_data(rank, ambient, std::move(entries), c, std::move(h));
            } catch (const std::invalid_argument& e) {
                lm.modular_report = VerificationReport{{CheckResult{"t_phases", false, e.what()}}};
                ok = false;
            }
            if (md) {
                lm.modular_report = verify_modular_data(*md);
                ok = ok && lm.modular_report->all_passed();
            }
        }

        if (ok) lm.model = Model{std::move(name), std::move(ring), std::move(md)};
        return lm;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed model document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Model load_model(std::istream& in) {
    LoadedModel lm = load_model_report(in);
    if (!lm.model) {
        if (!lm.fusion_report.all_passed())
            throw VerificationError("fusion verification failed: " + lm.fusion_report.summary(),
                                    lm.fusion_report);
        throw VerificationError("modular verification failed: " + lm.modular_report->summary(),
                                *lm.modular_report);
    }
    return std::move(*lm.model);
}

Model load_model_text(const std::string& json_text) {
    std::istringstream in(json_text);
    return load_model(in);
}

Model load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path);
    return load_model(in);
}

}  // namespace kkfusion
