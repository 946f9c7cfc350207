// Command-line front end: verification reports, fusion/KK matrices, Verlinde
// round-trips and modular-invariant classification, emitted as JSON with a
// deterministic "data" section ("meta" carries timing and is excluded from
// golden comparisons).

#include <CLI11.hpp>
#include <json.hpp>

#include "kkfusion/catalog.hpp"
#include "kkfusion/kk.hpp"
#include "kkfusion/modular.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using json = nlohmann::json;
using namespace kkfusion;

constexpr const char* kVersion = "0.1.0";

struct ModelOptions {
    std::string name;
    std::string file;
    unsigned k = 0;
    unsigned n = 0;
    bool has_k = false;
    bool has_n = false;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
    cmd->add_option("model", opts.name,
                    "builtin model name: trivial | ising | fibonacci | su2 | z_n");
    cmd->add_option("--file", opts.file, "load the model from a JSON file instead");
    cmd->add_option("--k", opts.k, "level for su2")->each([&](const std::string&) {
        opts.has_k = true;
    });
    cmd->add_option("--n", opts.n, "order for z_n")->each([&](const std::string&) {
        opts.has_n = true;
    });
}

Model resolve_model(const ModelOptions& opts) {
    if (!opts.file.empty()) return load_model_file(opts.file);
    if (opts.name.empty())
        throw std::invalid_argument("no model given (name or --file)");
    std::optional<unsigned> param;
    if (opts.has_k && opts.has_n)
        throw std::invalid_argument("give at most one of --k and --n");
    if (opts.has_k) param = opts.k;
    if (opts.has_n) param = opts.n;
    return builtin(opts.name, param);
}

json mat_json(const KKClass& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

json report_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    return json{{"checks", checks}, {"passed", rep.all_passed()}};
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const json& data, const Timer& timer, std::optional<unsigned> jobs = std::nullopt) {
    json meta{{"version", kVersion}, {"wall_ms", timer.ms()}};
    if (jobs) meta["jobs"] = *jobs;
    json doc{{"data", data}, {"meta", meta}};
    std::cout << doc.dump(2) << "\n";
}

int run_verify(const ModelOptions& opts) {
    Timer timer;
    json data;
    bool ok = true;
    if (!opts.file.empty()) {
        std::ifstream in(opts.file);
        if (!in) throw ParseError("cannot open model file: " + opts.file);
        LoadedModel lm = load_model_report(in);
        data["model"] = lm.name;
        data["fusion"] = report_json(lm.fusion_report);
        data["modular"] = lm.modular_report ? report_json(*lm.modular_report) : json();
        ok = lm.verified();
        if (lm.model) data["rank"] = lm.model->ring.rank();
    } else {
        Model m = resolve_model(opts);
        VerificationReport fr = verify_fusion_ring(m.ring);
        data["model"] = m.name;
        data["rank"] = m.ring.rank();
        data["fusion"] = report_json(fr);
        ok = fr.all_passed();
        if (m.modular) {
            VerificationReport mr = verify_modular_data(*m.modular);
            data["modular"] = report_json(mr);
            ok = ok && mr.all_passed();
        } else {
            data["modular"] = json();
        }
    }
    emit(data, timer);
    return ok ? 0 : 1;
}

int run_eta(const ModelOptions& opts, const std::string& sector) {
    Timer timer;
    Model m = resolve_model(opts);
    auto idx = m.ring.index_of(sector);
    if (!idx) throw std::invalid_argument("unknown sector label '" + sector + "'");
    json data{{"model", m.name},
              {"sector", sector},
              {"matrix", mat_json(fusion_matrix(m.ring, *idx))}};
    emit(data, timer);
    return 0;
}

int run_kk(const ModelOptions& opts, const std::string& product, bool theorem2,
           bool properness) {
    Timer timer;
    Model m = resolve_model(opts);
    const std::size_t n = m.ring.rank();
    json data{{"model", m.name}, {"sectors", m.ring.labels()}};

    json jmats;
    for (std::size_t i = 0; i < n; ++i)
        jmats[m.ring.labels()[i]] = mat_json(kk_from_sector(m.ring, i));
    data["j"] = jmats;

    bool ok = true;
    if (!product.empty()) {
        auto comma = product.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--product wants two sector labels 'a,b'");
        std::string a = product.substr(0, comma), b = product.substr(comma + 1);
        auto ia = m.ring.index_of(a), ib = m.ring.index_of(b);
        if (!ia || !ib) throw std::invalid_argument("unknown sector label in --product");
        KKClass prod = kasparov_product(kk_from_sector(m.ring, *ia), kk_from_sector(m.ring, *ib));
        data["product"] = json{{"left", a}, {"right", b}, {"matrix", mat_json(prod)}};
    }
    if (theorem2) {
        VerificationReport rep = verify_theorem2(m.ring);
        data["theorem2"] = report_json(rep);
        ok = ok && rep.all_passed();
    }
    if (properness) {
        PropernessReport rep = properness_witness(m.ring);
        json p{{"j_image_commutes", rep.j_image_commutes}};
        if (rep.witness) {
            p["witness"] = json{{"left", mat_json(rep.witness->left)},
                                {"right", mat_json(rep.witness->right)},
                                {"left_then_right", mat_json(rep.witness->left_then_right)},
                                {"right_then_left", mat_json(rep.witness->right_then_left)}};
        } else {
            p["witness"] = json();
        }
        data["properness"] = p;
    }
    emit(data, timer);
    return ok ? 0 : 1;
}

int run_verlinde(const ModelOptions& opts) {
    Timer timer;
    Model m = resolve_model(opts);
    if (!m.modular)
        throw std::invalid_argument("model '" + m.name + "' carries no modular data");
    FusionRing recomputed = verlinde_fusion(*m.modular, &m.ring.labels());

    json tensor = json::array();
    for (const auto& e : recomputed.sparse())
        tensor.push_back(json::array({e.i, e.j, e.k, e.value.get_si()}));

    json diff = json::array();
    const std::size_t n = m.ring.rank();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (m.ring.coeff(i, j, k) != recomputed.coeff(i, j, k))
                    diff.push_back(json{{"i", i},
                                        {"j", j},
                                        {"k", k},
                                        {"catalog", m.ring.coeff(i, j, k).get_str()},
                                        {"verlinde", recomputed.coeff(i, j, k).get_str()}});

    bool match = diff.empty();
    json data{{"model", m.name}, {"matches_catalog", match}, {"tensor", tensor}, {"diff", diff}};
    emit(data, timer);
    return match ? 0 : 1;
}

int run_invariants(const ModelOptions& opts, const std::string& bound_mult,
                   const std::string& format, unsigned jobs) {
    Timer timer;
    Model m = resolve_model(opts);
    if (!m.modular)
        throw std::invalid_argument("model '" + m.name + "' carries no modular data");
    Rational mult = Rational::parse(bound_mult);
    EnumerationResult res = enumerate_modular_invariants(*m.modular, mult, jobs);

    if (format == "csv") {
        std::cout << "model,invariant_count\n"
                  << m.name << "," << res.invariants.size() << "\n";
        return 0;
    }

    json inv = json::array();
    for (const auto& z : res.invariants)
        inv.push_back(json{{"Z", mat_json(z.matrix)}, {"kk_class", mat_json(z.kk_class())}});
    json data{{"model", m.name},
              {"rank", m.modular->rank},
              {"commutant_dimension", res.commutant_dimension},
              {"bound_multiplier", res.bound_multiplier.str()},
              {"entry_bound", mat_json(res.entry_bound)},
              {"count", res.invariants.size()},
              {"invariants", inv}};
    emit(data, timer, jobs);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion-ring / KK-matrix / modular-invariant toolkit"};
    app.require_subcommand(1);

    ModelOptions verify_opts, eta_opts, kk_opts, verlinde_opts, inv_opts;

    CLI::App* verify = app.add_subcommand("verify", "fusion + modular verification report");
    add_model_options(verify, verify_opts);

    CLI::App* eta = app.add_subcommand("eta", "fusion matrix of a sector");
    add_model_options(eta, eta_opts);
    std::string sector;
    eta->add_option("--sector", sector, "sector label")->required();

    CLI::App* kk = app.add_subcommand("kk", "KK classes, products, Theorem 2 report");
    add_model_options(kk, kk_opts);
    std::string product;
    bool theorem2 = false, properness = false;
    kk->add_option("--product", product, "Kasparov product of two sectors 'a,b'");
    kk->add_flag("--theorem2", theorem2, "run the Theorem 2 verification suite");
    kk->add_flag("--properness", properness, "emit the proper-subring witness");

    CLI::App* verlinde = app.add_subcommand("verlinde", "recompute fusion from S and diff");
    add_model_options(verlinde, verlinde_opts);

    CLI::App* invariants = app.add_subcommand("invariants", "classify modular invariants");
    add_model_options(invariants, inv_opts);
    std::string bound_mult = "1", format = "json";
    unsigned jobs = 1;
    invariants->add_option("--bound-mult", bound_mult, "entry bound multiplier (rational)");
    invariants->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    invariants->add_option("--jobs", jobs, "worker count (output is jobs-independent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(verify_opts);
        if (eta->parsed()) return run_eta(eta_opts, sector);
        if (kk->parsed()) return run_kk(kk_opts, product, theorem2, properness);
        if (verlinde->parsed()) return run_verlinde(verlinde_opts);
        if (invariants->parsed()) return run_invariants(inv_opts, bound_mult, format, jobs);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
