// Command-line front end: build, verify, classify, intertwine, unitarity,
// export; machine-readable JSON reports.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "uqrep/star.hpp"

using namespace uqrep;
using nlohmann::json;

namespace {

// exit codes: 0 pass, 1 verification failure, 2 invalid input, 3 I/O
constexpr int kOk = 0, kVerifyFail = 1, kBadInput = 2, kIoError = 3;

Complex parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    auto parse_part = [](std::string t) -> std::pair<double, bool> {
        bool imag = false;
        if (!t.empty() && (t.back() == 'i' || t.back() == 'I' || t.back() == 'j')) {
            imag = true;
            t.pop_back();
            if (t.empty() || t == "+") t = "1";
            else if (t == "-") t = "-1";
        }
        size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("bad complex literal");
        return {v, imag};
    };

    size_t split = std::string::npos;
    for (size_t i = s.size() - 1; i > 0; --i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        const auto [v, im] = parse_part(s);
        return im ? Complex(0.0, v) : Complex(v, 0.0);
    }
    const auto [v1, i1] = parse_part(s.substr(0, split));
    const auto [v2, i2] = parse_part(s.substr(split));
    if (i1 == i2) throw std::invalid_argument("bad complex literal: " + raw);
    return i1 ? Complex(v2, v1) : Complex(v1, v2);
}

Weight parse_weight(const std::string& s) {
    Weight w;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        w.push_back(std::stoll(tok));
    }
    return w;
}

std::string fmt_complex(Complex c) {
    std::ostringstream os;
    os << c.real();
    if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    return os.str();
}

struct RunConfig {
    double q = 1.5;
    std::string weight_str, m_str, c1_str, c2_str;
    long long window = 6;
    long long margin = 3;
    double tol = 1e-10;
    std::string format = "json";
    std::string out_dir;
    long long seed = 0;
    bool im_units_pi2h = false;
    bool corrupt = false;
    bool list = false;
    int constituent = -1;

    bool has_weight() const { return !weight_str.empty(); }
    bool has_principal() const { return !c1_str.empty(); }

    QValue qvalue() const { return QValue(q); }

    Window win() const { return Window{window, window, margin}; }

    PrincipalParams params() const {
        Weight m = m_str.empty() ? Weight{} : parse_weight(m_str);
        Complex c1 = parse_complex(c1_str);
        Complex c2 = c2_str.empty() ? -c1 : parse_complex(c2_str);
        if (im_units_pi2h) {
            const double unit = M_PI / (2.0 * std::log(q));
            c1 = Complex(c1.real(), c1.imag() * unit);
            c2 = Complex(c2.real(), c2.imag() * unit);
        }
        return make_params(std::move(m), c1, c2);
    }

    json params_json() const {
        json j;
        j["q"] = q;
        if (has_weight()) j["weight"] = weight_str;
        if (has_principal()) {
            const auto p = params();
            j["m"] = p.m;
            j["c1"] = fmt_complex(p.c1);
            j["c2"] = fmt_complex(p.c2);
            j["m0"] = p.m0;
            j["window"] = window;
            j["margin"] = margin;
        }
        j["tol"] = tol;
        j["seed"] = seed;
        return j;
    }
};

json report_json(const RelationReport& r) {
    json j;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass();
    j["max_residual"] = r.max_residual();
    json items = json::array();
    for (const auto& it : r.items)
        items.push_back({{"relation", it.relation}, {"residual", it.residual}});
    j["relations"] = items;
    return j;
}

json label_json(const ConstituentLabel& lab, const QValue& q) {
    json j;
    j["name"] = lab.name();
    j["normal_form"] = normal_form(lab).name();
    const auto u = unitary_class(lab, q);
    j["unitary_class"] = to_string(u.cls);
    j["witness"] = u.witness;
    return j;
}

void emit(const std::string& command, const RunConfig& cfg, json results,
          std::chrono::steady_clock::time_point start) {
    json j;
    j["command"] = command;
    j["params"] = cfg.params_json();
    j["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    j["results"] = std::move(results);
    std::cout << j.dump(2) << "\n";
}

int cmd_enumerate(const RunConfig& cfg) {
    const Weight hw = parse_weight(cfg.weight_str);
    const auto ts = enumerate_tableaux(hw);
    std::cout << "count: " << ts.size() << "\n";
    if (cfg.list) {
        for (size_t i = 0; i < ts.size(); ++i) {
            std::cout << i << ":";
            for (int j = ts[i].size(); j >= 1; --j) {
                std::cout << " [";
                const auto& row = ts[i].row(j);
                for (size_t k = 0; k < row.size(); ++k)
                    std::cout << (k ? "," : "") << row[k];
                std::cout << "]";
            }
            std::cout << "\n";
        }
    }
    return kOk;
}

int cmd_build(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
    json res;
    if (cfg.has_weight()) {
        const auto g = build_compact_rep(parse_weight(cfg.weight_str), cfg.qvalue());
        res["dimension"] = g.dim();
        res["rank"] = g.rank;
        json nnz;
        for (int i = 0; i < g.rank; ++i) nnz["k" + std::to_string(i + 1)] = g.k[i].nonzeros();
        for (int i = 0; i + 1 < g.rank; ++i) {
            nnz["e" + std::to_string(i + 1)] = g.e[i].nonzeros();
            nnz["f" + std::to_string(i + 1)] = g.f[i].nonzeros();
        }
        res["nonzeros"] = nnz;
    } else {
        const auto rep = build_principal(cfg.params(), cfg.win(), cfg.qvalue());
        res["dimension"] = rep.basis.dim();
        res["weights"] = rep.basis.weights.size();
        long long interior = 0;
        for (char c : rep.interior) interior += c;
        res["interior_vectors"] = interior;
    }
    emit("build", cfg, std::move(res), start);
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
    RelationReport rep;
    if (cfg.has_weight()) {
        auto g = build_compact_rep(parse_weight(cfg.weight_str), cfg.qvalue());
        if (cfg.corrupt && !g.e.empty() && g.e[0].nonzeros() > 0) {
            // test hook: perturb one matrix entry
            std::vector<SparseOperator::Triplet> ts;
            g.e[0].for_each([&](Eigen::Index r, Eigen::Index c, Complex v) {
                ts.emplace_back(r, c, v);
            });
            ts.front() = {static_cast<int>(ts.front().row()),
                          static_cast<int>(ts.front().col()),
                          ts.front().value() + Complex(1e-3, 0.0)};
            g.e[0] = SparseOperator::from_triplets(g.dim(), g.dim(), ts);
        }
        rep = verify_compact_relations(g, cfg.qvalue(), cfg.tol);
    } else if (cfg.has_principal()) {
        auto w = build_principal(cfg.params(), cfg.win(), cfg.qvalue());
        if (cfg.corrupt) {
            // perturb an entry the interior-masked verifier can see
            std::vector<SparseOperator::Triplet> ts;
            long long hit = -1;
            w.gens.e.back().for_each([&](Eigen::Index r, Eigen::Index c, Complex v) {
                if (hit < 0 && w.interior[static_cast<size_t>(c)])
                    hit = static_cast<long long>(ts.size());
                ts.emplace_back(r, c, v);
            });
            if (hit >= 0)
                ts[hit] = {static_cast<int>(ts[hit].row()),
                           static_cast<int>(ts[hit].col()),
                           ts[hit].value() + Complex(1e-3, 0.0)};
            w.gens.e.back() =
                SparseOperator::from_triplets(w.basis.dim(), w.basis.dim(), ts);
        }
        rep = verify_principal_relations(w, cfg.qvalue(), cfg.tol);
    } else {
        throw std::invalid_argument("verify: pass --weight or --c1/--c2");
    }
    emit("verify", cfg, report_json(rep), start);
    return rep.pass() ? kOk : kVerifyFail;
}

int cmd_classify(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
    const auto p = cfg.params();
    const QValue q = cfg.qvalue();
    const auto cls = classify(p, q);
    json res;
    res["case"] = to_string(cls.kind);
    if (cls.kind != ParamCase::IrreducibleGeneric) {
        res["r"] = cls.r;
        res["s"] = cls.s;
    }
    res["shift_k"] = cls.shift_k;
    if (cls.kind != ParamCase::IrreducibleGeneric &&
        cls.kind != ParamCase::IrreducibleSpecial) {
        const auto lat = decompose(p, q);
        json nodes = json::array(), arrows = json::array(), layers = json::array();
        for (const auto& n : lat.nodes) nodes.push_back(label_json(n, q));
        for (const auto& [a, b] : lat.arrows) arrows.push_back({a, b});
        for (const auto& layer : lat.layers) layers.push_back(layer);
        res["lattice"] = {{"shape", lat.shape()},
                          {"nodes", nodes},
                          {"arrows", arrows},
                          {"layers", layers}};
        if (cfg.format == "dot") {
            std::ostringstream os;
            os << "digraph lattice {\n";
            for (size_t i = 0; i < lat.nodes.size(); ++i)
                os << "  n" << i << " [label=\"" << lat.nodes[i].name() << "\"];\n";
            for (const auto& [a, b] : lat.arrows)
                os << "  n" << a << " -> n" << b << ";\n";
            for (const auto& layer : lat.layers)
                if (layer.size() > 1) {
                    os << "  { rank=same";
                    for (int v : layer) os << "; n" << v;
                    os << " }\n";
                }
            os << "}\n";
            std::cout << os.str();
            return kOk;
        }
    } else {
        ConstituentLabel full;
        full.kind = ConstituentKind::Full;
        full.L = lvector_of(cls.canonical);
        res["unitary_class"] = to_string(unitary_class(cls.canonical, q).cls);
        res["normal_form"] = normal_form(full).name();
    }
    emit("classify", cfg, std::move(res), start);
    return kOk;
}

int cmd_intertwine(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
    const auto p = cfg.params();
    const QValue q = cfg.qvalue();
    const Window win = cfg.win();
    json res;
    const auto cls = classify(p, q);
    if (!cls.integral) {
        const auto A = intertwiner_recursive(p, win, q);
        const auto T = build_principal(p, win, q);
        const auto Tp = build_principal(A.to, win, q);
        res["kind"] = "recursive";
        res["intertwining_residual"] = intertwining_residual(A, T, Tp);
        if (p.n() >= 2) {
            const auto P = intertwiner_from_products(p, win, q);
            const Complex ratio = A.values.front() / P.values.front();
            double dev = 0.0;
            for (size_t i = 0; i < A.values.size(); ++i)
                dev = std::max(dev, std::abs(A.values[i] / P.values[i] - ratio) /
                                        std::abs(ratio));
            res["product_form_deviation"] = dev;
        }
        json bv = json::array();
        for (size_t i = 0; i < A.weights.size(); ++i)
            bv.push_back({{"weight", A.weights[i]},
                          {"b", {A.values[i].real(), A.values[i].imag()}}});
        res["b"] = bv;
    } else {
        const auto orders = analytic_order(p.m, p.m0, cls.c1i, win, q);
        int min_ord = 0;
        json ov = json::array();
        for (const auto& [w, ao] : orders) {
            min_ord = std::min(min_ord, ao.order);
            ov.push_back({{"weight", w},
                          {"order", ao.order},
                          {"leading", {ao.leading.real(), ao.leading.imag()}}});
        }
        res["kind"] = "analytic";
        res["orders"] = ov;
        res["min_order"] = min_ord;
        if (min_ord < 0) {
            const auto B = residue_intertwiner(p.m, p.m0, cls.c1i, -min_ord, win, q);
            const auto T = build_principal(B.from, win, q);
            const auto Tp = build_principal(B.to, win, q);
            res["residue_intertwining_residual"] = intertwining_residual(B, T, Tp);
        }
    }
    emit("intertwine", cfg, std::move(res), start);
    return kOk;
}

int cmd_unitarity(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
    const auto p = cfg.params();
    const QValue q = cfg.qvalue();
    const Window win = cfg.win();
    json res;

    auto positivity_json = [&](const PositivityReport& pr) {
        json j;
        j["sign"] = pr.sign == FormSign::Positive
                        ? "positive"
                        : pr.sign == FormSign::Negative ? "negative" : "indefinite";
        j["note"] = pr.note;
        j["window"] = cfg.window;
        json vals = json::array();
        for (const auto& [w, v] : pr.values) vals.push_back({{"weight", w}, {"value", v}});
        j["values"] = vals;
        return j;
    };

    const auto cls = classify(p, q);
    if (cfg.constituent >= 0) {
        const auto lat = decompose(p, q);
        if (cfg.constituent >= static_cast<int>(lat.nodes.size()))
            throw std::invalid_argument("constituent index out of range");
        const auto& lab = lat.nodes[cfg.constituent];
        res["constituent"] = lab.name();
        const auto u = unitary_class(lab, q);
        res["class"] = to_string(u.cls);
        res["witness"] = u.witness;
        try {
            res["positivity"] = positivity_json(verify_form_positivity(lab, win, q));
        } catch (const NoIntertwinerError& e) {
            res["positivity"] = "NotComparable";
            res["positivity_error"] = e.what();
        }
    } else {
        const auto u = unitary_class(p, q);
        res["case"] = to_string(cls.kind);
        res["class"] = to_string(u.cls);
        res["witness"] = u.witness;
        try {
            res["positivity"] = positivity_json(verify_form_positivity(p, win, q));
        } catch (const NoIntertwinerError& e) {
            res["positivity"] = "NotComparable";
            res["positivity_error"] = e.what();
        }
    }
    emit("unitarity", cfg, std::move(res), start);
    return kOk;
}

void write_triplet(const std::filesystem::path& path, const SparseOperator& op) {
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure("cannot open " + path.string());
    os << op.rows() << " " << op.cols() << " " << op.nonzeros() << "\n";
    char buf[128];
    op.for_each([&](Eigen::Index r, Eigen::Index c, Complex v) {
        std::snprintf(buf, sizeof(buf), "%lld %lld %.17g %.17g\n",
                      static_cast<long long>(r + 1), static_cast<long long>(c + 1),
                      v.real(), v.imag());
        os << buf;
    });
    if (!os) throw std::ios_base::failure("write failed: " + path.string());
}

json matrix_json(const SparseOperator& op) {
    json j;
    j["rows"] = op.rows();
    j["cols"] = op.cols();
    json entries = json::array();
    op.for_each([&](Eigen::Index r, Eigen::Index c, Complex v) {
        entries.push_back({r + 1, c + 1, v.real(), v.imag()});
    });
    j["entries"] = entries;
    return j;
}

int cmd_export(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
    if (cfg.out_dir.empty()) throw std::invalid_argument("export: --out DIR required");
    const GeneratorSet* gens = nullptr;
    GeneratorSet compact_g;
    WindowedRep rep;
    if (cfg.has_weight()) {
        compact_g = build_compact_rep(parse_weight(cfg.weight_str), cfg.qvalue());
        gens = &compact_g;
    } else {
        rep = build_principal(cfg.params(), cfg.win(), cfg.qvalue());
        gens = &rep.gens;
    }

    try {
        const std::filesystem::path dir(cfg.out_dir);
        std::filesystem::create_directories(dir);
        json res;
        if (cfg.format == "triplet" || cfg.format.empty()) {
            std::vector<std::string> files;
            auto dump = [&](const std::string& name, const SparseOperator& op) {
                write_triplet(dir / (name + ".txt"), op);
                files.push_back(name + ".txt");
            };
            for (int i = 0; i < gens->rank; ++i) {
                dump("k" + std::to_string(i + 1), gens->k[i]);
                dump("kinv" + std::to_string(i + 1), gens->kinv[i]);
            }
            for (int i = 0; i + 1 < gens->rank; ++i) {
                dump("e" + std::to_string(i + 1), gens->e[i]);
                dump("f" + std::to_string(i + 1), gens->f[i]);
            }
            res["files"] = files;
        } else if (cfg.format == "json") {
            json bundle;
            bundle["rank"] = gens->rank;
            for (int i = 0; i < gens->rank; ++i) {
                bundle["k"][i] = matrix_json(gens->k[i]);
                bundle["kinv"][i] = matrix_json(gens->kinv[i]);
            }
            for (int i = 0; i + 1 < gens->rank; ++i) {
                bundle["e"][i] = matrix_json(gens->e[i]);
                bundle["f"][i] = matrix_json(gens->f[i]);
            }
            std::ofstream os(dir / "rep.json");
            if (!os) throw std::ios_base::failure("cannot open rep.json");
            os << bundle.dump(1) << "\n";
            res["files"] = {"rep.json"};
        } else {
            throw std::invalid_argument("export: unknown format " + cfg.format);
        }
        res["dimension"] = gens->dim();
        emit("export", cfg, std::move(res), start);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"verification and classification engine for principal-series "
                 "representations of a rank-n+1 quantum algebra"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string im_units;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "deformation parameter q > 0, q != 1");
        sub->add_option("--weight", cfg.weight_str, "compact highest weight, e.g. 2,1,0");
        sub->add_option("--m", cfg.m_str, "principal-series weight m (length n-1)");
        sub->add_option("--c1", cfg.c1_str, "c1 as a+bi");
        sub->add_option("--c2", cfg.c2_str, "c2 as a+bi (default -c1)");
        sub->add_option("--window", cfg.window, "window slack W");
        sub->add_option("--margin", cfg.margin, "interior margin");
        sub->add_option("--tol", cfg.tol, "verification tolerance");
        sub->add_option("--format", cfg.format, "json | triplet | dot");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--seed", cfg.seed, "seed for randomized runs");
        sub->add_option("--im-units", im_units, "pi2h: imaginary parts in units of pi/2h");
        sub->add_flag("--corrupt", cfg.corrupt, "test hook: corrupt one matrix entry");
    };

    auto* enumerate = app.add_subcommand("enumerate", "count/list GT tableaux");
    add_common(enumerate);
    enumerate->add_flag("--list", cfg.list, "print the tableaux");
    auto* build = app.add_subcommand("build", "build a representation and summarize");
    add_common(build);
    auto* verify = app.add_subcommand("verify", "verify the defining relations");
    add_common(verify);
    auto* classify_cmd = app.add_subcommand("classify", "classify the parameters");
    add_common(classify_cmd);
    auto* intertwine = app.add_subcommand("intertwine", "compute intertwining data");
    add_common(intertwine);
    auto* unitarity = app.add_subcommand("unitarity", "unitarizability class/positivity");
    add_common(unitarity);
    unitarity->add_option("--constituent", cfg.constituent,
                          "lattice node index to analyze");
    auto* exp = app.add_subcommand("export", "write generator matrices");
    add_common(exp);

    CLI11_PARSE(app, argc, argv);
    cfg.im_units_pi2h = (im_units == "pi2h");
    // positivity scans default to a doubled window
    if (unitarity->parsed() && unitarity->count("--window") == 0) cfg.window = 12;

    try {
        if (enumerate->parsed()) return cmd_enumerate(cfg);
        if (build->parsed()) return cmd_build(cfg, start);
        if (verify->parsed()) return cmd_verify(cfg, start);
        if (classify_cmd->parsed()) return cmd_classify(cfg, start);
        if (intertwine->parsed()) return cmd_intertwine(cfg, start);
        if (unitarity->parsed()) return cmd_unitarity(cfg, start);
        if (exp->parsed()) return cmd_export(cfg, start);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIoError;
    }
    return kOk;
}
