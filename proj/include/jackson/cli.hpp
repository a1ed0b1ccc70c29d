#pragma once

// Command dispatch for the jackson tool. run() never calls exit(), so tests
// can drive it with string streams.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jackson/jackson.hpp"

#ifndef JACKSON_FIXTURE_DIR
#define JACKSON_FIXTURE_DIR "fixtures"
#endif

namespace jackson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error("UsageError", what) {}
};

struct PresetOptions {
    std::string preset;
    std::string input;
    long zeta_order = 0;
    long r = 1;
    int gens = 3;
    std::string x = "1";
    std::string q = "z";
    std::string lambda = "z";
    long p = 5;
    std::string mode = "wrapping";
    std::string form = "shifted";
    long field_p = 0;
    int field_m = 1;
    std::vector<std::string> lets;
};

inline void add_preset_options(CLI::App* sub, PresetOptions& o) {
    sub->add_option("--preset", o.preset, "jackson | kw | infinitesimal | II | polynomial");
    sub->add_option("--input", o.input, "presentation JSON file, or inline JSON");
    sub->add_option("--zeta-order", o.zeta_order, "order of zeta in the coefficient field");
    sub->add_option("--r", o.r, "level r");
    sub->add_option("--gens", o.gens, "number of generators (kw, infinitesimal, polynomial)");
    sub->add_option("--x", o.x, "ramification element x");
    sub->add_option("--q", o.q, "deformation parameter q (infinitesimal)");
    sub->add_option("--lambda", o.lambda, "lambda (II)");
    sub->add_option("--p", o.p, "prime p (II)");
    sub->add_option("--mode", o.mode, "truncating | wrapping (infinitesimal)");
    sub->add_option("--form", o.form, "raw | shifted (II)");
    sub->add_option("--field-p", o.field_p, "reduce into a finite field of this characteristic");
    sub->add_option("--field-m", o.field_m, "base degree of that finite field");
    sub->add_option("--let", o.lets, "symbol binding name=expr, repeatable");
}

// resolves the coefficient order from --zeta-order and any '@ order n' suffix
inline long settle_order(long given, std::initializer_list<std::string*> exprs, long fallback) {
    long n = given;
    for (std::string* e : exprs) {
        auto [body, k] = split_order_suffix(*e);
        *e = body;
        if (k == 0) continue;
        if (n != 0 && n != k) throw UsageError("conflicting orders " + std::to_string(n) + " and " + std::to_string(k));
        n = k;
    }
    return n == 0 ? fallback : n;
}

inline AnyPresentation build_presentation(PresetOptions o) {
    if (!o.input.empty() && !o.preset.empty()) throw UsageError("give either --preset or --input");
    if (!o.input.empty()) {
        json j;
        if (!o.input.empty() && o.input.front() == '{') {
            try {
                j = json::parse(o.input);
            } catch (const json::parse_error& e) {
                throw ParseError(e.what());
            }
        } else {
            j = read_json_file(o.input);
        }
        return presentation_from_json(j);
    }
    if (o.preset.empty()) throw UsageError("need --preset or --input");
    QPresentation<Cyclotomic> P;
    if (o.preset == "jackson") {
        long n = settle_order(o.zeta_order, {&o.x}, 3);
        CyclotomicField F(n);
        P = build_jackson(o.r, parse_scalar<Cyclotomic>(o.x, F), F.zeta());
    } else if (o.preset == "kw") {
        long n = settle_order(o.zeta_order, {&o.x}, o.gens);
        CyclotomicField F(n);
        P = build_kummer_witt(o.gens, o.r, parse_scalar<Cyclotomic>(o.x, F), F.zeta());
    } else if (o.preset == "infinitesimal") {
        long n = settle_order(o.zeta_order, {&o.q}, 7);
        CyclotomicField F(n);
        IndexMode m;
        if (o.mode == "truncating") m = IndexMode::Truncating;
        else if (o.mode == "wrapping") m = IndexMode::Wrapping;
        else throw UsageError("--mode must be truncating or wrapping");
        P = build_infinitesimal(o.gens, parse_scalar<Cyclotomic>(o.q, F), m);
    } else if (o.preset == "II") {
        long n = settle_order(o.zeta_order, {&o.lambda}, 3);
        CyclotomicField F(n);
        IIForm f;
        if (o.form == "raw") f = IIForm::Raw;
        else if (o.form == "shifted") f = IIForm::Shifted;
        else throw UsageError("--form must be raw or shifted");
        P = build_II(o.p, parse_scalar<Cyclotomic>(o.lambda, F), f);
    } else if (o.preset == "polynomial") {
        P = build_polynomial<Cyclotomic>(CyclotomicField(settle_order(o.zeta_order, {}, 1)), o.gens);
    } else {
        throw UsageError("unknown preset '" + o.preset + "'");
    }
    if (o.field_p == 0) return P;
    if (!is_prime(o.field_p)) throw UsageError("--field-p must be prime");
    FiniteField F = residue_field(PrimeContext{o.field_p, o.field_m, 1}, P.field().order());
    return specialize(P, F);
}

template <class S>
std::map<std::string, S> parse_lets(const std::vector<std::string>& lets, const typename S::field_type& F,
                                    std::map<std::string, S> out = {}) {
    for (auto& l : lets) {
        auto eq = l.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--let expects name=expr, got '" + l + "'");
        std::string name = l.substr(0, eq);
        out[name] = ExprParser<S>(F, 0, out).parse_scalar(l.substr(eq + 1));
    }
    return out;
}

// After --field-p, 'z' names the image of zeta in the residue field.
template <class S>
std::map<std::string, S> zeta_binding(const QPresentation<S>& Q, const PresetOptions& o) {
    if constexpr (std::is_same_v<S, GFElement>) {
        if (o.field_p != 0) {
            PresetOptions base = o;
            base.field_p = 0;
            auto P = build_presentation(base);
            if (auto* c = std::get_if<QPresentation<Cyclotomic>>(&P)) return {{"z", zeta_image(Q.field(), c->field().order())}};
        }
    }
    return {};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// Characters may name the symbols a, b, u, v. Symbols left unbound by --let
// are placed on the conic of the locus: the first symbol of a slot pair gets a
// fixed generic value, the second is solved from e1 e2 = c.
template <class S>
class CharacterReader {
public:
    CharacterReader(const QPresentation<S>& P, std::map<std::string, S> lets) : P_(P), lets_(std::move(lets)) {}

    Character<S> read(const std::string& text) {
        auto parts = split(text, ',');
        int g = P_.gens();
        if (static_cast<int>(parts.size()) != g)
            throw LengthMismatch("character needs " + std::to_string(g) + " entries, got " + std::to_string(parts.size()));
        std::vector<std::optional<S>> vals(g);
        std::vector<std::string> syms(g);
        for (int k = 0; k < g; ++k) {
            std::string t = trim(parts[k]);
            if (is_symbol(t) && !lets_.count(t)) syms[k] = t;
            else vals[k] = ExprParser<S>(P_.field(), 0, lets_).parse_scalar(t);
        }
        for (int k = 0; k < g; ++k) {
            if (syms[k].empty()) continue;
            if (lets_.count(syms[k])) {
                vals[k] = lets_.at(syms[k]);
                continue;
            }
            int partner = (g == 3 && (k == 1 || k == 2)) ? 3 - k : -1;
            if (partner < 0) throw UsageError("bind symbol '" + syms[k] + "' with --let");
            std::optional<S> other = vals[partner];
            if (!other && !syms[partner].empty() && lets_.count(syms[partner])) other = lets_.at(syms[partner]);
            S c = conic_value(syms[k]);
            if (!other) {
                S v = default_value(syms[k]);
                lets_[syms[k]] = v;
                vals[k] = v;
                continue;
            }
            if (other->is_zero()) throw UsageError("cannot place '" + syms[k] + "' on the conic next to a zero entry");
            S v = c / *other;
            lets_[syms[k]] = v;
            vals[k] = v;
        }
        Character<S> chi;
        for (auto& v : vals) chi.push_back(*v);
        return chi;
    }

    const std::map<std::string, S>& bindings() const { return lets_; }

private:
    static bool is_symbol(const std::string& t) { return t == "a" || t == "b" || t == "u" || t == "v"; }

    S conic_value(const std::string& sym) {
        if (!conic_) {
            LocusDescription<S> L;
            try {
                L = one_dim_locus(P_);
            } catch (const UnrecognizedFamily&) {
                throw UsageError("symbol '" + sym + "' needs --let for this presentation");
            }
            for (auto& c : L.components)
                if (c.conic && c.ci == 1 && c.cj == 2) conic_ = c.cval;
            if (!conic_) throw UsageError("no conic e1*e2 = c in the locus; bind '" + sym + "' with --let");
        }
        return *conic_;
    }

    S default_value(const std::string& sym) const {
        auto F = P_.field();
        long seed = sym == "a" ? 2 : sym == "u" ? 3 : sym == "b" ? 5 : 7;
        S v = F.from_int(seed);
        if (v.is_zero() || (sym == "u" && lets_.count("a") && lets_.at("a") == v)) {
            if constexpr (std::is_same_v<S, GFElement>) v = F.generator().pow(sym == "u" ? 2 : 1);
            if (v.is_zero()) v = F.one();
        }
        return v;
    }

    const QPresentation<S>& P_;
    std::map<std::string, S> lets_;
    std::optional<S> conic_;
};

inline void emit(std::ostream& out, const json& j, const std::string& format) {
    if (format == "table") {
        if (j.is_object()) {
            size_t width = 0;
            for (auto it = j.begin(); it != j.end(); ++it) width = std::max(width, it.key().size());
            for (auto it = j.begin(); it != j.end(); ++it) {
                std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
                out << it.key() << std::string(width - it.key().size() + 2, ' ') << v << "\n";
            }
            return;
        }
    }
    out << j.dump(2) << "\n";
}

template <class S>
json confluence_report(const QPresentation<S>& P) {
    auto w = check_confluence(P);
    json ws = json::array();
    for (auto& x : w)
        ws.push_back({{"overlap", {x.k, x.j, x.i}}, {"difference", format_poly(x.difference, P.labels())}});
    return {{"confluent", w.empty()}, {"witnesses", ws}};
}

template <class S>
NCPoly<S> parse_word_expr(const QPresentation<S>& P, const std::string& text, const std::map<std::string, S>& lets) {
    auto words = ExprParser<S>(P.field(), P.gens(), lets).parse(text);
    return normal_form(P, words);
}

inline std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("JACKSON_FIXTURES"); env && *env) return env;
    return JACKSON_FIXTURE_DIR;
}

inline std::filesystem::path resolve_fixture(const std::string& arg) {
    std::filesystem::path p(arg);
    if (std::filesystem::exists(p)) return p;
    auto q = fixture_dir() / (arg + ".json");
    if (std::filesystem::exists(q)) return q;
    q = fixture_dir() / p.filename();
    if (std::filesystem::exists(q)) return q;
    throw UsageError("no fixture '" + arg + "' (looked in " + fixture_dir().string() + ")");
}

template <class S>
json brauer_report(const ThetaVector<S>& theta, int w, long p, const S& zeta, int only_i = -1, int only_j = -1) {
    json out = json::array();
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        if (only_i >= 0 && (i != only_i || j != only_j)) continue;
        auto Q = brauer_class(theta, i, j, w, p, zeta);
        out.push_back({{"i", i},
                       {"j", j},
                       {"a", Q.a},
                       {"q", Q.q_power.str()},
                       {"azumaya", Q.azumaya},
                       {"central_simple", Q.central_simple},
                       {"associative", Q.associative},
                       {"rank", Q.rank},
                       {"label", Q.label}});
    }
    return out;
}

inline json curve_report(const CurveReductionData& c) {
    json checks = json::array();
    for (auto& k : curve_checks(c)) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
    json rep{{"label", c.label},
             {"p", c.p},
             {"kodaira", c.kodaira.str()},
             {"reduction", to_string(reduction_type(c.kodaira))},
             {"f", c.f},
             {"d", c.d},
             {"w", c.f + c.d},
             {"torsion", c.torsion_structure},
             {"component_group_order", c.component_group_order},
             {"checks", checks}};
    if (c.weierstrass && c.kodaira.additive() && (c.p == 5 || c.p == 7)) {
        auto sm = short_model(weierstrass_invariants(*c.weierstrass));
        Rational A(sm.A), B(sm.B);
        rep["torsion_test"] = {{"a", additive_torsion_parameter(c.p, A, B)},
                               {"nontrivial_root", additive_torsion_test(c.p, A, B, FiniteField(c.p, 1))},
                               {"model", {{"A", sm.A.str()}, {"B", sm.B.str()}}}};
    }
    if (c.p >= 3) {
        auto fib = build_special_fibre(c.p, c.f, c.d);
        auto& P = fib.presentation;
        auto F = fib.field;
        GFElement m = fib.lambda.pow(2 - c.p);
        rep["fibre_field"] = F.describe();
        rep["fibre_presentation"] = presentation_to_json(P);
        rep["fibre_coefficients"] = {fib.coefficients[0].str(), fib.coefficients[1].str(), fib.coefficients[2].str()};
        rep["fibre_confluent"] = check_confluence(P).empty();
        json tables = json::array();
        auto row = [&](const std::string& name, const Character<GFElement>& a, const Character<GFElement>& b) {
            tables.push_back({{"name", name},
                              {"N1", character_to_json(a)},
                              {"N2", character_to_json(b)},
                              {"dimension", ext1(P, a, b).dimension},
                              {"predicted", predict_ext_inf(c.p, fib.lambda, a, b)}});
        };
        const GFElement z = F.zero(), one = F.one();
        row("theta_mirror", {z, z, one}, {z, z, m});
        row("z_mirror", {z, m, z}, {z, one, z});
        GFElement other = one;
        for (const GFElement& t : F.elements())
            if (!t.is_zero() && t != m) {
                other = t;
                break;
            }
        row("theta_other", {z, z, one}, {z, z, other});
        rep["ext_tables"] = tables;
        int w = c.f + c.d;
        CyclotomicField Q(w);
        ThetaVector<Cyclotomic> theta{c.p, std::vector<Cyclotomic>(c.p, Q.one()), 0, 0, "unit"};
        rep["brauer"] = brauer_report(theta, w, c.p, Q.zeta());
    }
    return rep;
}

inline json error_json(const std::string& name, const std::string& msg) { return {{"error", name}, {"message", msg}}; }

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-commutation algebras, their one-dimensional modules and elliptic fibres"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    PresetOptions po;
    std::string expr, m_text, n_text, family;
    std::vector<int> fixed;
    bool enumerate = false;

    auto* present = app.add_subcommand("present", "build a presentation and print it");
    add_preset_options(present, po);
    auto* nf = app.add_subcommand("normal-form", "PBW normal form of a word expression");
    add_preset_options(nf, po);
    nf->add_option("--expr", expr, "expression in e0, e1, ...")->required();
    auto* conf = app.add_subcommand("confluence", "overlap check of the rewriting system");
    add_preset_options(conf, po);
    auto* central = app.add_subcommand("central", "centrality test");
    add_preset_options(central, po);
    central->add_option("--expr", expr, "expression in e0, e1, ...")->required();
    auto* locus = app.add_subcommand("locus", "one-dimensional modules");
    add_preset_options(locus, po);
    locus->add_flag("--enumerate", enumerate, "also enumerate all points over a finite field");
    auto* ext = app.add_subcommand("ext", "Ext^1 between one-dimensional modules");
    add_preset_options(ext, po);
    ext->add_option("--m", m_text, "first character, comma separated")->required();
    ext->add_option("--n", n_text, "second character, comma separated")->required();
    ext->add_option("--fix", fixed, "generators acting by their scalar on the extension");
    auto* tangent = app.add_subcommand("tangent", "tangent matrix of a family");
    add_preset_options(tangent, po);
    tangent->add_option("--family", family, "characters separated by ';'")->required();

    RamificationInput ri;
    std::string ell_div = "false";
    auto* classify = app.add_subcommand("classify", "ramification, fibre and semistability");
    classify->add_option("--n", ri.n, "Kummer degree")->required();
    classify->add_option("--v-x", ri.v_x, "valuation of the Kummer generator")->required();
    classify->add_option("--ell-divides-n", ell_div, "true | false")->check(CLI::IsMember({"true", "false"}));
    classify->add_option("--e-abs", ri.e_abs, "absolute ramification index");

    std::string curve_arg;
    auto* curve = app.add_subcommand("curve-analyze", "consistency report for a curve fixture");
    curve->add_option("fixture", curve_arg, "fixture path or label")->required();

    long bp = 5;
    int bw = 2, bi = -1, bj = -1;
    std::string theta_text;
    auto* brauer = app.add_subcommand("brauer", "quantum-plane quotients of a theta vector");
    brauer->add_option("--p", bp, "prime p")->required();
    brauer->add_option("--w", bw, "w = f + d")->required();
    brauer->add_option("--theta", theta_text, "theta_0..theta_{p-1}, comma separated, in z = zeta_w")->required();
    brauer->add_option("--i", bi, "first generator");
    brauer->add_option("--j", bj, "second generator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        json result;
        if (*present) {
            result = presentation_to_json(build_presentation(po));
        } else if (*nf || *central) {
            auto P = build_presentation(po);
            result = std::visit(
                [&](const auto& Q) -> json {
                    using S = typename std::decay_t<decltype(Q)>::scalar_type;
                    auto lets = parse_lets<S>(po.lets, Q.field(), zeta_binding(Q, po));
                    auto p = parse_word_expr(Q, expr, lets);
                    if (*nf) return {{"normal_form", format_poly(p, Q.labels())}, {"terms", p.size()}};
                    return {{"central", is_central(Q, p)}, {"element", format_poly(p, Q.labels())}};
                },
                P);
        } else if (*conf) {
            auto P = build_presentation(po);
            result = std::visit([](const auto& Q) { return confluence_report(Q); }, P);
        } else if (*locus) {
            auto P = build_presentation(po);
            result = std::visit(
                [&](const auto& Q) -> json {
                    using S = typename std::decay_t<decltype(Q)>::scalar_type;
                    auto L = one_dim_locus(Q);
                    json j = locus_to_json(L);
                    if (enumerate) {
                        if constexpr (std::is_same_v<S, GFElement>) {
                            auto pts = enumerate_points(Q);
                            size_t on = 0;
                            json arr = json::array();
                            for (auto& pt : pts) {
                                on += L.contains(pt);
                                arr.push_back(character_to_json(pt));
                            }
                            std::set<std::vector<std::uint32_t>> from_components;
                            for (auto& c : L.components)
                                for (auto& pt : component_points(c, Q.field(), Q.gens())) {
                                    std::vector<std::uint32_t> key;
                                    for (auto& x : pt) key.push_back(x.code());
                                    from_components.insert(key);
                                }
                            j["points"] = arr;
                            j["agrees"] = on == pts.size() && from_components.size() == pts.size();
                        } else {
                            throw UsageError("--enumerate needs a finite field (use --field-p)");
                        }
                    }
                    return j;
                },
                P);
        } else if (*ext || *tangent) {
            auto P = build_presentation(po);
            result = std::visit(
                [&](const auto& Q) -> json {
                    using S = typename std::decay_t<decltype(Q)>::scalar_type;
                    CharacterReader<S> reader(Q, parse_lets<S>(po.lets, Q.field(), zeta_binding(Q, po)));
                    if (*ext) {
                        auto M = reader.read(m_text);
                        auto N = reader.read(n_text);
                        auto r = ext1(Q, M, N, std::set<int>(fixed.begin(), fixed.end()));
                        json j = ext_to_json(r);
                        j["M"] = character_to_json(M);
                        j["N"] = character_to_json(N);
                        return j;
                    }
                    std::vector<Character<S>> fam;
                    for (auto& t : split(family, ';')) fam.push_back(reader.read(t));
                    auto T = tangent_matrix(Q, fam);
                    json members = json::array();
                    for (auto& c : fam) members.push_back(character_to_json(c));
                    return {{"family", members}, {"matrix", T}, {"shape", shape_to_json(deformation_shape(T))}};
                },
                P);
        } else if (*classify) {
            ri.ell_divides_n = ell_div == "true";
            FibreType f = classify_fibre(ri);
            result["fibre"] = to_string(f);
            try {
                result["ramification"] = to_string(classify_kummer_ramification(ri));
            } catch (const WrongRegime&) {
                result["ramification"] = nullptr;
            }
            try {
                result["verdict"] = to_string(semistability_verdict(f, ri.v_x, ri.n));
            } catch (const WrongRegime&) {
                result["verdict"] = nullptr;
            }
        } else if (*curve) {
            result = curve_report(curve_from_json(read_json_file(resolve_fixture(curve_arg).string())));
        } else if (*brauer) {
            CyclotomicField Q(bw);
            std::vector<Cyclotomic> coeffs;
            for (auto& t : split(theta_text, ',')) coeffs.push_back(parse_scalar<Cyclotomic>(trim(t), Q));
            ThetaVector<Cyclotomic> theta{bp, coeffs, 0, 0, "cli"};
            if ((bi < 0) != (bj < 0)) throw UsageError("give both --i and --j");
            result = {{"p", bp}, {"w", bw}, {"quotients", brauer_report(theta, bw, bp, Q.zeta(), bi, bj)}};
        }
        emit(out, result, format);
        return kExitOk;
    } catch (const UsageError& e) {
        err << error_json(e.name(), e.what()).dump() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << error_json(e.name(), e.what()).dump() << "\n";
        return kExitUsage;
    } catch (const MalformedPresentation& e) {
        err << error_json(e.name(), e.what()).dump() << "\n";
        return kExitUsage;
    } catch (const NonTerminating& e) {
        err << error_json(e.name(), e.what()).dump() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << error_json(e.name(), e.what()).dump() << "\n";
        return kExitDomain;
    }
}

}  // namespace jackson::cli
