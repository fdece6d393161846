// Command-line front end: plug construction, surgeries, assembly of closed
// models, classification, winding profiles, and the analytic form checks.
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include "bicontact/json_io.hpp"
#include "bicontact/localforms.hpp"
#include "bicontact/surgery.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace bct;

namespace {

long long ll(const Int& v) { return v.convert_to<long long>(); }

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ValidationError("cannot parse rational '" + s + "'");
    }
}

H1Class parse_class(const std::string& s, const std::string& basis) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ValidationError("class must be 'a,b', got '" + s + "'");
    try {
        return {Int(s.substr(0, comma)), Int(s.substr(comma + 1)), basis};
    } catch (const std::exception&) {
        throw ValidationError("cannot parse class '" + s + "'");
    }
}

Json read_json(const std::string& path) {
    try {
        if (path == "-" || path.empty()) return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open " + path);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("bad JSON input: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw ValidationError("cannot write " + output);
    out << text;
}

std::string plug_table(const Plug& p) {
    std::ostringstream os;
    os << "fiber        genus " << p.fiber.genus << ", punctures "
       << p.fiber.punctures() << ", indices [";
    for (size_t i = 0; i < p.fiber.indices.size(); ++i)
        os << (i ? "," : "") << p.fiber.indices[i];
    os << "]\n";
    os << "twisting k   " << p.k << "\n";
    for (const BoundaryTorus& b : p.boundaries) {
        os << "boundary " << b.id << "  h=" << b.h << "  orbits="
           << b.orbit_count << "  orbit=(" << b.orbit_class.a << ","
           << b.orbit_class.b << ")  reeb=(" << b.reeb_class.a << ","
           << b.reeb_class.b << ")  slope=" << b.orbit_slope.num << "/"
           << b.orbit_slope.den << "\n";
    }
    os << "monodromy    " << p.monodromy.entries.size() << " twist(s), matrix "
       << word_matrix(p.monodromy).str() << "\n";
    os << "surgeries    " << p.surgeries.size() << " logged\n";
    return os.str();
}

PLCurve parse_points(const std::string& text, bool open) {
    PLCurve c;
    c.closed = !open;
    std::istringstream in(text);
    std::string vertex;
    while (std::getline(in, vertex, ';')) {
        auto comma = vertex.find(',');
        if (comma == std::string::npos)
            throw ValidationError("vertex must be 'x,y', got '" + vertex + "'");
        c.vertices.push_back({parse_rational(vertex.substr(0, comma)),
                              parse_rational(vertex.substr(comma + 1))});
    }
    return c;
}

SequenceEntry parse_entry(const std::string& text) {
    // id:a,b:power:level
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.size() != 4)
        throw ValidationError("entry must be 'id:a,b:power:level', got '" +
                              text + "'");
    try {
        return {{parts[0], parse_class(parts[1], "fiber")}, Int(parts[2]),
                Level(parse_rational(parts[3]))};
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

int run(int argc, char** argv) {
    CLI::App app{"bicontact plug calculus"};
    app.require_subcommand(1);
    std::string output;
    bool as_json = false;
    app.add_option("-o,--output", output, "write result to a file")
        ->configurable(false);
    app.add_flag("--json", as_json, "emit JSON instead of tables");

    // plug new / plug show
    auto* plug = app.add_subcommand("plug", "create and inspect plugs");
    plug->require_subcommand(1);
    auto* plug_new = plug->add_subcommand("new", "build a plug from a fiber");
    int genus = 0;
    int punctures = 0;
    std::vector<long long> indices;
    long long k_opt = 1;
    plug_new->add_option("--genus", genus)->required();
    plug_new->add_option("--punctures", punctures)->required();
    plug_new->add_option("--indices", indices, "per-puncture indices")
        ->required()
        ->delimiter(',');
    plug_new->add_option("--k", k_opt, "twisting")->required();

    auto* plug_show = plug->add_subcommand("show", "print a plug file");
    std::string plug_file;
    plug_show->add_option("file", plug_file, "plug JSON ('-' for stdin)");

    // surgery boundary / interior / sequence
    auto* surgery = app.add_subcommand("surgery", "apply surgeries to a plug");
    surgery->require_subcommand(1);
    std::string s_plug;
    surgery->add_option("--plug", s_plug, "plug JSON file")->required();

    auto* s_boundary = surgery->add_subcommand("boundary", "replace a Reeb class");
    std::string s_bid = "B1";
    long long s_shift = 0;
    s_boundary->add_option("--boundary", s_bid);
    s_boundary->add_option("--shift", s_shift);

    auto* s_interior = surgery->add_subcommand("interior", "add a monodromy twist");
    std::string s_curve = "c1";
    std::string s_class = "1,0";
    long long s_power = 1;
    std::string s_level = "1";
    s_interior->add_option("--curve", s_curve);
    s_interior->add_option("--class", s_class)->required();
    s_interior->add_option("--power", s_power);
    s_interior->add_option("--level", s_level);

    auto* s_sequence = surgery->add_subcommand("sequence", "apply a twist sequence");
    std::vector<std::string> s_entries;
    s_sequence->add_option("--entry", s_entries, "id:a,b:power:level")
        ->required();

    // monodromy matrix
    auto* monodromy = app.add_subcommand("monodromy", "monodromy word data");
    auto* mono_matrix = monodromy->add_subcommand("matrix", "H1 matrix of a plug");
    std::string m_plug;
    mono_matrix->add_option("--plug", m_plug, "plug JSON file")->required();

    // mcg check-chain
    auto* mcg = app.add_subcommand("mcg", "mapping-class-group checks");
    auto* mcg_chain =
        mcg->add_subcommand("check-chain", "verify the chain relation on H1");

    // glue
    auto* glue = app.add_subcommand("glue", "glue two plugs with the standard map");
    std::string g_plug1, g_plug2, g_b1 = "B1", g_b2 = "B1";
    glue->add_option("--plug1", g_plug1)->required();
    glue->add_option("--plug2", g_plug2)->required();
    glue->add_option("--boundary1", g_b1);
    glue->add_option("--boundary2", g_b2);

    // assemble fig8 / ht
    auto* assemble = app.add_subcommand("assemble", "build closed models");
    assemble->require_subcommand(1);
    auto* fig8 = assemble->add_subcommand("fig8", "figure-eight family");
    long long f_n = 0, f_m = 0, f_k = -1;
    bool f_sweep = false;
    fig8->add_option("--n", f_n);
    fig8->add_option("--m", f_m);
    fig8->add_option("--k", f_k, "half of n+m, used with --sweep");
    fig8->add_flag("--sweep", f_sweep, "emit all models with n+m = 2k");
    auto* ht = assemble->add_subcommand("ht", "mixed-cover graph model");
    long long ht_k = 2, ht_h = 2;
    ht->add_option("--k", ht_k)->required();
    ht->set_help_flag("--help", "print help");  // frees --h for the cover degree
    ht->add_option("--h", ht_h)->required();

    // classify
    auto* cls = app.add_subcommand("classify", "partition models by flow invariant");
    std::string cls_file;
    cls->add_option("file", cls_file, "JSON array of models ('-' for stdin)");

    // wind
    auto* wind = app.add_subcommand("wind", "winding profile of a chart curve");
    std::string w_points;
    std::string w_file;
    bool w_open = false;
    wind->add_option("--points", w_points, "x,y;x,y;... with rational entries");
    wind->add_option("--curve", w_file, "curve JSON file");
    wind->add_flag("--open", w_open, "treat the point list as a wrapping curve");

    // verify forms / collar
    auto* verify = app.add_subcommand("verify", "analytic form checks");
    verify->require_subcommand(1);
    auto* v_forms = verify->add_subcommand("forms", "contact/adaptedness/tangency");
    long long v_k = 1, v_h = -1;
    int v_grid = 0;
    v_forms->add_option("--k", v_k)->required();
    v_forms->set_help_flag("--help", "print help");
    v_forms->add_option("--h", v_h)->required();
    v_forms->add_option("--grid", v_grid, "tangency grid (default 8(k+|h|))");
    auto* v_collar = verify->add_subcommand("collar", "glued collar continuity");
    long long c_n = 1;
    std::string c_shift;
    int c_samples = 10000;
    unsigned c_seed = 7;
    v_collar->add_option("--n", c_n)->required();
    v_collar->add_option("--shift", c_shift, "shift in units of pi (default 1/n)");
    v_collar->add_option("--samples", c_samples);
    v_collar->add_option("--seed", c_seed);

    // let the global -o/--json flags appear after a subcommand name, as in
    // `plug new ... -o plug.json`
    for (CLI::App* a :
         {plug, plug_new, plug_show, surgery, s_boundary, s_interior,
          s_sequence, monodromy, mono_matrix, mcg, mcg_chain, glue, assemble,
          fig8, ht, cls, wind, verify, v_forms, v_collar})
        a->fallthrough(true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*plug_new) {
            if (static_cast<int>(indices.size()) != punctures)
                throw ValidationError("expected " + std::to_string(punctures) +
                                      " indices");
            std::vector<Int> idx(indices.begin(), indices.end());
            Plug p = new_plug(Fiber{genus, idx}, Int(k_opt));
            emit(canonical_dump(to_json(p)), output);
        } else if (*plug_show) {
            Plug p = plug_from_json(read_json(plug_file));
            emit(as_json ? canonical_dump(to_json(p)) : plug_table(p), output);
        } else if (*s_boundary) {
            Plug p = plug_from_json(read_json(s_plug));
            emit(canonical_dump(to_json(boundary_surgery(p, s_bid, Int(s_shift)))),
                 output);
        } else if (*s_interior) {
            Plug p = plug_from_json(read_json(s_plug));
            Plug q = interior_surgery(p, {s_curve, parse_class(s_class, "fiber")},
                                      Int(s_power), Level(parse_rational(s_level)));
            emit(canonical_dump(to_json(q)), output);
        } else if (*s_sequence) {
            Plug p = plug_from_json(read_json(s_plug));
            std::vector<SequenceEntry> seq;
            for (const std::string& e : s_entries) seq.push_back(parse_entry(e));
            auto [q, rep] = surgery_sequence(p, seq);
            std::cerr << rep.summary << "\n";
            emit(canonical_dump(to_json(q)), output);
        } else if (*mono_matrix) {
            Plug p = plug_from_json(read_json(m_plug));
            H1Matrix m = word_matrix(p.monodromy);
            if (as_json) {
                Json j;
                j["matrix"] = {{ll(m.m[0][0]), ll(m.m[0][1])},
                               {ll(m.m[1][0]), ll(m.m[1][1])}};
                j["trace"] = ll(m.trace());
                j["det"] = ll(m.det());
                emit(canonical_dump(j), output);
            } else {
                emit(m.str() + "\n", output);
            }
        } else if (*mcg) {
            ChainRelationReport rep = check_chain_relation();
            std::ostringstream os;
            for (const std::string& line : rep.lines) os << line << "\n";
            os << (rep.ok ? "chain relation holds on H1" : "chain relation FAILED")
               << "\n";
            emit(os.str(), output);
            if (!rep.ok) return 1;
        } else if (*glue) {
            Plug p1 = plug_from_json(read_json(g_plug1));
            Plug p2 = plug_from_json(read_json(g_plug2));
            GluingMap g = standard_gluing(p1.boundary(g_b1), p2.boundary(g_b2));
            ClosedModel m;
            m.pieces.push_back({p1, "piece1"});
            m.pieces.push_back({p2, "piece2"});
            m.gluings.push_back({0, g_b1, 1, g_b2, g});
            validate_model(m);
            emit(canonical_dump(to_json(m)), output);
        } else if (*fig8) {
            if (f_sweep) {
                if (f_k < 0) throw ValidationError("--sweep needs --k");
                Json arr = Json::array();
                for (long long n = 0; n <= 2 * f_k; ++n)
                    arr.push_back(to_json(fig8_model(Int(n), Int(2 * f_k - n))));
                emit(canonical_dump(arr), output);
            } else {
                emit(canonical_dump(to_json(fig8_model(Int(f_n), Int(f_m)))),
                     output);
            }
        } else if (*ht) {
            emit(canonical_dump(to_json(ht_model(Int(ht_k), Int(ht_h)))), output);
        } else if (*cls) {
            Json j = read_json(cls_file);
            if (!j.is_array()) throw ValidationError("expected a JSON array");
            std::vector<ClosedModel> models;
            for (const Json& mj : j) models.push_back(model_from_json(mj));
            auto classes = classify(models);
            std::ostringstream os;
            os << classes.size() << " classes\n";
            if (as_json) {
                Json out;
                out["classes"] = classes;
                emit(canonical_dump(out), output);
            } else {
                for (const auto& group : classes) {
                    os << " ";
                    for (int i : group) os << " " << i;
                    os << "\n";
                }
                emit(os.str(), output);
            }
        } else if (*wind) {
            PLCurve c;
            if (!w_points.empty())
                c = parse_points(w_points, w_open);
            else if (!w_file.empty())
                c = curve_from_json(read_json(w_file));
            else
                throw ValidationError("wind needs --points or --curve");
            WindingProfile prof = winding_profile(c);
            Json j;
            j["tangency_values"] = prof.tangency_values;
            j["wind"] = ll(prof.wind);
            j["delta_w"] = ll(prof.delta_w);
            emit(canonical_dump(j), output);
        } else if (*v_forms) {
            if (v_k <= 0) throw ValidationError("--k must be positive");
            int grid = v_grid > 0 ? v_grid
                                  : 8 * static_cast<int>(v_k + std::llabs(v_h));
            Json checks = Json::array();
            bool all_ok = true;
            auto add = [&](const std::string& name, bool ok,
                           const Json& extra = Json()) {
                Json c;
                c["check"] = name;
                c["status"] = ok ? "pass" : "fail";
                if (!extra.is_null()) c["value"] = extra;
                checks.push_back(c);
                all_ok = all_ok && ok;
            };
            VolumeCoefficient vp = contact_volume(alpha_plus_boundary(v_k, v_h));
            add("positive contact volume k",
                vp.is_constant() && vp.constant() == v_k);
            VolumeCoefficient vn = contact_volume(alpha_minus_boundary(v_k, v_h));
            add("negative contact volume -1",
                vn.is_constant() && vn.constant() == -1);
            add("strong adaptedness",
                strong_adaptedness_check(alpha_minus_boundary(v_k, v_h),
                                         alpha_plus_boundary(v_k, v_h)));
            ReducedFraction slope = boundary_foliation_slope(v_k, v_h);
            add("foliation slope h/k", true, to_json(slope));
            int comps = tangency_components(v_k, v_h, grid);
            long long expected = 2 * std::gcd(v_k, std::llabs(v_h));
            add("tangency components 2gcd(k,|h|)", comps == expected, comps);
            emit(canonical_dump(checks), output);
            if (!all_ok) return 1;
        } else if (*v_collar) {
            Rational shift =
                c_shift.empty() ? Rational(1, c_n) : parse_rational(c_shift);
            CollarReport rep = glued_collar_check(c_n, shift, c_samples, 1e-9,
                                                  c_seed);
            Json j;
            j["check"] = "glued collar continuity";
            j["status"] = rep.pass ? "pass" : "fail";
            j["worst_error"] = rep.worst_error;
            j["location"] = rep.worst_point;
            j["detail"] = rep.detail;
            emit(canonical_dump(j), output);
            if (!rep.pass) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
