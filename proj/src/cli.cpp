#include "assoc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "assoc/io.hpp"

namespace assoc {

namespace {

std::string descriptor(const RunConfig& cfg) {
    std::ostringstream os;
    if (cfg.type == 'A') {
        os << "A_n" << cfg.n << "_up";
        if (cfg.up.empty()) {
            os << "none";
        } else {
            bool first = true;
            for (int i : cfg.up) {
                os << (first ? "" : "-") << i;
                first = false;
            }
        }
    } else {
        os << "B_n" << cfg.n;
        if (!cfg.edges.empty()) os << "_" << cfg.edges;
    }
    return os.str();
}

int emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_dir.empty()) {
        out << text;
        return 0;
    }
    std::filesystem::create_directories(cfg.out_dir);
    std::string ext = cfg.format;
    std::filesystem::path path =
        std::filesystem::path(cfg.out_dir) / (cfg.command + "_" + descriptor(cfg) + "." + ext);
    std::ofstream file(path);
    require(file.good(), "cannot open output file " + path.string());
    file << text;
    json note;
    note["written"] = path.string();
    out << note.dump() << "\n";
    return 0;
}

struct Instance {
    char type;
    std::optional<OrientationB> b;
    LabelledPolygon polygon;  // B: the symmetric A_{2n-1} polygon

    json orientation_json() const { return type == 'A' ? to_json(polygon.orientation()) : to_json(*b); }
};

Instance make_instance(const RunConfig& cfg) {
    require(cfg.n >= 1, "--n is required and must be positive");
    if (cfg.type == 'A') {
        require(cfg.edges.empty(), "--edges is only for --type B");
        return Instance{'A', std::nullopt, LabelledPolygon(Orientation(cfg.n, cfg.up))};
    }
    require(cfg.up.empty(), "type B orientations are named by --edges, not --up");
    OrientationB b = parse_b_edges(cfg.n, cfg.edges);
    return Instance{'B', b, LabelledPolygon(b.symmetric_a())};
}

std::vector<Triangulation> instance_triangulations(const Instance& inst) {
    return inst.type == 'A' ? enumerate_triangulations(inst.polygon)
                            : symmetric_triangulations(inst.polygon);
}

std::string render_csv_vertices(const std::vector<Point>& pts) {
    std::ostringstream os;
    os << "index";
    for (size_t i = 1; i <= pts.front().size(); ++i) os << ",x" << i;
    os << "\n";
    for (size_t r = 0; r < pts.size(); ++r) {
        os << r;
        for (long long v : pts[r]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

int cmd_vertices(const RunConfig& cfg, const Instance& inst, std::ostream& out) {
    std::vector<Triangulation> ts = instance_triangulations(inst);
    std::vector<Point> pts;
    pts.reserve(ts.size());
    for (const Triangulation& t : ts) pts.push_back(coordinates(inst.polygon, t));
    if (cfg.format == "csv") return emit(cfg, render_csv_vertices(pts), out);
    require(cfg.format == "json", "vertices supports json or csv");
    json j;
    j["orientation"] = inst.orientation_json();
    j["vertex_count"] = pts.size();
    json rows = json::array();
    for (size_t i = 0; i < ts.size(); ++i) {
        json row;
        row["index"] = i;
        row["triangulation"] = to_json(ts[i]);
        row["point"] = to_json(pts[i]);
        rows.push_back(std::move(row));
    }
    j["vertices"] = std::move(rows);
    return emit(cfg, j.dump(2) + "\n", out);
}

int cmd_facets(const RunConfig& cfg, const Instance& inst, std::ostream& out) {
    HRepresentation rep = h_representation(inst.polygon);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "K,rhs\n";
        for (const HalfSpace& h : rep.half_spaces) {
            os << "\"";
            for (size_t i = 0; i < h.K.size(); ++i) os << (i ? ";" : "") << h.K[i];
            long long k = h.k();
            os << "\"," << k * (k + 1) / 2 << "\n";
        }
        return emit(cfg, os.str(), out);
    }
    require(cfg.format == "json", "facets supports json or csv");
    json j;
    j["orientation"] = inst.orientation_json();
    j["ambient"] = rep.n;
    j["sum_rhs"] = rep.sum_rhs;
    json hs = json::array();
    for (const HalfSpace& h : rep.half_spaces) hs.push_back(to_json(h));
    j["half_spaces"] = std::move(hs);
    if (inst.type == 'B') {
        const int n = inst.b->rank();
        json tb = json::array();
        for (const Hyperplane& h : type_b_hyperplanes(n))
            tb.push_back({{"i", h.index}, {"rhs", 2 * n + 1}});
        j["type_b"] = std::move(tb);
        std::vector<Point> verts = cyclohedron_vertices(*inst.b);
        j["facet_classes"] = facet_classes(rep, verts);
    }
    return emit(cfg, j.dump(2) + "\n", out);
}

json run_check(const std::string& name, const std::function<std::vector<std::string>()>& body,
               bool& all_ok) {
    json c;
    c["name"] = name;
    try {
        std::vector<std::string> violations = body();
        c["ok"] = violations.empty();
        c["violations"] = violations;
        if (!violations.empty()) all_ok = false;
    } catch (const std::exception& e) {
        c["ok"] = false;
        c["violations"] = std::vector<std::string>{e.what()};
        all_ok = false;
    }
    return c;
}

std::vector<std::string> check_vertices(const LabelledPolygon& p,
                                        const std::vector<Triangulation>& ts) {
    std::vector<std::string> out;
    for (const Triangulation& t : ts) {
        VertexReport r = verify_vertex(p, t);
        for (const std::string& v : r.violations)
            if (out.size() < 50) out.push_back(v);
    }
    return out;
}

std::vector<std::string> check_flips(const LabelledPolygon& p,
                                     const std::vector<Triangulation>& ts) {
    std::vector<std::string> out;
    auto note = [&](const std::string& m) {
        if (out.size() < 50) out.push_back(m);
    };
    for (const Triangulation& t : ts) {
        Point x = coordinates(p, t);
        for (const Diagonal& d : t.diagonals()) {
            auto [t2, d2] = bistellar_flip(p, t, d);
            Point y = coordinates(p, t2);
            long long sx = 0, sy = 0;
            for (size_t i = 0; i < x.size(); ++i) {
                sx += x[i];
                sy += y[i];
            }
            if (sx != sy) note("flip changed the coordinate sum");
            // only the two middle labels of the quadrilateral may move
            std::set<int> quad{d.a, d.b, d2.a, d2.b};
            check(quad.size() == 4, "flip quadrilateral must have 4 labels");
            std::vector<int> q(quad.begin(), quad.end());
            int b = q[1], c = q[2];
            long long moved_sum_before = 0, moved_sum_after = 0;
            for (int i = 1; i <= p.rank(); ++i) {
                bool movable = i == b || i == c;
                if (!movable && x[i - 1] != y[i - 1])
                    note("flip moved a coordinate outside the quadrilateral");
                if (movable) {
                    moved_sum_before += x[i - 1];
                    moved_sum_after += y[i - 1];
                }
            }
            if (moved_sum_before != moved_sum_after)
                note("flip changed x_b + x_c");
            HalfSpace k = k_map(p, d);
            if (!(halfspace_eval(k, y) > 0 && halfspace_eval(k, x) == 0))
                note("flipping a diagonal out must strictly leave its hyperplane");
            auto [t3, d3] = bistellar_flip(p, t2, d2);
            (void)d3;
            if (!(t3 == t)) note("flip must be an involution");
        }
    }
    return out;
}

std::vector<std::string> check_fibers(const LabelledPolygon& p,
                                      const std::vector<Triangulation>& ts) {
    std::vector<std::string> out;
    auto fibers = all_fibers(p);
    long long total = 0;
    for (const auto& [t, sigmas] : fibers) total += sigmas.size();
    long long factorial = 1;
    for (int i = 2; i <= p.rank(); ++i) factorial *= i;
    if (total != factorial) out.push_back("fibers do not partition S_n");
    if (fibers.size() != ts.size()) out.push_back("phi is not surjective");
    for (const Triangulation& t : ts) {
        bool singleton = fibers.count(t) && fibers.at(t).size() == 1;
        Point x = coordinates(p, t);
        std::vector<long long> sorted = x;
        std::sort(sorted.begin(), sorted.end());
        bool lattice_perm = true;
        for (int i = 1; i <= p.rank(); ++i) lattice_perm &= sorted[i - 1] == i;
        if (singleton != is_common_vertex(p, t) || singleton != lattice_perm) {
            out.push_back("singleton-fiber / common-vertex / permutation-point disagree");
            break;
        }
    }
    return out;
}

int cmd_verify(const RunConfig& cfg, const Instance& inst, std::ostream& out) {
    require(cfg.format == "json", "verify emits json");
    const LabelledPolygon& p = inst.polygon;
    bool all_ok = true;
    json checks = json::array();

    checks.push_back(run_check(
        "h_representation",
        [&]() {
            h_representation(p);
            return std::vector<std::string>{};
        },
        all_ok));

    std::vector<Triangulation> ts = instance_triangulations(inst);
    checks.push_back(run_check(
        "vertex_incidence", [&]() { return check_vertices(p, ts); }, all_ok));
    checks.push_back(run_check(
        "flip_lemmas",
        [&]() { return check_flips(p, enumerate_triangulations(p)); }, all_ok));

    if (inst.type == 'A') {
        if (p.rank() <= 6) {
            checks.push_back(run_check(
                "fibers", [&]() { return check_fibers(p, ts); }, all_ok));
        }
    } else {
        checks.push_back(run_check(
            "cyclohedron_vertices",
            [&]() {
                cyclohedron_vertices(*inst.b);
                return std::vector<std::string>{};
            },
            all_ok));
        if (inst.b->rank() <= 4) {
            checks.push_back(run_check(
                "type_b_slice",
                [&]() {
                    std::vector<std::string> bad;
                    for (const Triangulation& t : enumerate_triangulations(p)) {
                        bool symmetric = is_centrally_symmetric(p, t);
                        bool on_b = on_all_type_b(coordinates(p, t));
                        if (symmetric != on_b)
                            bad.push_back("central symmetry and type B incidence disagree");
                    }
                    return bad;
                },
                all_ok));
            checks.push_back(run_check(
                "skeleton",
                [&]() {
                    skeleton_b(*inst.b);
                    return std::vector<std::string>{};
                },
                all_ok));
        }
    }

    json j;
    j["orientation"] = inst.orientation_json();
    j["ok"] = all_ok;
    j["checks"] = std::move(checks);
    int rc = emit(cfg, j.dump(2) + "\n", out);
    return rc != 0 ? rc : (all_ok ? 0 : 1);
}

int cmd_phi(const RunConfig& cfg, const Instance& inst, std::ostream& out) {
    require(cfg.format == "json", "phi emits json");
    require(!cfg.perm.empty(), "phi needs --perm");
    Permutation sigma = parse_permutation(cfg.perm);
    Triangulation t = inst.type == 'A' ? phi(inst.polygon, sigma) : phi_b(inst.polygon, sigma);
    json j;
    j["orientation"] = inst.orientation_json();
    j["sigma"] = sigma.images();
    j["sigma_inverse"] = sigma.inverse().images();
    j["triangulation"] = to_json(t);
    j["point"] = to_json(coordinates(inst.polygon, t));
    return emit(cfg, j.dump(2) + "\n", out);
}

int cmd_fiber(const RunConfig& cfg, const Instance& inst, std::ostream& out) {
    require(cfg.format == "json", "fiber emits json");
    require(!cfg.diagonals.empty(), "fiber needs --diagonals");
    Triangulation t(inst.polygon, parse_diagonals(inst.polygon, cfg.diagonals));
    std::vector<Permutation> sigmas;
    if (inst.type == 'A') {
        sigmas = fiber(inst.polygon, t);
    } else {
        require(is_centrally_symmetric(inst.polygon, t),
                "type B fibers are over centrally symmetric triangulations");
        for (const Permutation& w : enumerate_w(inst.b->rank()))
            if (phi_b(inst.polygon, w) == t) sigmas.push_back(w);
    }
    json j;
    j["orientation"] = inst.orientation_json();
    j["triangulation"] = to_json(t);
    j["fiber_size"] = sigmas.size();
    json rows = json::array();
    for (const Permutation& s : sigmas) rows.push_back(s.images());
    j["fiber"] = std::move(rows);
    return emit(cfg, j.dump(2) + "\n", out);
}

json stats_row_json(const RealizationStats& row) {
    json j;
    j["orientation"] = to_json(row.orientation);
    j["vertex_count"] = row.vertex_count;
    j["common_vertices"] = row.common_vertices;
    if (row.integer_points)
        j["integer_points"] = *row.integer_points;
    else
        j["integer_points"] = nullptr;
    std::vector<std::string> center;
    for (const Rational& r : row.center) center.push_back(r.str());
    j["barycenter"] = center;
    return j;
}

int cmd_stats(const RunConfig& cfg, const Instance& inst, std::ostream& out) {
    json j;
    if (inst.type == 'A') {
        require(inst.polygon.rank() <= cfg.cap, "stats: n exceeds the enumeration cap");
        const Orientation& o = inst.polygon.orientation();
        LabelledPolygon p(o);
        std::vector<Point> verts;
        for (const Triangulation& t : enumerate_triangulations(p))
            verts.push_back(coordinates(p, t));
        RealizationStats row{o, static_cast<long long>(verts.size()), common_vertex_count(p),
                             integer_point_count(p, cfg.cap), barycenter(verts)};
        j = stats_row_json(row);
    } else {
        require(inst.b->rank() <= cfg.cap, "stats: n exceeds the enumeration cap");
        std::vector<Point> verts = cyclohedron_vertices(*inst.b);
        long long common = 0;
        for (const Triangulation& t : symmetric_triangulations(inst.polygon))
            if (is_common_vertex(inst.polygon, t)) ++common;
        j["orientation"] = inst.orientation_json();
        j["vertex_count"] = verts.size();
        j["common_vertices"] = common;
        j["integer_points"] = integer_point_count_b(*inst.b, cfg.cap);
        std::vector<std::string> center;
        for (const Rational& r : barycenter(verts)) center.push_back(r.str());
        j["barycenter"] = center;
    }
    require(cfg.format == "json", "stats emits json");
    return emit(cfg, j.dump(2) + "\n", out);
}

std::string format_up(const Orientation& o) {
    std::string s = "{";
    bool first = true;
    for (int i : o.up()) {
        s += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return s + "}";
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
    require(cfg.n >= 2, "--n is required");
    require(cfg.type == 'A', "tables are defined for type A");
    require(cfg.group == "orientation" || cfg.group == "class",
            "--group must be orientation or class");
    std::vector<RealizationStats> rows = stats_table(cfg.n, cfg.cap);
    std::vector<std::vector<Orientation>> classes = equivalence_classes(cfg.n);
    auto class_of = [&](const Orientation& o) {
        for (size_t c = 0; c < classes.size(); ++c)
            for (const Orientation& member : classes[c])
                if (member == o) return static_cast<int>(c);
        fail("orientation missing from its equivalence classes");
    };

    if (cfg.group == "class") {
        // collapse to one row per class; the invariants are constant on it
        std::map<std::set<int>, const RealizationStats*> by_up;
        for (const RealizationStats& row : rows) by_up[row.orientation.up()] = &row;
        std::vector<RealizationStats> collapsed;
        for (const auto& members : classes) {
            const RealizationStats& first = *by_up.at(members.front().up());
            for (const Orientation& o : members) {
                const RealizationStats& other = *by_up.at(o.up());
                check(other.common_vertices == first.common_vertices &&
                          other.integer_points == first.integer_points,
                      "invariants differ inside an equivalence class");
            }
            collapsed.push_back(first);
        }
        rows = std::move(collapsed);
    }

    if (cfg.format == "md") {
        std::ostringstream os;
        os << "| class | up | vertices | common vertices | lattice points |\n";
        os << "|---|---|---|---|---|\n";
        for (const RealizationStats& row : rows) {
            os << "| " << class_of(row.orientation) << " | " << format_up(row.orientation)
               << " | " << row.vertex_count << " | " << row.common_vertices << " | ";
            if (row.integer_points)
                os << *row.integer_points;
            else
                os << "-";
            os << " |\n";
        }
        return emit(cfg, os.str(), out);
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "class,up,vertex_count,common_vertices,integer_points\n";
        for (const RealizationStats& row : rows) {
            os << class_of(row.orientation) << ",\"";
            bool first = true;
            for (int i : row.orientation.up()) {
                os << (first ? "" : ";") << i;
                first = false;
            }
            os << "\"," << row.vertex_count << "," << row.common_vertices << ",";
            if (row.integer_points) os << *row.integer_points;
            os << "\n";
        }
        return emit(cfg, os.str(), out);
    }
    require(cfg.format == "json", "tables supports json, csv or md");
    json j;
    j["n"] = cfg.n;
    json rws = json::array();
    for (const RealizationStats& row : rows) {
        json r = stats_row_json(row);
        r["class"] = class_of(row.orientation);
        rws.push_back(std::move(r));
    }
    j["rows"] = std::move(rws);
    json cls = json::array();
    for (const auto& members : classes) {
        json m = json::array();
        for (const Orientation& o : members)
            m.push_back(std::vector<int>(o.up().begin(), o.up().end()));
        cls.push_back(std::move(m));
    }
    j["classes"] = std::move(cls);
    return emit(cfg, j.dump(2) + "\n", out);
}

int cmd_skeleton(const RunConfig& cfg, const Instance& inst, std::ostream& out) {
    require(cfg.format == "json", "skeleton emits json");
    Graph g = inst.type == 'A' ? skeleton(inst.polygon) : skeleton_b(*inst.b);
    json j;
    j["orientation"] = inst.orientation_json();
    j["vertex_count"] = g.vertex_count;
    j["edge_count"] = g.edges.size();
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return emit(cfg, j.dump(2) + "\n", out);
}

int cmd_export(const RunConfig& cfg, const Instance& inst, std::ostream& out) {
    require(cfg.format == "off", "export emits off");
    std::string text;
    if (inst.type == 'A') {
        require(inst.polygon.rank() == 4, "OFF export needs a 3-dimensional polytope (A: n=4)");
        const LabelledPolygon& p = inst.polygon;
        std::vector<Triangulation> ts = enumerate_triangulations(p);
        std::vector<Point> pts;
        for (const Triangulation& t : ts) pts.push_back(coordinates(p, t));
        HRepresentation rep = h_representation(p);
        std::vector<std::vector<int>> faces;
        for (const HalfSpace& h : rep.half_spaces) {
            std::vector<int> face;
            for (size_t i = 0; i < pts.size(); ++i)
                if (halfspace_eval(h, pts[i]) == 0) face.push_back(static_cast<int>(i));
            faces.push_back(std::move(face));
        }
        text = off_text(rep.n, pts, faces, skeleton(p));
    } else {
        require(inst.b->rank() == 3, "OFF export needs a 3-dimensional polytope (B: n=3)");
        std::vector<Point> pts = cyclohedron_vertices(*inst.b);
        HRepresentation rep = h_representation(inst.polygon);
        std::vector<std::vector<int>> faces;
        for (const std::vector<int>& cls : facet_classes(rep, pts)) {
            const HalfSpace& h = rep.half_spaces[cls.front()];
            std::vector<int> face;
            for (size_t i = 0; i < pts.size(); ++i)
                if (halfspace_eval(h, pts[i]) == 0) face.push_back(static_cast<int>(i));
            faces.push_back(std::move(face));
        }
        text = off_text(rep.n, pts, faces, skeleton_b(*inst.b));
    }
    return emit(cfg, text, out);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "tables") return cmd_tables(cfg, out);
        Instance inst = make_instance(cfg);
        if (cfg.command == "vertices") return cmd_vertices(cfg, inst, out);
        if (cfg.command == "facets") return cmd_facets(cfg, inst, out);
        if (cfg.command == "verify") return cmd_verify(cfg, inst, out);
        if (cfg.command == "phi") return cmd_phi(cfg, inst, out);
        if (cfg.command == "fiber") return cmd_fiber(cfg, inst, out);
        if (cfg.command == "stats") return cmd_stats(cfg, inst, out);
        if (cfg.command == "skeleton") return cmd_skeleton(cfg, inst, out);
        if (cfg.command == "export") return cmd_export(cfg, inst, out);
        bad_input("unknown command '" + cfg.command + "'");
    } catch (const std::invalid_argument& e) {
        json j;
        j["error"] = e.what();
        err << j.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json j;
        j["error"] = e.what();
        err << j.dump() << "\n";
        return 1;
    }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integer-coordinate realizations of associahedra and cyclohedra from oriented Coxeter graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::vector<int> up_list;
    auto add_common = [&](CLI::App* sub, bool wants_orientation) {
        if (wants_orientation) {
            sub->add_option("--type", cfg.type, "A or B")
                ->check(CLI::IsMember({'A', 'B'}))
                ->default_val('A');
            sub->add_option("--up", up_list, "up elements (type A)")->delimiter(',');
            sub->add_option("--edges", cfg.edges,
                            "type B edge word, one of r/l per edge t-s1,s1-s2,...");
        }
        sub->add_option("--n", cfg.n, "rank")->required();
        sub->add_option("--format", cfg.format, "json|csv|off|md")->default_val("json");
        sub->add_option("--out", cfg.out_dir, "write to this directory instead of stdout");
        sub->add_option("--cap", cfg.cap, "lattice scan rank cap")
            ->default_val(kDefaultScanCap);
    };

    for (const char* name : {"vertices", "facets", "verify", "stats", "skeleton", "export"}) {
        CLI::App* sub = app.add_subcommand(name, "");
        add_common(sub, true);
        sub->callback([&cfg, name]() { cfg.command = name; });
    }
    CLI::App* phi_cmd = app.add_subcommand("phi", "apply the permutation-to-triangulation map");
    add_common(phi_cmd, true);
    phi_cmd->add_option("--perm", cfg.perm, "one-line permutation, e.g. 2,1,3")->required();
    phi_cmd->callback([&cfg]() { cfg.command = "phi"; });

    CLI::App* fiber_cmd = app.add_subcommand("fiber", "preimage of a triangulation");
    add_common(fiber_cmd, true);
    fiber_cmd->add_option("--diagonals", cfg.diagonals, "e.g. 0-3,2-3,2-4")->required();
    fiber_cmd->callback([&cfg]() { cfg.command = "fiber"; });

    CLI::App* tables_cmd = app.add_subcommand("tables", "per-orientation invariants table");
    add_common(tables_cmd, false);
    tables_cmd->add_option("--group", cfg.group, "orientation|class")
        ->default_val("orientation");
    tables_cmd->callback([&cfg]() { cfg.command = "tables"; });

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    cfg.up = std::set<int>(up_list.begin(), up_list.end());
    return run(cfg, out, err);
}

}  // namespace assoc
