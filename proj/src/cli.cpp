#include "qloop/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qloop/errors.hpp"
#include "qloop/paths.hpp"
#include "qloop/serialize.hpp"
#include "qloop/specialization.hpp"
#include "qloop/verify.hpp"

namespace qloop::cli {

using nlohmann::json;

Word parse_word(const std::string& text, int rank) {
    static const std::regex letter(R"(\s*(\d+)\s*:\s*(-?\d+)\s*)");
    Word word;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::smatch m;
        if (!std::regex_match(item, m, letter)) throw ConfigError("malformed letter '" + item + "' in word: " + text);
        int color = std::stoi(m[1]) - 1;
        if (color < 0 || color >= rank) throw ConfigError("color out of range in word: " + text);
        word.push_back({color, std::stoi(m[2])});
    }
    if (word.empty()) throw ConfigError("empty word");
    return word;
}

std::string word_str(const Word& word) {
    std::string s;
    for (const auto& l : word) {
        if (!s.empty()) s += ",";
        s += std::to_string(l.color + 1) + ":" + std::to_string(l.d);
    }
    return s;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("malformed integer list: " + text);
        }
    }
    return out;
}

namespace {

json vec_json(const Eigen::VectorXi& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

RootVec to_vec(const std::vector<int>& v) {
    RootVec r(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) r(static_cast<Eigen::Index>(i)) = v[i];
    return r;
}

struct Report {
    json doc;
    json checks = json::array();
    std::size_t failed = 0;

    Report(const std::string& command, json config) {
        doc["schema"] = kReportSchema;
        doc["command"] = command;
        doc["config"] = std::move(config);
    }
    void check(const std::string& id, json inputs, bool pass, json values = json::object()) {
        checks.push_back({{"id", id}, {"inputs", std::move(inputs)}, {"pass", pass}, {"values", std::move(values)}});
        failed += !pass;
    }
    json finish() {
        doc["checks"] = checks;
        doc["summary"] = {{"checks", checks.size()}, {"passed", checks.size() - failed}, {"failed", failed}};
        return doc;
    }
    int code() const { return failed == 0 ? kOk : kCheckFailed; }
};

struct Common {
    std::string type = "A2";
    std::string orientation;
    std::string out;
    std::uint64_t seed = 1;
    int threads = 0;

    DynkinType dynkin() const { return DynkinType::parse(type); }
    QuiverOrientation quiver() const {
        auto t = dynkin();
        return orientation.empty() ? QuiverOrientation::standard(t) : QuiverOrientation::parse(t, orientation);
    }
    unsigned workers() const { return threads > 0 ? static_cast<unsigned>(threads) : thread_count(); }
    json config() const { return {{"type", type}, {"orientation", quiver().str()}, {"seed", seed}}; }
};

void add_common(CLI::App* app, Common& c, bool with_orientation = true) {
    app->add_option("--type", c.type, "Dynkin type: A<n>, D<n>, E6, E7, E8")->capture_default_str();
    if (with_orientation) app->add_option("--orientation", c.orientation, "arrows such as \"1>2,3>2\"");
    app->add_option("--out", c.out, "write the report here instead of stdout");
    app->add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
    app->add_option("--threads", c.threads, "worker threads (default: QLOOP_THREADS or all cores)");
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
    if (c.out.empty()) {
        out << text << '\n';
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw ConfigError("cannot write " + c.out);
    f << text << '\n';
}

void emit(const Common& c, std::ostream& out, const json& j) { emit(c, out, j.dump(2)); }

std::string dot(const ARQuiver& ar) {
    std::ostringstream s;
    s << "digraph ar {\n  rankdir=LR;\n";
    for (int a = 0; a < ar.roots().size(); ++a) {
        s << "  r" << a << " [label=\"" << root_str(ar.roots().root(a)) << "\"];\n";
    }
    for (auto [a, b] : ar.arrows()) s << "  r" << a << " -> r" << b << ";\n";
    s << "}";
    return s.str();
}

json pair_json(const RootSystem& rs, const QuiverOrientation& o, const MinimalPair& p) {
    const auto& a = rs.root(p.alpha);
    const auto& b = rs.root(p.beta);
    return {{"alpha", vec_json(a)},           {"beta", vec_json(b)},
            {"sum", vec_json(a + b)},         {"alpha_index", p.alpha},
            {"beta_index", p.beta},           {"euler_alpha_beta", euler_form(o, a, b)},
            {"euler_beta_alpha", euler_form(o, b, a)}};
}

std::pair<int, int> parse_range(const std::string& text) {
    static const std::regex range(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, range)) throw ConfigError("malformed range (expected a..b): " + text);
    int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    if (lo > hi) throw ConfigError("empty range: " + text);
    return {lo, hi};
}

PathSize parse_size(const std::string& text) {
    auto v = parse_int_list(text);
    if (v.size() != 2 || v[0] < 0) throw ConfigError("malformed path size: " + text);
    return {v[0], v[1]};
}

json legs_json(const Legs& legs) {
    json a = json::array();
    for (const auto& l : legs) a.push_back({l.dx, l.dy});
    return a;
}

// Checks shared by selftest: the worked A2 example.
void a2_example(Report& rep, const ShuffleContext& ctx) {
    ColorDegree a1 = ColorDegree::Unit(2, 0), a2 = ColorDegree::Unit(2, 1);
    auto g = word_product(ctx, {{1, 0}, {0, 0}});
    auto f = word_product(ctx, {{0, 0}, {1, 0}});
    auto tg = two_point(ctx, g, a1, a2);
    auto tf = two_point(ctx, f, a1, a2);
    RatFunc spec_g = spec_map(ctx, g);
    RatFunc residue = residue_on_diagonal(tg.value);
    auto expect = [&](const std::string& id, const std::string& word, const std::string& got,
                      const std::string& want) { rep.check(id, {{"word", word}}, got == want, {{"value", got}, {"expected", want}}); };
    expect("a2.numerator", "2:0,1:0", to_string(g.numerator), "q*z1_1 - z2_1");
    expect("a2.spec", "2:0,1:0", to_string(spec_g), "(q*x^-1)/((q - q^-1))");
    expect("a2.two_point", "2:0,1:0", to_string(tg.value), "(q^2*y^-1 - x^-1)/((x - y)*(q - q^-1)^2)");
    expect("a2.residue", "2:0,1:0", to_string(residue), "(q*x^-1)/((q - q^-1))");
    expect("a2.spec_reverse", "1:0,2:0", to_string(spec_map(ctx, f)), "0");
    expect("a2.two_point_reverse", "1:0,2:0", to_string(tf.value), "(q*x^-1*y^-1)/((q - q^-1)^2)");
    rep.check("a2.residue_equals_spec", {{"word", "2:0,1:0"}}, residue == spec_g,
              {{"residue", to_string(residue)}, {"spec", to_string(spec_g)}});
}

int cmd_roots(const Common& c, std::ostream& out) {
    auto rs = build_root_system(c.dynkin());
    json roots = json::array();
    for (int a = 0; a < rs.size(); ++a) {
        roots.push_back({{"index", a}, {"root", vec_json(rs.root(a))}, {"height", height(rs.root(a))}});
    }
    json cartan = json::array();
    for (int i = 0; i < rs.rank(); ++i) cartan.push_back(vec_json(rs.cartan().row(i).transpose()));
    Report rep("roots", {{"type", c.type}});
    rep.doc["result"] = {{"rank", rs.rank()}, {"cartan", cartan}, {"positive_roots", roots}};
    emit(c, out, rep.finish());
    return rep.code();
}

int cmd_ar_quiver(const Common& c, const std::string& format, const std::string& dot_path, std::ostream& out) {
    auto o = c.quiver();
    auto rs = build_root_system(o.type);
    auto ar = build_ar_quiver(o, rs);
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw ConfigError("cannot write " + dot_path);
        f << dot(ar) << '\n';
    }
    if (format == "dot") {
        emit(c, out, dot(ar));
        return kOk;
    }
    json vertices = json::array();
    for (int a = 0; a < rs.size(); ++a) vertices.push_back({{"index", a}, {"root", vec_json(rs.root(a))}});
    json arrows = json::array();
    for (auto [a, b] : ar.arrows()) arrows.push_back({a, b});
    Report rep("ar-quiver", c.config());
    rep.doc["result"] = {{"tau", level_function(o)}, {"vertices", vertices}, {"arrows", arrows},
                         {"refinement", default_refinement(ar).sequence}};
    emit(c, out, rep.finish());
    return rep.code();
}

int cmd_minimal_pairs(const Common& c, const std::string& order_text, std::ostream& out) {
    auto o = c.quiver();
    auto rs = build_root_system(o.type);
    auto ar = build_ar_quiver(o, rs);
    json config = c.config();
    std::optional<TotalOrder> order;
    std::vector<MinimalPair> pairs;
    if (!order_text.empty()) {
        auto seq = parse_int_list(order_text);
        try {
            order = TotalOrder::from_sequence(seq);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("order: ") + e.what());
        }
        if (static_cast<int>(order->sequence.size()) != rs.size() || !refines(ar, *order)) {
            throw ConfigError("order does not refine the AR order");
        }
        pairs = minimal_pairs(ar, *order);
        config["order"] = seq;
    } else {
        pairs = minimal_pairs_all_refinements(ar);
        config["order"] = "all refinements";
    }
    Report rep("minimal-pairs", config);
    json list = json::array();
    for (const auto& p : pairs) {
        json pj = pair_json(rs, o, p);
        list.push_back(pj);
        json in = {{"alpha", pj["alpha"]}, {"beta", pj["beta"]}};
        rep.check("lemma.euler", in, pj["euler_alpha_beta"] == -1 && pj["euler_beta_alpha"] == 0);
        if (order) {
            rep.check("claim1", in, claim1_check(rs, *order, p.alpha, p.beta));
            rep.check("claim2", in, claim2_check(rs, *order, p.alpha, p.beta));
        }
    }
    rep.doc["result"] = {{"pairs", list}};
    emit(c, out, rep.finish());
    return rep.code();
}

int cmd_shuffle_mul(const Common& c, const std::string& word_text, std::ostream& out) {
    auto o = c.quiver();
    ShuffleContext ctx(o);
    Word word = parse_word(word_text, o.rank());
    auto e = word_product(ctx, word);
    Report rep("shuffle-mul", c.config());
    rep.check("wheel", {{"word", word_str(word)}}, wheel_check(ctx, e));
    auto d = homogeneous_degree(ctx, e);
    rep.doc["result"] = {{"word", word_str(word)},
                         {"degree", vec_json(e.degree)},
                         {"homogeneous_degree", d ? json(*d) : json(nullptr)},
                         {"numerator", to_string(e.numerator)},
                         {"element", to_string(e.as_ratfunc(ctx))},
                         {"numerator_terms", to_json(e.numerator)}};
    emit(c, out, rep.finish());
    return rep.code();
}

int cmd_pairing(const Common& c, const std::string& element_text, const std::string& word_text, std::ostream& out) {
    auto o = c.quiver();
    ShuffleContext ctx(o);
    Word element = parse_word(element_text, o.rank());
    Word word = parse_word(word_text, o.rank());
    RatFunc value = pairing(ctx, word_product(ctx, element), word);
    Report rep("pairing", c.config());
    rep.doc["result"] = {{"element", word_str(element)}, {"word", word_str(word)}, {"value", to_string(value)}};
    emit(c, out, rep.finish());
    return rep.code();
}

int cmd_spec(const Common& c, const std::string& word_text, const std::string& v_text, const std::string& w_text,
             std::ostream& out) {
    auto o = c.quiver();
    ShuffleContext ctx(o);
    Word word = parse_word(word_text, o.rank());
    auto e = word_product(ctx, word);
    Report rep("spec", c.config());
    json result = {{"word", word_str(word)}, {"degree", vec_json(e.degree)}, {"spec", to_string(spec_map(ctx, e))}};
    if (v_text.empty() != w_text.empty()) throw ConfigError("--v and --w go together");
    if (!v_text.empty()) {
        RootVec v = to_vec(parse_int_list(v_text)), w = to_vec(parse_int_list(w_text));
        if (v.size() != o.rank() || w.size() != o.rank() || (v + w) != e.degree || v.minCoeff() < 0 ||
            w.minCoeff() < 0) {
            throw ConfigError("--v and --w must be nonnegative and sum to the degree of the word");
        }
        auto t = two_point(ctx, e, v, w);
        RatFunc direct = two_point_direct(ctx, e, v, w);
        json in = {{"word", word_str(word)}, {"v", vec_json(v)}, {"w", vec_json(w)}};
        rep.check("key_lemma", in, direct == t.value, {{"closed_form", to_string(t.value)}, {"direct", to_string(direct)}});
        auto rs = build_root_system(o.type);
        if (rs.is_root(v) && rs.is_root(w)) {
            auto ar = build_ar_quiver(o, rs);
            bool ok = true;
            try {
                pole_order_check(ctx, t, &ar);
            } catch (const BoundViolated&) {
                ok = false;
            }
            rep.check("pole_bounds", in, ok, {{"plus", t.order_plus}, {"minus", t.order_minus}});
        }
        result["two_point"] = {{"value", to_string(t.value)},
                               {"order_diagonal", t.order_diagonal},
                               {"order_plus", t.order_plus},
                               {"order_minus", t.order_minus}};
        if (t.order_diagonal <= 1) {
            result["two_point"]["residue"] = to_string(t.order_diagonal == 1 ? residue_on_diagonal(t.value) : RatFunc());
        }
    }
    rep.doc["result"] = result;
    emit(c, out, rep.finish());
    return rep.code();
}

int cmd_verify_fusion(const Common& c, int window, const std::string& degrees, std::optional<std::size_t> pair,
                      bool summary_only, std::ostream& out) {
    auto o = c.quiver();
    auto rs = build_root_system(o.type);
    FusionConfig cfg;
    cfg.window = window;
    std::tie(cfg.d_min, cfg.d_max) = parse_range(degrees);
    cfg.pair = pair;
    cfg.threads = c.workers();
    if (window < 0) throw ConfigError("window must be >= 0");
    FusionRun run;
    try {
        run = verify_fusion(o, cfg);
    } catch (const std::out_of_range& e) {
        throw ConfigError(e.what());
    }
    json config = c.config();
    config["window"] = window;
    config["degrees"] = {cfg.d_min, cfg.d_max};
    config["pair"] = pair ? json(*pair) : json(nullptr);
    Report rep("verify-fusion", config);
    json pairs = json::array();
    for (const auto& p : run.pairs) pairs.push_back(pair_json(rs, o, p));
    std::vector<std::size_t> per_pair(run.pairs.size()), bad_pair(run.pairs.size());
    for (const auto& r : run.records) {
        ++per_pair[r.pair_index];
        bad_pair[r.pair_index] += !r.report.pass();
        if (summary_only && r.report.pass()) continue;
        const auto& p = run.pairs[r.pair_index];
        rep.check("fusion",
                  {{"pair", r.pair_index},
                   {"alpha", vec_json(rs.root(p.alpha))},
                   {"beta", vec_json(rs.root(p.beta))},
                   {"degree", r.degree},
                   {"word", word_str(r.word)}},
                  r.report.pass(),
                  {{"no_shifted_poles", r.report.no_shifted_poles},
                   {"simple_diagonal", r.report.simple_diagonal},
                   {"residue_matches", r.report.residue_matches},
                   {"zeta_ok", r.report.zeta_ok},
                   {"residue", to_string(r.report.residue)},
                   {"spec", to_string(r.report.spec)}});
    }
    json totals = json::array();
    for (std::size_t p = 0; p < run.pairs.size(); ++p) {
        if (per_pair[p]) totals.push_back({{"pair", p}, {"elements", per_pair[p]}, {"failures", bad_pair[p]}});
    }
    rep.doc["result"] = {{"pairs", pairs}, {"per_pair", totals}, {"records", run.records.size()}, {"failures", run.failures}};
    emit(c, out, rep.finish());
    return run.failures == 0 ? rep.code() : kCheckFailed;
}

int cmd_paths_enumerate(const Common& c, const std::string& size_text, const std::string& bound_text,
                        std::ostream& out) {
    PathSize size = parse_size(size_text);
    Legs bound = parse_legs(bound_text);
    if (path_size(bound) != size) throw ConfigError("bound does not have the requested size");
    auto paths = enumerate_convex_above(size, bound);
    json list = json::array();
    for (const auto& p : paths) list.push_back(legs_json(p.legs));
    Report rep("paths enumerate", {{"size", {size.first, size.second}}, {"bound", to_string(bound)}});
    rep.doc["result"] = {{"count", paths.size()}, {"window_floor", convex_window_floor(size, bound)}, {"paths", list}};
    emit(c, out, rep.finish());
    return rep.code();
}

int cmd_paths_convexify(const Common& c, const std::string& legs_text, std::ostream& out) {
    Legs legs = parse_legs(legs_text);
    ConvexPath p = convexify(legs);
    Report rep("paths convexify", {{"legs", to_string(legs)}});
    rep.check("convexify_below", {{"legs", to_string(legs)}}, lies_below(p.legs, legs));
    rep.doc["result"] = {{"convex", is_convex(legs)},
                         {"convexified", legs_json(p.legs)},
                         {"area", area_between(p.legs, legs).str()}};
    emit(c, out, rep.finish());
    return rep.code();
}

int cmd_selftest(const Common& c, std::ostream& out) {
    auto o = c.quiver();
    auto rs = build_root_system(o.type);
    ShuffleContext ctx(o);
    Report rep("selftest", c.config());
    if (o.type == DynkinType{Family::A, 2} && o.str() == "1>2") a2_example(rep, ctx);

    for (const auto& oo : all_orientations(o.type)) {
        auto ar = build_ar_quiver(oo, rs);
        bool ok = true;
        for (const auto& p : minimal_pairs_all_refinements(ar)) {
            ok = ok && ar.euler(p.alpha, p.beta) == -1 && ar.euler(p.beta, p.alpha) == 0;
        }
        rep.check("lemma.minimal_pairs", {{"orientation", oo.str()}}, ok);
    }

    for (int a = 0; a < rs.size(); ++a) {
        for (int b = 0; b < rs.size(); ++b) {
            auto va = generic_indecomposable(o, rs.root(a), c.seed + static_cast<std::uint64_t>(a));
            auto vb = generic_indecomposable(o, rs.root(b), c.seed + static_cast<std::uint64_t>(b));
            auto he = hom_ext_dims(o, va, vb);
            int e = euler_form(o, rs.root(a), rs.root(b));
            rep.check("euler.hom_minus_ext", {{"v", vec_json(rs.root(a))}, {"w", vec_json(rs.root(b))}},
                      he.hom - he.ext == e && (he.hom == 0 || he.ext == 0),
                      {{"hom", he.hom}, {"ext", he.ext}, {"euler", e}});
        }
    }

    for (int i = 0; i < o.rank(); ++i) {
        for (int j = 0; j < o.rank(); ++j) {
            LaurentPoly s = LaurentPoly::q_half(-2 * ctx.cartan(i, j));
            bool ok = true;
            for (int a = -1; a <= 1; ++a) {
                for (int b = -1; b <= 1; ++b) {
                    auto lhs = s * word_product(ctx, {{i, a + 1}, {j, b}}) - word_product(ctx, {{i, a}, {j, b + 1}});
                    auto rhs = word_product(ctx, {{j, b}, {i, a + 1}}) - s * word_product(ctx, {{j, b + 1}, {i, a}});
                    ok = ok && lhs == rhs;
                }
            }
            rep.check("zeta_commutation", {{"i", i + 1}, {"j", j + 1}}, ok);
        }
    }

    FusionConfig cfg;
    cfg.window = 1;
    cfg.d_min = -1;
    cfg.d_max = 1;
    cfg.threads = c.workers();
    cfg.keep_values = false;
    auto run = verify_fusion(o, cfg);
    rep.check("fusion", {{"window", 1}, {"degrees", {-1, 1}}}, run.failures == 0,
              {{"records", run.records.size()}, {"failures", run.failures}});
    emit(c, out, rep.finish());
    return rep.code();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for fused currents of quantum loop groups"};
    app.name("qloop");
    app.require_subcommand(1);
    Common c;

    auto* roots = app.add_subcommand("roots", "positive roots and Cartan matrix");
    add_common(roots, c, false);

    std::string format = "json", dot_path;
    auto* arq = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver as JSON or DOT");
    add_common(arq, c);
    arq->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
    arq->add_option("--dot", dot_path, "also write DOT to this file");

    std::string order;
    auto* mp = app.add_subcommand("minimal-pairs", "minimal pairs of one or of all AR refinements");
    add_common(mp, c);
    mp->add_option("--order", order, "refinement as a comma list of root indices (default: all refinements)");

    std::string word, element;
    auto* sm = app.add_subcommand("shuffle-mul", "product of generators z_{i}^{d} in the shuffle algebra");
    add_common(sm, c);
    sm->add_option("--word", word, "letters color:degree, e.g. \"2:0,1:0\"")->required();

    auto* pr = app.add_subcommand("pairing", "pairing of a word product with a word of dual generators");
    add_common(pr, c);
    pr->add_option("--element", element, "word whose product is paired")->required();
    pr->add_option("--word", word, "dual word")->required();

    std::string v_text, w_text;
    auto* sp = app.add_subcommand("spec", "specialization map and two-point function of a word product");
    add_common(sp, c);
    sp->add_option("--word", word, "letters color:degree")->required();
    sp->add_option("--v", v_text, "x-part of the degree, e.g. \"1,0\"");
    sp->add_option("--w", w_text, "y-part of the degree");

    int window = 2;
    std::string degrees = "-2..2";
    std::optional<std::size_t> pair;
    bool summary_only = false;
    auto* vf = app.add_subcommand("verify-fusion", "residue identity over spanning sets for every minimal pair");
    add_common(vf, c);
    vf->add_option("--window", window, "exponent window")->capture_default_str();
    vf->add_option("--degrees", degrees, "homogeneous degrees a..b")->capture_default_str();
    vf->add_option("--pair", pair, "only this minimal pair index");
    vf->add_flag("--summary-only", summary_only, "list failing records only");

    std::string size_text, bound_text, legs_text;
    auto* paths = app.add_subcommand("paths", "convex lattice paths");
    paths->require_subcommand(1);
    auto* pe = paths->add_subcommand("enumerate", "convex paths not below a bound");
    add_common(pe, c, false);
    pe->add_option("--size", size_text, "X,Y")->required();
    pe->add_option("--bound", bound_text, "legs \"(dx,dy),...\"")->required();
    auto* pc = paths->add_subcommand("convexify", "convexification and enclosed area");
    add_common(pc, c, false);
    pc->add_option("--legs", legs_text, "legs \"(dx,dy),...\"")->required();

    auto* st = app.add_subcommand("selftest", "worked examples and quick structural checks");
    add_common(st, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kConfigError;
    }

    try {
        if (*roots) return cmd_roots(c, out);
        if (*arq) return cmd_ar_quiver(c, format, dot_path, out);
        if (*mp) return cmd_minimal_pairs(c, order, out);
        if (*sm) return cmd_shuffle_mul(c, word, out);
        if (*pr) return cmd_pairing(c, element, word, out);
        if (*sp) return cmd_spec(c, word, v_text, w_text, out);
        if (*vf) return cmd_verify_fusion(c, window, degrees, pair, summary_only, out);
        if (*pe) return cmd_paths_enumerate(c, size_text, bound_text, out);
        if (*pc) return cmd_paths_convexify(c, legs_text, out);
        if (*st) return cmd_selftest(c, out);
    } catch (const ConfigError& e) {
        err << "qloop: " << e.what() << '\n';
        return kConfigError;
    } catch (const MalformedWord& e) {
        err << "qloop: " << e.what() << '\n';
        return kConfigError;
    } catch (const SizeMismatch& e) {
        err << "qloop: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "qloop: check aborted: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kConfigError;
}

}  // namespace qloop::cli
