#include "ladic/cli/commands.hpp"

#include <random>
#include <sstream>

#include "ladic/cli/problem.hpp"
#include "ladic/core/error.hpp"
#include "ladic/core/faults.hpp"
#include "ladic/core/op_counter.hpp"
#include "ladic/core/text.hpp"
#include "ladic/formal/charts.hpp"
#include "ladic/formal/divisibility.hpp"
#include "ladic/mellin/limit.hpp"
#include "ladic/mellin/locus.hpp"
#include "ladic/tate/closure.hpp"
#include "ladic/tate/phi.hpp"
#include "ladic/tate/weil.hpp"

namespace ladic {

namespace {

struct Context {
    RingPtr ring;
    int degree = 1;
    std::uint64_t seed = 0;
    std::optional<int> level;
};

// key: value lines mirrored into the JSON data object
struct Out {
    TaskOutcome& t;

    void put(const std::string& key, const OrderedJson& v)
    {
        t.data[key] = v;
        t.lines.push_back(key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()));
    }
    void list(const std::string& key, const std::vector<std::string>& items)
    {
        t.data[key] = items;
        t.lines.push_back(key + ":");
        for (const auto& s : items) t.lines.push_back("  " + s);
    }
};

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::vector<std::string> split_lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

int int_key(const TaskBlock& t, const std::string& key, std::optional<int> fallback = std::nullopt)
{
    if (!t.has(key)) {
        require(fallback.has_value(), ErrorKind::MalformedInput, "task " + t.name + " needs " + key + "=");
        return *fallback;
    }
    return static_cast<int>(parse_int(t.get(key)));
}

int level_key(const TaskBlock& t, const Context& cx) { return int_key(t, "level", cx.level); }

TruncatedSeries series_named(const TaskBlock& t, const Context& cx, int vars, const std::string& name)
{
    require(t.series.count(name), ErrorKind::MalformedInput, "task " + t.name + " needs series " + name);
    return TruncatedSeries::parse(cx.ring, vars, cx.degree, t.series.at(name));
}

SigmaAction sigma_key(const TaskBlock& t, const Context& cx, int vars)
{
    require(t.has("sigma") != t.has("alpha"), ErrorKind::MalformedInput, "task " + t.name + " needs exactly one of sigma= and alpha=");
    SigmaAction s;
    if (t.has("alpha")) {
        std::vector<PadicScalar> a;
        for (const auto& item : split(t.get("alpha"), ',')) a.push_back(PadicScalar::parse_value(cx.ring, trim_copy(item)));
        bool ints = true;
        std::vector<i64> vals;
        for (const auto& x : a) {
            ints = ints && x.exact_integer() && *x.exact_integer() < (i128(1) << 40) && *x.exact_integer() > -(i128(1) << 40);
            if (ints) vals.push_back(static_cast<i64>(*x.exact_integer()));
        }
        s = ints ? SigmaAction::diag_integers(cx.ring, vals) : SigmaAction::diag(cx.ring, a);
    } else {
        std::vector<std::vector<PadicScalar>> m;
        for (const auto& row : parse_matrix_cells(t.get("sigma"))) {
            m.emplace_back();
            for (const auto& c : row) m.back().push_back(PadicScalar::parse_value(cx.ring, c));
        }
        s = SigmaAction::from_matrix(cx.ring, m);
    }
    require(s.dim() == vars, ErrorKind::DimensionMismatch, "sigma size differs from vars");
    return s;
}

MonodromyData monodromy_key(const TaskBlock& t, const Context& cx)
{
    std::string text;
    for (const auto& [k, v] : t.keys) {
        if (!(k == "rank" || k == "zeta" || k == "b" || k == "quotient" || (k.size() > 1 && k[0] == 'M'))) continue;
        require(v.find(';') == std::string::npos, ErrorKind::MalformedInput, "write monodromy matrices as [[..],[..]] in key " + k);
        text += k + "=" + v + "; ";
    }
    return MonodromyData::parse(cx.ring->prime(), text);
}

std::vector<std::string> ids(const std::vector<TorsionLabel>& v)
{
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.id());
    return out;
}

bool verdict(Out& o, bool ok)
{
    o.t.verdict = ok ? "true" : "false";
    o.t.exit = ok ? 0 : 1;
    return ok;
}

std::string scalar_text(const PadicScalar& x)
{
    std::string s = x.serialize();
    const RingParams& R = *x.ring();
    if (R.kind() == ExtensionKind::trivial && !x.is_zero() && x.val_units() >= 0) {
        const int a = x.abs_precision();
        if (auto m = checked_pow(R.prime(), a)) s += " = " + std::to_string(mod(x.rep()[0], *m)) + " mod " + std::to_string(R.prime()) + "^" + std::to_string(a);
    }
    return s;
}

// --- tasks ---------------------------------------------------------------

void task_unit_cert(const TaskBlock& t, const Context& cx, Out& o)
{
    const int b = int_key(t, "vars", 1);
    const auto g = series_named(t, cx, b, "g");
    const auto s = sigma_key(t, cx, b);
    const int steps = int_key(t, "max_steps", static_cast<int>(monomials(b, 1, cx.degree).size()));
    const auto cert = certify_unit_ideal(g, s, steps);
    o.list("certificate", split_lines(cert.serialize()));
    o.put("steps", static_cast<int>(cert.steps.size()));
    o.put("total_loss", cert.total_loss);
    o.put("residual", cert.residual);
    o.put("diagonalized", cert.diagonalized);
    const auto fin = replay_certificate(g, s, cert);
    bool one = fin.constant_term().equals_at_precision(PadicScalar::from_int(cx.ring, 1));
    for (const auto& [n, c] : fin.terms())
        if (total_degree(n) > 0) one = one && c.is_zero() && (c.is_exact_zero() || c.abs_precision() >= cert.residual);
    o.put("replay", one ? "1 modulo the residual precision" : "does not reduce to 1");
    verdict(o, one);
}

void task_grade_check(const TaskBlock& t, const Context& cx, Out& o)
{
    const int b = int_key(t, "vars", 1);
    const int n = int_key(t, "n");
    std::vector<TruncatedSeries> gens;
    for (const auto& name : t.series_names) gens.push_back(series_named(t, cx, b, name));
    require(!gens.empty(), ErrorKind::MalformedInput, "grade-check needs at least one series");
    const auto rep = graded_closure_check(gens, sigma_key(t, cx, b), n);
    o.put("exact", rep.exact);
    o.put("input_rank", rep.input_rank);
    o.put("input_stable", rep.input_stable);
    o.put("dimension", rep.dimension);
    o.put("closure_stable", rep.closure_stable);
    o.put("graded", rep.graded);
    o.put("graded_dims", format_dims(rep.graded_dims));
    if (!rep.basis.empty()) o.list("basis", rep.basis);
    verdict(o, rep.graded && rep.closure_stable);
}

void task_weil(const TaskBlock& t, const Context&, Out& o)
{
    require(t.has("charpoly") != t.has("sigma"), ErrorKind::MalformedInput, "weil-check needs exactly one of charpoly= and sigma=");
    std::vector<i64> cp;
    if (t.has("charpoly")) cp = parse_int_list(t.get("charpoly"), ',');
    else {
        std::vector<std::vector<i64>> m;
        for (const auto& row : parse_matrix_cells(t.get("sigma"))) {
            m.emplace_back();
            for (const auto& c : row) m.back().push_back(parse_int(c));
        }
        for (const auto& row : m) require(row.size() == m.size(), ErrorKind::DimensionMismatch, "sigma must be square");
        cp = integer_charpoly(m);
    }
    std::vector<std::string> coeffs;
    for (i64 c : cp) coeffs.push_back(std::to_string(c));
    const auto rep = weil_condition_check(cp);
    o.put("charpoly", join(coeffs, ","));
    o.put("squarefree_degree", rep.degree);
    o.put("modulus", rep.modulus);
    o.put("same_modulus", rep.same_modulus);
    o.put("modulus_is_one", rep.modulus_is_one);
    o.put("reason", rep.reason);
    o.put("condition", to_string(rep.verdict));
    if (rep.verdict == Verdict::inconclusive) {
        o.t.verdict = "undecided";
        o.t.exit = 3;
        return;
    }
    verdict(o, rep.verdict == Verdict::pass);
}

void task_explog(const TaskBlock& t, const Context& cx, Out& o)
{
    const std::string dir = t.get_or("direction", "exp");
    require(dir == "exp" || dir == "log", ErrorKind::MalformedInput, "direction must be exp or log");
    const Rational radius = t.has("radius") ? parse_rational(t.get("radius")) : Rational(cx.ring->prime() == 2 ? 2 : 1);
    std::vector<PadicScalar> in;
    for (const auto& item : split(t.get("coords"), ',')) in.push_back(PadicScalar::parse_value(cx.ring, trim_copy(item)));
    std::vector<PadicScalar> out, back;
    if (dir == "exp") {
        out = exp_chart({in, radius});
        back = log_chart(out, radius);
    } else {
        out = log_chart(in, radius);
        back = exp_chart({out, radius});
    }
    std::vector<std::string> shown;
    for (const auto& x : out) shown.push_back(scalar_text(x));
    o.put("radius", to_string(radius));
    o.list(dir == "exp" ? "X = exp(T) - 1" : "T = log(1 + X)", shown);
    bool round = true;
    for (size_t i = 0; i < in.size(); ++i) round = round && back[i].equals_at_precision(in[i]);
    o.put("round_trip", round);
    verdict(o, round);
}

void task_group_law(const TaskBlock& t, const Context& cx, Out& o)
{
    const int b = int_key(t, "vars", 1);
    const int D = cx.degree;
    const auto& R = cx.ring;
    const auto g = series_named(t, cx, b, "g");
    const auto dg = comultiply(g);
    std::vector<TruncatedSeries> counit;
    for (int i = 0; i < b; ++i) counit.push_back(TruncatedSeries::variable(R, b, D, i));
    for (int i = 0; i < b; ++i) counit.push_back(TruncatedSeries(R, b, D));
    const bool cu = dg.substitute(counit) == g;
    auto law = [&](int x, int y) {
        const auto a = TruncatedSeries::variable(R, 3 * b, D, x), c = TruncatedSeries::variable(R, 3 * b, D, y);
        return a + c + a * c;
    };
    std::vector<TruncatedSeries> left, right;
    for (int i = 0; i < b; ++i) {
        left.push_back(law(i, b + i));
        right.push_back(TruncatedSeries::variable(R, 3 * b, D, i));
    }
    for (int i = 0; i < b; ++i) {
        left.push_back(TruncatedSeries::variable(R, 3 * b, D, 2 * b + i));
        right.push_back(law(b + i, 2 * b + i));
    }
    const bool co = dg.substitute(left) == dg.substitute(right);
    bool iso = true;
    for (int a = 0; a <= 2; ++a)
        for (int c = 0; c <= 2; ++c) iso = iso && ell_power_isogeny(ell_power_isogeny(g, c), a) == ell_power_isogeny(g, a + c);
    const auto tw = inversion_twist(g);
    const bool inv = inversion_twist(tw) == g && tw.constant_term() == g.constant_term();
    o.put("counit", cu);
    o.put("coassociativity", co);
    o.put("isogeny_composition", iso);
    o.put("twist_involution", inv);
    o.list("comultiply", split_lines(dg.serialize()));
    verdict(o, cu && co && iso && inv);
}

void task_torsion(const TaskBlock& t, const Context& cx, Out& o)
{
    const int b = int_key(t, "vars", 1);
    const int n = level_key(t, cx);
    const std::string mode = t.get_or("mode", "points");
    const i64 l = cx.ring->prime();
    const int e = n == 0 ? 1 : static_cast<int>((l - 1) * ipow(l, n - 1));
    const auto F = RingParams::cyclotomic(l, n, cx.ring->precision() * e);
    const auto pts = torsion_points(F, n, b);
    if (mode == "points") {
        std::vector<std::string> shown;
        for (const auto& chi : pts) shown.push_back(chi.label->id() + " " + chi.serialize());
        o.put("count", static_cast<int>(pts.size()));
        o.list("points", shown);
        verdict(o, true);
        return;
    }
    auto vanishes = [&](const TruncatedSeries& g) {
        for (const auto& chi : pts)
            if (!evaluate_at_character(g, chi).is_zero()) return false;
        return true;
    };
    if (mode == "membership") {
        const auto g = series_named(t, cx, b, "g");
        const bool member = torsion_ideal_membership(g, n);
        const bool zero = vanishes(g);
        o.put("member", member);
        o.put("vanishes_at_all_points", zero);
        require(member == zero, ErrorKind::Inconclusive, "membership and vanishing disagree");
        verdict(o, member);
        return;
    }
    require(mode == "density", ErrorKind::MalformedInput, "mode must be points, membership or density");
    const int count = int_key(t, "count", 20);
    std::mt19937_64 rng(cx.seed);
    std::uniform_int_distribution<int> coin(0, 2), coeff(-9, 9);
    const auto f = torsion_generator(cx.ring, n);
    int agree = 0, members = 0;
    for (int it = 0; it < count; ++it) {
        TruncatedSeries g(cx.ring, b, cx.degree);
        for (const auto& m : monomials(b, 0, cx.degree))
            if (coin(rng) == 0) g.set(m, PadicScalar::from_int(cx.ring, coeff(rng)));
        if (it % 2 == 0 && static_cast<int>(f.size()) - 1 <= cx.degree) {
            // a member: f_n(X_1) times a random cofactor
            TruncatedSeries fi(cx.ring, b, cx.degree);
            for (size_t r = 1; r < f.size(); ++r) {
                Exponent ex(b, 0);
                ex[0] = static_cast<int>(r);
                fi.set(ex, f[r]);
            }
            TruncatedSeries h(cx.ring, b, cx.degree);
            for (const auto& m : monomials(b, 0, cx.degree - static_cast<int>(f.size() - 1)))
                if (coin(rng) == 0) h.set(m, PadicScalar::from_int(cx.ring, coeff(rng)));
            g = fi * h;
        }
        const bool member = torsion_ideal_membership(g, n);
        members += member;
        agree += member == vanishes(g);
    }
    o.put("elements", count);
    o.put("members", members);
    o.put("agreeing", agree);
    verdict(o, agree == count);
}

void task_divisibility(const TaskBlock& t, const Context& cx, Out& o)
{
    const i64 l = cx.ring->prime();
    const int m = int_key(t, "m"), n = int_key(t, "n");
    require(1 <= m && m <= n, ErrorKind::MalformedInput, "need 1 <= m <= n");
    const auto rep = prosystem_divisibility_check(l, m, n);
    bool identity = true;
    for (i64 r = 1; r <= ipow(l, n); ++r) identity = identity && binom_valuation(l, n, r) == n - ord(l, r);
    o.put("threshold", rep.threshold);
    o.put("lowest_surviving", rep.lowest_surviving);
    o.put("divisible", rep.holds);
    o.put("binom_identity", identity);
    verdict(o, rep.holds && identity);
}

void task_mellin(const TaskBlock& t, const Context& cx, Out& o)
{
    const auto K = build_mellin_complex(monodromy_key(t, cx));
    const int n = level_key(t, cx);
    std::vector<int> dims;
    for (int p = 0; p <= K.directions(); ++p) dims.push_back(K.dim(p));
    o.put("complex", format_dims(dims));
    o.put("square_zero", K.square_zero());
    const auto gen = generic_dims(K);
    o.put("generic", format_dims(gen));
    bool agree = true, euler = true;
    std::vector<std::string> fibers;
    for (const auto& chi : torsion_labels(K.data().prime, K.group_rank(), n)) {
        const auto a = fiber_dims(K, chi), b = fiber_dims_group_ring(K, chi);
        agree = agree && a == b;
        euler = euler && euler_characteristic(a) == euler_characteristic(gen);
        fibers.push_back(chi.id() + ": " + format_dims(a) + (a == b ? "" : " group-ring " + format_dims(b)));
    }
    o.list("fibers", fibers);
    o.put("routes_agree", agree);
    o.put("euler", euler_characteristic(gen));
    o.put("euler_consistent", euler);
    bool limit = true;
    if (t.has("limit_levels")) {
        const auto rep = finite_level_limit_check(K.data(), int_key(t, "limit_degree", cx.degree), int_key(t, "limit_levels"));
        o.list("limit", split_lines(rep.text()));
        limit = rep.holds;
    }
    verdict(o, agree && euler && limit);
}

void task_jump(const TaskBlock& t, const Context& cx, Out& o)
{
    const auto K = build_mellin_complex(monodromy_key(t, cx));
    const auto rep = jumping_locus(K, int_key(t, "i"), int_key(t, "j"), level_key(t, cx));
    o.put("characters", rep.characters);
    o.list("locus", ids(rep.points));
    o.put("generic", format_dims(rep.generic));
    o.put("euler", rep.euler);
    o.put("euler_consistent", rep.euler_consistent);
    o.put("block", rep.block());
    verdict(o, true);
}

void task_verify_qlin(const TaskBlock& t, const Context& cx, Out& o)
{
    const auto K = build_mellin_complex(monodromy_key(t, cx));
    const int b = K.group_rank();
    QuasiLinearSet S(K.data().prime, b);
    for (const auto& [k, v] : t.keys) {
        if (!starts_with(k, "component")) continue;
        // <label> : (c1,..,cb) (c1,..,cb) ..
        const auto colon = v.find(':');
        require(colon != std::string::npos, ErrorKind::MalformedInput, k + " must read <label> : <columns>");
        QuasiLinearComponent c;
        c.shift = TorsionLabel::parse(v.substr(0, colon));
        c.lattice.assign(b, {});
        std::string cols = trim_copy(v.substr(colon + 1));
        while (!cols.empty()) {
            require(cols.front() == '(', ErrorKind::MalformedInput, "lattice columns are written (c1,..,cb)");
            const auto close = cols.find(')');
            require(close != std::string::npos, ErrorKind::MalformedInput, "unclosed lattice column");
            const auto col = parse_int_list(cols.substr(1, close - 1), ',');
            require(static_cast<int>(col.size()) == b, ErrorKind::DimensionMismatch, "lattice column has the wrong length");
            for (int i = 0; i < b; ++i) c.lattice[i].push_back(col[i]);
            cols = trim_copy(cols.substr(close + 1));
        }
        S.add(c);
    }
    require(!S.components().empty(), ErrorKind::MalformedInput, "verify-qlin needs component<k>= lines");
    const auto rep = jumping_locus(K, int_key(t, "i"), int_key(t, "j"), level_key(t, cx));
    const auto v = verify_quasilinear(rep, S);
    o.list("set", split_lines(S.serialize()));
    o.list("locus", ids(rep.points));
    o.list("missing", ids(v.missing));
    o.list("extra", ids(v.extra));
    verdict(o, v.holds);
}

void task_twist(const TaskBlock& t, const Context& cx, Out& o)
{
    const int b = int_key(t, "vars", 1);
    const auto g = series_named(t, cx, b, "g");
    const auto tw = inversion_twist(g);
    o.list("twist", split_lines(tw.serialize()));
    const bool ok = inversion_twist(tw) == g && tw.constant_term() == g.constant_term();
    o.put("involution", ok);
    verdict(o, ok);
}

using TaskFn = void (*)(const TaskBlock&, const Context&, Out&);

const std::map<std::string, TaskFn>& handlers()
{
    static const std::map<std::string, TaskFn> h = {
        {"unit-cert", task_unit_cert}, {"grade-check", task_grade_check}, {"weil-check", task_weil},
        {"explog", task_explog},       {"group-law-check", task_group_law}, {"torsion", task_torsion},
        {"divisibility", task_divisibility}, {"mellin", task_mellin},   {"jump", task_jump},
        {"verify-qlin", task_verify_qlin},   {"twist", task_twist},
    };
    return h;
}

Context make_context(const ProblemFile& pf, const RunOptions& opts, Report& rep)
{
    auto h = pf.header;
    if (opts.prime) h["prime"] = std::to_string(*opts.prime);
    if (opts.precision) h["precision"] = std::to_string(*opts.precision);
    if (opts.degree) h["degree"] = std::to_string(*opts.degree);
    if (opts.seed) h["seed"] = std::to_string(*opts.seed);
    if (opts.ext_poly) {
        const auto colon = opts.ext_poly->find(':');
        require(colon != std::string::npos, ErrorKind::MalformedInput, "--ext-poly takes <kind>:<c0,c1,..>");
        h["kind"] = opts.ext_poly->substr(0, colon);
        h["poly"] = opts.ext_poly->substr(colon + 1);
    }
    require(h.count("prime") && h.count("precision") && h.count("degree"), ErrorKind::MalformedInput, "header needs prime, precision and degree");
    std::string ring = "prime=" + h["prime"] + "; precision=" + h["precision"];
    if (h.count("kind")) ring += "; kind=" + h["kind"];
    if (h.count("poly")) ring += "; poly=" + h["poly"];
    Context cx;
    cx.ring = RingParams::parse_header(ring);
    cx.degree = static_cast<int>(parse_int(h["degree"]));
    require(cx.degree >= 1, ErrorKind::MalformedInput, "degree must be >= 1");
    cx.seed = h.count("seed") ? static_cast<std::uint64_t>(parse_int(h["seed"])) : 0;
    cx.level = opts.level;
    rep.config["ring"] = cx.ring->header();
    rep.config["degree"] = cx.degree;
    rep.config["seed"] = cx.seed;
    if (cx.level) rep.config["level"] = *cx.level;
    return cx;
}

} // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v = task_names();
        v.push_back("selftest");
        return v;
    }();
    return names;
}

Report run_command(const std::string& command, const std::optional<std::string>& problem_text, const RunOptions& opts)
{
    Report rep;
    rep.command = command;
    set_fault(parse_fault(opts.mutate));
    reset_op_count();
    if (command == "selftest") {
        require(opts.profile == "quick" || opts.profile == "full", ErrorKind::MalformedInput, "profile must be quick or full");
        SelftestOptions so;
        so.full = opts.profile == "full";
        so.precision = opts.precision;
        so.seed = opts.seed.value_or(1);
        rep.config["profile"] = opts.profile;
        if (so.precision) rep.config["precision"] = *so.precision;
        rep.config["seed"] = so.seed;
        rep.config["mutate"] = opts.mutate;
        rep.suites = run_selftest(so);
        rep.exit = selftest_exit_code(rep.suites);
        rep.ops = op_count();
        return rep;
    }
    require(handlers().count(command), ErrorKind::MalformedInput, "unknown command " + command);
    require(problem_text.has_value(), ErrorKind::MalformedInput, command + " needs a problem file");
    const ProblemFile pf = ProblemFile::parse(*problem_text);
    const Context cx = make_context(pf, opts, rep);
    rep.config["mutate"] = opts.mutate;
    int index = 0;
    for (const auto& block : pf.tasks) {
        if (block.name != command) continue;
        TaskOutcome t;
        t.task = block.name;
        t.index = ++index;
        Out o{t};
        try {
            handlers().at(command)(block, cx, o);
        } catch (const Error& e) {
            const bool precision = is_precision_kind(e.kind());
            t.verdict = precision ? "undecided" : "error";
            t.exit = precision ? 3 : 2;
            t.data["error"] = e.what();
            t.lines.push_back(std::string("error: ") + e.what());
        }
        rep.tasks.push_back(std::move(t));
    }
    require(index > 0, ErrorKind::MalformedInput, "problem file has no [task " + command + "] block");
    bool malformed = false, falsified = false, undecided = false;
    for (const auto& t : rep.tasks) {
        malformed = malformed || t.exit == 2;
        falsified = falsified || t.exit == 1;
        undecided = undecided || t.exit == 3;
    }
    rep.exit = malformed ? 2 : falsified ? 1 : undecided ? 3 : 0;
    rep.ops = op_count();
    return rep;
}

std::string Report::text() const
{
    std::string s = "ladic " + command + "\n";
    for (const auto& [k, v] : config.items()) s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    for (const auto& t : tasks) {
        s += "[task " + t.task + " #" + std::to_string(t.index) + "]\n";
        for (const auto& l : t.lines) s += l + "\n";
        s += "verdict: " + t.verdict + "\n";
        s += "exit: " + std::to_string(t.exit) + "\n";
    }
    for (const auto& r : suites) {
        s += "suite " + std::to_string(r.criterion) + " " + r.name + ": " + to_string(r.status) + " checks=" + std::to_string(r.checks);
        if (!r.detail.empty()) s += " (" + r.detail + ")";
        s += "\n";
    }
    s += "ops: " + std::to_string(ops) + "\n";
    s += "exit: " + std::to_string(exit) + "\n";
    return s;
}

OrderedJson Report::json() const
{
    OrderedJson j;
    j["command"] = command;
    j["config"] = config;
    j["tasks"] = OrderedJson::array();
    for (const auto& t : tasks) {
        OrderedJson x;
        x["task"] = t.task;
        x["index"] = t.index;
        x["verdict"] = t.verdict;
        x["exit"] = t.exit;
        x["data"] = t.data;
        j["tasks"].push_back(x);
    }
    if (!suites.empty()) {
        j["suites"] = OrderedJson::array();
        for (const auto& r : suites)
            j["suites"].push_back({{"criterion", r.criterion}, {"name", r.name}, {"status", to_string(r.status)}, {"checks", r.checks}, {"detail", r.detail}});
    }
    j["ops"] = ops;
    j["exit"] = exit;
    return j;
}

} // namespace ladic
