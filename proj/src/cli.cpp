#include "recurlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "recurlab/analytic.hpp"
#include "recurlab/discrete.hpp"
#include "recurlab/error.hpp"
#include "recurlab/identities.hpp"
#include "recurlab/recovery.hpp"
#include "recurlab/sequence.hpp"

namespace recurlab {

namespace {

using ordered_json = nlohmann::ordered_json;

// Floats are rendered to 7 significant digits everywhere; exact integers and
// rationals are rendered as full decimal strings. Keeping both as JSON
// strings makes every format deterministic and the json output round-trip
// byte-identical (no lossy number re-parsing).
std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.7g", x);
    return buf;
}

enum class Format { table, csv, json };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw invalid_input_error("unknown output format '" + s + "'");
}

struct Document {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json results = ordered_json::array();
    ordered_json summary = ordered_json::object();
};

std::string cell_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string cell_text(const ordered_json& row, const std::string& key) {
    auto it = row.find(key);
    return it == row.end() ? std::string() : cell_text(*it);
}

// column order: union of row keys, in first-seen order (rows may differ)
std::vector<std::string> columns(const ordered_json& results) {
    std::vector<std::string> cols;
    for (const auto& row : results)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
                cols.push_back(it.key());
    return cols;
}

void render_table(const Document& doc, std::ostream& out) {
    if (!doc.results.empty()) {
        std::vector<std::string> cols = columns(doc.results);
        std::vector<size_t> width(cols.size());
        for (size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
        for (const auto& row : doc.results)
            for (size_t c = 0; c < cols.size(); ++c)
                width[c] = std::max(width[c], cell_text(row, cols[c]).size());
        auto line = [&](auto&& get) {
            for (size_t c = 0; c < cols.size(); ++c) {
                out << std::left << std::setw(static_cast<int>(width[c])) << get(c);
                out << (c + 1 < cols.size() ? "  " : "");
            }
            out << '\n';
        };
        line([&](size_t c) { return cols[c]; });
        for (const auto& row : doc.results)
            line([&](size_t c) { return cell_text(row, cols[c]); });
    } else {
        out << "(no rows)\n";
    }
    for (auto it = doc.summary.begin(); it != doc.summary.end(); ++it)
        out << it.key() << " = " << cell_text(it.value()) << '\n';
}

void render_csv(const Document& doc, std::ostream& out) {
    if (doc.results.empty()) return;
    std::vector<std::string> cols = columns(doc.results);
    for (size_t c = 0; c < cols.size(); ++c) out << cols[c] << (c + 1 < cols.size() ? "," : "");
    out << '\n';
    for (const auto& row : doc.results) {
        for (size_t c = 0; c < cols.size(); ++c)
            out << cell_text(row, cols[c]) << (c + 1 < cols.size() ? "," : "");
        out << '\n';
    }
}

void render(const Document& doc, Format fmt, std::ostream& out) {
    if (fmt == Format::json) {
        ordered_json j;
        j["command"] = doc.command;
        j["inputs"] = doc.inputs;
        j["results"] = doc.results;
        if (!doc.summary.empty()) j["summary"] = doc.summary;
        out << j.dump(2) << '\n';
        return;
    }
    if (fmt == Format::csv) {
        render_csv(doc, out);
        return;
    }
    render_table(doc, out);
}

// ---- flag parsing helpers ----

std::pair<long long, long long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw invalid_input_error("range must look like A..B, got '" + s + "'");
    try {
        long long a = std::stoll(s.substr(0, dots));
        long long b = std::stoll(s.substr(dots + 2));
        return {a, b};
    } catch (const std::exception&) {
        throw invalid_input_error("range must look like A..B, got '" + s + "'");
    }
}

Rat parse_exact(const std::string& s) {
    try {
        if (s.find('/') != std::string::npos) {
            Rat r(s);  // gmp accepts "p/q"
            r.canonicalize();
            return r;
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            // finite decimal -> exact rational
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            Int den(1);
            for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            Rat out(Int(digits), den);
            out.canonicalize();
            return out;
        }
        return Rat(Int(s));
    } catch (const std::exception&) {
        throw invalid_input_error("cannot parse exact number '" + s + "'");
    }
}

std::vector<Observation> parse_points(const std::string& s) {
    std::vector<Observation> obs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw invalid_input_error("points must look like idx:val[,idx:val...], got '" + item +
                                      "'");
        Observation o;
        try {
            o.index = std::stoll(item.substr(0, colon));
        } catch (const std::exception&) {
            throw invalid_input_error("bad observation index in '" + item + "'");
        }
        o.value = parse_exact(item.substr(colon + 1));
        obs.push_back(std::move(o));
    }
    if (obs.empty()) throw invalid_input_error("no observations given");
    return obs;
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw invalid_input_error("bad integer list entry '" + item + "'");
        }
    }
    return out;
}

std::string relation_text(Relation r) {
    switch (r) {
        case Relation::eq: return "=";
        case Relation::lt: return "<";
        case Relation::gt: return ">";
    }
    return "?";
}

// ---- subcommand handlers; each fills a Document and returns the exit code ----

int cmd_seq(const std::string& fam_s, std::optional<long long> from, std::optional<long long> to,
            bool closed_form, Document& doc) {
    Family fam = family_from_letter(fam_s);
    long long lo = from.value_or(fam == Family::fibonacci ? -6 : -16);
    long long hi = to.value_or(fam == Family::fibonacci ? 6 : 13);
    doc.command = "seq";
    doc.inputs = {{"family", std::string(1, family_letter(fam))}, {"from", lo}, {"to", hi}};
    auto values = term_range(fam, lo, hi);
    for (size_t k = 0; k < values.size(); ++k) {
        long long n = lo + static_cast<long long>(k);
        ordered_json row;
        row["n"] = n;
        row["value"] = to_decimal(values[k]);
        if (closed_form) {
            double cf = closed_form_term(fam, n);
            row["closed_form"] = fmt_double(cf);
            row["round_matches"] = (Int(static_cast<long>(std::llround(cf))) == values[k]);
        }
        doc.results.push_back(row);
    }
    doc.summary["count"] = values.size();
    return 0;
}

int cmd_identity(const std::string& name, std::optional<std::string> range_s, Document& doc) {
    doc.command = "identity";
    bool is_equality = false;
    for (const auto& id : equality_registry())
        if (id.name == name) is_equality = true;

    long long lo, hi;
    if (is_equality) {
        std::tie(lo, hi) = range_s ? parse_range(*range_s) : std::make_pair(-200LL, 200LL);
        doc.inputs = {{"name", name}, {"from", lo}, {"to", hi}};
        auto bad = identity_scan(name, lo, hi);
        for (long long n : bad) {
            auto rep = check_identity(name, n);
            doc.results.push_back({{"n", n},
                                   {"lhs", to_decimal(rep.lhs)},
                                   {"rhs", to_decimal(rep.rhs)},
                                   {"relation", relation_text(rep.relation)}});
        }
        doc.summary["scanned"] = hi - lo + 1;
        doc.summary["counterexamples"] = bad.size();
        return bad.empty() ? 0 : 2;
    }
    const InequalityFamily& fam = inequality_family(name);  // throws if unknown
    std::tie(lo, hi) =
        range_s ? parse_range(*range_s) : std::make_pair(fam.default_from, fam.default_to);
    doc.inputs = {{"name", name}, {"from", lo}, {"to", hi}};
    auto bad = inequality_scan(name, lo, hi);
    for (long long n : bad) doc.results.push_back({{"n", n}});
    doc.summary["scanned"] = hi - lo + 1;
    doc.summary["counterexamples"] = bad.size();
    return bad.empty() ? 0 : 2;
}

DeltaFamily delta_family_from_letter(const std::string& s) {
    Family f = family_from_letter(s);
    if (f == Family::narayana) return DeltaFamily::narayana;
    if (f == Family::padovan) return DeltaFamily::padovan;
    throw invalid_input_error("delta determinants exist for families E and D only");
}

int cmd_delta(const std::string& fam_s, long long i, long long j, const std::string& witnesses_s,
              Document& doc) {
    DeltaFamily fam = delta_family_from_letter(fam_s);
    auto witnesses = parse_int_list(witnesses_s);
    doc.command = "delta";
    doc.inputs = {{"family", fam_s}, {"i", i}, {"j", j}, {"witnesses", witnesses}};
    DeltaReport rep = delta_ij(fam, i, j, witnesses);
    doc.results.push_back({{"i", i},
                           {"j", j},
                           {"value", to_decimal(rep.value)},
                           {"witness_independent", rep.witness_independent},
                           {"matches_closed_form", rep.matches_closed_form}});
    return rep.witness_independent && rep.matches_closed_form ? 0 : 2;
}

int cmd_delta_table(const std::string& fam_s, long long imax, long long jmax, Document& doc) {
    DeltaFamily fam = delta_family_from_letter(fam_s);
    if (imax < 1 || jmax < 1) throw invalid_input_error("imax and jmax must be >= 1");
    doc.command = "delta-table";
    doc.inputs = {{"family", fam_s}, {"imax", imax}, {"jmax", jmax}};
    for (long long i = 1; i <= imax; ++i) {
        ordered_json row;
        row["i"] = i;
        for (long long j = 1; j <= jmax; ++j)
            row["j" + std::to_string(j)] = to_decimal(delta_closed_form(fam, i, j));
        doc.results.push_back(row);
    }
    return 0;
}

int cmd_recover(const std::string& fam_s, const std::string& points, Document& doc) {
    Family fam = family_from_letter(fam_s);
    auto obs = parse_points(points);
    doc.command = "recover";
    ordered_json in_points = ordered_json::array();
    for (const auto& o : obs)
        in_points.push_back({{"index", o.index}, {"value", to_decimal(o.value)}});
    doc.inputs = {{"family", fam_s}, {"points", in_points}};

    RecoveryResult res;
    switch (fam) {
        case Family::fibonacci: res = recover_f(obs); break;
        case Family::narayana: res = recover_e(obs); break;
        case Family::padovan: res = recover_d(obs); break;
    }
    ordered_json row;
    row["status"] = res.status == RecoveryStatus::solved ? "solved" : "singular";
    if (res.status == RecoveryStatus::solved) {
        const char* names[] = {"a", "b", "c"};
        for (size_t k = 0; k < res.coefficients.size(); ++k)
            row[names[k]] = to_decimal(res.coefficients[k]);
    }
    row["denominator"] = to_decimal(res.denominator);
    if (res.status == RecoveryStatus::singular) row["dependency"] = res.dependency_note;
    doc.results.push_back(row);
    if (res.status == RecoveryStatus::singular) {
        doc.summary["dependency"] = res.dependency_note;
        return 2;
    }
    return 0;
}

CharPoly poly_from_cli(const std::string& name, std::optional<int> param) {
    if (name == "golden") return CharPoly::golden();
    if (name == "narayana") return CharPoly::narayana();
    if (name == "plastic") return CharPoly::plastic();
    if (name == "general-n") {
        if (!param) throw invalid_input_error("general-n needs a composition count N");
        return CharPoly::nfold(*param);
    }
    if (name == "general-m") {
        if (!param) throw invalid_input_error("general-m needs a root order M");
        return CharPoly::root_order(*param);
    }
    throw invalid_input_error("unknown polynomial family '" + name + "'");
}

int cmd_roots(const std::string& name, std::optional<int> param, Document& doc) {
    CharPoly poly = poly_from_cli(name, param);
    RootSet roots = char_roots(poly);
    doc.command = "roots";
    doc.inputs = {{"family", name}};
    if (param) doc.inputs["param"] = *param;
    doc.inputs["polynomial"] = poly.name;
    for (double r : roots.real_roots)
        doc.results.push_back({{"kind", "real"},
                               {"value", fmt_double(r)},
                               {"modulus", fmt_double(std::fabs(r))}});
    if (roots.complex_pair) {
        auto p = *roots.complex_pair;
        doc.results.push_back({{"kind", "complex_pair"},
                               {"value", fmt_double(p.real()) + " +- " + fmt_double(p.imag()) + "i"},
                               {"modulus", fmt_double(std::abs(p))}});
    }
    doc.summary["dominant"] = fmt_double(roots.dominant);
    doc.summary["residual"] = fmt_double(roots.dominant_residual);
    return 0;
}

int cmd_constants(const std::string& fam_s, Document& doc) {
    Family fam = family_from_letter(fam_s);
    ClosedFormConstants k = closed_form_constants(fam);
    doc.command = "constants";
    doc.inputs = {{"family", fam_s}};
    ordered_json row;
    row["dominant_root"] = fmt_double(k.dominant_root);
    if (fam == Family::fibonacci) {
        row["second_real"] = fmt_double(k.second_real);
    } else {
        row["rho"] = fmt_double(k.rho);
        row["zeta"] = fmt_double(k.zeta);
    }
    row["c1"] = fmt_double(k.c1);
    row["c2"] = fmt_double(k.c2);
    if (fam != Family::fibonacci) row["c3"] = fmt_double(k.c3);
    row["anchor_residual"] = fmt_double(k.anchor_residual);
    doc.results.push_back(row);
    return 0;
}

int cmd_cm_table(int mmax, Document& doc) {
    doc.command = "cm-table";
    doc.inputs = {{"mmax", mmax}};
    for (const auto& e : c_m_table(mmax))
        doc.results.push_back({{"m", e.m},
                               {"c_m", fmt_double(e.value)},
                               {"sign", e.sign > 0 ? "+" : "-"},
                               {"stable", e.stable}});
    return 0;
}

int cmd_limits(const std::string& fam_s, int tail, Document& doc) {
    Family fam = family_from_letter(fam_s);
    doc.command = "limits";
    doc.inputs = {{"family", fam_s}, {"tail", tail}};
    bool all_ok = true;
    for (const auto& rep : limit_checks(fam, tail)) {
        ordered_json row;
        row["name"] = rep.name;
        if (rep.has_minimal_n) {
            row["minimal_n"] = rep.minimal_n;
        } else {
            row["max_tail_residual"] = fmt_double(rep.max_tail_residual);
            row["tolerance"] = fmt_double(rep.tolerance);
        }
        row["ok"] = rep.ok;
        all_ok = all_ok && rep.ok;
        doc.results.push_back(row);
    }
    return all_ok ? 0 : 2;
}

int cmd_conjecture(int nmax, int mmax, Document& doc) {
    doc.command = "conjecture";
    doc.inputs = {{"nmax", nmax}, {"mmax", mmax}};
    ConjectureTable table = conjecture_exponents(nmax, mmax);
    for (const auto& e : table.entries) {
        std::string order =
            e.reciprocal ? "1/" + std::to_string(e.order) : std::to_string(e.order);
        doc.results.push_back({{"order", order}, {"exponent", fmt_double(e.exponent)}});
    }
    doc.summary["strictly_decreasing"] = table.strictly_decreasing;
    return 0;
}

int cmd_verify_fe(const std::string& pattern, const std::string& exponent_s,
                  const std::string& grid_s, int nfold_k, Document& doc) {
    std::optional<double> exponent;
    if (exponent_s != "auto") {
        try {
            exponent = std::stod(exponent_s);
        } catch (const std::exception&) {
            throw invalid_input_error("exponent must be 'auto' or a number");
        }
    }
    double lo = 0.1, hi = 10.0;
    int steps = 100;
    if (!grid_s.empty()) {
        std::stringstream ss(grid_s);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
            throw invalid_input_error("grid must look like lo:hi:steps");
        try {
            lo = std::stod(a);
            hi = std::stod(b);
            steps = std::stoi(c);
        } catch (const std::exception&) {
            throw invalid_input_error("grid must look like lo:hi:steps");
        }
    }
    ResidualReport rep = verify_functional_equation(pattern, exponent, lo, hi, steps, nfold_k);
    doc.command = "verify-fe";
    doc.inputs = {{"pattern", pattern},
                  {"exponent", exponent_s},
                  {"grid", fmt_double(lo) + ":" + fmt_double(hi) + ":" + std::to_string(steps)}};
    if (pattern == "hf_nfold") doc.inputs["nfold"] = nfold_k;
    ordered_json row;
    row["pattern"] = rep.pattern;
    row["exponent"] = fmt_double(rep.exponent);
    row["auto_exponent"] = rep.auto_exponent;
    row["max_residual"] = fmt_double(rep.max_residual);
    row["argmax_x"] = fmt_double(rep.argmax_x);
    if (rep.pattern.rfind("tower_", 0) == 0) row["argmax_n"] = rep.argmax_n;
    if (rep.composite_exponent != 0) row["composite_exponent"] = fmt_double(rep.composite_exponent);
    row["valid_solution"] = rep.valid_solution;
    if (!rep.note.empty()) row["note"] = rep.note;
    doc.results.push_back(row);
    return 0;
}

int cmd_discrete(const std::string& case_s, std::optional<long long> n,
                 std::optional<std::string> sweep_s, bool with_oracle, Document& doc) {
    CycleCase c = cycle_case_from_name(case_s);
    long long lo, hi;
    if (sweep_s) {
        std::tie(lo, hi) = parse_range(*sweep_s);
    } else if (n) {
        lo = hi = *n;
    } else {
        throw invalid_input_error("discrete needs --n N or --sweep A..B");
    }
    doc.command = "discrete";
    doc.inputs = {{"case", case_s}, {"from", lo}, {"to", hi}, {"oracle", with_oracle}};
    bool all_trivial = true;
    for (long long len = lo; len <= hi; ++len) {
        Verdict v = decide(c, len);
        ordered_json row;
        row["n"] = len;
        row["only_trivial"] = v.only_trivial;
        row["witness"] = v.witness_kind;
        if (v.witness_kind == "determinant") row["determinant"] = to_decimal(v.determinant);
        if (with_oracle) row["oracle_agrees"] = kernel_oracle(c, len).only_trivial == v.only_trivial;
        all_trivial = all_trivial && v.only_trivial;
        doc.results.push_back(row);
    }
    doc.summary["all_only_trivial"] = all_trivial;
    return 0;
}

int cmd_zeros(const std::string& target, std::optional<long long> bound, Document& doc) {
    doc.command = "zeros";
    if (target == "E" || target == "D") {
        long long b = bound.value_or(500);
        Family fam = family_from_letter(target);
        doc.inputs = {{"target", target}, {"bound", b}};
        for (long long z : term_zeros(fam, b)) doc.results.push_back({{"n", z}});
        doc.summary["zeros"] = doc.results.size();
        return 0;
    }
    if (target == "deltaE" || target == "deltaD") {
        long long b = bound.value_or(8);
        DeltaFamily fam = target == "deltaE" ? DeltaFamily::narayana : DeltaFamily::padovan;
        doc.inputs = {{"target", target}, {"bound", b}};
        for (auto [i, j] : delta_zeros(fam, b)) doc.results.push_back({{"i", i}, {"j", j}});
        doc.summary["zeros"] = doc.results.size();
        return 0;
    }
    throw invalid_input_error("unknown zero target '" + target + "' (E, D, deltaE, deltaD)");
}

int cmd_thresholds(int kmax, long long bound, Document& doc) {
    doc.command = "thresholds";
    doc.inputs = {{"kmax", kmax}, {"bound", bound}};
    for (const auto& row : threshold_table(kmax, bound))
        doc.results.push_back(
            {{"k", row.k}, {"n0", row.n0}, {"n1", row.n1}, {"conclusive", row.conclusive}});
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for the fibonacci, narayana and padovan families"};
    app.name("recurlab");
    app.fallthrough();

    std::string format_s;
    app.add_option("--format", format_s, "output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    // seq
    auto* seq = app.add_subcommand("seq", "exact terms of a family over an index range");
    std::string seq_family;
    std::optional<long long> seq_from, seq_to;
    bool seq_closed = false;
    seq->add_option("family", seq_family, "F, E or D")->required();
    seq->add_option("--from", seq_from, "first index");
    seq->add_option("--to", seq_to, "last index");
    seq->add_flag("--closed-form", seq_closed, "add the closed-form cross-check column");

    // identity
    auto* identity = app.add_subcommand("identity", "scan an identity or inequality family");
    std::string id_name;
    std::optional<std::string> id_range;
    identity->add_option("name", id_name, "registered identity name")->required();
    identity->add_option("--range", id_range, "index range A..B");

    // delta
    auto* delta = app.add_subcommand("delta", "characteristic determinant at offsets (i, j)");
    std::string delta_family;
    long long delta_i = 1, delta_j = 1;
    std::string delta_witnesses = "0,7,-5";
    delta->add_option("family", delta_family, "E or D")->required();
    delta->add_option("--i", delta_i, "row offset i")->required();
    delta->add_option("--j", delta_j, "row offset j")->required();
    delta->add_option("--witnesses", delta_witnesses, "comma list of witness indices");

    // delta-table
    auto* dtable = app.add_subcommand("delta-table", "grid of determinant values");
    std::string dt_family;
    long long dt_imax = 8, dt_jmax = 8;
    dtable->add_option("family", dt_family, "E or D")->required();
    dtable->add_option("--imax", dt_imax, "largest row offset");
    dtable->add_option("--jmax", dt_jmax, "largest column offset");

    // recover
    auto* recover = app.add_subcommand("recover", "identify a shifted sequence from observations");
    std::string rec_family, rec_points;
    recover->add_option("family", rec_family, "F, E or D")->required();
    recover->add_option("--points", rec_points, "observations idx:val,idx:val[,idx:val]")
        ->required();

    // roots
    auto* roots = app.add_subcommand("roots", "characteristic polynomial roots");
    std::string roots_family;
    std::optional<int> roots_param;
    roots->add_option("family", roots_family, "golden, narayana, plastic, general-n, general-m")
        ->required();
    roots->add_option("param", roots_param, "N or M for the general families");

    // constants
    auto* constants = app.add_subcommand("constants", "closed-form constants of a family");
    std::string const_family;
    constants->add_option("family", const_family, "F, E or D")->required();

    // cm-table
    auto* cmtab = app.add_subcommand("cm-table", "reflected-sign indicator values");
    int cm_mmax = 17;
    cmtab->add_option("--mmax", cm_mmax, "largest m");

    // limits
    auto* limits = app.add_subcommand("limits", "tail residuals of the registered limits");
    std::string lim_family;
    int lim_tail = 20;
    limits->add_option("family", lim_family, "F, E or D")->required();
    limits->add_option("--tail", lim_tail, "tail length (>= 10)");

    // conjecture
    auto* conjecture = app.add_subcommand("conjecture", "generalized power-law exponent table");
    int conj_nmax = 20, conj_mmax = 20;
    conjecture->add_option("--nmax", conj_nmax, "largest composition count");
    conjecture->add_option("--mmax", conj_mmax, "largest root order");

    // verify-fe
    auto* verify = app.add_subcommand("verify-fe", "fixed-point residuals for power laws");
    std::string fe_pattern, fe_exponent = "auto", fe_grid;
    int fe_nfold = 3;
    verify
        ->add_option("pattern", fe_pattern,
                     "hf_f, hf_ff, hf_nfold, hgg_g, tower_f, tower_e or tower_d")
        ->required();
    verify->add_option("--exponent", fe_exponent, "auto or a number");
    verify->add_option("--grid", fe_grid, "lo:hi:steps (default 0.1:10:100)");
    verify->add_option("--nfold", fe_nfold, "composition count K for hf_nfold");

    // discrete
    auto* discrete = app.add_subcommand("discrete", "decide the cycle fixed-point systems");
    std::string disc_case;
    std::optional<long long> disc_n;
    std::optional<std::string> disc_sweep;
    bool disc_oracle = false;
    discrete->add_option("case", disc_case, "hf_f, hf_ff or hgg_g")->required();
    discrete->add_option("--n", disc_n, "cycle length");
    discrete->add_option("--sweep", disc_sweep, "range of cycle lengths A..B");
    discrete->add_flag("--oracle", disc_oracle, "cross-check with exact elimination (n <= 200)");

    // zeros
    auto* zeros = app.add_subcommand("zeros", "zero locations of terms or determinants");
    std::string zeros_target;
    std::optional<long long> zeros_bound;
    zeros->add_option("target", zeros_target, "E, D, deltaE or deltaD")->required();
    zeros->add_option("--bound", zeros_bound, "scan bound");

    // thresholds
    auto* thresholds = app.add_subcommand("thresholds", "dominance thresholds n0(k), n1(k)");
    int th_kmax = 4;
    long long th_bound = 500;
    thresholds->add_option("--kmax", th_kmax, "largest shift k");
    thresholds->add_option("--bound", th_bound, "scan bound");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        Format fmt = Format::table;
        if (!format_s.empty()) {
            fmt = parse_format(format_s);
        } else if (const char* env = std::getenv("RECURLAB_FORMAT")) {
            fmt = parse_format(env);
        }

        Document doc;
        int code = 0;
        if (*seq) code = cmd_seq(seq_family, seq_from, seq_to, seq_closed, doc);
        else if (*identity) code = cmd_identity(id_name, id_range, doc);
        else if (*delta) code = cmd_delta(delta_family, delta_i, delta_j, delta_witnesses, doc);
        else if (*dtable) code = cmd_delta_table(dt_family, dt_imax, dt_jmax, doc);
        else if (*recover) code = cmd_recover(rec_family, rec_points, doc);
        else if (*roots) code = cmd_roots(roots_family, roots_param, doc);
        else if (*constants) code = cmd_constants(const_family, doc);
        else if (*cmtab) code = cmd_cm_table(cm_mmax, doc);
        else if (*limits) code = cmd_limits(lim_family, lim_tail, doc);
        else if (*conjecture) code = cmd_conjecture(conj_nmax, conj_mmax, doc);
        else if (*verify) code = cmd_verify_fe(fe_pattern, fe_exponent, fe_grid, fe_nfold, doc);
        else if (*discrete) code = cmd_discrete(disc_case, disc_n, disc_sweep, disc_oracle, doc);
        else if (*zeros) code = cmd_zeros(zeros_target, zeros_bound, doc);
        else if (*thresholds) code = cmd_thresholds(th_kmax, th_bound, doc);

        render(doc, fmt, out);
        return code;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace recurlab
