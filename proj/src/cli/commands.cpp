#include "abp/cli/commands.hpp"

#include "abp/analysis.hpp"
#include "abp/bfile.hpp"
#include "abp/cli/fetch.hpp"
#include "abp/error.hpp"
#include "abp/exact/const_expr.hpp"
#include "abp/kernels.hpp"
#include "abp/regions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace abp::cli {

using nlohmann::json;
using exact::to_decimal;

namespace {

struct Preset {
    const char* name;
    Construction construction;
    const char* alpha;
    const char* beta;
    const char* gamma;
};

constexpr Preset kPresets[] = {
    {"golden-thm1", Construction::Thm1, "1/phi^3", "1/phi^4", "1/phi"},
    {"tribonacci-thm3", Construction::Thm3, "1/tribonacci^3", "1/tribonacci^2", "1/tribonacci"},
    {"golden-thm4", Construction::Thm4, "1/phi^2", "1/phi^2", "1/phi^3"},
};

// Thrown for command-line misuse that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a check fails; carries the message for stderr.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<Construction> parse_construction(const std::string& s)
{
    if (s == "thm1")
        return Construction::Thm1;
    if (s == "thm2")
        return Construction::Thm2;
    if (s == "thm3")
        return Construction::Thm3;
    if (s == "thm4")
        return Construction::Thm4;
    return std::nullopt;
}

struct Setup {
    std::optional<Construction> construction;
    std::array<std::string, 3> texts;
    std::optional<DensityTriple> triple;
};

Setup resolve(const RunConfig& cfg, std::optional<Construction> fallback)
{
    Setup s;
    std::string a, b, g;
    if (!cfg.preset.empty()) {
        const Preset* p = nullptr;
        for (const auto& candidate : kPresets)
            if (cfg.preset == candidate.name)
                p = &candidate;
        if (!p)
            throw UsageError("unknown preset '" + cfg.preset + "'");
        s.construction = p->construction;
        a = p->alpha;
        b = p->beta;
        g = p->gamma;
    }
    if (!cfg.construction.empty())
        s.construction = parse_construction(cfg.construction);
    if (!s.construction)
        s.construction = fallback;
    if (!cfg.alpha.empty())
        a = cfg.alpha;
    if (!cfg.beta.empty())
        b = cfg.beta;
    if (!cfg.gamma.empty())
        g = cfg.gamma;
    else if (!cfg.alpha.empty() || !cfg.beta.empty())
        g.clear();
    if (a.empty() || b.empty())
        throw UsageError("--alpha and --beta (or --preset) are required");

    std::vector<FieldElement> xs{exact::parse_constant(a, cfg.degree_cap), exact::parse_constant(b, cfg.degree_cap)};
    if (!g.empty()) {
        xs.push_back(exact::parse_constant(g, cfg.degree_cap));
    } else {
        exact::unify(xs, cfg.degree_cap);
        xs.push_back(Rational(1) - xs[0] - xs[1]);
        g = "1 - (" + a + ") - (" + b + ")";
    }
    exact::unify(xs, cfg.degree_cap);
    s.texts = {a, b, g};
    s.triple.emplace(xs[0], xs[1], xs[2]);
    return s;
}

Construction require_construction(const Setup& s)
{
    if (!s.construction)
        throw UsageError("--construction (or --preset) is required");
    return *s.construction;
}

void require_thm3(const RunConfig& cfg, const Setup& s)
{
    if (s.construction && *s.construction != Construction::Thm3 && !cfg.construction.empty())
        throw UsageError(cfg.command + " is defined for the thm3 construction only");
}

std::string value_text(const FieldElement& x, bool exact_form)
{
    if (!exact_form)
        return to_decimal(x);
    if (x.is_rational())
        return x.rational_part().get_str();
    return x.to_string();
}

json config_json(const RunConfig& cfg, const Setup& s)
{
    json c;
    c["command"] = cfg.command;
    if (s.construction)
        c["construction"] = to_string(*s.construction);
    if (!cfg.preset.empty())
        c["preset"] = cfg.preset;
    c["alpha"] = s.texts[0];
    c["beta"] = s.texts[1];
    c["gamma"] = s.texts[2];
    if (s.triple) {
        const auto& f = s.triple->alpha().value().field();
        c["field"] = f->describe();
        c["alpha_value"] = value_text(s.triple->alpha().value(), cfg.exact);
        c["beta_value"] = value_text(s.triple->beta().value(), cfg.exact);
        c["gamma_value"] = value_text(s.triple->gamma().value(), cfg.exact);
    }
    c["n"] = cfg.n;
    return c;
}

std::string join_csv(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += ',';
        out += cells[i];
    }
    return out + "\n";
}

// Aligned text table: the first column left-aligned, the rest right-aligned.
std::string aligned(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (width.size() <= j)
                width.push_back(0);
            width[j] = std::max(width[j], r[j].size());
        }
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j == 0)
                line += r[j] + std::string(width[0] - r[j].size(), ' ');
            else
                line += std::string(width[j] - r[j].size() + 1, ' ') + r[j];
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

json rows_json(const std::vector<Row>& rows)
{
    json arr = json::array();
    for (const auto& r : rows) {
        json o{{"n", r.n}, {"a", r.a}, {"b", r.b}};
        if (r.bt) {
            o["bt"] = *r.bt;
            o["b_error"] = *r.b_error;
        }
        o["c"] = r.c;
        o["ct"] = r.ct;
        o["c_error"] = r.c_error;
        arr.push_back(o);
    }
    return arr;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- generate

int cmd_generate(const RunConfig& cfg, std::ostream& out)
{
    Setup s = resolve(cfg, std::nullopt);
    auto p = build(require_construction(s), *s.triple);
    auto rows = partition_rows(p, cfg.n);
    switch (cfg.format) {
    case Format::Table: out << render_table(rows); break;
    case Format::Csv: out << render_csv(rows); break;
    case Format::Json: {
        json summary;
        for (SequenceRole role : p.almost_roles()) {
            std::int64_t mx = 0;
            for (const auto& r : rows)
                mx = std::max(mx, role == SequenceRole::AlmostBeta ? r.b_error.value_or(0) : r.c_error);
            ErrorRange range = p.error_range(role);
            summary[to_string(role)] = {{"max_error", mx}, {"allowed", {range.min, range.max}}};
        }
        emit(out, {{"config", config_json(cfg, s)}, {"rows", rows_json(rows)}, {"summary", summary}});
        break;
    }
    }
    return kOk;
}

// ---- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    Setup s = resolve(cfg, std::nullopt);
    auto p = build(require_construction(s), *s.triple);
    if (cfg.drop > 0) {
        SequenceRole target = SequenceRole::AlmostGamma;
        for (const auto& m : p.members())
            if (m.sequence->contains(cfg.drop))
                target = m.role;
        auto dropped = std::make_shared<DroppedTermSequence>(p.member(target).sequence, cfg.drop);
        p = p.with_sequence(target, dropped);
    }
    kernels::set_threads(cfg.threads);
    const auto t0 = std::chrono::steady_clock::now();
    auto report = cfg.serial ? kernels::verify_serial(p, cfg.n) : kernels::verify_parallel(p, cfg.n);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // Smallest counterexample over all checks, described for the diagnostic.
    std::int64_t worst = 0;
    std::string worst_text;
    auto consider = [&](std::int64_t at, const std::string& text) {
        if (at != 0 && (worst == 0 || at < worst)) {
            worst = at;
            worst_text = text;
        }
    };
    if (!report.coverage.ok())
        consider(report.coverage.first_bad,
                 report.coverage.multiplicity == 0
                     ? "gap: " + std::to_string(report.coverage.first_bad) + " is in no member sequence"
                     : "overlap: " + std::to_string(report.coverage.first_bad) + " is in " +
                           std::to_string(report.coverage.multiplicity) + " member sequences");
    for (const auto& m : report.monotone)
        consider(m.first_bad, to_string(m.role) + " is not increasing at n = " + std::to_string(m.first_bad));
    for (const auto& e : report.errors)
        consider(e.first_violation, to_string(e.role) + " error " + std::to_string(e.violation_error) +
                                        " outside [" + std::to_string(e.allowed.min) + ", " +
                                        std::to_string(e.allowed.max) + "] at n = " +
                                        std::to_string(e.first_violation));

    if (cfg.format == Format::Json) {
        json rows = json::array();
        for (const auto& e : report.errors)
            rows.push_back({{"role", to_string(e.role)},
                            {"allowed", {e.allowed.min, e.allowed.max}},
                            {"min_error", e.min_error},
                            {"max_error", e.max_error},
                            {"first_max_at", e.first_max_at},
                            {"bound_first_attained_at", e.first_bound_at},
                            {"histogram", e.histogram},
                            {"ok", e.ok()}});
        json summary{{"coverage_ok", report.coverage.ok()},
                     {"monotone_ok", std::all_of(report.monotone.begin(), report.monotone.end(),
                                                 [](const auto& m) { return m.first_bad == 0; })},
                     {"pass", report.ok()},
                     {"seconds", seconds}};
        if (!report.ok()) {
            summary["counterexample"] = worst;
            summary["reason"] = worst_text;
        }
        emit(out, {{"config", config_json(cfg, s)}, {"rows", rows}, {"summary", summary}});
    } else if (cfg.format == Format::Csv) {
        out << "role,allowed_min,allowed_max,min_error,max_error,first_max_at,bound_first_attained_at,ok\n";
        for (const auto& e : report.errors)
            out << join_csv({to_string(e.role), std::to_string(e.allowed.min), std::to_string(e.allowed.max),
                             std::to_string(e.min_error), std::to_string(e.max_error),
                             std::to_string(e.first_max_at), std::to_string(e.first_bound_at),
                             e.ok() ? "1" : "0"});
    } else {
        out << "verify " << to_string(p.construction()) << " over [1, " << cfg.n << "]\n";
        out << "coverage: "
            << (report.coverage.ok() ? "every integer covered exactly once" : "FAILED") << "\n";
        for (const auto& m : report.monotone)
            out << "increasing " << to_string(m.role) << ": " << (m.first_bad == 0 ? "yes" : "NO") << "\n";
        for (const auto& e : report.errors) {
            out << to_string(e.role) << " errors: allowed [" << e.allowed.min << ", " << e.allowed.max
                << "], observed [" << e.min_error << ", " << e.max_error << "], max first at n = "
                << e.first_max_at;
            if (e.first_bound_at)
                out << ", bound " << e.allowed.max << " first attained at n = " << e.first_bound_at;
            else
                out << ", bound " << e.allowed.max << " not attained";
            out << "\n  histogram:";
            for (std::size_t k = 0; k < e.histogram.size(); ++k)
                out << " " << k << ":" << e.histogram[k];
            if (e.negative)
                out << " negative:" << e.negative;
            out << "\n";
        }
        out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
    }
    if (!report.ok()) {
        err << "verification failed: " << worst_text << "\n";
        return kVerificationFailed;
    }
    return kOk;
}

// ---- densities

int cmd_densities(const RunConfig& cfg, std::ostream& out)
{
    Setup s = resolve(cfg, Construction::Thm3);
    require_thm3(cfg, s);
    auto p = build_theorem3(*s.triple);
    kernels::set_threads(cfg.threads);
    DensityEstimate d = empirical_densities(p, cfg.n, !cfg.serial);
    const std::array<FieldElement, 3> predicted{d.predicted.p0, d.predicted.p1, d.predicted.p2};
    std::array<double, 3> deviation{};
    for (std::size_t k = 0; k < 3; ++k)
        deviation[k] = std::fabs(d.empirical[k] - exact::to_double(predicted[k]));
    const FieldElement total = predicted[0] + predicted[1] + predicted[2];
    const bool independent = exact::linearly_independent_with_one({s.triple->alpha().value(), s.triple->beta().value()});

    auto fixed = [](double x) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(6) << x;
        return os.str();
    };

    if (cfg.format == Format::Json) {
        json rows = json::array();
        for (std::size_t k = 0; k < 3; ++k) {
            json r{{"error", k},
                   {"predicted", to_decimal(predicted[k])},
                   {"count", d.counts[k]},
                   {"empirical", d.empirical[k]},
                   {"deviation", deviation[k]}};
            if (cfg.exact)
                r["predicted_exact"] = value_text(predicted[k], true);
            rows.push_back(r);
        }
        emit(out, {{"config", config_json(cfg, s)},
                   {"rows", rows},
                   {"summary",
                    {{"predicted_sum", to_decimal(total, 7)},
                     {"predicted_sum_is_one", (total - Rational(1)).is_zero()},
                     {"max_deviation", *std::max_element(deviation.begin(), deviation.end())},
                     {"one_alpha_beta_independent", independent}}}});
        return kOk;
    }
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header{"error", "predicted", "count", "empirical", "deviation"};
    if (cfg.exact)
        header.push_back("exact");
    if (cfg.format == Format::Csv) {
        out << join_csv(header);
        for (std::size_t k = 0; k < 3; ++k) {
            std::vector<std::string> r{std::to_string(k), to_decimal(predicted[k]), std::to_string(d.counts[k]),
                                       fixed(d.empirical[k]), fixed(deviation[k])};
            if (cfg.exact)
                r.push_back("\"" + value_text(predicted[k], true) + "\"");
            out << join_csv(r);
        }
        return kOk;
    }
    table.push_back(header);
    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<std::string> r{std::to_string(k), to_decimal(predicted[k]), std::to_string(d.counts[k]),
                                   fixed(d.empirical[k]), fixed(deviation[k])};
        if (cfg.exact)
            r.push_back(value_text(predicted[k], true));
        table.push_back(r);
    }
    table.push_back({"sum", to_decimal(total, 7), std::to_string(cfg.n), fixed(1.0), ""});
    out << "thm3 error densities, alpha = " << s.texts[0] << ", beta = " << s.texts[1] << ", N = " << cfg.n
        << "\n";
    if (cfg.exact)
        out << "t = " << s.triple->alpha().value().field()->describe() << "\n";
    out << aligned(table);
    if (!independent)
        out << "note: 1, alpha, beta are linearly dependent over Q; the predicted values assume independence\n";
    return kOk;
}

// ---- regions

int cmd_regions(const RunConfig& cfg, std::ostream& out)
{
    Setup s = resolve(cfg, Construction::Thm3);
    require_thm3(cfg, s);
    auto p = build_theorem3(*s.triple);
    ErrorAnalyzer an(*s.triple);
    RegionGeometry geo = region_polygons(*s.triple);
    PredictedDensities pd = predicted_densities(*s.triple);
    const FieldElement& gamma = s.triple->gamma().value();

    const std::array<const std::vector<Polygon>*, 3> regions{&geo.r0, &geo.r1, &geo.r2};
    const std::array<FieldElement, 3> predicted{pd.p0, pd.p1, pd.p2};
    std::array<FieldElement, 3> area;
    FieldElement total_area = FieldElement::rational(0);
    for (std::size_t d = 0; d < 3; ++d) {
        area[d] = region_area(*regions[d]);
        total_area += area[d];
    }
    std::array<bool, 3> ratio_ok{};
    for (std::size_t d = 0; d < 3; ++d)
        ratio_ok[d] = area[d] / total_area == predicted[d];

    struct ScatterPoint {
        std::int64_t n, m;
        FieldElement u, v;
        RegionLabel label;
        std::int64_t error;
        bool polygon_agrees;
    };
    std::vector<ScatterPoint> scatter;
    const Member& g = p.member(SequenceRole::AlmostGamma);
    g.sequence->for_each_index(1, cfg.n, [&](std::int64_t n, std::int64_t m) {
        FractionalTriple f = fractional_triple(*s.triple, m);
        RegionLabel label = an.classify(m);
        Point pt{f.u, f.v};
        bool agrees = label != RegionLabel::NotInAlmostGamma &&
                      point_in_region(*regions[static_cast<std::size_t>(label)], pt);
        for (std::size_t d = 0; d < 3; ++d)
            if (d != static_cast<std::size_t>(label) && point_in_region(*regions[d], pt))
                agrees = false;
        scatter.push_back({n, m, f.u, f.v, label, g.reference->term(n) - m, agrees});
    });
    const bool all_agree =
        std::all_of(scatter.begin(), scatter.end(), [](const ScatterPoint& sp) { return sp.polygon_agrees; });

    auto coord = [&](const FieldElement& x) { return value_text(x, cfg.exact); };
    const char* names[] = {"R0", "R1", "R2"};

    if (cfg.format == Format::Json) {
        json polys = json::array();
        for (std::size_t d = 0; d < 3; ++d)
            for (std::size_t k = 0; k < regions[d]->size(); ++k) {
                json verts = json::array();
                for (const auto& pt : (*regions[d])[k])
                    verts.push_back({coord(pt.u), coord(pt.v)});
                polys.push_back({{"region", names[d]}, {"piece", k}, {"vertices", verts}});
            }
        json rows = json::array();
        for (const auto& sp : scatter)
            rows.push_back({{"n", sp.n},
                            {"m", sp.m},
                            {"u", coord(sp.u)},
                            {"v", coord(sp.v)},
                            {"label", to_string(sp.label)},
                            {"error", sp.error},
                            {"in_polygon", sp.polygon_agrees}});
        json areas = json::array();
        for (std::size_t d = 0; d < 3; ++d)
            areas.push_back({{"region", names[d]},
                             {"area", value_text(area[d], cfg.exact)},
                             {"ratio", to_decimal(area[d] / total_area)},
                             {"predicted", to_decimal(predicted[d])},
                             {"ratio_equals_predicted", ratio_ok[d]}});
        emit(out, {{"config", config_json(cfg, s)},
                   {"polygons", polys},
                   {"rows", rows},
                   {"summary",
                    {{"areas", areas},
                     {"total_area_equals_gamma", total_area == gamma},
                     {"labels_match_polygons", all_agree}}}});
        return kOk;
    }
    // CSV and table share the layout: a polygon block and a scatter block.
    const bool csv = cfg.format == Format::Csv;
    auto write = [&](const std::vector<std::vector<std::string>>& block) {
        if (csv) {
            for (const auto& r : block)
                out << join_csv(r);
        } else {
            out << aligned(block);
        }
    };
    std::vector<std::vector<std::string>> poly_block{{"region", "piece", "vertex", "u", "v"}};
    for (std::size_t d = 0; d < 3; ++d)
        for (std::size_t k = 0; k < regions[d]->size(); ++k)
            for (std::size_t i = 0; i < (*regions[d])[k].size(); ++i) {
                const auto& pt = (*regions[d])[k][i];
                poly_block.push_back({names[d], std::to_string(k), std::to_string(i), coord(pt.u), coord(pt.v)});
            }
    std::vector<std::vector<std::string>> area_block{{"region", "area", "ratio", "predicted", "equal"}};
    for (std::size_t d = 0; d < 3; ++d)
        area_block.push_back({names[d], value_text(area[d], cfg.exact), to_decimal(area[d] / total_area),
                              to_decimal(predicted[d]), ratio_ok[d] ? "yes" : "no"});
    std::vector<std::vector<std::string>> scatter_block{{"n", "m", "u", "v", "label", "error", "in_polygon"}};
    for (const auto& sp : scatter)
        scatter_block.push_back({std::to_string(sp.n), std::to_string(sp.m), coord(sp.u), coord(sp.v),
                                 to_string(sp.label), std::to_string(sp.error), sp.polygon_agrees ? "1" : "0"});
    out << "# polygons\n";
    write(poly_block);
    out << "# areas\n";
    write(area_block);
    out << "# scatter\n";
    write(scatter_block);
    return kOk;
}

// ---- oeis-check

std::shared_ptr<const SequenceSource> oeis_source(const RunConfig& cfg, std::string& label)
{
    if (!cfg.density.empty()) {
        label = "B(" + cfg.density + ")";
        return std::make_shared<BeattySequence>(Density(exact::parse_constant(cfg.density, cfg.degree_cap)));
    }
    if (cfg.role.empty())
        throw UsageError("oeis-check needs --density or --role");
    Setup s = resolve(cfg, std::nullopt);
    label = cfg.role;
    if (cfg.role == "alpha")
        return std::make_shared<BeattySequence>(s.triple->alpha());
    if (cfg.role == "beta")
        return std::make_shared<BeattySequence>(s.triple->beta());
    if (cfg.role == "gamma")
        return std::make_shared<BeattySequence>(s.triple->gamma());
    auto p = build(require_construction(s), *s.triple);
    for (SequenceRole r : {SequenceRole::ExactAlpha, SequenceRole::ExactBeta, SequenceRole::AlmostBeta,
                           SequenceRole::AlmostGamma})
        if (cfg.role == to_string(r))
            return p.member(r).sequence;
    throw UsageError("unknown role '" + cfg.role + "'");
}

int cmd_oeis_check(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::string path = cfg.bfile;
    if (!cfg.fetch.empty()) {
        std::string body;
        try {
            body = fetch_bfile(cfg.fetch);
        } catch (const std::exception& e) {
            err << e.what() << "\n";
            return kUsage;
        }
        if (path.empty())
            path = "b" + cfg.fetch.substr(1) + ".txt";
        std::ofstream(path) << body;
    }
    if (path.empty())
        throw UsageError("--bfile is required");
    BFile b = read_bfile(path);
    if (b.id.empty())
        b.id = path;

    std::string label;
    auto seq = oeis_source(cfg, label);
    OffsetResolution res;
    if (cfg.offset == "auto") {
        res = resolve_offset(b, seq->term(1));
    } else {
        try {
            std::size_t used = 0;
            res.offset = std::stoll(cfg.offset, &used);
            if (used != cfg.offset.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw UsageError("--offset must be 'auto' or an integer");
        }
    }
    MatchReport m = compare_with_bfile(b, *seq, cfg.count, res.offset);
    std::string offset_note = cfg.offset == "auto"
                                  ? (res.aligned ? "auto-resolved" : "auto, first term not found in the first 3 entries")
                                  : "given";
    std::string mismatch;
    if (!m.ok()) {
        mismatch = "MismatchAt(" + std::to_string(m.mismatch_at) + "): generated " + std::to_string(m.generated) +
                   ", b-file " +
                   (m.expected ? "has " + m.expected->get_str() : std::string("has no entry")) + " at index " +
                   std::to_string(m.mismatch_at + m.offset);
    }
    if (cfg.format == Format::Json) {
        json summary{{"id", b.id}, {"sequence", label}, {"count", m.count}, {"offset", m.offset},
                     {"offset_mode", offset_note}, {"match", m.ok()}};
        if (!m.ok())
            summary["mismatch_at"] = m.mismatch_at;
        json rows = json::array();
        for (std::int64_t n = 1; n <= std::min<std::int64_t>(cfg.count, 10); ++n)
            rows.push_back({{"n", n}, {"term", seq->term(n)}});
        emit(out, {{"config", {{"command", cfg.command}, {"bfile", path}, {"count", cfg.count}}},
                   {"rows", rows},
                   {"summary", summary}});
    } else if (cfg.format == Format::Csv) {
        out << "id,sequence,count,offset,match,mismatch_at\n";
        out << join_csv({b.id, label, std::to_string(m.count), std::to_string(m.offset), m.ok() ? "1" : "0",
                         std::to_string(m.mismatch_at)});
    } else {
        out << b.id << " vs " << label << ": offset " << m.offset << " (" << offset_note << ")\n";
        if (m.ok())
            out << "first " << m.count << " terms match\n";
        else
            out << mismatch << "\n";
    }
    if (!m.ok()) {
        err << mismatch << "\n";
        return kVerificationFailed;
    }
    return kOk;
}

// ---- witness

int cmd_witness(const RunConfig& cfg, std::ostream& out)
{
    Setup s = resolve(cfg, std::nullopt);
    kernels::set_threads(cfg.threads);
    auto w = find_theorem5_witness(*s.triple, cfg.limit, !cfg.serial);
    const bool independent = exact::linearly_independent_with_one({s.triple->alpha().value(), s.triple->beta().value()});
    const bool blocks = w && witness_blocks(*s.triple, *w);
    const char* facts[] = {"m in B_alpha", "m+1 in B_beta", "m+1 in B_gamma", "m+2 in B_alpha"};
    if (cfg.format == Format::Json) {
        json rows = json::array();
        if (w)
            for (std::size_t i = 0; i < 4; ++i)
                rows.push_back({{"certificate", facts[i]}, {"verified", w->certificates[i]}});
        json summary{{"limit", cfg.limit}, {"found", w.has_value()}, {"one_alpha_beta_independent", independent}};
        if (w) {
            summary["m"] = w->m;
            summary["blocking"] = blocks;
        }
        emit(out, {{"config", config_json(cfg, s)}, {"rows", rows}, {"summary", summary}});
    } else if (cfg.format == Format::Csv) {
        out << "m,m_in_alpha,m1_in_beta,m1_in_gamma,m2_in_alpha,blocking\n";
        if (w)
            out << join_csv({std::to_string(w->m), std::to_string(w->certificates[0]),
                             std::to_string(w->certificates[1]), std::to_string(w->certificates[2]),
                             std::to_string(w->certificates[3]), blocks ? "1" : "0"});
    } else if (!w) {
        out << "no witness m <= " << cfg.limit << "\n";
    } else {
        const std::int64_t m = w->m;
        const std::int64_t at[] = {m, m + 1, m + 1, m + 2};
        out << "witness m = " << m << "\n";
        for (std::size_t i = 0; i < 4; ++i)
            out << "  " << facts[i] << " (" << at[i] << "): " << (w->certificates[i] ? "verified" : "FAILED")
                << "\n";
        out << "blocking: " << (blocks ? "pass" : "FAIL") << "\n";
        if (!independent)
            out << "note: 1, alpha, beta are linearly dependent over Q\n";
    }
    return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n < 1)
        throw UsageError("--n must be at least 1");
    if (!cfg.construction.empty() && !parse_construction(cfg.construction))
        throw UsageError("unknown construction '" + cfg.construction + "'");
    if (cfg.command == "generate")
        return cmd_generate(cfg, out);
    if (cfg.command == "verify")
        return cmd_verify(cfg, out, err);
    if (cfg.command == "densities")
        return cmd_densities(cfg, out);
    if (cfg.command == "regions")
        return cmd_regions(cfg, out);
    if (cfg.command == "oeis-check")
        return cmd_oeis_check(cfg, out, err);
    if (cfg.command == "witness")
        return cmd_witness(cfg, out);
    throw UsageError("unknown command");
}

} // namespace

std::vector<Row> partition_rows(const AlmostBeattyPartition& p, std::int64_t n_max)
{
    std::vector<Row> rows(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)));
    const Member& a = p.member(SequenceRole::ExactAlpha);
    const Member& g = p.member(SequenceRole::AlmostGamma);
    const bool thm1 = p.has(SequenceRole::ExactBeta);
    a.sequence->for_each_index(1, n_max, [&](std::int64_t n, std::int64_t v) {
        auto& r = rows[static_cast<std::size_t>(n - 1)];
        r.n = n;
        r.a = v;
    });
    if (thm1) {
        p.member(SequenceRole::ExactBeta).sequence->for_each_index(1, n_max, [&](std::int64_t n, std::int64_t v) {
            rows[static_cast<std::size_t>(n - 1)].b = v;
        });
    } else {
        const Member& b = p.member(SequenceRole::AlmostBeta);
        b.sequence->for_each_index(1, n_max, [&](std::int64_t n, std::int64_t v) {
            auto& r = rows[static_cast<std::size_t>(n - 1)];
            r.b = b.reference->term(n);
            r.bt = v;
            r.b_error = r.b - v;
        });
    }
    g.sequence->for_each_index(1, n_max, [&](std::int64_t n, std::int64_t v) {
        auto& r = rows[static_cast<std::size_t>(n - 1)];
        r.c = g.reference->term(n);
        r.ct = v;
        r.c_error = r.c - v;
    });
    return rows;
}

std::string render_table(const std::vector<Row>& rows)
{
    const bool has_bt = !rows.empty() && rows.front().bt.has_value();
    std::vector<std::vector<std::string>> t(has_bt ? 8 : 6);
    std::size_t i = 0;
    t[i++] = {"n"};
    t[i++] = {"a(n)"};
    t[i++] = {"b(n)"};
    if (has_bt) {
        t[i++] = {"b~(n)"};
        t[i++] = {"Error"};
    }
    t[i++] = {"c(n)"};
    t[i++] = {"c~(n)"};
    t[i++] = {"Error"};
    for (const auto& r : rows) {
        i = 0;
        t[i++].push_back(std::to_string(r.n));
        t[i++].push_back(std::to_string(r.a));
        t[i++].push_back(std::to_string(r.b));
        if (has_bt) {
            t[i++].push_back(std::to_string(*r.bt));
            t[i++].push_back(std::to_string(*r.b_error));
        }
        t[i++].push_back(std::to_string(r.c));
        t[i++].push_back(std::to_string(r.ct));
        t[i++].push_back(std::to_string(r.c_error));
    }
    return aligned(t);
}

std::string render_csv(const std::vector<Row>& rows)
{
    const bool has_bt = !rows.empty() && rows.front().bt.has_value();
    std::string out = has_bt ? "n,a,b,bt,b_error,c,ct,c_error\n" : "n,a,b,c,ct,c_error\n";
    for (const auto& r : rows) {
        std::vector<std::string> cells{std::to_string(r.n), std::to_string(r.a), std::to_string(r.b)};
        if (has_bt) {
            cells.push_back(std::to_string(*r.bt));
            cells.push_back(std::to_string(*r.b_error));
        }
        cells.push_back(std::to_string(r.c));
        cells.push_back(std::to_string(r.ct));
        cells.push_back(std::to_string(r.c_error));
        out += join_csv(cells);
    }
    return out;
}

std::vector<Row> parse_csv_rows(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        return {};
    std::vector<std::string> header;
    {
        std::istringstream h(line);
        std::string cell;
        while (std::getline(h, cell, ','))
            header.push_back(cell);
    }
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream l(line);
        std::string cell;
        std::map<std::string, std::int64_t> v;
        for (const auto& name : header) {
            if (!std::getline(l, cell, ','))
                throw std::invalid_argument("short CSV row");
            v[name] = std::stoll(cell);
        }
        Row r;
        r.n = v.at("n");
        r.a = v.at("a");
        r.b = v.at("b");
        if (v.count("bt")) {
            r.bt = v.at("bt");
            r.b_error = v.at("b_error");
        }
        r.c = v.at("c");
        r.ct = v.at("ct");
        r.c_error = v.at("c_error");
        rows.push_back(r);
    }
    return rows;
}

std::vector<Row> parse_json_rows(const std::string& text)
{
    json j = json::parse(text);
    std::vector<Row> rows;
    for (const auto& o : j.at("rows")) {
        Row r;
        r.n = o.at("n");
        r.a = o.at("a");
        r.b = o.at("b");
        if (o.contains("bt")) {
            r.bt = o.at("bt").get<std::int64_t>();
            r.b_error = o.at("b_error").get<std::int64_t>();
        }
        r.c = o.at("c");
        r.ct = o.at("ct");
        r.c_error = o.at("c_error");
        rows.push_back(r);
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Almost Beatty partitions: construct, verify and analyze"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "table";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--construction", cfg.construction, "thm1, thm2, thm3 or thm4");
        sub->add_option("--alpha", cfg.alpha, "density alpha (constant expression)");
        sub->add_option("--beta", cfg.beta, "density beta (constant expression)");
        sub->add_option("--gamma", cfg.gamma, "density gamma, default 1 - alpha - beta");
        sub->add_option("--preset", cfg.preset, "golden-thm1, tribonacci-thm3 or golden-thm4");
        sub->add_option("--n", cfg.n, "range limit N");
        sub->add_option("--format", format, "table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_flag("--exact", cfg.exact, "print exact field elements instead of decimals");
        sub->add_option("--degree-cap", cfg.degree_cap, "largest number field degree allowed");
        sub->add_option("--threads", cfg.threads, "worker threads for range scans");
        sub->add_flag("--serial", cfg.serial, "use the serial reference kernels");
    };

    auto* gen = app.add_subcommand("generate", "print the partition rows for n = 1..N");
    auto* ver = app.add_subcommand("verify", "check coverage, monotonicity and error bounds over [1, N]");
    auto* den = app.add_subcommand("densities", "predicted and empirical error densities (thm3)");
    auto* reg = app.add_subcommand("regions", "region polygons and (u, v) scatter (thm3)");
    auto* oeis = app.add_subcommand("oeis-check", "compare a sequence with an OEIS b-file");
    auto* wit = app.add_subcommand("witness", "search for the non-existence witness pattern");
    for (auto* sub : {gen, ver, den, reg, oeis, wit})
        add_common(sub);
    ver->add_option("--drop", cfg.drop)->group("");
    oeis->add_option("--bfile", cfg.bfile, "b-file path");
    oeis->add_option("--offset", cfg.offset, "auto or an integer: b-file index = n + offset");
    oeis->add_option("--count", cfg.count, "number of terms to compare");
    oeis->add_option("--density", cfg.density, "check B_x for this density");
    oeis->add_option("--role", cfg.role, "alpha, beta, gamma or a member role of the partition");
    oeis->add_option("--fetch", cfg.fetch, "download the b-file for this OEIS id first");
    wit->add_option("--limit", cfg.limit, "largest m to search");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    for (auto* sub : app.get_subcommands())
        cfg.command = sub->get_name();
    cfg.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Table;

    try {
        return dispatch(cfg, out, err);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return is_precondition(e.kind()) ? kPrecondition : kUsage;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace abp::cli
