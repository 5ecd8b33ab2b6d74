// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include "decimal_oracle.hpp"
#include "support.hpp"

#include "abp/analysis.hpp"
#include "abp/bfile.hpp"
#include "abp/cli/commands.hpp"
#include "abp/kernels.hpp"
#include "abp/regions.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

using namespace abp;
using testing_support::c;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cli(const std::vector<std::string>& args, int& code)
{
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

std::vector<std::string> table_rows(const std::string& table)
{
    std::vector<std::string> rows;
    std::istringstream in(table);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string label, cell, joined;
        cells >> label;
        while (cells >> cell)
            joined += (joined.empty() ? "" : ",") + cell;
        rows.push_back(label + ":" + joined);
    }
    return rows;
}

Check criterion1()
{
    Check k;
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    auto rows = table_rows(cli({"generate", "--preset", "golden-thm1", "--n", "15"}, code));
    const double s = seconds_since(t0);
    k.expect(code == 0, "exit code " + std::to_string(code));
    const std::vector<std::string> expected{
        "n:1,2,3,4,5,6,7,8,9,10,11,12,13,14,15",
        "a(n):4,8,12,16,21,25,29,33,38,42,46,50,55,59,63",
        "b(n):6,13,20,27,34,41,47,54,61,68,75,82,89,95,102",
        "c(n):1,3,4,6,8,9,11,12,14,16,17,19,21,22,24",
        "c~(n):1,2,3,5,7,9,10,11,14,15,17,18,19,22,23",
        "Error:0,1,1,1,1,0,1,1,0,1,0,1,2,0,1",
    };
    k.expect(rows == expected, "table rows differ");
    k.expect(s < 1.0, "runtime " + std::to_string(s) + " s");
    if (k.ok)
        k.detail = "rows exact, " + std::to_string(s) + " s";
    return k;
}

Check criterion2()
{
    Check k;
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    auto rows = table_rows(cli({"generate", "--preset", "tribonacci-thm3", "--n", "15"}, code));
    const double s = seconds_since(t0);
    k.expect(code == 0, "exit code " + std::to_string(code));
    k.expect(rows.size() == 8, "expected 8 rows");
    if (rows.size() == 8) {
        k.expect(rows[1] == "a(n):6,12,18,24,31,37,43,49,56,62,68,74,80,87,93", "a row");
        k.expect(rows[2] == "b(n):3,6,10,13,16,20,23,27,30,33,37,40,43,47,50", "b row");
        k.expect(rows[3] == "b~(n):3,5,10,13,16,20,23,27,30,33,36,40,42,47,50", "b~ row");
        k.expect(rows[4] == "Error:0,1,0,0,0,0,0,0,0,0,1,0,1,0,0", "b error row");
        k.expect(rows[7] == "Error:0,1,1,0,1,2,1,0,1,1,1,1,1,0,1", "c error row");
    }
    int csv_code = 0;
    auto parsed = cli::parse_csv_rows(cli({"generate", "--preset", "tribonacci-thm3", "--n", "15", "--format", "csv"},
                                          csv_code));
    for (const auto& r : parsed)
        k.expect(r.c - r.ct == r.c_error, "c - c~ differs from the error at n = " + std::to_string(r.n));
    k.expect(s < 1.0, "runtime " + std::to_string(s) + " s");
    if (k.ok)
        k.detail = "a, b, b~ and both error rows exact; c, c~ regenerated and consistent";
    return k;
}

std::vector<std::pair<std::string, AlmostBeattyPartition>> criterion_partitions()
{
    return {{"golden-thm1", build_theorem1(testing_support::golden_table1())},
            {"golden-thm4", build_theorem4(testing_support::golden_equal())},
            {"tribonacci-thm3", build_theorem3(testing_support::tribonacci_table2())},
            {"golden-thm2", build_theorem2(testing_support::golden_equal())}};
}

Check criterion3()
{
    Check k;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& [name, p] : criterion_partitions()) {
        auto r = kernels::coverage_parallel(p, 100000);
        k.expect(r.ok(), name + ": " + std::to_string(r.first_bad) + " covered " +
                             std::to_string(r.multiplicity) + " times");
        auto ser = kernels::coverage_serial(p, 100000);
        k.expect(ser == r, name + ": serial and parallel disagree");
    }
    const double s = seconds_since(t0);
    k.expect(s < 60.0, "runtime " + std::to_string(s) + " s");
    if (k.ok)
        k.detail = "4 partitions cover [1, 100000] exactly once, " + std::to_string(s) + " s";
    return k;
}

Check criterion4()
{
    Check k;
    auto parts = criterion_partitions();
    auto stats = [&](std::size_t i, SequenceRole role) { return kernels::error_stats_parallel(parts[i].second, role, 100000); };

    auto t1 = stats(0, SequenceRole::AlmostGamma);
    k.expect(t1.ok() && t1.min_error >= 0 && t1.max_error == 2, "thm1 error range");
    k.expect(t1.first_bound_at == 13, "thm1 bound first at " + std::to_string(t1.first_bound_at));

    auto t3b = stats(2, SequenceRole::AlmostBeta);
    auto t3c = stats(2, SequenceRole::AlmostGamma);
    k.expect(t3b.ok() && t3b.min_error >= 0 && t3b.max_error <= 1, "thm3 b-errors");
    k.expect(t3c.ok() && t3c.min_error >= 0 && t3c.max_error == 2, "thm3 c-errors");
    k.expect(t3c.first_bound_at == 6, "thm3 c bound first at " + std::to_string(t3c.first_bound_at));

    auto t4b = stats(1, SequenceRole::AlmostBeta);
    auto t4c = stats(1, SequenceRole::AlmostGamma);
    k.expect(t4b.min_error == 1 && t4b.max_error == 1, "thm4 b-errors not identically 1");
    k.expect(t4c.ok() && t4c.min_error >= 0 && t4c.max_error <= 1, "thm4 c-errors");

    const auto bound2 = theorem2_error_bound(testing_support::golden_equal().alpha());
    k.expect(bound2 == 2, "thm2 bound " + std::to_string(bound2));
    auto t2b = stats(3, SequenceRole::AlmostBeta);
    auto t2c = stats(3, SequenceRole::AlmostGamma);
    k.expect(t2b.ok() && t2b.min_error >= 0 && t2b.max_error <= bound2, "thm2 b-errors");
    k.expect(t2c.ok() && t2c.min_error >= 0 && t2c.max_error <= bound2, "thm2 c-errors");
    if (k.ok)
        k.detail = "thm1 max 2 first n=13; thm3 b<=1, c max 2 first n=6; thm4 b=1, c<=1; thm2 max " +
                   std::to_string(std::max(t2b.max_error, t2c.max_error)) + " <= 2";
    return k;
}

Check criterion5()
{
    Check k;
    auto t0 = std::chrono::steady_clock::now();
    auto p = build_theorem3(testing_support::sqrt_pair());
    auto d = empirical_densities(p, 100000);
    const double expected[] = {0.17889, 0.52996, 0.29115};
    const FieldElement pred[] = {d.predicted.p0, d.predicted.p1, d.predicted.p2};
    std::ostringstream detail;
    detail << std::fixed << std::setprecision(5);
    for (int i = 0; i < 3; ++i) {
        const double pv = exact::to_double(pred[i]);
        k.expect(std::fabs(pv - expected[i]) < 5e-6, "P(" + std::to_string(i) + ") = " + std::to_string(pv));
        k.expect(std::fabs(d.empirical[i] - pv) <= 0.02, "empirical " + std::to_string(i) + " off");
        detail << (i ? ", " : "") << "P" << i << " " << pv << " vs " << d.empirical[i];
    }
    const double s = seconds_since(t0);
    k.expect(s < 60.0, "runtime " + std::to_string(s) + " s");
    if (k.ok)
        k.detail = detail.str();
    return k;
}

Check criterion6()
{
    Check k;
    struct Case {
        std::string name, alpha, beta;
    };
    for (const Case& cs : {Case{"golden", "1/phi^3", "1/phi^4"}, Case{"sqrt", "sqrt(2)/4", "sqrt(3)/6"}}) {
        auto t = testing_support::triple(cs.alpha, cs.beta);
        auto p = build_theorem3(t);
        const auto& g = p.member(SequenceRole::AlmostGamma);
        std::int64_t bad = 0;
        g.sequence->for_each_index(1, 10000, [&](std::int64_t n, std::int64_t m) {
            const auto label = classify_region(t, m);
            if (!bad && static_cast<std::int64_t>(label) != g.reference->term(n) - m)
                bad = n;
        });
        k.expect(bad == 0, cs.name + ": label disagrees with error at n = " + std::to_string(bad));

        int code = 0;
        auto doc = nlohmann::json::parse(
            cli({"regions", "--alpha", cs.alpha, "--beta", cs.beta, "--n", "100", "--format", "json"}, code));
        k.expect(code == 0, cs.name + ": regions exit code");
        for (const auto& a : doc["summary"]["areas"])
            k.expect(a["ratio_equals_predicted"] == true, cs.name + ": area ratio differs from P(d)");
        k.expect(doc["summary"]["labels_match_polygons"] == true, cs.name + ": scatter labels");
    }
    if (k.ok)
        k.detail = "labels match errors for n <= 10000 on both triples; area ratios equal P(d) exactly";
    return k;
}

Check criterion7()
{
    Check k;
    auto t = testing_support::witness_triple();
    auto w = find_theorem5_witness(t, 100);
    k.expect(w.has_value(), "no witness found");
    if (w) {
        k.expect(w->m == 7, "witness m = " + std::to_string(w->m));
        k.expect(w->verified(), "certificates");
        k.expect(witness_blocks(t, *w), "blocking check");
    }
    int code = 0;
    auto doc = nlohmann::json::parse(cli({"witness", "--alpha", "sqrt(2)-1", "--beta", "sqrt(5)-2", "--gamma",
                                          "4-sqrt(2)-sqrt(5)", "--limit", "100", "--format", "json"},
                                         code));
    k.expect(code == 0 && doc["summary"]["m"] == 7 && doc["summary"]["blocking"] == true, "witness command");
    if (k.ok)
        k.detail = "m = 7, four certificates verified, blocking check passes";
    return k;
}

Check criterion8()
{
    Check k;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 25);
    const std::vector<exact::FieldPtr> fields{exact::golden_field(), exact::tribonacci_field(),
                                              c("sqrt(2)+sqrt(3)").field()};
    std::int64_t samples = 0;
    for (const auto& f : fields) {
        const auto theta = decimal_oracle::generator(*f);
        auto random_element = [&] {
            std::vector<Rational> cs;
            for (int i = 0; i < f->degree(); ++i)
                cs.push_back(exact::make_rational(num(rng), den(rng)));
            if (cs[1] == 0)
                cs[1] = 1;
            return FieldElement(f, cs);
        };
        for (int i = 0; i < 1000; ++i, ++samples) {
            FieldElement x = random_element(), y = random_element();
            const int ds = exact::delta(x.frac(), y.frac());
            const int dd = exact::delta((x - y).frac(), y.frac());
            k.expect((x + y).floor() == x.floor() + y.floor() + ds, "floor of a sum");
            k.expect((x - y).floor() == x.floor() - y.floor() - dd, "floor of a difference");
            k.expect((x + y).frac() == x.frac() + y.frac() - Rational(ds), "frac of a sum");
            k.expect((x - y).frac() == x.frac() - y.frac() + Rational(dd), "frac of a difference");
            const exact::Integer oracle = decimal_oracle::floor(x, theta);
            k.expect(x.floor() == oracle, "floor differs from the decimal oracle in " + f->describe());
        }
    }
    FieldElement phi = c("phi"), phi2 = c("phi^2");
    for (std::int64_t n = 1; n <= 10000; ++n) {
        const exact::Integer lhs = (Rational(n) * phi2).floor() - 1;
        const exact::Integer rhs = (Rational((Rational(n) * phi).floor()) * phi).floor();
        k.expect(lhs == rhs, "golden identity fails at n = " + std::to_string(n));
    }
    if (k.ok)
        k.detail = std::to_string(samples) + " samples over degrees 2, 3, 4; golden identity for n <= 10000";
    return k;
}

Check criterion9()
{
    Check k;
    const std::string dir = ABP_FIXTURE_DIR;
    struct Case {
        const char* density;
        const char* file;
    };
    std::ostringstream detail;
    for (const Case& cs : {Case{"1/phi", "b000201.txt"}, Case{"1/phi^3", "b004976.txt"},
                           Case{"1/phi^4", "b004919.txt"}}) {
        int code = 0;
        auto doc = nlohmann::json::parse(
            cli({"oeis-check", "--density", cs.density, "--bfile", dir + "/" + cs.file, "--count", "200", "--format",
                 "json"},
                code));
        k.expect(code == 0 && doc["summary"]["match"] == true, std::string(cs.file) + " mismatch");
        detail << (detail.tellp() ? ", " : "") << doc["summary"]["id"].get<std::string>() << " offset "
               << doc["summary"]["offset"].get<std::int64_t>();
    }
    if (k.ok)
        k.detail = "200 terms match: " + detail.str();
    return k;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, Check (*)()>> criteria{
        {"golden table reproduction", criterion1}, {"tribonacci table reproduction", criterion2},
        {"partition oracle", criterion3},       {"error-bound suite", criterion4},
        {"density convergence", criterion5},    {"region/error equivalence", criterion6},
        {"non-existence witness", criterion7},  {"exact-arithmetic suite", criterion8},
        {"OEIS cross-validation", criterion9}};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check k;
        try {
            k = criteria[i].second();
        } catch (const std::exception& e) {
            k.ok = false;
            k.detail = std::string("exception: ") + e.what();
        }
        failures += !k.ok;
        std::cout << (k.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << k.detail
                  << "\n";
    }
    return failures == 0 ? 0 : 1;
}
