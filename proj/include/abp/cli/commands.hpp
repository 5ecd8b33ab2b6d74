#pragma once

#include "abp/constructions.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace abp::cli {

enum ExitCode { kOk = 0, kUsage = 1, kPrecondition = 2, kVerificationFailed = 3 };

enum class Format { Table, Csv, Json };

struct RunConfig {
    std::string command;
    std::string construction; // thm1..thm4, empty for the preset's or the command's default
    std::string alpha, beta, gamma;
    std::string preset;
    std::int64_t n = 15;
    Format format = Format::Table;
    bool exact = false;
    int degree_cap = exact::kDefaultDegreeCap;
    int threads = 0;
    bool serial = false;

    std::int64_t limit = 100;   // witness
    std::string bfile;          // oeis-check
    std::string offset = "auto";
    std::int64_t count = 200;
    std::string density;        // oeis-check on a single Beatty sequence
    std::string role;           // oeis-check on a member of the partition
    std::string fetch;          // OEIS id to download before checking
    std::int64_t drop = 0;      // verify: remove a term to exercise the checker
};

// A row of the generate command. Thm1 has no b~ column.
struct Row {
    std::int64_t n = 0, a = 0, b = 0;
    std::optional<std::int64_t> bt, b_error;
    std::int64_t c = 0, ct = 0, c_error = 0;

    friend bool operator==(const Row&, const Row&) = default;
};

std::vector<Row> partition_rows(const AlmostBeattyPartition& p, std::int64_t n_max);

std::string render_table(const std::vector<Row>& rows);
std::string render_csv(const std::vector<Row>& rows);
std::vector<Row> parse_csv_rows(const std::string& text);
std::vector<Row> parse_json_rows(const std::string& text);

// Full command line, argv[0] excluded. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace abp::cli
