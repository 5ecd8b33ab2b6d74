#pragma once

#include "abp/exact/arith.hpp"
#include "abp/sequence.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace abp {

// OEIS b-file: lines "n a(n)", '#' starts a comment.
struct BFile {
    struct Entry {
        std::int64_t index;
        exact::Integer value;
    };

    std::string id;
    std::vector<Entry> entries;

    // Value at the given OEIS index, if present.
    std::optional<exact::Integer> at(std::int64_t index) const;
};

// Throws Error(BFileMalformed) naming the offending line.
BFile parse_bfile(std::istream& in, std::string id = {});
BFile read_bfile(const std::string& path);

// "A000201" from ".../b000201.txt"; empty if the name does not follow the pattern.
std::string bfile_id_from_path(const std::string& path);
// https://oeis.org/A000201/b000201.txt
std::string bfile_url(const std::string& id);

struct OffsetResolution {
    std::int64_t offset = 0; // b-file index = n + offset
    bool aligned = false;    // the first term was found among the first three entries
};

// Aligns the first generated term with one of the first three b-file entries.
// Falls back to the first entry when none matches.
OffsetResolution resolve_offset(const BFile& b, std::int64_t first_term);

struct MatchReport {
    std::int64_t count = 0;
    std::int64_t offset = 0;
    std::int64_t mismatch_at = 0; // first n that differs, 0 on a full match
    std::int64_t generated = 0;
    std::optional<exact::Integer> expected; // empty when the b-file has no entry

    bool ok() const { return mismatch_at == 0; }
};

MatchReport compare_with_bfile(const BFile& b, const SequenceSource& s, std::int64_t count, std::int64_t offset);

} // namespace abp
