#include "abp/bfile.hpp"

#include "abp/error.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace abp {

std::optional<exact::Integer> BFile::at(std::int64_t index) const
{
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const Entry& e, std::int64_t i) { return e.index < i; });
    if (it == entries.end() || it->index != index)
        return std::nullopt;
    return it->value;
}

namespace {

bool is_integer_token(const std::string& s)
{
    static const std::regex re("[+-]?[0-9]+");
    return std::regex_match(s, re);
}

} // namespace

BFile parse_bfile(std::istream& in, std::string id)
{
    BFile b;
    b.id = std::move(id);
    std::string line;
    std::int64_t line_no = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::BFileMalformed, "line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string idx, val, extra;
        if (!(fields >> idx))
            continue;
        if (!(fields >> val))
            fail("expected two fields");
        if (fields >> extra)
            fail("unexpected third field '" + extra + "'");
        if (!is_integer_token(idx) || !is_integer_token(val))
            fail("non-integer field");
        exact::Integer index(idx[0] == '+' ? idx.substr(1) : idx);
        if (!index.fits_slong_p())
            fail("index out of range");
        BFile::Entry e{index.get_si(), exact::Integer(val[0] == '+' ? val.substr(1) : val)};
        if (!b.entries.empty() && e.index <= b.entries.back().index)
            fail("indices are not strictly increasing");
        b.entries.push_back(std::move(e));
    }
    if (b.entries.empty())
        throw Error(ErrorKind::BFileMalformed, "no entries");
    return b;
}

BFile read_bfile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::BFileMalformed, "cannot open " + path);
    return parse_bfile(in, bfile_id_from_path(path));
}

std::string bfile_id_from_path(const std::string& path)
{
    static const std::regex re(".*b([0-9]{6})\\.txt");
    std::smatch m;
    if (std::regex_match(path, m, re))
        return "A" + m[1].str();
    return {};
}

std::string bfile_url(const std::string& id)
{
    static const std::regex re("A([0-9]{6})");
    std::smatch m;
    if (!std::regex_match(id, m, re))
        throw Error(ErrorKind::BFileMalformed, "not an OEIS id: " + id);
    return "https://oeis.org/" + id + "/b" + m[1].str() + ".txt";
}

OffsetResolution resolve_offset(const BFile& b, std::int64_t first_term)
{
    const std::size_t window = std::min<std::size_t>(3, b.entries.size());
    for (std::size_t j = 0; j < window; ++j)
        if (b.entries[j].value == exact::to_integer(first_term))
            return {b.entries[j].index - 1, true};
    return {b.entries.front().index - 1, false};
}

MatchReport compare_with_bfile(const BFile& b, const SequenceSource& s, std::int64_t count, std::int64_t offset)
{
    MatchReport r;
    r.count = count;
    r.offset = offset;
    for (std::int64_t n = 1; n <= count; ++n) {
        const std::int64_t g = s.term(n);
        auto expected = b.at(n + offset);
        if (!expected || *expected != exact::to_integer(g)) {
            r.mismatch_at = n;
            r.generated = g;
            r.expected = expected;
            break;
        }
    }
    return r;
}

} // namespace abp
