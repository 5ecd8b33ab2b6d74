#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "abp/cli/fetch.hpp"

#include "abp/bfile.hpp"

#include <httplib.h>

#include <stdexcept>

namespace abp::cli {

std::string fetch_bfile(const std::string& id)
{
    const std::string url = bfile_url(id);
    const std::string host = "https://oeis.org";
    httplib::Client client(host);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(url.substr(host.size()));
    if (!res)
        throw std::runtime_error("download of " + url + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw std::runtime_error("download of " + url + " returned HTTP " + std::to_string(res->status));
    return res->body;
}

} // namespace abp::cli
