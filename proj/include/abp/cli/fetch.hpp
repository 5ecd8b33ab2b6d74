#pragma once

#include <string>

namespace abp::cli {

// Downloads a b-file over HTTPS. Throws std::runtime_error on failure.
std::string fetch_bfile(const std::string& id);

} // namespace abp::cli
