#pragma once

#include <stdexcept>
#include <string>

namespace rotinv {

// Geometry where the azimuth phi is ill-conditioned (collinear vectors).
struct DegenerateGeometry : std::runtime_error {
    explicit DegenerateGeometry(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or inconsistent coefficient-cache content.
struct CacheCorrupt : std::runtime_error {
    CacheCorrupt(std::string key_, const std::string& what)
        : std::runtime_error(what), key(std::move(key_)) {}
    std::string key;
};

}  // namespace rotinv
