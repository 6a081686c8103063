#pragma once

#include "rotinv/coeffs.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rotinv {

// One cache document per (kind, j, k, n): a single JSON line with lambda and
// the entries as exact "numerator/denominator" strings keyed "a,b,c".
// Serialization is canonical, so regeneration is byte-identical.
std::string cache_document(const CoeffTable& table);

// Parses and validates one document; throws CacheCorrupt naming the offending
// key on malformed JSON, bad rationals, or a key set that does not match the
// query's index domain.
CoeffTable parse_cache_document(const std::string& line);

// All tables with j <= k <= max_l (both kinds, every valid n), one per line.
std::string build_cache_text(long max_l);

struct CacheManifestEntry {
    CoeffKind kind = CoeffKind::even;
    CoeffQuery query;
    std::size_t entry_count = 0;
    long lambda = 0;
    std::uint64_t checksum = 0;  // FNV-1a over the canonical document
};

std::vector<CacheManifestEntry> inspect_cache_text(const std::string& text);

std::uint64_t fnv1a(const std::string& data);

}  // namespace rotinv
