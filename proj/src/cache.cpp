#include "rotinv/cache.hpp"

#include "rotinv/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace rotinv {

namespace {

std::string index_key(const CoeffIndex& idx) {
    return std::to_string(idx.a) + "," + std::to_string(idx.b) + "," + std::to_string(idx.c);
}

std::string query_key(CoeffKind kind, const CoeffQuery& q) {
    return std::string(to_string(kind)) + "(" + std::to_string(q.j) + "," + std::to_string(q.k) + "," +
           std::to_string(q.n) + ")";
}

}  // namespace

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string cache_document(const CoeffTable& table) {
    nlohmann::ordered_json doc;
    doc["kind"] = to_string(table.kind);
    doc["j"] = table.query.j;
    doc["k"] = table.query.k;
    doc["n"] = table.query.n;
    doc["lambda"] = table.lambda;
    nlohmann::ordered_json entries;
    for (const auto& [idx, value] : table.entries) entries[index_key(idx)] = fraction_string(value);
    doc["entries"] = entries;
    return doc.dump();
}

CoeffTable parse_cache_document(const std::string& line) {
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw CacheCorrupt("<document>", "cache: unparseable JSON line");

    auto require = [&](const char* field) -> const nlohmann::json& {
        if (!doc.contains(field)) throw CacheCorrupt(field, std::string("cache: missing field '") + field + "'");
        return doc[field];
    };

    CoeffTable table;
    const auto& kind = require("kind");
    if (kind == "even") table.kind = CoeffKind::even;
    else if (kind == "odd") table.kind = CoeffKind::odd;
    else throw CacheCorrupt("kind", "cache: kind must be even|odd");

    for (const char* f : {"j", "k", "n", "lambda"})
        if (!require(f).is_number_integer()) throw CacheCorrupt(f, std::string("cache: field '") + f + "' not an integer");
    table.query = {doc["j"].get<long>(), doc["k"].get<long>(), doc["n"].get<long>()};
    table.lambda = doc["lambda"].get<long>();

    std::string where = query_key(table.kind, table.query);
    try {
        validate_query(table.query);
    } catch (const std::invalid_argument& e) {
        throw CacheCorrupt(where, std::string("cache: ") + e.what());
    }
    if (table.lambda != (table.query.j + table.query.k) / 2 - table.query.n)
        throw CacheCorrupt(where, "cache: lambda does not match (j,k,n)");

    const auto& entries = require("entries");
    if (!entries.is_object()) throw CacheCorrupt(where, "cache: entries must be an object");
    for (const auto& [key, value] : entries.items()) {
        CoeffIndex idx;
        if (std::sscanf(key.c_str(), "%ld,%ld,%ld", &idx.a, &idx.b, &idx.c) != 3)
            throw CacheCorrupt(where + ":" + key, "cache: bad entry key");
        if (!value.is_string()) throw CacheCorrupt(where + ":" + key, "cache: entry value must be a string");
        Rational parsed;
        try {
            parsed = parse_fraction(value.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw CacheCorrupt(where + ":" + key, "cache: bad rational '" + value.get<std::string>() + "'");
        }
        if (!table.entries.emplace(idx, parsed).second)
            throw CacheCorrupt(where + ":" + key, "cache: duplicate entry key");
    }

    auto domain = coeff_domain(table.query);
    if (domain.size() != table.entries.size())
        throw CacheCorrupt(where, "cache: entry count does not match the index domain");
    for (const auto& idx : domain)
        if (!table.entries.contains(idx))
            throw CacheCorrupt(where + ":" + index_key(idx), "cache: missing domain entry");
    return table;
}

std::string build_cache_text(long max_l) {
    std::string out;
    for (CoeffKind kind : {CoeffKind::even, CoeffKind::odd}) {
        for (long j = 0; j <= max_l; ++j) {
            for (long k = j; k <= max_l; ++k) {
                for (long n = 0; 2 * n <= j; ++n) {
                    CoeffQuery q{j, k, n};
                    CoeffTable t = kind == CoeffKind::even ? table_even_closed(q) : table_odd_closed(q);
                    out += cache_document(t);
                    out += '\n';
                }
            }
        }
    }
    return out;
}

std::vector<CacheManifestEntry> inspect_cache_text(const std::string& text) {
    std::vector<CacheManifestEntry> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CoeffTable t = parse_cache_document(line);
        std::string canonical = cache_document(t);
        if (canonical != line)
            throw CacheCorrupt(query_key(t.kind, t.query), "cache: document is not in canonical form");
        out.push_back({t.kind, t.query, t.entries.size(), t.lambda, fnv1a(canonical)});
    }
    return out;
}

}  // namespace rotinv
