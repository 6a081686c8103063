#include "rotinv/cache.hpp"
#include "rotinv/errors.hpp"
#include "rotinv/invariant.hpp"
#include "rotinv/oracle.hpp"
#include "rotinv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitCache = 4;
constexpr int kExitUsage = 64;

rotinv::Vec3Rat parse_vector(std::string text) {
    std::erase(text, '(');
    std::erase(text, ')');
    std::erase(text, ' ');
    rotinv::Vec3Rat v;
    std::istringstream in(text);
    std::string part;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(in, part, ',')) throw std::invalid_argument("vector needs three components: " + text);
        v[i] = rotinv::parse_fraction(part);
    }
    if (std::getline(in, part, ',')) throw std::invalid_argument("vector has extra components: " + text);
    return v;
}

std::array<double, 3> to_double(const rotinv::Vec3Rat& v) {
    return {v[0].convert_to<double>(), v[1].convert_to<double>(), v[2].convert_to<double>()};
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string format_complex(double re, double im) {
    if (im == 0.0) return format_double(re);
    if (re == 0.0) return format_double(im) + "i";
    return format_double(re) + (im < 0 ? " - " : " + ") + format_double(std::abs(im)) + "i";
}

int cmd_table(long j, long k, long l, const std::string& format) {
    rotinv::InvariantPoly inv = rotinv::assemble(j, k, l);
    std::cout << rotinv::render(inv, rotinv::parse_render_format(format)) << "\n";
    return kExitOk;
}

int cmd_coeffs(long j, long k, long n, const std::string& kind_name, const std::string& format) {
    rotinv::CoeffQuery q{j, k, n};
    rotinv::validate_query(q);
    bool even = kind_name == "even";
    if (!even && kind_name != "odd") throw std::invalid_argument("kind must be even|odd");
    rotinv::CoeffTable table = even ? rotinv::table_even_closed(q) : rotinv::table_odd_closed(q);

    if (format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::parse(rotinv::cache_document(table));
        doc["sum"] = rotinv::fraction_string(table.sum());
        std::cout << doc.dump() << "\n";
        return kExitOk;
    }
    if (format != "text") throw std::invalid_argument("unknown format '" + format + "' (expected text|json)");
    const char* name = even ? "A" : "B";
    std::cout << "kind = " << rotinv::to_string(table.kind) << ", j = " << j << ", k = " << k
              << ", n = " << n << ", lambda = " << table.lambda << "\n";
    for (const auto& [idx, value] : table.entries)
        std::cout << name << "[" << idx.a << "," << idx.b << "," << idx.c
                  << "] = " << rotinv::fraction_string(value) << "\n";
    std::cout << "sum = " << rotinv::fraction_string(table.sum()) << "\n";
    return kExitOk;
}

int cmd_eval(long j, long k, long l, const std::string& v1, const std::string& v2, const std::string& v3,
             const std::string& mode) {
    rotinv::Vec3Rat r1 = parse_vector(v1), r2 = parse_vector(v2), r3 = parse_vector(v3);
    rotinv::InvariantPoly inv = rotinv::assemble(j, k, l);
    if (mode == "exact") {
        std::cout << rotinv::evaluate(inv, r1, r2, r3).str() << "\n";
        return kExitOk;
    }
    if (mode == "float") {
        auto [re, im] = rotinv::evaluate(inv, r1, r2, r3).to_complex_double();
        std::cout << format_complex(re, im) << "\n";
        return kExitOk;
    }
    if (mode == "appendix") {
        rotinv::SphericalConfig cfg = rotinv::config_from_vectors(to_double(r1), to_double(r2), to_double(r3));
        std::complex<double> value = rotinv::appendix_eval(rotinv::InvariantSpec(j, k, l), cfg);
        std::cout << format_complex(value.real(), value.imag()) << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown mode '" + mode + "' (expected exact|float|appendix)");
}

int cmd_verify(const rotinv::VerifyOptions& options, const std::string& format) {
    std::vector<rotinv::CheckResult> results = rotinv::run_verify(options);
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json row;
            row["spec"] = r.spec;
            row["suite"] = r.suite;
            row["status"] = r.status;
            row["detail"] = r.detail;
            arr.push_back(row);
        }
        std::cout << arr.dump() << "\n";
    } else if (format == "text") {
        std::size_t passed = 0, waived = 0, failed = 0;
        for (const auto& r : results) {
            std::string tag = r.status == "pass" ? "PASS" : r.status == "waived" ? "WAIVED" : "FAIL";
            (r.status == "pass" ? passed : r.status == "waived" ? waived : failed) += 1;
            std::cout << tag << " " << r.suite << " " << r.spec << ": " << r.detail << "\n";
        }
        std::cout << results.size() << " checks: " << passed << " passed, " << waived << " waived, "
                  << failed << " failed\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "' (expected text|json)");
    }
    return rotinv::all_passed(results) ? kExitOk : 1;
}

std::string resolve_cache_path(std::string path) {
    if (!path.empty()) return path;
    if (const char* env = std::getenv("ROTINV_CACHE"); env && *env) return env;
    throw std::invalid_argument("no cache path given and ROTINV_CACHE is not set");
}

int cmd_cache_build(const std::string& path_arg, long max_l) {
    std::string path = resolve_cache_path(path_arg);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open cache file for writing: " + path);
    out << rotinv::build_cache_text(max_l);
    if (!out.flush()) throw std::invalid_argument("failed writing cache file: " + path);
    return kExitOk;
}

int cmd_cache_inspect(const std::string& path_arg) {
    std::string path = resolve_cache_path(path_arg);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open cache file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto manifest = rotinv::inspect_cache_text(buffer.str());
    for (const auto& entry : manifest) {
        char checksum[32];
        std::snprintf(checksum, sizeof checksum, "%016llx",
                      static_cast<unsigned long long>(entry.checksum));
        std::cout << rotinv::to_string(entry.kind) << "(" << entry.query.j << "," << entry.query.k << ","
                  << entry.query.n << ") entries=" << entry.entry_count << " lambda=" << entry.lambda
                  << " checksum=" << checksum << "\n";
    }
    std::cout << manifest.size() << " documents\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rotational invariants of three solid harmonics"};
    app.require_subcommand(1);

    long j = 0, k = 0, l = 0, n = 0;
    std::string format = "text";
    std::string kind = "even";
    std::string mode = "exact";
    std::string v1, v2, v3;
    std::string cache_path;
    long cache_max_l = 6;
    rotinv::VerifyOptions verify_options;

    auto* table = app.add_subcommand("table", "Print the invariant I(j,k,l)");
    table->add_option("j", j)->required();
    table->add_option("k", k)->required();
    table->add_option("l", l)->required();
    table->add_option("--format", format, "text|latex|json");

    auto* coeffs = app.add_subcommand("coeffs", "Print a coefficient table");
    coeffs->add_option("j", j)->required();
    coeffs->add_option("k", k)->required();
    coeffs->add_option("n", n)->required();
    coeffs->add_option("--kind", kind, "even|odd");
    coeffs->add_option("--format", format, "text|json");

    auto* eval = app.add_subcommand("eval", "Evaluate I(j,k,l) at three vectors");
    eval->add_option("j", j)->required();
    eval->add_option("k", k)->required();
    eval->add_option("l", l)->required();
    eval->add_option("r1", v1, "vector, e.g. 1,0,0 or 1/2,-3,0")->required();
    eval->add_option("r2", v2)->required();
    eval->add_option("r3", v3)->required();
    eval->add_option("--mode", mode, "exact|float|appendix");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--max-l", verify_options.max_l, "largest angular momentum label");
    verify->add_option("--suite", verify_options.suite, "all|laplace|oracle|recursion|golden|symmetry");
    verify->add_option("--rotation-tol", verify_options.rotation_tol);
    verify->add_option("--rotations", verify_options.rotations);
    verify->add_option("--seed", verify_options.seed);
    verify->add_option("--format", format, "text|json");

    auto* cache = app.add_subcommand("cache", "Coefficient cache files");
    cache->require_subcommand(1);
    auto* cache_build = cache->add_subcommand("build", "Write all tables with j <= k <= max-l");
    cache_build->add_option("path", cache_path, "cache file (or $ROTINV_CACHE)");
    cache_build->add_option("--max-l", cache_max_l);
    auto* cache_inspect = cache->add_subcommand("inspect", "Validate a cache file and print its manifest");
    cache_inspect->add_option("path", cache_path, "cache file (or $ROTINV_CACHE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*table) return cmd_table(j, k, l, format);
        if (*coeffs) return cmd_coeffs(j, k, n, kind, format);
        if (*eval) return cmd_eval(j, k, l, v1, v2, v3, mode);
        if (*verify) return cmd_verify(verify_options, format);
        if (*cache_build) return cmd_cache_build(cache_path, cache_max_l);
        if (*cache_inspect) return cmd_cache_inspect(cache_path);
    } catch (const rotinv::CacheCorrupt& e) {
        std::cerr << "error: " << e.what() << " (key: " << e.key << ")\n";
        return kExitCache;
    } catch (const rotinv::DegenerateGeometry& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
