// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one pass/fail line per criterion.

#include "rotinv/golden.hpp"
#include "rotinv/oracle.hpp"
#include "rotinv/verify.hpp"
#include "rotinv/wigner.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace rotinv;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    void finish(bool ok, const std::string& detail) {
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::printf("%s  criterion %d: %s (%s) [%.2fs]\n", ok ? "PASS" : "FAIL", number_,
                    title_.c_str(), detail.c_str(), seconds);
        std::fflush(stdout);
        if (!ok) ++failures;
    }

  private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<InvariantSpec> specs_with_sum_at_most(long total) {
    std::vector<InvariantSpec> out;
    for (long j = 0; j <= total; ++j)
        for (long k = j; k <= total; ++k)
            for (long l = k; l <= std::min(j + k, total - j - k); ++l) out.emplace_back(j, k, l);
    return out;
}

void criterion_golden() {
    Criterion c(1, "golden-table reproduction");
    std::size_t matched = 0, waived = 0;
    std::string first_fail;
    for (const CheckResult& r : run_verify({.max_l = 0, .suite = "golden"})) {
        if (r.status == "pass") ++matched;
        else if (r.status == "waived") ++waived;
        else if (first_fail.empty()) first_fail = r.spec + ": " + r.detail;
    }
    bool ok = first_fail.empty() && matched == 39 && waived == 1;
    c.finish(ok, ok ? std::to_string(matched) + " exact matches, 1 documented waiver I(2,6,7)"
                    : first_fail.empty() ? "unexpected match/waiver counts" : first_fail);
}

void criterion_oracle_equivalence() {
    Criterion c(2, "oracle equivalence for j+k+l <= 14");
    auto specs = specs_with_sum_at_most(14);
    std::string first_fail;
    for (const auto& spec : specs) {
        if (to_cartesian(assemble(spec.j, spec.k, spec.l)) != definition_invariant(spec)) {
            first_fail = spec.label() + " differs from the defining contraction";
            break;
        }
    }
    c.finish(first_fail.empty(),
             first_fail.empty() ? std::to_string(specs.size()) + " specs equal term by term" : first_fail);
}

std::map<InvariantSpec, CartesianPoly> cartesian_cache;

void criterion_harmonicity() {
    Criterion c(3, "harmonicity for j,k <= 6");
    std::string first_fail;
    std::size_t count = 0;
    for (long j = 0; j <= 6; ++j)
        for (long k = j; k <= 6; ++k)
            for (long l = k; l <= j + k; ++l) {
                InvariantSpec spec(j, k, l);
                CartesianPoly cart = to_cartesian(assemble(j, k, l));
                ++count;
                for (int slot = 1; slot <= 3 && first_fail.empty(); ++slot)
                    if (!laplacian(cart, slot).is_zero())
                        first_fail = spec.label() + " has a nonzero laplacian in slot " + std::to_string(slot);
                cartesian_cache.emplace(spec, std::move(cart));
                if (!first_fail.empty()) break;
            }
    c.finish(first_fail.empty(),
             first_fail.empty() ? std::to_string(count) + " specs annihilated by all three laplacians"
                                : first_fail);
}

void criterion_closed_vs_recursive() {
    Criterion c(4, "closed form equals recursion for k <= 8");
    std::string first_fail;
    std::size_t count = 0;
    for (long k = 0; k <= 8 && first_fail.empty(); ++k)
        for (long j = 0; j <= k && first_fail.empty(); ++j)
            for (long n = 0; 2 * n <= j && first_fail.empty(); ++n) {
                CoeffQuery q{j, k, n};
                if (table_even_closed(q).entries != table_even_recursive(q).entries)
                    first_fail = "even tables differ at (" + std::to_string(j) + "," + std::to_string(k) +
                                 "," + std::to_string(n) + ")";
                else if (table_odd_closed(q).entries != table_odd_recursive(q).entries)
                    first_fail = "odd tables differ at (" + std::to_string(j) + "," + std::to_string(k) +
                                 "," + std::to_string(n) + ")";
                count += 2;
            }
    c.finish(first_fail.empty(),
             first_fail.empty() ? std::to_string(count) + " tables identical entry by entry" : first_fail);
}

void criterion_appendix() {
    Criterion c(5, "angle-variable evaluation within 1e-9 for j+k+l <= 12");
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> num(-16, 16);
    auto rational_vector = [&] {
        return Vec3Rat{Rational(num(rng), 8), Rational(num(rng), 8), Rational(num(rng), 8)};
    };
    auto to_dbl = [](const Vec3Rat& v) {
        return std::array<double, 3>{v[0].convert_to<double>(), v[1].convert_to<double>(),
                                     v[2].convert_to<double>()};
    };

    auto specs = specs_with_sum_at_most(12);
    std::string first_fail;
    double worst = 0.0;
    for (const auto& spec : specs) {
        InvariantPoly inv = assemble(spec.j, spec.k, spec.l);
        int done = 0;
        while (done < 100 && first_fail.empty()) {
            Vec3Rat r1 = rational_vector(), r2 = rational_vector(), r3 = rational_vector();
            SphericalConfig cfg;
            try {
                cfg = config_from_vectors(to_dbl(r1), to_dbl(r2), to_dbl(r3), 1e-3);
            } catch (const std::exception&) {
                continue;  // degenerate draw, not a valid configuration
            }
            ++done;
            auto [re, im] = evaluate(inv, r1, r2, r3).to_complex_double();
            std::complex<double> exact{re, im};
            std::complex<double> approx = appendix_eval(spec, cfg);
            // Normalized against the homogeneity scale where the exact value
            // sits at a zero of the invariant (e.g. coplanar odd cases).
            double scale = std::sqrt(std::pow(cfg.xi1, static_cast<double>(spec.j)) *
                                     std::pow(cfg.xi2, static_cast<double>(spec.k)) *
                                     std::pow(cfg.xi3, static_cast<double>(spec.l)));
            double rel = std::abs(approx - exact) / std::max(std::abs(exact), scale);
            worst = std::max(worst, rel);
            if (rel > 1e-9)
                first_fail = spec.label() + " relative error " + std::to_string(rel);
        }
        if (!first_fail.empty()) break;
    }
    char detail[160];
    std::snprintf(detail, sizeof detail, "%zu specs x 100 configurations, worst relative error %.2e",
                  specs.size(), worst);
    c.finish(first_fail.empty(), first_fail.empty() ? detail : first_fail);
}

void criterion_properties() {
    Criterion c(6, "property suites");
    std::string first_fail;

    // 3-j orthogonality, exact, l <= 8: completeness plus fixed-projection sums
    for (long j = 0; j <= 8 && first_fail.empty(); ++j)
        for (long k = j; k <= 8 && first_fail.empty(); ++k)
            for (long l = k; l <= std::min(8L, j + k) && first_fail.empty(); ++l) {
                Rational total = 0;
                for (long mu = -j; mu <= j; ++mu)
                    for (long nu = -k; nu <= k; ++nu) {
                        SurdSum w = wigner3j(j, k, l, mu, nu, -mu - nu);
                        total += (w * w).rational_value();
                    }
                if (total != 1) {
                    first_fail = "3j orthogonality broken at (" + std::to_string(j) + "," +
                                 std::to_string(k) + "," + std::to_string(l) + ")";
                    break;
                }
                for (long rho = -l; rho <= l; ++rho) {
                    Rational column = 0;
                    for (long mu = -j; mu <= j; ++mu) {
                        SurdSum w = wigner3j(j, k, l, mu, -mu - rho, rho);
                        column += (w * w).rational_value();
                    }
                    if (column * Rational(2 * l + 1) != 1) {
                        first_fail = "3j fixed-projection orthogonality broken at (" + std::to_string(j) +
                                     "," + std::to_string(k) + "," + std::to_string(l) + ")";
                        break;
                    }
                }
            }

    // 3-j permutation phases, exact, l <= 8
    for (long j = 0; j <= 8 && first_fail.empty(); ++j)
        for (long k = j; k <= 8 && first_fail.empty(); ++k)
            for (long l = k; l <= std::min(8L, j + k) && first_fail.empty(); ++l)
                for (long mu = -j; mu <= j && first_fail.empty(); ++mu)
                    for (long nu = -k; nu <= k; ++nu) {
                        long rho = -mu - nu;
                        if (std::labs(rho) > l) continue;
                        SurdSum w = wigner3j(j, k, l, mu, nu, rho);
                        SurdSum expected = wigner3j_permutation_phase(j, k, l) < 0 ? -w : w;
                        if (wigner3j(k, j, l, nu, mu, rho) != expected ||
                            wigner3j(j, k, l, -mu, -nu, -rho) != expected) {
                            first_fail = "3j phase broken at (" + std::to_string(j) + "," +
                                         std::to_string(k) + "," + std::to_string(l) + ")";
                            break;
                        }
                    }

    // parity and homogeneity for every built invariant
    for (const auto& [spec, cart] : cartesian_cache) {
        if (!first_fail.empty()) break;
        auto degrees = cart.homogeneous_degrees();
        if (!degrees || *degrees != std::array<int, 3>{static_cast<int>(spec.j), static_cast<int>(spec.k),
                                                       static_cast<int>(spec.l)})
            first_fail = spec.label() + " is not homogeneous of degrees (j,k,l)";
        for (const auto& [m, coef] : cart.terms()) {
            int total = 0;
            for (int e : m) total += e;
            if (total != spec.j + spec.k + spec.l) {
                first_fail = spec.label() + " has a monomial off the parity class";
                break;
            }
        }
    }

    // zeta^2 identity
    if (first_fail.empty() && !zeta_squared_identity_residual().is_zero())
        first_fail = "zeta^2 identity residual is nonzero";

    // rotation invariance, 20 rotations per spec, j+k+l <= 8
    double worst = 0.0;
    if (first_fail.empty()) {
        std::mt19937_64 rng(0x5eed5eed);
        std::normal_distribution<double> gauss;
        std::uniform_real_distribution<double> uni(-2.0, 2.0);
        for (const auto& spec : specs_with_sum_at_most(8)) {
            InvariantPoly inv = assemble(spec.j, spec.k, spec.l);
            for (int trial = 0; trial < 20; ++trial) {
                double qw, qx, qy, qz, norm;
                do {
                    qw = gauss(rng), qx = gauss(rng), qy = gauss(rng), qz = gauss(rng);
                    norm = std::sqrt(qw * qw + qx * qx + qy * qy + qz * qz);
                } while (norm < 1e-6);
                qw /= norm, qx /= norm, qy /= norm, qz /= norm;
                double R[3][3] = {{1 - 2 * (qy * qy + qz * qz), 2 * (qx * qy - qw * qz), 2 * (qx * qz + qw * qy)},
                                  {2 * (qx * qy + qw * qz), 1 - 2 * (qx * qx + qz * qz), 2 * (qy * qz - qw * qx)},
                                  {2 * (qx * qz - qw * qy), 2 * (qy * qz + qw * qx), 1 - 2 * (qx * qx + qy * qy)}};
                std::array<double, 3> v[3], w[3];
                for (auto& vec : v) vec = {uni(rng), uni(rng), uni(rng)};
                for (int i = 0; i < 3; ++i)
                    for (int r = 0; r < 3; ++r)
                        w[i][r] = R[r][0] * v[i][0] + R[r][1] * v[i][1] + R[r][2] * v[i][2];
                std::complex<double> base = evaluate_double(inv, v[0], v[1], v[2]);
                std::complex<double> rotated = evaluate_double(inv, w[0], w[1], w[2]);
                double rel = std::abs(base - rotated) / std::max({std::abs(base), std::abs(rotated), 1e-9});
                worst = std::max(worst, rel);
                if (rel > 1e-10) {
                    first_fail = spec.label() + " rotation relative error " + std::to_string(rel);
                    break;
                }
            }
            if (!first_fail.empty()) break;
        }
    }

    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "3j orthogonality+phases exact; parity/homogeneity on %zu invariants; zeta^2 = 0; "
                  "worst rotation error %.2e",
                  cartesian_cache.size(), worst);
    c.finish(first_fail.empty(), first_fail.empty() ? detail : first_fail);
}

void criterion_integrality() {
    Criterion c(7, "integral coefficient tables for k <= 8");
    std::string first_fail;
    std::size_t entries = 0;
    for (long k = 0; k <= 8 && first_fail.empty(); ++k)
        for (long j = 0; j <= k && first_fail.empty(); ++j)
            for (long n = 0; 2 * n <= j && first_fail.empty(); ++n) {
                CoeffQuery q{j, k, n};
                for (CoeffKind kind : {CoeffKind::even, CoeffKind::odd}) {
                    CoeffTable t = kind == CoeffKind::even ? table_even_closed(q) : table_odd_closed(q);
                    for (const auto& [idx, v] : t.entries) {
                        ++entries;
                        if (denominator(v) != 1) {
                            first_fail = std::string(to_string(kind)) + " entry at (j,k,n,a,b,c)=(" +
                                         std::to_string(j) + "," + std::to_string(k) + "," +
                                         std::to_string(n) + "," + std::to_string(idx.a) + "," +
                                         std::to_string(idx.b) + "," + std::to_string(idx.c) +
                                         ") = " + fraction_string(v);
                            break;
                        }
                    }
                    if (!first_fail.empty()) break;
                }
            }
    c.finish(first_fail.empty(),
             first_fail.empty() ? std::to_string(entries) + " entries, all integers" : first_fail);
}

}  // namespace

int main() {
    criterion_golden();
    criterion_oracle_equivalence();
    criterion_harmonicity();
    criterion_closed_vs_recursive();
    criterion_appendix();
    criterion_properties();
    criterion_integrality();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 7 criteria passed\n");
    return failures ? 1 : 0;
}
