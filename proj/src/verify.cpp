#include "rotinv/verify.hpp"

#include "rotinv/golden.hpp"
#include "rotinv/oracle.hpp"
#include "rotinv/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <stdexcept>

namespace rotinv {

std::vector<InvariantSpec> canonical_specs(long max_l) {
    std::vector<InvariantSpec> out;
    for (long j = 0; j <= max_l; ++j)
        for (long k = j; k <= max_l; ++k)
            for (long l = k; l <= std::min(max_l, j + k); ++l) out.emplace_back(j, k, l);
    return out;
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    double w, x, y, z, norm;
    do {
        w = gauss(rng);
        x = gauss(rng);
        y = gauss(rng);
        z = gauss(rng);
        norm = std::sqrt(w * w + x * x + y * y + z * z);
    } while (norm < 1e-6);
    w /= norm;
    x /= norm;
    y /= norm;
    z /= norm;
    return Mat3{{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                 {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                 {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

std::array<double, 3> rotate_vec(const Mat3& m, const std::array<double, 3>& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

std::array<double, 3> random_vector(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    return {uni(rng), uni(rng), uni(rng)};
}

std::string table_label(CoeffKind kind, const CoeffQuery& q) {
    return std::string(to_string(kind)) + "(" + std::to_string(q.j) + "," + std::to_string(q.k) + "," +
           std::to_string(q.n) + ")";
}

void check_laplace(std::vector<CheckResult>& out, const std::vector<InvariantSpec>& specs) {
    for (const auto& spec : specs) {
        CartesianPoly cart = to_cartesian(assemble(spec.j, spec.k, spec.l));
        std::string bad;
        for (int slot = 1; slot <= 3; ++slot)
            if (!laplacian(cart, slot).is_zero()) bad += (bad.empty() ? "slot " : ", ") + std::to_string(slot);
        out.push_back({spec.label(), "laplace", bad.empty() ? "pass" : "fail",
                       bad.empty() ? "laplacian vanishes in all three vectors" : "nonzero laplacian: " + bad});
    }
}

void check_oracle(std::vector<CheckResult>& out, const std::vector<InvariantSpec>& specs) {
    for (const auto& spec : specs) {
        bool ok = to_cartesian(assemble(spec.j, spec.k, spec.l)) == definition_invariant(spec);
        out.push_back({spec.label(), "oracle", ok ? "pass" : "fail",
                       ok ? "matches the defining contraction exactly"
                          : "differs from the defining contraction"});
    }
}

void check_recursion(std::vector<CheckResult>& out, long max_l) {
    for (long j = 0; j <= max_l; ++j) {
        for (long k = j; k <= max_l; ++k) {
            for (long n = 0; 2 * n <= j; ++n) {
                CoeffQuery q{j, k, n};
                for (CoeffKind kind : {CoeffKind::even, CoeffKind::odd}) {
                    CoeffTable closed =
                        kind == CoeffKind::even ? table_even_closed(q) : table_odd_closed(q);
                    CoeffTable recursive =
                        kind == CoeffKind::even ? table_even_recursive(q) : table_odd_recursive(q);
                    std::string why;
                    if (closed.entries != recursive.entries) why = "closed form differs from recursion";
                    if (why.empty()) {
                        for (const auto& [idx, v] : closed.entries) {
                            for (int rel = 1; rel <= 3 && why.empty(); ++rel)
                                if (recursion_residual(closed, rel, idx.a, idx.b, idx.c) != 0)
                                    why = "relation " + std::to_string(rel) + " residual nonzero at a=" +
                                          std::to_string(idx.a) + " b=" + std::to_string(idx.b) +
                                          " c=" + std::to_string(idx.c);
                            if (!why.empty()) break;
                        }
                    }
                    if (why.empty()) {
                        for (const auto& [idx, v] : closed.entries) {
                            if (denominator(v) != 1) {
                                why = "non-integer entry at a=" + std::to_string(idx.a) + " b=" +
                                      std::to_string(idx.b) + " c=" + std::to_string(idx.c) + ": " +
                                      fraction_string(v);
                                break;
                            }
                        }
                    }
                    out.push_back({table_label(kind, q), "recursion", why.empty() ? "pass" : "fail",
                                   why.empty() ? "closed = recursive, residuals vanish, entries integral"
                                               : why});
                }
            }
        }
    }
}

void check_golden(std::vector<CheckResult>& out) {
    for (const GoldenEntry& entry : golden_entries()) {
        InvariantPoly built = assemble(entry.j, entry.k, entry.l);
        bool printed_match =
            built.coefficient_map() == entry.coefficient_map() && built.zeta_power == entry.zeta_power;
        if (!entry.waiver) {
            out.push_back({entry.label(), "golden", printed_match ? "pass" : "fail",
                           printed_match ? "matches the published entry exactly"
                                         : "differs from the published entry"});
            continue;
        }
        if (printed_match) {
            out.push_back({entry.label(), "golden", "fail",
                           "waiver expected (" + entry.waiver_note + ") but the printed form matched"});
            continue;
        }
        GoldenEntry patched = entry;
        patched.scalar *= ComplexSurd(SurdSum(), SurdSum(1));  // times i
        patched.zeta_power += 1;
        bool patched_match =
            built.coefficient_map() == patched.coefficient_map() && built.zeta_power == patched.zeta_power;
        out.push_back({entry.label(), "golden", patched_match ? "waived" : "fail",
                       patched_match ? entry.waiver_note + "; i zeta times the printed entry matches"
                                     : "neither the printed entry nor i zeta times it matches"});
    }
}

void check_symmetry(std::vector<CheckResult>& out, const std::vector<InvariantSpec>& specs,
                    const VerifyOptions& options) {
    long lmax = std::min(options.max_l, 8L);

    {  // 3-j orthogonality, exact: completeness and the fixed-projection sums
        std::string why;
        long checked = 0;
        for (long j = 0; j <= lmax && why.empty(); ++j)
            for (long k = j; k <= lmax && why.empty(); ++k)
                for (long l = k; l <= std::min(lmax, j + k) && why.empty(); ++l) {
                    Rational total = 0;
                    for (long mu = -j; mu <= j; ++mu)
                        for (long nu = -k; nu <= k; ++nu) {
                            SurdSum w = wigner3j(j, k, l, mu, nu, -mu - nu);
                            total += (w * w).rational_value();
                        }
                    ++checked;
                    if (total != 1) {
                        why = "sum of squares = " + fraction_string(total) + " at (" + std::to_string(j) +
                              "," + std::to_string(k) + "," + std::to_string(l) + ")";
                        break;
                    }
                    for (long rho = -l; rho <= l && why.empty(); ++rho) {
                        Rational column = 0;
                        for (long mu = -j; mu <= j; ++mu) {
                            SurdSum w = wigner3j(j, k, l, mu, -mu - rho, rho);
                            column += (w * w).rational_value();
                        }
                        if (column * Rational(2 * l + 1) != 1)
                            why = "fixed-projection sum off at (" + std::to_string(j) + "," +
                                  std::to_string(k) + "," + std::to_string(l) + ";rho=" +
                                  std::to_string(rho) + ")";
                    }
                }
        out.push_back({"-", "symmetry", why.empty() ? "pass" : "fail",
                       why.empty() ? "3j orthogonality exact over " + std::to_string(checked) + " triples"
                                   : why});
    }

    {  // 3-j permutation and sign-flip phases, exact
        std::string why;
        for (long j = 0; j <= lmax && why.empty(); ++j)
            for (long k = j; k <= std::min(lmax, j + 2) && why.empty(); ++k)
                for (long l = k; l <= std::min(lmax, j + k) && why.empty(); ++l)
                    for (long mu = -j; mu <= j && why.empty(); ++mu)
                        for (long nu = -k; nu <= k && why.empty(); ++nu) {
                            long rho = -mu - nu;
                            if (std::abs(rho) > l) continue;
                            SurdSum w = wigner3j(j, k, l, mu, nu, rho);
                            int phase = wigner3j_permutation_phase(j, k, l);
                            SurdSum swapped = wigner3j(k, j, l, nu, mu, rho);
                            SurdSum flipped = wigner3j(j, k, l, -mu, -nu, -rho);
                            SurdSum expected = phase < 0 ? -w : w;
                            if (swapped != expected || flipped != expected)
                                why = "phase mismatch at (" + std::to_string(j) + "," + std::to_string(k) +
                                      "," + std::to_string(l) + ";" + std::to_string(mu) + "," +
                                      std::to_string(nu) + ")";
                        }
        out.push_back({"-", "symmetry", why.empty() ? "pass" : "fail",
                       why.empty() ? "3j column-swap and sign-flip phases exact" : why});
    }

    {  // zeta^2 identity
        bool ok = zeta_squared_identity_residual().is_zero();
        out.push_back({"-", "symmetry", ok ? "pass" : "fail",
                       ok ? "zeta^2 identity expands to the zero polynomial"
                          : "zeta^2 identity residual is nonzero"});
    }

    for (const auto& spec : specs) {  // parity and homogeneity on the Cartesian form
        CartesianPoly cart = to_cartesian(assemble(spec.j, spec.k, spec.l));
        auto degrees = cart.homogeneous_degrees();
        bool ok = degrees.has_value() &&
                  (cart.is_zero() || (*degrees == std::array<int, 3>{static_cast<int>(spec.j),
                                                                     static_cast<int>(spec.k),
                                                                     static_cast<int>(spec.l)}));
        // Parity: every monomial's total degree j+k+l fixes the sign under
        // negating all nine components, so homogeneity implies it; check the sum.
        out.push_back({spec.label(), "symmetry", ok ? "pass" : "fail",
                       ok ? "homogeneous of degrees (j,k,l); parity (-1)^(j+k+l)"
                          : "per-vector degrees do not match (j,k,l)"});
    }

    {  // rotation invariance, numeric
        std::mt19937_64 rng(options.seed);
        for (const auto& spec : specs) {
            if (spec.j + spec.k + spec.l > 8) continue;
            InvariantPoly inv = assemble(spec.j, spec.k, spec.l);
            double worst = 0.0;
            for (int trial = 0; trial < options.rotations; ++trial) {
                auto r1 = random_vector(rng), r2 = random_vector(rng), r3 = random_vector(rng);
                Mat3 rot = random_rotation(rng);
                std::complex<double> base = evaluate_double(inv, r1, r2, r3);
                std::complex<double> rotated = evaluate_double(inv, rotate_vec(rot, r1), rotate_vec(rot, r2), rotate_vec(rot, r3));
                double denom = std::max({std::abs(base), std::abs(rotated), 1e-9});
                worst = std::max(worst, std::abs(base - rotated) / denom);
            }
            bool ok = worst <= options.rotation_tol;
            out.push_back({spec.label(), "symmetry", ok ? "pass" : "fail",
                           "rotation invariance worst relative error " + std::to_string(worst)});
        }
    }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    if (options.max_l < 0) throw std::invalid_argument("verify: max-l must be non-negative");
    static const std::set<std::string> known{"all", "laplace", "oracle", "recursion", "golden", "symmetry"};
    if (!known.contains(options.suite))
        throw std::invalid_argument("unknown suite '" + options.suite +
                                    "' (expected all|laplace|oracle|recursion|golden|symmetry)");
    auto want = [&](const char* name) { return options.suite == "all" || options.suite == name; };

    std::vector<CheckResult> out;
    std::vector<InvariantSpec> specs = canonical_specs(options.max_l);
    if (want("laplace")) check_laplace(out, specs);
    if (want("oracle")) check_oracle(out, specs);
    if (want("recursion")) check_recursion(out, options.max_l);
    if (want("golden")) check_golden(out);
    if (want("symmetry")) check_symmetry(out, specs, options);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.status != "fail"; });
}

}  // namespace rotinv
