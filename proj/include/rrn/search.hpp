#pragma once

/**
 * Height-bounded discovery of solutions.
 *
 * Three routes, all exact:
 *  - quartic_sieve: enumerate x = p/q inside the positivity window and test
 *    the cleared-denominator quartic for perfect-square values.  The inner
 *    loop advances the quartic by fourth-order finite differences in 128-bit
 *    integers (with an automatic big-integer fallback when bounds overflow)
 *    and rejects non-squares by residue tables before any exact test.
 *  - egg_sieve: enumerate u = m/e^2 inside the egg interval and test the
 *    curve cubic for square numerators.
 *  - saturate: translate seed points by torsion and small multiples to
 *    harvest further solutions from known points.
 *
 * Output is a deterministic function of the configuration: strata are
 * processed in canonical order and a time budget can only truncate whole
 * strata.
 */

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rrn/torsion.hpp"
#include "rrn/transform.hpp"

namespace rrn {

struct no_egg_error : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Provenance { QuarticSieve, EggSieve, Saturation };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::QuarticSieve: return "quartic-sieve";
        case Provenance::EggSieve: return "egg-sieve";
        default: return "saturation";
    }
}

struct SearchConfig {
    long denominator_bound = 200;
    long multiple_bound = 3;
    std::optional<double> time_budget_seconds;
};

struct SolutionRecord {
    RatioTarget target;
    std::optional<Triangle> triangle;
    std::optional<Triple> representation;
    CurvePoint point;
    ComponentLabel component;
    Provenance provenance;
    std::optional<int> residue_mod_8;
};

namespace detail {

// Builds a record for a non-degenerate point, enforcing the egg criterion
// and re-deriving the ratio through the radii route as a cross-check.
inline SolutionRecord make_record(const RatioTarget& t, const Curve& c,
                                  const CurvePoint& p, Provenance prov) {
    SolutionOutcome sol = point_to_solution(t, p);
    ComponentLabel comp = component_of(c, p);
    bool has_triangle = sol.kind == SolutionOutcome::Kind::TriangleFound;
    if (has_triangle != (comp == ComponentLabel::EGG))
        throw std::logic_error("triangle/egg correspondence violated");
    if (has_triangle && ratio_via_radii(*sol.triangle) != t.rho())
        throw std::logic_error("radii-route ratio check failed");
    std::optional<int> residue;
    if (t.kind() == RatioTarget::Kind::IntegerN)
        residue = static_cast<int>(mpz_fdiv_ui(t.value().get_mpz_t(), 8));
    return SolutionRecord{t,    sol.triangle, sol.representation, p,
                          comp, prov,         residue};
}

// skips degenerate (torsion-image) points instead of throwing
inline std::optional<SolutionRecord> try_make_record(const RatioTarget& t,
                                                     const Curve& c,
                                                     const CurvePoint& p,
                                                     Provenance prov) {
    try {
        return make_record(t, c, p, prov);
    } catch (const torsion_point_error&) {
        return std::nullopt;
    }
}

using i128 = __int128;

inline Integer i128_to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 a = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    Integer hi(static_cast<unsigned long>(a >> 64));
    Integer r = (hi << 64) + static_cast<unsigned long>(a);
    return neg ? -r : r;
}

inline i128 mpz_to_i128(const Integer& val) {
    Integer a = abs(val);
    Integer hi = a >> 64;
    Integer lo = a - (hi << 64);
    unsigned __int128 m =
        ((unsigned __int128)hi.get_ui() << 64) | (unsigned long)lo.get_ui();
    return val < 0 ? -(i128)m : (i128)m;
}

// residues of squares modulo 64, 63, 65, 11
struct SquareTables {
    bool m64[64]{}, m63[63]{}, m65[65]{}, m11[11]{};
    SquareTables() {
        for (int i = 0; i < 64; ++i) m64[i * i % 64] = true;
        for (int i = 0; i < 63; ++i) m63[i * i % 63] = true;
        for (int i = 0; i < 65; ++i) m65[i * i % 65] = true;
        for (int i = 0; i < 11; ++i) m11[i * i % 11] = true;
    }
};

inline bool maybe_square_i128(i128 v, const SquareTables& tab) {
    if (v < 0)
        return false;
    unsigned __int128 a = (unsigned __int128)v;
    if (!tab.m64[(unsigned)(a & 63)])
        return false;
    return tab.m63[(unsigned)(a % 63)] && tab.m65[(unsigned)(a % 65)] &&
           tab.m11[(unsigned)(a % 11)];
}

struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;
    explicit Deadline(const std::optional<double>& seconds) {
        if (seconds)
            at = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*seconds));
    }
    bool expired() const {
        return at && std::chrono::steady_clock::now() >= *at;
    }
};

}  // namespace detail

/**
 * Sieves x = p/q, 1 <= q <= denominator_bound, 0 < x < 4*rho, for points
 * where the discriminant quartic is a perfect square; each hit is mapped
 * back to curve points and solved for the sides.  Records are deduplicated
 * by primitive triangle and ordered by discovery (q, then p).
 */
inline std::vector<SolutionRecord> quartic_sieve(const RatioTarget& target,
                                                 const SearchConfig& cfg) {
    if (cfg.denominator_bound < 1)
        throw std::domain_error("denominator_bound must be >= 1");
    static const detail::SquareTables tab;
    const Curve curve = curve_for(target);
    const Rational rho = target.rho();
    const Integer a = num(rho), b = den(rho);

    // quartic coefficients, cleared of rho denominators:
    // V = b^2 p^4 - 4b(2a+b) p^3 q + 4(4a^2+8ab+b^2) p^2 q^2 - 16a(4a+b) p q^3
    const Integer C4 = b * b;
    const Integer C3 = 4 * b * (2 * a + b);
    const Integer C2 = 4 * (4 * a * a + 8 * a * b + b * b);
    const Integer C1 = 16 * a * (4 * a + b);

    const long B = cfg.denominator_bound;
    // worst-case |V| for the 128-bit fast path
    Integer pmax = 4 * a * B / b + 1;
    Integer vbound = (C4 * pmax * pmax * pmax * pmax +
                      C3 * pmax * pmax * pmax * B +
                      C2 * pmax * pmax * B * B + C1 * pmax * B * B * B) * 32;
    const bool fast = mpz_sizeinbase(vbound.get_mpz_t(), 2) < 120;

    std::vector<SolutionRecord> out;
    std::set<std::pair<Integer, Integer>> seen_x;
    std::set<std::array<Integer, 3>> seen_triangles;
    detail::Deadline deadline(cfg.time_budget_seconds);

    auto handle_hit = [&](long p, long q) {
        Integer pg = gcd(Integer(p), Integer(q));
        Integer pr = p / pg, qr = q / pg;
        if (!seen_x.insert({pr, qr}).second)
            return;
        Rational x = rat(pr, qr);
        Rational c = x / (4 * rho + 1);
        CurvePoint pick = CurvePoint::infinity();
        bool picked = false;
        for (const CurvePoint& pt : g_over_s_to_points(target, c)) {
            if (pt.u() == pole_u(target))
                continue;
            if (!picked || component_of(curve, pt) == ComponentLabel::EGG) {
                pick = pt;
                picked = true;
                if (component_of(curve, pick) == ComponentLabel::EGG)
                    break;
            }
        }
        if (!picked)
            return;
        auto rec = detail::try_make_record(target, curve, pick,
                                           Provenance::QuarticSieve);
        if (!rec)
            return;
        if (rec->triangle &&
            !seen_triangles.insert(rec->triangle->sorted_sides()).second)
            return;
        out.push_back(std::move(*rec));
    };

    for (long q = 1; q <= B; ++q) {
        if (deadline.expired())
            break;
        // strict window: p/q < 4a/b  <=>  p*b < 4*a*q
        Integer pm_z = (4 * a * q - 1) / b;
        if (pm_z < 1)
            continue;
        long pmax_q = pm_z.get_si();
        if (fast) {
            // fourth-order finite differences of V in p
            detail::i128 v[5];
            for (long i = 0; i < 5; ++i) {
                long p = 1 + i;
                Integer val = ((C4 * p - C3 * q) * p + C2 * q * q) * p * p -
                              C1 * q * q * q * p;
                v[i] = detail::mpz_to_i128(val);
            }
            detail::i128 d1 = v[1] - v[0];
            detail::i128 d2 = v[2] - 2 * v[1] + v[0];
            detail::i128 d3 = v[3] - 3 * v[2] + 3 * v[1] - v[0];
            detail::i128 d4 = v[4] - 4 * v[3] + 6 * v[2] - 4 * v[1] + v[0];
            detail::i128 cur = v[0];
            for (long p = 1; p <= pmax_q; ++p) {
                if (detail::maybe_square_i128(cur, tab)) {
                    Integer val = detail::i128_to_mpz(cur);
                    if (is_perfect_square(val))
                        handle_hit(p, q);
                }
                cur += d1;
                d1 += d2;
                d2 += d3;
                d3 += d4;
            }
        } else {
            Integer val;
            for (long p = 1; p <= pmax_q; ++p) {
                val = ((C4 * p - C3 * q) * p + C2 * q * q) * p * p -
                      C1 * q * q * q * p;
                if (val >= 0 && is_perfect_square(val))
                    handle_hit(p, q);
            }
        }
    }
    return out;
}

/**
 * Sieves u = m/e^2 across the egg interval for square curve values; every hit
 * lies on the egg and therefore carries a triangle.
 */
inline std::vector<SolutionRecord> egg_sieve(const RatioTarget& target,
                                             const SearchConfig& cfg) {
    if (cfg.denominator_bound < 1)
        throw std::domain_error("denominator_bound must be >= 1");
    const Curve curve = curve_for(target);
    RealRoots rr = real_roots(curve);
    if (!rr.egg_exists)
        throw no_egg_error("curve has no egg component");
    double lo = rr.quad_root_approx(-1);
    double hi = rr.quad_root_approx(+1);

    const Integer a2 = num(curve.a2());
    const Integer a4 = num(curve.a4());
    std::vector<SolutionRecord> out;
    std::set<std::array<Integer, 3>> seen_triangles;
    detail::Deadline deadline(cfg.time_budget_seconds);

    for (long e = 1; e <= cfg.denominator_bound; ++e) {
        if (deadline.expired())
            break;
        Integer e2 = Integer(e) * e;
        Integer m_lo(std::floor(lo * e * e) - 2);
        Integer m_hi(std::ceil(hi * e * e) + 2);
        for (Integer m = m_lo; m <= m_hi; ++m) {
            if (m == 0 || gcd(m, Integer(e)) != 1)
                continue;
            Integer w = m * (m * m + a2 * m * e2 + a4 * e2 * e2);
            auto root = is_perfect_square(w);
            if (!root)
                continue;
            CurvePoint p{rat(m, e2), rat(*root, e2 * e)};
            if (component_of(curve, p) != ComponentLabel::EGG)
                continue;
            auto rec = detail::try_make_record(target, curve, p,
                                               Provenance::EggSieve);
            if (!rec)
                continue;
            if (rec->triangle &&
                !seen_triangles.insert(rec->triangle->sorted_sides()).second)
                continue;
            out.push_back(std::move(*rec));
        }
    }
    return out;
}

/**
 * Forms T + n*G for every torsion point T, seed G and |n| <= multiple_bound,
 * and records each distinct non-degenerate point with its component and
 * solution.  The component algebra makes the egg reachable only from odd
 * multiples of egg seeds (possibly torsion-translated).
 */
inline std::vector<SolutionRecord> saturate(const RatioTarget& target,
                                            const std::vector<CurvePoint>& seeds,
                                            const SearchConfig& cfg) {
    if (cfg.multiple_bound < 0)
        throw std::domain_error("multiple_bound must be >= 0");
    const Curve curve = curve_for(target);
    TorsionReport tor = torsion_subgroup(curve);
    std::vector<SolutionRecord> out;
    std::set<std::pair<Rational, Rational>> seen_points;
    for (const CurvePoint& g : seeds) {
        require_on_curve(curve, g);
        for (long n = -cfg.multiple_bound; n <= cfg.multiple_bound; ++n) {
            CurvePoint ng = multiply(curve, n, g);
            for (const auto& [t, ord] : tor.points) {
                CurvePoint p = detail::add_unchecked(curve, t, ng);
                if (p.is_infinity())
                    continue;
                if (!seen_points.insert({p.u(), p.v()}).second)
                    continue;
                if (auto rec = detail::try_make_record(target, curve, p,
                                                       Provenance::Saturation))
                    out.push_back(std::move(*rec));
            }
        }
    }
    return out;
}

struct ScanResult {
    std::vector<SolutionRecord> records;
    // residue class mod 8 -> count, over N values that yielded triangles
    std::map<int, int> residue_histogram;
    std::vector<Integer> triangle_ns;
};

/// Runs the quartic sieve for every N in [n_from, n_to] and aggregates the
/// residue evidence.  Absence of triangles only ever means "none up to bound".
inline ScanResult scan_range(const Integer& n_from, const Integer& n_to,
                             const SearchConfig& cfg) {
    if (n_from < 3 || n_to < n_from)
        throw std::domain_error("scan range requires 3 <= from <= to");
    ScanResult res;
    for (Integer n = n_from; n <= n_to; ++n) {
        auto recs = quartic_sieve(RatioTarget::integer_n(n), cfg);
        bool any_triangle = false;
        for (auto& r : recs) {
            any_triangle = any_triangle || r.triangle.has_value();
            res.records.push_back(std::move(r));
        }
        if (any_triangle) {
            res.triangle_ns.push_back(n);
            ++res.residue_histogram[static_cast<int>(
                mpz_fdiv_ui(n.get_mpz_t(), 8))];
        }
    }
    return res;
}

}  // namespace rrn
