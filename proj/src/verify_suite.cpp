#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "heilbronn/cli.hpp"
#include "heilbronn/poly.hpp"
#include "heilbronn/primes.hpp"
#include "heilbronn/reports.hpp"

/* Every check below recomputes its expected value with a deliberately
 * naive method (full scans, inclusion of nothing clever) and compares the
 * library against it. */

namespace heilbronn {

namespace {

// r^e mod q by repeated multiplication; no shortcuts.
uint64_t naive_pow(uint64_t r, unsigned e, uint64_t q)
{
    uint64_t acc = 1 % q;
    for (unsigned i = 0; i < e; ++i)
        acc = acc * (r % q) % q;
    return acc;
}

// evaluate x^n + sum a_i x^i at every residue
bool naive_has_root(const std::vector<int64_t>& coeffs, uint64_t q)
{
    const unsigned n = static_cast<unsigned>(coeffs.size());
    for (uint64_t r = 0; r < q; ++r) {
        uint64_t acc = naive_pow(r, n, q);
        for (unsigned i = 0; i < n; ++i) {
            int64_t c = coeffs[i] % static_cast<int64_t>(q);
            if (c < 0)
                c += static_cast<int64_t>(q);
            acc = (acc + static_cast<uint64_t>(c) * naive_pow(r, i, q)) % q;
        }
        if (acc == 0)
            return true;
    }
    return false;
}

// walk all p^n monic degree-n polynomials over F_p
uint64_t naive_count_rootless(uint64_t p, unsigned n)
{
    std::vector<int64_t> coeffs(n, 0);
    uint64_t count = 0;
    auto walk = [&](auto&& self, unsigned axis) -> void {
        if (axis == n) {
            if (!naive_has_root(coeffs, p))
                ++count;
            return;
        }
        for (uint64_t c = 0; c < p; ++c) {
            coeffs[axis] = static_cast<int64_t>(c);
            self(self, axis + 1);
        }
    };
    walk(walk, 0);
    return count;
}

// Eisenstein tuples among (Z/p^2)^n
uint64_t naive_eisenstein_count_mod_p2(uint64_t p, unsigned n)
{
    const uint64_t p2 = p * p;
    std::vector<uint64_t> coeffs(n, 0);
    uint64_t count = 0;
    auto walk = [&](auto&& self, unsigned axis) -> void {
        if (axis == n) {
            if (coeffs[0] % p != 0 || coeffs[0] % p2 == 0)
                return;
            for (unsigned i = 1; i < n; ++i)
                if (coeffs[i] % p != 0)
                    return;
            ++count;
            return;
        }
        for (uint64_t c = 0; c < p2; ++c) {
            coeffs[axis] = c;
            self(self, axis + 1);
        }
    };
    walk(walk, 0);
    return count;
}

std::set<uint64_t> naive_power_residues(uint64_t p, unsigned n)
{
    std::set<uint64_t> out;
    for (uint64_t x = 1; x < p; ++x)
        out.insert(naive_pow(x, n, p));
    return out;
}

// independent minimal-u scan
std::optional<std::pair<uint64_t, uint64_t>> naive_decompose(uint64_t p,
                                                             uint64_t q1,
                                                             uint64_t q2)
{
    for (uint64_t u = 1; u * q1 < p; ++u) {
        if (std::gcd(u, q1) != 1)
            continue;
        uint64_t rest = p - u * q1;
        if (rest % q2 != 0)
            continue;
        uint64_t v = rest / q2;
        if (v == 0 || std::gcd(v, q2) != 1)
            continue;
        return std::make_pair(u, v);
    }
    return std::nullopt;
}

struct Item {
    std::string name;
    std::function<bool()> check;
};

std::vector<Item> build_suite()
{
    std::vector<Item> items;
    auto add = [&](std::string name, std::function<bool()> fn) {
        items.push_back({std::move(name), std::move(fn)});
    };

    // --- root detection ---------------------------------------------------
    add("root-scan x^3+5x+5 mod 2 (none)", [] {
        std::vector<int64_t> f{5, 5, 0};
        return naive_has_root(f, 2) == false && has_root_mod(f, 2) == false;
    });
    add("root-scan x^3+5x+5 mod 3 (none)", [] {
        std::vector<int64_t> f{5, 5, 0};
        return naive_has_root(f, 3) == false && has_root_mod(f, 3) == false;
    });
    add("root-scan x^3+5x^2+5x+5 mod 2 (at 1)", [] {
        std::vector<int64_t> f{5, 5, 5};
        return naive_has_root(f, 2) && has_root_mod(f, 2);
    });
    add("root-scan agreement on a sample family", [] {
        uint64_t state = 0x9e3779b97f4a7c15ULL;
        auto next = [&] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (int trial = 0; trial < 300; ++trial) {
            unsigned n = 1 + next() % 6;
            std::vector<int64_t> f(n);
            for (auto& c : f)
                c = static_cast<int64_t>(next() % 2001) - 1000;
            for (uint32_t q : {2, 3, 5, 7, 11})
                if (naive_has_root(f, q) != has_root_mod(f, q))
                    return false;
        }
        return true;
    });

    // --- rootless counts and densities ------------------------------------
    add("rootless count p=2 n=2 equals full scan (1)", [] {
        return naive_count_rootless(2, 2) == 1 && count_rootless(2, 2) == 1;
    });
    add("rootless count p=5 n=3 equals full scan (40)", [] {
        return naive_count_rootless(5, 3) == 40 && count_rootless(5, 3) == 40;
    });
    add("rootless count p=3 n=5 equals closed form (72)", [] {
        return count_rootless(3, 5) == 72
               && naive_count_rootless(3, 5) == 72;
    });
    add("rootless density values 1/4, 8/27, 8/25", [] {
        return rootless_density(2, 4) == Rational(1, 4)
               && rootless_density(3, 6) == Rational(8, 27)
               && rootless_density(5, 3) == Rational(8, 25);
    });
    add("Eisenstein density p=5 n=3 equals mod-25 scan (4/625)", [] {
        uint64_t hits = naive_eisenstein_count_mod_p2(5, 3);
        return Rational(BigInt(hits), bigint_pow(BigInt(25), 3)) == Rational(4, 625)
               && eisenstein_density(5, 3) == Rational(4, 625);
    });
    add("Eisenstein density p=2 n=2 equals mod-4 scan (1/8)", [] {
        uint64_t hits = naive_eisenstein_count_mod_p2(2, 2);
        return Rational(BigInt(hits), 16) == Rational(1, 8)
               && eisenstein_density(2, 2) == Rational(1, 8);
    });
    add("Eisenstein density p=3 n=1 equals mod-9 scan (2/9)", [] {
        uint64_t hits = naive_eisenstein_count_mod_p2(3, 1);
        return Rational(BigInt(hits), 9) == Rational(2, 9)
               && eisenstein_density(3, 1) == Rational(2, 9);
    });

    // --- tail-certified product -------------------------------------------
    add("truncated product n=2 B=2 gives lo = 1/8", [] {
        return dubickas_density(2, 2).lo == Rational(1, 8);
    });
    add("truncated product n=2 B=3 gives lo = 41/216", [] {
        return dubickas_density(2, 3).lo == Rational(41, 216);
    });
    add("enclosures nest as the cutoff grows", [] {
        auto a = dubickas_density(2, 2);
        auto b = dubickas_density(2, 3);
        auto c = dubickas_density(2, 5);
        return a.contains(b) && b.contains(c);
    });

    // --- bound pair ---------------------------------------------------------
    add("density bounds at p=2, 5, 7", [] {
        auto b2 = density_bounds(2, 3);
        auto b5 = density_bounds(5, 3);
        auto b7 = density_bounds(7, 3);
        return b2.lower == Rational(1, 4) && b2.upper == Rational(1, 4)
               && b5.lower == Rational(8, 25) && b5.upper == Rational(2, 5)
               && b7.lower == Rational(16, 49) && b7.upper == Rational(3, 7)
               && rootless_density(7, 2) == Rational(3, 7);
    });

    // --- effective bounds ----------------------------------------------------
    add("epsilon(5) = 1 and epsilon(17) = 3/2", [] {
        return epsilon(5) == Rational(1) && epsilon(17) == Rational(3, 2);
    });
    add("epsilon(10^8+7) = 26 (3/4)^25 with sieve pi", [] {
        Rational expected = Rational(26) * rational_pow(Rational(3, 4), 25);
        uint64_t naive_pi = 0;
        for (uint32_t m = 2; m <= 100; ++m) {
            bool prime = true;
            for (uint32_t d = 2; d * d <= m; ++d)
                if (m % d == 0)
                    prime = false;
            naive_pi += prime;
        }
        return naive_pi == 25 && epsilon(100000007ULL) == expected;
    });
    add("epsilon_hat cutoffs 1 and 10", [] {
        return epsilon_hat(101, 1.0) == Rational(1)
               && epsilon_hat(101, 10.0) == Rational(405, 256);
    });

    // --- decompositions -------------------------------------------------------
    add("decompose 5 = 2+3 at u=1", [] {
        auto d = frobenius_decompose(5, 2, 3);
        auto naive = naive_decompose(5, 2, 3);
        return d && naive && d->u == 1 && d->v == 1 && naive->first == 1;
    });
    add("decompose 37 over (2,3) at u=11", [] {
        auto d = frobenius_decompose(37, 2, 3);
        auto naive = naive_decompose(37, 2, 3);
        return d && naive && d->u == naive->first && d->v == naive->second
               && d->u == 11 && d->v == 5;
    });
    add("7, 11, 19 admit no (2,3) split", [] {
        for (uint64_t p : {7, 11, 19})
            if (frobenius_decompose(p, 2, 3) || naive_decompose(p, 2, 3))
                return false;
        return true;
    });
    add("repair of q2 | v over p <= 500", [] {
        for (uint64_t p : {31, 41, 101, 149, 211, 307, 401, 499}) {
            if (!is_prime(p))
                return false;
            for (auto [q1, q2] : {std::pair<uint64_t, uint64_t>{2, 3},
                                  std::pair<uint64_t, uint64_t>{3, 5}}) {
                // build genuine q2|v inputs from the raw congruence scan
                for (uint64_t u = 1; u * q1 + 2 * q1 * q2 < p; ++u) {
                    if (u % q1 == 0 || (p - u * q1) % q2 != 0)
                        continue;
                    uint64_t v = (p - u * q1) / q2;
                    if (v % q2 != 0)
                        continue;
                    Decomposition fixed =
                        adjust_for_criterion(Decomposition{p, q1, q2, u, v});
                    if (!fixed.valid() || fixed.p != p)
                        return false;
                    uint64_t shift = fixed.u - u;
                    if (shift != 0 && shift != q2 && shift != 2 * q2)
                        return false;
                }
            }
        }
        return true;
    });

    // --- power residues ---------------------------------------------------------
    add("cubes mod 7 are {1,6}; 2 is not one", [] {
        auto cubes = naive_power_residues(7, 3);
        return cubes == std::set<uint64_t>{1, 6}
               && !is_nth_power_residue(uint64_t(2), 7, 3);
    });
    add("3 is a square mod 13 (4^2 = 16)", [] {
        return naive_power_residues(13, 2).count(3) == 1
               && is_nth_power_residue(uint64_t(3), 13, 2);
    });
    add("residue subgroup sizes match (p-1)/g", [] {
        for (uint64_t p : {5, 7, 11, 13, 17}) {
            for (unsigned n = 1; n <= 6; ++n) {
                auto set = naive_power_residues(p, n);
                if (set.size() != (p - 1) / std::gcd(p - 1, uint64_t(n)))
                    return false;
                for (uint64_t a = 1; a < p; ++a)
                    if (is_nth_power_residue(a, p, n) != (set.count(a) == 1))
                        return false;
            }
        }
        return true;
    });

    // --- the criterion ------------------------------------------------------------
    add("x^3+5x+5 at p=5: applies with 5 = 2 + 3", [] {
        auto f = MonicIntPolynomial::from_text("5,5,0");
        auto verdict = criterion_verdict(f, 5, 3);
        if (!verdict.applies())
            return false;
        const auto& w = *verdict.witness;
        return w.q1 == 2 && w.q2 == 3 && w.u == 1 && w.v == 1 && w.a == 2
               && w.b == 3 && w.g == 1 && verify_witness(f, w);
    });
    add("x^3+5x^2+5x+5 at p=5: blocked by roots", [] {
        auto f = MonicIntPolynomial::from_text("5,5,5");
        auto verdict = criterion_verdict(f, 5, 3);
        return !verdict.applies()
               && *verdict.reason == InconclusiveReason::all_pairs_have_roots;
    });
    add("x^3+7x+7 at p=7, bound 3: no usable pair", [] {
        auto f = MonicIntPolynomial::from_text("7,7,0");
        auto verdict = criterion_verdict(f, 7, 3);
        return !verdict.applies()
               && *verdict.reason == InconclusiveReason::no_prime_pair;
    });
    add("p=7 bound 5: the (2,5) split is reachable", [] {
        CriterionEngine engine(7, 3, 5);
        for (const auto& ps : engine.pairs())
            if (ps.q1 == 2 && ps.q2 == 5)
                return ps.gap != InconclusiveReason::no_prime_pair
                       || ps.usable.has_value();
        return false;
    });

    // --- constrained search -----------------------------------------------------------
    add("admissible count p=101 n=3 (2,3) is 8", [] {
        uint64_t naive = 0;
        for (uint64_t u = 1; 2 * u < 101 - 12; ++u)
            if (u % 2 == 1 && (2 * u) % 3 == 101 % 3)
                ++naive;
        return naive == 8 && count_admissible(101, 3, 2, 3) == 8;
    });
    add("admissible count p=101 n=2 (2,3) matches square scan", [] {
        auto squares = naive_power_residues(101, 2);
        uint64_t naive = 0;
        for (uint64_t u = 1; 2 * u < 101 - 12; ++u)
            if (u % 2 == 1 && (2 * u) % 3 == 101 % 3
                && squares.count(2 * u % 101))
                ++naive;
        return count_admissible(101, 2, 2, 3) == naive;
    });
    add("search p=101 n=2 (2,3) returns the minimal admissible u", [] {
        auto squares = naive_power_residues(101, 2);
        uint64_t expect = 0;
        for (uint64_t u = 1; 2 * u < 101 - 12; ++u) {
            if (u % 2 == 1 && (2 * u) % 3 == 101 % 3
                && squares.count(2 * u % 101)) {
                expect = u;
                break;
            }
        }
        auto res = theorem2_witness(101, 2, 2, 3);
        return expect != 0 && res.outcome == Theorem2Result::Outcome::found
               && res.pre_adjust_u == expect && res.decomp->valid();
    });
    add("search p=13 n=2 (2,3): range is empty", [] {
        auto res = theorem2_witness(13, 2, 2, 3);
        return res.outcome == Theorem2Result::Outcome::p_too_small
               && count_admissible(13, 2, 2, 3) == 0;
    });
    add("search p=5 n=3 (2,3): free residue case gives (1,1)", [] {
        auto res = theorem2_witness(5, 3, 2, 3);
        return res.outcome == Theorem2Result::Outcome::found
               && res.decomp->u == 1 && res.decomp->v == 1;
    });
    add("expected counts at p=101", [] {
        auto a = main_term_and_error(101, 3, 2, 3, 1.0);
        auto b = main_term_and_error(101, 2, 2, 3, 1.0);
        return std::abs(a.main - 44.5 / 6.0) < 1e-9
               && std::abs(b.main - 44.5 / 12.0) < 1e-9;
    });

    // --- aligned boxes -------------------------------------------------------------------
    add("aligned count p=5 rootless {2,3} k=1 is 12800, both routes", [] {
        LocalSpec spec(5, 3, {2, 3}, {});
        auto c = exact_count_aligned(spec, 1);
        return c.count == 12800 && c.enumeration_verified;
    });
    add("aligned count p=5 no conditions k=1 is 172800", [] {
        LocalSpec spec(5, 3, {}, {});
        auto c = exact_count_aligned(spec, 6); // m = 25, same box edge 300
        return c.count == 172800 && c.enumeration_verified;
    });
    add("smooth term matches the aligned count at X=150", [] {
        LocalSpec spec(5, 3, {2, 3}, {});
        return main_term(spec, 150) == Rational(12800);
    });
    add("rooted-complement count p=5 {2} X=150 is 129600", [] {
        LocalSpec spec(5, 3, {}, {2}); // m = 50, so k = 3 reaches X = 150
        // complement rule: 172800 total splits 1:3 between rootless and rooted
        return main_term(spec, 150) == Rational(129600)
               && exact_count_aligned(spec, 3).count == 129600;
    });

    // --- surveys ------------------------------------------------------------------------
    add("exhaustive p=5 n=3 X=150: 12800 of 172800, exactly 2/27", [] {
        auto r = exhaustive_survey(5, 3, 150, 3, 100000000, 1);
        return r.total == 172800 && r.applies == 12800
               && r.delta == Rational(2, 27);
    });
    add("seeded runs are reproducible", [] {
        auto a = montecarlo_survey(5, 3, 1000, 3, 42, 5000);
        auto b = montecarlo_survey(5, 3, 1000, 3, 42, 5000);
        a.wall_seconds = b.wall_seconds = 0;
        return a == b;
    });
    add("lower bound p=5 n=3 is 2/27", [] {
        auto r = lower_bound_report(5, 3);
        return r.t1_applicable && r.bound_t1 == Rational(2, 27);
    });
    add("lower bound p=10^8+7 n=3 is 1 - 26 (3/4)^25", [] {
        auto r = lower_bound_report(100000007ULL, 3);
        Rational expected = 1 - Rational(26) * rational_pow(Rational(3, 4), 25);
        return r.t1_applicable && r.bound_t1 == expected;
    });

    return items;
}

} // namespace

int run_verify_suite(std::ostream& out)
{
    int failures = 0;
    for (const Item& item : build_suite()) {
        bool ok = false;
        try {
            ok = item.check();
        } catch (const std::exception& e) {
            out << "FAIL " << item.name << " (exception: " << e.what() << ")\n";
            ++failures;
            continue;
        }
        if (ok) {
            out << "ok   " << item.name << '\n';
        } else {
            out << "FAIL " << item.name << '\n';
            ++failures;
        }
    }
    out << (failures == 0 ? "all checks passed"
                          : std::to_string(failures) + " check(s) failed")
        << '\n';
    return failures;
}

} // namespace heilbronn
