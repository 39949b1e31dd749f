#include "heilbronn/survey.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "heilbronn/poly.hpp"
#include "heilbronn/primes.hpp"

namespace heilbronn {

LocalSpec::LocalSpec(uint64_t p_, unsigned n_, std::vector<uint32_t> rootless,
                     std::vector<uint32_t> rooted)
    : p(p_)
    , n(n_)
    , rootless_at(std::move(rootless))
    , rooted_at(std::move(rooted))
{
    if (!is_prime(p))
        throw precondition_error("local spec needs a prime p");
    if (n < 1)
        throw precondition_error("local spec needs n >= 1");
    std::sort(rootless_at.begin(), rootless_at.end());
    std::sort(rooted_at.begin(), rooted_at.end());
    auto check_primes = [&](const std::vector<uint32_t>& qs) {
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (!is_prime(qs[i]))
                throw precondition_error("local spec conditions need primes");
            if (qs[i] >= p)
                throw precondition_error("local spec conditions need q < p");
            if (i && qs[i] == qs[i - 1])
                throw precondition_error("duplicate prime in local spec");
        }
    };
    check_primes(rootless_at);
    check_primes(rooted_at);
    for (uint32_t q : rootless_at)
        if (std::binary_search(rooted_at.begin(), rooted_at.end(), q))
            throw precondition_error("rootless and rooted sets must be disjoint");
}

BigInt LocalSpec::modulus() const
{
    BigInt m = BigInt(p) * p;
    for (uint32_t q : rootless_at)
        m *= q;
    for (uint32_t q : rooted_at)
        m *= q;
    return m;
}

Rational LocalSpec::density() const
{
    Rational d = eisenstein_density(p, n);
    for (uint32_t q : rootless_at)
        d *= rootless_density(q, n);
    for (uint32_t q : rooted_at)
        d *= 1 - rootless_density(q, n);
    return d;
}

namespace {

constexpr uint64_t kMaxSurveyHeight = 4000000000000000000ULL; // int64 headroom

// Count tuples in (-bound, bound]^n meeting the spec, by walking only the
// Eisenstein-admissible coefficients (stride p on every axis).
BigInt enumerate_box(const LocalSpec& spec, int64_t bound)
{
    const auto p = static_cast<int64_t>(spec.p);
    const int64_t t_hi = bound / p;        // a = p*t <= bound
    const int64_t t_lo = -((bound - 1) / p); // a > -bound

    std::vector<int64_t> coeffs(spec.n, 0);
    BigInt count = 0;

    auto satisfies = [&]() {
        for (uint32_t q : spec.rootless_at)
            if (has_root_mod(coeffs, q))
                return false;
        for (uint32_t q : spec.rooted_at)
            if (!has_root_mod(coeffs, q))
                return false;
        return true;
    };

    auto walk = [&](auto&& self, unsigned axis) -> void {
        if (axis == spec.n) {
            if (satisfies())
                ++count;
            return;
        }
        for (int64_t t = t_lo; t <= t_hi; ++t) {
            if (axis == 0 && t % p == 0)
                continue; // p^2 must not divide a_0
            coeffs[axis] = t * p;
            self(self, axis + 1);
        }
    };
    walk(walk, 0);
    return count;
}

} // namespace

AlignedCount exact_count_aligned(const LocalSpec& spec, uint64_t k,
                                 uint64_t enumeration_cap)
{
    if (k < 1)
        throw precondition_error("exact_count_aligned needs k >= 1");

    const BigInt m = spec.modulus();
    const BigInt edge = 2 * k * m;
    Rational exact = spec.density() * rational_pow(Rational(edge), spec.n);
    if (denominator(exact) != 1)
        throw std::logic_error("aligned count is not an integer");

    AlignedCount out;
    out.count = numerator(exact);

    if (bigint_pow(edge, spec.n) <= enumeration_cap
        && k * m <= kMaxSurveyHeight) {
        BigInt recount = enumerate_box(spec, (k * m).convert_to<int64_t>());
        if (recount != out.count)
            throw std::logic_error("density formula and enumeration disagree");
        out.enumeration_verified = true;
    }
    return out;
}

Rational main_term(const LocalSpec& spec, uint64_t height_bound)
{
    if (height_bound < 1)
        throw precondition_error("main_term needs a positive height bound");
    return spec.density()
           * rational_pow(Rational(BigInt(height_bound) * 2), spec.n);
}

BigInt unaligned_error_budget(const LocalSpec& spec, uint64_t height_bound)
{
    return BigInt(4) * spec.n * bigint_pow(BigInt(2), spec.n) * spec.modulus()
           * bigint_pow(BigInt(height_bound) * 2, spec.n - 1);
}

std::string to_string(SurveyMode m)
{
    return m == SurveyMode::exhaustive ? "exhaustive" : "mc";
}

namespace {

struct AxisValues {
    std::vector<int64_t> a0;     // exactly divisible by p
    std::vector<int64_t> others; // multiples of p, shared by axes 1..n-1
};

// Coefficient values inside the half-open box (-X, X].
AxisValues axis_values(uint64_t p, uint64_t height_bound)
{
    const auto sp = static_cast<int64_t>(p);
    const auto hi = static_cast<int64_t>(height_bound / p);
    const auto lo = -static_cast<int64_t>((height_bound - 1) / p);
    AxisValues av;
    av.others.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int64_t t = lo; t <= hi; ++t) {
        av.others.push_back(t * sp);
        if (t % sp != 0)
            av.a0.push_back(t * sp);
    }
    return av;
}

/* Residue bookkeeping for the enumeration: one slot per pair (q, r) with
 * q a search prime and r in [0, q). A tuple has a root mod q exactly when
 * some slot of q accumulates to zero. Everything is additive, so partial
 * sums carry across the nested axes and the innermost axis costs one add
 * and compare per slot. */
struct SlotLayout {
    std::vector<uint32_t> primes;
    std::vector<uint32_t> offset; // slot index where each prime's block starts
    uint32_t slot_count = 0;

    explicit SlotLayout(const std::vector<uint32_t>& qs)
        : primes(qs)
    {
        offset.reserve(qs.size());
        for (uint32_t q : qs) {
            offset.push_back(slot_count);
            slot_count += q;
        }
    }
};

// contribution of coefficient value a on axis i: (a mod q) * r^i mod q
std::vector<uint16_t> contribution_table(const SlotLayout& layout,
                                         const std::vector<int64_t>& values,
                                         unsigned axis)
{
    std::vector<uint16_t> table(values.size() * layout.slot_count);
    for (std::size_t vi = 0; vi < values.size(); ++vi) {
        uint16_t* row = table.data() + vi * layout.slot_count;
        for (std::size_t pi = 0; pi < layout.primes.size(); ++pi) {
            const uint32_t q = layout.primes[pi];
            int64_t residue = values[vi] % q;
            if (residue < 0)
                residue += q;
            for (uint32_t r = 0; r < q; ++r)
                row[layout.offset[pi] + r] = static_cast<uint16_t>(
                    (static_cast<uint64_t>(residue) * pow_mod(r, axis, q)) % q);
        }
    }
    return table;
}

std::vector<uint16_t> leading_term_slots(const SlotLayout& layout, unsigned n)
{
    std::vector<uint16_t> base(layout.slot_count);
    for (std::size_t pi = 0; pi < layout.primes.size(); ++pi) {
        const uint32_t q = layout.primes[pi];
        for (uint32_t r = 0; r < q; ++r)
            base[layout.offset[pi] + r] =
                static_cast<uint16_t>(pow_mod(r, n, q));
    }
    return base;
}

struct ShardCounts {
    uint64_t total = 0;
    uint64_t applies = 0;
};

class ExhaustiveWalker {
  public:
    ExhaustiveWalker(const SlotLayout& layout, unsigned n,
                     const AxisValues& values,
                     const std::vector<uint8_t>& applies_by_mask)
        : layout_(layout)
        , n_(n)
        , values_(values)
        , applies_by_mask_(applies_by_mask)
        , base_(leading_term_slots(layout, n))
    {
        contrib_.reserve(n);
        for (unsigned axis = 0; axis < n; ++axis)
            contrib_.push_back(contribution_table(
                layout, axis == 0 ? values.a0 : values.others, axis));
    }

    ShardCounts run(std::size_t a0_begin, std::size_t a0_end) const
    {
        const uint32_t s = layout_.slot_count;
        std::vector<std::vector<uint16_t>> scratch(n_);
        for (auto& level : scratch)
            level.assign(s, 0);

        ShardCounts counts;
        for (std::size_t i0 = a0_begin; i0 < a0_end; ++i0) {
            accumulate(base_.data(), contrib_[0].data() + i0 * s,
                       scratch[0].data());
            descend(1, scratch, counts);
        }
        return counts;
    }

  private:
    void accumulate(const uint16_t* state, const uint16_t* contrib,
                    uint16_t* out) const
    {
        for (std::size_t pi = 0, slot = 0; pi < layout_.primes.size(); ++pi) {
            const uint16_t q = static_cast<uint16_t>(layout_.primes[pi]);
            for (uint32_t r = 0; r < q; ++r, ++slot) {
                uint16_t v = static_cast<uint16_t>(state[slot] + contrib[slot]);
                out[slot] = v >= q ? static_cast<uint16_t>(v - q) : v;
            }
        }
    }

    void descend(unsigned axis, std::vector<std::vector<uint16_t>>& scratch,
                 ShardCounts& counts) const
    {
        const uint32_t s = layout_.slot_count;
        const uint16_t* state = scratch[axis - 1].data();
        const std::vector<int64_t>& vals = values_.others;
        const uint16_t* table = contrib_[axis].data();

        if (axis + 1 < n_) {
            for (std::size_t vi = 0; vi < vals.size(); ++vi) {
                accumulate(state, table + vi * s, scratch[axis].data());
                descend(axis + 1, scratch, counts);
            }
            return;
        }

        // innermost axis: finish the sums and read off the root mask
        for (std::size_t vi = 0; vi < vals.size(); ++vi) {
            const uint16_t* row = table + vi * s;
            uint32_t mask = 0;
            for (std::size_t pi = 0, slot = 0; pi < layout_.primes.size(); ++pi) {
                const uint16_t q = static_cast<uint16_t>(layout_.primes[pi]);
                bool root = false;
                for (uint32_t r = 0; r < q; ++r, ++slot) {
                    uint16_t v = static_cast<uint16_t>(state[slot] + row[slot]);
                    if (v == 0 || v == q) {
                        root = true;
                        slot += q - r; // skip the rest of this block
                        break;
                    }
                }
                mask |= static_cast<uint32_t>(root) << pi;
            }
            ++counts.total;
            counts.applies += applies_by_mask_[mask];
        }
    }

    const SlotLayout& layout_;
    unsigned n_;
    const AxisValues& values_;
    const std::vector<uint8_t>& applies_by_mask_;
    std::vector<uint16_t> base_;
    std::vector<std::vector<uint16_t>> contrib_;
};

void fill_common_report_fields(SurveyReport& report, const CriterionEngine& engine)
{
    report.main_term_density = 0;
    for (const auto& ps : engine.pairs()) {
        if (ps.usable) {
            report.main_q1 = ps.q1;
            report.main_q2 = ps.q2;
            report.main_term_density = rootless_density(ps.q1, engine.n())
                                       * rootless_density(ps.q2, engine.n());
            break;
        }
    }
    LowerBoundReport lb = lower_bound_report(engine.p(), engine.n());
    if (lb.t1_applicable) {
        report.lower_bound = lb.bound_t1;
        report.lower_bound_vacuous = false;
    } else {
        report.lower_bound = lb.bound_t2;
        report.lower_bound_vacuous = lb.t2_vacuous;
    }
}

std::vector<uint8_t> applies_table(const CriterionEngine& engine)
{
    if (!engine.mask_table_available())
        throw precondition_error("survey needs at most 16 search primes; "
                                 "lower the pair bound");
    std::vector<uint8_t> table(std::size_t(1) << engine.search_primes().size());
    for (uint32_t mask = 0; mask < table.size(); ++mask)
        table[mask] = engine.mask_applies(mask) ? 1 : 0;
    return table;
}

void validate_survey_arguments(uint64_t p, unsigned n, uint64_t height_bound)
{
    if (n < 2)
        throw precondition_error("surveys need degree n >= 2");
    if (height_bound < p)
        throw precondition_error("survey height bound must be at least p");
    if (height_bound > kMaxSurveyHeight)
        throw precondition_error("survey height bound too large");
}

} // namespace

SurveyReport exhaustive_survey(uint64_t p, unsigned n, uint64_t height_bound,
                               uint64_t pair_bound, uint64_t enumeration_cap,
                               unsigned threads)
{
    const auto started = std::chrono::steady_clock::now();
    validate_survey_arguments(p, n, height_bound);
    CriterionEngine engine(p, n, pair_bound);

    AxisValues values = axis_values(p, height_bound);
    BigInt total = BigInt(values.a0.size())
                   * bigint_pow(BigInt(values.others.size()), n - 1);
    if (total > enumeration_cap)
        throw precondition_error(
            "exhaustive enumeration would visit " + total.str()
            + " tuples (cap " + std::to_string(enumeration_cap)
            + "); use the monte-carlo mode");

    SlotLayout layout(engine.search_primes());
    std::vector<uint8_t> table = applies_table(engine);
    ExhaustiveWalker walker(layout, n, values, table);

    if (threads < 1)
        threads = 1;
    threads = static_cast<unsigned>(std::min<std::size_t>(
        threads, values.a0.size() ? values.a0.size() : 1));

    std::vector<ShardCounts> shard(threads);
    if (threads == 1) {
        shard[0] = walker.run(0, values.a0.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (values.a0.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(values.a0.size(), t * chunk);
            const std::size_t end = std::min(values.a0.size(), begin + chunk);
            pool.emplace_back([&walker, &shard, t, begin, end] {
                shard[t] = walker.run(begin, end);
            });
        }
        for (auto& worker : pool)
            worker.join();
    }

    ShardCounts merged;
    for (const ShardCounts& s : shard) {
        merged.total += s.total;
        merged.applies += s.applies;
    }

    SurveyReport report;
    report.p = p;
    report.n = n;
    report.height_bound = height_bound;
    report.aligned_height = height_bound;
    report.pair_bound = pair_bound;
    report.mode = SurveyMode::exhaustive;
    report.total = merged.total;
    report.applies = merged.applies;
    if (report.total != total)
        throw std::logic_error("enumeration visited an unexpected tuple count");
    report.delta = Rational(BigInt(merged.applies), BigInt(merged.total));
    fill_common_report_fields(report, engine);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

namespace {

// Unbiased draw from [0, bound) on a fully specified generator.
uint64_t bounded_draw(std::mt19937_64& rng, uint64_t bound)
{
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        uint64_t r = rng();
        if (r < limit)
            return r % bound;
    }
}

} // namespace

SurveyReport montecarlo_survey(uint64_t p, unsigned n, uint64_t height_bound,
                               uint64_t pair_bound, uint64_t seed,
                               uint64_t samples)
{
    const auto started = std::chrono::steady_clock::now();
    validate_survey_arguments(p, n, height_bound);
    if (samples < 1)
        throw precondition_error("monte-carlo survey needs samples >= 1");
    CriterionEngine engine(p, n, pair_bound);
    std::vector<uint8_t> table = applies_table(engine);

    const uint64_t k = height_bound / p; // box (-k*p, k*p], 2k values per axis
    const auto sp = static_cast<int64_t>(p);
    const auto offset = static_cast<int64_t>(k) - 1;

    std::mt19937_64 rng(seed);
    std::vector<int64_t> coeffs(n, 0);
    uint64_t applies = 0;
    for (uint64_t s = 0; s < samples; ++s) {
        for (unsigned i = 0; i < n; ++i) {
            int64_t t;
            do {
                t = static_cast<int64_t>(bounded_draw(rng, 2 * k)) - offset;
            } while (i == 0 && t % sp == 0);
            coeffs[i] = t * sp;
        }
        uint32_t mask = engine.root_mask(coeffs);
        applies += table[mask];
    }

    SurveyReport report;
    report.p = p;
    report.n = n;
    report.height_bound = height_bound;
    report.aligned_height = k * p;
    report.pair_bound = pair_bound;
    report.mode = SurveyMode::montecarlo;
    report.seed = seed;
    report.samples = samples;
    report.total = samples;
    report.applies = applies;
    report.delta = Rational(BigInt(applies), BigInt(samples));
    const double estimate = to_double(report.delta);
    report.delta_stderr =
        std::sqrt(estimate * (1 - estimate) / static_cast<double>(samples));
    fill_common_report_fields(report, engine);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

LowerBoundReport lower_bound_report(uint64_t p, unsigned n)
{
    if (!is_prime(p) || p < 5)
        throw precondition_error("lower_bound_report needs a prime p >= 5");
    if (n < 1)
        throw precondition_error("lower_bound_report needs n >= 1");

    LowerBoundReport out;
    out.p = p;
    out.n = n;
    out.g = std::gcd(p - 1, static_cast<uint64_t>(n));
    out.gcd_ok = out.g == 1;
    out.t1_applicable = n >= 3 && n % 2 == 1 && out.gcd_ok;

    out.eps = epsilon(p);
    Rational t1 = 1 - out.eps;
    Rational floor_t1(2, 27);
    out.bound_t1 = out.t1_applicable ? std::max(t1, floor_t1) : Rational(0);

    out.eps_hat = epsilon_hat(p);
    out.eps_hat_cutoff = epsilon_hat_default_cutoff(p);
    Rational t2 = 1 - out.eps_hat;
    out.t2_vacuous = t2 <= 0;
    out.bound_t2 = out.t2_vacuous ? Rational(0) : t2;

    const double dp = static_cast<double>(p);
    out.t2_hypothesis = static_cast<double>(out.g)
                        < std::sqrt(dp) / (std::log(dp) * std::log(dp));
    return out;
}

} // namespace heilbronn
