#include "parbelos/fuzz.hpp"

#include <algorithm>
#include <thread>

#include "parbelos/error.hpp"

namespace parbelos::fuzz {

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

long RandomSource::integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

Rational RandomSource::rational(long height) {
    return Rational(BigInt(integer(-height, height)), BigInt(integer(1, height)));
}

Rational RandomSource::positive(long height) {
    return Rational(BigInt(integer(1, height)), BigInt(integer(1, height)));
}

Point RandomSource::point(long height) { return {rational(height), rational(height)}; }

Vec2 RandomSource::direction(long height) {
    for (;;) {
        Vec2 v{rational(height), rational(height)};
        if (!v.x.is_zero() || !v.y.is_zero()) return v;
    }
}

Side RandomSource::side() { return integer(0, 1) == 0 ? Side::Left : Side::Right; }

Parabola RandomSource::parabola(long height) {
    const Point focus = point(height);
    for (;;) {
        const Vec2 n = direction(height);
        const Line directrix(n.x, n.y, rational(height));
        if (!directrix.contains(focus)) return Parabola(focus, directrix);
    }
}

std::vector<Rational> RandomSource::distinct(std::size_t count, long height) {
    std::vector<Rational> out;
    while (out.size() < count) {
        Rational r = rational(height);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    return out;
}

std::pair<Rational, Rational> RandomSource::pythagorean(long height) {
    const long limit = std::max(2L, std::min(height, 1000L));
    const long m = integer(2, limit);
    const long n = integer(1, m - 1);
    const Rational k = positive(height);
    const Rational p = k * Rational(m * m - n * n);
    const Rational q = k * Rational(2 * m * n);
    // random quadrant
    switch (integer(0, 3)) {
        case 0: return {p, q};
        case 1: return {-q, p};
        case 2: return {-p, -q};
        default: return {q, -p};
    }
}

CuspInputs RandomSource::cusps(long height) {
    const Point c1 = point(height);
    const Vec2 d = direction(height);
    const Rational a = positive(height);
    const Rational b = positive(height);
    return {c1, c1 + a * d, c1 + (a + b) * d, side()};
}

std::vector<bool> verdict_signature(const ParbelosFigure& fig) {
    std::vector<bool> out;
    for (const Check& c : verify_sondow(fig).checks) out.push_back(c.pass);
    for (const Check& c : verify_corollaries(fig).checks) out.push_back(c.pass);
    out.push_back(is_tangent(fig.outer, line_through(fig.C1, fig.C3)));
    out.push_back(is_tangent(fig.outer, line_through(fig.T1, fig.T2)));
    out.push_back(on_circle(fig.circumcircle_K, fig.C1));
    out.push_back(contains_point(fig.outer, fig.focus_F));
    out.push_back(contains_point(fig.inner1, fig.contact_T));
    return out;
}

bool latus_tangent_angle_holds(const Parabola& g) {
    const Segment latus = canonical_elements(g).latus_endpoints;
    const Vec2 u = latus.second() - latus.first();
    for (const Point* e : {&latus.first(), &latus.second()}) {
        const Vec2 d = tangent_at(g, *e).direction();
        const Rational du = dot(d, u);
        if (du * du * 2 != norm_sq(d) * norm_sq(u)) return false;
    }
    return true;
}

namespace {

class CaseRecorder {
public:
    explicit CaseRecorder(CaseResult& result) : result_(result) {}

    void expect(bool ok, const std::string& what) {
        ++result_.checks;
        if (!ok) result_.failures.push_back(what);
    }

private:
    CaseResult& result_;
};

void check_parbelos(RandomSource& rng, long height, CaseRecorder& rec) {
    const CuspInputs in = rng.cusps(height);
    const ParbelosFigure fig = build_parbelos(in.c1, in.c2, in.c3, in.side);
    const TheoremReport sondow = verify_sondow(fig);
    const TheoremReport corollaries = verify_corollaries(fig);
    rec.expect(sondow.pass, "sondow: " + sondow.failure_detail.value_or(""));
    rec.expect(corollaries.pass, "corollaries: " + corollaries.failure_detail.value_or(""));
    rec.expect(dist_sq(fig.focus_F, fig.contact_T) == dist_sq(fig.H, fig.contact_T), "FT != HT");
    for (const Parabola* g : {&fig.inner1, &fig.inner2, &fig.outer}) {
        rec.expect(latus_tangent_angle_holds(*g), "latus tangent angle is not pi/4");
    }
    const auto [chord, report] =
        converse_lambert(fig.outer, fig.tangent_at_C1, fig.tangent_at_C3, fig.circumcircle_K);
    rec.expect(report.pass && chord == fig.diagonal, "converse Lambert does not replay the diagonal");

    const auto [p, q] = rng.pythagorean(height);
    const CuspInputs moved = similarity_transform(in, rng.positive(height), p, q, rng.point(height));
    const ParbelosFigure moved_fig = build_parbelos(moved.c1, moved.c2, moved.c3, moved.side);
    rec.expect(verdict_signature(fig) == verdict_signature(moved_fig),
               "verdicts change under a similarity");
}

void check_tangency(RandomSource& rng, long height, CaseRecorder& rec) {
    const Parabola g = rng.parabola(height);
    const auto ts = rng.distinct(3, height);
    const Point p0 = point_at_parameter(g, ts[0]);
    const Point p1 = point_at_parameter(g, ts[1]);
    const Point p2 = point_at_parameter(g, ts[2]);
    const Line l0 = tangent_at(g, p0);
    const Line l1 = tangent_at(g, p1);
    const Line l2 = tangent_at(g, p2);
    rec.expect(is_tangent(g, l0), "tangent_at output is not tangent");
    rec.expect(!is_tangent(g, line_through(p0, p1)), "secant reported tangent");
    rec.expect(lambert_circumcircle_check(g, l0, l1, l2).pass, "Lambert forward failed");

    const Point meet = intersect(l0, l1);
    const Circle k = circle_through_points(g.focus(), meet, rng.rational(height));
    rec.expect(converse_lambert(g, l0, l1, k).second.pass, "converse Lambert failed");
}

void check_simson(RandomSource& rng, long height, CaseRecorder& rec) {
    Point a = rng.point(height), b = rng.point(height), c = rng.point(height);
    while (is_collinear(a, b, c)) c = rng.point(height);
    const Circle k = circumcircle(a, b, c);
    const Point on = circle_point(k, a, rng.rational(height));
    const TheoremReport forward = simson_check(on, a, b, c);
    rec.expect(forward.pass && std::get<bool>(*forward.find_witness("pedals_collinear")),
               "Simson forward: pedals of a circumcircle point not collinear");
    Point off = rng.point(height);
    while (on_circle(k, off)) off = rng.point(height);
    const TheoremReport converse = simson_check(off, a, b, c);
    rec.expect(converse.pass && !std::get<bool>(*converse.find_witness("pedals_collinear")),
               "Simson converse: pedals of an off-circle point collinear");
}

}  // namespace

CaseResult run_case(std::uint64_t seed, std::uint64_t index, long max_height) {
    CaseResult result;
    result.index = index;
    CaseRecorder rec(result);
    RandomSource rng(seed, index);
    try {
        check_parbelos(rng, max_height, rec);
        check_tangency(rng, max_height, rec);
        check_simson(rng, max_height, rec);
    } catch (const GeometryError& e) {
        rec.expect(false, std::string("unexpected error: ") + e.what());
    }
    return result;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
    std::vector<CaseResult> results(options.cases);
    const auto work = [&](std::uint64_t begin, std::uint64_t stride) {
        for (std::uint64_t i = begin; i < options.cases; i += stride) {
            results[i] = run_case(options.seed, i, options.max_height);
        }
    };
    if (options.parallel) {
        const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    } else {
        work(0, 1);
    }

    FuzzSummary summary;
    summary.cases = options.cases;
    for (const CaseResult& r : results) {
        summary.checks += r.checks;
        if (r.failures.empty()) continue;
        ++summary.failed_cases;
        for (const std::string& f : r.failures) {
            summary.messages.push_back("case " + std::to_string(r.index) + ": " + f);
        }
    }
    return summary;
}

}  // namespace parbelos::fuzz
