#include "oml/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "oml/linalg.hpp"

namespace oml {

namespace {

using Row = std::vector<Rational>; // c0, c1, ..., ck meaning c0*s + c.t >= 0

Vec wrap(const Row& r, const Field& f) {
    Vec out;
    out.reserve(r.size());
    for (const auto& q : r) out.emplace_back(q, f);
    return out;
}

Row unwrap(const Vec& v) {
    Row out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.as_rational());
    return out;
}

// Positive rescale so the first nonzero entry becomes +-1; canonical
// representative of the halfspace (rows) or of the ray (directions).
void normalize_row(Row& r) {
    for (const auto& q : r) {
        if (q != 0) {
            Rational m = q < 0 ? Rational(-q) : q;
            for (auto& x : r) x /= m;
            return;
        }
    }
}

Rational row_dot(const Row& a, const Row& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Set of processed constraints a ray is tight at, as a fixed-width bitmask.
struct TightSet {
    std::vector<std::uint64_t> words;

    explicit TightSet(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words[i / 64] |= std::uint64_t(1) << (i % 64); }

    friend TightSet operator&(const TightSet& x, const TightSet& y) {
        TightSet out;
        out.words.resize(x.words.size());
        for (std::size_t w = 0; w < x.words.size(); ++w)
            out.words[w] = x.words[w] & y.words[w];
        return out;
    }

    /// True when x contains every bit of this set.
    bool subset_of(const TightSet& x) const {
        for (std::size_t w = 0; w < words.size(); ++w)
            if (words[w] & ~x.words[w]) return false;
        return true;
    }
};

struct Ray {
    Row dir;       // homogeneous coordinates (s, t1..tk)
    TightSet tight;
};

} // namespace

StatePolytope build_polytope(LogicPtr logic, std::size_t cap_elements) {
    if (!logic) fail(ErrorKind::bad_argument, "build_polytope needs a logic");
    const std::size_t n = logic->labels.size();
    if (n > cap_elements)
        fail(ErrorKind::cap_exceeded,
             "logic has " + std::to_string(n) + " elements, polytope cap is " +
                 std::to_string(cap_elements));

    const Field F = Field::rationals();
    const Scalar zero = F.zero();
    const Scalar one = F.one();

    // Equality system A x = b over the element coordinates.
    Mat a;
    Vec b;
    {
        Vec row = la::zero_vec(static_cast<int>(n), F);
        row[static_cast<std::size_t>(logic->bottom)] = one;
        a.push_back(row);
        b.push_back(zero); // x_bottom = 0
    }
    {
        Vec row = la::zero_vec(static_cast<int>(n), F);
        row[static_cast<std::size_t>(logic->top)] = one;
        a.push_back(row);
        b.push_back(one); // x_top = 1
    }
    for (const auto& oj : logic->ojoins) {
        Vec row = la::zero_vec(static_cast<int>(n), F);
        row[static_cast<std::size_t>(oj.c)] += one;
        row[static_cast<std::size_t>(oj.a)] -= one;
        row[static_cast<std::size_t>(oj.b)] -= one;
        a.push_back(row);
        b.push_back(zero); // x_c - x_a - x_b = 0
    }

    StatePolytope p;
    p.logic = std::move(logic);
    p.equality_count = static_cast<long long>(a.size());

    auto x0 = la::solve(a, b);
    if (!x0) {
        p.empty = true;
        return p;
    }
    p.base_point = unwrap(*x0);

    Mat kernel = la::nullspace(a, static_cast<int>(n), F);
    p.dimension = static_cast<int>(kernel.size());
    p.kernel.reserve(kernel.size());
    for (const auto& row : kernel) p.kernel.push_back(unwrap(row));
    return p;
}

std::vector<StateMeasure> enumerate_pure_states(const StatePolytope& p,
                                                std::size_t cap_vertices) {
    if (!p.logic) fail(ErrorKind::bad_argument, "polytope has no logic attached");
    if (p.empty) return {};

    const std::size_t n = p.logic->labels.size();
    const std::size_t k = static_cast<std::size_t>(p.dimension);
    const Field F = Field::rationals();

    // Parametrize x = x0 + K^T t and turn 0 <= x_i <= 1 into rows
    // (c0, c) with c0 + c.t >= 0.  Rows whose c part vanishes constrain
    // nothing; they are checked once and dropped.
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Row lower(k + 1), upper(k + 1);
        lower[0] = p.base_point[i];
        upper[0] = Rational(1) - p.base_point[i];
        bool varies = false;
        for (std::size_t j = 0; j < k; ++j) {
            lower[j + 1] = p.kernel[j][i];
            upper[j + 1] = -p.kernel[j][i];
            if (p.kernel[j][i] != 0) varies = true;
        }
        if (!varies) {
            if (lower[0] < 0 || upper[0] < 0) return {}; // fixed coordinate out of range
            continue;
        }
        rows.push_back(std::move(lower));
        rows.push_back(std::move(upper));
    }
    for (auto& r : rows) normalize_row(r);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::vector<StateMeasure> out;
    auto emit = [&](const Row& t) {
        std::vector<Rational> x = p.base_point;
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) x[i] += t[j] * p.kernel[j][i];
        out.push_back(StateMeasure::exact(p.logic, std::move(x), "vertex"));
    };

    if (k == 0) {
        emit(Row{});
    } else {
        // Homogenize to the cone {y = (s, t) : row.y >= 0 for all rows}.
        // The s >= 0 row cannot coincide with any survivor above (their c
        // parts are nonzero), so it is appended unconditionally.
        Row srow(k + 1);
        srow[0] = 1;
        rows.push_back(std::move(srow));

        // Pick a nonsingular (k+1)x(k+1) start basis by greedy rank growth.
        // The rows span: the kernel directions are independent, so the c
        // parts reach every t direction, and the s row covers the rest.
        std::vector<std::size_t> basis;
        Mat chosen;
        for (std::size_t r = 0; r < rows.size() && basis.size() < k + 1; ++r) {
            chosen.push_back(wrap(rows[r], F));
            if (la::rank(chosen) == static_cast<int>(chosen.size())) {
                basis.push_back(r);
            } else {
                chosen.pop_back();
            }
        }
        if (basis.size() != k + 1)
            fail(ErrorKind::not_a_state, "constraint rows fail to span; the "
                                         "parametrization lost rank");

        auto binv = la::inverse(chosen);
        if (!binv)
            fail(ErrorKind::not_a_state, "start basis is singular after rank check");

        // Process basis rows first, the rest in listed order.
        std::vector<std::size_t> order = basis;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (std::find(basis.begin(), basis.end(), r) == basis.end())
                order.push_back(r);

        // Rays of the simplicial start cone are the columns of B^-1; column
        // i is tight at every basis row except row i.
        std::vector<Ray> rays;
        for (std::size_t i = 0; i <= k; ++i) {
            Ray ray;
            ray.dir.resize(k + 1);
            for (std::size_t r = 0; r <= k; ++r)
                ray.dir[r] = (*binv)[r][i].as_rational();
            normalize_row(ray.dir);
            ray.tight = TightSet(rows.size());
            for (std::size_t r = 0; r <= k; ++r)
                if (r != i) ray.tight.set(r);
            rays.push_back(std::move(ray));
        }

        for (std::size_t step = k + 1; step < order.size(); ++step) {
            const Row& cut = rows[order[step]];
            std::vector<Rational> side(rays.size());
            for (std::size_t i = 0; i < rays.size(); ++i)
                side[i] = row_dot(cut, rays[i].dir);

            std::vector<Ray> next;
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (side[i] < 0) continue;
                Ray keep = rays[i];
                if (side[i] == 0) keep.tight.set(step);
                next.push_back(std::move(keep));
            }

            // Each adjacent (plus, minus) pair spawns one ray on the cut.
            for (std::size_t i = 0; i < rays.size(); ++i) {
                if (side[i] <= 0) continue;
                for (std::size_t j = 0; j < rays.size(); ++j) {
                    if (side[j] >= 0) continue;
                    TightSet common = rays[i].tight & rays[j].tight;
                    bool adjacent = true;
                    for (std::size_t m = 0; m < rays.size(); ++m) {
                        if (m == i || m == j) continue;
                        if (common.subset_of(rays[m].tight)) {
                            adjacent = false;
                            break;
                        }
                    }
                    if (!adjacent) continue;
                    Ray born;
                    born.dir.resize(k + 1);
                    for (std::size_t c = 0; c <= k; ++c)
                        born.dir[c] =
                            side[i] * rays[j].dir[c] - side[j] * rays[i].dir[c];
                    normalize_row(born.dir);
                    born.tight = common;
                    born.tight.set(step);
                    next.push_back(std::move(born));
                }
            }

            rays = std::move(next);
            if (rays.size() > cap_vertices)
                fail(ErrorKind::cap_exceeded,
                     "vertex enumeration exceeded " + std::to_string(cap_vertices) +
                         " working rays");
        }

        // A bounded feasible region leaves only rays with s > 0; s = 0
        // would be a direction of recession, impossible alongside the
        // paired upper and lower rows.
        std::vector<Row> points;
        for (const auto& ray : rays) {
            if (ray.dir[0] == 0)
                fail(ErrorKind::not_a_state,
                     "vertex enumeration produced an unbounded direction");
            Row t(k);
            for (std::size_t j = 0; j < k; ++j) t[j] = ray.dir[j + 1] / ray.dir[0];
            points.push_back(std::move(t));
        }
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        for (const auto& t : points) emit(t);
    }

    std::sort(out.begin(), out.end(),
              [](const StateMeasure& a, const StateMeasure& b) {
                  return a.values() < b.values();
              });
    std::vector<StateMeasure> named;
    named.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        StateMeasure v = out[i].renamed("vertex " + std::to_string(i));
        auto report = validate_state(v);
        if (!report.ok())
            fail(ErrorKind::not_a_state,
                 "enumerated vertex violates the measure laws: " +
                     (report.witnesses.empty() ? v.name() : report.witnesses.front()));
        named.push_back(std::move(v));
    }
    return named;
}

} // namespace oml
