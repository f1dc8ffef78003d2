#include "oml/state.hpp"

#include <cmath>
#include <sstream>

namespace oml {

namespace {

std::string str_double(double x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

std::vector<LogicStructure::OrthogonalJoin> table_ojoins(const FiniteLogic& l) {
    std::vector<LogicStructure::OrthogonalJoin> out;
    for (int i = 0; i < l.size(); ++i) {
        if (i == l.bottom()) continue;
        for (int j = i + 1; j < l.size(); ++j) {
            if (j == l.bottom() || !l.leq(i, l.ortho(j))) continue;
            if (const auto c = l.join(i, j)) out.push_back({i, j, *c});
        }
    }
    return out;
}

std::vector<LogicStructure::OrthogonalJoin> geometric_ojoins(const Fragment& f) {
    std::vector<LogicStructure::OrthogonalJoin> out;
    for (int i = 0; i < f.size(); ++i) {
        if (i == f.bottom()) continue;
        for (int j = i + 1; j < f.size(); ++j) {
            if (j == f.bottom() || !f.leq(i, f.ortho(j))) continue;
            const auto c = f.index_of(join(f.element(i), f.element(j)));
            if (c) out.push_back({i, j, *c});
        }
    }
    return out;
}

void require_logic_matches(const Fragment& f, const LogicPtr& logic) {
    if (!logic) fail(ErrorKind::bad_argument, "null logic");
    if (logic->size() != f.size())
        fail(ErrorKind::bad_argument, "logic was not compiled from this fragment");
    for (int i = 0; i < f.size(); ++i)
        if (logic->label(i) != f.label(i))
            fail(ErrorKind::bad_argument, "logic was not compiled from this fragment");
}

} // namespace

LogicPtr compile(const FiniteLogic& l) {
    auto s = std::make_shared<LogicStructure>();
    s->name = l.name();
    s->bottom = l.bottom();
    s->top = l.top();
    const int n = l.size();
    s->labels.reserve(static_cast<std::size_t>(n));
    s->ortho.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        s->labels.push_back(l.label(i));
        s->ortho.push_back(l.ortho(i));
        std::vector<bool> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = l.leq(i, j);
        s->leq.push_back(std::move(row));
        if (l.is_atom(i)) s->atoms.push_back(i);
    }
    s->ojoins = table_ojoins(l);
    return s;
}

LogicPtr compile(const Fragment& f) {
    auto s = std::make_shared<LogicStructure>();
    s->name = f.name();
    s->bottom = f.bottom();
    s->top = f.top();
    const int n = f.size();
    for (int i = 0; i < n; ++i) {
        s->labels.push_back(f.label(i));
        s->ortho.push_back(f.ortho(i));
        std::vector<bool> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = f.leq(i, j);
        s->leq.push_back(std::move(row));
    }
    s->atoms = f.atom_indices();
    s->ojoins = geometric_ojoins(f);
    s->truncated = f.truncated();
    return s;
}

// --- StateMeasure -----------------------------------------------------------

StateMeasure StateMeasure::exact(LogicPtr logic, std::vector<Rational> values,
                                 std::string name) {
    if (!logic) fail(ErrorKind::bad_argument, "null logic");
    if (static_cast<int>(values.size()) != logic->size())
        fail(ErrorKind::bad_argument, "value count differs from logic size");
    StateMeasure m;
    m.logic_ = std::move(logic);
    m.name_ = std::move(name);
    m.exact_ = true;
    m.exact_values_ = std::move(values);
    return m;
}

StateMeasure StateMeasure::approx(LogicPtr logic, std::vector<double> values, double tolerance,
                                  std::string name) {
    if (!logic) fail(ErrorKind::bad_argument, "null logic");
    if (static_cast<int>(values.size()) != logic->size())
        fail(ErrorKind::bad_argument, "value count differs from logic size");
    if (!(tolerance > 0)) fail(ErrorKind::bad_argument, "approx mode needs a positive tolerance");
    StateMeasure m;
    m.logic_ = std::move(logic);
    m.name_ = std::move(name);
    m.exact_ = false;
    m.tolerance_ = tolerance;
    m.approx_values_ = std::move(values);
    return m;
}

const Rational& StateMeasure::value(int i) const {
    if (!exact_) fail(ErrorKind::value_not_rational, "approx state " + name_);
    return exact_values_.at(static_cast<std::size_t>(i));
}

const std::vector<Rational>& StateMeasure::values() const {
    if (!exact_) fail(ErrorKind::value_not_rational, "approx state " + name_);
    return exact_values_;
}

double StateMeasure::value_d(int i) const {
    if (exact_)
        return exact_values_.at(static_cast<std::size_t>(i)).convert_to<double>();
    return approx_values_.at(static_cast<std::size_t>(i));
}

bool StateMeasure::is_one_at(int i) const {
    if (exact_) return value(i) == 1;
    return std::abs(value_d(i) - 1.0) <= tolerance_;
}

bool StateMeasure::is_zero_at(int i) const {
    if (exact_) return value(i) == 0;
    return std::abs(value_d(i)) <= tolerance_;
}

bool StateMeasure::leq_at(int i, int j) const {
    if (exact_) return value(i) <= value(j);
    return value_d(i) <= value_d(j) + tolerance_;
}

bool StateMeasure::equal_at(int i, int j) const {
    if (exact_) return value(i) == value(j);
    return std::abs(value_d(i) - value_d(j)) <= tolerance_;
}

bool StateMeasure::same_values(const StateMeasure& o) const {
    if (logic_->size() != o.logic_->size()) return false;
    if (exact_ && o.exact_) return exact_values_ == o.exact_values_;
    const double tol = std::max(tolerance_, o.tolerance_);
    for (int i = 0; i < logic_->size(); ++i)
        if (std::abs(value_d(i) - o.value_d(i)) > tol) return false;
    return true;
}

StateMeasure StateMeasure::renamed(std::string name) const {
    StateMeasure m = *this;
    m.name_ = std::move(name);
    return m;
}

// --- validation, support, regularity properties -----------------------------

CheckReport validate_state(const StateMeasure& m) {
    const auto& L = *m.logic();
    CheckReport r;
    r.check = "state-measure";
    r.target = m.name() + " on " + L.name;
    if (!m.is_exact()) r.stat("tolerance", str_double(m.tolerance()));
    if (!m.is_zero_at(L.bottom)) r.witness("bottom has value " + str_double(m.value_d(L.bottom)));
    if (!m.is_one_at(L.top)) r.witness("top has value " + str_double(m.value_d(L.top)));
    for (int i = 0; i < L.size(); ++i) {
        const double v = m.value_d(i);
        const double slack = m.is_exact() ? 0.0 : m.tolerance();
        if (v < -slack || v > 1.0 + slack)
            r.witness(L.label(i) + " has value " + str_double(v) + " outside [0, 1]");
    }
    r.stat("join-triples", static_cast<long long>(L.ojoins.size()));
    for (const auto& t : L.ojoins) {
        bool additive;
        if (m.is_exact()) {
            additive = m.value(t.c) == m.value(t.a) + m.value(t.b);
        } else {
            additive = std::abs(m.value_d(t.c) - m.value_d(t.a) - m.value_d(t.b)) <=
                       m.tolerance();
        }
        if (!additive)
            r.witness("additivity fails on " + L.label(t.a) + " v " + L.label(t.b) + " = " +
                      L.label(t.c));
    }
    return r.finish();
}

std::optional<int> support(const StateMeasure& m) {
    const auto& L = *m.logic();
    for (int s = 0; s < L.size(); ++s) {
        if (!m.is_one_at(s)) continue;
        bool minimum = true;
        for (int x = 0; x < L.size() && minimum; ++x)
            if (m.is_one_at(x) && !L.leq[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)])
                minimum = false;
        if (minimum) return s;
    }
    return std::nullopt;
}

CheckReport check_jauch_piron(const std::vector<StateMeasure>& states) {
    CheckReport r;
    r.check = "jauch-piron";
    r.target = states.empty() ? "no states" : states.front().logic()->name;
    r.stat("states", static_cast<long long>(states.size()));
    for (const auto& m : states) {
        const auto& L = *m.logic();
        for (int a = 0; a < L.size(); ++a) {
            if (!m.is_one_at(a)) continue;
            for (int b = a + 1; b < L.size(); ++b) {
                if (!m.is_one_at(b)) continue;
                bool found = false;
                for (int c = 0; c < L.size() && !found; ++c)
                    found = m.is_one_at(c) && L.leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)] &&
                            L.leq[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
                if (!found)
                    r.witness(m.name() + ": no certain lower bound of " + L.label(a) + ", " +
                              L.label(b));
            }
        }
    }
    return r.finish();
}

CheckReport check_sufficiency(const LogicPtr& logic, const std::vector<StateMeasure>& states) {
    const auto& L = *logic;
    CheckReport r;
    r.check = "sufficiency";
    r.target = L.name;
    r.stat("states", static_cast<long long>(states.size()));
    for (int a = 0; a < L.size(); ++a) {
        if (a == L.bottom) continue;
        bool found = false;
        for (const auto& m : states)
            if (m.is_one_at(a)) {
                found = true;
                break;
            }
        if (!found) r.witness("no state is certain of " + L.label(a));
    }
    return r.finish();
}

CheckReport check_identification(const std::vector<StateMeasure>& states) {
    CheckReport r;
    r.check = "identification";
    r.target = states.empty() ? "no states" : states.front().logic()->name;
    r.stat("states", static_cast<long long>(states.size()));
    for (const auto& alpha : states) {
        const auto s = support(alpha);
        if (!s) {
            r.note("no support for " + alpha.name());
            continue;
        }
        for (const auto& beta : states)
            if (beta.is_one_at(*s) && !beta.same_values(alpha))
                r.witness(beta.name() + " is certain of the support of " + alpha.name() +
                          " yet differs from it");
    }
    return r.finish();
}

CheckReport check_minimal_disturbance(const std::vector<StateMeasure>& states) {
    CheckReport r;
    r.check = "minimal-disturbance";
    r.target = states.empty() ? "no states" : states.front().logic()->name;
    r.stat("states", static_cast<long long>(states.size()));
    std::vector<std::optional<int>> supports;
    supports.reserve(states.size());
    for (const auto& m : states) supports.push_back(support(m));

    for (const auto& alpha : states) {
        const auto& L = *alpha.logic();
        for (int a = 0; a < L.size(); ++a) {
            if (alpha.is_zero_at(a)) continue;
            bool found = false;
            for (std::size_t k = 0; k < states.size() && !found; ++k) {
                if (!supports[k] || !states[k].is_one_at(a)) continue;
                found = alpha.equal_at(*supports[k], a);
            }
            if (!found)
                r.witness(alpha.name() + ": no certain state of " + L.label(a) +
                          " preserves its probability");
        }
    }
    return r.finish();
}

CheckReport check_order_determining(const LogicPtr& logic,
                                    const std::vector<StateMeasure>& states) {
    const auto& L = *logic;
    CheckReport r;
    r.check = "order-determining";
    r.target = L.name;
    r.stat("states", static_cast<long long>(states.size()));
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
            if (a == b) continue;
            bool all_leq = true;
            const StateMeasure* against = nullptr;
            for (const auto& m : states)
                if (!m.leq_at(a, b)) {
                    all_leq = false;
                    against = &m;
                    break;
                }
            const bool ordered = L.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (ordered && !all_leq)
                r.witness(L.label(a) + " <= " + L.label(b) + " but " + against->name() +
                          " orders the values oppositely");
            if (!ordered && all_leq)
                r.witness("every state has " + L.label(a) + " <= " + L.label(b) +
                          " yet the elements are not ordered");
        }
    return r.finish();
}

CheckReport check_strong_ordering(const LogicPtr& logic,
                                  const std::vector<StateMeasure>& states) {
    const auto& L = *logic;
    CheckReport r;
    r.check = "strong-ordering";
    r.target = L.name;
    r.stat("states", static_cast<long long>(states.size()));
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
            if (a == b) continue;
            bool nonempty = false;
            bool contained = true;
            for (const auto& m : states) {
                if (!m.is_one_at(a)) continue;
                nonempty = true;
                if (!m.is_one_at(b)) {
                    contained = false;
                    break;
                }
            }
            if (nonempty && contained &&
                !L.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                r.witness("certainty of " + L.label(a) + " implies certainty of " + L.label(b) +
                          " yet the elements are not ordered");
        }
    return r.finish();
}

// --- concrete states --------------------------------------------------------

StateMeasure atom_induced_state(const Fragment& f, const LogicPtr& logic, const Vec& v) {
    require_logic_matches(f, logic);
    const auto& sp = f.space();
    if (la::is_zero(v)) fail(ErrorKind::zero_vector, "state vector");
    const Scalar denom = sp->form(v, v);
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) {
        const Vec pv = f.element(i).is_zero() ? sp->zero_vector() : project(f.element(i), v);
        values.push_back((sp->form(v, pv) / denom).as_rational());
    }
    auto m = StateMeasure::exact(logic, std::move(values), "alpha" + to_string(v));
    const auto check = validate_state(m);
    // the projection formula is additive by construction; a failure here
    // means the fragment tables are inconsistent
    if (!check.ok()) fail(ErrorKind::not_a_state, check.witnesses.front());
    return m;
}

StateMeasure extension_state(const Fragment& f, const LogicPtr& logic,
                             const std::vector<double>& v, double tolerance) {
    require_logic_matches(f, logic);
    const auto& sp = f.space();
    if (!sp->field().is_rationals())
        fail(ErrorKind::bad_argument, "extension states live over rational fragments");
    if (sp->form_matrix() != la::identity(sp->dim(), sp->field()))
        fail(ErrorKind::bad_argument, "extension states need the natural form");
    if (static_cast<int>(v.size()) != sp->dim())
        fail(ErrorKind::dimension_mismatch, "vector length");
    double denom = 0;
    for (double x : v) denom += x * x;
    if (denom == 0) fail(ErrorKind::zero_vector, "state vector");

    // <v, P_M v> via the double-precision Gram system of the member basis
    auto dots = [](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) {
        const Mat& basis = f.element(i).basis();
        const std::size_t r = basis.size();
        if (r == 0) {
            values.push_back(0.0);
            continue;
        }
        std::vector<std::vector<double>> b(r);
        for (std::size_t s = 0; s < r; ++s)
            for (const Scalar& c : basis[s]) b[s].push_back(c.to_double());
        // solve sum_s g[t][s] x[s] = <v, b[t]> by elimination
        std::vector<std::vector<double>> g(r, std::vector<double>(r + 1));
        for (std::size_t t = 0; t < r; ++t) {
            for (std::size_t s = 0; s < r; ++s) g[t][s] = dots(b[s], b[t]);
            g[t][r] = dots(v, b[t]);
        }
        for (std::size_t col = 0; col < r; ++col) {
            std::size_t piv = col;
            for (std::size_t t = col + 1; t < r; ++t)
                if (std::abs(g[t][col]) > std::abs(g[piv][col])) piv = t;
            std::swap(g[col], g[piv]);
            for (std::size_t t = 0; t < r; ++t) {
                if (t == col) continue;
                const double fct = g[t][col] / g[col][col];
                for (std::size_t s = col; s <= r; ++s) g[t][s] -= fct * g[col][s];
            }
        }
        std::vector<double> pv(v.size(), 0.0);
        for (std::size_t s = 0; s < r; ++s) {
            const double x = g[s][r] / g[s][s];
            for (std::size_t k = 0; k < pv.size(); ++k) pv[k] += x * b[s][k];
        }
        values.push_back(dots(v, pv) / denom);
    }
    auto m = StateMeasure::approx(logic, std::move(values), tolerance, "extension-state");
    const auto check = validate_state(m);
    if (!check.ok()) fail(ErrorKind::not_a_state, check.witnesses.front());
    return m;
}

StateMeasure anomalous_dim2_state(const Fragment& f, const LogicPtr& logic) {
    require_logic_matches(f, logic);
    const auto& sp = f.space();
    if (sp->dim() != 2) fail(ErrorKind::dimension_mismatch, "needs a rank-2 space");
    if (!sp->field().is_rationals())
        fail(ErrorKind::bad_argument, "the sign rule lives over the rationals");
    if (sp->form_matrix() != la::identity(2, sp->field()))
        fail(ErrorKind::bad_argument, "the sign rule needs the natural form");
    std::vector<Rational> values(static_cast<std::size_t>(f.size()), 0);
    for (int i = 0; i < f.size(); ++i) {
        const auto& e = f.element(i);
        if (e.is_zero()) continue;
        if (e.is_full()) {
            values[static_cast<std::size_t>(i)] = 1;
            continue;
        }
        // canonical generator is (1, t) or (0, 1)
        const Vec& g = e.generator();
        if (g[0].is_zero()) continue;                       // (0, 1) -> 0
        if (g[1].sign() >= 0) values[static_cast<std::size_t>(i)] = 1; // (1, t), t >= 0
    }
    return StateMeasure::exact(logic, std::move(values), "sign-rule-state");
}

StateMeasure convex_mix(const std::vector<StateMeasure>& states,
                        const std::vector<Rational>& weights) {
    if (states.empty() || states.size() != weights.size())
        fail(ErrorKind::bad_argument, "need matching states and weights");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) fail(ErrorKind::bad_argument, "negative weight");
        total += w;
    }
    if (total != 1) fail(ErrorKind::bad_argument, "weights must sum to 1");
    const auto& L = states.front().logic();
    for (const auto& m : states) {
        if (!m.is_exact()) fail(ErrorKind::bad_argument, "approx states cannot be mixed");
        if (m.logic()->size() != L->size() || m.logic()->name != L->name)
            fail(ErrorKind::bad_argument, "states live on different logics");
    }
    std::vector<Rational> values(static_cast<std::size_t>(L->size()), 0);
    for (std::size_t k = 0; k < states.size(); ++k)
        for (int i = 0; i < L->size(); ++i)
            values[static_cast<std::size_t>(i)] += weights[k] * states[k].value(i);
    return StateMeasure::exact(L, std::move(values), "mix");
}

} // namespace oml
