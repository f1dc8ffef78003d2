#include "oml/logic.hpp"

#include <algorithm>
#include <map>

namespace oml {

FiniteLogic FiniteLogic::from_relations(
    std::string name,
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs,
    const std::vector<std::pair<std::string, std::string>>& ortho_pairs,
    const std::string& bottom,
    const std::string& top) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) fail(ErrorKind::malformed_table, "no elements");
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        if (index.count(labels[static_cast<std::size_t>(i)]))
            fail(ErrorKind::malformed_table,
                 "duplicate element " + labels[static_cast<std::size_t>(i)]);
        index[labels[static_cast<std::size_t>(i)]] = i;
    }
    auto at = [&](const std::string& l) {
        auto it = index.find(l);
        if (it == index.end()) fail(ErrorKind::unknown_element, l);
        return it->second;
    };

    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (const auto& [lo, hi] : leq_pairs)
        leq[static_cast<std::size_t>(at(lo))][static_cast<std::size_t>(at(hi))] = true;
    // Reflexive-transitive closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) continue;
            for (int j = 0; j < n; ++j)
                if (leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                fail(ErrorKind::malformed_table,
                     "leq cycle through " + labels[static_cast<std::size_t>(i)] + " and " +
                         labels[static_cast<std::size_t>(j)]);

    std::vector<int> ortho(static_cast<std::size_t>(n), -1);
    auto set_ortho = [&](int x, int y) {
        auto& slot = ortho[static_cast<std::size_t>(x)];
        if (slot != -1 && slot != y)
            fail(ErrorKind::malformed_table,
                 "conflicting orthocomplements for " + labels[static_cast<std::size_t>(x)]);
        slot = y;
    };
    for (const auto& [x, y] : ortho_pairs) {
        set_ortho(at(x), at(y));
        set_ortho(at(y), at(x));
    }
    for (int i = 0; i < n; ++i)
        if (ortho[static_cast<std::size_t>(i)] == -1)
            fail(ErrorKind::malformed_table,
                 "no orthocomplement for " + labels[static_cast<std::size_t>(i)]);

    return from_parts(std::move(name), std::move(labels), std::move(leq), std::move(ortho),
                      at(bottom), at(top));
}

FiniteLogic FiniteLogic::from_parts(std::string name,
                                    std::vector<std::string> labels,
                                    std::vector<std::vector<bool>> leq,
                                    std::vector<int> ortho,
                                    int bottom,
                                    int top) {
    const std::size_t n = labels.size();
    if (leq.size() != n || ortho.size() != n)
        fail(ErrorKind::malformed_table, "table sizes disagree");
    for (const auto& row : leq)
        if (row.size() != n) fail(ErrorKind::malformed_table, "ragged leq table");
    for (std::size_t i = 0; i < n; ++i) {
        const int o = ortho[i];
        if (o < 0 || static_cast<std::size_t>(o) >= n)
            fail(ErrorKind::malformed_table, "orthocomplement index out of range");
        if (static_cast<std::size_t>(ortho[static_cast<std::size_t>(o)]) != i)
            fail(ErrorKind::malformed_table,
                 "orthocomplement is not an involution at " + labels[i]);
    }
    if (bottom < 0 || static_cast<std::size_t>(bottom) >= n || top < 0 ||
        static_cast<std::size_t>(top) >= n)
        fail(ErrorKind::malformed_table, "bounds out of range");
    FiniteLogic l;
    l.name_ = std::move(name);
    l.labels_ = std::move(labels);
    l.leq_ = std::move(leq);
    l.ortho_ = std::move(ortho);
    l.bottom_ = bottom;
    l.top_ = top;
    return l;
}

FiniteLogic FiniteLogic::boolean_algebra(int n_atoms) {
    if (n_atoms < 1 || n_atoms > 5) fail(ErrorKind::bad_argument, "boolean_algebra(1..5)");
    const int n = 1 << n_atoms;
    const char* names = "abcde";
    std::vector<std::string> labels;
    for (int mask = 0; mask < n; ++mask) {
        if (mask == 0) {
            labels.emplace_back("0");
        } else if (mask == n - 1) {
            labels.emplace_back("1");
        } else {
            std::string s;
            for (int b = 0; b < n_atoms; ++b)
                if (mask & (1 << b)) s += names[b];
            labels.push_back(std::move(s));
        }
    }
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<int> ortho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ortho[static_cast<std::size_t>(i)] = (n - 1) & ~i;
        for (int j = 0; j < n; ++j)
            leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i & j) == i;
    }
    return from_parts("boolean-2^" + std::to_string(n_atoms), std::move(labels), std::move(leq),
                      std::move(ortho), 0, n - 1);
}

FiniteLogic FiniteLogic::mo2() {
    return from_relations("MO2", {"0", "a", "a'", "b", "b'", "1"},
                          {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"},
                           {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}},
                          {{"0", "1"}, {"a", "a'"}, {"b", "b'"}}, "0", "1");
}

FiniteLogic FiniteLogic::o6() {
    return from_relations("O6", {"0", "a", "b", "b'", "a'", "1"},
                          {{"0", "a"}, {"0", "b"}, {"0", "b'"}, {"0", "a'"},
                           {"a", "b"}, {"b'", "a'"},
                           {"a", "1"}, {"b", "1"}, {"b'", "1"}, {"a'", "1"}},
                          {{"0", "1"}, {"a", "a'"}, {"b", "b'"}}, "0", "1");
}

std::optional<int> FiniteLogic::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return std::nullopt;
}

void FiniteLogic::build_tables() const {
    if (tables_built_) return;
    const int n = size();
    meet_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    join_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            int m = -1;
            for (int c = 0; c < n; ++c) {
                if (!(leq(c, i) && leq(c, j))) continue;
                if (m == -1 || leq(m, c)) m = c; // climb towards a maximum
            }
            // verify m dominates every common lower bound
            if (m != -1)
                for (int c = 0; c < n; ++c)
                    if (leq(c, i) && leq(c, j) && !leq(c, m)) {
                        m = -1;
                        break;
                    }
            meet_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
            meet_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = m;

            int u = -1;
            for (int c = 0; c < n; ++c) {
                if (!(leq(i, c) && leq(j, c))) continue;
                if (u == -1 || leq(c, u)) u = c;
            }
            if (u != -1)
                for (int c = 0; c < n; ++c)
                    if (leq(i, c) && leq(j, c) && !leq(u, c)) {
                        u = -1;
                        break;
                    }
            join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = u;
            join_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = u;
        }
    }
    atom_.assign(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (i == bottom_ || !leq(bottom_, i)) continue;
        bool minimal = true;
        for (int c = 0; c < n && minimal; ++c)
            if (c != i && c != bottom_ && leq(c, i)) minimal = false;
        atom_[static_cast<std::size_t>(i)] = minimal;
    }
    tables_built_ = true;
}

std::optional<int> FiniteLogic::meet(int i, int j) const {
    build_tables();
    const int m = meet_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (m == -1) return std::nullopt;
    return m;
}

std::optional<int> FiniteLogic::join(int i, int j) const {
    build_tables();
    const int u = join_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (u == -1) return std::nullopt;
    return u;
}

bool FiniteLogic::is_atom(int i) const {
    build_tables();
    return atom_[static_cast<std::size_t>(i)];
}

LawResult FiniteLogic::complement_pair_law(int a) const {
    const auto m = meet(a, ortho(a));
    const auto u = join(a, ortho(a));
    if (!m || !u) return LawResult::unavailable;
    return (*m == bottom_ && *u == top_) ? LawResult::holds : LawResult::fails;
}

LawResult FiniteLogic::orthomodular_pair_law(int a, int b) const {
    const auto m = meet(b, ortho(a));
    if (!m) return LawResult::unavailable;
    const auto u = join(a, *m);
    if (!u) return LawResult::unavailable;
    return *u == b ? LawResult::holds : LawResult::fails;
}

LawResult FiniteLogic::covering_step_law(int a, int p) const {
    const auto u = join(a, p);
    if (!u) return LawResult::unavailable;
    const auto m = meet(*u, ortho(a));
    if (!m) return LawResult::unavailable;
    return (*m == bottom_ || is_atom(*m)) ? LawResult::holds : LawResult::fails;
}

LawResult FiniteLogic::central_law(int c) const {
    bool incomplete = false;
    for (int a = 0; a < size(); ++a) {
        const auto m1 = meet(a, c);
        const auto m2 = meet(a, ortho(c));
        if (!m1 || !m2) {
            incomplete = true;
            continue;
        }
        const auto u = join(*m1, *m2);
        if (!u) {
            incomplete = true;
            continue;
        }
        if (*u != a) return LawResult::fails;
    }
    return incomplete ? LawResult::unavailable : LawResult::holds;
}

LawResult FiniteLogic::disjoint_law(int a, int b) const {
    for (int c = 0; c < size(); ++c)
        if (c != bottom_ && leq(c, a) && leq(c, b)) return LawResult::fails;
    return LawResult::holds;
}

LawResult FiniteLogic::superposition_law(int q, int p1, int p2) const {
    const auto u = join(p1, p2);
    if (!u) return LawResult::unavailable;
    return leq(q, *u) ? LawResult::holds : LawResult::fails;
}

} // namespace oml
