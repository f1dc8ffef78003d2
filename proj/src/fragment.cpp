#include "oml/fragment.hpp"

namespace oml {

bool Fragment::insert_pair(const Subspace& s) {
    auto add_one = [&](const Subspace& x) {
        const std::string key = x.label();
        if (index_by_label_.count(key)) return;
        index_by_label_.emplace(key, static_cast<int>(elements_.size()));
        elements_.push_back(x);
    };
    const Subspace o = oml::ortho(s);
    // Admit both or neither: every member must carry its orthocomplement.
    const std::size_t need = (index_by_label_.count(s.label()) ? 0u : 1u) +
                             (index_by_label_.count(o.label()) ? 0u : 1u);
    if (elements_.size() + need > cap_) return need == 0;
    add_one(s);
    add_one(o);
    return true;
}

Fragment Fragment::generate(SpacePtr space,
                            const std::vector<Subspace>& generators,
                            std::size_t cap) {
    if (cap < 2) fail(ErrorKind::bad_argument, "fragment cap must allow 0 and V");
    Fragment f(space);
    f.cap_ = cap;
    f.insert_pair(Subspace::zero(space));
    for (const Subspace& g : generators) {
        if (!g.space()->same(*space))
            fail(ErrorKind::space_mismatch, "generator from a different space");
        if (!f.insert_pair(g)) {
            f.truncated_ = true;
            break;
        }
    }

    // Frontier closure: when element i arrives, combine it with every
    // earlier element.  Orthocomplements are already paired in, so only
    // meets and joins create new work.
    if (!f.truncated_) {
        for (std::size_t i = 0; i < f.elements_.size() && !f.truncated_; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                const Subspace a = f.elements_[i];
                const Subspace b = f.elements_[j];
                if (!f.insert_pair(meet(a, b)) || !f.insert_pair(join(a, b))) {
                    f.truncated_ = true;
                    break;
                }
            }
        }
    }

    f.rebuild_tables();
    return f;
}

void Fragment::rebuild_tables() {
    const std::size_t n = elements_.size();
    leq_.assign(n, std::vector<bool>(n, false));
    ortho_.assign(n, -1);
    atoms_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            leq_[i][j] = elements_[j].includes(elements_[i]);
        const Subspace o = oml::ortho(elements_[i]);
        auto it = index_by_label_.find(o.label());
        // insert_pair keeps members ortho-paired, so this always resolves.
        if (it == index_by_label_.end())
            fail(ErrorKind::malformed_table, "fragment lost an orthocomplement");
        ortho_[i] = it->second;
        if (elements_[i].dim() == 1) atoms_.push_back(static_cast<int>(i));
    }
}

std::optional<int> Fragment::index_of(const Subspace& s) const {
    auto it = index_by_label_.find(s.label());
    if (it == index_by_label_.end()) return std::nullopt;
    return it->second;
}

std::string Fragment::name() const {
    std::string n = "fragment(" + space_->name() + ", " + std::to_string(size()) + " elements";
    if (truncated_) n += ", truncated";
    return n + ")";
}

FiniteLogic Fragment::to_logic() const {
    const int n = size();
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n)));
    std::vector<int> ort(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = label(i);
        ort[static_cast<std::size_t>(i)] = ortho(i);
        for (int j = 0; j < n; ++j)
            le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = leq(i, j);
    }
    return FiniteLogic::from_parts(name(), std::move(labels), std::move(le), std::move(ort),
                                   bottom(), top());
}

// --- FragmentLogic: geometric law semantics --------------------------------

LawResult FragmentLogic::complement_pair_law(int a) const {
    const Subspace& o = sub(ortho(a));
    const bool ok = meet(sub(a), o).is_zero() && join(sub(a), o).is_full();
    return ok ? LawResult::holds : LawResult::fails;
}

LawResult FragmentLogic::orthomodular_pair_law(int a, int b) const {
    const Subspace rhs = join(sub(a), meet(sub(b), sub(ortho(a))));
    return rhs == sub(b) ? LawResult::holds : LawResult::fails;
}

LawResult FragmentLogic::covering_step_law(int a, int p) const {
    const Subspace step = meet(join(sub(a), sub(p)), sub(ortho(a)));
    return step.dim() <= 1 ? LawResult::holds : LawResult::fails;
}

LawResult FragmentLogic::central_law(int c) const {
    // Quantified over fragment members only; intermediates are geometric.
    for (int a = 0; a < size(); ++a) {
        const Subspace lhs = join(meet(sub(a), sub(c)), meet(sub(a), sub(ortho(c))));
        if (lhs != sub(a)) return LawResult::fails;
    }
    return LawResult::holds;
}

LawResult FragmentLogic::disjoint_law(int a, int b) const {
    return meet(sub(a), sub(b)).is_zero() ? LawResult::holds : LawResult::fails;
}

LawResult FragmentLogic::superposition_law(int q, int p1, int p2) const {
    return join(sub(p1), sub(p2)).includes(sub(q)) ? LawResult::holds
                                                   : LawResult::fails;
}

} // namespace oml
