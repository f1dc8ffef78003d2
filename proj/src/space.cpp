#include "oml/space.hpp"

#include <sstream>

namespace oml {

std::string to_string(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

SpacePtr HermitianSpace::make(Field field, int dim) {
    return make(field, dim, la::identity(dim, field));
}

SpacePtr HermitianSpace::make(Field field, int dim, Mat form) {
    if (dim < 1) fail(ErrorKind::dimension_mismatch, "dimension must be positive");
    if (form.size() != static_cast<std::size_t>(dim))
        fail(ErrorKind::dimension_mismatch, "form matrix is not dim x dim");
    for (const auto& row : form) {
        if (row.size() != static_cast<std::size_t>(dim))
            fail(ErrorKind::dimension_mismatch, "form matrix is not square");
        for (const auto& x : row)
            if (x.field() != field)
                fail(ErrorKind::descriptor_mismatch, "form entry in the wrong field");
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (form[i][j] != form[j][i].conj())
                fail(ErrorKind::not_hermitian,
                     "H[" + std::to_string(i) + "][" + std::to_string(j) + "] != H[" +
                         std::to_string(j) + "][" + std::to_string(i) + "]*");
    // Positive definiteness: every leading principal minor is positive in
    // the real embedding.  For conjugation fields the minors are rational
    // by Hermitian symmetry, so the sign test is always available.
    for (int k = 1; k <= dim; ++k) {
        Mat minor;
        for (int i = 0; i < k; ++i)
            minor.emplace_back(form[i].begin(), form[i].begin() + k);
        if (la::det(std::move(minor)).sign() <= 0)
            fail(ErrorKind::not_positive_definite,
                 "leading principal minor " + std::to_string(k) + " is not positive");
    }
    return SpacePtr(new HermitianSpace(field, dim, std::move(form)));
}

Scalar HermitianSpace::form(const Vec& u, const Vec& v) const {
    if (u.size() != static_cast<std::size_t>(dim_) || v.size() != static_cast<std::size_t>(dim_))
        fail(ErrorKind::dimension_mismatch, "form argument length");
    // f(u, v) = u^T H v*
    return la::dot(u, la::matvec(form_, la::conj(v)));
}

bool HermitianSpace::same(const HermitianSpace& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && form_ == o.form_;
}

Vec HermitianSpace::basis_vector(int i) const {
    if (i < 0 || i >= dim_) fail(ErrorKind::dimension_mismatch, "basis index");
    Vec v = zero_vector();
    v[static_cast<std::size_t>(i)] = field_.one();
    return v;
}

std::string HermitianSpace::name() const {
    std::string base = field_.is_rationals()
                           ? "Q"
                           : "Q(rt" + std::to_string(field_.root_square()) + ")";
    std::string out = base + "^" + std::to_string(dim_);
    if (form_ != la::identity(dim_, field_)) out += " (custom form)";
    return out;
}

Subspace Subspace::span(SpacePtr space, const Mat& generators) {
    Mat rows;
    for (const auto& g : generators) {
        if (g.size() != static_cast<std::size_t>(space->dim()))
            fail(ErrorKind::dimension_mismatch, "generator length");
        for (const auto& x : g)
            if (x.field() != space->field())
                fail(ErrorKind::descriptor_mismatch, "generator in the wrong field");
        rows.push_back(g);
    }
    la::rref(rows);
    return Subspace(std::move(space), std::move(rows));
}

Subspace Subspace::line(SpacePtr space, const Vec& generator) {
    if (la::is_zero(generator)) fail(ErrorKind::zero_vector, "line through the zero vector");
    return span(std::move(space), Mat{generator});
}

Subspace Subspace::zero(SpacePtr space) { return Subspace(std::move(space), Mat{}); }

Subspace Subspace::full(SpacePtr space) {
    Mat id = la::identity(space->dim(), space->field());
    return Subspace(std::move(space), std::move(id));
}

const Vec& Subspace::generator() const {
    if (!is_atom()) fail(ErrorKind::not_an_atom, label());
    return basis_[0];
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != static_cast<std::size_t>(space_->dim()))
        fail(ErrorKind::dimension_mismatch, "vector length");
    if (la::is_zero(v)) return true;
    Mat m = basis_;
    m.push_back(v);
    return la::rank(std::move(m)) == dim();
}

bool Subspace::includes(const Subspace& other) const {
    if (!space_->same(*other.space_)) fail(ErrorKind::space_mismatch, "subspace comparison");
    if (other.dim() > dim()) return false;
    Mat m = basis_;
    for (const auto& row : other.basis_) m.push_back(row);
    return la::rank(std::move(m)) == dim();
}

std::string Subspace::label() const {
    if (is_zero()) return "0";
    if (is_full()) return "V";
    std::string out = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) out += ", ";
        out += to_string(basis_[i]);
    }
    return out + "}";
}

Subspace ortho(const Subspace& m) {
    const SpacePtr& sp = m.space();
    if (m.is_zero()) return Subspace::full(sp);
    // v is orthogonal to span(b_1..b_r) iff for each r the functional
    // sum_i v_i (H conj(b_r))_i vanishes.
    Mat functionals;
    for (const auto& b : m.basis())
        functionals.push_back(la::matvec(sp->form_matrix(), la::conj(b)));
    Mat basis = la::nullspace(functionals, sp->dim(), sp->field());
    return Subspace::span(sp, basis);
}

Subspace meet(const Subspace& x, const Subspace& y) {
    if (!x.space()->same(*y.space())) fail(ErrorKind::space_mismatch, "meet");
    const SpacePtr& sp = x.space();
    if (x.is_zero() || y.is_zero()) return Subspace::zero(sp);
    // Zassenhaus: row reduce [Bx | Bx; By | 0]; rows with zero left half
    // carry an intersection basis in their right half.
    const int n = sp->dim();
    Mat block;
    for (const auto& b : x.basis()) {
        Vec row = b;
        row.insert(row.end(), b.begin(), b.end());
        block.push_back(std::move(row));
    }
    for (const auto& b : y.basis()) {
        Vec row = b;
        Vec zero = la::zero_vec(n, sp->field());
        row.insert(row.end(), zero.begin(), zero.end());
        block.push_back(std::move(row));
    }
    la::rref(block);
    Mat inter;
    for (const auto& row : block) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            left_zero = row[static_cast<std::size_t>(j)].is_zero();
        if (left_zero)
            inter.emplace_back(row.begin() + n, row.end());
    }
    return Subspace::span(sp, inter);
}

Subspace join(const Subspace& x, const Subspace& y) {
    if (!x.space()->same(*y.space())) fail(ErrorKind::space_mismatch, "join");
    Mat rows = x.basis();
    for (const auto& b : y.basis()) rows.push_back(b);
    return Subspace::span(x.space(), rows);
}

bool is_f_closed(const Subspace& m) { return ortho(ortho(m)) == m; }

Vec project(const Subspace& m, const Vec& v) {
    const SpacePtr& sp = m.space();
    if (m.is_zero()) return sp->zero_vector();
    const Mat& b = m.basis();
    const std::size_t r = b.size();
    // Solve sum_s x_s f(b_s, b_r) = f(v, b_r); the Gram matrix is
    // invertible because the form is anisotropic on m.
    Mat gram(r, la::zero_vec(static_cast<int>(r), sp->field()));
    Vec rhs;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t s = 0; s < r; ++s) gram[i][s] = sp->form(b[s], b[i]);
        rhs.push_back(sp->form(v, b[i]));
    }
    const auto x = la::solve(gram, rhs);
    if (!x) fail(ErrorKind::not_positive_definite, "degenerate Gram matrix on " + m.label());
    Vec out = sp->zero_vector();
    for (std::size_t s = 0; s < r; ++s) out = la::add(out, la::scale((*x)[s], b[s]));
    return out;
}

Mat projection_matrix(const Subspace& m) {
    const SpacePtr& sp = m.space();
    const int n = sp->dim();
    Mat cols;
    for (int i = 0; i < n; ++i) cols.push_back(project(m, sp->basis_vector(i)));
    return la::transpose(cols);
}

Subspace sasaki(const Subspace& a, const Subspace& p) {
    return meet(join(p, ortho(a)), a);
}

CheckReport check_orthomodular_space(const SpacePtr& space, int samples, std::uint64_t seed) {
    CheckReport r;
    r.check = "orthomodular-space";
    r.target = space->name();
    r.stat("samples", samples);
    r.stat("seed", static_cast<long long>(seed));
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
        const Subspace m = random_subspace(space, rng);
        const Subspace mp = ortho(m);
        const bool dims = m.dim() + mp.dim() == space->dim();
        const bool disjoint = meet(m, mp).is_zero();
        const bool spanning = join(m, mp).is_full();
        const bool closed = ortho(mp) == m;
        if (!(dims && disjoint && spanning && closed))
            r.witness(m.label());
    }
    return r.finish();
}

CheckReport check_covering_geometric(const std::vector<Subspace>& elements,
                                     const std::vector<Subspace>& atoms) {
    CheckReport r;
    r.check = "covering-geometric";
    r.target = elements.empty() ? "no elements" : elements.front().space()->name();
    r.stat("elements", static_cast<long long>(elements.size()));
    r.stat("atoms", static_cast<long long>(atoms.size()));
    for (const auto& a : elements) {
        for (const auto& p : atoms) {
            if (!p.is_atom()) fail(ErrorKind::not_an_atom, p.label());
            const Subspace step = meet(join(a, p), ortho(a));
            if (step.dim() > 1)
                r.witness("a = " + a.label() + ", p = " + p.label());
        }
    }
    return r.finish();
}

std::optional<Vec> unit_vector_in_atom(const Subspace& atom) {
    const SpacePtr& sp = atom.space();
    if (!sp->field().is_rationals())
        fail(ErrorKind::descriptor_mismatch, "unit vectors are searched over Q only");
    const Vec& g = atom.generator();
    const Rational nu = sp->form(g, g).as_rational();
    const auto root = rational_sqrt(nu);
    if (!root) return std::nullopt;
    return la::scale(sp->field().from_rational(1 / *root), g);
}

std::optional<std::pair<Vec, Vec>> equal_norm_representatives(const Subspace& p,
                                                              const Subspace& q) {
    const SpacePtr& sp = p.space();
    if (!sp->same(*q.space())) fail(ErrorKind::space_mismatch, "representative search");
    if (!sp->field().is_rationals())
        fail(ErrorKind::descriptor_mismatch, "representative search over Q only");
    Vec x = p.generator();
    Vec y = q.generator();
    // Prefer unit representatives when an atom admits one; this does not
    // change whether the final ratio is a square.
    if (const auto ux = unit_vector_in_atom(p)) x = *ux;
    if (const auto uy = unit_vector_in_atom(q)) y = *uy;
    const Rational nx = sp->form(x, x).as_rational();
    const Rational ny = sp->form(y, y).as_rational();
    const auto r = rational_sqrt(nx / ny);
    if (!r) return std::nullopt;
    y = la::scale(sp->field().from_rational(*r), y);
    return std::make_pair(std::move(x), std::move(y));
}

Vec random_vector(const SpacePtr& space, Rng& rng, long long bound) {
    Vec v;
    for (int i = 0; i < space->dim(); ++i) v.push_back(rng.scalar(space->field(), bound));
    return v;
}

Vec random_nonzero_vector(const SpacePtr& space, Rng& rng, long long bound) {
    for (;;) {
        Vec v = random_vector(space, rng, bound);
        if (!la::is_zero(v)) return v;
    }
}

Subspace random_subspace(const SpacePtr& space, Rng& rng, long long bound) {
    const int k = static_cast<int>(rng.range(0, space->dim()));
    Mat rows;
    for (int i = 0; i < k; ++i) rows.push_back(random_vector(space, rng, bound));
    return Subspace::span(space, rows);
}

Subspace random_atom(const SpacePtr& space, Rng& rng, long long bound) {
    return Subspace::line(space, random_nonzero_vector(space, rng, bound));
}

} // namespace oml
