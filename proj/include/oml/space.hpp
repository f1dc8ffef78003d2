#pragma once

/**
 * @file space.hpp
 * @brief Finite-dimensional Hermitian spaces over exact fields and the
 *        lattice of their subspaces.
 *
 * A space carries a form matrix H with f(u, v) = sum_i sum_j u_i H_ij v_j*,
 * linear in the first argument and involution-linear in the second.  The
 * form must be Hermitian (H_ij = H_ji*) and anisotropic; anisotropy is
 * certified at construction by positive leading principal minors in the
 * real embedding.
 *
 * Subspaces are stored by their unique reduced-row-echelon basis, so
 * structural equality coincides with equality of point sets.  With an
 * anisotropic form every subspace M satisfies M = M-perp-perp and
 * M + M-perp = V, which is what makes the subspace lattice orthomodular;
 * check_orthomodular_space verifies this on sampled subspaces.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oml/linalg.hpp"
#include "oml/report.hpp"
#include "oml/rng.hpp"

namespace oml {

class HermitianSpace;
using SpacePtr = std::shared_ptr<const HermitianSpace>;

std::string to_string(const Vec& v);

class HermitianSpace : public std::enable_shared_from_this<HermitianSpace> {
public:
    /// Space with the natural form (identity matrix).
    static SpacePtr make(Field field, int dim);

    /// Space with an explicit form matrix; validates Hermitian symmetry
    /// and positive definiteness exactly.
    static SpacePtr make(Field field, int dim, Mat form);

    const Field& field() const { return field_; }
    int dim() const { return dim_; }
    const Mat& form_matrix() const { return form_; }

    /// f(u, v), linear in u, involution-linear in v.
    Scalar form(const Vec& u, const Vec& v) const;

    bool same(const HermitianSpace& o) const;

    Vec zero_vector() const { return la::zero_vec(dim_, field_); }
    Vec basis_vector(int i) const;

    std::string name() const;

private:
    HermitianSpace(Field f, int dim, Mat form)
        : field_(f), dim_(dim), form_(std::move(form)) {}

    Field field_;
    int dim_;
    Mat form_;
};

/// A subspace in canonical form.  Value semantics; holds its space.
class Subspace {
public:
    static Subspace span(SpacePtr space, const Mat& generators);
    static Subspace line(SpacePtr space, const Vec& generator); ///< zero_vector error on 0
    static Subspace zero(SpacePtr space);
    static Subspace full(SpacePtr space);

    const Mat& basis() const { return basis_; }
    const SpacePtr& space() const { return space_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return dim() == space_->dim(); }
    bool is_atom() const { return dim() == 1; }

    /// Canonical generator of an atom (the single basis row).
    const Vec& generator() const;

    bool contains(const Vec& v) const;
    bool includes(const Subspace& other) const; ///< other is a subset of this

    std::string label() const;

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.space_->same(*y.space_) && x.basis_ == y.basis_;
    }
    friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

private:
    Subspace(SpacePtr space, Mat basis) : space_(std::move(space)), basis_(std::move(basis)) {}

    SpacePtr space_;
    Mat basis_; // canonical rref rows
};

Subspace ortho(const Subspace& m);
Subspace meet(const Subspace& x, const Subspace& y);
Subspace join(const Subspace& x, const Subspace& y);

/// M = M-perp-perp; holds for every subspace of an anisotropic space.
bool is_f_closed(const Subspace& m);

/// Orthogonal projection of v onto m.
Vec project(const Subspace& m, const Vec& v);

/// Matrix of the projection onto m in the standard basis.
Mat projection_matrix(const Subspace& m);

/// (p join a-perp) meet a: the image of p under the projection onto a,
/// at lattice level.
Subspace sasaki(const Subspace& a, const Subspace& p);

/// Samples subspaces and verifies dim M + dim M-perp = dim V,
/// M meet M-perp = 0, M join M-perp = V and M = M-perp-perp.
CheckReport check_orthomodular_space(const SpacePtr& space, int samples, std::uint64_t seed);

/// For every element a and atom p: (a join p) meet a-perp is an atom or 0.
CheckReport check_covering_geometric(const std::vector<Subspace>& elements,
                                     const std::vector<Subspace>& atoms);

/// Over Q only: a generator of unit form value, when the atom admits one.
std::optional<Vec> unit_vector_in_atom(const Subspace& atom);

/// Over Q only: generators x' of p and y' of q with f(x',x') = f(y',y'),
/// when the ratio of form values is a rational square.
std::optional<std::pair<Vec, Vec>> equal_norm_representatives(const Subspace& p,
                                                              const Subspace& q);

Vec random_vector(const SpacePtr& space, Rng& rng, long long bound = 5);
Vec random_nonzero_vector(const SpacePtr& space, Rng& rng, long long bound = 5);
Subspace random_subspace(const SpacePtr& space, Rng& rng, long long bound = 5);
Subspace random_atom(const SpacePtr& space, Rng& rng, long long bound = 5);

} // namespace oml
