/*
   Copyright 2026 The iwahori authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IWAHORI_AFFINE_WEYL_HPP
#define IWAHORI_AFFINE_WEYL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iwahori/root_data.hpp"

namespace iwahori {

/// Invertible affine transformation x |-> linear x + shift of the apartment.
struct AffineMap {
    Mat linear;
    Vec shift;
    bool operator==(const AffineMap&) const = default;
    bool operator<(const AffineMap& o) const {
        if (shift != o.shift) return shift < o.shift;
        return linear < o.linear;
    }
};

AffineMap affine_identity(std::size_t n);
AffineMap compose(const AffineMap& f, const AffineMap& g);  // f after g
AffineMap affine_inverse(const AffineMap& f);
Vec apply(const AffineMap& f, const Vec& x);
bool is_identity(const AffineMap& f);

/// Pushforward of an affine root: (w a)(x) = a(w^{-1} x). The same linear
/// part acts on gradients and points because the inner product is invariant.
AffineRoot act_on_root(const AffineMap& w, const AffineRoot& a, const Mat& gram);

/// The reduced word of a finite Weyl group element, or nullopt when the
/// matrix is not in the finite Weyl group (e.g. a diagram automorphism).
std::optional<std::vector<int>> finite_weyl_word(const Mat& linear, const FiniteRootSystem& fs);
Mat simple_reflection_matrix(const FiniteRootSystem& fs, int i);

/*
  Element of the affine Weyl group of a system (or of its extension by
  alcove-stabilizing translations: any owner-preserving affine map whose
  linear part lies in the finite Weyl group). Canonical form is the affine
  map itself: equality is exact and word-independent.
*/
class WeylElement {
  public:
    static WeylElement identity(std::shared_ptr<const AffineRootSystem> sys);
    /// Reflection across the wall {a = 0}; an involution.
    static WeylElement reflection(std::shared_ptr<const AffineRootSystem> sys, const AffineRoot& a);
    /// t_lambda; lambda must preserve the level sets.
    static WeylElement translation(std::shared_ptr<const AffineRootSystem> sys, const Vec& lambda);
    /// Validates that the map is an automorphism of the system with linear
    /// part in the finite Weyl group.
    static WeylElement from_map(std::shared_ptr<const AffineRootSystem> sys, AffineMap map);

    const AffineMap& map() const { return map_; }
    const std::shared_ptr<const AffineRootSystem>& owner() const { return owner_; }

    WeylElement multiply(const WeylElement& other) const;
    WeylElement inverse() const;
    Vec act_point(const Vec& x) const { return apply(map_, x); }
    AffineRoot act_root(const AffineRoot& a) const;

    bool is_identity() const { return iwahori::is_identity(map_); }
    /// True when the element lies in the affine Weyl group proper, i.e. its
    /// translation part is in the coroot lattice.
    bool in_affine_group() const;

    bool operator==(const WeylElement& w) const { return map_ == w.map_; }
    bool operator<(const WeylElement& w) const { return map_ < w.map_; }

  private:
    WeylElement(std::shared_ptr<const AffineRootSystem> sys, AffineMap map)
        : owner_(std::move(sys)), map_(std::move(map)) {}
    void require_same_owner(const WeylElement& other) const;

    std::shared_ptr<const AffineRootSystem> owner_;
    AffineMap map_;
};

/// A wall of the base alcove together with the generator attached to it.
/// For untwisted systems the generator is the wall reflection; for descended
/// systems it is the embedded representative acting on the fixed apartment.
struct Wall {
    AffineRoot root;  // the unique non-divisible positive root vanishing there
    AffineMap action;
    std::string name;    // "s0", "s1", ... or "s_fix", "s_orb"
    int nr_length = 1;   // length of the generator in the ambient system
    std::vector<int> nr_orbit;  // ambient wall indices this wall came from
};

/// A Coxeter system presented by a root system plus one generator per wall of
/// the base alcove. All word/length/order algorithms run against a view, so
/// the untwisted group and the descended fixed group share one
/// implementation.
struct CoxeterView {
    std::shared_ptr<const AffineRootSystem> sys;
    std::vector<Wall> walls;
};

/// View of an untwisted system: generators are the wall reflections, walls
/// named s0, s1, ...
CoxeterView standard_view(std::shared_ptr<const AffineRootSystem> sys);

namespace cox {

/// R(w): positive roots made negative, computed per gradient as an exact
/// level interval intersected with the level progression.
std::vector<AffineRoot> inversion_set(const AffineMap& w, const AffineRootSystem& sys);
/// Number of non-divisible roots in R(w). Equals the Coxeter length of w for
/// group elements; counts walls separating the base alcove from its image.
int length(const AffineMap& w, const AffineRootSystem& sys);
/// |R(w)| with divisible roots included.
int inversion_count_all(const AffineMap& w, const AffineRootSystem& sys);

bool is_right_descent(const AffineMap& w, const CoxeterView& view, std::size_t wall);
bool is_left_descent(const AffineMap& w, const CoxeterView& view, std::size_t wall);

/// Greedy reduced word, lowest wall index first. Throws DomainError
/// (not_in_group) when the element is not a word in the view's generators.
std::vector<int> reduced_word(const AffineMap& w, const CoxeterView& view);
AffineMap from_word(const CoxeterView& view, const std::vector<int>& word);

/// Bruhat-Chevalley order via the recursive descent criterion.
bool bruhat_leq(const AffineMap& w, const AffineMap& v, const CoxeterView& view);

struct BallEntry {
    AffineMap map;
    int length;
    std::vector<int> word;  // reduced, lexicographically first at its length
};
/// All elements of word length <= radius, BFS order (deterministic: sorted by
/// (length, word)).
std::vector<BallEntry> ball(const CoxeterView& view, int radius);

/// Entry (i, j) is the order of the product of generators i and j; 0 encodes
/// infinite order (declared when powers fail to cycle within 30 steps).
IMat coxeter_matrix(const CoxeterView& view);

}  // namespace cox

/// Convenience wrappers on elements of untwisted systems.
std::vector<AffineRoot> inversion_set(const WeylElement& w);
int length(const WeylElement& w);
std::vector<int> reduced_word(const WeylElement& w);
bool bruhat_leq(const WeylElement& w, const WeylElement& v);
WeylElement from_word(std::shared_ptr<const AffineRootSystem> sys, const std::vector<int>& word);

}  // namespace iwahori

#endif
