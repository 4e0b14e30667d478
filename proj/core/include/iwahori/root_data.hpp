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

#ifndef IWAHORI_ROOT_DATA_HPP
#define IWAHORI_ROOT_DATA_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "iwahori/linalg.hpp"

namespace iwahori {

/// Thrown when an operation receives input outside its domain (exit code 3
/// in the CLI). `code` distinguishes the error classes named by the CLI.
class DomainError : public std::runtime_error {
  public:
    enum class Code {
        invalid_type,
        owner_mismatch,
        dimension_mismatch,
        corrupted_alcove,
        not_a_root,
        not_in_group,
        not_diagram_automorphism,
        not_sigma_fixed,
        non_reduced_word,
        infinite_parabolic,
        bad_lattice,
    };
    DomainError(Code code, const std::string& message) : std::runtime_error(message), code_(code) {}
    Code code() const { return code_; }

  private:
    Code code_;
};

struct CartanComponent {
    char letter;  // one of A B C D E F G
    int rank;
    bool operator==(const CartanComponent&) const = default;
};
using CartanType = std::vector<CartanComponent>;

/// Parses "A2", "G2", "A1xA1", "C2xA3". Throws DomainError on invalid input,
/// naming the offending (letter, rank) pair.
CartanType parse_cartan_type(std::string_view text);
std::string to_string(const CartanType& type);

/// One root of a finite system: integer expansion in the simple roots plus
/// its realization in the coroot-coordinate apartment.
struct FiniteRoot {
    std::vector<Int> coeffs;  // expansion in simple roots, all same sign
    Vec vec;                  // gradient vector in apartment coordinates
    Vec coroot;               // 2 vec / (vec, vec)
    int component;
    bool positive;
    Int height;  // sum of coeffs
};

/*
  Finite crystallographic root system realized in the rational span of the
  coroot lattice: points and coroots carry coroot-basis coordinates (so the
  coroot lattice is exactly Z^rank), and a root alpha is stored as the vector
  v with <alpha, x> = (v, x) under the Weyl-invariant inner product, which is
  normalized per irreducible component so short coroots have square length 2.
*/
class FiniteRootSystem {
  public:
    static FiniteRootSystem build(const CartanType& type);
    static FiniteRootSystem build(std::string_view type_text) { return build(parse_cartan_type(type_text)); }

    int rank() const { return rank_; }
    const CartanType& type() const { return type_; }
    /// cartan()(i, j) = pairing of simple root i with simple coroot j.
    const IMat& cartan() const { return cartan_; }
    const Mat& inner_product() const { return gram_; }
    const std::vector<FiniteRoot>& roots() const { return roots_; }
    const Vec& simple_root(int i) const { return roots_[simple_index_[i]].vec; }
    const Vec& simple_coroot(int i) const { return roots_[simple_index_[i]].coroot; }
    /// Index into roots() of the root with this gradient vector, or -1.
    int root_index(const Vec& v) const;
    int num_components() const { return num_components_; }
    int component_of_simple(int i) const { return component_of_[i]; }
    /// Index into roots() of the highest root, one per component.
    const std::vector<int>& highest_roots() const { return highest_; }
    /// Columns are the fundamental coweights (dual basis to the simple roots).
    const Mat& fundamental_coweights() const { return fundamental_coweights_; }

    /// <alpha, x> for a root given by its gradient vector.
    Rat pair(const Vec& root_vec, const Vec& point) const { return bilinear(gram_, root_vec, point); }
    /// 2 v / (v, v) for any nonzero vector.
    Vec coroot_of(const Vec& v) const;

  private:
    CartanType type_;
    int rank_ = 0;
    IMat cartan_;
    Mat gram_;
    std::vector<int> component_of_;  // simple index -> component
    int num_components_ = 0;
    std::vector<FiniteRoot> roots_;
    std::vector<int> simple_index_;  // i -> index of alpha_i in roots_
    std::map<Vec, int> root_lookup_;
    std::vector<int> highest_;
    Mat fundamental_coweights_;
};

/// The affine function x |-> (gradient, x) + level on the apartment.
struct AffineRoot {
    Vec gradient;
    Rat level;
    bool operator==(const AffineRoot&) const = default;
    auto operator<=>(const AffineRoot& o) const {
        if (auto c = gradient <=> o.gradient; c != 0) return c;
        return level <=> o.level;
    }
};

AffineRoot negate(const AffineRoot& a);
AffineRoot scale(const Rat& c, const AffineRoot& a);

/// Arithmetic progression offset + period * Z of admissible levels for one
/// gradient.
struct LevelProgression {
    Rat offset;  // normalized into [0, period)
    Rat period;  // > 0
    bool contains(const Rat& level) const { return is_integer((level - offset) / period); }
    bool operator==(const LevelProgression&) const = default;
};

struct Alcove {
    std::vector<AffineRoot> bounding_roots;
    Vec interior_point;  // exact barycenter of the simplex (product of simplices)
};

/*
  An affine root system on the apartment: a finite set of gradient directions,
  each with an arithmetic progression of levels. Covers both the untwisted
  case (levels Z for every finite root) and systems of restricted roots
  produced by Galois descent, which may be non-reduced and may span only a
  subspace of the ambient apartment.
*/
class AffineRootSystem {
  public:
    /// The untwisted system over a finite root system: every level set is Z
    /// and every root is non-divisible.
    static std::shared_ptr<const AffineRootSystem> untwisted(FiniteRootSystem finite);

    /// Assembled from parts (used by the descent construction).
    static std::shared_ptr<const AffineRootSystem> from_parts(
        std::shared_ptr<const FiniteRootSystem> ambient, std::map<Vec, LevelProgression> level_sets,
        std::vector<AffineRoot> simple_affine);

    const FiniteRootSystem& ambient() const { return *ambient_; }
    std::shared_ptr<const FiniteRootSystem> ambient_ptr() const { return ambient_; }
    const Mat& inner_product() const { return ambient_->inner_product(); }
    /// Dimension of the ambient apartment (length of all vectors).
    std::size_t dimension() const { return static_cast<std::size_t>(ambient_->rank()); }
    /// Dimension of the span of the gradients.
    std::size_t span_rank() const { return span_rank_; }
    bool untwisted_levels() const { return untwisted_; }
    /// True when every root is non-divisible.
    bool reduced() const { return reduced_; }

    const std::map<Vec, LevelProgression>& level_sets() const { return level_sets_; }
    const std::vector<AffineRoot>& walls() const { return simple_affine_; }
    std::size_t num_walls() const { return simple_affine_.size(); }
    const Alcove& base_alcove() const { return base_; }
    int wall_component(std::size_t wall) const { return wall_component_[wall]; }
    int num_wall_components() const { return num_wall_components_; }

    Rat evaluate(const AffineRoot& a, const Vec& x) const;
    bool is_root(const AffineRoot& a) const;
    /// Sign at the base alcove's interior point; an affine root never
    /// vanishes there, so this is well defined.
    bool is_positive(const AffineRoot& a) const;
    bool is_divisible(const AffineRoot& a) const;
    /// The unique non-divisible positive root vanishing on the same wall.
    AffineRoot nondivisible_on_wall(const AffineRoot& a) const;
    /// All positive roots vanishing where this wall does (the wall root and,
    /// in non-reduced systems, possibly its double).
    std::vector<AffineRoot> wall_vanishing_roots(std::size_t wall) const;

    Rat pair(const Vec& gradient, const Vec& point) const { return bilinear(ambient_->inner_product(), gradient, point); }
    Vec coroot_of_gradient(const Vec& g) const;

  private:
    AffineRootSystem() = default;
    void finalize();  // components, barycenter, flags

    std::shared_ptr<const FiniteRootSystem> ambient_;
    std::map<Vec, LevelProgression> level_sets_;
    std::vector<AffineRoot> simple_affine_;
    Alcove base_;
    std::vector<int> wall_component_;
    int num_wall_components_ = 0;
    std::size_t span_rank_ = 0;
    bool reduced_ = true;
    bool untwisted_ = true;
};

}  // namespace iwahori

#endif
