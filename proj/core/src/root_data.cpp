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

#include "iwahori/root_data.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace iwahori {

namespace {

bool valid_component(char letter, int rank) {
    switch (letter) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

// Bonds of one irreducible diagram as Cartan pairings, 0-based nodes.
// cartan(i, j) = <alpha_i, alpha_j^vee>.
void fill_component(IMat& cartan, int base, char letter, int rank) {
    auto bond = [&](int i, int j, Int cij, Int cji) {
        cartan(base + i, base + j) = cij;
        cartan(base + j, base + i) = cji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
    };
    for (int i = 0; i < rank; ++i) cartan(base + i, base + i) = 2;
    switch (letter) {
        case 'A': chain(0, rank - 1); break;
        case 'B':  // last root short
            chain(0, rank - 2);
            bond(rank - 2, rank - 1, -2, -1);
            break;
        case 'C':  // last root long
            chain(0, rank - 2);
            bond(rank - 2, rank - 1, -1, -2);
            break;
        case 'D':
            chain(0, rank - 3);
            bond(rank - 3, rank - 2, -1, -1);
            bond(rank - 3, rank - 1, -1, -1);
            break;
        case 'E':  // Bourbaki: chain 1-3-4-5-..., node 2 attached to node 4
            bond(0, 2, -1, -1);
            chain(2, rank - 1);
            bond(1, 3, -1, -1);
            break;
        case 'F':  // first two roots long
            bond(0, 1, -1, -1);
            bond(1, 2, -2, -1);
            bond(2, 3, -1, -1);
            break;
        case 'G':  // first root short
            bond(0, 1, -1, -3);
            break;
        default: throw std::logic_error("unreachable Cartan letter");
    }
}

}  // namespace

CartanType parse_cartan_type(std::string_view text) {
    CartanType type;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char letter = static_cast<char>(std::toupper(text[pos]));
        ++pos;
        std::size_t digits = pos;
        while (digits < text.size() && std::isdigit(text[digits])) ++digits;
        if (digits == pos)
            throw DomainError(DomainError::Code::invalid_type,
                              "Cartan type '" + std::string(text) + "': missing rank after '" + letter + "'");
        int rank = std::stoi(std::string(text.substr(pos, digits - pos)));
        if (!valid_component(letter, rank))
            throw DomainError(DomainError::Code::invalid_type,
                              "invalid Cartan type (" + std::string(1, letter) + ", " + std::to_string(rank) + ")");
        type.push_back({letter, rank});
        pos = digits;
        if (pos < text.size()) {
            if (text[pos] != 'x' && text[pos] != 'X')
                throw DomainError(DomainError::Code::invalid_type,
                                  "Cartan type '" + std::string(text) + "': expected 'x' at position " + std::to_string(pos));
            ++pos;
            if (pos == text.size())
                throw DomainError(DomainError::Code::invalid_type, "Cartan type ends with 'x'");
        }
    }
    if (type.empty()) throw DomainError(DomainError::Code::invalid_type, "empty Cartan type");
    return type;
}

std::string to_string(const CartanType& type) {
    std::string s;
    for (const auto& c : type) {
        if (!s.empty()) s += "x";
        s += c.letter + std::to_string(c.rank);
    }
    return s;
}

FiniteRootSystem FiniteRootSystem::build(const CartanType& type) {
    FiniteRootSystem fs;
    fs.type_ = type;
    int rank = 0;
    for (const auto& c : type) rank += c.rank;
    fs.rank_ = rank;
    fs.num_components_ = static_cast<int>(type.size());

    fs.cartan_ = IMat(rank, rank);
    fs.component_of_.resize(rank);
    int base = 0;
    for (std::size_t c = 0; c < type.size(); ++c) {
        fill_component(fs.cartan_, base, type[c].letter, type[c].rank);
        for (int i = 0; i < type[c].rank; ++i) fs.component_of_[base + i] = static_cast<int>(c);
        base += type[c].rank;
    }

    // Coroot square lengths: propagate along bonds, normalize the minimum of
    // each component to (alpha^vee, alpha^vee) = 2.
    std::vector<Rat> dvee(rank, Rat(0));
    base = 0;
    for (const auto& comp : type) {
        std::vector<int> todo = {base};
        dvee[base] = Rat(1);
        while (!todo.empty()) {
            int i = todo.back();
            todo.pop_back();
            for (int j = base; j < base + comp.rank; ++j) {
                if (j == i || fs.cartan_(i, j) == 0 || dvee[j] != Rat(0)) continue;
                dvee[j] = dvee[i] * Rat(fs.cartan_(i, j), fs.cartan_(j, i));
                todo.push_back(j);
            }
        }
        Rat lo = dvee[base];
        for (int i = base; i < base + comp.rank; ++i) lo = std::min(lo, dvee[i]);
        for (int i = base; i < base + comp.rank; ++i) dvee[i] /= lo;
        base += comp.rank;
    }

    fs.gram_ = Mat(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) fs.gram_(i, j) = Rat(fs.cartan_(j, i)) * dvee[j];
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (fs.gram_(i, j) != fs.gram_(j, i)) throw std::logic_error("inner product is not symmetric");

    // Reflection closure over simple-root coefficient vectors.
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier;
    for (int i = 0; i < rank; ++i) {
        std::vector<Int> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& c : frontier) {
            for (int j = 0; j < rank; ++j) {
                Int pairing = 0;
                for (int k = 0; k < rank; ++k) pairing += c[k] * fs.cartan_(k, j);
                std::vector<Int> image = c;
                image[j] -= pairing;
                if (seen.insert(image).second) next.push_back(image);
            }
        }
        frontier = std::move(next);
    }

    for (const auto& coeffs : seen) {
        FiniteRoot r;
        r.coeffs = coeffs;
        r.vec = zero_vec(rank);
        r.height = 0;
        int comp = -1;
        bool any_pos = false, any_neg = false;
        for (int i = 0; i < rank; ++i) {
            if (coeffs[i] != 0) {
                comp = fs.component_of_[i];
                (coeffs[i] > 0 ? any_pos : any_neg) = true;
            }
            r.vec[i] = Rat(coeffs[i]) / dvee[i];
            r.height += coeffs[i];
        }
        if (any_pos && any_neg) throw std::logic_error("root with mixed-sign coefficients");
        r.component = comp;
        r.positive = any_pos;
        Rat norm = bilinear(fs.gram_, r.vec, r.vec);
        r.coroot = vec_scale(Rat(2) / norm, r.vec);
        fs.roots_.push_back(std::move(r));
    }
    fs.simple_index_.resize(rank);
    for (std::size_t idx = 0; idx < fs.roots_.size(); ++idx) {
        fs.root_lookup_[fs.roots_[idx].vec] = static_cast<int>(idx);
        const auto& c = fs.roots_[idx].coeffs;
        if (fs.roots_[idx].height == 1) {
            auto it = std::find(c.begin(), c.end(), Int(1));
            if (std::count(c.begin(), c.end(), Int(0)) == rank - 1)
                fs.simple_index_[it - c.begin()] = static_cast<int>(idx);
        }
    }

    // Highest root of each component: the dominant positive root of maximal
    // height.
    fs.highest_.assign(fs.num_components_, -1);
    for (std::size_t idx = 0; idx < fs.roots_.size(); ++idx) {
        const FiniteRoot& r = fs.roots_[idx];
        if (!r.positive) continue;
        int c = r.component;
        if (fs.highest_[c] < 0 || r.height > fs.roots_[fs.highest_[c]].height) fs.highest_[c] = static_cast<int>(idx);
    }
    for (int c = 0; c < fs.num_components_; ++c) {
        const FiniteRoot& theta = fs.roots_[fs.highest_[c]];
        for (int i = 0; i < rank; ++i) {
            Rat pairing = fs.pair(theta.vec, fs.simple_coroot(i));
            if (pairing < Rat(0)) throw std::logic_error("highest root is not dominant");
        }
    }

    auto inv = mat_inverse(fs.cartan_.to_rational());
    if (!inv) throw std::logic_error("Cartan matrix is singular");
    fs.fundamental_coweights_ = *inv;
    return fs;
}

int FiniteRootSystem::root_index(const Vec& v) const {
    auto it = root_lookup_.find(v);
    return it == root_lookup_.end() ? -1 : it->second;
}

Vec FiniteRootSystem::coroot_of(const Vec& v) const {
    Rat norm = bilinear(gram_, v, v);
    if (norm == Rat(0)) throw DomainError(DomainError::Code::not_a_root, "coroot of the zero vector");
    return vec_scale(Rat(2) / norm, v);
}

AffineRoot negate(const AffineRoot& a) { return {vec_scale(Rat(-1), a.gradient), -a.level}; }

AffineRoot scale(const Rat& c, const AffineRoot& a) { return {vec_scale(c, a.gradient), c * a.level}; }

std::shared_ptr<const AffineRootSystem> AffineRootSystem::untwisted(FiniteRootSystem finite) {
    auto ambient = std::make_shared<const FiniteRootSystem>(std::move(finite));
    auto sys = std::shared_ptr<AffineRootSystem>(new AffineRootSystem());
    sys->ambient_ = ambient;
    for (const auto& r : ambient->roots()) sys->level_sets_[r.vec] = LevelProgression{Rat(0), Rat(1)};

    // Wall order: the affine wall of component 0, the finite simple roots,
    // then the affine walls of the remaining components.
    const auto& highest = ambient->highest_roots();
    auto affine_wall = [&](int comp) {
        return AffineRoot{vec_scale(Rat(-1), ambient->roots()[highest[comp]].vec), Rat(1)};
    };
    sys->simple_affine_.push_back(affine_wall(0));
    for (int i = 0; i < ambient->rank(); ++i) sys->simple_affine_.push_back(AffineRoot{ambient->simple_root(i), Rat(0)});
    for (int c = 1; c < ambient->num_components(); ++c) sys->simple_affine_.push_back(affine_wall(c));

    sys->untwisted_ = true;
    sys->finalize();
    return sys;
}

std::shared_ptr<const AffineRootSystem> AffineRootSystem::from_parts(std::shared_ptr<const FiniteRootSystem> ambient,
                                                                     std::map<Vec, LevelProgression> level_sets,
                                                                     std::vector<AffineRoot> simple_affine) {
    auto sys = std::shared_ptr<AffineRootSystem>(new AffineRootSystem());
    sys->ambient_ = std::move(ambient);
    sys->level_sets_ = std::move(level_sets);
    sys->simple_affine_ = std::move(simple_affine);
    sys->untwisted_ = false;
    sys->finalize();
    return sys;
}

void AffineRootSystem::finalize() {
    const Mat& g = ambient_->inner_product();
    const std::size_t n_walls = simple_affine_.size();

    // Span of the gradients.
    {
        Mat span(dimension(), level_sets_.size());
        std::size_t j = 0;
        for (const auto& [grad, prog] : level_sets_) {
            for (std::size_t i = 0; i < dimension(); ++i) span(i, j) = grad[i];
            ++j;
        }
        span_rank_ = mat_rank(span);
    }

    // Reduced iff no root has a root at half its gradient and level.
    reduced_ = true;
    for (const auto& [grad, prog] : level_sets_) {
        Vec half = vec_scale(Rat(1, 2), grad);
        auto it = level_sets_.find(half);
        if (it == level_sets_.end()) continue;
        for (int j = 0; j < 8 && reduced_; ++j) {
            Rat level = prog.offset + Rat(j) * prog.period;
            if (it->second.contains(level / 2)) reduced_ = false;
        }
    }

    // Wall adjacency components (two walls interact iff their gradients are
    // not orthogonal).
    wall_component_.assign(n_walls, -1);
    num_wall_components_ = 0;
    for (std::size_t i = 0; i < n_walls; ++i) {
        if (wall_component_[i] >= 0) continue;
        int comp = num_wall_components_++;
        std::vector<std::size_t> todo = {i};
        wall_component_[i] = comp;
        while (!todo.empty()) {
            std::size_t a = todo.back();
            todo.pop_back();
            for (std::size_t b = 0; b < n_walls; ++b) {
                if (wall_component_[b] >= 0) continue;
                if (bilinear(g, simple_affine_[a].gradient, simple_affine_[b].gradient) != Rat(0)) {
                    wall_component_[b] = comp;
                    todo.push_back(b);
                }
            }
        }
    }

    // Barycenter: per wall component, the vertex opposite wall i solves
    // alpha_j = 0 for all other walls j of the component; the interior point
    // is the sum over components of the vertex averages.
    Vec barycenter = zero_vec(dimension());
    for (int comp = 0; comp < num_wall_components_; ++comp) {
        std::vector<std::size_t> walls;
        for (std::size_t i = 0; i < n_walls; ++i)
            if (wall_component_[i] == comp) walls.push_back(i);
        Vec comp_sum = zero_vec(dimension());
        for (std::size_t drop : walls) {
            std::vector<std::size_t> rest;
            for (std::size_t w : walls)
                if (w != drop) rest.push_back(w);
            const std::size_t m = rest.size();
            Mat lhs(m, m);
            Vec rhs(m);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c)
                    lhs(r, c) = bilinear(g, simple_affine_[rest[r]].gradient, simple_affine_[rest[c]].gradient);
                rhs[r] = -simple_affine_[rest[r]].level;
            }
            auto y = solve(lhs, rhs);
            if (!y) throw std::logic_error("degenerate alcove walls");
            Vec vertex = zero_vec(dimension());
            for (std::size_t c = 0; c < m; ++c) vertex = vec_add(vertex, vec_scale((*y)[c], simple_affine_[rest[c]].gradient));
            comp_sum = vec_add(comp_sum, vertex);
        }
        barycenter = vec_add(barycenter, vec_scale(Rat(1, static_cast<Int>(walls.size())), comp_sum));
    }
    base_.bounding_roots = simple_affine_;
    base_.interior_point = barycenter;

    for (const auto& wall : simple_affine_) {
        if (!is_root(wall)) throw std::logic_error("alcove wall is not a root");
        if (evaluate(wall, barycenter) <= Rat(0)) throw std::logic_error("alcove wall not positive at barycenter");
        if (is_divisible(wall)) throw std::logic_error("alcove wall root is divisible");
    }
}

Rat AffineRootSystem::evaluate(const AffineRoot& a, const Vec& x) const {
    if (a.gradient.size() != x.size() || x.size() != dimension())
        throw DomainError(DomainError::Code::dimension_mismatch, "affine root evaluated at a point of wrong dimension");
    return bilinear(ambient_->inner_product(), a.gradient, x) + a.level;
}

bool AffineRootSystem::is_root(const AffineRoot& a) const {
    auto it = level_sets_.find(a.gradient);
    return it != level_sets_.end() && it->second.contains(a.level);
}

bool AffineRootSystem::is_positive(const AffineRoot& a) const {
    Rat value = evaluate(a, base_.interior_point);
    if (value == Rat(0))
        throw DomainError(DomainError::Code::corrupted_alcove, "affine root vanishes at the alcove interior point");
    return value > Rat(0);
}

bool AffineRootSystem::is_divisible(const AffineRoot& a) const {
    if (!is_root(a)) throw DomainError(DomainError::Code::not_a_root, "divisibility asked for a non-root");
    return is_root(scale(Rat(1, 2), a));
}

AffineRoot AffineRootSystem::nondivisible_on_wall(const AffineRoot& a) const {
    AffineRoot root = is_positive(a) ? a : negate(a);
    while (is_divisible(root)) root = scale(Rat(1, 2), root);
    return root;
}

std::vector<AffineRoot> AffineRootSystem::wall_vanishing_roots(std::size_t wall) const {
    const AffineRoot& base = simple_affine_.at(wall);
    std::vector<AffineRoot> out = {base};
    AffineRoot twice = scale(Rat(2), base);
    if (is_root(twice)) out.push_back(twice);
    return out;
}

Vec AffineRootSystem::coroot_of_gradient(const Vec& g) const { return ambient_->coroot_of(g); }

}  // namespace iwahori
