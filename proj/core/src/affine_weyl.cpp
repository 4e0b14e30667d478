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

#include "iwahori/affine_weyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace iwahori {

AffineMap affine_identity(std::size_t n) { return {Mat::identity(n), zero_vec(n)}; }

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    return {mat_mul(f.linear, g.linear), vec_add(mat_vec(f.linear, g.shift), f.shift)};
}

AffineMap affine_inverse(const AffineMap& f) {
    auto inv = mat_inverse(f.linear);
    if (!inv) throw std::logic_error("affine map with singular linear part");
    return {*inv, vec_scale(Rat(-1), mat_vec(*inv, f.shift))};
}

Vec apply(const AffineMap& f, const Vec& x) { return vec_add(mat_vec(f.linear, x), f.shift); }

bool is_identity(const AffineMap& f) {
    return vec_is_zero(f.shift) && f.linear == Mat::identity(f.linear.rows());
}

AffineRoot act_on_root(const AffineMap& w, const AffineRoot& a, const Mat& gram) {
    Vec g = mat_vec(w.linear, a.gradient);
    return {g, a.level - bilinear(gram, g, w.shift)};
}

Mat simple_reflection_matrix(const FiniteRootSystem& fs, int i) {
    // x |-> x - <alpha_i, x> alpha_i^vee
    const Vec& root = fs.simple_root(i);
    const Vec& coroot = fs.simple_coroot(i);
    const int n = fs.rank();
    Mat m = Mat::identity(n);
    Vec grad_row = mat_vec(fs.inner_product(), root);  // <alpha_i, e_j> per column
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) -= coroot[r] * grad_row[c];
    return m;
}

std::optional<std::vector<int>> finite_weyl_word(const Mat& linear, const FiniteRootSystem& fs) {
    const int n = fs.rank();
    if (linear.rows() != static_cast<std::size_t>(n) || linear.cols() != static_cast<std::size_t>(n)) return std::nullopt;
    // Regular dominant point: the sum of the fundamental coweights.
    Vec p0 = zero_vec(n);
    for (int j = 0; j < n; ++j) p0 = vec_add(p0, fs.fundamental_coweights().col(j));
    Vec q = mat_vec(linear, p0);
    std::vector<int> word;
    for (int guard = 0; guard < 4096; ++guard) {
        int descent = -1;
        for (int i = 0; i < n; ++i) {
            if (fs.pair(fs.simple_root(i), q) < Rat(0)) {
                descent = i;
                break;
            }
        }
        if (descent < 0) break;
        q = mat_vec(simple_reflection_matrix(fs, descent), q);
        word.push_back(descent);
    }
    if (q != p0) return std::nullopt;
    // q = (s_{ik} ... s_{i1}) linear p0 = p0, so linear = s_{i1} ... s_{ik};
    // verify, since a diagram automorphism also fixes p0.
    Mat check = Mat::identity(n);
    for (int i : word) check = mat_mul(check, simple_reflection_matrix(fs, i));
    if (check != linear) return std::nullopt;
    return word;
}

WeylElement WeylElement::identity(std::shared_ptr<const AffineRootSystem> sys) {
    std::size_t n = sys->dimension();
    return WeylElement(std::move(sys), affine_identity(n));
}

WeylElement WeylElement::reflection(std::shared_ptr<const AffineRootSystem> sys, const AffineRoot& a) {
    if (!sys->is_root(a))
        throw DomainError(DomainError::Code::not_a_root, "reflection gradient is not a root of the system");
    const std::size_t n = sys->dimension();
    Vec coroot = sys->coroot_of_gradient(a.gradient);
    Vec grad_row = mat_vec(sys->inner_product(), a.gradient);
    Mat linear = Mat::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) linear(r, c) -= coroot[r] * grad_row[c];
    Vec shift = vec_scale(-a.level, coroot);
    return WeylElement(std::move(sys), {std::move(linear), std::move(shift)});
}

WeylElement WeylElement::translation(std::shared_ptr<const AffineRootSystem> sys, const Vec& lambda) {
    if (lambda.size() != sys->dimension())
        throw DomainError(DomainError::Code::dimension_mismatch, "translation vector of wrong dimension");
    for (const auto& [grad, prog] : sys->level_sets()) {
        Rat step = sys->pair(grad, lambda) / prog.period;
        if (!is_integer(step))
            throw DomainError(DomainError::Code::not_in_group,
                              "translation does not preserve the affine root system");
    }
    const std::size_t n = sys->dimension();
    return WeylElement(std::move(sys), {Mat::identity(n), lambda});
}

WeylElement WeylElement::from_map(std::shared_ptr<const AffineRootSystem> sys, AffineMap map) {
    const Mat& gram = sys->inner_product();
    if (mat_mul(mat_transpose(map.linear), mat_mul(gram, map.linear)) != gram)
        throw DomainError(DomainError::Code::not_in_group, "linear part is not an isometry");
    for (const auto& [grad, prog] : sys->level_sets()) {
        AffineRoot probe{grad, prog.offset};
        AffineRoot image = act_on_root(map, probe, gram);
        AffineRoot image2 = act_on_root(map, AffineRoot{grad, prog.offset + prog.period}, gram);
        if (!sys->is_root(image) || !sys->is_root(image2))
            throw DomainError(DomainError::Code::not_in_group, "map does not preserve the affine root system");
    }
    if (sys->untwisted_levels() && !finite_weyl_word(map.linear, sys->ambient()))
        throw DomainError(DomainError::Code::not_in_group, "linear part is not in the finite Weyl group");
    return WeylElement(std::move(sys), std::move(map));
}

WeylElement WeylElement::multiply(const WeylElement& other) const {
    require_same_owner(other);
    return WeylElement(owner_, compose(map_, other.map_));
}

WeylElement WeylElement::inverse() const { return WeylElement(owner_, affine_inverse(map_)); }

AffineRoot WeylElement::act_root(const AffineRoot& a) const {
    if (!owner_->is_root(a))
        throw DomainError(DomainError::Code::owner_mismatch, "root does not belong to the element's system");
    AffineRoot image = act_on_root(map_, a, owner_->inner_product());
    if (!owner_->is_root(image)) throw std::logic_error("root image left the system");
    return image;
}

bool WeylElement::in_affine_group() const {
    for (const Rat& c : map_.shift)
        if (!is_integer(c)) return false;
    return true;
}

void WeylElement::require_same_owner(const WeylElement& other) const {
    if (owner_ != other.owner_)
        throw DomainError(DomainError::Code::owner_mismatch, "elements belong to different systems");
}

CoxeterView standard_view(std::shared_ptr<const AffineRootSystem> sys) {
    CoxeterView view;
    view.walls.reserve(sys->num_walls());
    for (std::size_t i = 0; i < sys->num_walls(); ++i) {
        const AffineRoot& root = sys->walls()[i];
        Wall wall;
        wall.root = root;
        wall.action = WeylElement::reflection(sys, root).map();
        wall.name = "s" + std::to_string(i);
        wall.nr_length = 1;
        wall.nr_orbit = {static_cast<int>(i)};
        view.walls.push_back(std::move(wall));
    }
    view.sys = std::move(sys);
    return view;
}

namespace cox {

namespace {

// Visits the inversion levels of one gradient: integers of the progression
// strictly between -(g, x_C) and -(g, w^{-1} x_C).
template <typename F>
void for_each_inversion(const AffineMap& w, const AffineRootSystem& sys, F&& visit) {
    const Vec& witness = sys.base_alcove().interior_point;
    Vec pulled = apply(affine_inverse(w), witness);
    for (const auto& [grad, prog] : sys.level_sets()) {
        Rat lo = -sys.pair(grad, witness);
        Rat hi = -sys.pair(grad, pulled);
        if (hi <= lo) continue;
        // first progression member strictly above lo
        Int j = rat_floor((lo - prog.offset) / prog.period) + 1;
        for (Rat level = prog.offset + Rat(j) * prog.period; level < hi; level += prog.period) {
            if (level == lo) continue;
            visit(AffineRoot{grad, level});
        }
    }
}

}  // namespace

std::vector<AffineRoot> inversion_set(const AffineMap& w, const AffineRootSystem& sys) {
    std::vector<AffineRoot> out;
    for_each_inversion(w, sys, [&](AffineRoot r) { out.push_back(std::move(r)); });
    std::sort(out.begin(), out.end());
    return out;
}

int length(const AffineMap& w, const AffineRootSystem& sys) {
    int count = 0;
    for_each_inversion(w, sys, [&](const AffineRoot& r) {
        if (!sys.is_divisible(r)) ++count;
    });
    return count;
}

int inversion_count_all(const AffineMap& w, const AffineRootSystem& sys) {
    int count = 0;
    for_each_inversion(w, sys, [&](const AffineRoot&) { ++count; });
    return count;
}

bool is_right_descent(const AffineMap& w, const CoxeterView& view, std::size_t wall) {
    AffineRoot image = act_on_root(w, view.walls[wall].root, view.sys->inner_product());
    return !view.sys->is_positive(image);
}

bool is_left_descent(const AffineMap& w, const CoxeterView& view, std::size_t wall) {
    return is_right_descent(affine_inverse(w), view, wall);
}

std::vector<int> reduced_word(const AffineMap& w, const CoxeterView& view) {
    std::vector<int> reversed;
    AffineMap cur = w;
    const int guard = length(w, *view.sys) + 1;
    for (int step = 0; step < guard; ++step) {
        int descent = -1;
        for (std::size_t i = 0; i < view.walls.size(); ++i) {
            if (is_right_descent(cur, view, i)) {
                descent = static_cast<int>(i);
                break;
            }
        }
        if (descent < 0) break;
        cur = compose(cur, view.walls[descent].action);
        reversed.push_back(descent);
    }
    if (!is_identity(cur))
        throw DomainError(DomainError::Code::not_in_group,
                          "element is not a word in the generators (nontrivial length-zero part)");
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

AffineMap from_word(const CoxeterView& view, const std::vector<int>& word) {
    AffineMap m = affine_identity(view.sys->dimension());
    for (int s : word) m = compose(m, view.walls.at(s).action);
    return m;
}

bool bruhat_leq(const AffineMap& w, const AffineMap& v, const CoxeterView& view) {
    if (w == v) return true;
    int lv = length(v, *view.sys);
    if (length(w, *view.sys) >= lv) return false;
    if (lv == 0) return false;
    int descent = -1;
    for (std::size_t i = 0; i < view.walls.size(); ++i) {
        if (is_right_descent(v, view, i)) {
            descent = static_cast<int>(i);
            break;
        }
    }
    if (descent < 0) throw std::logic_error("nontrivial element without descent");
    AffineMap vs = compose(v, view.walls[descent].action);
    if (is_right_descent(w, view, descent)) return bruhat_leq(compose(w, view.walls[descent].action), vs, view);
    return bruhat_leq(w, vs, view);
}

std::vector<BallEntry> ball(const CoxeterView& view, int radius) {
    std::map<AffineMap, std::size_t> seen;
    std::vector<BallEntry> out;
    out.push_back({affine_identity(view.sys->dimension()), 0, {}});
    seen[out[0].map] = 0;
    std::size_t frontier_begin = 0;
    for (int len = 0; len < radius; ++len) {
        std::size_t frontier_end = out.size();
        for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
            for (std::size_t s = 0; s < view.walls.size(); ++s) {
                BallEntry entry = out[idx];
                if (is_right_descent(entry.map, view, s)) continue;  // goes down
                AffineMap next = compose(entry.map, view.walls[s].action);
                if (seen.contains(next)) continue;
                entry.word.push_back(static_cast<int>(s));
                seen[next] = out.size();
                out.push_back({std::move(next), len + 1, std::move(entry.word)});
            }
        }
        frontier_begin = frontier_end;
    }
    std::sort(out.begin(), out.end(), [](const BallEntry& a, const BallEntry& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    return out;
}

IMat coxeter_matrix(const CoxeterView& view) {
    const std::size_t n = view.walls.size();
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            AffineMap product = compose(view.walls[i].action, view.walls[j].action);
            AffineMap power = product;
            Int order = 0;  // 0 encodes infinity
            for (int k = 1; k <= 30; ++k) {
                if (is_identity(power)) {
                    order = k;
                    break;
                }
                power = compose(power, product);
            }
            m(i, j) = m(j, i) = order;
        }
    return m;
}

}  // namespace cox

std::vector<AffineRoot> inversion_set(const WeylElement& w) { return cox::inversion_set(w.map(), *w.owner()); }

int length(const WeylElement& w) { return cox::length(w.map(), *w.owner()); }

std::vector<int> reduced_word(const WeylElement& w) {
    if (!w.in_affine_group())
        throw DomainError(DomainError::Code::not_in_group,
                          "element is not in the affine Weyl group (translation part is not in the coroot lattice)");
    return cox::reduced_word(w.map(), standard_view(w.owner()));
}

bool bruhat_leq(const WeylElement& w, const WeylElement& v) {
    if (w.owner() != v.owner())
        throw DomainError(DomainError::Code::owner_mismatch, "elements belong to different systems");
    return cox::bruhat_leq(w.map(), v.map(), standard_view(w.owner()));
}

WeylElement from_word(std::shared_ptr<const AffineRootSystem> sys, const std::vector<int>& word) {
    auto view = standard_view(sys);
    return WeylElement::from_map(std::move(sys), cox::from_word(view, word));
}

}  // namespace iwahori
