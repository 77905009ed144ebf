// Copyright 2026 The tcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thompson/golan.hpp"

#include <numeric>
#include <sstream>

namespace thompson {

GermVector germ_vector(const PLMap &f) {
    if (!f.fixes_zero()) {
        throw PreconditionError("germs: element does not fix 0, so it is not in F");
    }
    const PLFragment &lift = f.lift();
    return {lift.log2_slope(0), lift.log2_slope(lift.piece_count() - 1)};
}

namespace {

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

int64_t mod(int64_t a, int64_t m) { return a - floor_div(a, m) * m; }

}  // namespace

Lattice2::Lattice2(const std::vector<GermVector> &gens) {
    // Euclid on the first coordinate; every row operation keeps the span.
    std::vector<std::array<int64_t, 2>> rows;
    for (const GermVector &g : gens) {
        rows.push_back({g.at_zero, g.at_one});
    }
    std::array<int64_t, 2> pivot{0, 0};
    for (auto row : rows) {
        while (row[0] != 0) {
            if (pivot[0] == 0) {
                std::swap(pivot, row);
                break;
            }
            int64_t q = row[0] / pivot[0];
            row[0] -= q * pivot[0];
            row[1] -= q * pivot[1];
            if (row[0] != 0) {
                std::swap(pivot, row);
            }
        }
        d_ = std::gcd(d_, row[1]);
    }
    if (pivot[0] < 0) {
        pivot[0] = -pivot[0];
        pivot[1] = -pivot[1];
    }
    a_ = pivot[0];
    b_ = d_ > 0 ? mod(pivot[1], d_) : pivot[1];
}

bool Lattice2::contains(int64_t x, int64_t y) const {
    int64_t rest = y;
    if (a_ == 0) {
        if (x != 0) {
            return false;
        }
    } else {
        if (x % a_ != 0) {
            return false;
        }
        rest -= (x / a_) * b_;
    }
    return d_ == 0 ? rest == 0 : rest % d_ == 0;
}

std::string Lattice2::str() const {
    std::ostringstream out;
    out << "[(" << a_ << ", " << b_ << "), (0, " << d_ << ")]";
    return out.str();
}

LatticeCheck germ_lattice_check(const std::vector<PLMap> &gens) {
    std::vector<GermVector> germs;
    for (const PLMap &g : gens) {
        germs.push_back(germ_vector(g));
    }
    Lattice2 lattice(germs);
    return {lattice.contains(1, 0), lattice.contains(0, 1), lattice.str()};
}

std::string word_str(const Word &w, const std::vector<std::string> &names) {
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (size_t i = 0; i < w.size(); i++) {
        out += (i ? " " : "") + names.at(w[i].first) + (w[i].second < 0 ? "^-1" : "");
    }
    return out;
}

PLMap evaluate(const Word &w, const std::vector<PLMap> &gens) {
    PLMap out = PLMap::identity();
    for (const auto &[g, sign] : w) {
        out = compose(out, sign > 0 ? gens.at(g) : inverse(gens.at(g)));
    }
    return out;
}

bool is_xi_point(const PLMap &xi, const Dyadic &x) {
    if (!(Dyadic(0) < x && x < Dyadic(1)) || xi.eval(x) != x) {
        return false;
    }
    return one_sided_slope(xi, x, Side::Left) == 0 && one_sided_slope(xi, x, Side::Right) == 1;
}

namespace {

std::optional<Dyadic> xi_point(const PLMap &f) {
    for (const Dyadic &x : f.breakpoints()) {
        if (is_xi_point(f, x)) {
            return x;
        }
    }
    return std::nullopt;
}

}  // namespace

Witnesses find_witnesses(const std::vector<PLMap> &gens, int depth) {
    Witnesses found;
    if (gens.empty()) {
        return found;
    }
    LatticeCheck lattice = germ_lattice_check(gens);
    bool want_mu = lattice.has_10;
    bool want_nu = lattice.has_01;
    std::vector<PLMap> letters;
    for (const PLMap &g : gens) {
        letters.push_back(g);
        letters.push_back(inverse(g));
    }
    struct Node {
        Word word;
        PLMap element;
    };
    std::vector<Node> level{{Word{}, PLMap::identity()}};
    for (int len = 1; len <= depth; len++) {
        std::vector<Node> next;
        for (const Node &node : level) {
            for (size_t l = 0; l < letters.size(); l++) {
                std::pair<size_t, int> letter{l / 2, l % 2 == 0 ? 1 : -1};
                if (!node.word.empty() && node.word.back().first == letter.first &&
                    node.word.back().second == -letter.second) {
                    continue;
                }
                Node child{node.word, compose(node.element, letters[l])};
                child.word.push_back(letter);
                GermVector germ = germ_vector(child.element);
                if (want_mu && !found.mu && germ == GermVector{1, 0}) {
                    found.mu = child.word;
                }
                if (want_nu && !found.nu && germ == GermVector{0, 1}) {
                    found.nu = child.word;
                }
                if (!found.xi) {
                    if (auto x = xi_point(child.element)) {
                        found.xi = child.word;
                        found.x = x;
                    }
                }
                if ((found.mu || !want_mu) && (found.nu || !want_nu) && found.xi) {
                    return found;
                }
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return found;
}

const char *verdict_name(GenVerdict::Kind k) {
    switch (k) {
        case GenVerdict::Kind::Yes:
            return "yes";
        case GenVerdict::Kind::No:
            return "no";
        case GenVerdict::Kind::Unknown:
            return "unknown";
    }
    return "";
}

GenVerdict generates_F(const std::vector<PLMap> &gens, int depth) {
    GenVerdict v;
    v.lattice = germ_lattice_check(gens);
    if (!gens.empty()) {
        v.core = build_core(gens).graph;
    }
    if (!v.core || !is_generation_graph(*v.core)) {
        v.verdict = GenVerdict::Kind::No;
        v.failed_condition = "core";
        return v;
    }
    if (!v.lattice.has_10 || !v.lattice.has_01) {
        v.verdict = GenVerdict::Kind::No;
        v.failed_condition = "lattice";
        return v;
    }
    v.witnesses = find_witnesses(gens, depth);
    if (v.witnesses.xi) {
        v.verdict = GenVerdict::Kind::Yes;
    } else {
        v.verdict = GenVerdict::Kind::Unknown;
        v.failed_condition = "xi-search";
    }
    return v;
}

}  // namespace thompson
