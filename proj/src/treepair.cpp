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

#include "thompson/treepair.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

namespace thompson {

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_) {
        if (c != '0' && c != '1') {
            throw PreconditionError("binary word contains '" + std::string(1, c) + "'");
        }
    }
}

Dyadic BinaryWord::left() const {
    mpz_class v = 0;
    for (char c : bits_) {
        v = 2 * v + (c - '0');
    }
    return Dyadic(v, static_cast<uint32_t>(bits_.size()));
}

Dyadic BinaryWord::right() const { return left() + Dyadic::pow2(-static_cast<int64_t>(bits_.size())); }

BinaryWord BinaryWord::from_interval(const Dyadic &left, uint32_t depth) {
    if (left < Dyadic(0) || left >= Dyadic(1) || !left.is_multiple_of_pow2(-static_cast<int64_t>(depth))) {
        throw PreconditionError("[" + left.str() + ", +2^-" + std::to_string(depth) +
                                "] is not a standard dyadic interval");
    }
    mpz_class v = left.mul_pow2(depth).floor();
    std::string bits(depth, '0');
    for (uint32_t i = 0; i < depth; i++) {
        if (mpz_tstbit(v.get_mpz_t(), i)) {
            bits[depth - 1 - i] = '1';
        }
    }
    return BinaryWord(std::move(bits));
}

bool is_complete_antichain(std::vector<BinaryWord> words) {
    if (words.empty()) {
        return false;
    }
    std::sort(words.begin(), words.end());
    Dyadic total(0);
    for (size_t i = 0; i < words.size(); i++) {
        if (i + 1 < words.size() && words[i].is_prefix_of(words[i + 1])) {
            return false;  // also catches duplicates
        }
        total += Dyadic::pow2(-static_cast<int64_t>(words[i].size()));
    }
    return total == Dyadic(1);
}

Tree::Tree(std::vector<BinaryWord> leaves) : leaves_(std::move(leaves)) {
    if (!is_complete_antichain(leaves_)) {
        std::string list;
        for (const auto &w : leaves_) {
            list += (list.empty() ? "" : ",") + w.str();
        }
        throw PreconditionError("leaves (" + list + ") do not form a complete antichain");
    }
    std::sort(leaves_.begin(), leaves_.end());
}

std::vector<BinaryWord> Tree::vertices() const {
    std::set<BinaryWord> all;
    for (const auto &leaf : leaves_) {
        for (size_t len = 0; len <= leaf.size(); len++) {
            all.insert(BinaryWord(leaf.bits().substr(0, len)));
        }
    }
    return {all.begin(), all.end()};
}

bool Tree::is_exposed_caret(const BinaryWord &w) const {
    return std::binary_search(leaves_.begin(), leaves_.end(), w.child(0)) &&
           std::binary_search(leaves_.begin(), leaves_.end(), w.child(1));
}

TreePair::TreePair(Tree domain, Tree range, size_t offset)
    : domain_(std::move(domain)), range_(std::move(range)), offset_(offset) {
    if (domain_.leaf_count() != range_.leaf_count()) {
        throw PreconditionError("tree pair leaf counts differ: " + std::to_string(domain_.leaf_count()) + " vs " +
                                std::to_string(range_.leaf_count()));
    }
    offset_ %= domain_.leaf_count();
}

const BinaryWord &TreePair::image_of_leaf(size_t i) const {
    return range_.leaves()[(i + offset_) % leaf_count()];
}

namespace {

// Domain index of the first cancellable caret, or npos.
size_t find_cancellable(const TreePair &tp) {
    size_t n = tp.leaf_count();
    const auto &d = tp.domain().leaves();
    const auto &r = tp.range().leaves();
    for (size_t i = 0; i + 1 < n; i++) {
        const auto &u0 = d[i];
        const auto &u1 = d[i + 1];
        if (u0.empty() || u0.bits().back() != '0' || u1 != u0.parent().child(1)) {
            continue;
        }
        size_t j = (i + tp.offset()) % n;
        if (j + 1 >= n) {
            continue;
        }
        const auto &v0 = r[j];
        const auto &v1 = r[j + 1];
        if (!v0.empty() && v0.bits().back() == '0' && v1 == v0.parent().child(1)) {
            return i;
        }
    }
    return std::string::npos;
}

}  // namespace

bool TreePair::is_reduced() const { return find_cancellable(*this) == std::string::npos; }

TreePair reduce(const TreePair &tp) {
    TreePair cur = tp;
    while (true) {
        size_t i = find_cancellable(cur);
        if (i == std::string::npos) {
            return cur;
        }
        size_t n = cur.leaf_count();
        size_t j = (i + cur.offset()) % n;
        std::vector<BinaryWord> d = cur.domain().leaves();
        std::vector<BinaryWord> r = cur.range().leaves();
        d[i] = d[i].parent();
        d.erase(d.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        r[j] = r[j].parent();
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        size_t offset = (j + (n - 1) - i) % (n - 1);
        cur = TreePair(Tree(std::move(d)), Tree(std::move(r)), offset);
    }
}

std::string TreePair::str() const {
    std::string out = "(";
    for (size_t i = 0; i < leaf_count(); i++) {
        out += (i ? "," : "") + domain_.leaves()[i].str();
    }
    out += ") -> (";
    for (size_t i = 0; i < leaf_count(); i++) {
        out += (i ? "," : "") + image_of_leaf(i).str();
    }
    return out + ")";
}

std::ostream &operator<<(std::ostream &out, const TreePair &tp) { return out << tp.str(); }

namespace {

class ElementParser {
   public:
    explicit ElementParser(std::string_view text) : text_(text) {}

    TreePair parse() {
        auto domain = word_list();
        skip_space();
        if (text_.substr(pos_, 2) != "->") {
            throw ParseError("expected '->'", pos_);
        }
        pos_ += 2;
        size_t image_pos = (skip_space(), pos_);
        auto image = word_list();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input", pos_);
        }
        if (domain.size() != image.size()) {
            throw ParseError("word lists have different lengths (" + std::to_string(domain.size()) + " and " +
                                 std::to_string(image.size()) + ")",
                             image_pos);
        }
        return build(std::move(domain), std::move(image), image_pos);
    }

   private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    std::vector<BinaryWord> word_list() {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '(') {
            throw ParseError("expected '('", pos_);
        }
        pos_++;
        std::vector<BinaryWord> words;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ')') {
            pos_++;
            words.emplace_back();
            return words;
        }
        while (true) {
            skip_space();
            size_t start = pos_;
            std::string bits;
            if (pos_ < text_.size() && text_[pos_] == 'e') {
                pos_++;
            } else {
                while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) {
                    bits += text_[pos_++];
                }
                if (bits.empty()) {
                    throw ParseError("expected a binary word or 'e'", start);
                }
            }
            words.emplace_back(std::move(bits));
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                pos_++;
                continue;
            }
            if (pos_ < text_.size() && text_[pos_] == ')') {
                pos_++;
                return words;
            }
            throw ParseError("expected ',' or ')'", pos_);
        }
    }

    TreePair build(std::vector<BinaryWord> domain, std::vector<BinaryWord> image, size_t image_pos) {
        size_t n = domain.size();
        if (!is_complete_antichain(domain)) {
            throw ParseError("domain words do not form a complete antichain", 0);
        }
        if (!is_complete_antichain(image)) {
            throw ParseError("image words do not form a complete antichain", image_pos);
        }
        // Rotate both lists so the domain list starts at its smallest word.
        size_t start = std::min_element(domain.begin(), domain.end()) - domain.begin();
        std::rotate(domain.begin(), domain.begin() + static_cast<std::ptrdiff_t>(start), domain.end());
        std::rotate(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(start), image.end());
        if (!std::is_sorted(domain.begin(), domain.end())) {
            throw ParseError("domain words are not listed in cyclic left-to-right order", 0);
        }
        size_t low = std::min_element(image.begin(), image.end()) - image.begin();
        std::vector<BinaryWord> sorted = image;
        std::rotate(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(low), sorted.end());
        if (!std::is_sorted(sorted.begin(), sorted.end())) {
            throw ParseError("image words are not a cyclic rotation of their left-to-right order", image_pos);
        }
        size_t offset = (n - low) % n;
        return TreePair(Tree(std::move(domain)), Tree(std::move(sorted)), offset);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

TreePair parse_element(std::string_view text) { return ElementParser(text).parse(); }

PLMap to_plmap(const TreePair &tp) {
    std::vector<std::pair<Dyadic, Dyadic>> points;
    for (size_t i = 0; i < tp.leaf_count(); i++) {
        points.emplace_back(tp.domain().leaves()[i].left(), tp.image_of_leaf(i).left());
    }
    return PLMap::from_points(tp.offset() == 0 ? Carrier::Interval : Carrier::Circle, std::move(points));
}

namespace {

struct LeafMatch {
    BinaryWord domain;
    BinaryWord image;
};

// Splits [a, a + 2^e] (standard) until its image under the affine piece
// y(x) = base_y + (x - base_x) * 2^k is standard too.
void refine(const PLFragment &lift, size_t piece, const Dyadic &a, int64_t e, std::vector<LeafMatch> &out) {
    int64_t k = lift.log2_slope(piece);
    Dyadic y = lift.ys()[piece] + (a - lift.xs()[piece]).mul_pow2(k);
    if (y.is_multiple_of_pow2(e + k)) {
        out.push_back({BinaryWord::from_interval(a, static_cast<uint32_t>(-e)),
                       BinaryWord::from_interval(y.frac(), static_cast<uint32_t>(-(e + k)))});
        return;
    }
    refine(lift, piece, a, e - 1, out);
    refine(lift, piece, a + Dyadic::pow2(e - 1), e - 1, out);
}

}  // namespace

TreePair from_plmap(const PLMap &f) {
    const PLFragment &lift = f.lift();
    std::vector<LeafMatch> matches;
    for (size_t i = 0; i < lift.piece_count(); i++) {
        std::vector<Dyadic> cuts = standard_decomposition(lift.xs()[i], lift.xs()[i + 1]);
        for (size_t c = 0; c + 1 < cuts.size(); c++) {
            int64_t e = *log2_ratio(cuts[c + 1] - cuts[c], Dyadic(1));
            refine(lift, i, cuts[c], e, matches);
        }
    }
    std::vector<BinaryWord> domain, images;
    for (auto &m : matches) {
        domain.push_back(m.domain);
        images.push_back(m.image);
    }
    size_t low = std::min_element(images.begin(), images.end()) - images.begin();
    size_t n = images.size();
    std::rotate(images.begin(), images.begin() + static_cast<std::ptrdiff_t>(low), images.end());
    return reduce(TreePair(Tree(std::move(domain)), Tree(std::move(images)), (n - low) % n));
}

}  // namespace thompson
