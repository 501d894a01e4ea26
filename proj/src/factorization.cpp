#include "leamer/factorization.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace leamer {

namespace {

std::string element_str(Element e) {
    return "(" + std::to_string(e.x) + ", " + std::to_string(e.n) + ")";
}

void require_element(const LeamerMonoid& s, Element e) {
    if (!s.contains(e.x, e.n))
        fail(ErrorCode::NotAnElement, element_str(e) + " is not an element");
}

} // namespace

std::vector<Factorization> factorizations(const LeamerMonoid& s, Element e,
                                          std::optional<std::uint64_t> cap) {
    require_element(s, e);
    std::vector<Factorization> result;
    if (e == Element{0, 0}) {
        result.push_back(Factorization{});
        return result;
    }

    // Atoms that can appear at all: those whose removal leaves an element.
    std::vector<Element> atoms = s.atoms_in_window(e.x, e.n);
    std::erase_if(atoms, [&](Element a) {
        Element r = e - a;
        return !(r == Element{0, 0}) && !s.contains(r.x, r.n);
    });
    // Descending order gives canonical non-increasing part sequences.
    std::reverse(atoms.begin(), atoms.end());

    std::vector<std::size_t> chosen;
    auto emit = [&]() {
        if (cap && result.size() >= *cap)
            fail(ErrorCode::OverCap,
                 "more than " + std::to_string(*cap) + " factorizations of " +
                     element_str(e));
        Factorization f;
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
            Element a = atoms[*it];
            if (!f.parts.empty() && f.parts.back().first == a)
                ++f.parts.back().second;
            else
                f.parts.emplace_back(a, 1);
        }
        result.push_back(std::move(f));
    };

    // Depth-first over non-increasing atom choices.
    auto rec = [&](auto&& self, std::size_t from, Element rest) -> void {
        for (std::size_t j = from; j < atoms.size(); ++j) {
            const Element a = atoms[j];
            if (a.x > rest.x || a.n > rest.n) continue;
            const Element r = rest - a;
            if (r == Element{0, 0}) {
                chosen.push_back(j);
                emit();
                chosen.pop_back();
                continue;
            }
            if (!s.contains(r.x, r.n)) continue;
            chosen.push_back(j);
            self(self, j, r);
            chosen.pop_back();
        }
    };
    rec(rec, 0, e);
    return result;
}

int64_t distance(const Factorization& f, const Factorization& g) {
    if (!(f.total() == g.total()))
        fail(ErrorCode::ElementMismatch,
             "factorizations of " + element_str(f.total()) + " and " +
                 element_str(g.total()) + " are not comparable");
    // Length of the common part, walking both sorted part lists.
    int64_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < f.parts.size() && j < g.parts.size()) {
        if (f.parts[i].first == g.parts[j].first) {
            common += std::min(f.parts[i].second, g.parts[j].second);
            ++i;
            ++j;
        } else if (f.parts[i].first < g.parts[j].first) {
            ++i;
        } else {
            ++j;
        }
    }
    return std::max(f.length(), g.length()) - common;
}

int64_t catenary_of(const LeamerMonoid& s, Element e,
                    std::optional<std::uint64_t> cap) {
    auto fs = factorizations(s, e, cap);
    const std::size_t v = fs.size();
    if (v <= 1) return 0;

    // Largest edge on a minimax spanning tree, grown vertex by vertex.
    std::vector<int64_t> best(v);
    std::vector<bool> in_tree(v, false);
    in_tree[0] = true;
    for (std::size_t j = 1; j < v; ++j) best[j] = distance(fs[0], fs[j]);

    int64_t bottleneck = 0;
    for (std::size_t added = 1; added < v; ++added) {
        std::size_t pick = 0;
        int64_t pick_dist = std::numeric_limits<int64_t>::max();
        for (std::size_t j = 1; j < v; ++j) {
            if (!in_tree[j] && best[j] < pick_dist) {
                pick = j;
                pick_dist = best[j];
            }
        }
        in_tree[pick] = true;
        bottleneck = std::max(bottleneck, pick_dist);
        for (std::size_t j = 1; j < v; ++j)
            if (!in_tree[j])
                best[j] = std::min(best[j], distance(fs[pick], fs[j]));
    }
    return bottleneck;
}

void LengthOracle::ensure(int64_t x, int64_t n) {
    if (x <= cached_x_ && n <= cached_n_) return;
    cached_x_ = std::max(x, cached_x_);
    cached_n_ = std::max(n, cached_n_);
    words_ = static_cast<std::size_t>((cached_n_ + 2 + 63) / 64);
    bits_.assign((static_cast<std::size_t>(cached_x_) + 1) *
                     (static_cast<std::size_t>(cached_n_) + 1) * words_,
                 0);
    scan_lengths(*s_, cached_x_, cached_n_,
                 [&](int64_t cx, int64_t cn, const LengthSetView& view) {
                     std::uint64_t* dst =
                         &bits_[(static_cast<std::size_t>(cx) *
                                     (static_cast<std::size_t>(cached_n_) + 1) +
                                 static_cast<std::size_t>(cn)) *
                                words_];
                     std::copy(view.words(), view.words() + words_, dst);
                 });
}

std::vector<int64_t> LengthOracle::lengths(Element e) {
    require_element(*s_, e);
    if (e == Element{0, 0})
        fail(ErrorCode::NotAnElement, "the identity has no atom factorization");
    ensure(e.x, e.n);
    auto out = LengthSetView(cell(e.x, e.n), words_).to_vector();
    if (out.empty())
        fail(ErrorCode::InvalidArgument,
             "internal: element " + element_str(e) + " produced no lengths");
    return out;
}

LengthSummary LengthOracle::summary(Element e) {
    LengthSummary out;
    out.element = e;
    out.lengths = lengths(e);
    out.min_length = out.lengths.front();
    out.max_length = out.lengths.back();
    out.elasticity = Rational(out.max_length, out.min_length);
    for (std::size_t i = 1; i < out.lengths.size(); ++i)
        out.delta.push_back(out.lengths[i] - out.lengths[i - 1]);
    std::sort(out.delta.begin(), out.delta.end());
    out.delta.erase(std::unique(out.delta.begin(), out.delta.end()),
                    out.delta.end());
    return out;
}

Rational LengthOracle::elasticity(Element e) {
    auto ls = lengths(e);
    return Rational(ls.back(), ls.front());
}

} // namespace leamer
